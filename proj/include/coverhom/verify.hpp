// The verification pipeline: given a bundle (L, S, D, k), certify the
// torsion and nonvanishing properties of the lifted class on the small
// cover, check by check, with exact chain-level witnesses.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coverhom/bundle.hpp"

namespace coverhom {

struct VerifyOptions {
    std::uint64_t seed = 0;
    long long max_cells = 1000000;  // refusal cap on the cover's total cells
    int lift_samples = 100;
    // run the independent mod-p non-boundary route in the restriction check
    bool deep = true;
    // covers at most this large are additionally checked by direct homology
    long long direct_limit = 60000;
    std::string witness_path;  // when nonempty: write the degree-(n+1) witness chain
    // Fault injection for the negative-control suite: corrupt the folding
    // label of this vertex before validation (-1 = off).
    long long sabotage_label_vertex = -1;
};

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string detail;
    std::vector<std::pair<std::string, std::string>> values;
    long long ms = 0;
};

struct VerificationReport {
    std::string instance;
    int n = 0;
    long long k = 0;
    std::uint64_t seed = 0;
    long long max_cells = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool ok() const;
    const CheckResult* find(const std::string& name) const;
    std::string to_text() const;
    // Deterministic JSON; timing fields are isolated so reproducibility
    // comparisons can drop them.
    std::string to_json(bool include_timings = true) const;
};

VerificationReport verify_bundle(const InstanceBundle& b, const VerifyOptions& opts = {});

// Stable check names, in pipeline order.
extern const char* const kCheckNames[11];

}  // namespace coverhom
