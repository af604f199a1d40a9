// Instance bundles: a complex L, a torsion (n-1)-cycle S of order k, and a
// witness chain D with boundary(D) = k*S, plus the builders that produce
// verified examples of such data.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coverhom/delta_complex.hpp"

namespace coverhom {

struct InstanceBundle {
    int n = 0;        // dimension of L
    long long k = 0;  // torsion order
    DeltaComplex L;
    Chain S;                 // (n-1)-cycle on L, fundamental cycle of its support
    std::optional<Chain> D;  // n-chain with boundary = k*S
    std::string provenance;
    std::vector<std::string> notes;
};

// Mapping-torus family (k = 2): prism over the subdivided boundary of the
// n-simplex, top glued to bottom through an orientation-reversing vertex
// transposition. Aborts if the built S fails order([S]) = 2.
InstanceBundle build_twisted_bundle(int n);

// Mapping-cone family (general k): the cone over C_{3k} * S^{n-3}-sphere
// glued onto C_3 * same through the wrap-by-k map. Aborts if the built S
// fails order([S]) = k.
InstanceBundle build_moore_instance(int n, long long k, long long max_cells = 1000000);

// Structural invariants: S is a +-1 cycle whose support is a closed
// orientable pseudomanifold, and boundary(D) = k*S when D is present.
// Returns a human-readable problem description, or nothing when valid.
std::optional<std::string> bundle_problems(const InstanceBundle& b);

// Fills D by solving boundary(w) = k*S; throws with the computed order of
// [S] when no witness exists.
InstanceBundle derive_witness(InstanceBundle b);

}  // namespace coverhom
