// Mod-p linear algebra on boundary-matrix-shaped inputs: rank and
// "is this vector in the column span" via left-to-right column reduction.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coverhom/sparse_matrix.hpp"

namespace coverhom {

// Sparse column entries (row, value mod p); rows need not be sorted on input.
using FpColumn = std::vector<std::pair<long long, std::uint32_t>>;

class FpReducer {
  public:
    FpReducer(long long rows, std::uint32_t p) : rows_(rows), p_(p) {}

    // Feeds one column; returns true if it contributed a new pivot.
    bool add_column(FpColumn col);

    // Reduces v against the recorded pivots; true iff v lies in the span.
    bool in_span(FpColumn v) const;

    long long rank() const { return static_cast<long long>(pivots_.size()); }
    std::uint32_t p() const { return p_; }

  private:
    long long rows_;
    std::uint32_t p_;
    // pivot row -> fully reduced column whose lowest (largest-index) row is
    // that pivot, normalized to leading coefficient 1
    std::vector<std::pair<long long, FpColumn>> pivots_;  // sorted by pivot row
    const FpColumn* pivot_for(long long row) const;
    void reduce(FpColumn& col) const;
};

long long fp_rank(const SparseIntMatrix& a, std::uint32_t p);
bool fp_in_column_span(const SparseIntMatrix& a, const std::vector<std::pair<long long, Zint>>& v, std::uint32_t p);

std::uint32_t fp_mod(const Zint& z, std::uint32_t p);

}  // namespace coverhom
