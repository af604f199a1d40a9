#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "coverhom/bigint.hpp"

namespace coverhom {

// Column-major sparse integer matrix. Columns hold (row, value) pairs
// sorted by row; zero values are never stored.
struct SparseIntMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<std::vector<std::pair<long long, Zint>>> col;

    SparseIntMatrix() = default;
    SparseIntMatrix(long long r, long long c) : rows(r), cols(c), col(static_cast<std::size_t>(c)) {}

    void set(long long r, long long c, Zint v);
    Zint get(long long r, long long c) const;
    long long nnz() const;

    static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& d);
    std::vector<std::vector<Zint>> to_dense() const;

    bool operator==(const SparseIntMatrix& o) const;

    // y = A * x (x indexed by columns, y by rows)
    std::vector<Zint> apply(const std::vector<Zint>& x) const;

    static SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);
    static SparseIntMatrix identity(long long n);
};

// Coordinate text format (MatrixMarket): header, "rows cols nnz" line,
// then one "row col value" line per entry, 1-based indices.
void write_matrix_market(std::ostream& os, const SparseIntMatrix& m);
SparseIntMatrix read_matrix_market(std::istream& is);

}  // namespace coverhom
