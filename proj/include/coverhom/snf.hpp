// Smith normal form over Z with operation logs.
//
// The eliminator diagonalizes by unimodular row/column operations, preferring
// unit pivots with low Markowitz cost, then enforces the divisibility chain on
// the diagonal. Operation logs stand in for the dense transform matrices:
// replaying them on vectors computes U*v, U^{-1}*v, V*v and V^{-1}*v without
// materializing anything, which is what the homology layer uses. Explicit
// transforms (with inverses) can still be materialized for small matrices.
#pragma once

#include <optional>
#include <vector>

#include "coverhom/sparse_matrix.hpp"

namespace coverhom {

struct ElemOp {
    enum Kind { Swap, Negate, AddMul } kind;
    long long a = 0, b = 0;  // Swap: a<->b; Negate: a; AddMul: a += t*b
    Zint t;
};

struct SnfOptions {
    bool want_row_log = false;
    bool want_col_log = false;
};

struct SnfResult {
    long long rows = 0, cols = 0;
    std::vector<Zint> diagonal;  // nonzero invariant factors d1 | d2 | ...
    std::vector<ElemOp> row_log;  // U = (ops applied in order to rows of A)
    std::vector<ElemOp> col_log;  // V = (ops applied in order to cols of A)

    long long rank() const { return static_cast<long long>(diagonal.size()); }
};

SnfResult smith_normal_form(const SparseIntMatrix& a, const SnfOptions& opt = {});

// Log replay. Row ops E_k...E_1 define U; column ops F_1...F_m define V with
// U*A*V = diag. The four maps below cover everything solve/order need.
void apply_row_log(const std::vector<ElemOp>& log, std::vector<Zint>& v);          // v := U*v
void apply_row_log_inverse(const std::vector<ElemOp>& log, std::vector<Zint>& v);  // v := U^{-1}*v
void apply_col_log(const std::vector<ElemOp>& log, std::vector<Zint>& v);          // v := V*v
void apply_col_log_inverse(const std::vector<ElemOp>& log, std::vector<Zint>& v);  // v := V^{-1}*v

struct SnfTransforms {
    SparseIntMatrix row_transform, row_transform_inv;  // U, U^{-1}
    SparseIntMatrix col_transform, col_transform_inv;  // V, V^{-1}
};

// Materializes U, V and inverses from the logs. Intended for small matrices.
SnfTransforms materialize_transforms(const SnfResult& r);

// Diagonal of U*A*V as a full matrix, for reconstruction checks.
SparseIntMatrix diagonal_matrix(const SnfResult& r);

// Solve A*x = b over the integers; nullopt when no integral solution exists.
std::optional<std::vector<Zint>> solve_integer(const SparseIntMatrix& a, const std::vector<Zint>& b);

}  // namespace coverhom
