#include "coverhom/snf.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace coverhom {

namespace {

// Working form: column-major sorted entry lists plus a per-row list of
// columns that may hold an entry in that row (lazily cleaned).
class Eliminator {
  public:
    Eliminator(const SparseIntMatrix& a, const SnfOptions& opt)
        : m_(a.rows), n_(a.cols), opt_(opt), cols_(a.col), row_cols_(static_cast<std::size_t>(a.rows)),
          row_nnz_(static_cast<std::size_t>(a.rows), 0), col_nnz_(static_cast<std::size_t>(a.cols), 0) {
        for (long long j = 0; j < n_; ++j) {
            for (const auto& [r, v] : cols_[static_cast<std::size_t>(j)]) {
                (void)v;
                row_cols_[static_cast<std::size_t>(r)].push_back(j);
                ++row_nnz_[static_cast<std::size_t>(r)];
                ++col_nnz_[static_cast<std::size_t>(j)];
            }
        }
        for (long long j = 0; j < n_; ++j) seed_units(j);
    }

    SnfResult run() {
        long long bound = std::min(m_, n_);
        long long k = 0;
        while (k < bound) {
            auto piv = find_pivot(k);
            if (!piv) break;
            auto [pr, pc] = *piv;
            swap_rows(k, pr);
            swap_cols(k, pc);
            reduce_pivot(k);
            ++k;
        }
        SnfResult res;
        res.rows = m_;
        res.cols = n_;
        for (long long i = 0; i < k; ++i) {
            Zint d = get(i, i);
            assert(!d.is_zero());
            if (d.sign() < 0) {
                negate_row(i);
                d = -d;
            }
            res.diagonal.push_back(d);
        }
        fix_divisibility(res.diagonal);
        res.row_log = std::move(row_log_);
        res.col_log = std::move(col_log_);
        return res;
    }

  private:
    long long m_, n_;
    SnfOptions opt_;
    std::vector<std::vector<std::pair<long long, Zint>>> cols_;
    std::vector<std::vector<long long>> row_cols_;
    std::vector<long long> row_nnz_, col_nnz_;
    std::vector<ElemOp> row_log_, col_log_;
    // (markowitz, col, row) min-heap of unit-entry candidates; lazily stale.
    using Cand = std::tuple<long long, long long, long long>;
    std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> units_;

    Zint get(long long r, long long c) const {
        const auto& e = cols_[static_cast<std::size_t>(c)];
        auto it = std::lower_bound(e.begin(), e.end(), r,
                                   [](const auto& p, long long row) { return p.first < row; });
        if (it != e.end() && it->first == r) return it->second;
        return Zint();
    }

    void put(long long r, long long c, const Zint& v) {
        auto& e = cols_[static_cast<std::size_t>(c)];
        auto it = std::lower_bound(e.begin(), e.end(), r,
                                   [](const auto& p, long long row) { return p.first < row; });
        bool had = it != e.end() && it->first == r;
        if (v.is_zero()) {
            if (had) {
                e.erase(it);
                --row_nnz_[static_cast<std::size_t>(r)];
                --col_nnz_[static_cast<std::size_t>(c)];
            }
            return;
        }
        if (had) {
            it->second = v;
        } else {
            e.insert(it, {r, v});
            ++row_nnz_[static_cast<std::size_t>(r)];
            ++col_nnz_[static_cast<std::size_t>(c)];
            row_cols_[static_cast<std::size_t>(r)].push_back(c);
        }
        if (v.is_one() || v == Zint(-1)) {
            long long cost = (row_nnz_[static_cast<std::size_t>(r)] - 1) * (col_nnz_[static_cast<std::size_t>(c)] - 1);
            units_.push({cost, c, r});
        }
    }

    void seed_units(long long j) {
        for (const auto& [r, v] : cols_[static_cast<std::size_t>(j)]) {
            if (v.is_one() || v == Zint(-1)) {
                long long cost = (row_nnz_[static_cast<std::size_t>(r)] - 1) * (col_nnz_[static_cast<std::size_t>(j)] - 1);
                units_.push({cost, j, r});
            }
        }
    }

    // Pivot rule: smallest |value| first, ties by Markowitz cost, then by
    // (col, row). Unit entries come from the lazy heap; otherwise scan.
    std::optional<std::pair<long long, long long>> find_pivot(long long k) {
        while (!units_.empty()) {
            auto [cost, c, r] = units_.top();
            if (c < k || r < k) {
                units_.pop();
                continue;
            }
            Zint v = get(r, c);
            if (!(v.is_one() || v == Zint(-1))) {
                units_.pop();
                continue;
            }
            long long cur = (row_nnz_[static_cast<std::size_t>(r)] - 1) * (col_nnz_[static_cast<std::size_t>(c)] - 1);
            if (cur != cost) {
                units_.pop();
                units_.push({cur, c, r});
                continue;
            }
            return std::make_pair(r, c);
        }
        // No unit entries left: scan for the minimal absolute value.
        std::optional<std::pair<long long, long long>> best;
        Zint best_abs;
        long long best_cost = 0;
        for (long long j = k; j < n_; ++j) {
            for (const auto& [r, v] : cols_[static_cast<std::size_t>(j)]) {
                if (r < k) continue;
                Zint a = v.abs();
                long long cost = (row_nnz_[static_cast<std::size_t>(r)] - 1) * (col_nnz_[static_cast<std::size_t>(j)] - 1);
                if (!best || a < best_abs || (a == best_abs && cost < best_cost)) {
                    best = std::make_pair(r, j);
                    best_abs = a;
                    best_cost = cost;
                }
            }
        }
        return best;
    }

    void swap_rows(long long a, long long b) {
        if (a == b) return;
        std::vector<long long> joint;
        joint.reserve(row_cols_[static_cast<std::size_t>(a)].size() + row_cols_[static_cast<std::size_t>(b)].size());
        joint.insert(joint.end(), row_cols_[static_cast<std::size_t>(a)].begin(), row_cols_[static_cast<std::size_t>(a)].end());
        joint.insert(joint.end(), row_cols_[static_cast<std::size_t>(b)].begin(), row_cols_[static_cast<std::size_t>(b)].end());
        std::sort(joint.begin(), joint.end());
        joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
        for (long long c : joint) {
            Zint va = get(a, c), vb = get(b, c);
            if (va == vb) continue;
            put(a, c, vb);
            put(b, c, va);
        }
        std::swap(row_cols_[static_cast<std::size_t>(a)], row_cols_[static_cast<std::size_t>(b)]);
        if (opt_.want_row_log) row_log_.push_back({ElemOp::Swap, a, b, Zint()});
    }

    void swap_cols(long long a, long long b) {
        if (a == b) return;
        std::swap(cols_[static_cast<std::size_t>(a)], cols_[static_cast<std::size_t>(b)]);
        std::swap(col_nnz_[static_cast<std::size_t>(a)], col_nnz_[static_cast<std::size_t>(b)]);
        for (const auto& [r, v] : cols_[static_cast<std::size_t>(a)]) {
            (void)v;
            row_cols_[static_cast<std::size_t>(r)].push_back(a);
        }
        for (const auto& [r, v] : cols_[static_cast<std::size_t>(b)]) {
            (void)v;
            row_cols_[static_cast<std::size_t>(r)].push_back(b);
        }
        if (opt_.want_col_log) col_log_.push_back({ElemOp::Swap, a, b, Zint()});
    }

    // Rebuilds row r's column list from live entries (the lists accumulate
    // duplicates and stale ids; row ops must see each column exactly once).
    std::vector<long long>& live_row_cols(long long r) {
        auto& rc = row_cols_[static_cast<std::size_t>(r)];
        std::sort(rc.begin(), rc.end());
        rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
        std::vector<long long> live;
        live.reserve(rc.size());
        for (long long c : rc)
            if (!get(r, c).is_zero()) live.push_back(c);
        rc = std::move(live);
        return rc;
    }

    void negate_row(long long r) {
        for (long long c : live_row_cols(r)) put(r, c, -get(r, c));
        if (opt_.want_row_log) row_log_.push_back({ElemOp::Negate, r, 0, Zint()});
    }

    // row a += t * row b
    void add_row(long long a, long long b, const Zint& t) {
        if (t.is_zero()) return;
        auto snapshot = live_row_cols(b);
        for (long long c : snapshot) {
            Zint vb = get(b, c);
            if (vb.is_zero()) continue;
            put(a, c, get(a, c) + t * vb);
        }
        if (opt_.want_row_log) row_log_.push_back({ElemOp::AddMul, a, b, t});
    }

    // col a += t * col b
    void add_col(long long a, long long b, const Zint& t) {
        if (t.is_zero()) return;
        auto snapshot = cols_[static_cast<std::size_t>(b)];
        for (const auto& [r, vb] : snapshot) put(r, a, get(r, a) + t * vb);
        if (opt_.want_col_log) col_log_.push_back({ElemOp::AddMul, a, b, t});
    }

    std::vector<long long> column_rows(long long c, long long from) {
        std::vector<long long> rs;
        for (const auto& [r, v] : cols_[static_cast<std::size_t>(c)]) {
            (void)v;
            if (r >= from) rs.push_back(r);
        }
        return rs;
    }

    // Clear column k and row k, alternating Euclidean passes until the pivot
    // divides everything it meets; pivots shrink strictly, so this stops.
    void reduce_pivot(long long k) {
        for (;;) {
            // Pull the minimal-|value| entry of column k into the pivot slot.
            bool col_clean = true;
            for (;;) {
                long long best_r = -1;
                Zint best_abs;
                for (const auto& [r, v] : cols_[static_cast<std::size_t>(k)]) {
                    if (r < k) continue;
                    Zint a = v.abs();
                    if (best_r < 0 || a < best_abs || (a == best_abs && r < best_r)) {
                        best_r = r;
                        best_abs = a;
                    }
                }
                assert(best_r >= 0);
                swap_rows(k, best_r);
                Zint piv = get(k, k);
                bool changed = false;
                auto rows_in_col = column_rows(k, k + 1);
                for (long long r : rows_in_col) {
                    Zint v = get(r, k);
                    if (v.is_zero()) continue;
                    Zint q = v / piv;
                    add_row(r, k, -q);
                    if (!get(r, k).is_zero()) changed = true;  // remainder left
                }
                if (!changed) break;
                col_clean = false;
            }
            (void)col_clean;
            // Same for row k via column ops.
            bool row_had_remainder = false;
            for (;;) {
                long long best_c = -1;
                Zint best_abs;
                for (long long c : live_row_cols(k)) {
                    if (c < k) continue;
                    Zint v = get(k, c);
                    if (v.is_zero()) continue;
                    Zint a = v.abs();
                    if (best_c < 0 || a < best_abs || (a == best_abs && c < best_c)) {
                        best_c = c;
                        best_abs = a;
                    }
                }
                assert(best_c >= 0);
                swap_cols(k, best_c);
                Zint piv = get(k, k);
                bool changed = false;
                auto cs = live_row_cols(k);
                for (long long c : cs) {
                    if (c <= k) continue;
                    Zint v = get(k, c);
                    if (v.is_zero()) continue;
                    Zint q = v / piv;
                    add_col(c, k, -q);
                    if (!get(k, c).is_zero()) changed = true;
                }
                if (!changed) break;
                row_had_remainder = true;
            }
            // Column ops may have refilled column k only if row k gained new
            // pivot candidates; a remainder pass means the column must be
            // re-checked.
            bool col_dirty = false;
            for (const auto& [r, v] : cols_[static_cast<std::size_t>(k)]) {
                (void)v;
                if (r > k) {
                    col_dirty = true;
                    break;
                }
            }
            if (!col_dirty && !row_had_remainder) return;
            if (!col_dirty) return;
        }
    }

    // Bring the diagonal into a divisibility chain. Works on the diagonal
    // slots through genuine 2x2 operations so the logs stay valid.
    void fix_divisibility(std::vector<Zint>& diag) {
        long long r = static_cast<long long>(diag.size());
        bool changed = true;
        while (changed) {
            changed = false;
            for (long long i = 0; i + 1 <= r - 1; ++i) {
                for (long long j = i + 1; j < r; ++j) {
                    if (diag[static_cast<std::size_t>(i)].divides(diag[static_cast<std::size_t>(j)])) continue;
                    changed = true;
                    // col i += col j, then re-reduce the 2x2 block.
                    add_col(i, j, Zint(1));
                    two_by_two(i, j);
                    Zint di = get(i, i), dj = get(j, j);
                    if (di.sign() < 0) {
                        negate_row(i);
                        di = -di;
                    }
                    if (dj.sign() < 0) {
                        negate_row(j);
                        dj = -dj;
                    }
                    diag[static_cast<std::size_t>(i)] = di;
                    diag[static_cast<std::size_t>(j)] = dj;
                }
            }
        }
    }

    // Euclidean cleanup of the block spanned by rows/cols {i, j}; entries
    // exist only at (i,i), (j,i), (j,j) when called.
    void two_by_two(long long i, long long j) {
        for (;;) {
            Zint a = get(i, i), c = get(j, i);
            if (c.is_zero()) break;
            if (a.is_zero() || (!a.is_zero() && c.abs() < a.abs())) {
                swap_rows(i, j);
                continue;
            }
            Zint q = c / a;
            add_row(j, i, -q);
            if (!get(j, i).is_zero()) continue;
        }
        // Row i may now have an entry at column j.
        for (;;) {
            Zint a = get(i, i), b = get(i, j);
            if (b.is_zero()) break;
            if (a.is_zero() || b.abs() < a.abs()) {
                swap_cols(i, j);
                // Column i could regain a (j, i) entry; redo the row pass.
                Zint cj = get(j, i);
                if (!cj.is_zero()) {
                    two_by_two(i, j);
                    return;
                }
                continue;
            }
            Zint q = b / a;
            add_col(j, i, -q);
            if (!get(i, j).is_zero()) continue;
        }
        Zint cj = get(j, i);
        if (!cj.is_zero()) two_by_two(i, j);
    }
};

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& a, const SnfOptions& opt) {
    Eliminator e(a, opt);
    return e.run();
}

void apply_row_log(const std::vector<ElemOp>& log, std::vector<Zint>& v) {
    for (const auto& op : log) {
        switch (op.kind) {
            case ElemOp::Swap: std::swap(v[static_cast<std::size_t>(op.a)], v[static_cast<std::size_t>(op.b)]); break;
            case ElemOp::Negate: v[static_cast<std::size_t>(op.a)] = -v[static_cast<std::size_t>(op.a)]; break;
            case ElemOp::AddMul: v[static_cast<std::size_t>(op.a)] += op.t * v[static_cast<std::size_t>(op.b)]; break;
        }
    }
}

void apply_row_log_inverse(const std::vector<ElemOp>& log, std::vector<Zint>& v) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        switch (it->kind) {
            case ElemOp::Swap: std::swap(v[static_cast<std::size_t>(it->a)], v[static_cast<std::size_t>(it->b)]); break;
            case ElemOp::Negate: v[static_cast<std::size_t>(it->a)] = -v[static_cast<std::size_t>(it->a)]; break;
            case ElemOp::AddMul: v[static_cast<std::size_t>(it->a)] -= it->t * v[static_cast<std::size_t>(it->b)]; break;
        }
    }
}

void apply_col_log(const std::vector<ElemOp>& log, std::vector<Zint>& v) {
    // V*v applies the ops reverse-chronologically; "col a += t col b" acts on
    // vectors as v[b] += t*v[a].
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        switch (it->kind) {
            case ElemOp::Swap: std::swap(v[static_cast<std::size_t>(it->a)], v[static_cast<std::size_t>(it->b)]); break;
            case ElemOp::Negate: v[static_cast<std::size_t>(it->a)] = -v[static_cast<std::size_t>(it->a)]; break;
            case ElemOp::AddMul: v[static_cast<std::size_t>(it->b)] += it->t * v[static_cast<std::size_t>(it->a)]; break;
        }
    }
}

void apply_col_log_inverse(const std::vector<ElemOp>& log, std::vector<Zint>& v) {
    for (const auto& op : log) {
        switch (op.kind) {
            case ElemOp::Swap: std::swap(v[static_cast<std::size_t>(op.a)], v[static_cast<std::size_t>(op.b)]); break;
            case ElemOp::Negate: v[static_cast<std::size_t>(op.a)] = -v[static_cast<std::size_t>(op.a)]; break;
            case ElemOp::AddMul: v[static_cast<std::size_t>(op.b)] -= op.t * v[static_cast<std::size_t>(op.a)]; break;
        }
    }
}

SnfTransforms materialize_transforms(const SnfResult& r) {
    SnfTransforms t;
    auto build = [](long long n, auto&& apply_fn) {
        SparseIntMatrix m(n, n);
        std::vector<Zint> v(static_cast<std::size_t>(n));
        for (long long j = 0; j < n; ++j) {
            std::fill(v.begin(), v.end(), Zint());
            v[static_cast<std::size_t>(j)] = Zint(1);
            apply_fn(v);
            for (long long i = 0; i < n; ++i)
                if (!v[static_cast<std::size_t>(i)].is_zero()) m.col[static_cast<std::size_t>(j)].push_back({i, v[static_cast<std::size_t>(i)]});
        }
        return m;
    };
    t.row_transform = build(r.rows, [&](std::vector<Zint>& v) { apply_row_log(r.row_log, v); });
    t.row_transform_inv = build(r.rows, [&](std::vector<Zint>& v) { apply_row_log_inverse(r.row_log, v); });
    t.col_transform = build(r.cols, [&](std::vector<Zint>& v) { apply_col_log(r.col_log, v); });
    t.col_transform_inv = build(r.cols, [&](std::vector<Zint>& v) { apply_col_log_inverse(r.col_log, v); });
    return t;
}

SparseIntMatrix diagonal_matrix(const SnfResult& r) {
    SparseIntMatrix d(r.rows, r.cols);
    for (std::size_t i = 0; i < r.diagonal.size(); ++i)
        d.col[i].push_back({static_cast<long long>(i), r.diagonal[i]});
    return d;
}

std::optional<std::vector<Zint>> solve_integer(const SparseIntMatrix& a, const std::vector<Zint>& b) {
    if (static_cast<long long>(b.size()) != a.rows) throw std::invalid_argument("solve_integer: size mismatch");
    SnfResult r = smith_normal_form(a, {true, true});
    std::vector<Zint> w = b;
    apply_row_log(r.row_log, w);  // w = U*b
    std::vector<Zint> y(static_cast<std::size_t>(a.cols));
    for (long long i = 0; i < a.rows; ++i) {
        const Zint& wi = w[static_cast<std::size_t>(i)];
        if (i < r.rank()) {
            const Zint& d = r.diagonal[static_cast<std::size_t>(i)];
            if (!(wi % d).is_zero()) return std::nullopt;
            if (i < a.cols) y[static_cast<std::size_t>(i)] = wi / d;
        } else if (!wi.is_zero()) {
            return std::nullopt;
        }
    }
    apply_col_log(r.col_log, y);  // x = V*y
    return y;
}

}  // namespace coverhom
