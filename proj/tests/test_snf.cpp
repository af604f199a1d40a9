#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "coverhom/fp_solve.hpp"
#include "coverhom/snf.hpp"

using namespace coverhom;

namespace {

// Independent oracle: d_k = gcd of k x k minors / gcd of (k-1) minors.
std::vector<Zint> determinantal_divisors(const SparseIntMatrix& m) {
    auto dense = m.to_dense();
    long long rows = m.rows, cols = m.cols;
    long long kmax = std::min(rows, cols);

    auto det = [&](const std::vector<long long>& ri, const std::vector<long long>& ci) {
        // cofactor expansion; fine for k <= 5
        std::size_t k = ri.size();
        std::vector<std::vector<Zint>> sub(k, std::vector<Zint>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = dense[static_cast<std::size_t>(ri[i])][static_cast<std::size_t>(ci[j])];
        std::vector<std::size_t> cols_left(k);
        for (std::size_t j = 0; j < k; ++j) cols_left[j] = j;
        std::function<Zint(std::size_t, std::vector<std::size_t>&)> go =
            [&](std::size_t row, std::vector<std::size_t>& cl) -> Zint {
            if (cl.empty()) return Zint(1);
            Zint acc(0);
            for (std::size_t t = 0; t < cl.size(); ++t) {
                std::size_t c = cl[t];
                if (sub[row][c].is_zero()) continue;
                std::vector<std::size_t> rest;
                for (std::size_t u = 0; u < cl.size(); ++u)
                    if (u != t) rest.push_back(cl[u]);
                Zint term = sub[row][c] * go(row + 1, rest);
                if (t % 2 == 1) term = -term;
                acc += term;
            }
            return acc;
        };
        return go(0, cols_left);
    };

    auto combos = [](long long n, long long k) {
        std::vector<std::vector<long long>> out;
        std::vector<long long> cur(static_cast<std::size_t>(k));
        std::function<void(long long, long long)> rec = [&](long long start, long long depth) {
            if (depth == k) {
                out.push_back(cur);
                return;
            }
            for (long long i = start; i < n; ++i) {
                cur[static_cast<std::size_t>(depth)] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
        return out;
    };

    std::vector<Zint> gk;  // gcd of k x k minors, k = 1..
    for (long long k = 1; k <= kmax; ++k) {
        Zint g(0);
        for (const auto& ri : combos(rows, k)) {
            for (const auto& ci : combos(cols, k)) {
                g = Zint::gcd(g, det(ri, ci));
                if (g.is_one()) break;
            }
            if (g.is_one()) break;
        }
        if (g.is_zero()) break;  // rank reached
        gk.push_back(g);
    }
    std::vector<Zint> divisors;
    for (std::size_t k = 0; k < gk.size(); ++k) {
        divisors.push_back(k == 0 ? gk[0] : gk[k] / gk[k - 1]);
    }
    return divisors;
}

SparseIntMatrix random_matrix(std::mt19937_64& rng, long long maxdim, long long lo, long long hi) {
    std::uniform_int_distribution<long long> dim(1, maxdim), val(lo, hi);
    long long r = dim(rng), c = dim(rng);
    SparseIntMatrix m(r, c);
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < c; ++j) m.set(i, j, Zint(val(rng)));
    return m;
}

}  // namespace

TEST_CASE("pinned examples") {
    SUBCASE("diag(2,3) has invariant factors 1, 6") {
        auto m = SparseIntMatrix::from_dense({{2, 0}, {0, 3}});
        auto r = smith_normal_form(m);
        // cross-checked against the determinantal-divisor oracle below
        auto oracle = determinantal_divisors(m);
        REQUIRE(oracle.size() == 2);
        CHECK(oracle[0].as_int64() == 1);
        CHECK(oracle[1].as_int64() == 6);
        REQUIRE(r.diagonal.size() == 2);
        CHECK(r.diagonal[0].as_int64() == 1);
        CHECK(r.diagonal[1].as_int64() == 6);
    }
    SUBCASE("zero matrix") {
        SparseIntMatrix m(3, 4);
        auto r = smith_normal_form(m);
        CHECK(r.diagonal.empty());
    }
    SUBCASE("identity") {
        auto r = smith_normal_form(SparseIntMatrix::identity(3));
        REQUIRE(r.diagonal.size() == 3);
        for (const auto& d : r.diagonal) CHECK(d.is_one());
    }
}

TEST_CASE("oracle equivalence on random matrices up to 5x5") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        auto m = random_matrix(rng, 5, -9, 9);
        auto r = smith_normal_form(m);
        auto oracle = determinantal_divisors(m);
        REQUIRE(r.diagonal.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(r.diagonal[i] == oracle[i]);
    }
}

TEST_CASE("reconstruction U*A*V = D and transform unimodularity") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 120; ++trial) {
        auto m = random_matrix(rng, 6, -6, 6);
        auto r = smith_normal_form(m, {true, true});
        auto t = materialize_transforms(r);
        auto lhs = SparseIntMatrix::multiply(SparseIntMatrix::multiply(t.row_transform, m), t.col_transform);
        CHECK(lhs == diagonal_matrix(r));
        auto iu = SparseIntMatrix::multiply(t.row_transform, t.row_transform_inv);
        auto iv = SparseIntMatrix::multiply(t.col_transform, t.col_transform_inv);
        CHECK(iu == SparseIntMatrix::identity(m.rows));
        CHECK(iv == SparseIntMatrix::identity(m.cols));
    }
}

TEST_CASE("divisibility chain holds") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 300; ++trial) {
        auto m = random_matrix(rng, 5, -30, 30);
        auto r = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < r.diagonal.size(); ++i) {
            CHECK(r.diagonal[i].divides(r.diagonal[i + 1]));
            CHECK(r.diagonal[i].sign() > 0);
        }
    }
}

TEST_CASE("determinism: same input, same logs and diagonal") {
    std::mt19937_64 rng(45);
    auto m = random_matrix(rng, 6, -9, 9);
    auto r1 = smith_normal_form(m, {true, true});
    auto r2 = smith_normal_form(m, {true, true});
    CHECK(r1.diagonal == r2.diagonal);
    REQUIRE(r1.row_log.size() == r2.row_log.size());
    for (std::size_t i = 0; i < r1.row_log.size(); ++i) {
        CHECK(r1.row_log[i].kind == r2.row_log[i].kind);
        CHECK(r1.row_log[i].a == r2.row_log[i].a);
        CHECK(r1.row_log[i].b == r2.row_log[i].b);
        CHECK(r1.row_log[i].t == r2.row_log[i].t);
    }
}

TEST_CASE("integer solve") {
    SUBCASE("solvable system") {
        auto a = SparseIntMatrix::from_dense({{2, 0, 1}, {0, 3, 1}});
        std::vector<Zint> b = {Zint(5), Zint(7)};
        auto x = solve_integer(a, b);
        REQUIRE(x.has_value());
        auto ax = a.apply(*x);
        CHECK(ax[0] == b[0]);
        CHECK(ax[1] == b[1]);
    }
    SUBCASE("unsolvable by divisibility") {
        auto a = SparseIntMatrix::from_dense({{2}});
        CHECK(!solve_integer(a, {Zint(3)}).has_value());
    }
    SUBCASE("unsolvable by rank") {
        auto a = SparseIntMatrix::from_dense({{1}, {1}});
        CHECK(!solve_integer(a, {Zint(1), Zint(2)}).has_value());
    }
    SUBCASE("random consistency") {
        std::mt19937_64 rng(46);
        std::uniform_int_distribution<long long> val(-4, 4);
        for (int trial = 0; trial < 200; ++trial) {
            auto a = random_matrix(rng, 5, -5, 5);
            std::vector<Zint> x0(static_cast<std::size_t>(a.cols));
            for (auto& v : x0) v = Zint(val(rng));
            auto b = a.apply(x0);
            auto x = solve_integer(a, b);
            REQUIRE(x.has_value());
            CHECK(a.apply(*x) == b);
        }
    }
}

TEST_CASE("fp rank matches SNF-derived rank mod p") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        auto m = random_matrix(rng, 5, -9, 9);
        auto r = smith_normal_form(m);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            long long expect = 0;
            for (const auto& d : r.diagonal)
                if (fp_mod(d, p) != 0) ++expect;
            CHECK(fp_rank(m, p) == expect);
        }
    }
}

TEST_CASE("fp span membership") {
    auto a = SparseIntMatrix::from_dense({{2, 0}, {0, 2}});
    // (1,0) is not in the span mod 2, but is over Q
    CHECK(!fp_in_column_span(a, {{0, Zint(1)}}, 2));
    CHECK(fp_in_column_span(a, {{0, Zint(2)}}, 2));
    CHECK(fp_in_column_span(a, {{0, Zint(1)}}, 3));
}
