#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "coverhom/builders.hpp"
#include "coverhom/racg.hpp"
#include "coverhom/subdivision.hpp"

using namespace coverhom;

namespace {

// Brute-force oracle: the full move-equivalence class (adjacent cancellation
// and commutation swaps) via BFS; canonical form = ShortLex minimum.
Word brute_normal_form(const CoxeterPresentation& g, const Word& start) {
    auto shortlex_less = [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    std::set<Word> seen{start};
    std::vector<Word> frontier{start};
    Word best = start;
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            if (shortlex_less(w, best)) best = w;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i] == w[i + 1]) {
                    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                    u.insert(u.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
                    if (seen.insert(u).second) next.push_back(u);
                } else if (g.commute(w[i], w[i + 1])) {
                    Word u = w;
                    std::swap(u[i], u[i + 1]);
                    if (seen.insert(u).second) next.push_back(u);
                }
            }
        }
        frontier = std::move(next);
    }
    return best;
}

Word random_word(std::mt19937_64& rng, long long n_gen, int len) {
    std::uniform_int_distribution<long long> pick(0, n_gen - 1);
    Word w(static_cast<std::size_t>(len));
    for (auto& x : w) x = pick(rng);
    return w;
}

CoxeterPresentation random_graph(std::mt19937_64& rng, long long n, double p) {
    std::vector<std::pair<long long, long long>> edges;
    std::uniform_real_distribution<double> coin(0, 1);
    for (long long a = 0; a < n; ++a)
        for (long long b = a + 1; b < n; ++b)
            if (coin(rng) < p) edges.push_back({a, b});
    return racg_from_edges(n, edges);
}

// scramble by random legal moves (commutations and double-letter insertions)
Word scramble(const CoxeterPresentation& g, Word w, std::mt19937_64& rng, int moves) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long long> pick(0, g.n_generators - 1);
    for (int m = 0; m < moves; ++m) {
        int k = kind(rng);
        if (k == 0 && w.size() >= 2) {
            std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
            std::size_t i = pos(rng);
            if (g.commute(w[i], w[i + 1])) std::swap(w[i], w[i + 1]);
        } else if (k == 1) {
            std::uniform_int_distribution<std::size_t> pos(0, w.size());
            std::size_t i = pos(rng);
            long long x = pick(rng);
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), {x, x});
        } else if (w.size() >= 2) {
            std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
            std::size_t i = pos(rng);
            if (w[i] == w[i + 1]) w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        }
    }
    return w;
}

}  // namespace

TEST_CASE("presentations from skeleta") {
    SUBCASE("single edge: two commuting generators") {
        DeltaComplex::Builder b(1);
        b.add_vertices(2);
        b.add_cell(1, {1, 0});
        auto g = racg_from_skeleton(b.finish());
        CHECK(g.n_generators == 2);
        CHECK(g.commute(0, 1));
        CHECK(normal_form(g, {0, 1, 0, 1}).empty());
    }
    SUBCASE("two isolated vertices: infinite dihedral") {
        DeltaComplex::Builder b(0);
        b.add_vertices(2);
        auto g = racg_from_skeleton(b.finish());
        CHECK(!g.commute(0, 1));
        Word w = {0, 1, 0, 1};
        CHECK(normal_form(g, w) == w);
        CHECK(word_length(g, w) == 4);
    }
    SUBCASE("C4 skeleton: adjacency only") {
        auto g = racg_from_skeleton(cycle_graph(4));
        CHECK(g.n_generators == 4);
        long long commuting_pairs = 0;
        for (long long a = 0; a < 4; ++a)
            for (long long b = a + 1; b < 4; ++b)
                if (g.commute(a, b)) ++commuting_pairs;
        CHECK(commuting_pairs == 4);
    }
}

TEST_CASE("pinned normal forms") {
    auto g = racg_from_edges(2, {{0, 1}});
    CHECK(normal_form(g, {0, 1, 0, 1}).empty());
    auto g2 = racg_from_edges(2, {});
    Word vwvw = {0, 1, 0, 1};
    CHECK(normal_form(g2, vwvw) == vwvw);
    CHECK(normal_form(g2, {0, 0}).empty());
    CHECK_THROWS(normal_form(g2, {5}));
}

TEST_CASE("normal form matches the brute-force oracle on short words") {
    std::mt19937_64 rng(21);
    for (int gi = 0; gi < 6; ++gi) {
        auto g = random_graph(rng, 4, 0.4);
        for (int t = 0; t < 120; ++t) {
            Word w = random_word(rng, 4, static_cast<int>(rng() % 9));
            CHECK(normal_form(g, w) == brute_normal_form(g, w));
        }
    }
}

TEST_CASE("normal form properties on random words") {
    std::mt19937_64 rng(22);
    for (int gi = 0; gi < 4; ++gi) {
        auto g = random_graph(rng, 6, 0.35);
        for (int t = 0; t < 200; ++t) {
            Word w = random_word(rng, 6, 12);
            Word nf = normal_form(g, w);
            // idempotent
            CHECK(normal_form(g, nf) == nf);
            // invariant under legal scrambles
            CHECK(normal_form(g, scramble(g, w, rng, 15)) == nf);
            // parity of the raw length is the parity of the Coxeter length
            CHECK((w.size() % 2) == (nf.size() % 2));
            CHECK(is_even(g, w) == (nf.size() % 2 == 0));

            // subadditivity and inverse length
            Word v = random_word(rng, 6, 8);
            Word wv = w;
            wv.insert(wv.end(), v.begin(), v.end());
            CHECK(word_length(g, wv) <= word_length(g, w) + word_length(g, v));
            Word wrev(w.rbegin(), w.rend());
            CHECK(word_length(g, wrev) == word_length(g, w));
        }
    }
}

TEST_CASE("parity is a homomorphism") {
    std::mt19937_64 rng(23);
    auto g = random_graph(rng, 5, 0.3);
    for (int t = 0; t < 100; ++t) {
        Word a = random_word(rng, 5, 7), b = random_word(rng, 5, 6);
        Word ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        CHECK(is_even(g, ab) == (is_even(g, a) == is_even(g, b)));
    }
}

TEST_CASE("characters") {
    auto g = racg_from_edges(3, {{0, 1}});
    Character chi;
    chi.rank = 2;
    chi.images = {1u, 2u, 3u};
    SUBCASE("involution letters cancel") {
        CHECK(chi.apply({0, 1, 0}) == chi.apply({1}));
        CHECK(chi.apply({}) == 0u);
        CHECK(chi.apply({0, 0}) == 0u);
    }
    SUBCASE("invariant under normal form") {
        std::mt19937_64 rng(24);
        for (int t = 0; t < 200; ++t) {
            Word w = random_word(rng, 3, 10);
            CHECK(chi.apply(w) == chi.apply(normal_form(g, w)));
        }
    }
    SUBCASE("kernel index") {
        CHECK(kernel_index(chi).as_int64() == 4);
        Character zero;
        zero.rank = 3;
        zero.images = {0u, 0u, 0u};
        CHECK(kernel_index(zero).is_one());
    }
}

TEST_CASE("kernel index of the dimension folding on a 3-complex") {
    // subdivided solid tetrahedron has cells in dimensions 0..3, so the
    // provenance labels hit all four basis vectors
    auto sd = subdivide(simplex(3));
    const auto& k = sd.result();
    Character chi;
    chi.rank = 4;
    chi.images.resize(static_cast<std::size_t>(k.cell_count(0)));
    for (long long v = 0; v < k.cell_count(0); ++v)
        chi.images[static_cast<std::size_t>(v)] = 1u << k.provenance(v).carrier_dim;
    CHECK(kernel_index(chi).as_int64() == 16);
}

TEST_CASE("finite parabolics are cliques") {
    auto g = racg_from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(parabolic_is_finite(g, {0, 1}));
    CHECK(parabolic_is_finite(g, {0, 1, 2}));
    CHECK(!parabolic_is_finite(g, {0, 3}));
    CHECK(parabolic_is_finite(g, {}));
    CHECK(parabolic_is_finite(g, {2}));
}

TEST_CASE("clique-supported kernel words reduce to the identity") {
    // desk-scale probe: an even word supported on a clique whose character
    // image vanishes must already be trivial
    std::mt19937_64 rng(25);
    auto g = racg_from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    Character chi;
    chi.rank = 3;
    chi.images = {1u, 2u, 4u, 1u, 2u};
    for (int t = 0; t < 300; ++t) {
        // random word in the clique {0,1,2}
        Word w = random_word(rng, 3, 8);
        if (chi.apply(w) != 0u) continue;
        CHECK(normal_form(g, w).empty());
    }
}

TEST_CASE("word parsing") {
    std::vector<std::string> names = {"a", "b", "c"};
    Word w = parse_word("a c b b", names);
    CHECK(w == Word{0, 2, 1, 1});
    CHECK(word_to_string(w, names) == "a c b b");
    CHECK_THROWS(parse_word("a x", names));
}
