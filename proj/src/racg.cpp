#include "coverhom/racg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coverhom {

bool CoxeterPresentation::commute(long long a, long long b) const {
    const auto& adj = commuting[static_cast<std::size_t>(a)];
    return std::binary_search(adj.begin(), adj.end(), b);
}

void CoxeterPresentation::validate() const {
    if (static_cast<long long>(commuting.size()) != n_generators)
        throw std::runtime_error("presentation: adjacency size mismatch");
    for (long long a = 0; a < n_generators; ++a) {
        for (long long b : commuting[static_cast<std::size_t>(a)]) {
            if (b == a) throw std::runtime_error("presentation: reflexive commutation");
            if (!commute(b, a)) throw std::runtime_error("presentation: commutation not symmetric");
        }
    }
}

CoxeterPresentation racg_from_skeleton(const DeltaComplex& x) {
    std::vector<std::pair<long long, long long>> edges;
    for (long long e = 0; e < x.cell_count(1); ++e) {
        long long a = x.vertex_of(1, e, 0), b = x.vertex_of(1, e, 1);
        if (a != b) edges.push_back({a, b});
    }
    return racg_from_edges(x.cell_count(0), edges);
}

CoxeterPresentation racg_from_edges(long long n, const std::vector<std::pair<long long, long long>>& edges) {
    CoxeterPresentation g;
    g.n_generators = n;
    g.commuting.resize(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("racg: edge out of range");
        if (a == b) continue;
        g.commuting[static_cast<std::size_t>(a)].push_back(b);
        g.commuting[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& adj : g.commuting) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    g.validate();
    return g;
}

namespace {

// Left-to-right piling pass: a letter cancels the first equal letter it can
// reach across a run of commuting neighbors, otherwise lands on top.
Word cancel_pass(const CoxeterPresentation& g, const Word& w) {
    Word pile;
    pile.reserve(w.size());
    for (long long x : w) {
        std::size_t barrier = pile.size();
        bool cancelled = false;
        for (std::size_t i = pile.size(); i-- > 0;) {
            if (pile[i] == x) {
                if (barrier == i + 1) {
                    pile.erase(pile.begin() + static_cast<std::ptrdiff_t>(i));
                    cancelled = true;
                }
                break;
            }
            if (!g.commute(pile[i], x)) break;
            barrier = i;
        }
        if (!cancelled) pile.push_back(x);
    }
    return pile;
}

}  // namespace

Word normal_form(const CoxeterPresentation& g, const Word& w) {
    for (long long x : w)
        if (x < 0 || x >= g.n_generators) throw std::invalid_argument("normal_form: unknown generator");
    Word red = cancel_pass(g, w);
    for (;;) {
        Word next = cancel_pass(g, red);
        if (next == red) break;
        red = std::move(next);
    }
    // Greedy ShortLex linearization of the commutation heap: repeatedly pull
    // the smallest letter whose whole left prefix commutes with it.
    Word out;
    out.reserve(red.size());
    while (!red.empty()) {
        std::size_t best_pos = red.size();
        long long best = -1;
        for (std::size_t i = 0; i < red.size(); ++i) {
            if (best >= 0 && red[i] >= best) continue;
            bool front = true;
            for (std::size_t j = 0; j < i; ++j)
                if (!g.commute(red[j], red[i])) {
                    front = false;
                    break;
                }
            if (front) {
                best = red[i];
                best_pos = i;
            }
        }
        out.push_back(best);
        red.erase(red.begin() + static_cast<std::ptrdiff_t>(best_pos));
    }
    return out;
}

bool words_equal(const CoxeterPresentation& g, const Word& a, const Word& b) {
    return normal_form(g, a) == normal_form(g, b);
}

long long word_length(const CoxeterPresentation& g, const Word& w) {
    return static_cast<long long>(normal_form(g, w).size());
}

bool is_even(const CoxeterPresentation& g, const Word& w) {
    (void)g;
    // cancellations remove letters in pairs, so raw parity is the parity of
    // the Coxeter length
    return w.size() % 2 == 0;
}

std::uint32_t Character::apply(const Word& w) const {
    std::uint32_t acc = 0;
    for (long long x : w) acc ^= images[static_cast<std::size_t>(x)];
    return acc;
}

Zint kernel_index(const Character& chi) {
    // xor-echelon rank of the images
    std::vector<std::uint32_t> basis;
    for (std::uint32_t v : chi.images) {
        for (std::uint32_t b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
        std::sort(basis.rbegin(), basis.rend());
    }
    Zint idx(1);
    for (std::size_t i = 0; i < basis.size(); ++i) idx = idx * Zint(2);
    return idx;
}

bool parabolic_is_finite(const CoxeterPresentation& g, const std::vector<long long>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j]) continue;
            if (!g.commute(t[i], t[j])) return false;
        }
    return true;
}

Word parse_word(const std::string& line, const std::vector<std::string>& generator_names) {
    Word w;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        auto it = std::find(generator_names.begin(), generator_names.end(), tok);
        if (it == generator_names.end()) throw std::invalid_argument("unknown generator: " + tok);
        w.push_back(static_cast<long long>(it - generator_names.begin()));
    }
    return w;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += generator_names[static_cast<std::size_t>(w[i])];
    }
    return out;
}

}  // namespace coverhom
