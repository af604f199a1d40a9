// Right-angled Coxeter group calculus: presentations from graph 1-skeleta,
// ShortLex normal forms via commutation piling, characters to Z_2^r.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coverhom/delta_complex.hpp"

namespace coverhom {

struct CoxeterPresentation {
    long long n_generators = 0;
    // symmetric commutation relation; stored as sorted adjacency lists
    std::vector<std::vector<long long>> commuting;

    bool commute(long long a, long long b) const;
    void validate() const;
};

CoxeterPresentation racg_from_skeleton(const DeltaComplex& x);
CoxeterPresentation racg_from_edges(long long n, const std::vector<std::pair<long long, long long>>& edges);

using Word = std::vector<long long>;

// ShortLex-minimal representative: delete adjacent equal letters, move
// letters left across commuting neighbors toward lexicographic order,
// iterated to the fixed point. Length of the result is the Coxeter length.
Word normal_form(const CoxeterPresentation& g, const Word& w);

bool words_equal(const CoxeterPresentation& g, const Word& a, const Word& b);
long long word_length(const CoxeterPresentation& g, const Word& w);
bool is_even(const CoxeterPresentation& g, const Word& w);

struct Character {
    int rank = 0;
    std::vector<std::uint32_t> images;  // per generator, bitvector in Z_2^rank

    std::uint32_t apply(const Word& w) const;
};

// 2^(rank of the span of the generator images)
Zint kernel_index(const Character& chi);

// W_T is finite iff T is a clique in the defining graph.
bool parabolic_is_finite(const CoxeterPresentation& g, const std::vector<long long>& t);

Word parse_word(const std::string& line, const std::vector<std::string>& generator_names);
std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names);

}  // namespace coverhom
