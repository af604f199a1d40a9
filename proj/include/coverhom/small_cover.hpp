// The small cover of a complex K with characteristic function lambda:
// 2^rank chambers, each a copy of the cone over K's barycentric subdivision,
// glued along mirror faces. Cells are (cone cell, coset of the cell's
// stabilizer); the stabilizer of a base flag is the lambda-span of the
// vertices of its minimal element, and cells touching the apex are free.
//
// Cells are kept implicit: an id encodes (cone cell, coset index) through
// per-cell offsets, so covers with millions of cells stay cheap to hold.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coverhom/builders.hpp"
#include "coverhom/mirror.hpp"
#include "coverhom/subdivision.hpp"

namespace coverhom {

class SmallCover {
  public:
    // k must stay alive for the cover's lifetime.
    SmallCover(const DeltaComplex& k, CharacteristicFunction lambda);

    int rank() const { return lambda_.rank; }
    std::uint32_t group_order() const { return 1u << lambda_.rank; }
    int dimension() const { return cone_.complex.dimension(); }
    long long cell_count(int d) const;
    long long total_cells() const;

    const DeltaComplex& covered() const { return *k_; }
    const Subdivision& base_subdivision() const { return kb_; }
    const ConeResult& base_cone() const { return cone_; }
    const CharacteristicFunction& characteristic() const { return lambda_; }

    // cell encoding
    long long cell_of(int d, long long cone_cell, std::uint32_t g) const;  // reduces g
    struct CellInfo {
        long long cone_cell;
        std::uint32_t coset_rep;
    };
    CellInfo info(int d, long long cell) const;
    std::uint32_t stabilizer_pivots(int d, long long cone_cell) const;
    std::vector<std::uint32_t> stabilizer_basis(int d, long long cone_cell) const;
    std::uint32_t reduce_rep(int d, long long cone_cell, std::uint32_t g) const;

    // chain operations
    Chain boundary_chain(const Chain& c) const;
    Chain act(std::uint32_t g, const Chain& c) const;
    Chain project(const Chain& c) const;  // pushforward along p to the base cone
    // Signed lift over all chambers of the cone over a base chain:
    // sum over g of (-1)^{|g|} (cone of c in chamber g).
    Chain lift_chain(const Chain& c_on_kb) const;
    // Chamber-0 part of a chain, reinterpreted on the base cone complex.
    Chain chamber_restriction(const Chain& z) const;
    // Base chain pushed into one chamber (cells keep their stabilizer coset).
    Chain include_chamber(const Chain& c_on_cone, std::uint32_t g) const;

    // Materializes the cover as an explicit complex with annotations;
    // intended for small covers (tests, exports, direct homology).
    struct Materialized {
        DeltaComplex complex;
        std::vector<std::vector<long long>> cone_cell;      // per dim, per cell
        std::vector<std::vector<std::uint32_t>> coset_rep;  // per dim, per cell
    };
    Materialized materialize() const;

    // Structural validation: boundary squares to zero, orbit-stabilizer
    // counts, equivariance of the projection. Throws on violation.
    void validate_structure() const;

  private:
    const DeltaComplex* k_;
    CharacteristicFunction lambda_;
    Subdivision kb_;
    ConeResult cone_;
    // per dimension, per cone cell: echelon basis (rank slots, zero-padded)
    std::vector<std::vector<std::uint32_t>> stab_basis_;
    std::vector<std::vector<std::uint32_t>> stab_pivots_;  // pivot bit mask
    std::vector<std::vector<long long>> offsets_;          // per dim: prefix sums over cone cells
    std::vector<long long> counts_;

    std::uint32_t free_mask(int d, long long cone_cell) const;
    static std::uint32_t compress_bits(std::uint32_t value, std::uint32_t mask);
    static std::uint32_t expand_bits(std::uint32_t value, std::uint32_t mask);
};

// Map of covers induced by a strict map of the subdivided bases. The
// stabilizer spans of matching cells must agree (validated), which makes the
// coset assignment (c, g) -> (image of c, g + w) well defined.
struct CoverMap {
    const SmallCover* src = nullptr;
    const SmallCover* dst = nullptr;
    CellMap cone_map;  // between the base cone complexes, strict
    std::uint32_t shift = 0;

    Chain push(const Chain& c) const;
};

// base_map: subdivided-source -> subdivided-target cells (strict, signs +1).
CoverMap induced_cover_map(const SmallCover& src, const SmallCover& dst, const CellMap& base_map,
                           std::uint32_t shift);

}  // namespace coverhom
