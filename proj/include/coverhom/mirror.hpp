// Mirror structures and characteristic functions on a covered complex K:
// faces F_sigma live in the barycentric subdivision of K, and a labeling of
// K's vertices by Z_2^r vectors is characteristic when it spans freely over
// every simplex.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverhom/delta_complex.hpp"
#include "coverhom/subdivision.hpp"

namespace coverhom {

struct CharacteristicFunction {
    int rank = 0;
    std::vector<std::uint32_t> labels;  // per vertex of the covered complex

    bool is_folding() const;  // every label is a standard basis vector
    int basis_index(long long vertex) const;
};

// The dimension folding on a subdivided complex: barycenter of a d-cell
// gets the basis vector e_d.
CharacteristicFunction folding_characteristic(const DeltaComplex& k_with_provenance, int rank);

struct MirrorStructure {
    // face_of[d][cell] = cells of K^b forming F_sigma
    std::vector<std::vector<CellSubset>> face_of;

    const CellSubset& face(int d, long long cell) const {
        return face_of[static_cast<std::size_t>(d)][static_cast<std::size_t>(cell)];
    }
    int face_dimension(int d, long long cell) const;
};

MirrorStructure mirror_structure(const Subdivision& k_sub);

struct CharacteristicViolation {
    int dim = 0;
    long long cell = 0;
    std::string reason;
};

// Checks the span condition cell by cell (and, for basis-vector labelings,
// that incident vertices carry different labels).
std::optional<CharacteristicViolation> validate_characteristic(const DeltaComplex& k,
                                                               const CharacteristicFunction& lambda);

// The folding map K -> standard simplex of dimension rank-1.
struct FoldingMapResult {
    DeltaComplex target;
    CellMap map;
};
FoldingMapResult folding_map(const DeltaComplex& k, const CharacteristicFunction& lambda);

// Z_2-subspace utilities (bitvector vectors).
struct Z2Span {
    std::vector<std::uint32_t> echelon;  // basis with distinct leading bits, descending

    void insert(std::uint32_t v);
    std::uint32_t reduce(std::uint32_t v) const;  // canonical coset representative
    int dim() const { return static_cast<int>(echelon.size()); }
    std::uint32_t pivot_mask() const;
    bool contains(std::uint32_t v) const { return reduce(v) == 0; }
};

}  // namespace coverhom
