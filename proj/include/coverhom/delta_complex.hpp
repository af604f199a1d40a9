// Delta-complexes: cells with ordered face lists, one list per dimension.
// The i-th face of a d-cell is the (d-1)-cell obtained by omitting vertex i,
// and the boundary operator is the alternating sum over face positions.
// Complexes are immutable after construction; all operations are pure.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverhom/bigint.hpp"

namespace coverhom {

struct VertexProvenance {
    int carrier_dim = 0;
    long long carrier_cell = 0;
};

class DeltaComplex {
  public:
    DeltaComplex() = default;

    int dimension() const { return static_cast<int>(faces_.size()); }
    long long cell_count(int d) const;
    long long total_cells() const;

    // d >= 1; returns d+1 face ids into dimension d-1.
    const std::int64_t* faces(int d, long long cell) const {
        return faces_[static_cast<std::size_t>(d) - 1].data() + cell * (d + 1);
    }

    // Vertex j of a cell (0-indexed by position).
    long long vertex_of(int d, long long cell, int j) const;
    std::vector<long long> vertices_of(int d, long long cell) const;

    // Iterated face keeping exactly the positions in `mask` (bitmask over
    // 0..d). mask must be nonempty and within range.
    std::pair<int, long long> face_at_mask(int d, long long cell, unsigned mask) const;

    bool has_provenance() const { return !provenance_.empty(); }
    const VertexProvenance& provenance(long long vertex) const { return provenance_[static_cast<std::size_t>(vertex)]; }

    // Checks face-list shape and that the boundary composes to zero on every
    // cell. Throws std::runtime_error on violation.
    void validate() const;

    // Every cell has pairwise distinct vertices and pairwise distinct faces.
    bool is_regular() const;
    // Regular, plus cells are uniquely determined by their vertex sets.
    bool is_simplicial() const;

    long long euler_characteristic() const;
    int connected_components() const;

    // --- construction ---
    class Builder {
      public:
        explicit Builder(int dim);
        long long add_vertices(long long count);  // returns first id
        long long add_cell(int d, const std::vector<long long>& face_ids);
        void set_provenance(std::vector<VertexProvenance> p) { prov_ = std::move(p); }
        DeltaComplex finish();  // validates

      private:
        int dim_;
        long long n_vertices_ = 0;
        std::vector<std::vector<std::int64_t>> faces_;
        std::vector<VertexProvenance> prov_;
    };

  private:
    long long n_vertices_ = 0;
    // faces_[d-1]: flat array, cell-major, (d+1) entries per d-cell
    std::vector<std::vector<std::int64_t>> faces_;
    std::vector<VertexProvenance> provenance_;
    friend class Builder;
};

// Sparse integer chain in a fixed degree. Terms are sorted by cell id and
// never hold zeros.
struct Chain {
    int degree = 0;
    std::vector<std::pair<long long, Zint>> terms;

    static Chain zero(int degree) { return Chain{degree, {}}; }
    static Chain unit(int degree, long long cell, Zint coeff = Zint(1));
    static Chain from_terms(int degree, std::vector<std::pair<long long, Zint>> t);  // sorts & combines

    bool is_zero() const { return terms.empty(); }
    Zint coeff(long long cell) const;
    Chain operator+(const Chain& o) const;
    Chain operator-(const Chain& o) const;
    Chain operator-() const;
    Chain operator*(const Zint& s) const;
    bool operator==(const Chain& o) const { return degree == o.degree && terms == o.terms; }
};

Chain boundary(const DeltaComplex& x, const Chain& c);

// Cell map with signs: each cell of the source is sent to a target cell with
// a +-1 sign, commuting with the boundary operator. Pure image tables; the
// endpoint complexes are passed where needed.
struct CellMap {
    // image[d][cell] = (target cell, sign)
    std::vector<std::vector<std::pair<long long, std::int8_t>>> image;

    std::pair<long long, std::int8_t> apply(int d, long long cell) const {
        return image[static_cast<std::size_t>(d)][static_cast<std::size_t>(cell)];
    }
    Chain push(const Chain& c) const;
    // chain-map property on every basis cell
    void validate(const DeltaComplex& src, const DeltaComplex& dst) const;
    static CellMap compose(const CellMap& second, const CellMap& first);
    static CellMap identity(const DeltaComplex& x);
};

// Subcomplex given by per-dimension sorted cell id lists.
struct CellSubset {
    std::vector<std::vector<long long>> cells;  // index 0 = vertices

    bool contains(int d, long long cell) const;
    long long count(int d) const;
    static CellSubset support(const Chain& c);
    // Adds all iterated faces of the given cells.
    static CellSubset closure(const DeltaComplex& x, const CellSubset& seed);
    bool is_subcomplex(const DeltaComplex& x) const;
};

// Extracts the subcomplex as its own DeltaComplex along with the inclusion.
struct SubcomplexResult {
    DeltaComplex complex;
    CellMap inclusion;                           // subcomplex -> ambient
    std::vector<std::vector<long long>> to_sub;  // ambient id -> sub id or -1
};
SubcomplexResult extract_subcomplex(const DeltaComplex& x, const CellSubset& s);

}  // namespace coverhom
