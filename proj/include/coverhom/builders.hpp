// Constructions on Delta-complexes: standard simplices, cycle graphs, joins,
// cones, prisms, disjoint unions and quotients by cell identifications.
#pragma once

#include <vector>

#include "coverhom/delta_complex.hpp"

namespace coverhom {

DeltaComplex simplex(int n);           // full n-simplex with all faces
DeltaComplex simplex_boundary(int n);  // triangulated S^{n-1}, n >= 1
DeltaComplex cycle_graph(int m);       // m >= 3
DeltaComplex single_point();

struct ConeResult {
    DeltaComplex complex;
    long long apex = 0;
    std::vector<long long> base_count;  // base cells per dimension; they keep their ids

    // Cone cell over a base d-cell, living in dimension d+1 (apex-first).
    long long cone_cell(int base_dim, long long cell) const {
        int d = base_dim + 1;
        long long base_d = d < static_cast<int>(base_count.size()) ? base_count[static_cast<std::size_t>(d)] : 0;
        return base_d + cell;
    }
    bool is_base_cell(int d, long long cell) const {
        long long n = d < static_cast<int>(base_count.size()) ? base_count[static_cast<std::size_t>(d)] : 0;
        return cell < n;
    }
    // Apex-first cone on chains: boundary(cone_chain(c)) = c - cone_chain(boundary c)
    Chain cone_chain(const Chain& base_chain) const;
    Chain restrict_to_base(const Chain& c) const;  // keep base cells only
    CellSubset base_subset() const;
};
ConeResult cone(const DeltaComplex& x);

struct PrismResult {
    DeltaComplex complex;  // staircase triangulation of x X [0,1]
    CellMap bottom, top;   // strict inclusions of x
    // boundary(prism_chain(c)) = top(c) - bottom(c) - prism_chain(boundary c)
    Chain prism_chain(const Chain& c) const;

    // stair cell j over a base d-cell, j in [0, d]
    std::vector<std::vector<long long>> stair_ids;  // [d][cell*(d+1)+j]
};
PrismResult prism(const DeltaComplex& x);  // x must be simplicial with ascending vertex tuples

// Assembles a simplicial complex from explicit ascending vertex tuples; the
// family must be closed under taking subsets of the given tuples.
DeltaComplex simplicial_from_tuples(long long n_vertices, const std::vector<std::vector<long long>>& cells);

struct DisjointUnionResult {
    DeltaComplex complex;
    CellMap left, right;  // strict inclusions
};
DisjointUnionResult disjoint_union(const DeltaComplex& x, const DeltaComplex& y);

// Join X * Y: cells are the cells of X, the cells of Y, and sigma*tau with
// X-positions before Y-positions.
struct JoinResult {
    DeltaComplex complex;
    CellMap left, right;  // strict inclusions of X and of Y
    long long join_cell(int dx, long long cx, int dy, long long cy) const;
    std::vector<std::vector<long long>> join_offset;  // [d][dx] -> base offset
    std::vector<long long> y_cells;                   // y cell counts per dim
};
JoinResult join(const DeltaComplex& x, const DeltaComplex& y);

// Quotient by the closure of strictly face-compatible cell identifications.
struct Identification {
    int dim = 0;
    long long a = 0, b = 0;
};
struct QuotientResult {
    DeltaComplex complex;
    CellMap projection;  // ambient -> quotient, all signs +1
};
QuotientResult quotient(const DeltaComplex& x, const std::vector<Identification>& ids);

// Identifies image(f) with image(g) cellwise: f and g must be strict
// injective cell maps out of the same source.
std::vector<Identification> identifications_from_maps(const CellMap& f, const CellMap& g);

// Simplicial vertex map data: every cell maps to a cell of the same
// dimension (vertex-injective on each cell); records the sort permutation.
struct SimplicialMap {
    std::vector<long long> vertex_image;
    std::vector<std::vector<long long>> cell_image;          // per dim
    std::vector<std::vector<std::uint32_t>> perm;            // packed: nibble per position
    CellMap as_cellmap() const;                              // sign = permutation parity

    int position_image(int d, long long cell, int pos) const {
        return static_cast<int>((perm[static_cast<std::size_t>(d)][static_cast<std::size_t>(cell)] >> (4 * pos)) & 0xf);
    }
};
SimplicialMap build_simplicial_map(const DeltaComplex& src, const DeltaComplex& dst,
                                   const std::vector<long long>& vertex_image);

}  // namespace coverhom
