// Barycentric subdivision of Delta-complexes.
//
// A subdivision cell over a carrier m-cell is a strictly increasing chain of
// nonempty position subsets M_0 < ... < M_d ending at the full set {0..m};
// its vertices are the barycenters of the iterated faces at the M_i, ordered
// by increasing dimension. This carries self-incident cells correctly (a
// loop subdivides into a bigon) and makes two subdivisions of anything
// simplicial.
#pragma once

#include <cstdint>
#include <vector>

#include "coverhom/builders.hpp"
#include "coverhom/delta_complex.hpp"

namespace coverhom {

class Subdivision {
  public:
    const DeltaComplex& base() const { return *base_; }
    const DeltaComplex& result() const { return result_; }

    // Cell id of a flag; masks are bitmasks over carrier positions, strictly
    // increasing, ending at the full mask of the carrier.
    long long flag_cell(int carrier_dim, long long carrier, const std::vector<unsigned>& masks) const;

    // Barycenter vertex of a base cell.
    long long barycenter(int carrier_dim, long long carrier) const;

    // Subdivision chain map: cycles map to cycles, fundamental classes to
    // fundamental classes, and flatten(subdivide(c)) == c on the nose.
    Chain subdivide_chain(const Chain& c) const;

    // Last-vertex retraction chain map result() -> base().
    Chain flatten_chain(const Chain& c) const;

    // Decode a subdivision cell into (carrier_dim, carrier, local flag index).
    struct Decoded {
        int carrier_dim;
        long long carrier;
        long long local;
    };
    Decoded decode(int d, long long cell) const;
    const std::vector<unsigned>& flag_masks(int carrier_dim, int d, long long local) const;

    // Induced map on subdivisions of a simplicial map (flags transport along
    // the per-cell position permutation; the result is strict, all signs +1).
    static CellMap induced_map(const SimplicialMap& h, const Subdivision& sx, const Subdivision& sy);
    // Same for a strict cell map (identity permutations).
    static CellMap induced_map_strict(const CellMap& h, const Subdivision& sx, const Subdivision& sy);

  private:
    friend Subdivision subdivide(const DeltaComplex&);
    const DeltaComplex* base_ = nullptr;
    DeltaComplex result_;

    // Flag tables shared by all carriers of one dimension m:
    // flags_[m][d] = list of mask chains (length d+1) ending at full.
    struct FlagFace {
        // i < d faces: local index in (m, d-1); the d-face changes carrier:
        long long local_drop[8];       // i < d
        unsigned keep_mask;            // mask of M_{d-1} (for the i = d face)
        long long compressed_local;    // local index within the smaller carrier dim
    };
    std::vector<std::vector<std::vector<std::vector<unsigned>>>> flags_;  // [m][d][local] = masks
    std::vector<std::vector<std::vector<FlagFace>>> flag_faces_;          // [m][d][local]
    std::vector<std::vector<std::pair<long long, int>>> sd_table_;  // [m] = (local top flag, sign)
    // flatten: [m][d][local] -> keep mask (0 when degenerate)
    std::vector<std::vector<std::vector<unsigned>>> flatten_mask_;
    // id layout: cell id = offset_[d][m] + carrier * count(m,d) + local
    std::vector<std::vector<long long>> offset_;  // [d][m]
    std::vector<std::vector<long long>> count_;   // [m][d] flag count

    long long cell_id(int m, long long carrier, int d, long long local) const {
        return offset_[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)] +
               carrier * count_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)] + local;
    }
};

Subdivision subdivide(const DeltaComplex& x);

}  // namespace coverhom
