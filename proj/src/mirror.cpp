#include "coverhom/mirror.hpp"

#include <algorithm>
#include <stdexcept>

namespace coverhom {

void Z2Span::insert(std::uint32_t v) {
    v = reduce(v);
    if (!v) return;
    echelon.push_back(v);
    std::sort(echelon.rbegin(), echelon.rend());
    // re-echelonize: clear each vector's leading bit from the ones above
    for (std::size_t i = 0; i < echelon.size(); ++i)
        for (std::size_t j = i + 1; j < echelon.size(); ++j) {
            std::uint32_t lead = 1u << (31 - __builtin_clz(echelon[j]));
            if (echelon[i] & lead) echelon[i] ^= echelon[j];
        }
    std::sort(echelon.rbegin(), echelon.rend());
}

std::uint32_t Z2Span::reduce(std::uint32_t v) const {
    for (std::uint32_t b : echelon) {
        std::uint32_t lead = 1u << (31 - __builtin_clz(b));
        if (v & lead) v ^= b;
    }
    return v;
}

std::uint32_t Z2Span::pivot_mask() const {
    std::uint32_t m = 0;
    for (std::uint32_t b : echelon) m |= 1u << (31 - __builtin_clz(b));
    return m;
}

bool CharacteristicFunction::is_folding() const {
    for (std::uint32_t v : labels)
        if (v == 0 || (v & (v - 1)) != 0) return false;
    return true;
}

int CharacteristicFunction::basis_index(long long vertex) const {
    std::uint32_t v = labels[static_cast<std::size_t>(vertex)];
    if (v == 0 || (v & (v - 1)) != 0) throw std::runtime_error("label is not a basis vector");
    return __builtin_ctz(v);
}

CharacteristicFunction folding_characteristic(const DeltaComplex& k, int rank) {
    if (!k.has_provenance()) throw std::invalid_argument("folding_characteristic: provenance required");
    CharacteristicFunction f;
    f.rank = rank;
    f.labels.resize(static_cast<std::size_t>(k.cell_count(0)));
    for (long long v = 0; v < k.cell_count(0); ++v) {
        int d = k.provenance(v).carrier_dim;
        if (d >= rank) throw std::invalid_argument("folding_characteristic: rank too small for the provenance dims");
        f.labels[static_cast<std::size_t>(v)] = 1u << d;
    }
    return f;
}

int MirrorStructure::face_dimension(int d, long long cell) const {
    const CellSubset& s = face(d, cell);
    int dim = -1;
    for (int k = 0; k < static_cast<int>(s.cells.size()); ++k)
        if (!s.cells[static_cast<std::size_t>(k)].empty()) dim = k;
    return dim;
}

MirrorStructure mirror_structure(const Subdivision& k_sub) {
    const DeltaComplex& k = k_sub.base();
    const DeltaComplex& kb = k_sub.result();
    MirrorStructure out;
    out.face_of.resize(static_cast<std::size_t>(k.dimension()) + 1);
    for (int d = 0; d <= k.dimension(); ++d)
        out.face_of[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(k.cell_count(d)));
    // A subdivision cell lies in F_sigma iff sigma is an iterated face of its
    // minimal flag element.
    for (int bd = 0; bd <= kb.dimension(); ++bd) {
        for (long long cell = 0; cell < kb.cell_count(bd); ++cell) {
            auto dec = k_sub.decode(bd, cell);
            unsigned m0 = k_sub.flag_masks(dec.carrier_dim, bd, dec.local)[0];
            for (unsigned sub = m0;; sub = (sub - 1) & m0) {
                if (sub) {
                    auto [fd, fc] = k.face_at_mask(dec.carrier_dim, dec.carrier, sub);
                    auto& subset = out.face_of[static_cast<std::size_t>(fd)][static_cast<std::size_t>(fc)];
                    if (static_cast<int>(subset.cells.size()) <= bd) subset.cells.resize(static_cast<std::size_t>(bd) + 1);
                    subset.cells[static_cast<std::size_t>(bd)].push_back(cell);
                }
                if (sub == 0) break;
            }
        }
    }
    for (auto& row : out.face_of)
        for (auto& s : row)
            for (auto& v : s.cells) {
                std::sort(v.begin(), v.end());
                v.erase(std::unique(v.begin(), v.end()), v.end());
            }
    return out;
}

std::optional<CharacteristicViolation> validate_characteristic(const DeltaComplex& k,
                                                               const CharacteristicFunction& lambda) {
    if (static_cast<long long>(lambda.labels.size()) != k.cell_count(0))
        return CharacteristicViolation{0, 0, "label count does not match vertex count"};
    bool folding = lambda.is_folding();
    for (int d = 0; d <= k.dimension(); ++d) {
        for (long long c = 0; c < k.cell_count(d); ++c) {
            auto vs = k.vertices_of(d, c);
            Z2Span span;
            for (long long v : vs) span.insert(lambda.labels[static_cast<std::size_t>(v)]);
            if (span.dim() != d + 1)
                return CharacteristicViolation{d, c, "span dimension " + std::to_string(span.dim()) +
                                                         " on a cell of dimension " + std::to_string(d)};
            if (folding && d == 1 &&
                lambda.labels[static_cast<std::size_t>(vs[0])] == lambda.labels[static_cast<std::size_t>(vs[1])])
                return CharacteristicViolation{d, c, "incident vertices share a folding label"};
        }
    }
    return std::nullopt;
}

FoldingMapResult folding_map(const DeltaComplex& k, const CharacteristicFunction& lambda) {
    if (!lambda.is_folding()) throw std::invalid_argument("folding_map: labels must be basis vectors");
    if (auto bad = validate_characteristic(k, lambda))
        throw std::invalid_argument("folding_map: not characteristic (" + bad->reason + ")");
    FoldingMapResult out;
    out.target = simplex(lambda.rank - 1);
    std::vector<long long> img(static_cast<std::size_t>(k.cell_count(0)));
    for (long long v = 0; v < k.cell_count(0); ++v) img[static_cast<std::size_t>(v)] = lambda.basis_index(v);
    out.map = build_simplicial_map(k, out.target, img).as_cellmap();
    return out;
}

}  // namespace coverhom
