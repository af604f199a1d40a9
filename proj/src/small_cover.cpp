#include "coverhom/small_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace coverhom {

SmallCover::SmallCover(const DeltaComplex& k, CharacteristicFunction lambda)
    : k_(&k), lambda_(std::move(lambda)), kb_(subdivide(k)), cone_(cone(kb_.result())) {
    if (lambda_.rank < 1 || lambda_.rank > 20) throw std::invalid_argument("small cover: rank out of range");
    if (auto bad = validate_characteristic(k, lambda_))
        throw std::invalid_argument("small cover: lambda is not characteristic (" + bad->reason + ")");
    if (!k.is_regular()) throw std::invalid_argument("small cover: covered complex must be regular");

    const DeltaComplex& cc = cone_.complex;
    int dim = cc.dimension();
    stab_basis_.resize(static_cast<std::size_t>(dim) + 1);
    stab_pivots_.resize(static_cast<std::size_t>(dim) + 1);
    offsets_.resize(static_cast<std::size_t>(dim) + 1);
    counts_.assign(static_cast<std::size_t>(dim) + 1, 0);

    int r = lambda_.rank;
    for (int d = 0; d <= dim; ++d) {
        long long n = cc.cell_count(d);
        stab_basis_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(n) * r, 0);
        stab_pivots_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(n), 0);
        offsets_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(n) + 1, 0);
        for (long long c = 0; c < n; ++c) {
            Z2Span span;
            if (cone_.is_base_cell(d, c)) {
                auto dec = kb_.decode(d, c);
                unsigned m0 = kb_.flag_masks(dec.carrier_dim, d, dec.local)[0];
                auto [fd, fc] = k.face_at_mask(dec.carrier_dim, dec.carrier, m0);
                auto vs = k.vertices_of(fd, fc);
                for (long long v : vs) span.insert(lambda_.labels[static_cast<std::size_t>(v)]);
            }
            for (std::size_t i = 0; i < span.echelon.size(); ++i)
                stab_basis_[static_cast<std::size_t>(d)][static_cast<std::size_t>(c) * r + i] = span.echelon[i];
            stab_pivots_[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = span.pivot_mask();
            long long cosets = 1ll << (r - span.dim());
            offsets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(c) + 1] =
                offsets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] + cosets;
        }
        counts_[static_cast<std::size_t>(d)] = offsets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(n)];
    }
}

long long SmallCover::cell_count(int d) const {
    if (d < 0 || d > dimension()) return 0;
    return counts_[static_cast<std::size_t>(d)];
}

long long SmallCover::total_cells() const {
    long long t = 0;
    for (int d = 0; d <= dimension(); ++d) t += cell_count(d);
    return t;
}

std::uint32_t SmallCover::reduce_rep(int d, long long cone_cell, std::uint32_t g) const {
    int r = lambda_.rank;
    const std::uint32_t* basis = stab_basis_[static_cast<std::size_t>(d)].data() + cone_cell * r;
    for (int i = 0; i < r && basis[i]; ++i) {
        std::uint32_t lead = 1u << (31 - __builtin_clz(basis[i]));
        if (g & lead) g ^= basis[i];
    }
    return g;
}

std::uint32_t SmallCover::stabilizer_pivots(int d, long long cone_cell) const {
    return stab_pivots_[static_cast<std::size_t>(d)][static_cast<std::size_t>(cone_cell)];
}

std::vector<std::uint32_t> SmallCover::stabilizer_basis(int d, long long cone_cell) const {
    std::vector<std::uint32_t> out;
    const std::uint32_t* basis = stab_basis_[static_cast<std::size_t>(d)].data() + cone_cell * lambda_.rank;
    for (int i = 0; i < lambda_.rank && basis[i]; ++i) out.push_back(basis[i]);
    return out;
}

std::uint32_t SmallCover::free_mask(int d, long long cone_cell) const {
    return ((1u << lambda_.rank) - 1) & ~stab_pivots_[static_cast<std::size_t>(d)][static_cast<std::size_t>(cone_cell)];
}

std::uint32_t SmallCover::compress_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    int pos = 0;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1, ++pos) {
        std::uint32_t low = bits & ~(bits - 1);
        if (value & low) out |= 1u << pos;
    }
    return out;
}

std::uint32_t SmallCover::expand_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    int pos = 0;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1, ++pos) {
        std::uint32_t low = bits & ~(bits - 1);
        if (value & (1u << pos)) out |= low;
    }
    return out;
}

long long SmallCover::cell_of(int d, long long cone_cell, std::uint32_t g) const {
    std::uint32_t rep = reduce_rep(d, cone_cell, g);
    std::uint32_t idx = compress_bits(rep, free_mask(d, cone_cell));
    return offsets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(cone_cell)] + idx;
}

SmallCover::CellInfo SmallCover::info(int d, long long cell) const {
    const auto& off = offsets_[static_cast<std::size_t>(d)];
    auto it = std::upper_bound(off.begin(), off.end(), cell);
    long long cone_cell = static_cast<long long>(it - off.begin()) - 1;
    std::uint32_t idx = static_cast<std::uint32_t>(cell - off[static_cast<std::size_t>(cone_cell)]);
    return {cone_cell, expand_bits(idx, free_mask(d, cone_cell))};
}

Chain SmallCover::boundary_chain(const Chain& c) const {
    if (c.degree <= 0) return Chain::zero(c.degree - 1);
    const DeltaComplex& cc = cone_.complex;
    std::vector<std::pair<long long, Zint>> t;
    t.reserve(c.terms.size() * (static_cast<std::size_t>(c.degree) + 1));
    for (const auto& [cell, v] : c.terms) {
        CellInfo ci = info(c.degree, cell);
        const std::int64_t* f = cc.faces(c.degree, ci.cone_cell);
        for (int i = 0; i <= c.degree; ++i)
            t.push_back({cell_of(c.degree - 1, f[i], ci.coset_rep), (i % 2 == 0) ? v : -v});
    }
    return Chain::from_terms(c.degree - 1, std::move(t));
}

Chain SmallCover::act(std::uint32_t g, const Chain& c) const {
    std::vector<std::pair<long long, Zint>> t;
    t.reserve(c.terms.size());
    for (const auto& [cell, v] : c.terms) {
        CellInfo ci = info(c.degree, cell);
        t.push_back({cell_of(c.degree, ci.cone_cell, ci.coset_rep ^ g), v});
    }
    return Chain::from_terms(c.degree, std::move(t));
}

Chain SmallCover::project(const Chain& c) const {
    std::vector<std::pair<long long, Zint>> t;
    t.reserve(c.terms.size());
    for (const auto& [cell, v] : c.terms) t.push_back({info(c.degree, cell).cone_cell, v});
    return Chain::from_terms(c.degree, std::move(t));
}

Chain SmallCover::lift_chain(const Chain& c_on_kb) const {
    for (const auto& [cell, v] : c_on_kb.terms) {
        (void)v;
        if (!cone_.is_base_cell(c_on_kb.degree, cell))
            throw std::invalid_argument("lift_chain: support outside the base copy");
    }
    Chain coned = cone_.cone_chain(c_on_kb);
    std::vector<std::pair<long long, Zint>> t;
    std::uint32_t order = group_order();
    t.reserve(coned.terms.size() * order);
    for (std::uint32_t g = 0; g < order; ++g) {
        bool odd = __builtin_popcount(g) % 2 == 1;
        for (const auto& [cell, v] : coned.terms)
            t.push_back({cell_of(coned.degree, cell, g), odd ? -v : v});
    }
    return Chain::from_terms(coned.degree, std::move(t));
}

Chain SmallCover::chamber_restriction(const Chain& z) const {
    std::vector<std::pair<long long, Zint>> t;
    for (const auto& [cell, v] : z.terms) {
        CellInfo ci = info(z.degree, cell);
        if (ci.coset_rep == 0) t.push_back({ci.cone_cell, v});
    }
    return Chain::from_terms(z.degree, std::move(t));
}

Chain SmallCover::include_chamber(const Chain& c_on_cone, std::uint32_t g) const {
    std::vector<std::pair<long long, Zint>> t;
    t.reserve(c_on_cone.terms.size());
    for (const auto& [cell, v] : c_on_cone.terms) t.push_back({cell_of(c_on_cone.degree, cell, g), v});
    return Chain::from_terms(c_on_cone.degree, std::move(t));
}

SmallCover::Materialized SmallCover::materialize() const {
    Materialized out;
    int dim = dimension();
    out.cone_cell.resize(static_cast<std::size_t>(dim) + 1);
    out.coset_rep.resize(static_cast<std::size_t>(dim) + 1);
    DeltaComplex::Builder b(dim);
    b.add_vertices(cell_count(0));
    for (int d = 0; d <= dim; ++d) {
        long long n = cell_count(d);
        out.cone_cell[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(n));
        out.coset_rep[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(n));
        for (long long cell = 0; cell < n; ++cell) {
            CellInfo ci = info(d, cell);
            out.cone_cell[static_cast<std::size_t>(d)][static_cast<std::size_t>(cell)] = ci.cone_cell;
            out.coset_rep[static_cast<std::size_t>(d)][static_cast<std::size_t>(cell)] = ci.coset_rep;
            if (d >= 1) {
                std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
                const std::int64_t* f = cone_.complex.faces(d, ci.cone_cell);
                for (int i = 0; i <= d; ++i) fs[static_cast<std::size_t>(i)] = cell_of(d - 1, f[i], ci.coset_rep);
                b.add_cell(d, fs);
            }
        }
    }
    out.complex = b.finish();
    return out;
}

void SmallCover::validate_structure() const {
    const DeltaComplex& cc = cone_.complex;
    int dim = dimension();
    // orbit-stabilizer: every cell's orbit times its coset count is |G|
    for (int d = 0; d <= dim; ++d) {
        for (long long c = 0; c < cc.cell_count(d); ++c) {
            long long cosets = offsets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(c) + 1] -
                               offsets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)];
            std::uint32_t stab = group_order() / static_cast<std::uint32_t>(cosets);
            std::uint32_t pivots = stab_pivots_[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)];
            if ((1u << __builtin_popcount(pivots)) != stab)
                throw std::runtime_error("small cover: orbit-stabilizer mismatch");
            if (cone_.is_base_cell(d, c)) {
                if (stab == 1u) throw std::runtime_error("small cover: base cell with trivial stabilizer");
            } else if (stab != 1u) {
                throw std::runtime_error("small cover: apex-side cell with nontrivial stabilizer");
            }
        }
    }
    // boundary squares to zero on every cell (exhaustive)
    for (int d = 2; d <= dim; ++d) {
        for (long long cell = 0; cell < cell_count(d); ++cell) {
            if (!boundary_chain(boundary_chain(Chain::unit(d, cell))).is_zero())
                throw std::runtime_error("small cover: boundary does not square to zero");
        }
    }
    // the group acts by automorphisms commuting with the projection
    for (int d = 0; d <= dim; ++d) {
        for (long long cell = 0; cell < cell_count(d); ++cell) {
            for (std::uint32_t g = 0; g < group_order(); ++g) {
                Chain moved = act(g, Chain::unit(d, cell));
                if (!(project(moved) == project(Chain::unit(d, cell))))
                    throw std::runtime_error("small cover: action does not commute with projection");
                if (d >= 1) {
                    Chain lhs = boundary_chain(moved);
                    Chain rhs = act(g, boundary_chain(Chain::unit(d, cell)));
                    if (!(lhs == rhs)) throw std::runtime_error("small cover: action is not simplicial");
                }
            }
        }
    }
    // top chamber count: apex-side top cells appear once per group element
    if (dim >= 1) {
        long long top_base = cone_.complex.cell_count(dim);
        if (cell_count(dim) != top_base * static_cast<long long>(group_order()))
            throw std::runtime_error("small cover: top cell count mismatch");
    }
}

Chain CoverMap::push(const Chain& c) const {
    std::vector<std::pair<long long, Zint>> t;
    t.reserve(c.terms.size());
    for (const auto& [cell, v] : c.terms) {
        auto ci = src->info(c.degree, cell);
        auto [img, sign] = cone_map.apply(c.degree, ci.cone_cell);
        t.push_back({dst->cell_of(c.degree, img, ci.coset_rep ^ shift), sign >= 0 ? v : -v});
    }
    return Chain::from_terms(c.degree, std::move(t));
}

CoverMap induced_cover_map(const SmallCover& src, const SmallCover& dst, const CellMap& base_map,
                           std::uint32_t shift) {
    // extend the subdivided-base map over the cones: base cells keep their
    // images, the cone over a cell maps to the cone over its image, apex to
    // apex
    const ConeResult& cs = src.base_cone();
    const ConeResult& cd = dst.base_cone();
    CoverMap out;
    out.src = &src;
    out.dst = &dst;
    out.shift = shift;
    int dim = cs.complex.dimension();
    out.cone_map.image.resize(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        long long n = cs.complex.cell_count(d);
        out.cone_map.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(n));
        for (long long c = 0; c < n; ++c) {
            long long img;
            if (cs.is_base_cell(d, c)) {
                auto [i, s] = base_map.apply(d, c);
                if (s != 1) throw std::invalid_argument("induced_cover_map: base map must be strict");
                img = i;
            } else if (d == 0) {
                img = cd.apex;
            } else {
                long long base_d = d < static_cast<int>(cs.base_count.size()) ? cs.base_count[static_cast<std::size_t>(d)] : 0;
                auto [i, s] = base_map.apply(d - 1, c - base_d);
                if (s != 1) throw std::invalid_argument("induced_cover_map: base map must be strict");
                img = cd.cone_cell(d - 1, i);
            }
            out.cone_map.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = {img, 1};
            // stabilizer spans must agree on base cells
            if (cs.is_base_cell(d, c)) {
                std::uint32_t sp = src.stabilizer_pivots(d, c);
                std::uint32_t dp = dst.stabilizer_pivots(d, img);
                if (__builtin_popcount(sp) != __builtin_popcount(dp))
                    throw std::invalid_argument("induced_cover_map: stabilizer spans differ (incompatible labels)");
                for (std::uint32_t b : src.stabilizer_basis(d, c))
                    if (dst.reduce_rep(d, img, b) != 0)
                        throw std::invalid_argument("induced_cover_map: source stabilizer escapes the target");
            }
        }
    }
    return out;
}

}  // namespace coverhom
