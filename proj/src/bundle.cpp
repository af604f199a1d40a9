#include "coverhom/bundle.hpp"

#include <cmath>
#include <stdexcept>

#include "coverhom/builders.hpp"
#include "coverhom/homology.hpp"
#include "coverhom/subdivision.hpp"

namespace coverhom {

namespace {

Zint order_of_cycle(const DeltaComplex& l, const Chain& z) {
    auto h = homology(l, z.degree);
    auto ord = order_of_class(z, h);
    if (!ord) throw std::runtime_error("instance self-check: the built cycle has infinite order");
    return *ord;
}

}  // namespace

InstanceBundle build_twisted_bundle(int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("build_twisted_bundle: n must be 2 or 3");
    auto b = simplex_boundary(n);
    // vertex transposition (0 1): an orientation-reversing automorphism
    std::vector<long long> img(static_cast<std::size_t>(n) + 1);
    for (long long v = 0; v <= n; ++v) img[static_cast<std::size_t>(v)] = v;
    img[0] = 1;
    img[1] = 0;
    auto h = build_simplicial_map(b, b, img);
    auto sdb = subdivide(b);
    CellMap hb = Subdivision::induced_map(h, sdb, sdb);

    auto zb_raw = fundamental_cycle(b, n - 1);
    if (!zb_raw) throw std::runtime_error("build_twisted_bundle: sphere is not orientable?");
    Chain zb = sdb.subdivide_chain(*zb_raw);
    if (!(hb.push(zb) == -zb))
        throw std::runtime_error("build_twisted_bundle: gluing automorphism does not reverse orientation");

    auto p = prism(sdb.result());
    CellMap glued_bottom = CellMap::compose(p.bottom, hb);  // c -> bottom(h(c))
    auto q = quotient(p.complex, identifications_from_maps(p.top, glued_bottom));

    InstanceBundle out;
    out.n = n;
    out.k = 2;
    out.provenance = "twisted n=" + std::to_string(n);
    out.S = q.projection.push(p.bottom.push(zb));
    out.D = -(q.projection.push(p.prism_chain(zb)));
    out.L = std::move(q.complex);

    if (!boundary(out.L, out.S).is_zero()) throw std::runtime_error("build_twisted_bundle: S is not a cycle");
    if (!(boundary(out.L, *out.D) == out.S * Zint(2)))
        throw std::runtime_error("build_twisted_bundle: boundary(D) != 2*S");
    Zint ord = order_of_cycle(out.L, out.S);
    if (ord != Zint(2))
        throw std::runtime_error("build_twisted_bundle: order of [S] is " + ord.to_string() + ", expected 2");
    if (n == 2)
        out.notes.push_back(
            "n = 2 exercises the machinery below the dimension where the torsion-generator statement is proved; "
            "the computed order is reported as-is");
    return out;
}

InstanceBundle build_moore_instance(int n, long long k, long long max_cells) {
    if (n < 3) throw std::invalid_argument("build_moore_instance: n >= 3");
    if (k < 2) throw std::invalid_argument("build_moore_instance: k >= 2");
    // top-cell estimate of the eventual cover: chambers * (subdivision of the
    // subdivided mapping cone)
    double est = std::pow(2.0, n + 1) * 6.0 * static_cast<double>(k) *
                 [](int m) {
                     double f = 1;
                     for (int i = 2; i <= m + 1; ++i) f *= i;
                     return f * f;
                 }(n);
    if (est > static_cast<double>(max_cells) * 64.0)
        throw std::invalid_argument("build_moore_instance: estimated cover size " + std::to_string(static_cast<long long>(est)) +
                                    " exceeds the cell cap; raise max_cells to force");

    auto circle_big = cycle_graph(3 * static_cast<int>(k));
    auto circle_small = cycle_graph(3);
    auto sphere_factor = simplex_boundary(n - 2);
    auto big = join(circle_big, sphere_factor);
    auto small = join(circle_small, sphere_factor);

    // wrap * identity on vertices
    std::vector<long long> img(static_cast<std::size_t>(big.complex.cell_count(0)));
    for (long long i = 0; i < 3 * k; ++i) img[static_cast<std::size_t>(i)] = i % 3;
    for (long long j = 0; j < sphere_factor.cell_count(0); ++j)
        img[static_cast<std::size_t>(3 * k + j)] = 3 + j;
    auto f = build_simplicial_map(big.complex, small.complex, img);

    auto sd_big = subdivide(big.complex);
    auto sd_small = subdivide(small.complex);
    CellMap fb = Subdivision::induced_map(f, sd_big, sd_small);

    auto zbig_raw = fundamental_cycle(big.complex, n - 1);
    auto zsmall_raw = fundamental_cycle(small.complex, n - 1);
    if (!zbig_raw || !zsmall_raw) throw std::runtime_error("build_moore_instance: join sphere not orientable?");
    Chain zbig = sd_big.subdivide_chain(*zbig_raw);
    Chain zsmall = sd_small.subdivide_chain(*zsmall_raw);

    Chain pushed = fb.push(zbig);
    if (pushed == zsmall * Zint(-k)) {
        zsmall = -zsmall;
    } else if (!(pushed == zsmall * Zint(k))) {
        throw std::runtime_error("build_moore_instance: wrap does not have chain-level degree k");
    }

    auto cb = cone(sd_big.result());
    auto du = disjoint_union(cb.complex, sd_small.result());

    // base copy of the subdivided big sphere keeps its ids inside the cone
    CellMap base_side, image_side;
    int bd = sd_big.result().dimension();
    base_side.image.resize(static_cast<std::size_t>(bd) + 1);
    image_side.image.resize(static_cast<std::size_t>(bd) + 1);
    for (int d = 0; d <= bd; ++d) {
        long long nc = sd_big.result().cell_count(d);
        base_side.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(nc));
        image_side.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(nc));
        for (long long c = 0; c < nc; ++c) {
            base_side.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = du.left.apply(d, c);
            image_side.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] =
                du.right.apply(d, fb.apply(d, c).first);
        }
    }
    auto q = quotient(du.complex, identifications_from_maps(base_side, image_side));

    InstanceBundle out;
    out.n = n;
    out.k = k;
    out.provenance = "moore n=" + std::to_string(n) + " k=" + std::to_string(k);
    out.S = q.projection.push(du.right.push(zsmall));
    out.D = q.projection.push(du.left.push(cb.cone_chain(zbig)));
    out.L = std::move(q.complex);

    if (!boundary(out.L, out.S).is_zero()) throw std::runtime_error("build_moore_instance: S is not a cycle");
    if (!(boundary(out.L, *out.D) == out.S * Zint(k)))
        throw std::runtime_error("build_moore_instance: boundary(D) != k*S");
    Zint ord = order_of_cycle(out.L, out.S);
    if (ord != Zint(k))
        throw std::runtime_error("build_moore_instance: order of [S] is " + ord.to_string() + ", expected " +
                                 std::to_string(k));
    return out;
}

std::optional<std::string> bundle_problems(const InstanceBundle& b) {
    if (b.n < 1 || b.n != b.L.dimension()) return "dimension n does not match the complex";
    if (b.k < 1) return "k must be positive";
    if (b.S.degree != b.n - 1) return "S must have degree n-1";
    Chain bs = boundary(b.L, b.S);
    if (!bs.is_zero()) return "S is not a cycle (boundary has " + std::to_string(bs.terms.size()) + " cells)";
    for (const auto& [cell, v] : b.S.terms) {
        (void)cell;
        if (!v.abs().is_one()) return "S has a coefficient other than +-1";
    }
    if (b.D) {
        if (b.D->degree != b.n) return "D must have degree n";
        Chain residual = boundary(b.L, *b.D) - b.S * Zint(b.k);
        if (!residual.is_zero())
            return "boundary(D) - k*S is nonzero (residual supported on " + std::to_string(residual.terms.size()) +
                   " cells)";
    }
    // support of S: closed orientable pseudomanifold
    auto closed = CellSubset::closure(b.L, CellSubset::support(b.S));
    auto ex = extract_subcomplex(b.L, closed);
    Chain local = Chain::zero(b.n - 1);
    for (const auto& [cell, v] : b.S.terms)
        local.terms.push_back({ex.to_sub[static_cast<std::size_t>(b.n) - 1][static_cast<std::size_t>(cell)], v});
    local = Chain::from_terms(b.n - 1, std::move(local.terms));
    PseudomanifoldViolation viol;
    std::optional<Chain> fc;
    try {
        fc = fundamental_cycle(ex.complex, b.n - 1, &viol);
    } catch (const std::exception& e) {
        return std::string("support of S is not a closed pseudomanifold: ") + e.what();
    }
    if (!fc) return "support of S is not orientable";
    if (!(local == *fc || local == -*fc)) return "S is not a fundamental cycle of its support";
    return std::nullopt;
}

InstanceBundle derive_witness(InstanceBundle b) {
    Chain target = b.S * Zint(b.k);
    auto w = solve_boundary(b.L, target);
    if (!w) {
        auto h = homology(b.L, b.n - 1);
        auto ord = order_of_class(b.S, h);
        std::string o = ord ? ord->to_string() : "infinite";
        throw std::runtime_error("derive_witness: k*S is not a boundary; the order of [S] is " + o);
    }
    if (!(boundary(b.L, *w) == target)) throw std::runtime_error("derive_witness: solver returned a bad witness");
    b.D = std::move(*w);
    return b;
}

}  // namespace coverhom
