#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coverhom/builders.hpp"
#include "coverhom/homology.hpp"
#include "coverhom/mirror.hpp"
#include "coverhom/small_cover.hpp"
#include "coverhom/subdivision.hpp"

using namespace coverhom;

namespace {

Chain random_base_chain(const SmallCover& m, int d, std::mt19937_64& rng, int max_terms = 5) {
    const DeltaComplex& kb = m.base_subdivision().result();
    std::uniform_int_distribution<long long> cell(0, kb.cell_count(d) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3), nterms(1, max_terms);
    std::vector<std::pair<long long, Zint>> t;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int v = coeff(rng);
        if (v) t.push_back({cell(rng), Zint(v)});
    }
    return Chain::from_terms(d, std::move(t));
}

CharacteristicFunction alternating_c4() {
    CharacteristicFunction f;
    f.rank = 2;
    f.labels = {1u, 2u, 1u, 2u};
    return f;
}

}  // namespace

TEST_CASE("mirror structure") {
    SUBCASE("edge: vertex faces are the opposite halves") {
        DeltaComplex::Builder b(1);
        b.add_vertices(2);
        b.add_cell(1, {1, 0});
        auto e = b.finish();
        auto sd = subdivide(e);
        auto m = mirror_structure(sd);
        // F_v for each vertex is the closed half not containing v: one edge
        // and its endpoints in the subdivision
        for (long long v = 0; v < 2; ++v) {
            CHECK(m.face_dimension(0, v) == 1);
            CHECK(m.face(0, v).count(1) == 1);
        }
        // F_edge is the barycenter
        CHECK(m.face_dimension(1, 0) == 0);
        CHECK(m.face(1, 0).count(0) == 1);
    }
    SUBCASE("C3: vertex faces are arcs, edge faces are vertices") {
        auto c3 = cycle_graph(3);
        auto sd = subdivide(c3);
        auto m = mirror_structure(sd);
        for (long long v = 0; v < 3; ++v) {
            CHECK(m.face_dimension(0, v) == 1);
            CHECK(m.face(0, v).count(1) == 2);  // arc of C6 opposite to v
        }
        for (long long e = 0; e < 3; ++e) CHECK(m.face_dimension(1, e) == 0);
    }
    SUBCASE("boundary of the tetrahedron: dimensions are complementary") {
        auto s2 = simplex_boundary(3);
        auto sd = subdivide(s2);
        auto m = mirror_structure(sd);
        int n = 2;
        for (int d = 0; d <= 2; ++d)
            for (long long c = 0; c < s2.cell_count(d); ++c) CHECK(m.face_dimension(d, c) == n - d);
        // mirror faces are genuine subcomplexes
        for (long long v = 0; v < 4; ++v) CHECK(m.face(0, v).is_subcomplex(sd.result()));
    }
}

TEST_CASE("characteristic functions") {
    SUBCASE("the provenance folding on a subdivision validates") {
        for (auto make : {+[] { return cycle_graph(3); }, +[] { return simplex_boundary(3); }}) {
            DeltaComplex x = make();
            auto sd = subdivide(x);
            auto f = folding_characteristic(sd.result(), x.dimension() + 1);
            CHECK(f.is_folding());
            CHECK(!validate_characteristic(sd.result(), f).has_value());
        }
    }
    SUBCASE("constant labels violate at an edge") {
        auto sd = subdivide(cycle_graph(3));
        CharacteristicFunction f;
        f.rank = 2;
        f.labels.assign(static_cast<std::size_t>(sd.result().cell_count(0)), 1u);
        auto bad = validate_characteristic(sd.result(), f);
        REQUIRE(bad.has_value());
        CHECK(bad->dim == 1);
    }
    SUBCASE("alternating labels on C6 validate") {
        auto sd = subdivide(cycle_graph(3));  // C6 with provenance
        auto f = folding_characteristic(sd.result(), 2);
        CHECK(!validate_characteristic(sd.result(), f).has_value());
        // alternating basis vectors by construction
        for (long long v = 0; v < 6; ++v) CHECK((f.labels[static_cast<std::size_t>(v)] == 1u ||
                                                 f.labels[static_cast<std::size_t>(v)] == 2u));
    }
}

TEST_CASE("folding map") {
    SUBCASE("C6 folds onto the 1-simplex") {
        auto sd = subdivide(cycle_graph(3));
        auto f = folding_characteristic(sd.result(), 2);
        auto fm = folding_map(sd.result(), f);
        CHECK(fm.target.dimension() == 1);
        fm.map.validate(sd.result(), fm.target);
        // every edge maps onto the unique edge of the target
        for (long long e = 0; e < sd.result().cell_count(1); ++e) CHECK(fm.map.apply(1, e).first == 0);
    }
    SUBCASE("subdivided boundary of a tetrahedron folds onto the 2-simplex") {
        auto sd = subdivide(simplex_boundary(3));
        auto f = folding_characteristic(sd.result(), 3);
        auto fm = folding_map(sd.result(), f);
        CHECK(fm.target.dimension() == 2);
        fm.map.validate(sd.result(), fm.target);
    }
}

TEST_CASE("small cover of a point: a segment through two chambers") {
    auto pt = single_point();
    CharacteristicFunction f;
    f.rank = 1;
    f.labels = {1u};
    SmallCover m(pt, f);
    m.validate_structure();
    CHECK(m.cell_count(0) == 3);  // the glued base vertex and two apexes
    CHECK(m.cell_count(1) == 2);
    auto mat = m.materialize();
    CHECK(mat.complex.connected_components() == 1);
    auto h0 = homology(mat.complex, 0);
    CHECK(h0.rank == 1);
}

TEST_CASE("small cover of C4 with alternating labels is a torus") {
    auto c4 = cycle_graph(4);
    SmallCover m(c4, alternating_c4());
    m.validate_structure();
    // 16 vertices, 48 edges, 32 triangles: a closed surface with chi = 0
    CHECK(m.cell_count(0) == 16);
    CHECK(m.cell_count(1) == 48);
    CHECK(m.cell_count(2) == 32);
    auto mat = m.materialize();
    CHECK(mat.complex.euler_characteristic() == 0);
    auto z = fundamental_cycle(mat.complex, 2);
    REQUIRE(z.has_value());  // closed and orientable
    auto h1 = homology(mat.complex, 1);
    CHECK(h1.rank == 2);
    CHECK(h1.torsion.empty());
    auto h0 = homology(mat.complex, 0);
    CHECK(h0.rank == 1);
}

TEST_CASE("small cover of the subdivided tetrahedron boundary is orientable") {
    auto s2 = simplex_boundary(3);
    auto sd = subdivide(s2);
    auto f = folding_characteristic(sd.result(), 3);
    SmallCover m(sd.result(), f);
    m.validate_structure();
    CHECK(m.cell_count(3) == 8 * 144);
    auto mat = m.materialize();
    auto z = fundamental_cycle(mat.complex, 3);
    REQUIRE(z.has_value());
    CHECK(boundary(mat.complex, *z).is_zero());
    // the signed lift of the base fundamental cycle is a fundamental cycle
    auto zb = fundamental_cycle(sd.result(), 2);
    REQUIRE(zb.has_value());
    Chain lifted = m.lift_chain(m.base_subdivision().subdivide_chain(*zb));
    CHECK(m.boundary_chain(lifted).is_zero());
    // same top cells up to a global sign
    Chain sum = lifted - *z;
    Chain diff = lifted + *z;
    CHECK((sum.is_zero() || diff.is_zero()));
}

TEST_CASE("no base-copy cell appears in the boundary of a lift") {
    std::mt19937_64 rng(31);
    std::vector<SmallCover> fixtures;
    auto c4 = cycle_graph(4);
    fixtures.emplace_back(c4, alternating_c4());
    auto s2 = simplex_boundary(3);
    auto sd = subdivide(s2);
    fixtures.emplace_back(sd.result(), folding_characteristic(sd.result(), 3));
    for (auto& m : fixtures) {
        int n = m.covered().dimension();
        for (int trial = 0; trial < 100; ++trial) {
            for (int d = 1; d <= n; ++d) {
                Chain c = random_base_chain(m, d, rng);
                Chain bd = m.boundary_chain(m.lift_chain(c));
                // base-copy coefficients all vanish, in every chamber
                Chain based = Chain::zero(d);
                for (const auto& [cell, v] : bd.terms) {
                    auto ci = m.info(d, cell);
                    if (m.base_cone().is_base_cell(d, ci.cone_cell)) based.terms.push_back({cell, v});
                }
                CHECK(based.is_zero());
                // full identity: the boundary of a lift is minus the lift of
                // the boundary (apex-first cone convention)
                CHECK(bd == -m.lift_chain(boundary(m.base_subdivision().result(), c)));
            }
        }
        // a lifted cycle is a cycle
        auto zb = fundamental_cycle(m.base_subdivision().result(), n);
        REQUIRE(zb.has_value());
        CHECK(m.boundary_chain(m.lift_chain(*zb)).is_zero());
    }
}

TEST_CASE("translates of a lift pick up the chamber parity sign") {
    auto c4 = cycle_graph(4);
    SmallCover m(c4, alternating_c4());
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        Chain c = random_base_chain(m, 1, rng);
        Chain lift = m.lift_chain(c);
        for (std::uint32_t g = 0; g < m.group_order(); ++g) {
            Chain moved = m.act(g, lift);
            Chain expect = (__builtin_popcount(g) % 2 == 0) ? lift : -lift;
            CHECK(moved == expect);
        }
    }
}

TEST_CASE("chamber restriction of a lift is the cone chain") {
    auto c4 = cycle_graph(4);
    SmallCover m(c4, alternating_c4());
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        Chain c = random_base_chain(m, 1, rng);
        Chain restricted = m.chamber_restriction(m.lift_chain(c));
        CHECK(restricted == m.base_cone().cone_chain(c));
    }
}

TEST_CASE("induced cover maps") {
    auto c4 = cycle_graph(4);
    SmallCover m(c4, alternating_c4());
    SUBCASE("identity with zero shift is the identity") {
        CellMap id = CellMap::identity(m.base_subdivision().result());
        CoverMap f = induced_cover_map(m, m, id, 0);
        std::mt19937_64 rng(35);
        for (int trial = 0; trial < 20; ++trial) {
            Chain c = random_base_chain(m, 1, rng);
            Chain l = m.lift_chain(c);
            CHECK(f.push(l) == l);
        }
    }
    SUBCASE("shifting by g acts like g") {
        CellMap id = CellMap::identity(m.base_subdivision().result());
        for (std::uint32_t g = 0; g < 4; ++g) {
            CoverMap f = induced_cover_map(m, m, id, g);
            std::mt19937_64 rng(36);
            Chain c = random_base_chain(m, 1, rng);
            Chain l = m.lift_chain(c);
            CHECK(f.push(l) == m.act(g, l));
        }
    }
    SUBCASE("functoriality: composing shifts adds them") {
        CellMap id = CellMap::identity(m.base_subdivision().result());
        CoverMap f1 = induced_cover_map(m, m, id, 1);
        CoverMap f2 = induced_cover_map(m, m, id, 2);
        CoverMap f3 = induced_cover_map(m, m, id, 3);
        std::mt19937_64 rng(37);
        Chain c = random_base_chain(m, 1, rng);
        Chain l = m.lift_chain(c);
        CHECK(f2.push(f1.push(l)) == f3.push(l));
    }
    SUBCASE("a subcomplex inclusion induces an injective cover map") {
        // half of C4: the path 0-1-2 inside the square
        auto c4b = cycle_graph(4);
        CellSubset seed;
        seed.cells.resize(2);
        seed.cells[1] = {0, 1};  // edges [0,1], [1,2]
        auto closed = CellSubset::closure(c4b, seed);
        auto ex = extract_subcomplex(c4b, closed);
        CharacteristicFunction sub_lambda;
        sub_lambda.rank = 2;
        sub_lambda.labels.resize(3);
        for (long long v = 0; v < 3; ++v)
            sub_lambda.labels[static_cast<std::size_t>(v)] =
                alternating_c4().labels[static_cast<std::size_t>(closed.cells[0][static_cast<std::size_t>(v)])];
        SmallCover msub(ex.complex, sub_lambda);
        auto sd_sub = subdivide(ex.complex);
        auto sd_amb = subdivide(c4b);
        CellMap incl_b = Subdivision::induced_map_strict(ex.inclusion, msub.base_subdivision(), m.base_subdivision());
        CoverMap f = induced_cover_map(msub, m, incl_b, 0);
        // injective on cells: distinct unit chains stay distinct
        std::set<long long> images;
        for (long long cell = 0; cell < msub.cell_count(1); ++cell) {
            Chain img = f.push(Chain::unit(1, cell));
            REQUIRE(img.terms.size() == 1);
            CHECK(images.insert(img.terms[0].first).second);
        }
        // compatible with boundaries
        std::mt19937_64 rng(38);
        for (int trial = 0; trial < 20; ++trial) {
            Chain c = random_base_chain(msub, 1, rng);
            Chain l = msub.lift_chain(c);
            CHECK(f.push(msub.boundary_chain(l)) == m.boundary_chain(f.push(l)));
        }
    }
}

TEST_CASE("a non-injective strict base map induces a cover map compatible with lifts") {
    // the gluing projection of the twisted family: prism over a subdivided
    // circle, top glued to bottom through the induced reflection
    auto b = simplex_boundary(2);
    std::vector<long long> img = {1, 0, 2};
    auto h = build_simplicial_map(b, b, img);
    auto sdb = subdivide(b);
    CellMap hb = Subdivision::induced_map(h, sdb, sdb);
    auto p = prism(sdb.result());
    CellMap glued_bottom = CellMap::compose(p.bottom, hb);
    auto q = quotient(p.complex, identifications_from_maps(p.top, glued_bottom));

    // covers of the prism complex and of the quotient, with the dimension
    // foldings of their own subdivisions (compatible through q)
    auto sd_p = subdivide(p.complex);
    auto sd_l = subdivide(q.complex);
    SmallCover cover_p(sd_p.result(), folding_characteristic(sd_p.result(), 3));
    SmallCover cover_l(sd_l.result(), folding_characteristic(sd_l.result(), 3));
    CellMap qb = Subdivision::induced_map_strict(q.projection, sd_p, sd_l);
    CellMap qbb = Subdivision::induced_map_strict(qb, cover_p.base_subdivision(), cover_l.base_subdivision());
    CoverMap mq = induced_cover_map(cover_p, cover_l, qbb, 0);

    // pushing a lift equals lifting the pushforward
    std::mt19937_64 rng(39);
    for (int trial = 0; trial < 25; ++trial) {
        for (int d = 1; d <= 2; ++d) {
            Chain c = random_base_chain(cover_p, d, rng);
            Chain lhs = mq.push(cover_p.lift_chain(c));
            Chain rhs = cover_l.lift_chain(qbb.push(c));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("quotient by the group action recovers the base cone") {
    auto c4 = cycle_graph(4);
    SmallCover m(c4, alternating_c4());
    // projection is onto and fiber sizes are |G| / |Stab|
    const DeltaComplex& cc = m.base_cone().complex;
    for (int d = 0; d <= m.dimension(); ++d) {
        std::vector<long long> fiber(static_cast<std::size_t>(cc.cell_count(d)), 0);
        for (long long cell = 0; cell < m.cell_count(d); ++cell)
            ++fiber[static_cast<std::size_t>(m.info(d, cell).cone_cell)];
        for (long long c = 0; c < cc.cell_count(d); ++c) {
            CHECK(fiber[static_cast<std::size_t>(c)] > 0);
            std::uint32_t stab_size = 1u << __builtin_popcount(m.stabilizer_pivots(d, c));
            CHECK(fiber[static_cast<std::size_t>(c)] == m.group_order() / stab_size);
        }
    }
}
