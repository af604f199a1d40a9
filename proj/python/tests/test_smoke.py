import coverhom


def test_homology_of_cycle():
    c6 = coverhom.cycle_graph(6)
    h1 = coverhom.homology(c6, 1)
    assert h1["rank"] == 1
    assert h1["torsion"] == []
    assert h1["pretty"] == "Z"


def test_snf():
    assert coverhom.smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert coverhom.smith_normal_form([[0, 0], [0, 0]]) == []


def test_builders_compose():
    two_points = coverhom.simplex_boundary(1)
    s2 = coverhom.join_complexes(coverhom.cycle_graph(3), two_points)
    assert s2.euler_characteristic == 2
    h2 = coverhom.homology(s2, 2)
    assert h2["rank"] == 1
    sd = coverhom.subdivide(s2)
    assert sd.is_simplicial
    assert coverhom.homology(sd, 2)["rank"] == 1


def test_normal_form():
    # two commuting generators: the commutator dies
    assert coverhom.normal_form(2, [(0, 1)], [0, 1, 0, 1]) == []
    # no relation: the word survives
    assert coverhom.normal_form(2, [], [0, 1, 0, 1]) == [0, 1, 0, 1]


def test_bundle_roundtrip(tmp_path):
    b = coverhom.build_twisted_bundle(2)
    assert b.k == 2
    path = tmp_path / "bundle.txt"
    coverhom.write_bundle(b, str(path))
    b2 = coverhom.read_bundle(str(path))
    assert b2.n == b.n and b2.k == b.k and b2.cells == b.cells


def test_full_verification_small():
    b = coverhom.build_twisted_bundle(2)
    report = coverhom.verify(b, seed=5)
    assert report["ok"]
    statuses = {c["name"]: c["status"] for c in report["checks"]}
    assert statuses["torsion-class-order"] == "pass"
    order = {
        k: v
        for c in report["checks"]
        if c["name"] == "torsion-class-order"
        for k, v in c["values"].items()
    }
    assert order["order"] == "2"


def test_moore_builder_self_checks():
    # the builder itself asserts boundary(D) = 3*S and order([S]) = 3
    b = coverhom.build_moore_instance(3, 3)
    assert b.k == 3
    assert b.n == 3
