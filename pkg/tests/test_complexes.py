import pytest

from relatorlab.complexes import (
    AttachingPath,
    DirectedEdge,
    TwoComplex,
    based_power,
    complex_from_json,
    complex_to_json,
    components,
    cyclically_equal,
    euler_characteristic,
    fundamental_group_presentation,
    max_power,
    subdivide_edge,
    validate,
)


def point():
    return TwoComplex({0})


def circle():
    return TwoComplex({0}, {0: (0, 0)})


def disk():
    return TwoComplex({0}, {0: (0, 0)}, {0: [(0, 1)]})


def torus_complex():
    return TwoComplex(
        {0},
        {0: (0, 0), 1: (0, 0)},
        {0: [(0, 1), (1, 1), (0, -1), (1, -1)]},
    )


def test_validate_trivial_cases():
    assert validate(point()).ok
    bad_edge = TwoComplex({0}, {0: (0, 5)})
    rep = validate(bad_edge)
    assert not rep.ok
    assert rep.violations[0].kind == "edge"
    assert rep.violations[0].subject == 0

    open_cell = TwoComplex({0, 1}, {0: (0, 1)}, {0: [(0, 1)]})
    rep = validate(open_cell)
    assert [v.subject for v in rep.violations] == [0]
    assert "closed" in rep.violations[0].detail


def test_euler_characteristic():
    assert euler_characteristic(point()) == 1
    assert euler_characteristic(circle()) == 0
    assert euler_characteristic(disk()) == 1
    with pytest.raises(ValueError):
        euler_characteristic(TwoComplex({0}, {0: (0, 9)}))


def test_components():
    assert len(components(circle())) == 1
    two = TwoComplex({0, 1}, {0: (0, 0), 1: (1, 1)})
    parts = components(two)
    assert len(parts) == 2
    assert parts[0].vertices == frozenset({0})
    joined = TwoComplex({0, 1}, {0: (0, 0), 1: (1, 1), 2: (0, 1)})
    assert len(components(joined)) == 1
    # idempotence: recomputing on any part returns that part
    for part in parts:
        again = components(part)
        assert len(again) == 1
        assert again[0] == part


def test_subdivide_circle():
    K2, mid, (h1, h2) = subdivide_edge(circle(), 0)
    assert len(K2.vertices) == 2 and len(K2.edges) == 2
    assert euler_characteristic(K2) == 0
    # both halves leave the midpoint
    assert K2.edges[h1][0] == mid and K2.edges[h2][0] == mid


def test_subdivide_disk_path_rewritten():
    K2, mid, (h1, h2) = subdivide_edge(disk(), 0)
    assert euler_characteristic(K2) == 1
    path = K2.cells[0].edges
    assert len(path) == 2
    assert K2.path_is_closed(path)
    assert path == (DirectedEdge(h1, -1), DirectedEdge(h2, 1))


def test_subdivide_preserves_euler_and_components():
    for K in [circle(), disk(), torus_complex()]:
        before = euler_characteristic(K), len(components(K))
        for e in list(K.edges):
            K2, _, _ = subdivide_edge(K, e)
            assert euler_characteristic(K2) == before[0]
            assert len(components(K2)) == before[1]


def test_subdivide_rotation_tracks_basepoint():
    K = TwoComplex(
        {0},
        {0: (0, 0), 1: (0, 0)},
        {0: AttachingPath([(0, 1), (1, 1)], rotation=1)},
    )
    K2, _, _ = subdivide_edge(K, 0)
    p = K2.cells[0]
    # letter 1 of the old path starts at rewritten index 2
    assert p.rotation == 2
    assert p.edges[p.rotation] == DirectedEdge(1, 1)


def test_presentations():
    pres = fundamental_group_presentation(circle(), 0)
    assert pres.generator_count == 1 and pres.relators == ()

    pres = fundamental_group_presentation(disk(), 0)
    assert pres.generators == (0,)
    assert pres.relators == ((DirectedEdge(0, 1),),)

    pres = fundamental_group_presentation(torus_complex(), 0)
    assert pres.generators == (0, 1)
    assert pres.relators == (
        (
            DirectedEdge(0, 1),
            DirectedEdge(1, 1),
            DirectedEdge(0, -1),
            DirectedEdge(1, -1),
        ),
    )


def test_presentation_generator_count_is_skeleton_betti():
    K = TwoComplex({0, 1, 2}, {0: (0, 1), 1: (1, 2), 2: (2, 0), 3: (0, 2)})
    pres = fundamental_group_presentation(K, 0)
    comp = components(K)[0]
    assert pres.generator_count == len(comp.edges) - len(comp.vertices) + 1


def test_cyclic_helpers():
    p = tuple(DirectedEdge(*d) for d in [(0, 1), (1, 1), (2, 1)])
    q = tuple(DirectedEdge(*d) for d in [(1, 1), (2, 1), (0, 1)])
    assert cyclically_equal(p, q)
    r = tuple(DirectedEdge(*d) for d in [(2, -1), (1, -1), (0, -1)])
    assert cyclically_equal(p, r)
    assert not cyclically_equal(p, r, both_orientations=False)
    w = tuple(DirectedEdge(*d) for d in [(0, 1), (1, 1)] * 3)
    assert based_power(w, 3) and based_power(w, 1) and not based_power(w, 2)
    assert max_power(w) == 3


def test_json_round_trip_byte_stable():
    K = torus_complex()
    text = complex_to_json(K)
    again = complex_to_json(complex_from_json(text))
    assert text == again
    assert complex_from_json(text) == K
