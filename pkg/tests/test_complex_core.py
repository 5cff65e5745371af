import pytest

from plchain.chain_algebra import simplicial_boundary
from plchain.complex_core import (ComplexError, NonOrientableError, Subcomplex, barycentric_subdivision,
                                  build_complex, iterated_subdivision, make_full, neighborhoods,
                                  orient, product_triangulation, push_subcomplex, shuffle_product,
                                  validate_pseudomanifold)
from plchain.corpus import generate
from plchain.stratified import FilteredPseudomanifold


def tetra_boundary():
    return build_complex([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def test_face_counts():
    assert len(build_complex([[0, 1, 2]])) == 7
    assert len(tetra_boundary()) == 14


def test_duplicate_vertex_rejected():
    with pytest.raises(ComplexError):
        build_complex([[0, 0, 1]])


def test_vertex_order_checks():
    with pytest.raises(ComplexError):
        build_complex([["a", "b"]], ["a"])
    with pytest.raises(ComplexError):
        build_complex([["a", "b"]], ["a", "b", "c"])


@pytest.mark.parametrize("facets,tops", [
    ([[0, 1]], 2),
    ([[0, 1, 2]], 6),
    ([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], 24),
])
def test_subdivision_counts(facets, tops):
    K = build_complex(facets)
    Kp = barycentric_subdivision(K)
    assert len(Kp.simplices(K.dim)) == tops
    assert Kp.lineage.parent is K


def test_subdivision_is_cached_and_flags_sorted():
    K = tetra_boundary()
    Kp = barycentric_subdivision(K)
    assert barycentric_subdivision(K) is Kp
    vc = Kp.lineage.vertex_carrier
    for s in Kp.simplices():
        chain = [vc[v] for v in s]
        assert all(set(a) < set(b) for a, b in zip(chain, chain[1:]))
        assert Kp.lineage.carrier[s] == chain[-1]


def test_push_subcomplex_covers_same_set():
    K = tetra_boundary()
    A = Subcomplex.closure(K, [(0, 1)])
    K2 = iterated_subdivision(K, 2)
    A2 = push_subcomplex(A, K2)
    assert len(A2.of_dim(1)) == 4
    assert A2.dim == 1


def test_neighborhoods_vertex_of_triangle_boundary():
    K = build_complex([[0, 1], [1, 2], [0, 2]])
    Z = Subcomplex.closure(K, [(0,)])
    C, N, frontier = neighborhoods(K, Z)
    assert C.simplices == frozenset({(1,), (2,), (1, 2)})
    assert Z.complex is K and N.dim == 1
    assert len(frontier.of_dim(0)) == 2


def test_neighborhood_of_whole_complex():
    K = build_complex([[0, 1, 2]])
    C, N, frontier = neighborhoods(K, K.full())
    assert not C.simplices
    assert len(N) == len(N.complex)


def test_make_full():
    K = build_complex([[0, 1]])
    Z = Subcomplex.closure(K, [(0,), (1,)])
    assert not Z.is_full()
    K1, Z1 = make_full(K, Z)
    assert K1 is not K and Z1.is_full() and len(Z1) == 2
    full = Subcomplex.closure(K, [(0, 1)])
    assert make_full(K, full) == (K, full)


def test_make_full_three_vertices_of_triangle_boundary():
    K = build_complex([[0, 1], [1, 2], [0, 2]])
    Z = Subcomplex.closure(K, [(0,), (1,), (2,)])
    K1, Z1 = make_full(K, Z)
    assert Z1.is_full()


def test_product_counts_and_diagonal():
    e = build_complex([[0, 1]])
    t = build_complex([[0, 1, 2]])
    P = product_triangulation(e, e)
    assert len(P.total.simplices(2)) == 2
    d = (P.vertex_id(0, 0), P.vertex_id(1, 1))
    assert d in P.total and d in P.diagonal.simplices
    assert len(product_triangulation(t, e).total.simplices(3)) == 3


def test_edge_cross_edge():
    e = build_complex([[0, 1]])
    P = product_triangulation(e, e)
    x = shuffle_product(P, {(0, 1): 1}, {(0, 1): 1})
    assert sorted(x.values()) == [-1, 1]
    assert set(x) == set(P.total.simplices(2))


def test_cross_product_leibniz():
    sp = generate("torus2")
    T = sp.complex
    P = product_triangulation(T, T)
    a = {(0, 1): 1, (1, 3): -2}
    b = {(0, 1, 3): 1, (2, 4, 5): 3}
    lhs = simplicial_boundary(shuffle_product(P, a, b))
    rhs = shuffle_product(P, simplicial_boundary(a), b)
    for s, v in shuffle_product(P, a, simplicial_boundary(b)).items():
        rhs[s] = rhs.get(s, 0) - v
    assert lhs == {s: v for s, v in rhs.items() if v}


def test_orient_sphere_and_projective_plane():
    signs = orient(tetra_boundary())
    assert len(signs) == 4
    with pytest.raises(NonOrientableError) as info:
        orient(generate("projplane").complex)
    assert len(info.value.witness) >= 2
    assert orient(build_complex([[0, 1, 2]])) == {(0, 1, 2): 1}


def test_validate_pseudomanifold():
    assert validate_pseudomanifold(FilteredPseudomanifold(tetra_boundary()))
    rep = validate_pseudomanifold(FilteredPseudomanifold(build_complex([[0, 1, 2]])))
    assert not rep and len(rep.violations) == 3
    assert generate("suspension(torus2)").X.validate()
