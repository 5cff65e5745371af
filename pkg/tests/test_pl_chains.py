import pytest

from plchain.chain_algebra import connecting_map, homology_of_pair, simplicial_boundary
from plchain.complex_core import Subcomplex, barycentric_subdivision, build_complex, push_subcomplex
from plchain.corpus import generate
from plchain.pl_chains import (ChainError, PLChain, chain_from_class, coefficient_at,
                               subdivide_chain, subdivide_space, support)


def test_edge_subdivides_to_two_edges():
    K = build_complex([[0, 1]])
    Kp = barycentric_subdivision(K)
    out = subdivide_chain(PLChain(K, 1, {(0, 1): 1}), Kp)
    assert len(out.coeffs) == 2 and sorted(out.coeffs.values()) == [-1, 1]
    # the barycenter cancels in the boundary
    assert {Kp.labels[s[0]] for s in out.boundary().coeffs} == {0, 1}
    assert {Kp.labels[v] for s in out.coeffs for v in s} == {0, 1, "b(0,1)"}


def test_subdivision_commutes_with_boundary():
    K = build_complex([[0, 1, 2]])
    K2 = barycentric_subdivision(barycentric_subdivision(K))
    xi = PLChain(K, 1, {(0, 1): 1, (1, 2): 1, (0, 2): -1})
    assert subdivide_chain(xi, K2).boundary() == subdivide_chain(xi.boundary(), K2)
    tri = PLChain(K, 2, {(0, 1, 2): 1})
    assert subdivide_chain(tri, K2).boundary() == subdivide_chain(tri.boundary(), K2)


def test_torus_fundamental_cycle_subdivides_coherently():
    sp = generate("torus2")
    Xp = subdivide_space(sp.X)
    G = PLChain(sp.complex, 2, sp.X.fundamental_chain())
    Gp = subdivide_chain(G, Xp.complex)
    assert not simplicial_boundary(Gp.coeffs)
    assert len(Gp.coeffs) == 84
    signs = Xp.orientation
    s0 = next(iter(Gp.coeffs))
    flip = Gp.coeffs[s0] * signs[s0]
    assert all(Gp.coeffs[s] == flip * signs[s] for s in Gp.coeffs)


def test_equality_across_refinement():
    sp = generate("torus2")
    Kp = barycentric_subdivision(sp.complex)
    m = PLChain(sp.complex, 1, sp.chain("meridian")[1])
    assert m == subdivide_chain(m, Kp)
    assert (m + m) == 2 * m
    assert (m - m).is_zero()


def test_support_is_subdivision_invariant():
    sp = generate("torus2")
    K = sp.complex
    K2 = barycentric_subdivision(barycentric_subdivision(K))
    m = PLChain(K, 1, sp.chain("meridian")[1])
    assert support(subdivide_chain(m, K2)).simplices == push_subcomplex(support(m), K2).simplices


def test_relative_support_ignores_modulus():
    sp = generate("pinched-torus")
    deg, ch = sp.chain("longitude")
    xi = PLChain(sp.complex, deg, ch)
    full = support(xi)
    rel = support(xi, sp.X.singular)
    assert rel <= full and rel.dim == 1


def test_chain_from_class_interval():
    K = build_complex([[0, 1]])
    A = K.full()
    B = Subcomplex.closure(K, [(0,), (1,)])
    H = homology_of_pair(K, A, B, 1)
    out = chain_from_class(A, B, H, [1], 1)
    assert list(out.coeffs) == [(0, 1)] and abs(out.coeffs[(0, 1)]) == 1


def test_chain_from_class_torus():
    sp = generate("torus2")
    K = sp.complex
    H = homology_of_pair(K, None, None, 2)
    out = chain_from_class(K.full(), None, H, [1], 2)
    assert len(out.coeffs) == 14
    G = sp.X.fundamental_chain()
    assert out.coeffs in (G, {s: -v for s, v in G.items()})


def test_chain_from_class_dimension_check():
    K = build_complex([[0, 1, 2]])
    A = K.full()
    H = homology_of_pair(K, A, None, 1)
    with pytest.raises(ChainError):
        chain_from_class(A, None, H, [], 1)


def test_chain_from_class_degenerate_pair():
    K = build_complex([[0, 1]])
    A = K.full()
    assert chain_from_class(A, A, homology_of_pair(K, A, A, 1), [], 1).is_zero()


def test_coefficient_round_trip():
    sp = generate("torus2")
    K = sp.complex
    H = homology_of_pair(K, None, None, 2)
    G = chain_from_class(K.full(), None, H, [1], 2)
    for s in K.simplices(2):
        assert coefficient_at(K.full(), None, H, [1], s) == G.coeffs[s]


def test_coefficient_off_cycle_is_zero():
    sp = generate("torus2")
    K = sp.complex
    m = sp.chain("meridian")[1]
    A = support(PLChain(K, 1, m)) | Subcomplex.closure(K, [(2, 3)])
    H = homology_of_pair(K, A, None, 1)
    assert coefficient_at(A, None, H, H.coords(m), (2, 3)) == 0
    assert abs(coefficient_at(A, None, H, H.coords(m), (0, 1))) == 1


def test_boundary_compatibility_of_class_chains():
    K = build_complex([[0, 1, 2]])
    A = K.full()
    B = Subcomplex.closure(K, [(0, 1), (1, 2), (0, 2)])
    C = Subcomplex.closure(K, [(0,), (1,), (2,)])
    HA = homology_of_pair(K, A, B, 2)
    HB = homology_of_pair(K, B, C, 1)
    d = connecting_map(K, (A, B, C), 2)
    xi = chain_from_class(A, B, HA, [1], 2, mode="alphabar", C=C)
    lhs = chain_from_class(B, C, HB, d([1]), 1, mode="alphabar")
    rhs = {s: v for s, v in simplicial_boundary(xi.coeffs).items() if s not in C.simplices}
    assert lhs.coeffs == rhs
