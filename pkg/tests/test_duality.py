import random

import pytest

from plchain.chain_algebra import (coboundary_map, cohomology_of_pair, connecting_map, induced_map,
                                   unit_cochain)
from plchain.complex_core import Subcomplex, build_complex
from plchain.corpus import generate
from plchain.duality import (DualityError, complement_connecting, complement_inclusion, dold_duality,
                             dold_sign, flag_model, flag_to_disjoint, fundamental_class_over,
                             gm_duality, gm_duality_collapsed, restriction_cohomology)
from plchain.pl_chains import subdivide_space
from plchain.stratified import FilteredPseudomanifold


def hexagon():
    return FilteredPseudomanifold(build_complex([[i, (i + 1) % 6] for i in range(6)]))


def random_triple(rng, T, S, k=7):
    cl = lambda s: Subcomplex.closure(T, s)
    K = cl(rng.sample(T.simplices(T.dim), k)) | S
    L = cl(rng.sample(sorted(K.simplices), 3)) | S
    J = cl(rng.sample(sorted(L.simplices), 1)) | S
    return K, L, J


def test_sign_table():
    assert [dold_sign(i, 2) for i in range(3)] == [1, 1, 1]
    assert [dold_sign(i, 3) for i in range(4)] == [1, -1, 1, -1]


def test_dold_on_twice_derived_triangle():
    X = subdivide_space(subdivide_space(generate("simplex 2").X))
    T = X.complex
    cof = T.cofaces()
    outer = Subcomplex.closure(T, [e for e in T.simplices(1) if sum(len(t) == 3 for t in cof[e]) == 1])
    v = next(v for v in range(T.num_vertices) if (v,) not in outer.simplices)
    K = Subcomplex.closure(T, [(v,)])
    D = dold_duality(X, outer, K, Subcomplex.empty(T), 0)
    assert D.source.ngens == D.target.ngens == 1
    assert D.matrix in ([[1]], [[-1]])


def test_dold_rejects_k_meeting_s():
    sp = generate("pinched-torus")
    T = sp.complex
    with pytest.raises(DualityError):
        dold_duality(sp.X, sp.X.singular, T.full(), Subcomplex.empty(T), 0)


def test_gm_on_hexagon():
    X = hexagon()
    T = X.complex
    E = Subcomplex.empty(T)
    D = gm_duality(X, None, T.full(), E, 1)
    assert D.source.ngens == D.target.ngens == 1 and D.is_isomorphism()
    assert len(D.target.generators[0]) == 1
    D0 = gm_duality(X, None, T.full(), E, 0)
    assert D0.is_isomorphism()
    gen = D0.target.generators[0]
    assert len(gen) == 6 and set(map(abs, gen.values())) == {1}


@pytest.mark.parametrize("i", [0, 1])
def test_literal_and_collapsed_agree_on_hexagon(i):
    X = hexagon()
    T = X.complex
    E = Subcomplex.empty(T)
    a = gm_duality(X, None, T.full(), E, i)
    b = gm_duality_collapsed(X, None, T.full(), E, i)
    assert (a.map @ flag_to_disjoint(X, None, T.full(), E, i)).equals(b.map)


@pytest.mark.parametrize("name", ["torus2", "pinched-torus"])
def test_literal_and_collapsed_agree(name):
    rng = random.Random(4)
    X = generate(name).X
    T, S = X.complex, X.singular
    for _ in range(2):
        K, L, _ = random_triple(rng, T, S, 6)
        for i in range(3):
            a = gm_duality(X, S, K, L, i)
            b = gm_duality_collapsed(X, S, K, L, i)
            assert (a.map @ flag_to_disjoint(X, S, K, L, i)).equals(b.map)
            assert b.is_isomorphism()


def test_suspension_unit_goes_to_relative_fundamental_class():
    X = generate("suspension(torus2)").X
    T, S = X.complex, X.singular
    D = gm_duality_collapsed(X, S, T.full(), S, 0)
    model = flag_model(X, S)
    one = unit_cochain(model.Tp)
    img = D.target.element(D.map(D.source.coords(one)))
    gamma = X.fundamental_chain()
    assert img in (gamma, {s: -v for s, v in gamma.items()})
    assert D.is_isomorphism()


def test_out_of_range_degrees_are_zero():
    X = generate("torus2").X
    T = X.complex
    E = Subcomplex.empty(T)
    for i in (-1, 3):
        assert gm_duality_collapsed(X, None, T.full(), E, i).map.is_zero()
        assert dold_duality(X, None, T.full(), E, i).map.is_zero()


def test_fundamental_class_over_subcomplex():
    sp = generate("torus2")
    K = Subcomplex.closure(sp.complex, [(0, 1)])
    F = fundamental_class_over(sp.X, None, K)
    assert F.group.rank == 1 and F.coords in ([1], [-1])


def test_dold_squares_on_torus():
    rng = random.Random(1)
    X = generate("torus2").X
    T, n = X.complex, X.n
    E = Subcomplex.empty(T)
    model = flag_model(X, E)
    for _ in range(3):
        K, L, J = random_triple(rng, T, E, 6)
        for i in range(2):
            lhs = dold_duality(X, E, K, L, i + 1).map @ coboundary_map(T, (K, L, J), i)
            rhs = complement_connecting(model, J, L, K, n - i) @ dold_duality(X, E, L, J, i).map
            assert lhs.equals(rhs.scaled((-1) ** n))
        K2 = K | Subcomplex.closure(T, rng.sample(T.simplices(2), 3))
        L2 = L | Subcomplex.closure(T, rng.sample(sorted(K2.simplices), 2))
        for i in range(3):
            D, D2 = dold_duality(X, E, K, L, i), dold_duality(X, E, K2, L2, i)
            res = restriction_cohomology(T, (K2, L2), (K, L), i)
            inc = complement_inclusion(model, (L2, K2), (L, K), n - i)
            assert (D.map @ res).equals(inc @ D2.map)


@pytest.mark.parametrize("name", ["torus2", "pinched-torus"])
def test_gm_squares(name):
    rng = random.Random(2)
    X = generate(name).X
    T, n, S = X.complex, X.n, X.singular
    model = flag_model(X, S)
    for _ in range(3):
        K, L, J = random_triple(rng, T, S)
        for i in range(2):
            d = coboundary_map(model.Tp, (model.complement(J), model.complement(L), model.complement(K)), i)
            lhs = gm_duality_collapsed(X, S, L, J, i + 1).map @ d
            rhs = connecting_map(T, (K, L, J), n - i) @ gm_duality_collapsed(X, S, K, L, i).map
            assert lhs.equals(rhs.scaled((-1) ** n))
        K2 = K | Subcomplex.closure(T, rng.sample(T.simplices(2), 3))
        L2 = L | Subcomplex.closure(T, rng.sample(sorted(K2.simplices), 2))
        for i in range(3):
            D, D2 = gm_duality_collapsed(X, S, K, L, i), gm_duality_collapsed(X, S, K2, L2, i)
            res = induced_map(cohomology_of_pair(model.Tp, model.complement(L), model.complement(K), i),
                              cohomology_of_pair(model.Tp, model.complement(L2), model.complement(K2), i))
            assert (D2.map @ res).equals(induced_map(D.target, D2.target) @ D.map)


def test_s_independence_on_pinched_torus():
    rng = random.Random(6)
    X = generate("pinched-torus").X
    T, S = X.complex, X.singular
    for _ in range(3):
        K, L, _ = random_triple(rng, T, S)
        for i in range(3):
            a = gm_duality_collapsed(X, S, K, L, i)
            b = gm_duality_collapsed(X, L, K, L, i)
            assert a.map.equals(b.map)


def test_gm_requires_nesting():
    X = generate("torus2").X
    T = X.complex
    K = Subcomplex.closure(T, [(0, 1)])
    with pytest.raises(DualityError):
        gm_duality_collapsed(X, None, K, T.full(), 0)
