"""Duality isomorphisms as explicit integer matrices.

Open sets are modelled inside the first derived subdivision T' of a
triangulation T.  A simplex of T' is a flag τ0 < ... < τk of simplices of T;
for a subcomplex Z of T the flags with τ0 outside Z form a subcomplex A_Z of
T' that is a deformation retract of |T| - |Z| (no fullness needed, the flags
with τ0 ∉ Z are an up-closed family).  Cap products against the subdivided
fundamental chain Γ' then land directly in these complement models.

Sign conventions: δ is the transpose of ∂ and the cap product takes the cochain
on the back face (see ``chain_algebra.cap_product``).  The unsigned duality map
is normalised to commute with connecting homomorphisms; the signed maps
multiply it by (-1)^{in}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chain_algebra import (AlgebraError, GroupMap, GroupPresentation, add_into, cap_product,
                            cohomology_of_pair, homology_of_pair, induced_map, map_from_chain_map,
                            simplicial_boundary)
from .complex_core import (ComplexError, SimplicialComplex, Subcomplex, barycentric_subdivision,
                           lineage_chain, neighborhoods, push_subcomplex)
from .pl_chains import PLChain, subdivide_chain, subdivide_once, subdivide_simplex, subdivide_space
from .stratified import FilteredPseudomanifold


class DualityError(ComplexError):
    pass


# sign constants

def unsigned_factor(p: int, n: int) -> int:
    """s_p with s_p·(α ⌢ Γ) commuting with connecting maps (back-face cap)."""
    return -1 if (p * n - p * (p - 1) // 2) % 2 else 1


def unsigned_factor_front(p: int) -> int:
    """Same normalisation for the cap that evaluates on the front face."""
    return -1 if (p * (p + 1) // 2) % 2 else 1


def dold_sign(i: int, n: int) -> int:
    return -1 if (i * n) % 2 else 1


def cap_front(alpha: dict, p: int, chain: dict) -> dict:
    """α(front p-face)·(back face)."""
    out = {}
    for s, c in chain.items():
        a = alpha.get(s[:p + 1], 0)
        if a:
            f = s[p:]
            nv = out.get(f, 0) + a * c
            if nv:
                out[f] = nv
            else:
                out.pop(f, None)
    return out


# complement models

class FlagModel:
    """T' together with Γ' and the complement subcomplexes A_Z."""

    def __init__(self, T: SimplicialComplex, gamma: dict, n: int):
        self.T = T
        self.n = n
        self.gamma = gamma
        self.Tp = barycentric_subdivision(T)
        self.carrier = self.Tp.lineage.vertex_carrier
        self.gamma_p = subdivide_once(self.Tp, gamma)
        self._cache = {}

    def complement(self, Z) -> Subcomplex:
        """A_Z: flags whose smallest element is not in Z."""
        zs = frozenset(Z.simplices if isinstance(Z, Subcomplex) else Z)
        if zs not in self._cache:
            car = self.carrier
            self._cache[zs] = Subcomplex(self.Tp, frozenset(
                s for s in self.Tp.simplices() if car[s[0]] not in zs))
        return self._cache[zs]

    def sd(self, A: Subcomplex) -> Subcomplex:
        return push_subcomplex(A, self.Tp)


def oriented_chain(X: FilteredPseudomanifold, S: Subcomplex) -> dict:
    """Γ for X - S, after checking that X - S is an oriented n-manifold combinatorially."""
    K, n = X.complex, X.n
    sset = S.simplices
    cof = K.cofaces()
    for f in K.simplices(n - 1):
        if f in sset:
            continue
        tops = [t for t in cof[f] if len(t) == n + 1]
        if len(tops) != 2:
            raise DualityError(f"X - S is not a manifold near {K.label_simplex(f)}")
    try:
        gamma = X.fundamental_chain()
    except ComplexError as e:
        raise DualityError(f"regular part is not orientable: {e}") from e
    bad = [f for f in simplicial_boundary(gamma) if f not in sset]
    if bad:
        raise DualityError(f"orientation is not coherent across {K.label_simplex(bad[0])}")
    return gamma


def flag_model(X: FilteredPseudomanifold, S: Subcomplex | None = None) -> FlagModel:
    S = S if S is not None else Subcomplex.empty(X.complex)
    key = ("flag", S.simplices)
    cache = X.__dict__.setdefault("_flag_models", {})
    if key not in cache:
        cache[key] = FlagModel(X.complex, oriented_chain(X, S), X.n)
    return cache[key]


# subdivision isomorphisms

def _steps(coarse: SimplicialComplex, fine: SimplicialComplex) -> list:
    chain = lineage_chain(fine)
    if coarse not in chain:
        raise DualityError("not a refinement in the lineage")
    return chain[:chain.index(coarse)]


def pullback_cochain(coarse: SimplicialComplex, fine: SimplicialComplex, beta: dict, k: int) -> dict:
    """(sd^* β)(σ) = β(sd σ), iterated down the lineage."""
    for Kf in _steps(coarse, fine):
        parent = Kf.lineage.parent
        out = {}
        for s in parent.simplices(k) if k <= parent.dim else ():
            v = sum(c * beta.get(f, 0) for f, c in subdivide_simplex(Kf, s).items())
            if v:
                out[s] = v
        beta = out
    return beta


def homology_subdivision(coarse, fine, A, B, k) -> GroupMap:
    """H_k(A, B) on ``coarse`` → H_k(sd A, sd B) on ``fine``."""
    src = homology_of_pair(coarse, A, B, k)
    tgt = homology_of_pair(fine, _push(A, fine), _push(B, fine), k)
    return map_from_chain_map(src, tgt,
                              lambda ch: subdivide_chain(PLChain(coarse, k, ch), fine).coeffs)


def cohomology_subdivision(coarse, fine, A, B, k) -> GroupMap:
    """H^k(A, B) on ``coarse`` → H^k(sd A, sd B) on ``fine`` (inverse of sd^*)."""
    src = cohomology_of_pair(coarse, A, B, k)
    tgt = cohomology_of_pair(fine, _push(A, fine), _push(B, fine), k)
    back = map_from_chain_map(tgt, src, lambda co: pullback_cochain(coarse, fine, co, k))
    return back.inverse()


def _push(A, fine):
    return None if A is None else push_subcomplex(A, fine)


# fundamental classes

@dataclass
class FundamentalClassOver:
    X: FilteredPseudomanifold
    S: Subcomplex
    K: Subcomplex
    complex: SimplicialComplex
    representative: dict
    neighborhood: Subcomplex
    frontier: Subcomplex
    group: GroupPresentation
    coords: list

    def complement_class(self, model: FlagModel | None = None):
        """Γ_K in H_n(M, M - K) through the complement models (A_S, A_{K∪S})."""
        model = model or flag_model(self.X, self.S)
        A = model.complement(self.S)
        B = model.complement(self.K | self.S)
        H = homology_of_pair(model.Tp, A, B, self.X.n)
        return H, H.coords(model.gamma_p)


def fundamental_class_over(X: FilteredPseudomanifold, S: Subcomplex | None, K: Subcomplex) -> FundamentalClassOver:
    """Γ restricted to the regular neighbourhood of K, as a relative cycle."""
    T = X.complex
    S = S if S is not None else Subcomplex.empty(T)
    if K.simplices & S.simplices:
        raise DualityError("K meets S")
    gamma = oriented_chain(X, S)
    if not K.is_full():
        T1 = barycentric_subdivision(T)
        K1 = push_subcomplex(K, T1)
    else:
        T1, K1 = T, K
    _, N, fr = neighborhoods(T1, K1)
    T2 = N.complex
    rep = subdivide_chain(PLChain(T, X.n, gamma), T2).coeffs
    rep = {s: v for s, v in rep.items() if s in N.simplices}
    stray = [f for f in simplicial_boundary(rep) if f not in fr.simplices]
    if stray:
        raise DualityError("representative is not a relative cycle")
    H = homology_of_pair(T2, N, fr, X.n)
    return FundamentalClassOver(X, S, K, T2, rep, N, fr, H, H.coords(rep))


# duality maps

@dataclass
class DualityMap:
    map: GroupMap
    kind: str
    degree: int
    sign: int
    pairs: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def source(self) -> GroupPresentation:
        return self.map.source

    @property
    def target(self) -> GroupPresentation:
        return self.map.target

    @property
    def matrix(self) -> list:
        return self.map.normalized()

    def is_isomorphism(self) -> bool:
        return self.map.is_isomorphism()


def _check_nested(inner: Subcomplex, outer: Subcomplex, what: str):
    if not inner <= outer:
        raise DualityError(what)


def dold_duality(X: FilteredPseudomanifold, S: Subcomplex | None, K: Subcomplex, L: Subcomplex,
                 i: int) -> DualityMap:
    """𝔇: H^i(K, L) → H_{n-i}(M - L, M - K) with M = X - S.

    The target pair is presented by the complement models (A_{L∪S}, A_{K∪S})
    in the first derived subdivision.
    """
    T, n = X.complex, X.n
    S = S if S is not None else Subcomplex.empty(T)
    _check_nested(L, K, "L is not contained in K")
    if K.simplices & S.simplices:
        raise DualityError("K is not compact in X - S (it meets S)")
    model = flag_model(X, S)
    A, B = model.complement(L | S), model.complement(K | S)
    src = cohomology_of_pair(T, K, L, i)
    tgt = homology_of_pair(model.Tp, A, B, n - i)
    sign = dold_sign(i, n)
    pairs = {"source": ("K", "L"), "target": ("M-L", "M-K")}
    if not (0 <= i <= n):
        M = [[0] * src.ngens for _ in range(tgt.ngens)]
        return DualityMap(GroupMap(src, tgt, M), "dold", i, sign, pairs)
    lift = cohomology_subdivision(T, model.Tp, K, L, i)
    c = sign * unsigned_factor_front(i)
    gp = model.gamma_p
    cap = map_from_chain_map(lift.target, tgt, lambda a: {s: c * v for s, v in cap_front(a, i, gp).items()})
    return DualityMap(cap @ lift, "dold", i, sign, pairs)


def _prepare_full(X: FilteredPseudomanifold, subs: list, refine):
    """Subdivide once if asked, or if some subcomplex is not full."""
    if refine is None:
        refine = not all(A.is_full() for A in subs)
    if not refine:
        return X, subs, False
    Xf = subdivide_space(X)
    return Xf, [push_subcomplex(A, Xf.complex) for A in subs], True


def disjoint_part(K: SimplicialComplex, Z: Subcomplex) -> Subcomplex:
    """C_Z: the simplices disjoint from Z."""
    zv = Z.vertices
    return Subcomplex(K, frozenset(s for s in K.simplices() if zv.isdisjoint(s)))


def gm_duality(X: FilteredPseudomanifold, S: Subcomplex | None, K: Subcomplex, L: Subcomplex, i: int,
               refine: bool | None = None) -> DualityMap:
    """𝒟: H^i(X - L, X - K) → H_{n-i}(K, L), composed step by step.

    The source is presented by H^i(C_L, C_K) on the (possibly subdivided)
    triangulation in which K and L are full.  The steps are: Dold duality over
    M = X - S for the compact pair (C_L, C_K), the inclusion that adds S back,
    the inverse of the inclusion of (K, L) into its complement-model
    neighbourhood, and the inverse subdivision isomorphism.
    """
    T, n = X.complex, X.n
    S = S if S is not None else Subcomplex.empty(T)
    _check_nested(S, L, "S is not contained in L")
    _check_nested(L, K, "L is not contained in K")
    oriented_chain(X, S)
    Xf, (Kf, Lf, Sf), refined = _prepare_full(X, [K, L, S], refine)
    Tf = Xf.complex
    CK, CL = disjoint_part(Tf, Kf), disjoint_part(Tf, Lf)
    notes = ["subdivided once so that K and L are full"] if refined else []
    src = cohomology_of_pair(Tf, CL, CK, i)
    tgt = homology_of_pair(T, K, L, n - i)
    pairs = {"source": ("C_L", "C_K"), "target": ("K", "L")}
    if not (0 <= i <= n):
        return DualityMap(GroupMap(src, tgt, [[0] * src.ngens for _ in range(tgt.ngens)]),
                          "gm", i, dold_sign(i, n), pairs, notes)
    dold = dold_duality(Xf, Sf, CL, CK, i)
    model = flag_model(Xf, Sf)
    Tfp = model.Tp
    AK, AL = model.complement(CK), model.complement(CL)
    excise = induced_map(dold.target, homology_of_pair(Tfp, AK, AL, n - i))
    retract = induced_map(homology_of_pair(Tfp, model.sd(Kf), model.sd(Lf), n - i),
                          excise.target).inverse()
    back = homology_subdivision(T, Tfp, K, L, n - i).inverse()
    total = back @ retract @ excise @ dold.map
    return DualityMap(total, "gm", i, dold.sign, pairs, notes)


def gm_duality_collapsed(X: FilteredPseudomanifold, S: Subcomplex | None, K: Subcomplex, L: Subcomplex,
                         i: int) -> DualityMap:
    """𝒟 evaluated in one step: a back-face cap with Γ' on the flag model.

    The source is H^i(A_L, A_K), the complement models of (X - L, X - K) in
    T'; no fullness is needed.
    """
    T, n = X.complex, X.n
    S = S if S is not None else Subcomplex.empty(T)
    _check_nested(S, L, "S is not contained in L")
    _check_nested(L, K, "L is not contained in K")
    model = flag_model(X, S)
    src = cohomology_of_pair(model.Tp, model.complement(L), model.complement(K), i)
    tgt = homology_of_pair(T, K, L, n - i)
    pairs = {"source": ("A_L", "A_K"), "target": ("K", "L")}
    if not (0 <= i <= n):
        return DualityMap(GroupMap(src, tgt, [[0] * src.ngens for _ in range(tgt.ngens)]),
                          "gm-collapsed", i, dold_sign(i, n), pairs)
    c = dold_sign(i, n) * unsigned_factor(i, n)
    gp = model.gamma_p
    mid = homology_of_pair(model.Tp, model.sd(K), model.sd(L), n - i)
    cap = map_from_chain_map(src, mid, lambda u: {s: c * v for s, v in cap_product(u, i, gp).items()})
    back = homology_subdivision(T, model.Tp, K, L, n - i).inverse()
    return DualityMap(back @ cap, "gm-collapsed", i, dold_sign(i, n), pairs)


def flag_to_disjoint(X: FilteredPseudomanifold, S: Subcomplex | None, K: Subcomplex, L: Subcomplex,
                     i: int, refine: bool | None = None) -> GroupMap:
    """H^i(A_L, A_K) → H^i(C_L, C_K): restriction followed by sd^* when needed.

    Both groups present H^i(X - L, X - K); this is the identification used to
    compare ``gm_duality`` with ``gm_duality_collapsed``.
    """
    S = S if S is not None else Subcomplex.empty(X.complex)
    model = flag_model(X, S)
    Xf, (Kf, Lf), _ = _prepare_full(X, [K, L], refine)
    Tf = Xf.complex
    CK, CL = disjoint_part(Tf, Kf), disjoint_part(Tf, Lf)
    src = cohomology_of_pair(model.Tp, model.complement(L), model.complement(K), i)
    tgt = cohomology_of_pair(Tf, CL, CK, i)
    if Tf is model.Tp:
        return induced_map(src, tgt)
    mid = cohomology_of_pair(model.Tp, model.sd(CL), model.sd(CK), i)
    down = map_from_chain_map(mid, tgt, lambda co: pullback_cochain(Tf, model.Tp, co, i))
    return down @ induced_map(src, mid)


# diagram helpers used by the property checks

def restriction_cohomology(T, big_pair, small_pair, i) -> GroupMap:
    """H^i(K', L') → H^i(K, L) for (K, L) ⊂ (K', L')."""
    return induced_map(cohomology_of_pair(T, *big_pair, i), cohomology_of_pair(T, *small_pair, i))


def complement_inclusion(model: FlagModel, src_pair, dst_pair, k) -> GroupMap:
    """Map induced by an inclusion of complement-model pairs, given by removed sets."""
    S = homology_of_pair(model.Tp, model.complement(src_pair[0]), model.complement(src_pair[1]), k)
    D = homology_of_pair(model.Tp, model.complement(dst_pair[0]), model.complement(dst_pair[1]), k)
    return induced_map(S, D)


def complement_connecting(model: FlagModel, J, L, K, k) -> GroupMap:
    """∂: H_k(A_J, A_L) → H_{k-1}(A_L, A_K) for J ⊂ L ⊂ K (removed sets)."""
    AJ, AL, AK = model.complement(J), model.complement(L), model.complement(K)
    src = homology_of_pair(model.Tp, AJ, AL, k)
    tgt = homology_of_pair(model.Tp, AL, AK, k - 1)
    keep = AL.simplices
    return map_from_chain_map(src, tgt,
                              lambda ch: {f: v for f, v in simplicial_boundary(ch).items() if f in keep})


def is_unimodular(g: GroupMap) -> bool:
    try:
        g.inverse()
    except AlgebraError:
        return False
    return True


__all__ = [
    "DualityError", "DualityMap", "FlagModel", "FundamentalClassOver", "cap_front",
    "cohomology_subdivision", "complement_connecting", "complement_inclusion", "disjoint_part",
    "dold_duality", "dold_sign", "flag_model", "flag_to_disjoint", "fundamental_class_over",
    "gm_duality", "gm_duality_collapsed", "homology_subdivision", "oriented_chain",
    "pullback_cochain", "restriction_cohomology", "unsigned_factor",
]
