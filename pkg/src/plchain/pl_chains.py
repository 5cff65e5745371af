"""PL chains: simplicial chains compared up to subdivision, supports, and the
correspondence between top-dimensional relative classes and chains."""

from __future__ import annotations

from dataclasses import dataclass

from .chain_algebra import (AlgebraError, GroupPresentation, add_into, homology_of_pair,
                            simplicial_boundary)
from .complex_core import (ComplexError, SimplicialComplex, Subcomplex, barycentric_subdivision,
                           boundary_faces, faces_of, lineage_chain, push_subcomplex)
from .stratified import FilteredPseudomanifold


class ChainError(ComplexError):
    pass


# subdivision chain map

def _barycenters(Kp: SimplicialComplex) -> dict:
    cache = getattr(Kp, "_bary_index", None)
    if cache is None:
        cache = {c: i for i, c in enumerate(Kp.lineage.vertex_carrier)}
        Kp._bary_index = cache
    return cache


def subdivide_simplex(Kp: SimplicialComplex, s: tuple) -> dict:
    """sd(s) in the derived complex Kp: sd(s) = (-1)^k sd(∂s) * b(s), b appended last."""
    memo = Kp.__dict__.setdefault("_sd_memo", {})
    if s in memo:
        return memo[s]
    bid = _barycenters(Kp)
    b = bid[s]
    if len(s) == 1:
        out = {(b,): 1}
    else:
        k = len(s) - 1
        sg0 = -1 if k % 2 else 1
        out = {}
        for sg, f in boundary_faces(s):
            for t, v in subdivide_simplex(Kp, f).items():
                key = t + (b,)
                nv = out.get(key, 0) + sg0 * sg * v
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
    memo[s] = out
    return out


def subdivide_once(Kp: SimplicialComplex, chain: dict) -> dict:
    out = {}
    for s, v in chain.items():
        add_into(out, subdivide_simplex(Kp, s), v)
    return out


def flag_sign(Kp: SimplicialComplex, flag: tuple) -> int:
    """Sign of a top simplex of sd(σ) inside sd(σ), σ the carrier of its last vertex."""
    top = Kp.lineage.vertex_carrier[flag[-1]]
    return subdivide_simplex(Kp, top)[flag]


def _path(source: SimplicialComplex, target: SimplicialComplex) -> list:
    chain = lineage_chain(target)
    if source not in chain:
        raise ChainError("target triangulation is not a refinement in the chain's lineage")
    return list(reversed(chain[:chain.index(source)]))


# PL chains

@dataclass
class PLChain:
    complex: SimplicialComplex
    degree: int
    coeffs: dict

    def __post_init__(self):
        self.coeffs = {s: v for s, v in self.coeffs.items() if v}
        for s in self.coeffs:
            if len(s) != self.degree + 1:
                raise ChainError(f"simplex {s} has the wrong dimension for degree {self.degree}")

    def boundary(self) -> "PLChain":
        return PLChain(self.complex, self.degree - 1, simplicial_boundary(self.coeffs))

    def support(self, modulo=None) -> Subcomplex:
        return support(self, modulo)

    def __add__(self, other: "PLChain") -> "PLChain":
        a, b = common_refinement(self, other)
        return PLChain(a.complex, a.degree, add_into(dict(a.coeffs), b.coeffs))

    def __neg__(self):
        return PLChain(self.complex, self.degree, {s: -v for s, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c: int):
        return PLChain(self.complex, self.degree, {s: c * v for s, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, PLChain):
            return NotImplemented
        if self.degree != other.degree:
            return False
        a, b = common_refinement(self, other)
        return a.coeffs == b.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def reduced(self, sub: Subcomplex) -> "PLChain":
        """Representative in the relative chain group mod ``sub``."""
        return PLChain(self.complex, self.degree,
                       {s: v for s, v in self.coeffs.items() if s not in sub.simplices})


def subdivide_chain(xi: PLChain, target: SimplicialComplex) -> PLChain:
    """Push a chain to a refinement in its lineage."""
    ch = xi.coeffs
    for K in _path(xi.complex, target):
        ch = subdivide_once(K, ch)
    return PLChain(target, xi.degree, ch)


def common_refinement(a: PLChain, b: PLChain):
    if a.complex is b.complex:
        return a, b
    if a.complex in lineage_chain(b.complex):
        return subdivide_chain(a, b.complex), b
    if b.complex in lineage_chain(a.complex):
        return a, subdivide_chain(b, a.complex)
    raise ChainError("chains live on triangulations without a common refinement in the lineage")


def support(xi: PLChain, modulo: Subcomplex | None = None) -> Subcomplex:
    """Closed support; simplices inside ``modulo`` are ignored (minimal relative representative)."""
    skip = modulo.simplices if modulo is not None else frozenset()
    out = set()
    for s, v in xi.coeffs.items():
        if v and s not in skip and s not in out:
            out.update(faces_of(s))
    return Subcomplex(xi.complex, frozenset(out))


def support_pair(xi: PLChain, modulo: Subcomplex | None = None):
    return support(xi, modulo), support(xi.boundary(), modulo)


# classes <-> chains

def _dim_outside(A: Subcomplex, B: Subcomplex | None) -> int:
    bs = B.simplices if B is not None else frozenset()
    return max((len(s) - 1 for s in A.simplices if s not in bs), default=-1)


def chain_from_class(A: Subcomplex, B: Subcomplex | None, H: GroupPresentation, vec, p: int,
                     mode: str = "alpha", C: Subcomplex | None = None) -> PLChain:
    """The unique simplicial p-chain representing a class of H_p(A, B).

    ``alpha``: dim A = p and dim B < p.  ``alphabar``: dim(A - B) = p and
    dim(B - C) < p; simplices inside B are dropped.
    """
    K = A.complex
    bset = B.simplices if B is not None else frozenset()
    if B is not None and B.simplices == A.simplices:
        return PLChain(K, p, {})
    if mode == "alpha":
        if A.dim != p:
            raise ChainError(f"dim A = {A.dim}, expected {p}")
        if B is not None and B.dim >= p:
            raise ChainError(f"dim B = {B.dim}, expected < {p}")
    elif mode == "alphabar":
        if _dim_outside(A, B) != p:
            raise ChainError(f"dim(A - B) = {_dim_outside(A, B)}, expected {p}")
        if B is not None and _dim_outside(B, C) >= p:
            raise ChainError(f"dim(B - C) must be < {p}")
    else:
        raise ChainError(f"unknown mode {mode!r}")
    ch = H.element(vec)
    return PLChain(K, p, {s: v for s, v in ch.items() if s not in bset})


def class_of_chain(H: GroupPresentation, xi: PLChain) -> list:
    return H.coords(xi.coeffs)


def coefficient_at(A: Subcomplex, B: Subcomplex | None, H: GroupPresentation, vec, sigma: tuple) -> int:
    """Image of a class of H_p(A, B) in H_p(A, A - int σ) ≅ H_p(σ, ∂σ) ≅ Z.

    σ must be a p-simplex of A, not in B and not a proper face of another
    simplex of A, so that A - int σ is the subcomplex A minus σ.
    """
    K = A.complex
    if B is not None and sigma in B.simplices:
        raise ChainError("σ lies in B")
    if sigma not in A.simplices:
        raise ChainError("σ is not a simplex of A")
    if any(len(t) > len(sigma) and set(sigma) <= set(t) for t in A.simplices):
        raise ChainError("σ is not maximal in A")
    p = len(sigma) - 1
    rest = Subcomplex(K, A.simplices - {sigma})
    local = homology_of_pair(K, A, rest, p)
    z = H.element(vec)
    (c,) = local.coords(z)
    g = local.generators[0][sigma]
    return c * g


# subdivided spaces

def subdivide_space(X: FilteredPseudomanifold) -> FilteredPseudomanifold:
    """First derived subdivision with pushed skeleta and induced orientation."""
    Kp = barycentric_subdivision(X.complex)
    skel = {i: push_subcomplex(sk, Kp) for i, sk in X.skeleta.items()}
    orient = None
    try:
        gamma = X.orientation
        orient = subdivide_once(Kp, gamma)
    except AlgebraError:
        orient = None
    except ComplexError:
        orient = None
    return FilteredPseudomanifold(Kp, skel, orient, n=X.n)
