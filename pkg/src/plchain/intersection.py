"""Intersection coefficients, the umkehr map Δ_! and the intersection product μ = Δ_! ∘ ε.

The coefficient I_σ(ξ) of an i-chain ξ on X × X is the image of [ξ] under

    H_i(K, L) --𝒟⁻¹--> H^q(X×X - L, X×X - K) --Δ*--> H^q(X - L', X - K')
              --𝒟--> H_{i-n}(K', L') --> H_{i-n}(σ, ∂σ) = Z,

with K = |ξ| ∪ J, L = |∂ξ| ∪ J, q = 2n - i and J the non-manifold part.  All
groups are presented by complement models in derived subdivisions (see
``duality``).  The inverse duality is produced at cochain level: a cochain
u with 𝒟(u) = sd ξ is written down on flags that start at i-simplices and
then corrected block by block, a block being the flags with a fixed smallest
element γ.  Corrections live on flags starting below dimension i, which the
cap with Γ' never sees, so 𝒟(u) stays equal to sd ξ while u becomes a
relative cocycle.  The Δ* and 𝒟 steps then reduce to a finite sum over the
flags of X dual to σ.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chain_algebra import (GroupMap, add_into, cohomology_of_pair, cup_product, homology_of_pair,
                            induced_map, simplicial_boundary, solve_sparse)
from .complex_core import (ComplexError, Subcomplex, faces_of, product_triangulation,
                           shuffle_product)
from .duality import (dold_sign, flag_model, gm_duality_collapsed, oriented_chain,
                      unsigned_factor)
from .pl_chains import PLChain, chain_from_class, subdivide_chain
from .stratified import FilteredPseudomanifold, Perversity, allowability_check


class IntersectionError(ComplexError):
    pass


class NotInDomainError(IntersectionError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def flag_sign(flag) -> int:
    """Sign of a full flag ρ0 < ... < ρk (dims 0..k) inside sd(ρk)."""
    sign = 1
    for m in range(1, len(flag)):
        prev, cur = flag[m - 1], flag[m]
        j = next(t for t, v in enumerate(cur) if v not in prev)
        if (m + j) % 2:
            sign = -sign
    return sign


def full_flag(s: tuple) -> tuple:
    return tuple(s[:k] for k in range(1, len(s) + 1))


def _closure(simplices) -> frozenset:
    out = set()
    for s in simplices:
        if s not in out:
            out.update(faces_of(s))
    return frozenset(out)


def _dim(simplices) -> int:
    return max((len(s) - 1 for s in simplices), default=-1)


# context

class DiagonalContext:
    """X, the staircase triangulation of X × X, its singular part and the diagonal."""

    def __init__(self, X: FilteredPseudomanifold):
        T = X.complex
        self.X = X
        self.T = T
        self.n = X.n
        self.P = product_triangulation(T, T)
        self.total = self.P.total
        full = T.full()
        sig = X.singular
        self.sigma_xx = self.P.product_subcomplex(sig, full) | self.P.product_subcomplex(full, sig)
        self.diagonal = self.P.diagonal
        vid = self.P.vertex_id
        self._dmap = {s: tuple(vid(v, v) for v in s) for s in T.simplices()}
        self.gamma = oriented_chain(X, sig)
        self._gamma_p = None
        self._up = {}

    def delta(self, s: tuple) -> tuple:
        return self._dmap[s]

    def pullback(self, A) -> Subcomplex:
        """A' = Δ⁻¹(A) for a subcomplex (or simplex set) of the product."""
        sset = A.simplices if isinstance(A, Subcomplex) else A
        return Subcomplex(self.T, frozenset(s for s, d in self._dmap.items() if d in sset))

    @property
    def gamma_product(self) -> dict:
        if self._gamma_p is None:
            self._gamma_p = shuffle_product(self.P, self.gamma, self.gamma)
        return self._gamma_p

    def up(self, s: tuple) -> frozenset:
        """Proper cofaces of s in the product."""
        got = self._up.get(s)
        if got is None:
            cof = self.total.cofaces()
            acc = set()
            for c in cof[s]:
                acc.add(c)
                acc |= self.up(c)
            got = self._up[s] = frozenset(acc)
        return got

    def chains(self, start: tuple, length: int):
        """Flags (start < τ1 < ... ) with ``length`` elements, in a fixed order."""
        if length == 1:
            yield (start,)
            return
        for t in sorted(self.up(start)):
            for rest in self.chains(t, length - 1):
                yield (start,) + rest

    def cross(self, zeta, eta) -> dict:
        return cross_product(self, zeta, eta).coeffs


def _as_chain(ctx: DiagonalContext, x, degree=None) -> PLChain:
    if isinstance(x, PLChain):
        if x.complex is not ctx.T:
            x = subdivide_chain(x, ctx.T)
        return x
    if degree is None:
        degree = len(next(iter(x))) - 1 if x else 0
    return PLChain(ctx.T, degree, x)


def cross_product(ctx: DiagonalContext, zeta, eta) -> PLChain:
    """Eilenberg-Zilber shuffle product on the staircase triangulation."""
    a, b = _as_chain(ctx, zeta), _as_chain(ctx, eta)
    return PLChain(ctx.total, a.degree + b.degree, shuffle_product(ctx.P, a.coeffs, b.coeffs))


# general position

@dataclass
class GPCheck:
    label: str
    budget: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.actual < 0 or self.actual <= self.budget


@dataclass
class GeneralPositionReport:
    mode: str
    checks: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.verdict

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]


def _product_supports(ctx: DiagonalContext, xi: dict):
    sig = ctx.sigma_xx.simplices
    sup = _closure(s for s, v in xi.items() if v and s not in sig)
    bd = simplicial_boundary(xi)
    bsup = _closure(s for s, v in bd.items() if v and s not in sig)
    return sup, bsup


def general_position_check(ctx: DiagonalContext, data, mode: str = "delta") -> GeneralPositionReport:
    """Dimension inequalities for a chain on X × X (``delta``, ``stratified``) or a chain pair (``pair``).

    delta:       dim(|ξ|' - Σ) ≤ i - n and dim(|∂ξ|' - Σ) ≤ i - 1 - n.
    stratified:  per stratum Z of X, dim(A ∩ Δ(Z)) ≤ dim(A ∩ (Z × Z)) - dim Z for A = |ξ|, |∂ξ|.
    pair:        per stratum Z, dim(|ξ|∩|η|∩Z) ≤ dim(|ξ|∩Z) + dim(|η|∩Z) - dim Z, also with boundaries.
    """
    n = ctx.n
    rep = GeneralPositionReport(mode)
    if mode == "pair":
        xi, eta = (_as_chain(ctx, c) for c in data)
        sig = ctx.X.singular.simplices
        def sup(ch):
            return _closure(s for s, v in ch.coeffs.items() if v and s not in sig)
        sets = {"ξ": sup(xi), "η": sup(eta), "∂ξ": sup(xi.boundary()), "∂η": sup(eta.boundary())}
        for a, b in (("ξ", "η"), ("∂ξ", "η"), ("ξ", "∂η")):
            meet = sets[a] & sets[b]
            for st in ctx.X.strata():
                act = _dim(meet & st.simplices)
                da, db = _dim(sets[a] & st.simplices), _dim(sets[b] & st.simplices)
                budget = da + db - st.dim if da >= 0 and db >= 0 else -1
                rep.checks.append(GPCheck(f"{a}∩{b}∩{st.label}", budget, act))
        return rep
    xi = data.coeffs if isinstance(data, PLChain) else data
    i = data.degree if isinstance(data, PLChain) else (len(next(iter(xi))) - 1 if xi else 0)
    sup, bsup = _product_supports(ctx, xi)
    if mode == "delta":
        sing = ctx.X.singular.simplices
        for name, A, budget in (("|ξ|'", sup, i - n), ("|∂ξ|'", bsup, i - 1 - n)):
            pb = [s for s, d in ctx._dmap.items() if d in A and s not in sing]
            rep.checks.append(GPCheck(f"{name}-Σ", budget, _dim(pb)))
        return rep
    if mode == "stratified":
        proj = ctx.P.project
        for name, A in (("|ξ|", sup), ("|∂ξ|", bsup)):
            for st in ctx.X.strata():
                zs = st.simplices
                on_diag = _dim([s for s in zs if ctx._dmap[s] in A])
                in_square = _dim([g for g in A if proj(g, 0) in zs and proj(g, 1) in zs])
                rep.checks.append(GPCheck(f"{name}∩Δ({st.label})", in_square - st.dim, on_diag))
        return rep
    raise IntersectionError(f"unknown general position mode {mode!r}")


# the inverse duality on the product, blockwise

class _Neighborhood:
    """Z given by a set of n-simplices, with J_Z and the product analogues."""

    def __init__(self, ctx: DiagonalContext, Z=None):
        T, n = ctx.T, ctx.n
        self.ctx = ctx
        if Z is None:
            self.tops = frozenset(T.simplices(n))
        else:
            zs = Z.simplices if isinstance(Z, Subcomplex) else frozenset(Z)
            self.tops = frozenset(s for s in zs if len(s) == n + 1)
            if not self.tops:
                raise IntersectionError("Z must contain n-simplices")
        self.Z = _closure(self.tops)
        self.D = _closure(t for t in T.simplices(n) if t not in self.tops)
        self.J = (ctx.X.singular.simplices & self.Z) | (self.Z & self.D)

    def interior_contains(self, sigma: tuple) -> bool:
        return sigma in self.Z and sigma not in self.D

    def blocks_allowed(self, g: tuple) -> bool:
        """g lies in Z × Z and not in J_{Z×Z}."""
        a, b = self.ctx.P.project(g, 0), self.ctx.P.project(g, 1)
        return a in self.Z and b in self.Z and a not in self.J and b not in self.J


class _InverseDual:
    """Cochain u on flags of the product with 𝒟(u) = sd ξ, built on demand."""

    def __init__(self, ctx: DiagonalContext, xi: dict, i: int, Z=None, pair=None):
        self.ctx = ctx
        self.xi = xi
        self.i = i
        self.N = 2 * ctx.n
        self.q = self.N - i
        self.nb = _Neighborhood(ctx, Z)
        if pair is None:
            A, B = _product_supports(ctx, xi)
        else:
            A = frozenset(pair[0].simplices if isinstance(pair[0], Subcomplex) else pair[0])
            B = frozenset(pair[1].simplices if isinstance(pair[1], Subcomplex) else pair[1])
            sup, bsup = _product_supports(ctx, xi)
            if not sup <= A | ctx.sigma_xx.simplices or not bsup <= B | ctx.sigma_xx.simplices:
                raise IntersectionError("the given pair does not contain the supports of ξ and ∂ξ")
        sig = ctx.sigma_xx.simplices
        self.K = frozenset(g for g in A if g not in sig)
        self.L = frozenset(B) | sig
        self.u = {}
        self.done = set()
        self.c_product = dold_sign(self.q, self.N) * unsigned_factor(self.q, self.N)

    def in_block_set(self, g) -> bool:
        return g in self.K and g not in self.L and self.nb.blocks_allowed(g)

    def _saturated(self, beta):
        cof = self.ctx.total.cofaces()
        chain = [beta]
        while len(chain[-1]) < self.N + 1:
            chain.append(min(cof[chain[-1]]))
        return tuple(chain)

    def _seed(self, beta):
        x = self.xi.get(beta, 0)
        if not x:
            return
        b = self._saturated(beta)
        f0 = full_flag(beta)
        full = f0 + b[1:]
        eps = self.ctx.gamma_product.get(full[-1], 0) * flag_sign(full) * flag_sign(f0)
        if not eps:
            raise IntersectionError("product orientation missing on a top simplex")
        self.u[b] = self.c_product * x * eps

    def _solve_block(self, g):
        ctx, q = self.ctx, self.q
        u = self.u
        rhs = {}
        cols = {}
        for G in ctx.chains(g, q + 2):
            r = u.get(G[1:], 0)
            if r:
                rhs[G] = -r
            for j in range(1, q + 2):
                h = G[:j] + G[j + 1:]
                col = cols.setdefault(h, {})
                col[G] = col.get(G, 0) + (-1 if j % 2 else 1)
        if not rhs:
            return
        sol = solve_sparse(cols, rhs)
        if sol is None:
            raise IntersectionError(
                f"no cocycle extension at {ctx.total.label_simplex(g)}: ξ is not a relative cycle there")
        for h, v in sol.items():
            if v:
                u[h] = v

    def prepare(self, targets):
        """Fill u on every block containing one of the given product simplices."""
        need = set()
        for d in targets:
            if self.in_block_set(d) and len(d) <= self.i + 1:
                need.add(d)
            for g in self.ctx.up(d):
                if len(g) <= self.i + 1 and self.in_block_set(g):
                    need.add(g)
        for g in sorted(need - self.done, key=lambda g: (-len(g), g)):
            if len(g) == self.i + 1:
                self._seed(g)
            else:
                self._solve_block(g)
            self.done.add(g)

    def prepare_all(self):
        every = [g for g in self.K if g not in self.L and len(g) <= self.i + 1 and self.in_block_set(g)]
        self.prepare(every)

    def residual(self) -> dict:
        """δu on relative flags; empty when u is a relative cocycle on the prepared blocks."""
        out = {}
        q = self.q
        for g in self.done:
            for G in self.ctx.chains(g, q + 2):
                v = sum((-1 if j % 2 else 1) * self.u.get(G[:j] + G[j + 1:], 0) for j in range(q + 2))
                if v:
                    out[G] = v
        return out


def _saturated_in_X(ctx: DiagonalContext, sigma: tuple):
    cof = ctx.T.cofaces()
    n = ctx.n

    def rec(chain):
        if len(chain[-1]) == n + 1:
            yield tuple(chain)
            return
        for c in cof[chain[-1]]:
            yield from rec(chain + [c])
    yield from rec([sigma])


def _evaluate(ctx: DiagonalContext, inv: _InverseDual, sigma: tuple) -> int:
    q, n = inv.q, ctx.n
    c_x = dold_sign(q, n) * unsigned_factor(q, n)
    f = full_flag(sigma)
    fs = flag_sign(f)
    total = 0
    for b in _saturated_in_X(ctx, sigma):
        val = inv.u.get(tuple(ctx.delta(t) for t in b), 0)
        if val:
            full = f + b[1:]
            total += ctx.gamma[full[-1]] * flag_sign(full) * val
    return c_x * fs * total


def _degree(xi) -> int:
    if isinstance(xi, PLChain):
        return xi.degree
    return len(next(iter(xi))) - 1 if xi else 0


def _coeffs(xi) -> dict:
    return xi.coeffs if isinstance(xi, PLChain) else xi


def intersection_coefficient(ctx: DiagonalContext, xi, sigma: tuple, Z=None, pair=None,
                             check: bool = True) -> int:
    """I_σ(ξ) for an (i-n)-simplex σ of X outside Σ.

    ``Z`` is a set of n-simplices whose union contains the interior of σ
    (default: all of X).  ``pair`` optionally replaces (|ξ|, |∂ξ|) by a
    larger pair (A, B) obeying the same dimension bounds.
    """
    i, ch = _degree(xi), _coeffs(xi)
    n = ctx.n
    if len(sigma) - 1 != i - n:
        raise IntersectionError(f"σ must have dimension {i - n}")
    if sigma in ctx.X.singular.simplices:
        raise IntersectionError("σ lies in Σ")
    if check:
        rep = general_position_check(ctx, ch if isinstance(xi, PLChain) else PLChain(ctx.total, i, ch), "delta")
        if not rep:
            raise NotInDomainError("ξ is not in general position with respect to the diagonal", rep)
    inv = _InverseDual(ctx, ch, i, Z, pair)
    if not inv.nb.interior_contains(sigma):
        raise IntersectionError("the interior of σ is not inside the interior of Z")
    d = ctx.delta(sigma)
    if d not in inv.K:
        return 0
    if d in inv.L:
        raise NotInDomainError("σ lies in the pullback of the boundary support")
    inv.prepare([d])
    return _evaluate(ctx, inv, sigma)


def umkehr(ctx: DiagonalContext, xi, Z=None, check: bool = True) -> PLChain:
    """Δ_!(ξ) = Σ_σ I_σ(ξ) σ over (i-n)-simplices σ ⊄ Σ, reduced mod Σ."""
    i, ch = _degree(xi), _coeffs(xi)
    n = ctx.n
    if check:
        rep = general_position_check(ctx, PLChain(ctx.total, i, ch), "delta")
        if not rep:
            raise NotInDomainError("ξ is not in general position with respect to the diagonal", rep)
    p = i - n
    if p < 0 or not ch:
        return PLChain(ctx.T, p, {})
    inv = _InverseDual(ctx, ch, i, Z)
    sing = ctx.X.singular.simplices
    sigmas = [s for s in ctx.T.simplices(p) if s not in sing and ctx.delta(s) in inv.K
              and inv.nb.interior_contains(s)]
    inv.prepare([ctx.delta(s) for s in sigmas])
    out = {}
    for s in sigmas:
        v = _evaluate(ctx, inv, s)
        if v:
            out[s] = v
    return PLChain(ctx.T, p, out)


# the intersection product

@dataclass
class DomainElement:
    """Formal sum Σ c (ζ ⊗ η) of chains on X."""
    terms: list

    @classmethod
    def single(cls, zeta, eta, coeff: int = 1):
        return cls([(coeff, zeta, eta)])

    def degree(self) -> int:
        c, z, e = self.terms[0]
        return _degree(z) + _degree(e)

    def epsilon(self, ctx: DiagonalContext) -> PLChain:
        out = {}
        deg = None
        for c, z, e in self.terms:
            x = cross_product(ctx, z, e)
            if deg is not None and x.degree != deg:
                raise IntersectionError("tensor terms have different degrees")
            deg = x.degree
            add_into(out, x.coeffs, c)
        return PLChain(ctx.total, deg if deg is not None else 0, out)

    def boundary(self) -> "DomainElement":
        out = []
        for c, z, e in self.terms:
            z, e = (x if isinstance(x, PLChain) else PLChain(None, _degree(x), x) for x in (z, e))
            out.append((c, PLChain(z.complex, z.degree - 1, simplicial_boundary(z.coeffs)), e))
            sign = -1 if z.degree % 2 else 1
            out.append((c * sign, z, PLChain(e.complex, e.degree - 1, simplicial_boundary(e.coeffs))))
        return DomainElement(out)


def mu(ctx: DiagonalContext, e: DomainElement, Z=None) -> PLChain:
    """μ(e) = Δ_!(ε(e)); raises NotInDomainError if ε(e) fails general position."""
    x = e.epsilon(ctx)
    rep = general_position_check(ctx, x, "delta")
    if not rep:
        bad = ", ".join(f"{c.label}: {c.actual} > {c.budget}" for c in rep.failures())
        raise NotInDomainError(f"not in the domain of μ ({bad})", rep)
    return umkehr(ctx, x, Z, check=False)


@dataclass
class IHProduct:
    chain: PLChain
    allowability: object
    general_position: GeneralPositionReport
    perversity: Perversity


def ih_product(ctx: DiagonalContext, e: DomainElement, p1: Perversity, p2: Perversity) -> IHProduct:
    """μ on intersection chains, with the allowability of the result certified for p1 + p2."""
    X = ctx.X
    for c, z, w in e.terms:
        for ch, p, nm in ((z, p1, "first"), (w, p2, "second")):
            ch = _as_chain(ctx, ch)
            rep = allowability_check(X, ch.coeffs, ch.degree, p)
            if not rep:
                f = rep.failures()[0]
                raise NotInDomainError(
                    f"{nm} factor is not {p.name or 'p'}-allowable at {f.stratum} "
                    f"(dim {max(f.chain_dim, f.boundary_dim)} exceeds budget)", rep)
    x = e.epsilon(ctx)
    gp = general_position_check(ctx, x, "stratified")
    if not gp:
        raise NotInDomainError("ε(e) is not in stratified general position", gp)
    out = mu(ctx, e)
    p = p1 + p2
    return IHProduct(out, allowability_check(X, out.coeffs, out.degree, p), gp, p)


# the Goresky-MacPherson composition for cycles

def _koszul(n: int, i: int) -> int:
    return -1 if (n + n * i) % 2 else 1


def _support(ctx: DiagonalContext, ch: PLChain) -> Subcomplex:
    sig = ctx.X.singular
    return Subcomplex(ctx.T, _closure(s for s, v in ch.coeffs.items() if v and s not in sig.simplices)) | sig


def _dual_cocycle(ctx, A: Subcomplex, vec, i: int):
    """A cocycle on the complement model of (X - Σ, X - A) dual to a class of H_i(A, Σ)."""
    X, sig = ctx.X, ctx.X.singular
    D = gm_duality_collapsed(X, sig, A, sig, ctx.n - i)
    inv = D.map.inverse()
    return D.source, D.source.element(inv(vec))


def gm_class_product(ctx: DiagonalContext, A: Subcomplex, va, i: int, B: Subcomplex, vb, j: int):
    """𝒟 ∘ ⌣ ∘ (𝒟 ⊗ 𝒟)⁻¹ on classes of H_i(A, Σ) ⊗ H_j(B, Σ); returns (H, coords) in H_{i+j-n}(A∩B, Σ)."""
    X, n, sig = ctx.X, ctx.n, ctx.X.singular
    model = flag_model(X, sig)
    _, ua = _dual_cocycle(ctx, A, va, i)
    _, ub = _dual_cocycle(ctx, B, vb, j)
    a, b = n - i, n - j
    w = cup_product(model.Tp, ua, a, ub, b)
    sign = _koszul(n, i)
    C = A & B
    D = gm_duality_collapsed(X, sig, C | sig, sig, a + b)
    if not D.source.ngens:
        return D.target, [0] * D.target.ngens
    return D.target, D.map(D.source.coords({s: sign * v for s, v in w.items()}))


def gm_cycle_product(ctx: DiagonalContext, xi, eta) -> PLChain:
    """The cycle-level Goresky-MacPherson product of two cycles in pair general position."""
    xi, eta = _as_chain(ctx, xi), _as_chain(ctx, eta)
    n, sig = ctx.n, ctx.X.singular
    for ch, nm in ((xi, "ξ"), (eta, "η")):
        if any(s not in sig.simplices for s in simplicial_boundary(ch.coeffs)):
            raise IntersectionError(f"{nm} is not a cycle rel Σ")
    rep = general_position_check(ctx, (xi, eta), "pair")
    if not rep:
        raise NotInDomainError("the cycles are not in stratified general position", rep)
    i, j = xi.degree, eta.degree
    p = i + j - n
    if p < 0:
        return PLChain(ctx.T, 0, {})
    A, B = _support(ctx, xi), _support(ctx, eta)
    HA = homology_of_pair(ctx.T, A, sig, i)
    HB = homology_of_pair(ctx.T, B, sig, j)
    H, vec = gm_class_product(ctx, A, HA.coords(xi.coeffs), i, B, HB.coords(eta.coeffs), j)
    meet = (A & B) | sig
    if not any(len(s) == p + 1 and s not in sig.simplices for s in meet.simplices):
        return PLChain(ctx.T, p, {})
    return chain_from_class(meet, sig, H, vec, p, mode="alphabar", C=sig)


@dataclass
class CupDualityReport:
    left: list
    right: list
    holds: bool
    mu_signs: dict


def cup_duality_check(ctx: DiagonalContext, xi, eta) -> CupDualityReport:
    """Compare 𝔦 ∘ (GM product on supports) with the Poincaré-dual cup product on X.

    Matrices are indexed by basis pairs of H_i(|ξ|) ⊗ H_j(|η|) and valued in
    H_{i+j-n}(X).  ``mu_signs`` records, for the given cycles, the sign s with
    [μ(ξ ⊗ η)] = s·[GM product] in H_{i+j-n}(X) (0 if both vanish).
    """
    X, n, T = ctx.X, ctx.n, ctx.T
    if X.singular.simplices:
        raise IntersectionError("cup duality check needs Σ = ∅")
    xi, eta = _as_chain(ctx, xi), _as_chain(ctx, eta)
    rep = general_position_check(ctx, (xi, eta), "pair")
    if not rep:
        raise NotInDomainError("the cycles are not in general position", rep)
    i, j = xi.degree, eta.degree
    p = i + j - n
    E = Subcomplex.empty(T)
    A, B = _support(ctx, xi), _support(ctx, eta)
    HA, HB = homology_of_pair(T, A, None, i), homology_of_pair(T, B, None, j)
    HX = homology_of_pair(T, None, None, p) if p >= 0 else None
    incA = induced_map(HA, homology_of_pair(T, None, None, i))
    incB = induced_map(HB, homology_of_pair(T, None, None, j))
    full = T.full()
    left, right = [], []
    for a in range(HA.ngens):
        for b in range(HB.ngens):
            ea = [int(t == a) for t in range(HA.ngens)]
            eb = [int(t == b) for t in range(HB.ngens)]
            if p < 0:
                left.append([])
                right.append([])
                continue
            H, v = gm_class_product(ctx, A, ea, i, B, eb, j)
            left.append(HX.coords(H.element(v)))
            _, w = gm_class_product(ctx, full, incA(ea), i, full, incB(eb), j)
            right.append(HX.normalize(w))
    mu_signs = {}
    if p >= 0:
        m = mu(ctx, DomainElement.single(xi, eta))
        cm = HX.coords(m.coeffs)
        H, v = gm_class_product(ctx, A, HA.coords(xi.coeffs), i, B, HB.coords(eta.coeffs), j)
        cg = HX.coords(H.element(v))
        if any(cm) or any(cg):
            s = 1 if cm == cg else (-1 if cm == [-x for x in cg] else 0)
        else:
            s = 0
        mu_signs[(i, j, n)] = s
    del E
    return CupDualityReport(left, right, left == right, mu_signs)


__all__ = [
    "CupDualityReport", "DiagonalContext", "DomainElement", "GeneralPositionReport",
    "IHProduct", "IntersectionError", "NotInDomainError", "cross_product", "cup_duality_check",
    "flag_sign", "general_position_check", "gm_class_product", "gm_cycle_product", "ih_product",
    "intersection_coefficient", "mu", "umkehr",
]
