"""Filtered pseudomanifolds, strata, perversities and intersection homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .chain_algebra import (ChainComplex, GroupPresentation, add_into, simplicial_boundary)
from .complex_core import (ComplexError, NonOrientableError, SimplicialComplex, Subcomplex,
                           faces_of, orient, validate_pseudomanifold)
from .snf import integer_inverse, smith_normal_form


class StratificationError(ComplexError):
    pass


class FilteredPseudomanifold:
    """A complex with closed skeleta X^0 ⊂ ... ⊂ X^{n-1} = Σ ⊂ X^n = X.

    ``skeleta`` may list only some indices; an unlisted X^i equals the nearest
    listed skeleton below it (empty if there is none).
    """

    def __init__(self, complex: SimplicialComplex, skeleta: dict | None = None,
                 orientation: dict | None = None, n: int | None = None):
        self.complex = complex
        self.n = complex.dim if n is None else n
        skeleta = dict(skeleta or {})
        keys = sorted(skeleta)
        for a, b in zip(keys, keys[1:]):
            if not skeleta[a] <= skeleta[b]:
                raise StratificationError(f"skeleta not nested: X^{a} is not inside X^{b}")
        for k in keys:
            if k >= self.n:
                raise StratificationError(f"skeleton index {k} must be below {self.n}")
        self.skeleta = skeleta
        self._full = {}
        cur = Subcomplex.empty(complex)
        for i in range(self.n):
            if i in skeleta:
                cur = skeleta[i]
            self._full[i] = cur
        self._full[self.n] = complex.full()
        self._orientation = orientation
        self._strata = None

    def skeleton(self, i: int) -> Subcomplex:
        if i < 0:
            return Subcomplex.empty(self.complex)
        return self._full[min(i, self.n)]

    @property
    def singular(self) -> Subcomplex:
        return self.skeleton(self.n - 1)

    @property
    def orientation(self) -> dict:
        """±1 per n-simplex, coherent across faces outside Σ."""
        if self._orientation is None:
            self._orientation = orient(self.complex, self.n, self.singular.simplices)
        return self._orientation

    def is_orientable(self) -> bool:
        try:
            self.orientation
            return True
        except NonOrientableError:
            return False

    def fundamental_chain(self) -> dict:
        return dict(self.orientation)

    def validate(self):
        return validate_pseudomanifold(self)

    def strata(self) -> list:
        if self._strata is None:
            self._strata = build_stratification(self)
        return self._strata

    def singular_strata(self) -> list:
        return [s for s in self.strata() if s.index < self.n]

    def stratum_of(self, s) -> "Stratum":
        for st in self.strata():
            if s in st.simplices:
                return st
        raise KeyError(s)

    def __repr__(self):
        return f"FilteredPseudomanifold(n={self.n}, {self.complex!r}, singular={len(self.singular)})"


@dataclass(frozen=True)
class Stratum:
    index: int
    codim: int
    simplices: frozenset
    label: str = ""

    @property
    def dim(self) -> int:
        return self.index


def build_stratification(X: FilteredPseudomanifold) -> list:
    """Connected components of each X_i = X^i - X^{i-1}, as sets of open simplices."""
    keys = sorted(X.skeleta)
    for a, b in zip(keys, keys[1:]):
        if not X.skeleta[a] <= X.skeleta[b]:
            raise StratificationError(f"skeleta not nested at {a}, {b}")
    out = []
    for i in range(X.n, -1, -1):
        here = X.skeleton(i).simplices - X.skeleton(i - 1).simplices
        if not here:
            continue
        parent = {s: s for s in here}

        def find(s):
            while parent[s] != s:
                parent[s] = parent[parent[s]]
                s = parent[s]
            return s

        cof = X.complex.cofaces()
        for s in here:
            for t in cof[s]:
                if t in here:
                    ra, rb = find(s), find(t)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        comps = {}
        for s in here:
            comps.setdefault(find(s), set()).add(s)
        for root in sorted(comps, key=lambda r: (len(r), r)):
            simp = frozenset(comps[root])
            first = min(simp, key=lambda s: (len(s), s))
            label = f"X_{i}[{','.join(str(v) for v in X.complex.label_simplex(first))}]"
            out.append(Stratum(i, X.n - i, simp, label))
    return out


@dataclass(frozen=True)
class Perversity:
    """Integer value on each singular stratum (keyed by stratum label)."""
    values: dict
    name: str = ""

    def __call__(self, stratum: Stratum) -> int:
        return self.values[stratum.label]

    def __add__(self, other: "Perversity") -> "Perversity":
        return Perversity({k: v + other.values[k] for k, v in self.values.items()},
                          f"{self.name}+{other.name}")

    def __le__(self, other: "Perversity") -> bool:
        return all(v <= other.values[k] for k, v in self.values.items())

    @classmethod
    def from_codim(cls, X: FilteredPseudomanifold, f: Callable[[int], int], name: str = "") -> "Perversity":
        return cls({s.label: f(s.codim) for s in X.singular_strata()}, name)

    @classmethod
    def zero(cls, X):
        return cls.from_codim(X, lambda c: 0, "0")

    @classmethod
    def top(cls, X):
        return cls.from_codim(X, lambda c: c - 2, "t")

    @classmethod
    def constant(cls, X, c: int):
        return cls.from_codim(X, lambda _: c, str(c))

    @classmethod
    def named(cls, X, name: str) -> "Perversity":
        """'0', 't' (top), 'm' (lower middle), 'n' (upper middle) or an integer."""
        table = {
            "0": lambda c: 0, "zero": lambda c: 0,
            "t": lambda c: c - 2, "top": lambda c: c - 2,
            "m": lambda c: (c - 2) // 2, "lower": lambda c: (c - 2) // 2,
            "n": lambda c: (c - 1) // 2, "upper": lambda c: (c - 1) // 2,
        }
        if name in table:
            return cls.from_codim(X, table[name], name)
        try:
            return cls.constant(X, int(name))
        except ValueError:
            raise StratificationError(f"unknown perversity {name!r}") from None


# supports and allowability

def support_mod(chain: dict, singular) -> set:
    """Closed support of a chain after dropping simplices in Σ."""
    return _closure(s for s, v in chain.items() if v and s not in singular)


def _closure(simplices) -> set:
    out = set()
    for s in simplices:
        if s not in out:
            out.update(faces_of(s))
    return out


def dim_meet(support: set, stratum: Stratum) -> int:
    """dim(|ξ| ∩ Z); -1 when empty."""
    return max((len(s) - 1 for s in stratum.simplices if s in support), default=-1)


@dataclass
class StratumCheck:
    stratum: str
    codim: int
    perversity: int
    chain_dim: int
    chain_budget: int
    boundary_dim: int
    boundary_budget: int

    @property
    def ok(self) -> bool:
        return (self.chain_dim < 0 or self.chain_dim <= self.chain_budget) and \
            (self.boundary_dim < 0 or self.boundary_dim <= self.boundary_budget)


@dataclass
class AllowabilityReport:
    degree: int
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]


def allowability_check(X: FilteredPseudomanifold, chain: dict, i: int, p: Perversity) -> AllowabilityReport:
    """Per singular stratum: dim(|ξ|∩Z) ≤ i - codim + p(Z) and dim(|∂ξ|∩Z) ≤ i - 1 - codim + p(Z)."""
    sing = X.singular.simplices
    sup = support_mod(chain, sing)
    bd = {s: v for s, v in simplicial_boundary(chain).items() if s not in sing}
    bsup = support_mod(bd, sing)
    rep = AllowabilityReport(i)
    for st in X.singular_strata():
        pv = p(st)
        rep.checks.append(StratumCheck(st.label, st.codim, pv,
                                       dim_meet(sup, st), i - st.codim + pv,
                                       dim_meet(bsup, st), i - 1 - st.codim + pv))
    return rep


def simplex_allowable(X: FilteredPseudomanifold, s: tuple, p: Perversity) -> bool:
    i = len(s) - 1
    faces = _closure([s])
    for st in X.singular_strata():
        d = dim_meet(faces, st)
        if d >= 0 and d > i - st.codim + p(st):
            return False
    return True


# intersection chain complex

class IntersectionComplex:
    """I^pC_*: the lattice of chains in C_*(X, Σ) on allowable simplices whose
    boundary (mod Σ) is again on allowable simplices, with a basis per degree."""

    def __init__(self, X: FilteredPseudomanifold, p: Perversity):
        self.X = X
        self.p = p
        K = X.complex
        sing = X.singular.simplices
        self.allowable = {}
        self.bad = {}
        for k in range(X.n + 1):
            ok, bad = [], []
            for s in K.simplices(k):
                if s in sing:
                    continue
                (ok if simplex_allowable(X, s, p) else bad).append(s)
            self.allowable[k] = ok
            self.bad[k] = set(bad)
        self.basis = {}
        self._coord = {}
        for k in range(X.n + 1):
            self._build(k)
        cells = {k: [(k, j) for j in range(len(self.basis[k]))] for k in self.basis}
        d = {}
        for k in self.basis:
            dk = {}
            for j, v in enumerate(self.basis[k]):
                bd = self.reduce_mod_sigma(simplicial_boundary(v))
                dk[(k, j)] = {(k - 1, t): c for t, c in enumerate(self.coordinates(k - 1, bd)) if c} if k else {}
            d[k] = dk
        self.complex = ChainComplex(cells, d)

    def reduce_mod_sigma(self, chain: dict) -> dict:
        sing = self.X.singular.simplices
        return {s: v for s, v in chain.items() if s not in sing}

    def _build(self, k: int):
        cols = self.allowable[k]
        bad = sorted(self.bad.get(k - 1, ()))
        n = len(cols)
        if n == 0:
            self.basis[k] = []
            self._coord[k] = None
            return
        if not bad:
            V = [[int(i == j) for j in range(n)] for i in range(n)]
            rk = 0
        else:
            ridx = {b: i for i, b in enumerate(bad)}
            M = [[0] * n for _ in bad]
            for j, s in enumerate(cols):
                for f, v in simplicial_boundary({s: 1}).items():
                    if f in ridx:
                        M[ridx[f]][j] = v
            dec = smith_normal_form(M)
            V, rk = dec.V, dec.rank
        basis = []
        for j in range(rk, n):
            basis.append({cols[i]: V[i][j] for i in range(n) if V[i][j]})
        self.basis[k] = basis
        self._coord[k] = (cols, integer_inverse(V), rk)

    def coordinates(self, k: int, chain: dict) -> list:
        """Coordinates of a lattice element in the degree-k basis."""
        if k < 0 or self._coord.get(k) is None:
            if chain:
                raise StratificationError("chain is not in the intersection chain lattice")
            return []
        cols, Vinv, rk = self._coord[k]
        idx = {s: i for i, s in enumerate(cols)}
        x = [0] * len(cols)
        for s, v in chain.items():
            if s not in idx:
                raise StratificationError(f"simplex {s} is not allowable")
            x[idx[s]] = v
        y = [sum(Vinv[i][j] * x[j] for j in range(len(cols)) if x[j]) for i in range(len(cols))]
        if any(y[:rk]):
            raise StratificationError("chain boundary leaves the allowable simplices")
        return y[rk:]

    def to_chain(self, k: int, vec) -> dict:
        out = {}
        for c, v in zip(vec, self.basis[k]):
            add_into(out, v, c)
        return out

    def homology(self, k: int) -> GroupPresentation:
        H = self.complex.homology(k)
        gens = [self.to_chain(k, [g.get((k, j), 0) for j in range(len(self.basis[k]))])
                for g in H.generators]

        def coords(chain, H=H, k=k):
            vec = self.coordinates(k, self.reduce_mod_sigma(chain))
            return H.coords({(k, j): v for j, v in enumerate(vec) if v})

        return GroupPresentation(k, H.rank, H.torsion, gens, coords)


def intersection_homology(X: FilteredPseudomanifold, p: Perversity, k: int) -> GroupPresentation:
    """I^pH_k(X) as the homology of the intersection chain lattice."""
    if k < 0 or k > X.n:
        return GroupPresentation(k, 0, [], [], lambda ch: [])
    return IntersectionComplex(X, p).homology(k)


def intersection_homology_all(X: FilteredPseudomanifold, p: Perversity) -> list:
    IC = IntersectionComplex(X, p)
    return [IC.homology(k) for k in range(X.n + 1)]
