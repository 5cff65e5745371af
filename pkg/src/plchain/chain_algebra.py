"""Exact integer chain algebra.

Chains and cochains are sparse dicts ``cell -> int``; simplices are oriented by
their sorted vertex order.  A :class:`ChainComplex` is a graded set of cells
with a sparse differential of degree -1; cochain complexes are represented by
the dual complex with degrees negated, so a single homology engine serves both.

Homology is computed by first cancelling unit entries of the differential
(algebraic Gaussian elimination, which keeps explicit comparison maps to and
from the smaller complex) and then taking Smith normal forms of what is left.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field
from itertools import count
from typing import Callable, Hashable, Iterable

from .complex_core import SimplicialComplex, Subcomplex, boundary_faces
from .snf import SNFDecomposition, integer_inverse, smith_normal_form

try:
    if os.environ.get("PLCHAIN_PURE_PYTHON") == "1":
        raise ImportError
    from ._sparse_ext import eliminate as _eliminate_ext
except ImportError:
    _eliminate_ext = None

Chain = dict


class AlgebraError(ValueError):
    pass


# sparse chain helpers

def add_into(acc: dict, other: dict, c: int = 1) -> dict:
    for k, v in other.items():
        nv = acc.get(k, 0) + c * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def combine(*terms) -> dict:
    """Linear combination of ``(coefficient, chain)`` pairs."""
    out = {}
    for c, ch in terms:
        if c:
            add_into(out, ch, c)
    return out


def scale(ch: dict, c: int) -> dict:
    return {k: c * v for k, v in ch.items()} if c else {}


def simplicial_boundary(ch: dict) -> dict:
    out = {}
    for s, c in ch.items():
        if len(s) == 1:
            continue
        for sg, f in boundary_faces(s):
            nv = out.get(f, 0) + sg * c
            if nv:
                out[f] = nv
            else:
                out.pop(f, None)
    return out


def restrict(ch: dict, keep) -> dict:
    return {k: v for k, v in ch.items() if k in keep}


def drop(ch: dict, cells) -> dict:
    return {k: v for k, v in ch.items() if k not in cells}


def evaluate(cochain: dict, chain: dict) -> int:
    if len(cochain) < len(chain):
        return sum(v * chain.get(k, 0) for k, v in cochain.items())
    return sum(v * cochain.get(k, 0) for k, v in chain.items())


def boundary_matrix(K: SimplicialComplex, k: int) -> list:
    """Matrix of the boundary from k-chains to (k-1)-chains (rows: faces)."""
    cols = K.simplices(k)
    rows = K.simplices(k - 1)
    M = [[0] * len(cols) for _ in rows]
    if k <= 0:
        return M
    for j, s in enumerate(cols):
        for sg, f in boundary_faces(s):
            M[K.index(f)][j] = sg
    return M


# sparse integer linear solver

def _eliminate_py(nrows: int, ncols: int, row_cols: list, row_vals: list, rhs: list):
    """Unit-pivot elimination on indexed rows; same contract as the compiled kernel."""
    rows = [dict() for _ in range(nrows)]
    colrows = [set() for _ in range(ncols)]
    for r in range(nrows):
        for c, v in zip(row_cols[r], row_vals[r]):
            if v:
                rows[r][c] = v
                colrows[c].add(r)
    b = list(rhs)
    alive = [True] * nrows
    heap = [(len(e), r) for r, e in enumerate(rows)]
    heapq.heapify(heap)
    pivots = []
    while heap:
        ln, r = heapq.heappop(heap)
        if not alive[r]:
            continue
        e = rows[r]
        if ln != len(e):
            heapq.heappush(heap, (len(e), r))
            continue
        if not e:
            if b[r]:
                return False, None, None, None
            alive[r] = False
            continue
        units = [c for c, v in e.items() if v in (1, -1)]
        if not units:
            continue
        c = min(units, key=lambda c: (len(colrows[c]), c))
        eps = e[c]
        er = e
        br = b[r]
        alive[r] = False
        rows[r] = {}
        for cc in er:
            colrows[cc].discard(r)
        for r2 in list(colrows[c]):
            e2 = rows[r2]
            lam = e2[c] * eps
            for cc, v in er.items():
                nv = e2.get(cc, 0) - lam * v
                if nv:
                    if cc not in e2:
                        colrows[cc].add(r2)
                    e2[cc] = nv
                else:
                    e2.pop(cc, None)
                    colrows[cc].discard(r2)
            if br:
                b[r2] -= lam * br
            heapq.heappush(heap, (len(e2), r2))
        colrows[c] = set()
        del er[c]
        pivots.append((c, eps, br, list(er), list(er.values())))
    residual = {r: rows[r] for r in range(nrows) if alive[r] and (rows[r] or b[r])}
    return True, pivots, residual, {r: b[r] for r in residual}


def solve_sparse(columns: dict, rhs: dict):
    """Integer solution x of A x = rhs, or None when none exists.

    ``columns`` maps an unknown to its column ``{row: coeff}``.  Unit pivots
    are eliminated sparsely; the residual block is solved through its Smith
    normal form with free variables set to zero.
    """
    col_keys = list(columns)
    row_index: dict = {}
    row_cols: list = []
    row_vals: list = []
    for j, c in enumerate(col_keys):
        for r, v in columns[c].items():
            if v:
                i = row_index.get(r)
                if i is None:
                    i = row_index[r] = len(row_cols)
                    row_cols.append([])
                    row_vals.append([])
                row_cols[i].append(j)
                row_vals[i].append(v)
    for r, v in rhs.items():
        if v and r not in row_index:
            row_index[r] = len(row_cols)
            row_cols.append([])
            row_vals.append([])
    b = [0] * len(row_cols)
    for r, v in rhs.items():
        if v:
            b[row_index[r]] = v
    args = (len(row_cols), len(col_keys), row_cols, row_vals, b)
    result = None
    if _eliminate_ext is not None:
        try:
            result = _eliminate_ext(*args)
        except OverflowError:
            result = None
    if result is None:
        result = _eliminate_py(*args)
    ok, pivots, residual, bres = result
    if not ok:
        return None
    x = [0] * len(col_keys)
    if residual:
        rest_rows = sorted(residual)
        rest_cols = sorted({c for r in rest_rows for c in residual[r]})
        if not rest_cols:
            return None
        cidx = {c: j for j, c in enumerate(rest_cols)}
        A = [[0] * len(rest_cols) for _ in rest_rows]
        for i, r in enumerate(rest_rows):
            for c, v in residual[r].items():
                A[i][cidx[c]] = v
        dec = smith_normal_form(A)
        Ub = [sum(u * bres[r] for u, r in zip(urow, rest_rows)) for urow in dec.U]
        y = [0] * len(rest_cols)
        for t, val in enumerate(Ub):
            d = dec.D[t][t] if t < len(rest_cols) else 0
            if d:
                if val % d:
                    return None
                y[t] = val // d
            elif val:
                return None
        for j, c in enumerate(rest_cols):
            x[c] = sum(dec.V[j][t] * y[t] for t in range(len(rest_cols)))
    for c, eps, br, cols, vals in reversed(pivots):
        x[c] = eps * (br - sum(w * x[cc] for cc, w in zip(cols, vals)))
    return {col_keys[j]: v for j, v in enumerate(x) if v}


# chain complexes

class ChainComplex:
    """Finite free chain complex on named cells with differential of degree -1.

    ``cells[k]`` lists the basis of degree k; ``d[k][cell]`` is the boundary of
    a degree-k cell as a dict over degree k-1 cells.
    """

    def __init__(self, cells: dict, d: dict):
        self.cells = {k: list(v) for k, v in cells.items()}
        self.d = d
        self._red = None
        self._hom = {}

    @classmethod
    def from_boundary(cls, cells: dict, boundary: Callable):
        """Relative complex: faces outside the given cell sets are dropped."""
        sets = {k: set(v) for k, v in cells.items()}
        d = {}
        for k, lst in cells.items():
            below = sets.get(k - 1, ())
            dk = {}
            for c in lst:
                dk[c] = {f: v for f, v in boundary(c).items() if f in below and v}
            d[k] = dk
        return cls(cells, d)

    def boundary(self, k: int, ch: dict) -> dict:
        out = {}
        dk = self.d.get(k, {})
        for c, v in ch.items():
            add_into(out, dk.get(c, {}), v)
        return out

    def dual(self) -> "ChainComplex":
        """Cochain complex, placed in negated degrees."""
        cells = {-k: v for k, v in self.cells.items()}
        d = {}
        for k in self.cells:
            dk1 = self.d.get(k + 1, {})
            col = {c: {} for c in self.cells[k]}
            for e, bd in dk1.items():
                for f, v in bd.items():
                    col[f][e] = v
            d[-k] = col
        return ChainComplex(cells, d)

    def degrees(self):
        return sorted(self.cells)

    # reduction
    def reduction(self) -> "_Reduction":
        if self._red is None:
            self._red = _Reduction(self)
        return self._red

    def homology(self, k: int) -> "GroupPresentation":
        if k not in self._hom:
            self._hom[k] = _homology(self, k)
        return self._hom[k]

    def is_cycle(self, k: int, ch: dict) -> bool:
        return not self.boundary(k, ch)

    def solve_boundary(self, k: int, ch: dict):
        """A (k+1)-chain w with d(w) = ch, or None."""
        cols = self.d.get(k + 1, {})
        return solve_sparse(cols, ch)


class _Reduction:
    """Cancels unit entries of the differential, keeping comparison maps."""

    def __init__(self, C: ChainComplex):
        degs = C.degrees()
        order = {}
        for k in degs:
            for i, c in enumerate(C.cells[k]):
                order[c] = i
        col = {k: {a: dict(v) for a, v in C.d.get(k, {}).items()} for k in degs}
        for k in degs:
            col[k] = {a: col[k].get(a, {}) for a in C.cells[k]}
        row = {k: {} for k in degs}
        for k in degs:
            rk = row[k]
            for a, bd in col[k].items():
                for b, v in bd.items():
                    rk.setdefault(b, {})[a] = v
        self.ops = []
        heap = []
        tick = count()
        for k in degs:
            for a, bd in col[k].items():
                heap.append((len(bd), k, order[a], next(tick), a))
        heapq.heapify(heap)
        while heap:
            ln, k, _, _, a = heapq.heappop(heap)
            ca = col[k].get(a)
            if ca is None or ln != len(ca) or not ca:
                continue
            units = [b for b, v in ca.items() if v in (1, -1)]
            if not units:
                continue
            rk = row[k]
            b = min(units, key=lambda b: (len(rk[b]), order[b]))
            eps = ca[b]
            del col[k][a]
            for bb in ca:
                del rk[bb][a]
            beta = rk.pop(b)
            delta = {x: v for x, v in ca.items() if x != b}
            for c, lam in beta.items():
                mult = -lam * eps
                cc = col[k][c]
                del cc[b]
                for x, v in delta.items():
                    nv = cc.get(x, 0) + mult * v
                    if nv:
                        cc[x] = nv
                        rk[x][c] = nv
                    else:
                        cc.pop(x, None)
                        rk[x].pop(c, None)
                heapq.heappush(heap, (len(cc), k, order[c], next(tick), c))
            if k + 1 in row:
                for e in row[k + 1].pop(a, {}):
                    del col[k + 1][e][a]
                    heapq.heappush(heap, (len(col[k + 1][e]), k + 1, order[e], next(tick), e))
            if k - 1 in col:
                for y in col[k - 1].pop(b, {}):
                    del row[k - 1][y][b]
            self.ops.append((k, a, b, eps, delta, beta))
        self.col = col
        self.cells = {k: [a for a in C.cells[k] if a in col[k]] for k in degs}
        self._by_deg_f = {}
        self._by_deg_g = {}
        for op in self.ops:
            k = op[0]
            self._by_deg_f.setdefault(k - 1, []).append(op)
            self._by_deg_g.setdefault(k, []).append(op)

    def project(self, k: int, ch: dict) -> dict:
        """Chain map from the original complex to the reduced one."""
        x = dict(ch)
        for _, a, b, eps, delta, _ in self._by_deg_f.get(k, ()):
            xb = x.pop(b, 0)
            if xb:
                add_into(x, delta, -xb * eps)
        alive = self.col.get(k, {})
        return {c: v for c, v in x.items() if c in alive}

    def lift(self, k: int, ch: dict) -> dict:
        """Chain map from the reduced complex back to the original one."""
        x = dict(ch)
        for _, a, b, eps, delta, beta in reversed(self._by_deg_g.get(k, ())):
            if len(beta) < len(x):
                s = sum(v * x.get(c, 0) for c, v in beta.items())
            else:
                s = sum(v * beta.get(c, 0) for c, v in x.items())
            if s:
                x[a] = x.get(a, 0) - eps * s
        return x

    def matrix(self, k: int):
        rows = self.cells.get(k - 1, [])
        cols = self.cells.get(k, [])
        ridx = {c: i for i, c in enumerate(rows)}
        M = [[0] * len(cols) for _ in rows]
        for j, a in enumerate(cols):
            for b, v in self.col[k][a].items():
                M[ridx[b]][j] = v
        return M


@dataclass
class GroupPresentation:
    """H ≅ Z/t_1 ⊕ ... ⊕ Z/t_s ⊕ Z^rank, with cycle representatives.

    ``generators`` lists the torsion generators first and then the free ones,
    each as a chain in the ambient cell basis.  ``coords`` maps a cycle to its
    coordinate vector (torsion entries reduced modulo their order).
    """
    degree: int
    rank: int
    torsion: list
    generators: list
    _coords: Callable = field(repr=False, default=None)

    @property
    def ngens(self) -> int:
        return len(self.torsion) + self.rank

    @property
    def orders(self) -> list:
        return list(self.torsion) + [0] * self.rank

    def coords(self, ch: dict) -> list:
        return self._coords(ch)

    def element(self, vec) -> dict:
        out = {}
        for c, g in zip(vec, self.generators):
            add_into(out, g, c)
        return out

    def normalize(self, vec) -> list:
        return [v % o if o else v for v, o in zip(vec, self.orders)]

    def is_zero(self) -> bool:
        return self.ngens == 0

    def describe(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"


def _homology(C: ChainComplex, k: int) -> GroupPresentation:
    red = C.reduction()
    ck = red.cells.get(k, [])
    m = len(ck)
    if m == 0:
        return GroupPresentation(k, 0, [], [], lambda ch: [])
    d_in = red.matrix(k + 1) if red.cells.get(k + 1) else [[] for _ in range(m)]
    d_out = red.matrix(k) if red.cells.get(k - 1) else []
    if d_in and d_in[0]:
        dec = smith_normal_form(d_in)
        U = dec.U
        diag = [dec.D[i][i] for i in range(min(m, len(d_in[0])))]
    else:
        U = [[int(i == j) for j in range(m)] for i in range(m)]
        diag = []
    r = sum(1 for x in diag if x)
    Uinv = integer_inverse(U)
    # d_out restricted to the complement of the image span
    if d_out:
        M = [[sum(d_out[i][t] * Uinv[t][j] for t in range(m)) for j in range(r, m)]
             for i in range(len(d_out))]
    else:
        M = []
    free_dim = m - r
    if M and free_dim:
        dm = smith_normal_form(M)
        rk = dm.rank
        Q = dm.V
    else:
        rk = 0
        Q = [[int(i == j) for j in range(free_dim)] for i in range(free_dim)]
    Qinv = integer_inverse(Q) if free_dim else []
    tors_idx = [i for i in range(r) if diag[i] > 1]
    torsion = [diag[i] for i in tors_idx]
    gens_red = []
    for i in tors_idx:
        gens_red.append([Uinv[t][i] for t in range(m)])
    nfree = free_dim - rk
    for j in range(rk, free_dim):
        v = [0] * m
        for s in range(free_dim):
            q = Q[s][j]
            if q:
                for t in range(m):
                    v[t] += q * Uinv[t][r + s]
        gens_red.append(v)
    gens = []
    for v in gens_red:
        ch = {ck[t]: x for t, x in enumerate(v) if x}
        gens.append(red.lift(k, ch))
    idx = {c: t for t, c in enumerate(ck)}

    def coords(ch, red=red, U=U, k=k):
        x = red.project(k, ch)
        vec = [0] * m
        for c, v in x.items():
            vec[idx[c]] = v
        y = [sum(U[i][t] * vec[t] for t in range(m) if vec[t]) for i in range(m)]
        out = [y[i] % diag[i] for i in tors_idx]
        tail = y[r:]
        z = [sum(Qinv[j][s] * tail[s] for s in range(free_dim)) for j in range(free_dim)]
        if any(z[j] for j in range(rk)):
            raise AlgebraError("chain is not a cycle")
        out.extend(z[rk:])
        return out

    return GroupPresentation(k, nfree, torsion, gens, coords)


def relative_complex(K: SimplicialComplex, A: Subcomplex | None = None,
                     B: Subcomplex | None = None, degrees: Iterable[int] | None = None) -> ChainComplex:
    """Simplicial chain complex of the pair (A, B) inside K."""
    a_set = A.simplices if A is not None else None
    b_set = B.simplices if B is not None else frozenset()
    if degrees is None:
        degrees = range(0, K.dim + 1)
    cells = {}
    for k in degrees:
        lst = K.simplices(k)
        if a_set is not None:
            lst = [s for s in lst if s in a_set]
        cells[k] = [s for s in lst if s not in b_set]
    return ChainComplex.from_boundary(cells, lambda s: dict((f, sg) for sg, f in boundary_faces(s)) if len(s) > 1 else {})


def homology_of_pair(K: SimplicialComplex, A: Subcomplex | None, B: Subcomplex | None, k: int) -> GroupPresentation:
    """H_k(A, B; Z) with explicit relative cycle representatives."""
    if B is not None and A is not None and not B <= A:
        raise AlgebraError("B is not contained in A")
    C = relative_complex(K, A, B, degrees=[d for d in range(k - 2, k + 3) if 0 <= d <= K.dim])
    if k < 0 or k > K.dim:
        return GroupPresentation(k, 0, [], [], lambda ch: [])
    return C.homology(k)


def cohomology_of_pair(K: SimplicialComplex, A: Subcomplex | None, B: Subcomplex | None, k: int) -> GroupPresentation:
    """H^k(A, B; Z) via the transposed complex; generators are cocycles."""
    if k < 0 or k > K.dim:
        return GroupPresentation(k, 0, [], [], lambda ch: [])
    C = relative_complex(K, A, B, degrees=[d for d in range(k - 2, k + 3) if 0 <= d <= K.dim])
    H = C.dual().homology(-k)
    return GroupPresentation(k, H.rank, H.torsion, H.generators, H._coords)


def cohomology(C: ChainComplex, k: int) -> GroupPresentation:
    H = C.dual().homology(-k)
    return GroupPresentation(k, H.rank, H.torsion, H.generators, H._coords)


def homology_ranks(K: SimplicialComplex) -> list:
    return [homology_of_pair(K, None, None, k) for k in range(K.dim + 1)]


# maps between presentations

@dataclass
class GroupMap:
    source: GroupPresentation
    target: GroupPresentation
    matrix: list

    def __call__(self, vec) -> list:
        out = [sum(self.matrix[i][j] * vec[j] for j in range(len(vec)))
               for i in range(self.target.ngens)]
        return self.target.normalize(out)

    def __matmul__(self, other: "GroupMap") -> "GroupMap":
        """Composition self ∘ other."""
        cols = []
        for j in range(other.source.ngens):
            e = [int(i == j) for i in range(other.source.ngens)]
            cols.append(self(other(e)))
        M = [[cols[j][i] for j in range(len(cols))] for i in range(self.target.ngens)]
        return GroupMap(other.source, self.target, M)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c: int) -> "GroupMap":
        M = [[c * x for x in row] for row in self.matrix]
        M = [self.target.normalize([M[i][j] for i in range(self.target.ngens)])
             for j in range(self.source.ngens)]
        return GroupMap(self.source, self.target,
                        [[M[j][i] for j in range(self.source.ngens)] for i in range(self.target.ngens)])

    def normalized(self) -> list:
        cols = [self([int(i == j) for i in range(self.source.ngens)]) for j in range(self.source.ngens)]
        return [[cols[j][i] for j in range(len(cols))] for i in range(self.target.ngens)]

    def equals(self, other: "GroupMap") -> bool:
        return self.normalized() == other.normalized()

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.normalized() for x in row)

    def inverse(self) -> "GroupMap":
        """Exact inverse; raises AlgebraError with an SNF witness otherwise."""
        S, T = self.source, self.target
        if sorted(S.torsion) != sorted(T.torsion) or S.rank != T.rank:
            raise AlgebraError(f"not an isomorphism: source {S.describe()} vs target {T.describe()}")
        n = T.ngens
        # unknowns: source coefficients plus multiples of target relations
        cols = {}
        for j in range(S.ngens):
            cols[("x", j)] = {i: self.matrix[i][j] for i in range(n) if self.matrix[i][j]}
        for i, o in enumerate(T.orders):
            if o:
                cols[("r", i)] = {i: o}
        inv_cols = []
        for i in range(n):
            sol = solve_sparse(cols, {i: 1})
            if sol is None:
                dec = smith_normal_form(self.matrix) if self.matrix and self.matrix[0] else None
                witness = dec.diagonal if dec else []
                raise AlgebraError(f"not an isomorphism (not surjective); SNF diagonal {witness}")
            inv_cols.append(S.normalize([sol.get(("x", j), 0) for j in range(S.ngens)]))
        M = [[inv_cols[i][j] for i in range(n)] for j in range(S.ngens)]
        return GroupMap(T, S, M)

    def is_isomorphism(self) -> bool:
        try:
            self.inverse()
            return True
        except AlgebraError:
            return False


def map_from_chain_map(source: GroupPresentation, target: GroupPresentation,
                       f: Callable[[dict], dict]) -> GroupMap:
    cols = [target.coords(f(g)) for g in source.generators]
    M = [[cols[j][i] for j in range(len(cols))] for i in range(target.ngens)]
    return GroupMap(source, target, M)


def induced_map(source: GroupPresentation, target: GroupPresentation,
                f: Callable[[dict], dict] | None = None, invert: bool = False) -> GroupMap:
    """Matrix of the map induced by a chain map ``f`` (identity on cells by default).

    Cells absent from the target's relative complex are dropped by its
    coordinate function, so subcomplex inclusions of pairs need no ``f``.
    With ``invert`` the inverse of the (necessarily bijective) map is returned.
    """
    g = map_from_chain_map(source, target, f if f is not None else (lambda ch: ch))
    return g.inverse() if invert else g


def inclusion_map(K: SimplicialComplex, pair_src, pair_dst, k: int) -> GroupMap:
    S = homology_of_pair(K, *pair_src, k)
    T = homology_of_pair(K, *pair_dst, k)
    return induced_map(S, T)


def connecting_map(K: SimplicialComplex, triple, k: int) -> GroupMap:
    """Boundary H_k(A, B) -> H_{k-1}(B, C) of the triple (A, B, C)."""
    A, B, C = triple
    if not (C is None or C <= B) or not B <= A:
        raise AlgebraError("triple is not nested")
    S = homology_of_pair(K, A, B, k)
    T = homology_of_pair(K, B, C, k - 1)
    bset = B.simplices
    return map_from_chain_map(S, T, lambda ch: restrict(simplicial_boundary(ch), bset))


def coboundary_map(K: SimplicialComplex, triple, k: int) -> GroupMap:
    """Coboundary H^k(B, C) -> H^{k+1}(A, B) of the triple (A, B, C)."""
    A, B, C = triple
    S = cohomology_of_pair(K, B, C, k)
    T = cohomology_of_pair(K, A, B, k + 1)
    return map_from_chain_map(S, T, lambda co: cochain_coboundary(K, co, k, A.simplices))


def cochain_coboundary(K: SimplicialComplex, co: dict, k: int, within=None) -> dict:
    """δα(τ) = α(∂τ) on (k+1)-simplices (optionally only those in ``within``)."""
    out = {}
    for f, v in co.items():
        for t in K.cofaces()[f]:
            if within is not None and t not in within:
                continue
            j = next(i for i, x in enumerate(t) if x not in f)
            nv = out.get(t, 0) + (-1) ** j * v
            if nv:
                out[t] = nv
            else:
                out.pop(t, None)
    return out


# products

def cup_product(K: SimplicialComplex, alpha: dict, p: int, beta: dict, q: int) -> dict:
    """(α⌣β)(v0..v_{p+q}) = α(v0..v_p)·β(v_p..v_{p+q})."""
    out = {}
    for s in K.simplices(p + q):
        a = alpha.get(s[:p + 1], 0)
        if a:
            b = beta.get(s[p:], 0)
            if b:
                out[s] = a * b
    return out


def cap_product(alpha: dict, p: int, chain: dict) -> dict:
    """α⌢σ = α(back p-face)·(front face); satisfies <α⌣β, ξ> = <α, β⌢ξ>."""
    out = {}
    for s, c in chain.items():
        n = len(s) - 1
        if p > n:
            raise AlgebraError(f"cap of a {p}-cochain with a {n}-chain")
        a = alpha.get(s[n - p:], 0)
        if a:
            f = s[:n - p + 1]
            nv = out.get(f, 0) + a * c
            if nv:
                out[f] = nv
            else:
                out.pop(f, None)
    return out


def unit_cochain(K: SimplicialComplex, within=None) -> dict:
    return {s: 1 for s in K.simplices(0) if within is None or s in within}


__all__ = [
    "AlgebraError", "ChainComplex", "GroupMap", "GroupPresentation", "SNFDecomposition",
    "boundary_matrix", "cap_product", "cochain_coboundary", "cohomology", "cohomology_of_pair",
    "coboundary_map", "connecting_map", "cup_product", "homology_of_pair", "inclusion_map",
    "induced_map", "map_from_chain_map", "relative_complex", "simplicial_boundary",
    "smith_normal_form", "solve_sparse",
]
