"""Finite abstract simplicial complexes and the constructions built on them.

Vertices are stored as integer ids ``0..V-1`` whose numeric order is the
vertex order of the complex; the user-facing labels live in ``labels``.
A simplex is a strictly increasing tuple of vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Sequence

Simplex = tuple


class ComplexError(ValueError):
    pass


def faces_of(s: Simplex) -> Iterable[Simplex]:
    """All nonempty faces of ``s``, including ``s`` itself."""
    for k in range(1, len(s) + 1):
        yield from combinations(s, k)


def boundary_faces(s: Simplex):
    """Codimension-one faces with the alternating signs of the face formula."""
    for j in range(len(s)):
        yield (-1) ** j, s[:j] + s[j + 1:]


@dataclass(frozen=True)
class Lineage:
    parent: "SimplicialComplex"
    # smallest parent simplex containing each child simplex
    carrier: dict
    # parent simplex whose barycenter is each child vertex
    vertex_carrier: tuple


class SimplicialComplex:
    """Face-closed set of simplices with a fixed vertex order."""

    def __init__(self, simplices: Iterable[Simplex], labels: Sequence[Hashable],
                 lineage: Lineage | None = None):
        closed = set()
        for s in simplices:
            if s in closed:
                continue
            for f in faces_of(s):
                closed.add(f)
        if not closed:
            raise ComplexError("empty complex")
        self.labels = tuple(labels)
        self.dim = max(len(s) for s in closed) - 1
        self._by_dim = [[] for _ in range(self.dim + 1)]
        for s in closed:
            self._by_dim[len(s) - 1].append(s)
        for lst in self._by_dim:
            lst.sort()
        self._index = {}
        for lst in self._by_dim:
            for i, s in enumerate(lst):
                self._index[s] = i
        self.lineage = lineage
        self._cofaces = None

    # basic queries
    def simplices(self, k: int | None = None) -> list:
        if k is None:
            return [s for lst in self._by_dim for s in lst]
        if k < 0 or k > self.dim:
            return []
        return self._by_dim[k]

    def __contains__(self, s) -> bool:
        return s in self._index

    def __len__(self) -> int:
        return len(self._index)

    def index(self, s: Simplex) -> int:
        return self._index[s]

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    def facets(self) -> list:
        cof = self.cofaces()
        return [s for s in self.simplices() if not cof[s]]

    def cofaces(self) -> dict:
        """Map simplex -> list of simplices having it as a codimension-one face."""
        if self._cofaces is None:
            cof = {s: [] for s in self._index}
            for k in range(1, self.dim + 1):
                for s in self._by_dim[k]:
                    for _, f in boundary_faces(s):
                        cof[f].append(s)
            self._cofaces = cof
        return self._cofaces

    def star(self, s: Simplex) -> list:
        """Simplices having ``s`` as a face."""
        vs = set(s)
        return [t for t in self.simplices() if vs.issubset(t)]

    def label_simplex(self, s: Simplex) -> tuple:
        return tuple(self.labels[v] for v in s)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(lst) for k, lst in enumerate(self._by_dim))

    def full(self) -> "Subcomplex":
        return Subcomplex(self, frozenset(self._index))

    def subcomplex(self, simplices: Iterable[Simplex]) -> "Subcomplex":
        return Subcomplex.closure(self, simplices)

    def __repr__(self):
        counts = [len(lst) for lst in self._by_dim]
        return f"SimplicialComplex(dim={self.dim}, f-vector={counts})"


@dataclass(frozen=True)
class Subcomplex:
    complex: SimplicialComplex
    simplices: frozenset = field(default_factory=frozenset)

    @staticmethod
    def closure(K: SimplicialComplex, simplices: Iterable[Simplex]) -> "Subcomplex":
        out = set()
        for s in simplices:
            s = tuple(sorted(s))
            if s not in K:
                raise ComplexError(f"simplex {K.label_simplex(s)} not in complex")
            if s not in out:
                out.update(faces_of(s))
        return Subcomplex(K, frozenset(out))

    @staticmethod
    def empty(K: SimplicialComplex) -> "Subcomplex":
        return Subcomplex(K, frozenset())

    def __contains__(self, s) -> bool:
        return s in self.simplices

    def __len__(self):
        return len(self.simplices)

    def __or__(self, other: "Subcomplex") -> "Subcomplex":
        return Subcomplex(self.complex, self.simplices | other.simplices)

    def __and__(self, other: "Subcomplex") -> "Subcomplex":
        return Subcomplex(self.complex, self.simplices & other.simplices)

    def __le__(self, other: "Subcomplex") -> bool:
        return self.simplices <= other.simplices

    @property
    def vertices(self) -> frozenset:
        return frozenset(s[0] for s in self.simplices if len(s) == 1)

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def of_dim(self, k: int) -> list:
        return sorted(s for s in self.simplices if len(s) == k + 1)

    def is_full(self) -> bool:
        return not self.fullness_violations()

    def fullness_violations(self) -> list:
        vs = self.vertices
        return [s for s in self.complex.simplices()
                if s not in self.simplices and vs.issuperset(s)]


# construction

def build_complex(facets: Sequence[Sequence[Hashable]],
                  order: Sequence[Hashable] | None = None) -> SimplicialComplex:
    """Face closure of ``facets``.

    The vertex order is ``order`` when given, else the sorted order of labels.
    """
    if not facets:
        raise ComplexError("empty facet list")
    labels = set()
    for f in facets:
        if len(f) == 0:
            raise ComplexError("empty facet")
        if len(set(f)) != len(f):
            raise ComplexError(f"duplicate vertex in facet {list(f)}")
        labels.update(f)
    if order is not None:
        ordered = list(order)
        if len(set(ordered)) != len(ordered):
            raise ComplexError("duplicate label in vertex order")
        missing = labels - set(ordered)
        if missing:
            raise ComplexError(f"vertices missing from the vertex order: {sorted(map(str, missing))}")
        unused = set(ordered) - labels
        if unused:
            raise ComplexError(f"vertices not used by any facet: {sorted(map(str, unused))}")
    else:
        try:
            ordered = sorted(labels)
        except TypeError:
            ordered = sorted(labels, key=repr)
    ids = {lab: i for i, lab in enumerate(ordered)}
    return SimplicialComplex((tuple(sorted(ids[v] for v in f)) for f in facets), ordered)


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """First derived subdivision with lineage.

    Vertex ``i`` of the result is the barycenter of ``vertex_carrier[i]``;
    barycenters are ordered by (dimension, enumeration) of their carrier, so the
    original vertices come first and every simplex of the result lists its
    vertices along an increasing flag.  The result is cached on ``K``.
    """
    cached = getattr(K, "_derived", None)
    if cached is not None:
        return cached
    carriers = [s for k in range(K.dim + 1) for s in K.simplices(k)]
    bid = {s: i for i, s in enumerate(carriers)}
    labels = []
    for s in carriers:
        if len(s) == 1:
            labels.append(K.labels[s[0]])
        else:
            labels.append("b(" + ",".join(str(K.labels[v]) for v in s) + ")")
    cof = K.cofaces()
    new = []
    carrier = {}

    def extend(flag):
        top = flag[-1]
        simplex = tuple(bid[t] for t in flag)
        new.append(simplex)
        for t in cof[top]:
            extend(flag + [t])

    for v in K.simplices(0):
        extend([v])
    L = SimplicialComplex(new, labels)
    for s in L.simplices():
        carrier[s] = carriers[s[-1]]
    L.lineage = Lineage(K, carrier, tuple(carriers))
    K._derived = L
    return L


def iterated_subdivision(K: SimplicialComplex, times: int) -> SimplicialComplex:
    for _ in range(times):
        K = barycentric_subdivision(K)
    return K


def lineage_chain(K: SimplicialComplex) -> list:
    """[K, parent(K), grandparent, ...]."""
    out = [K]
    while out[-1].lineage is not None:
        out.append(out[-1].lineage.parent)
    return out


def push_subcomplex(A: Subcomplex, target: SimplicialComplex) -> Subcomplex:
    """The subcomplex of a refinement ``target`` triangulating |A|."""
    chain = lineage_chain(target)
    if A.complex not in chain:
        raise ComplexError("target is not a refinement of the subcomplex's complex")
    steps = chain[:chain.index(A.complex)]
    simplices = A.simplices
    for K in reversed(steps):
        car = K.lineage.carrier
        simplices = frozenset(s for s in K.simplices() if car[s] in simplices)
    return Subcomplex(target, simplices)


def refine_to(K: SimplicialComplex, A: Subcomplex) -> Subcomplex:
    return push_subcomplex(A, K)


def make_full(K: SimplicialComplex, Z: Subcomplex):
    """Return (K', Z') with Z' full in K'; one barycentric subdivision suffices."""
    if Z.is_full():
        return K, Z
    K1 = barycentric_subdivision(K)
    return K1, push_subcomplex(Z, K1)


def neighborhoods(K: SimplicialComplex, Z: Subcomplex):
    """(C_Z, N_Z, frontier).

    C_Z consists of the simplices of K disjoint from Z.  N_Z lives in the second
    derived subdivision of K and is the closed set of simplices meeting Z there;
    the frontier is N_Z intersected with the closure of its complement.
    """
    bad = Z.fullness_violations()
    if bad:
        raise ComplexError(f"subcomplex is not full: {K.label_simplex(bad[0])}")
    zv = Z.vertices
    C = Subcomplex(K, frozenset(s for s in K.simplices() if zv.isdisjoint(s)))
    K2 = iterated_subdivision(K, 2)
    Z2 = push_subcomplex(Z, K2)
    z2v = Z2.vertices
    meeting = [s for s in K2.simplices() if not z2v.isdisjoint(s)]
    N = Subcomplex.closure(K2, meeting)
    rest = Subcomplex.closure(K2, [s for s in K2.simplices() if z2v.isdisjoint(s)])
    frontier = N & rest
    return C, N, frontier


# products

@dataclass
class ProductComplex:
    factors: tuple
    total: SimplicialComplex
    # vertex id of total -> (vertex of K, vertex of L)
    pairs: tuple
    diagonal: Subcomplex | None

    def project(self, s: Simplex, which: int) -> Simplex:
        return tuple(sorted({self.pairs[v][which] for v in s}))

    def vertex_id(self, a: int, b: int) -> int:
        return self._pair_index[(a, b)]

    def __post_init__(self):
        self._pair_index = {p: i for i, p in enumerate(self.pairs)}

    def simplex_of_chain(self, chain) -> Simplex:
        return tuple(self._pair_index[p] for p in chain)

    def product_subcomplex(self, A: Subcomplex, B: Subcomplex) -> Subcomplex:
        sa, sb = A.simplices, B.simplices
        return Subcomplex(self.total, frozenset(
            s for s in self.total.simplices()
            if self.project(s, 0) in sa and self.project(s, 1) in sb))


def staircase_chains(a: Simplex, b: Simplex):
    """Top simplices of the staircase triangulation of |a| x |b|.

    Each is a monotone lattice path from (a[0], b[0]) to (a[-1], b[-1]); the
    yielded value is the list of vertex pairs together with the step pattern
    (0 for a step in the first factor, 1 for the second).
    """
    p, q = len(a) - 1, len(b) - 1
    for ones in combinations(range(p + q), q):
        ones = set(ones)
        i = j = 0
        path = [(a[0], b[0])]
        steps = []
        for t in range(p + q):
            if t in ones:
                j += 1
                steps.append(1)
            else:
                i += 1
                steps.append(0)
            path.append((a[i], b[j]))
        yield path, tuple(steps)


def product_triangulation(K: SimplicialComplex, L: SimplicialComplex) -> ProductComplex:
    """Staircase triangulation of |K| x |L| induced by the vertex orders."""
    pairs = [(a, b) for a in range(K.num_vertices) for b in range(L.num_vertices)]
    pid = {p: i for i, p in enumerate(pairs)}
    tops = []
    for a in K.facets():
        for b in L.facets():
            for path, _ in staircase_chains(a, b):
                tops.append(tuple(pid[p] for p in path))
    labels = [(K.labels[a], L.labels[b]) for a, b in pairs]
    total = SimplicialComplex(tops, labels)
    used = sorted(v[0] for v in total.simplices(0))
    if len(used) != len(pairs):
        raise ComplexError("product has isolated vertices")
    P = ProductComplex((K, L), total, tuple(pairs), None)
    if K is L:
        diag = [tuple(pid[(v, v)] for v in s) for s in K.simplices()]
        P.diagonal = Subcomplex(total, frozenset(diag))
    return P


# orientation

class NonOrientableError(ComplexError):
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def induced_sign(top: Simplex, face: Simplex) -> int:
    j = next(i for i, v in enumerate(top) if v not in face)
    return (-1) ** j


def orient(K: SimplicialComplex, n: int | None = None, singular: Iterable[Simplex] = ()) -> dict:
    """Coherent signs on the n-simplices, relative to sorted vertex order.

    Codimension-one faces lying in ``singular`` impose no constraint.  Raises
    NonOrientableError carrying a closed chain of n-simplices along which the
    sign constraints are inconsistent.
    """
    if n is None:
        n = K.dim
    sing = set(singular)
    cof = K.cofaces()
    tops = K.simplices(n)
    adj = {t: [] for t in tops}
    for f in K.simplices(n - 1):
        if f in sing:
            continue
        ts = [t for t in cof[f] if len(t) == n + 1]
        if len(ts) == 2:
            t1, t2 = ts
            # coherent iff the induced orientations on f are opposite
            rel = -induced_sign(t1, f) * induced_sign(t2, f)
            adj[t1].append((t2, rel))
            adj[t2].append((t1, rel))
    sign = {}
    parent = {}
    for root in tops:
        if root in sign:
            continue
        sign[root] = 1
        parent[root] = None
        stack = [root]
        while stack:
            t = stack.pop()
            for u, rel in adj[t]:
                want = sign[t] * rel
                if u not in sign:
                    sign[u] = want
                    parent[u] = t
                    stack.append(u)
                elif sign[u] != want:
                    raise NonOrientableError("no coherent orientation",
                                             _odd_cycle(parent, t, u))
    return sign


def _odd_cycle(parent, a, b):
    def path(x):
        out = []
        while x is not None:
            out.append(x)
            x = parent[x]
        return out
    pa, pb = path(a), path(b)
    common = set(pa) & set(pb)
    ia = next(i for i, x in enumerate(pa) if x in common)
    ib = pb.index(pa[ia])
    return pa[:ia + 1] + list(reversed(pb[:ib]))


# pseudomanifold checks

@dataclass
class ValidationReport:
    ok: bool
    violations: list

    def __bool__(self):
        return self.ok


def validate_pseudomanifold(X) -> ValidationReport:
    """Combinatorial necessary conditions for a filtered pseudomanifold.

    ``X`` carries ``complex``, ``n`` and ``skeleta`` (dict index -> Subcomplex).
    """
    K = X.complex
    n = X.n
    out = []
    cof = K.cofaces()
    tops = set(K.simplices(n))
    covered = set()
    for t in tops:
        covered.update(faces_of(t))
    for s in K.simplices():
        if s not in covered:
            out.append(f"simplex {K.label_simplex(s)} is not a face of an {n}-simplex")
    sigma = X.singular.simplices
    for f in K.simplices(n - 1):
        if f in sigma:
            continue
        m = sum(1 for t in cof[f] if t in tops)
        if m != 2:
            out.append(f"{n - 1}-simplex {K.label_simplex(f)} outside the singular set lies in {m} {n}-simplices")
    keys = sorted(X.skeleta)
    for i in keys:
        sk = X.skeleta[i]
        if sk.dim > i:
            out.append(f"skeleton {i} has dimension {sk.dim}")
        for s in sk.simplices:
            for f in faces_of(s):
                if f not in sk.simplices:
                    out.append(f"skeleton {i} is not closed under faces")
                    break
    for a, b in zip(keys, keys[1:]):
        if not X.skeleta[a] <= X.skeleta[b]:
            out.append(f"skeleton {a} is not contained in skeleton {b}")
    return ValidationReport(not out, out)


def shuffle_sign(steps) -> int:
    """Sign of the shuffle with the given step pattern (inversions of 1 before 0)."""
    ones = inv = 0
    for s in steps:
        if s:
            ones += 1
        else:
            inv += ones
    return -1 if inv % 2 else 1


def shuffle_product(P: ProductComplex, a: dict, b: dict) -> dict:
    """Eilenberg-Zilber cross product of chains on the two factors."""
    out = {}
    for s, x in a.items():
        for t, y in b.items():
            for path, steps in staircase_chains(s, t):
                simplex = P.simplex_of_chain(path)
                v = out.get(simplex, 0) + shuffle_sign(steps) * x * y
                if v:
                    out[simplex] = v
                else:
                    out.pop(simplex, None)
    return out
