"""Named example spaces with canonical stratifications and standard chains."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

from .chain_algebra import homology_of_pair
from .complex_core import (ComplexError, Subcomplex, build_complex, product_triangulation,
                           shuffle_product)
from .stratified import FilteredPseudomanifold


class CorpusError(ComplexError):
    pass


@dataclass
class Space:
    """A filtered pseudomanifold plus named chains ``name -> (degree, chain)``."""
    name: str
    X: FilteredPseudomanifold
    chains: dict = field(default_factory=dict)
    perversities: dict = field(default_factory=dict)

    @property
    def complex(self):
        return self.X.complex

    def chain(self, name: str):
        if name not in self.chains:
            raise CorpusError(f"space {self.name} has no chain named {name!r}")
        return self.chains[name]


def _ids(K, simplex_labels):
    index = {lab: i for i, lab in enumerate(K.labels)}
    verts = [index[v] for v in simplex_labels]
    order = sorted(range(len(verts)), key=lambda i: verts[i])
    sign = _perm_sign(order)
    return tuple(verts[i] for i in order), sign


def _perm_sign(order) -> int:
    seen = [False] * len(order)
    sign = 1
    for i in range(len(order)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def chain_from_labels(K, terms) -> dict:
    """Chain from ``[(coeff, [labels...]), ...]``; the label order is the orientation."""
    out = {}
    for c, labs in terms:
        s, sg = _ids(K, labs)
        if s not in K:
            raise CorpusError(f"{list(labs)} is not a simplex")
        v = out.get(s, 0) + sg * c
        if v:
            out[s] = v
        else:
            out.pop(s, None)
    return out


def _make(name, facets, order, skeleta_labels=None, chains=None):
    K = build_complex(facets, order)
    skel = {}
    for i, simplices in (skeleta_labels or {}).items():
        ids = [_ids(K, s)[0] for s in simplices]
        skel[i] = Subcomplex.closure(K, ids)
    X = FilteredPseudomanifold(K, skel)
    sp = Space(name, X)
    if X.is_orientable():
        sp.chains["fundamental"] = (X.n, X.fundamental_chain())
    for cname, (deg, terms) in (chains or {}).items():
        sp.chains[cname] = (deg, chain_from_labels(K, terms))
    return sp


def simplex(n: int) -> Space:
    labels = [str(i) for i in range(n + 1)]
    return _make(f"simplex {n}", [labels], labels)


def sphere(n: int) -> Space:
    labels = [str(i) for i in range(n + 2)]
    facets = [list(f) for f in combinations(labels, n + 1)]
    return _make(f"sphere {n}", facets, labels)


def torus2() -> Space:
    labels = [str(i) for i in range(7)]
    facets = []
    for i in range(7):
        facets.append([str(i), str((i + 1) % 7), str((i + 3) % 7)])
        facets.append([str(i), str((i + 2) % 7), str((i + 3) % 7)])
    chains = {
        "meridian": (1, [(1, ["0", "1"]), (1, ["1", "4"]), (1, ["4", "0"])]),
        "longitude": (1, [(1, ["0", "6"]), (1, ["6", "5"]), (1, ["5", "0"])]),
    }
    return _make("torus2", facets, labels, chains=chains)


def projplane() -> Space:
    labels = [str(i) for i in range(1, 7)]
    tri = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2],
           [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4]]
    sp = _make("projplane", [[str(v) for v in t] for t in tri], labels)
    H = homology_of_pair(sp.complex, None, None, 1)
    sp.chains["line"] = (1, H.generators[0])
    return sp


def pinched_torus() -> Space:
    """Cylinder over a square with both boundary circles coned to one point."""
    a = [f"a{i}" for i in range(4)]
    b = [f"b{i}" for i in range(4)]
    facets = []
    for i in range(4):
        j = (i + 1) % 4
        facets += [[a[i], a[j], b[i]], [a[j], b[i], b[j]], ["v", a[i], a[j]], ["v", b[i], b[j]]]
    order = ["v"] + a + b
    chains = {
        "meridian": (1, [(1, [a[i], a[(i + 1) % 4]]) for i in range(4)]),
        "longitude": (1, [(1, ["v", "a0"]), (1, ["a0", "b0"]), (1, ["b0", "v"])]),
    }
    return _make("pinched-torus", facets, order, {0: [["v"]]}, chains)


def _fresh(base: str, used) -> str:
    lab = base
    while lab in used:
        lab += "'"
    return lab


def _join_chain(chain: dict, apex: int) -> dict:
    # apex is the largest vertex id, so appending keeps vertices sorted
    return {s + (apex,): v for s, v in chain.items()}


def suspension(sp: Space) -> Space:
    K = sp.complex
    old = [str(x) for x in K.labels]
    north, south = _fresh("north", old), _fresh("south", old + ["north"])
    facets = []
    for f in K.facets():
        labs = [old[v] for v in f]
        facets += [labs + [north], labs + [south]]
    order = old + [north, south]
    skel = {0: [[north], [south]]}
    for i, sk in sp.X.skeleta.items():
        simp = [[old[v] for v in s] for s in sk.simplices]
        skel[i + 1] = [s + [p] for s in simp for p in (north, south)] + [[north], [south]]
    out = _make(f"suspension({sp.name})", facets, order, skel)
    N, S = len(old), len(old) + 1
    for name, (deg, ch) in sp.chains.items():
        susp = _join_chain(ch, N)
        for s, v in _join_chain(ch, S).items():
            susp[s] = susp.get(s, 0) - v
        out.chains[name] = (deg + 1, susp)
    return out


def cone(sp: Space) -> Space:
    K = sp.complex
    old = [str(x) for x in K.labels]
    apex = _fresh("apex", old)
    facets = [[old[v] for v in f] + [apex] for f in K.facets()]
    skel = {0: [[apex]]}
    for i, sk in sp.X.skeleta.items():
        simp = [[old[v] for v in s] for s in sk.simplices]
        skel[i + 1] = [s + [apex] for s in simp] + [[apex]]
    out = _make(f"cone({sp.name})", facets, old + [apex], skel)
    out.chains.pop("fundamental", None)
    A = len(old)
    for name, (deg, ch) in sp.chains.items():
        out.chains[name] = (deg + 1, _join_chain(ch, A))
    return out


def product(a: Space, b: Space) -> Space:
    P = product_triangulation(a.complex, b.complex)
    labels = [f"({x},{y})" for x, y in P.total.labels]
    facets = [[labels[v] for v in f] for f in P.total.facets()]
    n = a.X.n + b.X.n
    skel = {}
    for k in range(n):
        simp = set()
        for i in range(a.X.n + 1):
            j = k - i
            if j < 0 or j > b.X.n:
                continue
            A = a.X.skeleton(i)
            B = b.X.skeleton(j)
            if not A.simplices or not B.simplices:
                continue
            simp |= P.product_subcomplex(A, B).simplices
        if simp:
            skel[k] = [[labels[v] for v in s] for s in simp]
    out = _make(f"product({a.name},{b.name})", facets, labels, skel)
    if "fundamental" in a.chains and "fundamental" in b.chains:
        ch = shuffle_product(P, a.chains["fundamental"][1], b.chains["fundamental"][1])
        out.chains["fundamental"] = (n, ch)
    return out


_ATOMS = {
    "torus2": torus2,
    "projplane": projplane,
    "pinched-torus": pinched_torus,
}


def generate(name: str) -> Space:
    """Parse a corpus name such as ``suspension(torus2)`` or ``sphere 2``."""
    name = name.strip()
    m = re.fullmatch(r"(suspension|cone)\((.*)\)", name)
    if m:
        inner = generate(m.group(2))
        return suspension(inner) if m.group(1) == "suspension" else cone(inner)
    m = re.fullmatch(r"product\((.*)\)", name)
    if m:
        parts = _split_args(m.group(1))
        if len(parts) != 2:
            raise CorpusError(f"product needs two arguments: {name!r}")
        return product(generate(parts[0]), generate(parts[1]))
    m = re.fullmatch(r"(simplex|sphere)[ _]?(\d+)", name)
    if m:
        n = int(m.group(2))
        return simplex(n) if m.group(1) == "simplex" else sphere(n)
    if name in _ATOMS:
        return _ATOMS[name]()
    raise CorpusError(f"unknown corpus space {name!r}")


def _split_args(s: str) -> list:
    depth, cur, out = 0, "", []
    for ch in s:
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth += (ch == "(") - (ch == ")")
        cur += ch
    out.append(cur.strip())
    return out


CORPUS_NAMES = ["simplex 2", "sphere 1", "sphere 2", "sphere 3", "torus2", "projplane",
                "pinched-torus", "suspension(torus2)", "cone(torus2)", "product(sphere 1,sphere 1)"]
