"""Command line front end and the text format for spaces.

Space files are line oriented.  A keyword line opens a section::

    vertices            labels, in vertex order (any number per line)
    facets              one facet per line
    skeleton <i>        simplices generating X^i
    orientation         <sign> <v0> ... <vn> per n-simplex
    chain <name> <deg>  <coeff> <v0> ... ; the vertex order is the orientation
    perversity <name>   <value> <v0> ... ; any simplex of the stratum

Everything after ``#`` on a line is ignored.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .chain_algebra import homology_of_pair, simplicial_boundary
from .complex_core import ComplexError, Subcomplex, build_complex
from .corpus import CorpusError, Space, chain_from_labels, generate
from .duality import gm_duality_collapsed
from .intersection import (DiagonalContext, DomainElement, NotInDomainError,
                           general_position_check, gm_cycle_product, ih_product, mu, umkehr)
from .pl_chains import PLChain
from .stratified import FilteredPseudomanifold, Perversity, intersection_homology

COMMANDS = ("homology", "ih", "intersect", "gm-intersect", "duality", "verify")


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = f"line {line}" + (f", column {column}" if column else "") if line else ""
        super().__init__(f"{where}: {message}" if where else message)
        self.line = line
        self.column = column


# space files

@dataclass
class SpaceFile:
    vertices: list
    facets: list
    skeleta: dict = field(default_factory=dict)
    orientation: list | None = None
    chains: dict = field(default_factory=dict)
    perversities: dict = field(default_factory=dict)


def _tokens(line: str):
    """(column, token) pairs with comments stripped."""
    line = line.split("#", 1)[0]
    out, col = [], 0
    for part in line.split():
        col = line.index(part, col)
        out.append((col + 1, part))
        col += len(part)
    return out


def _int(tok, lineno):
    col, text = tok
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, found {text!r}", lineno, col) from None


def parse_space(text: str) -> SpaceFile:
    sf = SpaceFile([], [])
    section = None
    target = None
    seen_vertices = False
    where = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _tokens(raw)
        if not toks:
            continue
        head = toks[0][1]
        if head in ("vertices", "facets", "orientation") and len(toks) == 1:
            section = head
            if head == "vertices":
                seen_vertices = True
            if head == "orientation":
                sf.orientation = sf.orientation or []
            continue
        if head == "skeleton":
            if len(toks) != 2:
                raise ParseError("usage: skeleton <i>", lineno, toks[0][0])
            section, target = "skeleton", _int(toks[1], lineno)
            sf.skeleta.setdefault(target, [])
            continue
        if head == "chain":
            if len(toks) != 3:
                raise ParseError("usage: chain <name> <degree>", lineno, toks[0][0])
            name = toks[1][1]
            if name in sf.chains:
                raise ParseError(f"chain {name!r} defined twice", lineno, toks[1][0])
            section, target = "chain", name
            sf.chains[name] = (_int(toks[2], lineno), [])
            continue
        if head == "perversity":
            if len(toks) != 2:
                raise ParseError("usage: perversity <name>", lineno, toks[0][0])
            section, target = "perversity", toks[1][1]
            sf.perversities.setdefault(target, [])
            continue
        words = [t for _, t in toks]
        if section is None:
            raise ParseError(f"data before any section keyword: {head!r}", lineno, toks[0][0])
        if section == "vertices":
            sf.vertices.extend(words)
        elif section == "facets":
            sf.facets.append(words)
            where.append((lineno, toks))
        elif section == "skeleton":
            sf.skeleta[target].append(words)
        elif section == "orientation":
            if len(toks) < 2:
                raise ParseError("orientation lines are <sign> <vertices>", lineno, toks[0][0])
            sign = _int(toks[0], lineno)
            if sign not in (1, -1):
                raise ParseError("orientation sign must be 1 or -1", lineno, toks[0][0])
            sf.orientation.append((sign, words[1:]))
        elif section == "chain":
            if len(toks) < 2:
                raise ParseError("chain lines are <coeff> <vertices>", lineno, toks[0][0])
            deg, terms = sf.chains[target]
            if len(words) - 1 != deg + 1:
                raise ParseError(f"a {deg}-simplex needs {deg + 1} vertices", lineno, toks[1][0])
            terms.append((_int(toks[0], lineno), words[1:]))
        elif section == "perversity":
            if len(toks) < 2:
                raise ParseError("perversity lines are <value> <vertices>", lineno, toks[0][0])
            sf.perversities[target].append((_int(toks[0], lineno), words[1:]))
    if not sf.facets:
        raise ParseError("no facets")
    if not seen_vertices:
        order = []
        for f in sf.facets:
            order.extend(v for v in f if v not in order)
        sf.vertices = order
    known = set(sf.vertices)
    for lineno, toks in where:
        for col, v in toks:
            if v not in known:
                raise ParseError(f"vertex {v!r} is not listed under vertices", lineno, col)
    return sf


def dump_space(sf: SpaceFile) -> str:
    lines = ["vertices", " ".join(sf.vertices), "facets"]
    lines += [" ".join(f) for f in sf.facets]
    for i in sorted(sf.skeleta):
        lines.append(f"skeleton {i}")
        lines += [" ".join(s) for s in sf.skeleta[i]]
    if sf.orientation is not None:
        lines.append("orientation")
        lines += [f"{sg} " + " ".join(s) for sg, s in sf.orientation]
    for name, (deg, terms) in sf.chains.items():
        lines.append(f"chain {name} {deg}")
        lines += [f"{c} " + " ".join(s) for c, s in terms]
    for name, rows in sf.perversities.items():
        lines.append(f"perversity {name}")
        lines += [f"{v} " + " ".join(s) for v, s in rows]
    return "\n".join(lines) + "\n"


def space_file_of(sp: Space) -> SpaceFile:
    K = sp.complex
    labels = [str(v) for v in K.labels]

    def lab(s):
        return [labels[v] for v in s]

    skel = {}
    for i, sk in sp.X.skeleta.items():
        gens = [s for s in sk.simplices
                if not any(len(t) > len(s) and set(s) <= set(t) for t in sk.simplices)]
        skel[i] = [lab(s) for s in sorted(gens)]
    chains = {}
    for name, (deg, ch) in sp.chains.items():
        chains[name] = (deg, [(v, lab(s)) for s, v in sorted(ch.items())])
    return SpaceFile(labels, [lab(f) for f in K.facets()], skel, None, chains)


def _space_of(sf: SpaceFile, name: str = "file") -> Space:
    K = build_complex(sf.facets, sf.vertices)
    index = {v: i for i, v in enumerate(K.labels)}

    def simplex(words):
        try:
            s = tuple(sorted(index[w] for w in words))
        except KeyError as e:
            raise ParseError(f"unknown vertex {e.args[0]!r}") from None
        if s not in K:
            raise ParseError(f"{' '.join(words)} is not a simplex")
        return s

    skel = {i: Subcomplex.closure(K, [simplex(w) for w in rows]) for i, rows in sf.skeleta.items()}
    orient = None
    if sf.orientation is not None:
        orient = {}
        for sg, words in sf.orientation:
            ch = chain_from_labels(K, [(sg, words)])
            orient.update(ch)
    X = FilteredPseudomanifold(K, skel, orient)
    sp = Space(name, X)
    if X.is_orientable():
        sp.chains["fundamental"] = (X.n, X.fundamental_chain())
    for cname, (deg, terms) in sf.chains.items():
        for _, words in terms:
            simplex(words)
        sp.chains[cname] = (deg, chain_from_labels(K, terms))
    for pname, rows in sf.perversities.items():
        values = {}
        for v, words in rows:
            st = X.stratum_of(simplex(words))
            if st.index >= X.n:
                raise ParseError(f"perversity {pname}: {' '.join(words)} is not in a singular stratum")
            values[st.label] = v
        missing = [st.label for st in X.singular_strata() if st.label not in values]
        if missing:
            raise ParseError(f"perversity {pname} has no value on {', '.join(missing)}")
        sp.perversities[pname] = Perversity(values, pname)
    return sp


def load(path: str | None, corpus: str | None) -> Space:
    if corpus is not None:
        return generate(corpus)
    if path is None:
        raise ParseError("one of --space or --corpus is required")
    with open(path) as fh:
        return _space_of(parse_space(fh.read()), os.path.basename(path))


# reports

@dataclass
class Section:
    title: str
    columns: list
    rows: list = field(default_factory=list)


@dataclass
class Report:
    command: str
    space: str
    sections: list = field(default_factory=list)
    ok: bool = True

    def add(self, title, columns) -> Section:
        sec = Section(title, columns)
        self.sections.append(sec)
        return sec

    def text(self) -> str:
        out = [f"plchain {self.command}: {self.space}"]
        for sec in self.sections:
            out.append("")
            out.append(sec.title)
            cells = [[str(c) for c in sec.columns]] + [[_fmt(r.get(c, "")) for c in sec.columns]
                                                       for r in sec.rows]
            widths = [max(len(row[j]) for row in cells) for j in range(len(sec.columns))]
            for k, row in enumerate(cells):
                out.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
                if k == 0:
                    out.append("  ".join("-" * w for w in widths))
        out.append("")
        out.append("status: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(out)

    def machine(self) -> str:
        lines = [json.dumps({"command": self.command, "space": self.space})]
        for sec in self.sections:
            for r in sec.rows:
                lines.append(json.dumps({"section": sec.title, **r}, sort_keys=False))
        lines.append(json.dumps({"status": "ok" if self.ok else "failed"}))
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def _group_row(H) -> dict:
    return {"rank": H.rank, "torsion": list(H.torsion)}


def _chain_rows(sp: Space, ch: dict) -> list:
    K = sp.complex
    return [{"simplex": " ".join(str(x) for x in K.label_simplex(s)), "coeff": v}
            for s, v in sorted(ch.items())]


def _perversity(sp: Space, name: str) -> Perversity:
    if name in sp.perversities:
        return sp.perversities[name]
    return Perversity.named(sp.X, name)


# commands

def cmd_homology(sp: Space, args, rep: Report):
    sec = rep.add("homology", ["k", "rank", "torsion"])
    for k in range(sp.X.n + 1):
        sec.rows.append({"k": k, **_group_row(homology_of_pair(sp.complex, None, None, k))})


def cmd_ih(sp: Space, args, rep: Report):
    names = args.perversity or ["0", "t"]
    sec = rep.add("intersection homology", ["perversity", "k", "rank", "torsion"])
    for name in names:
        p = _perversity(sp, name)
        for k in range(sp.X.n + 1):
            sec.rows.append({"perversity": name, "k": k,
                             **_group_row(intersection_homology(sp.X, p, k))})


def _two_chains(sp: Space, args):
    if not args.chains or len(args.chains) != 2:
        raise ParseError("--chains needs two chain names")
    out = []
    for name in args.chains:
        deg, ch = sp.chain(name)
        out.append(PLChain(sp.complex, deg, ch))
    return out


def _gp_rows(rep: Report, title, gp):
    sec = rep.add(title, ["check", "dim", "bound", "ok"])
    for c in gp.checks:
        sec.rows.append({"check": c.label, "dim": c.actual, "bound": c.budget, "ok": c.ok})


def cmd_intersect(sp: Space, args, rep: Report):
    a, b = _two_chains(sp, args)
    ctx = DiagonalContext(sp.X)
    e = DomainElement.single(a, b)
    x = e.epsilon(ctx)
    _gp_rows(rep, "general position", general_position_check(ctx, x, "delta"))
    if args.perversity:
        if len(args.perversity) != 2:
            raise ParseError("intersect takes two perversities (one per factor)")
        p1, p2 = (_perversity(sp, n) for n in args.perversity)
        res = ih_product(ctx, e, p1, p2)
        out = res.chain
        sec = rep.add(f"allowability for {res.perversity.name}", ["stratum", "dim", "bound", "ok"])
        for c in res.allowability.checks:
            sec.rows.append({"stratum": c.stratum, "dim": c.chain_dim, "bound": c.chain_budget, "ok": c.ok})
        rep.ok = bool(res.allowability)
    else:
        out = mu(ctx, e)
    sec = rep.add(f"product (degree {out.degree})", ["simplex", "coeff"])
    sec.rows.extend(_chain_rows(sp, out.coeffs))


def cmd_gm_intersect(sp: Space, args, rep: Report):
    a, b = _two_chains(sp, args)
    ctx = DiagonalContext(sp.X)
    out = gm_cycle_product(ctx, a, b)
    sec = rep.add(f"cycle product (degree {out.degree})", ["simplex", "coeff"])
    sec.rows.extend(_chain_rows(sp, out.coeffs))
    try:
        m = mu(ctx, DomainElement.single(a, b))
        sign = _relative_sign(sp, m, out)
        rep.add("comparison with the intersection product", ["sign"]).rows.append({"sign": sign})
    except NotInDomainError as e:
        rep.add("comparison with the intersection product", ["note"]).rows.append({"note": str(e)})


def _relative_sign(sp: Space, m: PLChain, g: PLChain):
    """s with [m] = s [g] in H(X, Σ); 0 when both classes vanish, None otherwise."""
    sig = sp.X.singular
    H = homology_of_pair(sp.complex, None, sig, m.degree)
    cm = H.normalize(H.coords(m.coeffs))
    cg = H.normalize(H.coords(g.coeffs))
    if not any(cm) and not any(cg):
        return 0
    if cm == cg:
        return 1
    if cm == H.normalize([-x for x in H.coords(g.coeffs)]):
        return -1
    return None


def cmd_duality(sp: Space, args, rep: Report):
    X = sp.X
    sec = rep.add("duality H^i(X - Σ) -> H_{n-i}(X, Σ)", ["i", "source", "target", "matrix", "iso"])
    for i in range(X.n + 1):
        D = gm_duality_collapsed(X, X.singular, X.complex.full(), X.singular, i)
        iso = D.is_isomorphism()
        rep.ok &= iso
        sec.rows.append({"i": i, "source": _group_row(D.source), "target": _group_row(D.target),
                         "matrix": D.matrix, "iso": iso})


# verification suites

def _suite_pseudomanifold(sp, seed):
    r = sp.X.validate()
    return r.ok, "; ".join(r.violations[:3])


def _suite_euler(sp, seed):
    ranks = [homology_of_pair(sp.complex, None, None, k).rank for k in range(sp.X.n + 1)]
    chi = sum((-1) ** k * r for k, r in enumerate(ranks))
    want = sp.complex.euler_characteristic()
    return chi == want, f"ranks {ranks}, chi {want}"


def _suite_backends(sp, seed):
    from . import _snf_py
    from .chain_algebra import boundary_matrix
    from .snf import BACKEND, smith
    if BACKEND != "cython":
        return None, "compiled kernel not built"
    for k in range(1, sp.X.n + 1):
        M = boundary_matrix(sp.complex, k)
        if not M or not M[0] or len(M) * len(M[0]) > 250_000:
            continue
        d1 = smith(M)[1]
        d2 = _snf_py.smith(M)[1]
        if d1 != d2:
            return False, f"diagonals differ in degree {k}"
    return True, ""


def _suite_ih(sp, seed):
    X = sp.X
    if X.singular.simplices:
        return None, "Σ nonempty"
    for k in range(X.n + 1):
        a = intersection_homology(X, Perversity.named(X, "0"), k)
        b = homology_of_pair(X.complex, None, None, k)
        if (a.rank, a.torsion) != (b.rank, b.torsion):
            return False, f"degree {k}"
    return True, ""


def _suite_duality(sp, seed):
    X = sp.X
    if not X.is_orientable():
        return None, "not orientable"
    for i in range(X.n + 1):
        if not gm_duality_collapsed(X, X.singular, X.complex.full(), X.singular, i).is_isomorphism():
            return False, f"degree {i}"
    return True, ""


def _named(sp):
    sig = sp.X.singular.simplices
    out = []
    for name, (deg, ch) in sp.chains.items():
        out.append((name, PLChain(sp.complex, deg, ch)))
    return out, sig


def _heavy(X, i: int) -> bool:
    # vertex coefficients in dimension >= 3 need blocks with millions of flags
    return X.n >= 3 and i == X.n


def _suite_unit(sp, seed):
    X = sp.X
    if not X.is_orientable():
        return None, "not orientable"
    ctx = DiagonalContext(X)
    G = PLChain(X.complex, X.n, X.fundamental_chain())
    named, sig = _named(sp)
    signs = {}
    for name, xi in named:
        if any(s not in sig for s in simplicial_boundary(xi.coeffs)):
            continue
        try:
            out = mu(ctx, DomainElement.single(G, xi))
        except NotInDomainError:
            continue
        want = {s: v for s, v in xi.coeffs.items() if s not in sig}
        if out.coeffs == want:
            s = 1
        elif out.coeffs == {t: -v for t, v in want.items()}:
            s = -1
        else:
            return False, f"μ(Γ⊗{name}) is not ±{name}"
        if signs.setdefault(xi.degree, s) != s:
            return False, f"sign in degree {xi.degree} is not constant"
    return True, f"signs {signs}"


def _suite_boundary(sp, seed):
    X = sp.X
    if not X.is_orientable():
        return None, "not orientable"
    ctx = DiagonalContext(X)
    named, _ = _named(sp)
    sgn = -1 if X.n % 2 else 1
    rng = random.Random(seed)
    pairs = [(a, b) for a in named for b in named]
    K = X.complex
    for _ in range(6 if X.n <= 2 else 0):
        chains = []
        for _ in range(2):
            k = rng.randint(max(0, 1), X.n)
            simp = rng.sample(K.simplices(k), min(2, len(K.simplices(k))))
            chains.append((f"random {k}-chain", PLChain(K, k, {s: rng.choice([-1, 1, 2]) for s in simp})))
        pairs.append(tuple(chains))
    checked = 0
    for (na, a), (nb, b) in pairs:
        x = DomainElement.single(a, b).epsilon(ctx)
        if x.degree < X.n or _heavy(X, x.degree):
            continue
        if not general_position_check(ctx, x, "delta") or not general_position_check(ctx, x.boundary(), "delta"):
            continue
        lhs = umkehr(ctx, x, check=False).boundary()
        rhs = umkehr(ctx, x.boundary(), check=False)
        sig = X.singular.simplices
        lhs_c = {s: v for s, v in lhs.coeffs.items() if s not in sig}
        if lhs_c != {s: sgn * v for s, v in rhs.coeffs.items()}:
            return False, f"{na} ⊗ {nb}"
        checked += 1
    return True, f"{checked} products"


def _suite_gm(sp, seed):
    X = sp.X
    if not X.is_orientable():
        return None, "not orientable"
    ctx = DiagonalContext(X)
    named, sig = _named(sp)
    cycles = [(n, c) for n, c in named if not any(s not in sig for s in simplicial_boundary(c.coeffs))]
    signs = {}
    for na, a in cycles:
        for nb, b in cycles:
            if a.degree + b.degree < X.n or _heavy(X, a.degree + b.degree):
                continue
            if not general_position_check(ctx, (a, b), "pair"):
                continue
            try:
                m = mu(ctx, DomainElement.single(a, b))
            except NotInDomainError:
                continue
            g = gm_cycle_product(ctx, a, b)
            s = _relative_sign(sp, m, g)
            if s is None:
                return False, f"{na} ⊗ {nb}: classes differ"
            key = (a.degree, b.degree, X.n)
            if s and signs.setdefault(key, s) != s:
                return False, f"sign for {key} not constant"
    return True, f"signs {signs}"


SUITES = [
    ("pseudomanifold", _suite_pseudomanifold),
    ("euler characteristic", _suite_euler),
    ("snf backends", _suite_backends),
    ("intersection homology", _suite_ih),
    ("duality", _suite_duality),
    ("unit", _suite_unit),
    ("boundary formula", _suite_boundary),
    ("gm agreement", _suite_gm),
]


def _run_suite(spec, index, seed):
    kind, payload = spec
    sp = generate(payload) if kind == "corpus" else _space_of(parse_space(payload))
    name, fn = SUITES[index]
    try:
        ok, witness = fn(sp, seed)
    except (ComplexError, ValueError) as e:
        ok, witness = False, f"{type(e).__name__}: {e}"
    return name, ok, witness


def threads() -> int:
    try:
        return max(1, int(os.environ.get("PLCHAIN_THREADS", "1")))
    except ValueError:
        return 1


def cmd_verify(sp: Space, args, rep: Report):
    spec = ("corpus", args.corpus) if args.corpus else ("file", open(args.space).read())
    seed = args.seed if args.seed is not None else 0
    n = threads()
    if n > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(_run_suite, [spec] * len(SUITES), range(len(SUITES)),
                                    [seed] * len(SUITES)))
    else:
        results = [_run_suite(spec, i, seed) for i in range(len(SUITES))]
    sec = rep.add("suites", ["suite", "status", "witness"])
    for name, ok, witness in results:
        status = "skip" if ok is None else ("pass" if ok else "FAIL")
        rep.ok &= ok is not False
        sec.rows.append({"suite": name, "status": status, "witness": witness})


HANDLERS = {
    "homology": cmd_homology,
    "ih": cmd_ih,
    "intersect": cmd_intersect,
    "gm-intersect": cmd_gm_intersect,
    "duality": cmd_duality,
    "verify": cmd_verify,
}


def run(command: str, sp: Space, args) -> Report:
    rep = Report(command, sp.name)
    HANDLERS[command](sp, args, rep)
    return rep


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plchain", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--space", metavar="FILE")
    src.add_argument("--corpus", metavar="NAME")
    ap.add_argument("--perversity", nargs="+", metavar="NAME")
    ap.add_argument("--chains", nargs=2, metavar="NAME")
    ap.add_argument("--machine", action="store_true")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--dump", action="store_true", help="print the space in file format and exit")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        sp = load(args.space, args.corpus)
    except (ParseError, CorpusError) as e:
        print(f"plchain: parse error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"plchain: {e}", file=sys.stderr)
        return 2
    except ComplexError as e:
        print(f"plchain: {e}", file=sys.stderr)
        return 1
    if args.dump:
        print(dump_space(space_file_of(sp)), end="")
        return 0
    try:
        rep = run(args.command, sp, args)
    except ParseError as e:
        print(f"plchain: {e}", file=sys.stderr)
        return 2
    except NotInDomainError as e:
        print(f"plchain: {e}", file=sys.stderr)
        if e.report is not None:
            for c in getattr(e.report, "failures", lambda: [])():
                print(f"  {c}", file=sys.stderr)
        return 1
    except (ComplexError, ValueError) as e:
        print(f"plchain: {e}", file=sys.stderr)
        return 1
    print(rep.machine() if args.machine else rep.text())
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
