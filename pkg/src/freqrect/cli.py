"""Command-line interface.

Subcommand tree:

    construct {hadamard, oa, thm23, thm26, thm31, thm33, mofs2p, product, pad}
    verify    {fr, mofr, oa, hadamard, vectors, gram, spectrum}
    search    {ind, constrained}
    bounds    {ind, code, mofr}
    convert   {fr2oa, oa2fr, had2oa}

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Output goes to stdout, or to a file with -o; --json switches every
subcommand to its JSON rendering.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import constructions, hadamard, io, mofs2p, search
from . import verify as ver
from .designs import ShapeError, ValidationError, VectorSet
from .gf import FieldError


def _write(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_obj(args, obj) -> int:
    _write(args, io.dumps_json(obj) if args.json else io.serialize(obj))
    return 0


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _emit_report(args, ok: bool, lines: list[str], payload: dict) -> int:
    if args.json:
        payload = dict(payload)
        payload["ok"] = ok
        _write(args, json.dumps(payload, indent=2, default=str) + "\n")
    else:
        _write(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


# -- construct --------------------------------------------------------------

def _cmd_construct(args) -> int:
    which = args.what
    if which == "hadamard":
        if args.method == "sylvester":
            order = args.order
            if order & (order - 1) or order < 1:
                raise ShapeError(f"order {order} is not a power of 2")
            h = hadamard.sylvester(order.bit_length() - 1)
        elif args.method == "paley":
            h = hadamard.paley_I(args.order - 1)
        else:
            h = hadamard.build(args.order)
        return _emit_obj(args, h)
    if which == "oa":
        return _emit_obj(args, hadamard.full_factorial_oa(args.factors, args.parity))
    if which == "thm23":
        oa = io.parse_oa(_read(args.oa))
        return _emit_obj(args, constructions.oa_to_mofr_double(oa, args.m, args.n))
    if which == "thm26":
        h = io.parse_hadamard(_read(args.hadamard))
        return _emit_obj(args, constructions.hadamard_to_mofr_4(h))
    if which == "thm31":
        oa = io.parse_oa(_read(args.oa))
        return _emit_obj(args, constructions.oa_cyclic_to_mofr(oa))
    if which == "thm33":
        vs = io.parse_vs(_read(args.vectors))
        return _emit_obj(args, constructions.vectors_to_mofr(vs, args.M, args.N, args.t))
    if which == "mofs2p":
        squares = mofs2p.build_mofs2p(args.p)
        if args.emit_intermediates:
            return _emit_intermediates(args, squares)
        return _emit_obj(args, squares)
    if which == "product":
        a = io.parse_vs(_read(args.vectors))
        b = io.parse_vs(_read(args.vectors2))
        return _emit_obj(args, constructions.product_vectors(a, b))
    if which == "pad":
        vs = io.parse_vs(_read(args.vectors))
        return _emit_obj(args, constructions.pad_vectors(vs, args.N))
    raise AssertionError(which)


def _emit_intermediates(args, squares) -> int:
    p = args.p
    rho_map = {z: mofs2p.rho(p, z) for z in mofs2p.omega(p)}
    stars = [sorted(sorted(e) for e in s) for s in mofs2p.star_partition(p).stars]
    if args.json:
        blob = {
            "p": p,
            "A": {a: mofs2p.build_A(p, a).grid.tolist() for a in mofs2p.omega(p)},
            "A_star": {a.alpha: a.grid.tolist() for a in mofs2p.build_A_star(p)},
            "A_prime": {a.alpha: a.grid.tolist() for a in mofs2p.build_A_prime(p)},
            "rho": rho_map,
            "stars": stars,
            "squares": [io.to_json(f) for f in squares],
        }
        _write(args, json.dumps(blob, indent=2) + "\n")
        return 0
    lines = [f"p {p}", ""]
    for name, fam in (("A", [mofs2p.build_A(p, a) for a in mofs2p.omega(p)]),
                      ("A*", mofs2p.build_A_star(p)),
                      ("A'", mofs2p.build_A_prime(p))):
        for a in fam:
            lines.append(f"{name}_{a.alpha}")
            lines += [" ".join(str(x) for x in row) for row in a.grid]
            lines.append("")
    lines.append("rho " + " ".join(f"{z}->{rho_map[z]}" for z in sorted(rho_map)))
    lines.append("stars " + "; ".join(
        ",".join(f"{{{a},{b}}}" for a, b in s) for s in stars))
    lines.append("")
    _write(args, "\n".join(lines) + io.serialize_fr_set(squares))
    return 0


# -- verify -----------------------------------------------------------------

def _cmd_verify(args) -> int:
    which = args.what
    text = _read(args.file)
    if which == "fr":
        f = io.parse_fr(text)
        return _emit_report(args, True, [f"PASS: valid FR({f.m},{f.n};{f.q})"],
                            {"m": f.m, "n": f.n, "q": f.q})
    if which == "mofr":
        fs = io.parse_fr_set(text)
        t = args.t if args.t is not None else 2
        rep = ver.is_t_orthogonal(fs, t)
        if rep.ok:
            return _emit_report(
                args, True,
                [f"PASS: {len(fs)} rectangles are {t}-orthogonal "
                 f"(each tuple {rep.expected} times)"],
                {"k": len(fs), "t": t, "count": rep.expected})
        lines = [f"FAIL: not {t}-orthogonal ({rep.reason})"]
        if rep.subset:
            lines.append(f"  subset {list(rep.subset)} tuple {list(rep.symbol_tuple)} "
                         f"count {rep.found} expected {rep.expected}")
        return _emit_report(args, False, lines,
                            {"t": t, "reason": rep.reason,
                             "subset": list(rep.subset),
                             "tuple": list(rep.symbol_tuple),
                             "found": rep.found, "expected": rep.expected})
    if which == "oa":
        oa = io.parse_oa(text)
        return _emit_report(
            args, True,
            [f"PASS: valid OA({oa.runs},{oa.factors},{oa.q},{oa.strength})"],
            {"runs": oa.runs, "factors": oa.factors, "q": oa.q,
             "strength": oa.strength})
    if which == "hadamard":
        h = io.parse_hadamard(text)
        return _emit_report(args, True, [f"PASS: valid Hadamard matrix of order {h.order}"],
                            {"order": h.order})
    if which == "vectors":
        vs = io.parse_vs(text)
        t = args.t if args.t is not None else 2
        rep = ver.is_t_independent(vs, t)
        if rep.ok:
            return _emit_report(args, True,
                                [f"PASS: {len(vs)} vectors are {t}-independent"],
                                {"size": len(vs), "t": t})
        return _emit_report(args, False,
                            [f"FAIL: dependent subset {list(rep.subset)}"],
                            {"t": t, "subset": list(rep.subset)})
    if which in ("gram", "spectrum"):
        fs = io.parse_fr_set(text)
        ok = ver.verify_gram(fs) if which == "gram" else ver.verify_spectrum(fs)
        word = "Gram block structure" if which == "gram" else "eigenvalue multiplicities"
        return _emit_report(args, ok,
                            [("PASS: " if ok else "FAIL: ") + word +
                             (" confirmed" if ok else " violated")],
                            {"check": which})
    raise AssertionError(which)


# -- search -----------------------------------------------------------------

def _search_payload(rep: search.SearchReport) -> dict:
    return {"length": rep.length, "t": rep.t, "q": rep.q,
            "prefix": rep.prefix, "best_size": rep.best_size,
            "exhaustive": rep.exhaustive, "nontrivial": rep.nontrivial,
            "nodes": rep.nodes, "wall_time": rep.wall_time,
            "witness": io.to_json(rep.witness)}


def _emit_search(args, rep: search.SearchReport) -> int:
    if args.json:
        _write(args, json.dumps(_search_payload(rep), indent=2) + "\n")
        return 0
    status = "exhaustive" if rep.exhaustive else "lower bound (budget hit)"
    lines = [f"max size = {rep.best_size} ({status}), "
             f"{rep.nodes} nodes, {rep.wall_time:.3f}s"]
    if not rep.nontrivial:
        lines.append(f"no witness of size >= t={rep.t} exists")
    text = "\n".join(lines) + "\n" + io.serialize_vs(rep.witness)
    _write(args, text)
    return 0


def _cmd_search(args) -> int:
    if args.what == "ind":
        rep = search.max_t_independent(args.n, args.t, args.q, args.budget)
    else:
        rep = search.max_constrained(args.M, args.N, args.t, args.q, args.budget)
    return _emit_search(args, rep)


# -- bounds -----------------------------------------------------------------

def _ind_name(n: int, t: int, q: int) -> str:
    return f"Ind({n},{t})" if q == 2 else f"Ind_{q}({n},{t})"


def _parse_code_triple(s: str) -> tuple[int, int, int]:
    parts = s.split(",")
    if len(parts) != 3:
        raise ShapeError(f"expected n,k,d, got {s!r}")
    return tuple(int(x) for x in parts)


def _cmd_bounds(args) -> int:
    if args.what == "mofr":
        v = ver.mofr_upper_bound(args.m, args.n, args.q)
        if args.json:
            _write(args, json.dumps({"m": args.m, "n": args.n, "q": args.q,
                                     "bound": v}, indent=2) + "\n")
        else:
            _write(args, f"max k for MOFR({args.m},{args.n};{args.q}) <= {v}\n")
        return 0
    if args.what == "code":
        n2, t2, relation, v = search.code_to_ind(args.n, args.k, args.d, args.mode)
        line = f"{_ind_name(n2, t2, 2)} {relation} {v}"
        if args.json:
            _write(args, json.dumps({"length": n2, "t": t2, "relation": relation,
                                     "value": v}, indent=2) + "\n")
        else:
            _write(args, line + "\n")
        return 0
    # bounds ind
    name = _ind_name(args.n, args.t, args.q)
    entries = search.ind_formula_bounds(args.n, args.t, args.q)
    lower = upper = None
    lines = []
    payload = {"length": args.n, "t": args.t, "q": args.q, "bounds": []}
    for e in entries:
        rel = {"exact": "=", "upper": "<=", "lower": ">="}[e.kind]
        lines.append(f"{name} {rel} {e.value}  [{e.source}]")
        payload["bounds"].append({"kind": e.kind, "value": e.value,
                                  "source": e.source})
        if e.kind in ("exact", "lower"):
            lower = max(lower, e.value) if lower is not None else e.value
        if e.kind in ("exact", "upper"):
            upper = min(upper, e.value) if upper is not None else e.value
    if args.code_lower:
        n, k, d = _parse_code_triple(args.code_lower)
        n2, t2, _, v = search.code_to_ind(n, k, d, "lower")
        if (n2, t2) != (args.n, args.t) or args.q != 2:
            raise ShapeError(f"code [{n},{k},{d}] bounds Ind({n2},{t2}), "
                             f"not {name}")
        lines.append(f"{name} >= {v}  [code [{n},{k},{d}]]")
        payload["bounds"].append({"kind": "lower", "value": v,
                                  "source": f"code [{n},{k},{d}]"})
        lower = max(lower, v) if lower is not None else v
    if args.code_upper:
        n, k, d = _parse_code_triple(args.code_upper)
        n2, t2, _, v = search.code_to_ind(n, k, d, "upper")
        if (n2, t2) != (args.n, args.t) or args.q != 2:
            raise ShapeError(f"code distance D({n},{k})={d} bounds Ind({n2},{t2}), "
                             f"not {name}")
        lines.append(f"{name} <= {v}  [best distance D({n},{k}) = {d}]")
        payload["bounds"].append({"kind": "upper", "value": v,
                                  "source": f"distance D({n},{k})={d}"})
        upper = min(upper, v) if upper is not None else v
    if lower is not None and lower == upper:
        lines.append(f"{name} = {lower}")
        payload["resolved"] = lower
    if not lines:
        lines.append(f"no formula applies to {name}")
    if args.json:
        _write(args, json.dumps(payload, indent=2) + "\n")
    else:
        _write(args, "\n".join(lines) + "\n")
    return 0


# -- convert ----------------------------------------------------------------

def _cmd_convert(args) -> int:
    text = _read(args.file)
    if args.what == "fr2oa":
        fs = io.parse_fr_set(text)
        return _emit_obj(args, constructions.mofr_to_oa(fs, args.t))
    if args.what == "oa2fr":
        oa = io.parse_oa(text)
        return _emit_obj(args, constructions.oa_to_mofr2(oa))
    if args.what == "had2oa":
        h = io.parse_hadamard(text)
        return _emit_obj(args, hadamard.hadamard_to_oa(h))
    raise AssertionError(args.what)


# -- parser -----------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="freqrect",
        description="Construct, verify, and search frequency rectangles, "
                    "orthogonal arrays, Hadamard matrices, and independent "
                    "vector sets.")
    top.add_argument("--threads", type=int,
                     default=int(os.environ.get("FREQRECT_THREADS", "0")),
                     help="worker hint; output is identical regardless")
    sub = top.add_subparsers(dest="group", required=True)

    def add(group_parser, name, **kw):
        p = group_parser.add_parser(name, **kw)
        p.set_defaults(what=name)
        p.add_argument("-o", "--output", help="write output to FILE")
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    g = sub.add_parser("construct").add_subparsers(dest="what", required=True)
    p = add(g, "hadamard")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--method", choices=["sylvester", "paley", "auto"],
                   default="auto")
    p = add(g, "oa")
    p.add_argument("--factors", type=int, required=True)
    p.add_argument("--parity", action="store_true")
    p = add(g, "thm23")
    p.add_argument("--oa", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = add(g, "thm26")
    p.add_argument("--hadamard", required=True)
    p = add(g, "thm31")
    p.add_argument("--oa", required=True)
    p = add(g, "thm33")
    p.add_argument("--vectors", required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p = add(g, "mofs2p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--emit-intermediates", action="store_true")
    p = add(g, "product")
    p.add_argument("--vectors", required=True)
    p.add_argument("--vectors2", required=True)
    p = add(g, "pad")
    p.add_argument("--vectors", required=True)
    p.add_argument("--N", type=int, required=True)

    g = sub.add_parser("verify").add_subparsers(dest="what", required=True)
    for name in ("fr", "mofr", "oa", "hadamard", "vectors", "gram", "spectrum"):
        p = add(g, name)
        p.add_argument("file")
        if name in ("mofr", "vectors"):
            p.add_argument("--t", type=int, default=None)

    g = sub.add_parser("search").add_subparsers(dest="what", required=True)
    p = add(g, "ind")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)
    p = add(g, "constrained")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)

    g = sub.add_parser("bounds").add_subparsers(dest="what", required=True)
    p = add(g, "ind")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--code-lower", help="n,k,d of an existing code")
    p.add_argument("--code-upper", help="n,k,d with d the best distance at (n,k)")
    p = add(g, "code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", choices=["lower", "upper"], required=True)
    p = add(g, "mofr")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    g = sub.add_parser("convert").add_subparsers(dest="what", required=True)
    p = add(g, "fr2oa")
    p.add_argument("file")
    p.add_argument("--t", type=int, default=2)
    p = add(g, "oa2fr")
    p.add_argument("file")
    p = add(g, "had2oa")
    p.add_argument("file")

    return top


_DISPATCH = {"construct": _cmd_construct, "verify": _cmd_verify,
             "search": _cmd_search, "bounds": _cmd_bounds,
             "convert": _cmd_convert}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.group](args)
    except ValidationError as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        return 1
    except (io.ParseError, ShapeError, FieldError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
