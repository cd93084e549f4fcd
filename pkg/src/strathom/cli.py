"""Command-line front end.

Exit codes: 0 success, 1 validation failure (bad complex, bad cocycle, failed
cross-check), 2 parse or usage error, 3 witness criterion inapplicable.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__, catalog
from .complex import StratifiedComplex, barycentric_subdivide, induced_subcomplex, validate
from .errors import CatalogError, CocycleError, NotFullSubcomplex, ParseError, ValidationError
from .ih import euler, intersection_homology, ordinary_homology, relative_ih
from .io import content_hash, emit_cocycle, emit_complex, parse_complex, read_text
from .local_systems import (Cocycle, euler_witness, gauge, load_cocycle, cover_crosscheck,
                            subdivide_cocycle, twisted_homology, twisted_ih, validate_cocycle)

SCHEMA = "strathom-report v1"

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_INAPPLICABLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strathom", description="Exact intersection homology of stratified complexes.")
    p.add_argument("--version", action="version", version=f"strathom {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, cocycle=False, n=False):
        sp.add_argument("--in", dest="inp", required=True, help="complex file (strathom-complex v1)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--subdivide", type=int, default=0, metavar="K", help="barycentric subdivisions to apply first")
        if cocycle:
            sp.add_argument("--cocycle", required=True, help="cocycle file (strathom-cocycle v1)")
            sp.add_argument("--tree", choices=("bfs", "dfs"), default="bfs", help="spanning tree for the lift gauge")
            sp.add_argument("--root", type=int, default=None, help="root vertex of the spanning tree")
        if n:
            sp.add_argument("--n", type=int, default=None, help="complex dimension used for sign verdicts")

    common(sub.add_parser("validate", help="check the complex and its stratification"))
    common(sub.add_parser("homology", help="ordinary simplicial homology"), n=True)
    sp = sub.add_parser("ih", help="middle-perversity intersection homology")
    common(sp, n=True)
    sp.add_argument("--rel", default=None, metavar="V1,V2,...",
                    help="relative to the open star of the full subcomplex on these vertices")
    common(sub.add_parser("twisted", help="twisted intersection homology over Q[t, t^-1]"), cocycle=True)
    sp = sub.add_parser("witness", help="signed Euler characteristic witness")
    common(sp, cocycle=True)
    sp.add_argument("--n", type=int, required=True, help="complex dimension")
    common(sub.add_parser("crosscheck", help="gauge-built vs cover-built twisted boundaries"), cocycle=True)

    cat = sub.add_parser("catalog", help="list or emit catalog entries")
    csub = cat.add_subparsers(dest="action", required=True)
    ls = csub.add_parser("list")
    ls.add_argument("--json", action="store_true")
    em = csub.add_parser("emit")
    em.add_argument("name", choices=catalog.NAMES)
    em.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    em.add_argument("--out", default=".", help="output directory")
    em.add_argument("--json", action="store_true")
    return p


# -- helpers ---------------------------------------------------------------------

def _load(args):
    try:
        text = read_text(args.inp)
    except OSError as exc:
        raise UsageError(f"cannot read {args.inp}: {exc.strerror}") from None
    X = parse_complex(text)
    meta = {"input_sha256": content_hash(text)}
    w = None
    if getattr(args, "cocycle", None):
        try:
            ctext = read_text(args.cocycle)
        except OSError as exc:
            raise UsageError(f"cannot read {args.cocycle}: {exc.strerror}") from None
        meta["cocycle_sha256"] = content_hash(ctext)
        w = load_cocycle(ctext, X)
    if args.subdivide < 0:
        raise UsageError("--subdivide must be nonnegative")
    for _ in range(args.subdivide):
        if w is not None:
            w = subdivide_cocycle(X, w)
        X = barycentric_subdivide(X)
    if args.subdivide:
        meta["subdivisions"] = args.subdivide
    return X, w, meta


def _gauge_opts(args) -> dict:
    return {"order": args.tree, "root": args.root}


def _emit(args, verb: str, meta: dict, body: dict, text: str, out) -> None:
    if getattr(args, "json", False):
        doc = {"schema": SCHEMA, "verb": verb, **meta, **body}
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _euler_lines(ev) -> str:
    lines = [f"Ichi = {ev.ichi}", f"chi = {ev.chi}"]
    if ev.n is not None:
        lines.append(f"n = {ev.n}: (-1)^n Ichi >= 0 {'holds' if ev.signed_ih else 'fails'}, "
                     f"(-1)^n chi >= 0 {'holds' if ev.signed_lci else 'fails'}")
    return "\n".join(lines)


# -- verbs -------------------------------------------------------------------------

def cmd_validate(args, out) -> int:
    X, _, meta = _load(args)
    rep = validate(X)
    lines = [f"{name}: {'ok' if ok else 'FAIL at ' + str(rep.violations.get(name))}" for name, ok in rep.flags.items()]
    body = {"validation": rep.as_dict()}
    first = rep.first_failure()
    if first:
        lines.append(f"first failing flag: {first[0]}")
        body["first_failure"] = first[0]
    _emit(args, "validate", meta, body, "\n".join(lines), out)
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_homology(args, out) -> int:
    X, _, meta = _load(args)
    h = ordinary_homology(X)
    body = {"homology": h.as_dict(), "euler_characteristic": h.euler()}
    _emit(args, "homology", meta, body, f"H: {h}\nchi = {h.euler()}", out)
    return EXIT_OK


def cmd_ih(args, out) -> int:
    X, _, meta = _load(args)
    if args.rel is not None:
        try:
            verts = [int(v) for v in args.rel.split(",") if v.strip()]
        except ValueError:
            raise UsageError("--rel takes comma-separated vertex ids") from None
        A = induced_subcomplex(X, verts)
        rep = relative_ih(X, A)
        meta["relative_to"] = sorted(verts)
        _emit(args, "ih", meta, {"relative_ih": rep.as_dict()}, f"relative IH: {rep}", out)
        return EXIT_OK
    ih = intersection_homology(X)
    ev = euler(X, args.n, ih=ih)
    body = {"ih": ih.as_dict(), "euler": ev.as_dict()}
    _emit(args, "ih", meta, body, f"IH: {ih}\n{_euler_lines(ev)}", out)
    return EXIT_OK


def cmd_twisted(args, out) -> int:
    X, w, meta = _load(args)
    chk = validate_cocycle(X, w)
    cover = gauge(X, w, **_gauge_opts(args))
    tih = twisted_ih(X, w, cover)
    th = twisted_homology(X, w, cover)
    body = {"cocycle": chk.as_dict(), "twisted_ih": tih.as_dict(), "twisted_homology": th.as_dict()}
    text = f"cocycle: epsilon on H1 basis = {list(chk.epsilon)}, surjective = {chk.surjective}\n" \
           f"twisted IH: {tih}\ntwisted H: {th}"
    _emit(args, "twisted", meta, body, text, out)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    X, w, meta = _load(args)
    rep = euler_witness(X, w, args.n, **_gauge_opts(args))
    lines = []
    for part in (rep.ih, rep.ordinary):
        label = "IH" if part.kind == "ih" else "H"
        if part.applicable:
            lines.append(f"{label}: witness, Euler = {part.euler} = (-1)^{rep.n} * {part.rank_n}")
        else:
            lines.append(f"{label}: criterion inapplicable, nonzero twisted rank in degrees {list(part.offending_degrees)}")
    _emit(args, "witness", meta, {"witness": rep.as_dict()}, "\n".join(lines), out)
    return EXIT_OK if rep.applicable else EXIT_INAPPLICABLE


def cmd_crosscheck(args, out) -> int:
    X, w, meta = _load(args)
    res = cover_crosscheck(X, w, **_gauge_opts(args))
    text = f"crosscheck {'ok' if res.ok else 'MISMATCH'} (degrees {list(res.degrees)}, sheet window {res.window})"
    if res.mismatch:
        text += f"\nfirst mismatch: {res.mismatch}"
    _emit(args, "crosscheck", meta, {"crosscheck": res.as_dict()}, text, out)
    return EXIT_OK if res.ok else EXIT_INVALID


def _parse_params(items: List[str]) -> dict:
    params = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        try:
            params[key] = int(val)
        except ValueError:
            params[key] = val
    return params


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def cmd_catalog(args, out) -> int:
    if args.action == "list":
        entries = catalog.default_entries()
        if args.json:
            doc = {"schema": SCHEMA, "verb": "catalog", "entries": [
                {"name": e.name, "params": e.params, "n": e.n, "cocycles": sorted(e.cocycles),
                 "description": e.description, "abelian_model": e.abelian_model, "lci": e.lci,
                 "closed": e.closed} for e in entries]}
            out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        else:
            for e in entries:
                out.write(f"{e.name:14s} n={e.n}  cocycles: {', '.join(sorted(e.cocycles)) or '-'}  ({e.description})\n")
        return EXIT_OK
    params = _parse_params(args.param)
    try:
        entry = catalog.build(args.name, **params)
    except TypeError as exc:
        raise UsageError(f"bad parameters for {args.name}: {exc}") from None
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    path = outdir / f"{entry.name}.v1"
    path.write_text(emit_complex(entry.complex), encoding="utf-8")
    written.append(str(path))
    for cname, w in sorted(entry.cocycles.items()):
        cpath = outdir / f"{entry.name}.{cname}.cocycle.v1"
        cpath.write_text(emit_cocycle(Cocycle.coerce(w).values), encoding="utf-8")
        written.append(str(cpath))
    fpath = outdir / f"{entry.name}.fixtures.json"
    fix = {"name": entry.name, "params": entry.params, "n": entry.n, "expected": _jsonable(entry.expected)}
    fpath.write_text(json.dumps(fix, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    written.append(str(fpath))
    if args.json:
        out.write(json.dumps({"schema": SCHEMA, "verb": "catalog", "written": written}, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(written) + "\n")
    return EXIT_OK


VERBS = {
    "validate": cmd_validate, "homology": cmd_homology, "ih": cmd_ih, "twisted": cmd_twisted,
    "witness": cmd_witness, "crosscheck": cmd_crosscheck, "catalog": cmd_catalog,
}


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return VERBS[args.verb](args, out)
    except (ParseError, UsageError, CatalogError) as exc:
        err.write(f"strathom: error: {exc}\n")
        return EXIT_USAGE
    except (ValidationError, CocycleError, NotFullSubcomplex) as exc:
        err.write(f"strathom: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
