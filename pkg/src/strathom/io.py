"""Text formats for complexes and cocycles (version 1).

Complex document::

    strathom-complex v1
    n=1
    vertices=7
    maximal=(0,1,2),(0,1,3),...
    strata=(0,1),(1,0)
    assign=(6):1

``dim=<real dimension>`` may follow ``n=`` when the real dimension is not
``2n``.  ``assign`` lists every simplex of a non-top stratum.  Emission is
canonical, so ``emit(parse(emit(X))) == emit(X)``.

Cocycle document::

    strathom-cocycle v1
    edge 0 3 1
    edge 2 5 -1
"""

from __future__ import annotations

import hashlib
import re
from pathlib import Path
from typing import Dict, Tuple, Union

from .complex import StratifiedComplex, simplex
from .errors import ParseError

COMPLEX_HEADER = "strathom-complex v1"
COCYCLE_HEADER = "strathom-cocycle v1"

_TUPLE = re.compile(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\)")


def _fmt(t) -> str:
    return "(" + ",".join(str(v) for v in t) + ")"


def emit_complex(X: StratifiedComplex) -> str:
    lines = [COMPLEX_HEADER, f"n={X.n}"]
    if X.dim != 2 * X.n:
        lines.append(f"dim={X.dim}")
    lines.append(f"vertices={X.num_vertices}")
    lines.append("maximal=" + ",".join(_fmt(s) for s in X.maximal))
    lines.append("strata=" + ",".join(_fmt((sid, c)) for sid, c in X.strata.items()))
    lines.append("assign=" + ",".join(f"{_fmt(s)}:{sid}" for s, sid in X.assign.items()))
    return "\n".join(lines) + "\n"


def _tuples(text: str, where: str):
    text = text.strip()
    if not text:
        return []
    out = []
    pos = 0
    while pos < len(text):
        m = _TUPLE.match(text, pos)
        if not m:
            raise ParseError(f"{where}: expected a tuple at {text[pos:pos + 20]!r}")
        body = m.group(1)
        out.append(tuple(int(v) for v in body.split(",")) if body else ())
        pos = m.end()
        if pos < len(text):
            if text[pos] != ",":
                raise ParseError(f"{where}: expected ',' at {text[pos:pos + 20]!r}")
            pos += 1
    return out


def parse_complex(text: str) -> StratifiedComplex:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or lines[0] != COMPLEX_HEADER:
        raise ParseError(f"missing header {COMPLEX_HEADER!r}")
    fields: Dict[str, str] = {}
    for ln in lines[1:]:
        if "=" not in ln:
            raise ParseError(f"expected key=value, got {ln!r}")
        k, v = ln.split("=", 1)
        k = k.strip()
        if k in fields:
            raise ParseError(f"duplicate field {k!r}")
        if k not in ("n", "dim", "vertices", "maximal", "strata", "assign"):
            raise ParseError(f"unknown field {k!r}")
        fields[k] = v.strip()
    for k in ("n", "vertices", "maximal"):
        if k not in fields:
            raise ParseError(f"missing field {k!r}")
    try:
        n = int(fields["n"])
        nv = int(fields["vertices"])
        dim = int(fields["dim"]) if "dim" in fields else None
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    maximal = _tuples(fields["maximal"], "maximal")
    strata = {}
    for t in _tuples(fields.get("strata", ""), "strata"):
        if len(t) != 2:
            raise ParseError(f"strata entries are (id, cdim), got {t}")
        if t[0] in strata:
            raise ParseError(f"duplicate stratum id {t[0]}")
        strata[t[0]] = t[1]
    assign: Dict[Tuple[int, ...], int] = {}
    raw = fields.get("assign", "")
    if raw:
        for item in re.split(r",(?=\()", raw):
            m = re.fullmatch(r"\s*(\([^)]*\))\s*:\s*(-?\d+)\s*", item)
            if not m:
                raise ParseError(f"assign: bad entry {item!r}")
            (s,) = _tuples(m.group(1), "assign")
            assign[simplex(s)] = int(m.group(2))
    try:
        return StratifiedComplex(n, nv, maximal, strata or None, assign, dim=dim)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def emit_cocycle(values: Dict[Tuple[int, int], int]) -> str:
    """``values`` maps ordered pairs ``(a, b)`` with ``a < b`` to integers."""
    lines = [COCYCLE_HEADER]
    for (a, b), v in sorted(values.items()):
        if v:
            lines.append(f"edge {a} {b} {v}")
    return "\n".join(lines) + "\n"


def parse_cocycle(text: str) -> Dict[Tuple[int, int], int]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or lines[0] != COCYCLE_HEADER:
        raise ParseError(f"missing header {COCYCLE_HEADER!r}")
    out: Dict[Tuple[int, int], int] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 4 or parts[0] != "edge":
            raise ParseError(f"expected 'edge a b value', got {ln!r}")
        try:
            a, b, v = int(parts[1]), int(parts[2]), int(parts[3])
        except ValueError:
            raise ParseError(f"non-integer field in {ln!r}") from None
        if a == b:
            raise ParseError(f"degenerate edge in {ln!r}")
        if a > b:
            a, b, v = b, a, -v
        if (a, b) in out and out[(a, b)] != v:
            raise ParseError(f"conflicting values for edge {(a, b)}")
        out[(a, b)] = v
    return out


def read_text(path: Union[str, Path]) -> str:
    return Path(path).read_text(encoding="utf-8")


def content_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
