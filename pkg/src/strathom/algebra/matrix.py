"""Sparse exact matrices tagged with their coefficient ring."""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .rings import LAURENT, QQ, RINGS, ZZ

DENSE_LIMIT = 64


class ExactMatrix:
    """Immutable ``rows x cols`` matrix stored as ``{(r, c): value}``.

    Zero entries are never stored.  ``ring`` is one of ``ZZ``, ``QQ`` or
    ``LAURENT`` from :mod:`strathom.algebra.rings`.
    """

    __slots__ = ("ring", "rows", "cols", "_entries")

    def __init__(self, ring, rows: int, cols: int, entries: Mapping[Tuple[int, int], object] | None = None):
        if isinstance(ring, str):
            ring = RINGS[ring]
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        ent = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise IndexError(f"entry {(r, c)} outside {rows}x{cols}")
                v = ring.coerce(v)
                if v:
                    ent[(r, c)] = v
        self._entries = ent

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, ring, rows: Sequence[Sequence[object]], cols: int | None = None) -> "ExactMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else (cols or 0)
        ent = {}
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    ent[(i, j)] = v
        return cls(ring, nr, nc, ent)

    @classmethod
    def from_columns(cls, ring, rows: int, columns: Sequence[Mapping[int, object]]) -> "ExactMatrix":
        ent = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                ent[(i, j)] = v
        return cls(ring, rows, len(columns), ent)

    @classmethod
    def identity(cls, ring, n: int) -> "ExactMatrix":
        if isinstance(ring, str):
            ring = RINGS[ring]
        return cls(ring, n, n, {(i, i): ring.one for i in range(n)})

    @classmethod
    def zeros(cls, ring, rows: int, cols: int) -> "ExactMatrix":
        return cls(ring, rows, cols)

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, rc):
        return self._entries.get(rc, self.ring.zero)

    def items(self):
        return self._entries.items()

    def nnz(self) -> int:
        return len(self._entries)

    def to_dense(self) -> List[List[object]]:
        z = self.ring.zero
        out = [[z] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def column_dicts(self) -> List[Dict[int, object]]:
        cols: List[Dict[int, object]] = [dict() for _ in range(self.cols)]
        for (r, c), v in self._entries.items():
            cols[c][r] = v
        return cols

    def row_dicts(self) -> List[Dict[int, object]]:
        rows: List[Dict[int, object]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            rows[r][c] = v
        return rows

    def column(self, j: int) -> List[object]:
        z = self.ring.zero
        out = [z] * self.rows
        for (r, c), v in self._entries.items():
            if c == j:
                out[r] = v
        return out

    def is_zero(self) -> bool:
        return not self._entries

    def is_diagonal(self) -> bool:
        return all(r == c for (r, c) in self._entries)

    def diagonal(self) -> List[object]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    # -- algebra ----------------------------------------------------------

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ring, self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.shape} @ {other.shape}")
        orows = other.row_dicts()
        acc: Dict[Tuple[int, int], object] = {}
        for (r, k), a in self._entries.items():
            for c, b in orows[k].items():
                key = (r, c)
                acc[key] = acc.get(key, self.ring.zero) + a * b
        return ExactMatrix(self.ring, self.rows, other.cols, acc)

    def apply(self, vec: Sequence[object]) -> List[object]:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = [self.ring.zero] * self.rows
        for (r, c), v in self._entries.items():
            x = vec[c]
            if x:
                out[r] = out[r] + v * x
        return out

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        rpos = {r: i for i, r in enumerate(rows)}
        cpos = {c: j for j, c in enumerate(cols)}
        ent = {}
        for (r, c), v in self._entries.items():
            if r in rpos and c in cpos:
                ent[(rpos[r], cpos[c])] = v
        return ExactMatrix(self.ring, len(rows), len(cols), ent)

    def map_entries(self, fn, ring=None) -> "ExactMatrix":
        ring = ring or self.ring
        return ExactMatrix(ring, self.rows, self.cols, {k: fn(v) for k, v in self._entries.items()})

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self):
        return f"ExactMatrix({self.ring!r}, {self.rows}x{self.cols}, nnz={len(self._entries)})"

    def pretty(self) -> str:
        dense = [[str(v) for v in row] for row in self.to_dense()]
        if not dense:
            return "[]"
        w = max((len(s) for row in dense for s in row), default=1)
        return "\n".join("[" + " ".join(s.rjust(w) for s in row) + "]" for row in dense)


def matrix_from_vectors(ring, dim: int, vectors: Iterable[Sequence[object]]) -> ExactMatrix:
    """Matrix whose columns are ``vectors``."""
    cols = [{i: v for i, v in enumerate(vec) if v} for vec in vectors]
    return ExactMatrix.from_columns(ring, dim, cols)


__all__ = ["ExactMatrix", "matrix_from_vectors", "ZZ", "QQ", "LAURENT", "DENSE_LIMIT"]
