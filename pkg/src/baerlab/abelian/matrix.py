"""Immutable integer matrices with sparse row storage.

Entries are Python ints, so nothing overflows.  Storage keeps only the
nonzero entries of each row, which matters for bar-model face maps whose
dense form would run into millions of zeros.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class IntMatrix:
    __slots__ = ("nrows", "ncols", "_rows", "_hash")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[dict] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative matrix shape")
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [{} for _ in range(nrows)]
        if len(rows) != nrows:
            raise ValueError("row count does not match shape")
        clean = []
        for r in rows:
            d = {j: int(v) for j, v in r.items() if v}
            for j in d:
                if not 0 <= j < ncols:
                    raise ValueError(f"column index {j} out of range")
            clean.append(d)
        self._rows = tuple(clean)
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ncols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(len(rows), ncols, [{j: v for j, v in enumerate(r) if v} for r in rows])

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[int]], nrows: int) -> "IntMatrix":
        cols = [list(c) for c in cols]
        rows = [{} for _ in range(nrows)]
        for j, c in enumerate(cols):
            if len(c) != nrows:
                raise ValueError("column length does not match nrows")
            for i, v in enumerate(c):
                if v:
                    rows[i][j] = v
        return cls(nrows, len(cols), rows)

    @classmethod
    def from_sparse_columns(cls, cols: Sequence[dict], nrows: int) -> "IntMatrix":
        rows = [{} for _ in range(nrows)]
        for j, c in enumerate(cols):
            for i, v in c.items():
                if v:
                    rows[i][j] = v
        return cls(nrows, len(cols), rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[int], nrows: int | None = None, ncols: int | None = None):
        k = len(entries)
        nrows = k if nrows is None else nrows
        ncols = k if ncols is None else ncols
        rows = [{} for _ in range(nrows)]
        for i, d in enumerate(entries):
            if d:
                rows[i][i] = d
        return cls(nrows, ncols, rows)

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i].get(j, 0)

    def row_dict(self, i: int) -> dict:
        return self._rows[i]

    def row(self, i: int) -> list[int]:
        r = self._rows[i]
        return [r.get(j, 0) for j in range(self.ncols)]

    def column(self, j: int) -> list[int]:
        return [r.get(j, 0) for r in self._rows]

    def column_dicts(self) -> list[dict]:
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.ncols)]

    def tolist(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.nrows)]

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def is_zero(self) -> bool:
        return not any(self._rows)

    def diagonal_entries(self) -> list[int]:
        return [self._rows[i].get(i, 0) for i in range(min(self.nrows, self.ncols))]

    # -- arithmetic -------------------------------------------------------

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.ncols, self.nrows, self.column_dicts())

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        orows = other._rows
        out = []
        for r in self._rows:
            acc: dict = {}
            for k, a in r.items():
                for j, b in orows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append(acc)
        return IntMatrix(self.nrows, other.ncols, out)

    def apply(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum(v * vec[j] for j, v in r.items()) for r in self._rows]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        out = []
        for r, s in zip(self._rows, other._rows):
            d = dict(r)
            for j, v in s.items():
                d[j] = d.get(j, 0) + v
            out.append(d)
        return IntMatrix(self.nrows, self.ncols, out)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.nrows, self.ncols, [{j: -v for j, v in r.items()} for r in self._rows])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.nrows, self.ncols, [{j: c * v for j, v in r.items()} for r in self._rows])

    def select_rows(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(idx), self.ncols, [self._rows[i] for i in idx])

    def select_columns(self, idx: Sequence[int]) -> "IntMatrix":
        pos = {j: k for k, j in enumerate(idx)}
        if len(pos) != len(idx):
            # repeated columns: fall back to explicit construction
            cols = self.column_dicts()
            return IntMatrix.from_sparse_columns([cols[j] for j in idx], self.nrows)
        out = [{pos[j]: v for j, v in r.items() if j in pos} for r in self._rows]
        return IntMatrix(self.nrows, len(idx), out)

    def hstack(self, *others: "IntMatrix") -> "IntMatrix":
        rows = [dict(r) for r in self._rows]
        off = self.ncols
        for o in others:
            if o.nrows != self.nrows:
                raise ValueError("hstack row mismatch")
            for i, r in enumerate(o._rows):
                for j, v in r.items():
                    rows[i][off + j] = v
            off += o.ncols
        return IntMatrix(self.nrows, off, rows)

    def vstack(self, *others: "IntMatrix") -> "IntMatrix":
        rows = list(self._rows)
        for o in others:
            if o.ncols != self.ncols:
                raise ValueError("vstack column mismatch")
            rows.extend(o._rows)
        return IntMatrix(len(rows), self.ncols, rows)

    @staticmethod
    def block_diag(*blocks: "IntMatrix") -> "IntMatrix":
        nr = sum(b.nrows for b in blocks)
        nc = sum(b.ncols for b in blocks)
        rows = []
        off = 0
        for b in blocks:
            for r in b._rows:
                rows.append({off + j: v for j, v in r.items()})
            off += b.ncols
        return IntMatrix(nr, nc, rows)

    @staticmethod
    def kron(a: "IntMatrix", b: "IntMatrix") -> "IntMatrix":
        rows = []
        for ra in a._rows:
            for rb in b._rows:
                d = {}
                for ja, va in ra.items():
                    for jb, vb in rb.items():
                        d[ja * b.ncols + jb] = va * vb
                rows.append(d)
        return IntMatrix(a.nrows * b.nrows, a.ncols * b.ncols, rows)

    # -- misc -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols,
                               tuple(tuple(sorted(r.items())) for r in self._rows)))
        return self._hash

    def __repr__(self) -> str:
        if self.nrows * self.ncols <= 64:
            return f"IntMatrix({self.tolist()!r})" if self.nrows else f"IntMatrix(0x{self.ncols})"
        return f"<IntMatrix {self.nrows}x{self.ncols}, nnz={self.nnz()}>"
