"""Smith normal form over the integers, with optional unimodular transforms.

Pivoting is deterministic: the active entry of smallest absolute value,
ties broken by the lowest (row, column) index.  ``elementary_divisors``
is a transform-free variant tuned for large sparse boundary matrices:
it eliminates unit pivots first (Markowitz order) and only runs the full
algorithm on the small remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .matrix import IntMatrix


@dataclass(frozen=True)
class SmithDecomposition:
    """``u @ m @ v == s`` with ``s`` diagonal, entries ``diag`` (length rank)."""

    diag: tuple[int, ...]
    nrows: int
    ncols: int
    u: IntMatrix | None
    u_inv: IntMatrix | None
    v: IntMatrix | None
    v_inv: IntMatrix | None

    @property
    def rank(self) -> int:
        return len(self.diag)

    @property
    def s(self) -> IntMatrix:
        return IntMatrix.diagonal(list(self.diag), self.nrows, self.ncols)


class _Reducer:
    """Mutable sparse workspace for one SNF run."""

    def __init__(self, m: IntMatrix, transforms: bool):
        self.nr, self.nc = m.nrows, m.ncols
        self.rows = [dict(m.row_dict(i)) for i in range(self.nr)]
        self.cols = [set() for _ in range(self.nc)]
        for i, r in enumerate(self.rows):
            for j in r:
                self.cols[j].add(i)
        self.transforms = transforms
        if transforms:
            # u and v_inv as rows; u_inv and v as columns
            self.u = [{i: 1} for i in range(self.nr)]
            self.u_inv = [{i: 1} for i in range(self.nr)]
            self.v = [{j: 1} for j in range(self.nc)]
            self.v_inv = [{j: 1} for j in range(self.nc)]

    @staticmethod
    def _axpy(dst: dict, src: dict, q: int) -> None:
        for k, v in src.items():
            w = dst.get(k, 0) + q * v
            if w:
                dst[k] = w
            else:
                dst.pop(k, None)

    def row_add(self, i: int, t: int, q: int) -> None:
        """row_i += q * row_t"""
        if not q:
            return
        ri, rt = self.rows[i], self.rows[t]
        for j, v in rt.items():
            w = ri.get(j, 0) + q * v
            if w:
                if j not in ri:
                    self.cols[j].add(i)
                ri[j] = w
            else:
                if j in ri:
                    del ri[j]
                    self.cols[j].discard(i)
        if self.transforms:
            self._axpy(self.u[i], self.u[t], q)
            self._axpy(self.u_inv[t], self.u_inv[i], -q)

    def col_add(self, j: int, t: int, q: int) -> None:
        """col_j += q * col_t"""
        if not q:
            return
        for i in list(self.cols[t]):
            r = self.rows[i]
            w = r.get(j, 0) + q * r[t]
            if w:
                if j not in r:
                    self.cols[j].add(i)
                r[j] = w
            else:
                if j in r:
                    del r[j]
                    self.cols[j].discard(i)
        if self.transforms:
            self._axpy(self.v[j], self.v[t], q)
            self._axpy(self.v_inv[t], self.v_inv[j], -q)

    def row_negate(self, i: int) -> None:
        r = self.rows[i]
        for j in r:
            r[j] = -r[j]
        if self.transforms:
            self.u[i] = {k: -v for k, v in self.u[i].items()}
            self.u_inv[i] = {k: -v for k, v in self.u_inv[i].items()}

    def smallest(self, candidates) -> tuple[int, int] | None:
        best = None
        bkey = None
        for i, j in candidates:
            a = abs(self.rows[i][j])
            key = (a, i, j)
            if bkey is None or key < bkey:
                best, bkey = (i, j), key
        return best

    def run(self) -> list[tuple[int, int]]:
        done_rows: set[int] = set()
        pivots: list[tuple[int, int]] = []
        while True:
            cand = ((i, j) for i in range(self.nr) if i not in done_rows for j in self.rows[i])
            piv = self.smallest(cand)
            if piv is None:
                break
            r, c = piv
            while True:
                if self.rows[r][c] < 0:
                    self.row_negate(r)
                p = self.rows[r][c]
                for i in sorted(self.cols[c]):
                    if i != r:
                        self.row_add(i, r, -(self.rows[i][c] // p))
                for j in sorted(self.rows[r]):
                    if j != c:
                        self.col_add(j, c, -(self.rows[r][j] // p))
                rest = [(i, c) for i in self.cols[c] if i != r] + \
                       [(r, j) for j in self.rows[r] if j != c]
                if rest:
                    r, c = self.smallest(rest)
                    continue
                if p > 1:
                    bad = None
                    for i in range(self.nr):
                        if i in done_rows or i == r:
                            continue
                        if any(v % p for v in self.rows[i].values()):
                            bad = i
                            break
                    if bad is not None:
                        self.row_add(r, bad, 1)
                        continue
                break
            done_rows.add(r)
            pivots.append((r, c))
        return pivots


def smith(m: IntMatrix, transforms: bool = True) -> SmithDecomposition:
    red = _Reducer(m, transforms)
    pivots = red.run()
    diag = tuple(red.rows[r][c] for r, c in pivots)
    if not transforms:
        return SmithDecomposition(diag, m.nrows, m.ncols, None, None, None, None)
    prow = [r for r, _ in pivots]
    pset = set(prow)
    prow += [i for i in range(m.nrows) if i not in pset]
    pcol = [c for _, c in pivots]
    cset = set(pcol)
    pcol += [j for j in range(m.ncols) if j not in cset]
    u = IntMatrix(m.nrows, m.nrows, [red.u[i] for i in prow])
    u_inv = IntMatrix.from_sparse_columns([red.u_inv[i] for i in prow], m.nrows)
    v = IntMatrix.from_sparse_columns([red.v[j] for j in pcol], m.ncols)
    v_inv = IntMatrix(m.ncols, m.ncols, [red.v_inv[j] for j in pcol])
    return SmithDecomposition(diag, m.nrows, m.ncols, u, u_inv, v, v_inv)


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(s, u, v)`` with ``u @ m @ v == s``, ``s`` diagonal and
    its nonzero entries positive with each dividing the next."""
    d = smith(m)
    return d.s, d.u, d.v


def elementary_divisors(m: IntMatrix) -> list[int]:
    """Nonzero Smith diagonal of ``m`` (ascending, divisibility chain)."""
    rows = [dict(m.row_dict(i)) for i in range(m.nrows)]
    cols: dict[int, set] = {}
    for i, r in enumerate(rows):
        for j in r:
            cols.setdefault(j, set()).add(i)
    alive = set(i for i, r in enumerate(rows) if r)
    units = 0
    progress = True
    while progress:
        progress = False
        for i in sorted(alive, key=lambda k: (len(rows[k]), k)):
            if i not in alive:
                continue
            r = rows[i]
            best = None
            for j, v in r.items():
                if v == 1 or v == -1:
                    cost = len(cols[j])
                    if best is None or (cost, j) < best:
                        best = (cost, j)
            if best is None:
                continue
            c = best[1]
            p = r[c]
            for k in list(cols[c]):
                if k == i:
                    continue
                rk = rows[k]
                q = -rk[c] * p
                for j, v in r.items():
                    w = rk.get(j, 0) + q * v
                    if w:
                        if j not in rk:
                            cols.setdefault(j, set()).add(k)
                        rk[j] = w
                    else:
                        if j in rk:
                            del rk[j]
                            cols[j].discard(k)
                if not rk:
                    alive.discard(k)
            for j in r:
                cols[j].discard(i)
            rows[i] = {}
            alive.discard(i)
            units += 1
            progress = True
    if not alive:
        return [1] * units
    rest_rows = sorted(alive)
    rest_cols = sorted(j for j, s in cols.items() if s)
    cpos = {j: k for k, j in enumerate(rest_cols)}
    sub = IntMatrix(len(rest_rows), len(rest_cols),
                    [{cpos[j]: v for j, v in rows[i].items()} for i in rest_rows])
    rest = list(smith(sub, transforms=False).diag)
    return [1] * units + rest


def matrix_rank(m: IntMatrix) -> int:
    return len(elementary_divisors(m))


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a basis of the integer kernel of ``m``."""
    d = smith(m)
    return d.v.select_columns(range(d.rank, m.ncols))


def column_span_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a basis of the lattice spanned by the columns of ``m``."""
    d = smith(m)
    cols = d.u_inv.select_columns(range(d.rank))
    return cols @ IntMatrix.diagonal(list(d.diag))


def solve_with(d: SmithDecomposition, y: Sequence[int]) -> list[int] | None:
    """Integer ``x`` with ``m @ x == y`` using a precomputed decomposition."""
    z = d.u.apply(list(y))
    xp = [0] * d.ncols
    for i, s in enumerate(d.diag):
        q, r = divmod(z[i], s)
        if r:
            return None
        xp[i] = q
    if any(z[d.rank:]):
        return None
    return d.v.apply(xp)


def solve(m: IntMatrix, y: Sequence[int]) -> list[int] | None:
    return solve_with(smith(m), y)


def solve_matrix(m: IntMatrix, y: IntMatrix) -> IntMatrix | None:
    """Integer ``X`` with ``m @ X == y`` (column by column), or ``None``."""
    d = smith(m)
    cols = []
    for col in y.columns():
        x = solve_with(d, col)
        if x is None:
            return None
        cols.append(x)
    return IntMatrix.from_columns(cols, m.ncols)
