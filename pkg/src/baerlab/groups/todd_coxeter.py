"""HLT coset enumeration with coincidence processing.

Columns of the coset table are indexed by letters: generator ``g`` is column
``2g``, its inverse column ``2g + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import LimitExceeded
from .words import Presentation, Word, letters

DEFAULT_MAX_COSETS = 100_000


def _col(letter: int) -> int:
    g = abs(letter) - 1
    return 2 * g if letter > 0 else 2 * g + 1


def _inv(col: int) -> int:
    return col ^ 1


@dataclass(frozen=True)
class CosetTable:
    """Complete standardized table; coset 0 is the subgroup itself."""

    table: tuple[tuple[int, ...], ...]
    ngens: int
    # shortlex-least word (as letters) taking coset 0 to each coset
    representatives: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.table)

    def act(self, coset: int, word_letters: Sequence[int]) -> int:
        for x in word_letters:
            coset = self.table[coset][_col(x)]
        return coset


class _Enumerator:
    def __init__(self, ncols: int, max_cosets: int):
        self.ncols = ncols
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * ncols]
        self.parent = [0]

    def rep(self, c: int) -> int:
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise LimitExceeded(f"coset enumeration exceeded {self.max_cosets} cosets")
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][_inv(x)] = c

    def merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        lo, hi = min(k, l), max(k, l)
        self.parent[hi] = lo
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = self.table[e]
            for x in range(self.ncols):
                f = row[x]
                if f is None:
                    continue
                xi = _inv(x)
                if self.table[f][xi] == e:
                    self.table[f][xi] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] is not None:
                    self.merge(f1, self.table[e1][x], queue)
                elif self.table[f1][xi] is not None:
                    self.merge(e1, self.table[f1][xi], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][xi] = e1

    def scan_and_fill(self, c: int, word: Sequence[int]) -> None:
        cols = [_col(x) for x in word]
        n = len(cols)
        if n == 0:
            return
        f = b = c
        i, j = 0, n - 1
        t = self.table
        while True:
            while i <= j and t[f][cols[i]] is not None:
                f = t[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][_inv(cols[j])] is not None:
                b = t[b][_inv(cols[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][cols[i]] = b
                t[b][_inv(cols[i])] = f
                return
            self.define(f, cols[i])


def todd_coxeter(pres: Presentation, subgroup: Sequence[Word] = (),
                 max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate cosets of ``<subgroup>`` in the group presented by ``pres``.

    Raises ``LimitExceeded`` when more than ``max_cosets`` cosets are defined;
    that signals a large or infinite index, never a wrong table.
    """
    k = len(pres.generators)
    ncols = 2 * k
    en = _Enumerator(ncols, max_cosets)
    rels = [letters(r) for r in pres.relators]
    for w in subgroup:
        en.scan_and_fill(0, letters(w))
    c = 0
    while c < len(en.table):
        if en.alive(c):
            for r in rels:
                if not en.alive(c):
                    break
                en.scan_and_fill(c, r)
            if en.alive(c):
                for x in range(ncols):
                    if en.table[c][x] is None:
                        en.define(c, x)
        c += 1
    return _standardize(en, k)


def _standardize(en: _Enumerator, k: int) -> CosetTable:
    # BFS from coset 0 with letters in order a, a^-1, b, b^-1, ... gives shortlex order
    order_letters = []
    for g in range(k):
        order_letters += [g + 1, -(g + 1)]
    new = {0: 0}
    reps = [()]
    queue = [0]
    qi = 0
    while qi < len(queue):
        c = queue[qi]
        qi += 1
        for x in order_letters:
            d = en.rep(en.table[c][_col(x)])
            if d not in new:
                new[d] = len(queue)
                queue.append(d)
                reps.append(reps[new[c]] + (x,))
    table = []
    for c in queue:
        table.append(tuple(new[en.rep(en.table[c][col])] for col in range(2 * k)))
    return CosetTable(tuple(table), k, tuple(reps))
