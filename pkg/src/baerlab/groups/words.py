"""Words in free groups and group presentations.

A word is a tuple of ``(generator_index, exponent)`` runs.  The parser
accepts the line format used in presentation files::

    a^2
    (a b)^3
    [a, b] c^-1
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import ParseError

Word = tuple  # tuple[tuple[int, int], ...]


def free_reduce(w: Iterable[tuple[int, int]]) -> Word:
    """Freely reduce: merge adjacent runs of the same generator, drop zero exponents."""
    stack: list[list[int]] = []
    for g, e in w:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return tuple((g, e) for g, e in stack)


def letters(w: Word) -> list[int]:
    """Expand to a letter list, generator ``g`` as ``g + 1`` and its inverse as ``-(g + 1)``."""
    out = []
    for g, e in w:
        s = g + 1 if e > 0 else -(g + 1)
        out.extend([s] * abs(e))
    return out


def from_letters(ls: Iterable[int]) -> Word:
    return free_reduce((abs(x) - 1, 1 if x > 0 else -1) for x in ls)


def inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def concat(*ws: Word) -> Word:
    return free_reduce(run for w in ws for run in w)


def power(w: Word, k: int) -> Word:
    if k < 0:
        w, k = inverse(w), -k
    return free_reduce(run for _ in range(k) for run in w)


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u^-1 v^-1 u v``."""
    return concat(inverse(u), inverse(v), u, v)


def left_normed(ws: Sequence[Word]) -> Word:
    """``[w1, w2, ..., wk] = [[w1, w2], ..., wk]``."""
    out = ws[0]
    for w in ws[1:]:
        out = commutator(out, w)
    return out


def cyclic_reduce(w: Word) -> Word:
    ls = letters(free_reduce(w))
    while len(ls) >= 2 and ls[0] == -ls[-1]:
        ls = ls[1:-1]
    return from_letters(ls)


def length(w: Word) -> int:
    return sum(abs(e) for _, e in w)


def format_word(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    return " ".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in w)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        k = len(self.generators)
        rels = []
        for r in self.relators:
            for g, _ in r:
                if not 0 <= g < k:
                    raise ValueError(f"relator uses generator {g} outside alphabet")
            r = cyclic_reduce(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def parse(cls, generators: Sequence[str], relators: Sequence[str]) -> "Presentation":
        return cls(tuple(generators), tuple(parse_word(r, generators) for r in relators))

    def __str__(self) -> str:
        rels = ", ".join(format_word(r, self.generators) for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"


_TOKEN = re.compile(r"\s*(?:(\^-?\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\()|(\))|(\[)|(\])|(,)|(\*)|(1\b))")


def parse_word(text: str, generators: Sequence[str]) -> Word:
    """Parse products of generators, parentheses, commutator brackets and ``^k`` powers."""
    names = {n: i for i, n in enumerate(generators)}
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse word {text!r} at position {pos}")
        pos = m.end()
        kind = m.lastindex
        toks.append((kind, m.group(kind)))

    idx = 0

    def peek():
        return toks[idx] if idx < len(toks) else (None, None)

    def parse_product(stop):
        nonlocal idx
        out: Word = ()
        while True:
            kind, val = peek()
            if kind is None or kind in stop:
                return out
            if kind == 8:  # '*'
                idx += 1
                continue
            out = concat(out, parse_factor())

    def parse_factor():
        nonlocal idx
        kind, val = peek()
        idx += 1
        if kind == 2:
            if val not in names:
                raise ParseError(f"unknown generator {val!r} in {text!r}")
            base: Word = ((names[val], 1),)
        elif kind == 9:
            base = ()
        elif kind == 3:
            base = parse_product({4})
            if peek()[0] != 4:
                raise ParseError(f"unbalanced parenthesis in {text!r}")
            idx += 1
        elif kind == 5:
            parts = [parse_product({6, 7})]
            while peek()[0] == 7:
                idx += 1
                parts.append(parse_product({6, 7}))
            if peek()[0] != 6 or len(parts) < 2:
                raise ParseError(f"malformed commutator in {text!r}")
            idx += 1
            base = left_normed(parts)
        else:
            raise ParseError(f"unexpected token {val!r} in {text!r}")
        while peek()[0] == 1:
            base = power(base, int(peek()[1][1:]))
            idx += 1
        return base

    w = parse_product(set())
    if idx != len(toks):
        raise ParseError(f"trailing input in {text!r}")
    return w
