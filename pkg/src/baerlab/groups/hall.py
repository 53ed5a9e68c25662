"""Hall basic commutators and Witt's necklace count."""

from __future__ import annotations


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


def witt_count(n: int, w: int) -> int:
    """Rank of the weight-``w`` lower central factor of the free group on ``n`` letters."""
    if w < 1:
        raise ValueError("weight must be positive")
    total = sum(mobius(d) * n ** (w // d) for d in range(1, w + 1) if w % d == 0)
    return total // w


def weight(c) -> int:
    return 1 if isinstance(c, int) else weight(c[0]) + weight(c[1])


def hall_basis(n: int, max_weight: int) -> list:
    """Basic commutators of weight ``<= max_weight`` in Hall order.

    Generators are ``0..n-1``; ``(u, v)`` stands for ``[u, v]``.  A bracket
    ``[u, v]`` is basic when ``u > v`` are basic and, if ``u = [y, z]``,
    then ``z <= v``.
    """
    order: list = list(range(n))
    by_weight = {1: list(range(n))}
    pos = {x: i for i, x in enumerate(order)}
    for k in range(2, max_weight + 1):
        new = []
        for wv in range(1, k):
            wu = k - wv
            for u in by_weight.get(wu, []):
                for v in by_weight.get(wv, []):
                    if pos[u] <= pos[v]:
                        continue
                    if not isinstance(u, int) and pos[u[1]] > pos[v]:
                        continue
                    new.append((u, v))
        new.sort(key=lambda c: (pos[c[0]], pos[c[1]]))
        by_weight[k] = new
        for c in new:
            pos[c] = len(order)
            order.append(c)
    return order


def hall_witt(n: int, w: int) -> tuple[list, int]:
    """Basic commutators of exactly weight ``w`` and their count."""
    if n < 1 or w < 1:
        raise ValueError("need n >= 1 and w >= 1")
    basis = [c for c in hall_basis(n, w) if weight(c) == w]
    return basis, len(basis)


def format_commutator(c, names=None) -> str:
    if isinstance(c, int):
        return names[c] if names else f"x{c + 1}"
    return f"[{format_commutator(c[0], names)}, {format_commutator(c[1], names)}]"
