"""Abelian extensions of finite abelian groups, up to isomorphism of the middle term.

A finite abelian p-group of type ``lam`` has a subgroup of type ``mu`` with
quotient of type ``nu`` exactly when the Littlewood-Richardson coefficient
``c(lam; mu, nu)`` is nonzero.  Types are small here, so the coefficient is
found by searching skew tableaux directly.
"""

from __future__ import annotations

from itertools import product

from ..abelian import FgAbGroup


def factorize(n: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def p_type(g: FgAbGroup, p: int) -> tuple[int, ...]:
    """Partition of exponents of the p-primary part of a finite group."""
    out = []
    for d in g.invariant_factors:
        e = 0
        while d % p == 0:
            d //= p
            e += 1
        if e:
            out.append(e)
    return tuple(sorted(out, reverse=True))


def lr_nonzero(lam: tuple, mu: tuple, nu: tuple) -> bool:
    """Is there a Littlewood-Richardson tableau of shape lam/mu and content nu?"""
    if sum(lam) != sum(mu) + sum(nu):
        return False
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return False
    mu = tuple(mu) + (0,) * (len(lam) - len(mu))
    cells = [(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])]
    if not nu:
        return not cells
    k = len(nu)
    for fill in product(range(1, k + 1), repeat=len(cells)):
        if any(fill.count(v) != nu[v - 1] for v in range(1, k + 1)):
            continue
        t = dict(zip(cells, fill))
        ok = True
        for (r, c), v in t.items():
            if (r, c + 1) in t and t[(r, c + 1)] < v:
                ok = False
                break
            if (r + 1, c) in t and t[(r + 1, c)] <= v:
                ok = False
                break
        if not ok:
            continue
        counts = [0] * (k + 1)
        for r in range(len(lam)):
            for c in range(lam[r] - 1, mu[r] - 1, -1):
                v = t[(r, c)]
                counts[v] += 1
                if v > 1 and counts[v] > counts[v - 1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def abelian_extensions(sub: FgAbGroup, quo: FgAbGroup) -> list[FgAbGroup]:
    """Every finite abelian ``X`` with a subgroup ``~ sub`` and quotient ``~ quo``."""
    if not (sub.is_finite and quo.is_finite):
        raise ValueError("extension enumeration needs finite groups")
    primes = sorted(set(factorize(sub.order)) | set(factorize(quo.order)))
    per_prime = []
    for p in primes:
        mu, nu = p_type(sub, p), p_type(quo, p)
        e = sum(mu) + sum(nu)
        per_prime.append([(p, lam) for lam in partitions(e) if lr_nonzero(lam, mu, nu)])
    out = []
    for choice in product(*per_prime):
        cyc = [p ** k for p, lam in choice for k in lam]
        out.append(FgAbGroup.from_cyclics(cyc).canonical_group())
    out.sort(key=lambda g: g.canonical)
    return out
