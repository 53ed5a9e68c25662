from itertools import combinations, product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baerlab.abelian import AbHom, FgAbGroup, IntMatrix, is_isomorphic
from baerlab.errors import Inconsistent, InexactRow, NotIsomorphism
from baerlab.exactseq import (ExactSeqInstance, Unknown, abelian_extensions, check_slot, five_lemma,
                              inverse_iso, lr_nonzero, solve_unknowns, verify_exactness)
from baerlab.exactseq.extensions import factorize, partitions

Z = FgAbGroup.free
C = FgAbGroup.cyclic
O = FgAbGroup.trivial


def hom(src, dst, rows):
    return AbHom(src, dst, IntMatrix.from_rows(rows, ncols=src.ngens))


def short(a, f, b, g, c):
    return ExactSeqInstance([O(), a, b, c, O()], [None, f, g, None])


# -- verification ---------------------------------------------------------------

def test_short_exact_sequence_verified():
    # 0 -> Z -2-> Z -> Z_2 -> 0
    s = short(Z(1), hom(Z(1), Z(1), [[2]]), Z(1), hom(Z(1), C(2), [[1]]), C(2))
    rep = verify_exactness(s)
    assert rep.exact and len(rep.slots) == 3


def test_zero_map_is_inexact_with_witness():
    s = short(Z(1), hom(Z(1), Z(1), [[0]]), Z(1), hom(Z(1), C(2), [[1]]), C(2))
    rep = verify_exactness(s)
    bad = rep.inexact
    assert [r.slot for r in bad] == [1, 2]
    # the witness lies in the kernel of the outgoing map but not in the image
    assert bad[0].witness == (1,)
    assert bad[1].witness is not None and bad[1].witness[0] % 2 == 0


def test_composite_nonzero_reported():
    z4 = C(4)
    ok, wit = check_slot(hom(z4, z4, [[1]]), hom(z4, z4, [[1]]))
    assert not ok and wit == (1,)


def test_unknown_term_is_undetermined():
    s = ExactSeqInstance([O(), C(2), Unknown("X"), C(3), O()], [None, None, None, None])
    rep = verify_exactness(s)
    assert not rep.exact
    assert {r.status for r in rep.slots} == {"undetermined"}


# -- solving for unknowns ---------------------------------------------------------

def test_coprime_extension_forced():
    s = ExactSeqInstance([O(), C(2), Unknown("X"), C(3), O()], [None] * 4)
    con = solve_unknowns(s)["X"]
    assert con.forced.canonical == (0, (6,))
    assert con.order_lower == con.order_upper == 6


def test_non_coprime_extension_lists_candidates():
    s = ExactSeqInstance([O(), C(2), Unknown("X"), C(2), O()], [None] * 4)
    con = solve_unknowns(s)["X"]
    assert con.forced is None
    assert sorted(c.canonical for c in con.candidates) == [(0, (2, 2)), (0, (4,))]
    assert con.admits(C(4)) and not con.admits(C(8)) and not con.admits(Z(1))


def test_kernel_term_from_known_map():
    # 0 -> X -> Z_4 -2-> Z_4: X is the kernel of doubling
    z4 = C(4)
    s = ExactSeqInstance([O(), Unknown("X"), z4, z4], [None, None, hom(z4, z4, [[2]])])
    con = solve_unknowns(s)["X"]
    assert con.forced.canonical == (0, (2,))


def test_rank_forced_by_window():
    # 0 -> Z^2 -> X -> Z -> Z_3 -> 0: alternating ranks 2 - x + 1 - 0 = 0
    s = ExactSeqInstance([O(), Z(2), Unknown("X"), Z(1), C(3), O()], [None, None, None, None, None])
    con = solve_unknowns(s)["X"]
    assert con.rank == 3
    assert con.order_upper is None


def test_free_quotient_splits():
    s = ExactSeqInstance([O(), C(5), Unknown("X"), Z(1), O()], [None] * 4)
    assert solve_unknowns(s)["X"].forced.canonical == (1, (5,))


def test_inconsistent_orders():
    # 0 -> Z_2 -> X -> Z_3 -> Z_2 -> 0 forces |X| = 3, yet Z_2 embeds in X
    s = ExactSeqInstance([O(), C(2), Unknown("X"), C(3), C(2), O()], [None] * 5)
    with pytest.raises(Inconsistent):
        solve_unknowns(s)


def test_no_unknowns_rejected():
    with pytest.raises(ValueError):
        solve_unknowns(ExactSeqInstance([O(), C(2), O()], [None, None]))


def test_substitute_keeps_labels():
    s = ExactSeqInstance([O(), C(2), Unknown("X"), C(3), O()], [None] * 4)
    t = s.substitute("X", C(6))
    assert t.labels == s.labels and t.known(2)


# -- five lemma -------------------------------------------------------------------

def _row():
    # 0 -> Z_2 -> Z_4 -> Z_2 -> 0
    z2, z4 = C(2), C(4)
    return ExactSeqInstance([O(), z2, z4, z2, O()], [None, hom(z2, z4, [[2]]), hom(z4, z2, [[1]]), None])


def test_five_lemma_certifies_middle():
    top, bot = _row(), _row()
    g = top.terms
    # multiplication by 3 on Z_4 lifts the identity on both ends
    verts = [AbHom.identity(g[0]), AbHom.identity(g[1]), hom(g[2], g[2], [[3]]),
             AbHom.identity(g[3]), AbHom.identity(g[4])]
    verdict = five_lemma(top, bot, verts)
    assert (verdict.inverse @ verdict.middle).equals(AbHom.identity(g[2]))


def test_five_lemma_rejects_non_iso_outer():
    top, bot = _row(), _row()
    g = top.terms
    verts = [AbHom.identity(g[0]), AbHom.zero(g[1], g[1]), AbHom.identity(g[2]),
             AbHom.identity(g[3]), AbHom.identity(g[4])]
    with pytest.raises(NotIsomorphism):
        five_lemma(top, bot, verts)


def test_five_lemma_rejects_inexact_row():
    z2, z4 = C(2), C(4)
    bad = ExactSeqInstance([O(), z2, z4, z2, O()], [None, hom(z2, z4, [[0]]), hom(z4, z2, [[1]]), None])
    g = bad.terms
    verts = [AbHom.identity(t) for t in g]
    with pytest.raises(InexactRow):
        five_lemma(bad, _row(), verts)


def test_five_lemma_noncommuting_square():
    top, bot = _row(), _row()
    g = top.terms
    verts = [AbHom.identity(g[0]), AbHom.identity(g[1]), hom(g[2], g[2], [[2]]),
             AbHom.identity(g[3]), AbHom.identity(g[4])]
    with pytest.raises(Inconsistent):
        five_lemma(top, bot, verts)


def test_inverse_iso_rejects_non_iso():
    with pytest.raises(NotIsomorphism):
        inverse_iso(hom(C(4), C(4), [[2]]))


# -- extensions -------------------------------------------------------------------

def _groups_of_order(n):
    """All abelian groups of order n via partitions of each prime exponent."""
    per = [[[p ** k for k in lam] for lam in partitions(e)] for p, e in factorize(n).items()]
    return [FgAbGroup.from_cyclics([d for part in choice for d in part]).canonical_group()
            for choice in product(*per)] if per else [O()]


def _brute_has_sub_quotient(x, a, b):
    """Search subgroups of x (generated by at most two elements) of type a with quotient of type b."""
    orders = list(x.invariant_factors)
    elems = list(product(*[range(d) for d in orders]))
    for k in (0, 1, 2):
        for gens in combinations(elems, k):
            rel = IntMatrix.from_columns([list(d if i == j else 0 for i in range(len(orders)))
                                          for j, d in enumerate(orders)] + [list(g) for g in gens],
                                         len(orders))
            quo = FgAbGroup(rel)
            if x.order // max(quo.order, 1) != a.order or not is_isomorphic(quo, b):
                continue
            sub_elems = _span(gens, orders)
            if _type_of(sub_elems, orders) == a.canonical:
                return True
    return False


def _span(gens, orders):
    out = {tuple(0 for _ in orders)}
    frontier = list(out)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                s = tuple((u + v) % d for u, v, d in zip(e, g, orders))
                if s not in out:
                    out.add(s)
                    nxt.append(s)
        frontier = nxt
    return out


def _type_of(elems, orders):
    """Canonical type of a finite abelian group from its element-order counts."""
    counts = sorted(_order_in(e, orders) for e in elems)
    for cand in _groups_of_order(len(elems)):
        cel = product(*[range(d) for d in cand.invariant_factors])
        if sorted(_order_in(e, cand.invariant_factors) for e in cel) == counts:
            return cand.canonical
    return None


def _order_in(e, orders):
    n = 1
    for u, d in zip(e, orders):
        k = d // gcd(u, d)
        n = n * k // gcd(n, k)
    return n


@pytest.mark.parametrize("a,b", [((2,), (2,)), ((2,), (4,)), ((4,), (2,)), ((2, 2), (2,)),
                                 ((3,), (3,)), ((2,), (6,)), ((2,), (2, 2)), ((4,), (4,))])
def test_extensions_match_brute_force(a, b):
    ga, gb = FgAbGroup.from_cyclics(a), FgAbGroup.from_cyclics(b)
    got = {g.canonical for g in abelian_extensions(ga, gb)}
    brute = {x.canonical for x in _groups_of_order(ga.order * gb.order) if _brute_has_sub_quotient(x, ga, gb)}
    assert got == brute


def test_lr_coefficients_small():
    assert lr_nonzero((2, 1), (1,), (1, 1))
    assert lr_nonzero((2, 1), (1,), (2,))
    assert not lr_nonzero((3,), (1,), (1, 1))
    assert not lr_nonzero((1, 1), (2,), ())


sizes = st.lists(st.sampled_from([2, 3, 4, 6, 8, 9]), min_size=1, max_size=2)


@settings(max_examples=30)
@given(sizes, sizes)
def test_extensions_symmetric_under_reversal(a, b):
    # Pontryagin duality reverses short exact sequences of finite abelian groups
    ga, gb = FgAbGroup.from_cyclics(a), FgAbGroup.from_cyclics(b)
    assert [g.canonical for g in abelian_extensions(ga, gb)] == [g.canonical for g in abelian_extensions(gb, ga)]


@settings(max_examples=30)
@given(sizes, sizes)
def test_extensions_contain_split_and_are_constrained(a, b):
    ga, gb = FgAbGroup.from_cyclics(a), FgAbGroup.from_cyclics(b)
    exts = abelian_extensions(ga, gb)
    split = FgAbGroup.from_cyclics(list(a) + list(b)).canonical
    assert split in [g.canonical for g in exts]
    s = ExactSeqInstance([O(), ga, Unknown("X"), gb, O()], [None] * 4)
    con = solve_unknowns(s)["X"]
    for g in exts:
        assert con.admits(g)
