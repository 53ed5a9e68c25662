import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baerlab.abelian import FgAbGroup
from baerlab.errors import (LimitExceeded, NotAHomomorphism, NotNormal, ParseError,
                            SubgroupNotPreserved)
from baerlab.groups import (AbelianSubquotient, FiniteGroup, Presentation, TripleInstance, VarietySpec,
                            abelian_structure, closure, commutator_subgroup, compose, direct_product, hall_basis,
                            identity_morphism, intersection, is_homomorphism, iterated_commutator,
                            lue_product, normal_subgroups, parse_word, product, quotient_group,
                            sharp_q, todd_coxeter, triple_hom_apply, verbal_subgroup, witt_count)
from baerlab.groups.catalog import (KNOWN_ABELIANIZATION, PRESENTATIONS, catalog_groups,
                                    catalog_triples, group)
from support import cyclic_product

CATALOG = catalog_groups(12)
NAMES = [n for n, _ in CATALOG]

# orders read off the names (Z_n, D_n of order 2n, Dic3 = 12, Q8, S3, A4)
EXPECTED_ORDER = {"1": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Z2xZ2": 4, "Z5": 5, "Z6": 6, "S3": 6, "Z7": 7,
                  "Z8": 8, "Z2xZ4": 8, "Z2xZ2xZ2": 8, "D4": 8, "Q8": 8, "Z9": 9, "Z3xZ3": 9,
                  "Z10": 10, "D5": 10, "Z11": 11, "Z12": 12, "Z2xZ6": 12, "D6": 12, "A4": 12,
                  "Dic3": 12}


def test_catalog_covers_all_small_orders():
    # 24 isomorphism types of order <= 12 (counting the trivial group)
    assert len(CATALOG) == 24
    assert set(NAMES) == set(PRESENTATIONS)


@pytest.mark.parametrize("name", NAMES)
def test_todd_coxeter_orders(name):
    assert group(name).order == EXPECTED_ORDER[name]


@pytest.mark.parametrize("name", NAMES)
def test_abelianization_table(name):
    g = group(name)
    gw = g.whole()
    ab = AbelianSubquotient(gw, commutator_subgroup(gw, gw)).group
    assert ab.canonical == FgAbGroup.from_cyclics(KNOWN_ABELIANIZATION[name]).canonical


@pytest.mark.parametrize("name,count", [("Z2xZ2", 5), ("Z4", 3), ("D4", 6), ("S3", 3), ("Q8", 6),
                                        ("A4", 3), ("Z2xZ2xZ2", 16), ("D5", 3), ("Z6", 4)])
def test_normal_subgroup_counts(name, count):
    assert len(normal_subgroups(group(name))) == count


def test_catalog_triples_count():
    assert len(catalog_triples()) == 25 + 9 + 36 + 9 + 36


def test_coset_enumeration_index():
    pres = Presentation.parse(("a", "b"), ("a^2", "b^3", "(a b)^2"))
    assert len(todd_coxeter(pres)) == 6
    assert len(todd_coxeter(pres, [parse_word("b", ("a", "b"))])) == 2
    assert len(todd_coxeter(pres, [parse_word("a", ("a", "b"))])) == 3


def test_coset_enumeration_limit():
    with pytest.raises(LimitExceeded):
        todd_coxeter(Presentation.parse(("a", "b"), ("[a,b]",)), max_cosets=200)


def test_parse_word_forms():
    gens = ("a", "b")
    assert parse_word("1", gens) == ()
    assert parse_word("a^2 b^-1", gens) == ((0, 2), (1, -1))
    w = parse_word("[a,b]", gens)
    assert w == ((0, -1), (1, -1), (0, 1), (1, 1))
    assert parse_word("(a b)^2", gens) == ((0, 1), (1, 1), (0, 1), (1, 1))
    for bad in ("c", "a^", "(a b", "[a b]"):
        with pytest.raises(ParseError):
            parse_word(bad, gens)


def test_table_validation():
    with pytest.raises(ValueError):
        FiniteGroup(["e", "a"], [[0, 1], [1, 1]])
    # a Latin square with identity that is not associative (order 5 loop)
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(ValueError):
        FiniteGroup(list("eabcd"), loop)


group_names = st.sampled_from([n for n in NAMES if EXPECTED_ORDER[n] <= 8])


@given(group_names, st.lists(st.integers(0, 11), max_size=3))
def test_closure_is_a_subgroup(name, picks):
    g = group(name)
    h = closure(g, [p % g.order for p in picks])
    s = set(h.elements)
    assert g.identity in s
    assert all(g.mul(a, b) in s for a in s for b in s)
    assert g.order % h.order == 0


@given(group_names, st.data())
def test_quotient_and_products(name, data):
    g = group(name)
    normals = normal_subgroups(g)
    m = data.draw(st.sampled_from(normals))
    n = data.draw(st.sampled_from(normals))
    q = quotient_group(g, n)
    assert q.group.order * n.order == g.order
    assert is_homomorphism(g, q.group, q.projection)
    mn, mcapn = product(m, n), intersection(m, n)
    assert mn.order * mcapn.order == m.order * n.order
    assert commutator_subgroup(m, n).is_normal()
    assert set(commutator_subgroup(m, n).elements) <= set(mcapn.elements)


@settings(max_examples=25)
@given(group_names, st.data())
def test_lue_product_identities(name, data):
    g = group(name)
    n = data.draw(st.sampled_from(normal_subgroups(g)))
    ng = commutator_subgroup(n, g.whole())
    assert lue_product(g, n, VarietySpec.abelian()).elements == ng.elements
    for q in (2, 3):
        powers = closure(g, {g.power(x, q) for x in n.elements})
        assert lue_product(g, n, VarietySpec.abelian_exp(q)).elements == product(ng, powers).elements
    for c in (2, 3):
        assert lue_product(g, n, VarietySpec.nilpotent(c)).elements == iterated_commutator(n, g, c).elements
    # [G V* G] is the verbal subgroup
    v = VarietySpec.abelian_exp(2)
    assert lue_product(g, g.whole(), v).elements == verbal_subgroup(g, v).elements


def test_lue_needs_normal():
    g = group("S3")
    sub = closure(g, [g.element("a")])
    with pytest.raises(NotNormal):
        lue_product(g, sub, VarietySpec.abelian())


def test_sharp_q_cyclic_four():
    g = group("Z4")
    whole = g.whole()
    s = sharp_q(g, whole, whole, 2)
    assert s.order == 2
    assert sharp_q(g, whole, whole, 3).order == 4


def test_variety_parsing():
    assert VarietySpec.parse("abelian") == VarietySpec.abelian()
    assert VarietySpec.parse("burnside-q:2") == VarietySpec.abelian_exp(2)
    assert VarietySpec.parse("burnside:3") == VarietySpec.abelian_exp(3)
    assert VarietySpec.parse("nilpotent:2") == VarietySpec.nilpotent(2)
    assert VarietySpec.parse("nilpotent-c:1").is_abelian_variety
    for bad in ("burnside:1", "nilpotent:0", "free", "burnside-q"):
        with pytest.raises(ParseError):
            VarietySpec.parse(bad)


@pytest.mark.parametrize("n,w,expected", [(2, 2, 1), (2, 3, 2), (2, 4, 3), (2, 5, 6), (3, 2, 3),
                                          (3, 3, 8), (1, 2, 0), (1, 1, 1), (4, 2, 6)])
def test_witt_count_against_hall_basis(n, w, expected):
    assert witt_count(n, w) == expected
    basis = hall_basis(n, w)
    assert sum(1 for c in basis if _weight(c) == w) == expected


def _weight(c):
    return 1 if isinstance(c, int) else _weight(c[0]) + _weight(c[1])


def test_triple_validation():
    g = group("S3")
    sub = closure(g, [g.element("a")])
    with pytest.raises(NotNormal):
        TripleInstance(g, sub, g.whole())
    with pytest.raises(ValueError):
        TripleInstance(g, group("Z2").whole(), g.whole())


def _from_z2(z2, images):
    """Element map out of Z2 given the image of the identity and of the generator."""
    return tuple(images[0] if x == z2.identity else images[1] for x in range(z2.order))


def test_triple_morphisms():
    z2, z4 = group("Z2"), group("Z4")
    t2 = TripleInstance(z2, z2.whole(), z2.whole())
    t4 = TripleInstance(z4, z4.whole(), z4.whole())
    a = z4.element("a")
    a2 = z4.power(a, 2)
    f = triple_hom_apply(_from_z2(z2, (z4.identity, a2)), t2, t4)
    assert compose(identity_morphism(t2), f).fmap == f.fmap
    with pytest.raises(NotAHomomorphism):
        triple_hom_apply(_from_z2(z2, (z4.identity, a)), t2, t4)
    small = TripleInstance(z4, closure(z4, [a2]), closure(z4, [a2]))
    with pytest.raises(SubgroupNotPreserved):
        triple_hom_apply(tuple(range(4)), t4, small)


def test_direct_product_matches_table_construction():
    a = direct_product(group("Z2"), group("Z4"))
    b = cyclic_product(2, 4)
    assert a.order == b.order == 8
    assert abelian_structure(a).group.canonical == abelian_structure(b).group.canonical == (0, (2, 4))
