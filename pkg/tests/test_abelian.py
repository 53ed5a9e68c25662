from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from baerlab.abelian import (AbHom, DirectedSystemAb, FgAbGroup, IntMatrix, colimit, direct_sum,
                             elementary_divisors, exterior_square, hom_parts, is_isomorphic,
                             kernel_basis, matrix_rank, smith, smith_normal_form, solve, tensor, tor)
from baerlab.errors import IllDefinedHom, NonDirected
from support import coker_oracle, determinantal_invariants

entries = st.integers(min_value=-9, max_value=9)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return IntMatrix.from_rows(rows, ncols=c)


@st.composite
def finite_groups(draw, max_factors=3):
    orders = draw(st.lists(st.integers(1, 12), min_size=0, max_size=max_factors))
    return FgAbGroup.from_cyclics(orders)



# -- Smith normal form --------------------------------------------------------

def test_smith_small_example():
    m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    s, u, v = smith_normal_form(m)
    assert u @ m @ v == s
    assert s.diagonal_entries() == [2, 6, 12]


def test_smith_zero_and_empty():
    z = IntMatrix.zeros(3, 2)
    d = smith(z)
    assert d.diag == ()
    assert d.u @ z @ d.v == d.s
    assert elementary_divisors(IntMatrix.zeros(0, 4)) == []


@given(matrices())
def test_smith_decomposition_identity(m):
    d = smith(m)
    assert d.u @ m @ d.v == d.s
    assert d.u @ d.u_inv == IntMatrix.identity(m.nrows)
    assert d.v @ d.v_inv == IntMatrix.identity(m.ncols)


@given(matrices())
def test_smith_divisibility_chain(m):
    diag = smith(m).diag
    assert all(x > 0 for x in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


@given(matrices())
def test_elementary_divisors_match_minor_oracle(m):
    assert elementary_divisors(m) == determinantal_invariants(m)
    assert list(smith(m).diag) == determinantal_invariants(m)


@given(matrices())
def test_rank_and_kernel(m):
    k = kernel_basis(m)
    assert k.ncols == m.ncols - matrix_rank(m)
    assert (m @ k).is_zero()


@given(matrices(), st.lists(entries, min_size=5, max_size=5))
def test_solve_round_trip(m, x):
    x = x[: m.ncols]
    y = m.apply(x)
    sol = solve(m, y)
    assert sol is not None and m.apply(sol) == y


# -- finitely generated abelian groups --------------------------------------------

def test_cokernel_examples():
    g = FgAbGroup(IntMatrix.from_rows([[2, 0], [0, 3]]))
    assert g.canonical == (0, (6,))
    assert FgAbGroup.from_cyclics([4, 6]).canonical == (0, (2, 12))
    assert FgAbGroup.from_invariants([2], 3).canonical == (3, (2,))
    assert FgAbGroup.trivial().is_trivial


@given(matrices())
def test_cokernel_matches_oracle(m):
    g = FgAbGroup(m)
    assert (g.rank, g.invariant_factors) == coker_oracle(m)


@given(finite_groups())
def test_finite_group_order_and_elements(g):
    assert g.is_finite
    g = g.canonical_group()  # elements are listed in canonical coordinates
    assert len(g.elements()) == g.order
    for x in g.elements():
        assert g.element_order(x) and g.order % g.element_order(x) == 0


@given(finite_groups())
def test_canonical_iso_round_trip(g):
    to, back = g.canonical_iso()
    assert (back @ to).equals(AbHom.identity(g))
    assert (to @ back).equals(AbHom.identity(g.canonical_group()))


@given(finite_groups(), finite_groups())
def test_tensor_and_tor_by_counting(a, b):
    # |A (x) B| and |Tor(A, B)| equal prod gcd over cyclic factors
    oa, ob = a.invariant_factors, b.invariant_factors
    n = 1
    for x in oa:
        for y in ob:
            n *= gcd(x, y)
    assert tensor(a, b).order == n
    assert tor(a, b).order == n
    assert is_isomorphic(tensor(a, b), tensor(b, a))


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 7) for n in range(1, 7)])
def test_exterior_square_of_two_cyclics(m, n):
    assert exterior_square(FgAbGroup.from_cyclics([m, n])).canonical == (0, (gcd(m, n),) if gcd(m, n) > 1 else ())


def test_exterior_square_free():
    assert exterior_square(FgAbGroup.free(3)).canonical == (3, ())
    assert exterior_square(FgAbGroup.free(1)).is_trivial


# -- homomorphisms ------------------------------------------------------------------

def test_ill_defined_hom_rejected():
    z2, z3 = FgAbGroup.cyclic(2), FgAbGroup.cyclic(3)
    with pytest.raises(IllDefinedHom):
        AbHom(z2, z3, IntMatrix.from_rows([[1]]))
    assert AbHom(z2, FgAbGroup.cyclic(4), IntMatrix.from_rows([[2]])).is_injective()


@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 11))
def test_cyclic_hom_parts_by_counting(m, n, k):
    # Z_m -> Z_n, 1 -> a where n | m a
    a = (k * (n // gcd(m, n))) % n
    f = AbHom(FgAbGroup.cyclic(m), FgAbGroup.cyclic(n), IntMatrix.from_rows([[a]]))
    img = {(x * a) % n for x in range(m)}
    parts = hom_parts(f)
    assert parts.image.order == len(img)
    assert parts.kernel.order == m // len(img)
    assert parts.cokernel.order == n // len(img)


@given(finite_groups(2), finite_groups(2))
def test_direct_sum_order(a, b):
    assert direct_sum(a, b).order == a.order * b.order


def test_directed_colimit_chain_and_non_directed():
    z2, z4 = FgAbGroup.cyclic(2), FgAbGroup.cyclic(4)
    f = AbHom(z2, z4, IntMatrix.from_rows([[2]]))
    sys_ = DirectedSystemAb((0, 1), frozenset({(0, 1)}), {0: z2, 1: z4}, {(0, 1): f})
    assert sys_.top() == 1
    assert colimit(sys_).canonical == (0, (4,))
    with pytest.raises(NonDirected):
        DirectedSystemAb((0, 1), frozenset(), {0: z2, 1: z4}, {})


def test_colimit_of_zero_maps_kills_source():
    z3 = FgAbGroup.cyclic(3)
    zero = AbHom.zero(z3, z3)
    sys_ = DirectedSystemAb(("a", "b"), frozenset({("a", "b")}), {"a": z3, "b": z3}, {("a", "b"): zero})
    assert colimit(sys_).canonical == (0, (3,))


def test_tsv_and_json_forms():
    g = FgAbGroup.from_invariants([2, 4], 1)
    assert g.to_json() == {"rank": 1, "factors": [2, 4]}
    assert g.tsv() == "1:2,4"
