import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pancakegroups.errors import DegreeError, FamilyError, ParseError
from pancakegroups.flip_gens import burnt_flip, pancake_flip
from pancakegroups.perm_core import (
    Permutation,
    SignedPermutation,
    compose,
    cycle_decomposition,
    element_order,
    from_cycles,
    identity,
    inverse,
    is_identity,
    parse_element,
    power,
)


@st.composite
def unsigned_triples(draw):
    n = draw(st.integers(1, 10))
    perms = st.permutations(range(1, n + 1)).map(Permutation)
    return draw(perms), draw(perms), draw(perms)


@st.composite
def signed_perms(draw, n):
    image = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(s * v for s, v in zip(signs, image)))


@st.composite
def signed_triples(draw):
    n = draw(st.integers(1, 10))
    return draw(signed_perms(n)), draw(signed_perms(n)), draw(signed_perms(n))


def order_by_iteration(p):
    """Smallest m with p^m = e, by repeated multiplication."""
    q, m = p, 1
    while not is_identity(q):
        q = compose(q, p)
        m += 1
    return m


def all_signed(n):
    for image in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, image)))


class TestIdentity:
    def test_unsigned(self):
        assert str(identity(3, "unsigned")) == "1 2 3"
        assert str(identity(1)) == "1"

    def test_signed(self):
        assert str(identity(2, "signed")) == "[1 2]"

    @pytest.mark.parametrize("n", [0, -1])
    def test_rejects_bad_degree(self, n):
        with pytest.raises(DegreeError):
            identity(n)


class TestCompose:
    def test_pointwise_example(self):
        p, q = Permutation((2, 1, 3, 4)), Permutation((3, 2, 1, 4))
        assert compose(p, q) == Permutation((3, 1, 2, 4))
        # pointwise definition
        assert all(compose(p, q)(x) == p(q(x)) for x in range(1, 5))

    def test_identity_law(self):
        p = Permutation((4, 1, 3, 2))
        assert compose(identity(4), p) == p
        assert compose(p, identity(4)) == p

    def test_signed_right_flip(self):
        assert compose(identity(3, "signed"), burnt_flip(1, 3)) == SignedPermutation((-2, -1, 3))

    def test_degree_mismatch(self):
        with pytest.raises(DegreeError):
            compose(identity(3), identity(4))

    def test_family_mismatch(self):
        with pytest.raises(FamilyError):
            compose(identity(3), identity(3, "signed"))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_right_flip_reverses_prefix(self, n):
        for image in itertools.islice(itertools.permutations(range(1, n + 1)), 200):
            w = Permutation(image)
            for i in range(1, n):
                expected = image[: i + 1][::-1] + image[i + 1:]
                assert compose(w, pancake_flip(i, n)).image == expected

    @pytest.mark.parametrize("n", range(1, 5))
    def test_right_burnt_flip_reverses_and_negates(self, n):
        for w in all_signed(n):
            for i in range(n):
                expected = tuple(-x for x in w.window[: i + 1][::-1]) + w.window[i + 1:]
                assert compose(w, burnt_flip(i, n)).window == expected


class TestInverse:
    def test_examples(self):
        assert inverse(identity(5)) == identity(5)
        assert inverse(Permutation((2, 3, 1))) == Permutation((3, 1, 2))
        assert inverse(burnt_flip(2, 3)) == burnt_flip(2, 3)

    def test_signed_pointwise(self):
        w = SignedPermutation((3, -1, -2))
        w_inv = inverse(w)
        for x in (1, -1, 2, -2, 3, -3):
            assert w_inv(w(x)) == x


class TestCycles:
    def test_identity_has_no_cycles(self):
        assert cycle_decomposition(identity(4)).cycles == ()
        assert str(cycle_decomposition(identity(4))) == "()"

    def test_three_cycle(self):
        assert cycle_decomposition(Permutation((2, 3, 1))).cycles == ((1, 2, 3),)

    def test_flip_product_uses_composition_convention(self):
        p = compose(pancake_flip(1, 3), pancake_flip(2, 3))
        assert p == Permutation((3, 1, 2))
        assert cycle_decomposition(p).cycles == ((1, 3, 2),)
        assert element_order(p) == 3

    def test_signed_four_cycle(self):
        p = compose(burnt_flip(0, 2), burnt_flip(1, 2))
        assert cycle_decomposition(p).cycles == ((1, -2, -1, 2),)
        assert element_order(p) == 4

    def test_include_fixed(self):
        dec = cycle_decomposition(Permutation((2, 1, 3)), include_fixed=True)
        assert dec.cycles == ((1, 2), (3,))

    def test_signed_point_set_covers_both_signs(self):
        w = SignedPermutation((3, -1, -2))
        dec = cycle_decomposition(w, include_fixed=True)
        assert sorted(dec.support()) == [-3, -2, -1, 1, 2, 3]

    @given(unsigned_triples())
    def test_reassembles(self, triple):
        p = triple[0]
        assert from_cycles(cycle_decomposition(p).cycles, p.n) == p

    @given(signed_triples())
    def test_reassembles_signed(self, triple):
        w = triple[0]
        assert from_cycles(cycle_decomposition(w).cycles, w.n, "signed") == w


class TestOrder:
    def test_examples(self):
        assert element_order(identity(6)) == 1
        assert element_order(pancake_flip(3, 5)) == 2
        assert element_order(compose(burnt_flip(1, 3), burnt_flip(2, 3))) == 6

    def test_matches_iteration_on_s4(self):
        for image in itertools.permutations(range(1, 5)):
            p = Permutation(image)
            assert element_order(p) == order_by_iteration(p)

    def test_matches_iteration_on_b3(self):
        for w in all_signed(3):
            assert element_order(w) == order_by_iteration(w)

    def test_power_reaches_identity(self):
        p = compose(pancake_flip(4, 7), pancake_flip(6, 7))
        assert is_identity(power(p, element_order(p)))
        assert power(p, -1) == inverse(p)


class TestGroupAxioms:
    @settings(max_examples=1000)
    @given(unsigned_triples())
    def test_unsigned(self, triple):
        p, q, r = triple
        e = identity(p.n)
        assert compose(compose(p, q), r) == compose(p, compose(q, r))
        assert compose(e, p) == p == compose(p, e)
        assert compose(p, inverse(p)) == e == compose(inverse(p), p)
        assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))

    @settings(max_examples=1000)
    @given(signed_triples())
    def test_signed(self, triple):
        p, q, r = triple
        e = identity(p.n, "signed")
        assert compose(compose(p, q), r) == compose(p, compose(q, r))
        assert compose(e, p) == p == compose(p, e)
        assert compose(p, inverse(p)) == e == compose(inverse(p), p)
        assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


class TestTextForms:
    @pytest.mark.parametrize("text", ["2 1 3 4", "1", "[-2 -1 3]", "[1]", "[-1 2]"])
    def test_round_trip(self, text):
        assert str(parse_element(text)) == text

    @pytest.mark.parametrize(
        "text", ["", "1 1 2", "2  1", "[1 2", "[0 1]", "[1 -1]", "a b", "[]", "1 3"]
    )
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_element(text)

    def test_invalid_construction(self):
        with pytest.raises(ValueError):
            Permutation((1, 1))
        with pytest.raises(ValueError):
            SignedPermutation((1, -1))
