import random

import pytest
from hypothesis import given, strategies as st

from solvkit.words import GeneratorWord
from solvkit.wreath import (
    WreathElement,
    element_from_json,
    element_to_json,
    wr_base_relation,
    wr_eval,
    wr_inv,
    wr_is_identity,
    wr_mul,
    wr_pow,
)

lamp_maps = st.dictionaries(
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-9, max_value=9),
    max_size=4,
)
shifts = st.integers(min_value=-5, max_value=5)


def elements(modulus=None):
    return st.builds(
        lambda lamps, shift: WreathElement.from_support(lamps, shift, modulus),
        lamp_maps,
        shifts,
    )


class TestConstruction:
    def test_zero_values_dropped(self):
        g = WreathElement.from_support({0: 0, 1: 3}, 0)
        assert g.support == ((1, 3),)

    def test_modulus_reduction(self):
        g = WreathElement.from_support({0: 5, 1: -1, 2: 4}, 0, modulus=2)
        assert g.support == ((0, 1), (1, 1))

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            WreathElement.from_support({}, 0, modulus=1)

    def test_support_sorted(self):
        g = WreathElement.from_support({3: 1, -2: 1, 0: 4}, 1)
        assert g.positions == (-2, 0, 3)


class TestMultiplication:
    def test_identity_neutral(self):
        g = WreathElement.from_support({0: 1, 2: -3}, 4)
        e = WreathElement.identity()
        assert wr_mul(e, g) == g
        assert wr_mul(g, e) == g

    def test_lamp_addition(self):
        b = wr_eval("b")
        assert wr_mul(b, b).support == ((0, 2),)

    def test_mod_two_involution(self):
        b = wr_eval("b", modulus=2)
        assert wr_mul(b, b).is_identity

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            wr_mul(wr_eval("b"), wr_eval("b", modulus=2))


class TestEvaluation:
    def test_pure_shift(self):
        g = wr_eval("a^3")
        assert g.support == () and g.shift == 3

    def test_conjugate_lands_on_position(self):
        g = wr_eval("a^-2 b a^2")
        assert g.support == ((2, 1),) and g.shift == 0

    def test_conjugate_general(self):
        for i in range(-5, 6):
            word = GeneratorWord.from_letters([("a", -i), ("b", 1), ("a", i)])
            assert wr_eval(word).support == ((i, 1),)

    def test_mixed_word(self):
        g = wr_eval("b a b a^-1")
        assert g.support == ((-1, 1), (0, 1)) and g.shift == 0
        assert g == wr_mul(wr_eval("b"), wr_eval("a b a^-1"))

    def test_homomorphism_random(self):
        rng = random.Random(5)
        for _ in range(100):
            pairs1 = [(rng.choice("ab"), rng.randint(-3, 3)) for _ in range(5)]
            pairs2 = [(rng.choice("ab"), rng.randint(-3, 3)) for _ in range(5)]
            u = GeneratorWord.from_letters(pairs1)
            v = GeneratorWord.from_letters(pairs2)
            modulus = rng.choice([None, 2, 3, 5])
            assert wr_eval(u.concat(v), modulus) == wr_mul(
                wr_eval(u, modulus), wr_eval(v, modulus)
            )


class TestWordProblem:
    def test_identity(self):
        assert wr_is_identity(WreathElement.identity())
        assert wr_is_identity(wr_eval(""))

    def test_commutators_trivial(self):
        for i in range(-5, 6):
            word = GeneratorWord.from_letters(
                [
                    ("b", -1),
                    ("a", -i),
                    ("b", -1),
                    ("a", i),
                    ("b", 1),
                    ("a", -i),
                    ("b", 1),
                    ("a", i),
                ]
            )
            assert wr_is_identity(wr_eval(word))
            assert wr_is_identity(wr_eval(word, modulus=3))

    def test_mod_three_powers_of_b(self):
        assert wr_is_identity(wr_eval("b b b", modulus=3))
        assert not wr_is_identity(wr_eval("b b", modulus=3))


class TestBaseRelation:
    def test_zero_vector(self):
        assert wr_base_relation((0, 0, 0)).is_identity

    def test_nonzero_over_z(self):
        g = wr_base_relation((2, -1))
        assert g.support == ((0, 2), (1, -1))
        assert not g.is_identity

    def test_mod_two_collapse(self):
        assert wr_base_relation((2, 0), modulus=2).is_identity

    def test_freeness_over_z(self):
        rng = random.Random(9)
        for _ in range(200):
            cvec = [rng.randint(-9, 9) for _ in range(rng.randint(1, 8))]
            assert wr_base_relation(cvec).is_identity == all(x == 0 for x in cvec)


class TestTorsion:
    def test_infinite_order_over_z(self):
        rng = random.Random(13)
        for _ in range(60):
            lamps = {
                rng.randint(-3, 3): rng.randint(-5, 5) for _ in range(rng.randint(0, 3))
            }
            g = WreathElement.from_support(lamps, rng.randint(-3, 3))
            if g.is_identity:
                continue
            power = g
            for _ in range(20):
                assert not power.is_identity
                power = wr_mul(power, g)

    def test_exponent_law_mod_n(self):
        rng = random.Random(17)
        for _ in range(60):
            n = rng.randint(2, 7)
            lamps = {
                rng.randint(-3, 3): rng.randint(-9, 9) for _ in range(rng.randint(0, 4))
            }
            g = WreathElement.from_support(lamps, 0, modulus=n)
            assert wr_pow(g, n).is_identity


class TestConjugationShift:
    def test_support_shifts_by_k(self):
        rng = random.Random(19)
        for _ in range(60):
            lamps = {
                rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(rng.randint(0, 4))
            }
            g = WreathElement.from_support(lamps, 0)
            k = rng.randint(-5, 5)
            conjugated = wr_mul(
                wr_mul(wr_eval(GeneratorWord.from_letters([("a", -k)])), g),
                wr_eval(GeneratorWord.from_letters([("a", k)])),
            )
            assert conjugated.positions == tuple(p + k for p in g.positions)
            assert conjugated.support_dict() == {
                p + k: v for p, v in g.support_dict().items()
            }


@given(elements(), elements(), elements())
def test_associativity(x, y, z):
    assert wr_mul(wr_mul(x, y), z) == wr_mul(x, wr_mul(y, z))


@given(elements(modulus=4), elements(modulus=4), elements(modulus=4))
def test_associativity_mod(x, y, z):
    assert wr_mul(wr_mul(x, y), z) == wr_mul(x, wr_mul(y, z))


@given(elements())
def test_inverse_law(x):
    assert wr_mul(x, wr_inv(x)).is_identity
    assert wr_mul(wr_inv(x), x).is_identity


class TestElementJson:
    def test_roundtrip_plain(self):
        g = WreathElement.from_support({-1: 2, 3: -4}, 5)
        obj = element_to_json(g)
        assert obj == {
            "shift": "5",
            "support": {"-1": "2", "3": "-4"},
            "modulus": None,
        }
        assert element_from_json(obj) == g

    def test_roundtrip_modular(self):
        g = WreathElement.from_support({0: 7}, -2, modulus=3)
        obj = element_to_json(g)
        assert obj == {"shift": "-2", "support": {"0": "1"}, "modulus": 3}
        assert element_from_json(obj) == g
