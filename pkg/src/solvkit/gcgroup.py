"""Arithmetic and decision procedures for coefficient-vector groups.

A signature ``c = (c_0, ..., c_s)`` with ``c_0, c_s != 0`` and
``gcd(c) = 1`` determines a two-generator group: the stable letter ``a``
conjugates the base generator ``b`` through the family ``b_i = b^(a^i)``,
the ``b_i`` commute, and the single relation
``b_0^{c_0} b_1^{c_1} ... b_s^{c_s} = 1`` ties the family together.  The
group embeds faithfully in ``Q^s x| Z``: ``b`` becomes the first basis
vector of ``Q^s``, and ``a`` acts as the companion-shaped matrix returned
by :func:`companion_action`.  All computations below happen in that
faithful model with exact rationals, which is what makes the word problem
and the other decision procedures here decidable by plain linear algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import (
    DimensionError,
    Matrix,
    Scalar,
    exact_scalar,
    mat_pow,
    row_times_matrix,
    snf,
    solve_integer_system,
)
from .words import GeneratorWord, parse_word

DEFAULT_MEMBERSHIP_BOUND = 10
DEFAULT_INDEX_WINDOW_CAP = 20


@dataclass(frozen=True)
class GcSignature:
    """Validated coefficient vector; ``s`` is the top conjugation depth."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if any(isinstance(x, bool) or not isinstance(x, int) for x in coeffs):
            raise TypeError("signature coefficients must be integers")
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 2:
            raise ValueError("signature needs at least two coefficients (s >= 1)")
        if coeffs[0] == 0 or coeffs[-1] == 0:
            raise ValueError("first and last coefficients must be nonzero")
        if math.gcd(*coeffs) != 1:
            raise ValueError("coefficients must have gcd 1")

    @property
    def s(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.coeffs)


def parse_signature(text: str) -> GcSignature:
    """Parse the comma-separated form, e.g. ``"2,-1"``."""
    try:
        coeffs = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"signature must be comma-separated integers: {text!r}") from exc
    return GcSignature(coeffs)


@dataclass(frozen=True)
class GcElement:
    """Group element in the faithful model: rational row vector plus shift.

    ``(v, k)`` stands for "k steps of the stable letter, then translate by
    v"; the product rule is ``(v1, k1) (v2, k2) = (v1 A^k2 + v2, k1 + k2)``
    with ``A`` the companion action.  Chosen so that evaluating
    ``a^-i b a^i`` yields ``(e_1 A^i, 0)``.
    """

    translation: tuple[Scalar, ...]
    shift: int

    def __post_init__(self):
        cleaned = tuple(exact_scalar(x) for x in self.translation)
        object.__setattr__(self, "translation", cleaned)
        if isinstance(self.shift, bool) or not isinstance(self.shift, int):
            raise TypeError("shift must be an integer")

    @property
    def is_identity(self) -> bool:
        return self.shift == 0 and all(x == 0 for x in self.translation)


def band_matrix(c: GcSignature, m: int) -> Matrix:
    """The m x (m+s) banded matrix whose row k holds the coefficients of
    the relation ``sum_i c_i b_{k+i}``: entry (i, j) is ``c_{j-i}`` when
    ``0 <= j-i <= s`` and zero otherwise."""
    if m < 1:
        raise ValueError("band matrix needs at least one row")
    s = c.s
    return Matrix(
        [
            [c.coeffs[j - i] if 0 <= j - i <= s else 0 for j in range(m + s)]
            for i in range(m)
        ]
    )


@lru_cache(maxsize=None)
def companion_action(c: GcSignature) -> Matrix:
    """The s x s rational matrix giving the stable letter's action on Q^s.

    Acting on row vectors (``v -> v * A``): basis vector ``e_i`` maps to
    ``e_{i+1}`` for ``i < s``, and ``e_s`` maps to
    ``(-c_0/c_s, ..., -c_{s-1}/c_s)``.  Its characteristic polynomial is
    ``(c_0 + c_1 x + ... + c_s x^s) / c_s`` up to sign.
    """
    s = c.s
    rows = [[int(j == i + 1) for j in range(s)] for i in range(s - 1)]
    rows.append([Fraction(-c.coeffs[j], c.coeffs[s]) for j in range(s)])
    return Matrix(rows)


@lru_cache(maxsize=None)
def action_power(c: GcSignature, k: int) -> Matrix:
    """Exact ``A^k`` for the companion action (any integer k)."""
    return mat_pow(companion_action(c), k)


def basis_orbit_vector(c: GcSignature, i: int) -> tuple[Scalar, ...]:
    """``e_1 * A^i``, the model image of the conjugate generator ``b_i``."""
    e1 = (1,) + (0,) * (c.s - 1)
    if i == 0:
        return e1
    return row_times_matrix(e1, action_power(c, i))


def gc_identity(c: GcSignature) -> GcElement:
    return GcElement((0,) * c.s, 0)


def _require_same_signature(c: GcSignature, element: GcElement):
    if len(element.translation) != c.s:
        raise ValueError(
            f"element has translation length {len(element.translation)}, "
            f"signature expects {c.s}"
        )


def gc_mul(c: GcSignature, g: GcElement, h: GcElement) -> GcElement:
    """Product in ``Q^s x| Z``: ``(v1, k1)(v2, k2) = (v1 A^k2 + v2, k1+k2)``."""
    _require_same_signature(c, g)
    _require_same_signature(c, h)
    moved = row_times_matrix(g.translation, action_power(c, h.shift))
    return GcElement(
        tuple(x + y for x, y in zip(moved, h.translation)), g.shift + h.shift
    )


def gc_inv(c: GcSignature, g: GcElement) -> GcElement:
    """Inverse: ``(v, k)^-1 = (-v A^-k, -k)``."""
    _require_same_signature(c, g)
    moved = row_times_matrix(g.translation, action_power(c, -g.shift))
    return GcElement(tuple(-x for x in moved), -g.shift)


def gc_pow(c: GcSignature, g: GcElement, n: int) -> GcElement:
    if n < 0:
        return gc_pow(c, gc_inv(c, g), -n)
    result = gc_identity(c)
    for _ in range(n):
        result = gc_mul(c, result, g)
    return result


def _letter_power(c: GcSignature, gen: str, exp: int) -> GcElement:
    if gen == "a":
        return GcElement((0,) * c.s, exp)
    e1_scaled = (exp,) + (0,) * (c.s - 1)
    return GcElement(e1_scaled, 0)


def gc_eval(c: GcSignature, word: GeneratorWord | str) -> GcElement:
    """Evaluate a word in ``a`` and ``b`` to its model element.

    ``a`` maps to the pure shift ``(0, 1)`` and ``b`` to ``(e_1, 0)``; the
    empty word is the identity.
    """
    if isinstance(word, str):
        word = parse_word(word)
    result = gc_identity(c)
    for gen, exp in word.letters:
        result = gc_mul(c, result, _letter_power(c, gen, exp))
    return result


def gc_is_identity(c: GcSignature, word: GeneratorWord | str) -> bool:
    """Word problem: does the word represent the identity element?

    Decidable because the model representation is faithful, so a word is
    trivial exactly when its translation vector and shift both vanish.
    """
    return gc_eval(c, word).is_identity


def relator_check(c: GcSignature) -> bool:
    """Verify the defining relations hold in the model.

    Checks the coefficient relation ``sum_i c_i (e_1 A^i) = 0`` and that
    the conjugate generators ``b_i`` commute (their model images are pure
    translations).  Returns True for every valid signature; False would
    mean the model construction itself is broken.
    """
    s = c.s
    accumulated = [Fraction(0)] * s
    for i, coeff in enumerate(c.coeffs):
        vec = basis_orbit_vector(c, i)
        accumulated = [acc + coeff * x for acc, x in zip(accumulated, vec)]
    if any(x != 0 for x in accumulated):
        return False
    b0 = GcElement(basis_orbit_vector(c, 0), 0)
    for i in range(-2, s + 2):
        bi = GcElement(basis_orbit_vector(c, i), 0)
        if gc_mul(c, b0, bi) != gc_mul(c, bi, b0):
            return False
    return True


def _totient(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def _finite_order_exponent(s: int) -> int:
    # A rational s x s matrix of finite order has minimal polynomial a
    # product of distinct cyclotomics of degree <= s, so its order divides
    # lcm{d : phi(d) <= s}.  phi(d) >= sqrt(d/2) bounds the search range.
    bound = 2 * s * s + 2
    k = 1
    for d in range(1, bound + 1):
        if _totient(d) <= s:
            k = math.lcm(k, d)
    return k


def gc_is_proper(c: GcSignature) -> bool:
    """True when the group is not virtually abelian.

    The group is virtually abelian exactly when the companion action has
    finite multiplicative order, and finite order is equivalent to the
    single exact test ``A^K = I`` with ``K = lcm{d : phi(d) <= s}``.
    """
    s = c.s
    k = _finite_order_exponent(s)
    return action_power(c, k) != Matrix.identity(s)


def gc_abelianization(c: GcSignature) -> tuple[int, tuple[int, ...]]:
    """Abelianized invariants ``(free_rank, torsion_factors)``.

    Abelianizing identifies all the ``b_i``, so the relation collapses to
    ``(sum_i c_i) b = 0`` over the generators ``(b, a)``; the invariants
    come from the Smith normal form of that 1 x 2 relation matrix.
    """
    total = sum(c.coeffs)
    result = snf(Matrix([[total, 0]]))
    rank = len(result.invariant_factors)
    torsion = tuple(f for f in result.invariant_factors if f > 1)
    return 2 - rank, torsion


@dataclass(frozen=True)
class IntervalSubgroupReport:
    """Isomorphism data for the subgroup generated by ``b_k .. b_k'``."""

    generators: int
    relators: int
    free_rank: int
    torsion_factors: tuple[int, ...]


def interval_subgroup(c: GcSignature, low: int, high: int) -> IntervalSubgroupReport:
    """Presentation invariants of ``< b_i : low <= i <= high >``.

    The subgroup is abelian with one banded relation for every full
    coefficient window inside the interval, so its presentation matrix is
    ``band_matrix(c, generators - s)``; the Smith normal form of that
    matrix is always ``(I | 0)``, which is why the report never contains
    torsion.
    """
    if low > high:
        raise ValueError("interval is empty: low > high")
    generators = high - low + 1
    relator_count = max(0, generators - c.s)
    if relator_count == 0:
        return IntervalSubgroupReport(generators, 0, generators, ())
    presentation = band_matrix(c, relator_count)
    result = snf(presentation)
    rank = len(result.invariant_factors)
    torsion = tuple(f for f in result.invariant_factors if f > 1)
    return IntervalSubgroupReport(generators, relator_count, generators - rank, torsion)


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of the bounded base-group membership search.

    ``witness`` maps orbit powers to integer coefficients when the vector
    was expressed as an integer combination of ``e_1 A^i``; ``None`` means
    the search bound was exhausted, which is *not* a proof of
    non-membership.
    """

    witness: tuple[tuple[int, int], ...] | None

    @property
    def is_member(self) -> bool:
        return self.witness is not None

    def witness_dict(self) -> dict[int, int]:
        if self.witness is None:
            raise ValueError("no witness: membership was not established")
        return dict(self.witness)


def _window_vectors(c: GcSignature, j: int) -> list[tuple[Scalar, ...]]:
    # Orbit window for symmetric depth j: powers -j .. j+s-1 (2j+s vectors).
    return [basis_orbit_vector(c, i) for i in range(-j, j + c.s)]


def base_membership(
    c: GcSignature,
    vector: Sequence,
    j_max: int = DEFAULT_MEMBERSHIP_BOUND,
) -> MembershipResult:
    """Search for ``vector`` as an integer combination of orbit vectors.

    Windows ``j = 0 .. j_max`` take the powers ``-j .. j+s-1``; each window
    reduces to an integer linear system after clearing denominators.  A
    found witness is verified exactly before being returned.
    """
    target = tuple(Fraction(exact_scalar(x)) for x in vector)
    if len(target) != c.s:
        raise DimensionError(f"vector length {len(target)} != s = {c.s}")
    if j_max < 0:
        raise ValueError("j_max must be nonnegative")
    for j in range(j_max + 1):
        powers = list(range(-j, j + c.s))
        vectors = _window_vectors(c, j)
        denominator = math.lcm(
            *(Fraction(x).denominator for vec in vectors for x in vec),
            *(x.denominator for x in target),
        )
        columns = Matrix(
            [
                [int(vectors[k][row] * denominator) for k in range(len(powers))]
                for row in range(c.s)
            ]
        )
        rhs = [int(x * denominator) for x in target]
        solution = solve_integer_system(columns, rhs)
        if solution is not None:
            witness = tuple(
                (power, coeff) for power, coeff in zip(powers, solution) if coeff
            )
            combined = [Fraction(0)] * c.s
            for power, coeff in witness:
                vec = basis_orbit_vector(c, power)
                combined = [acc + coeff * x for acc, x in zip(combined, vec)]
            assert all(got == want for got, want in zip(combined, target))
            return MembershipResult(witness=witness)
    return MembershipResult(witness=None)


@dataclass(frozen=True)
class PowerIndexResult:
    """Index of ``<a, b^t>``; ``index`` is ``None`` when the window search
    hit its cap before stabilizing."""

    index: int | None

    @property
    def stabilized(self) -> bool:
        return self.index is not None


def _lattice_covolume(vectors: list[tuple[Scalar, ...]], s: int) -> Fraction:
    # Covolume of the full-rank lattice spanned by the given row vectors:
    # clear denominators, then multiply the invariant factors.
    denominator = math.lcm(*(Fraction(x).denominator for vec in vectors for x in vec))
    integer_rows = Matrix(
        [[int(Fraction(x) * denominator) for x in vec] for vec in vectors]
    )
    factors = snf(integer_rows).invariant_factors
    if len(factors) < s:
        raise ArithmeticError("window lattice unexpectedly degenerate")
    product = 1
    for f in factors:
        product *= f
    return Fraction(product, denominator**s)


def _image_cardinality_step(c: GcSignature, t: int, j: int, j_outer: int) -> int:
    # |window-j lattice : its intersection with t * (window-j_outer lattice)|,
    # computed as a covolume ratio of full-rank lattices.
    s = c.s
    window = _window_vectors(c, j)
    scaled_outer = [tuple(t * x for x in vec) for vec in _window_vectors(c, j_outer)]
    cov_scaled = _lattice_covolume(scaled_outer, s)
    cov_joined = _lattice_covolume(window + scaled_outer, s)
    ratio = cov_scaled / cov_joined
    assert ratio.denominator == 1 and ratio >= 1
    return int(ratio)


def _stable_image_cardinality(c: GcSignature, t: int, j: int, cap: int) -> int | None:
    # The image of window j in the full quotient by the scaled base group:
    # grow the outer window until the covolume ratio stops shrinking.
    previous = None
    for j_outer in range(j, j + cap + 1):
        value = _image_cardinality_step(c, t, j, j_outer)
        if value == previous:
            return value
        previous = value
    return None


def power_subgroup_index(
    c: GcSignature,
    t: int,
    j_cap: int = DEFAULT_INDEX_WINDOW_CAP,
) -> PowerIndexResult:
    """Index of the subgroup generated by ``a`` and ``b^t``.

    Replacing ``b`` by ``b^t`` scales the base group by ``t``, so the index
    equals the size of (base group) / (t * base group).  That quotient is
    the increasing union of the images of finite orbit windows; each image
    cardinality is an exact covolume ratio, the sequence is non-decreasing
    and bounded by ``t**s``, and two consecutive equal window values are
    taken as the stable answer (with ``j_cap`` as the escape hatch).  A
    stabilized index always divides ``t**s``.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if t == 1:
        return PowerIndexResult(index=1)
    previous = None
    for j in range(j_cap + 1):
        value = _stable_image_cardinality(c, t, j, j_cap + 2)
        if value is None:
            return PowerIndexResult(index=None)
        if value == previous:
            assert 1 <= value <= t**c.s and t**c.s % value == 0
            return PowerIndexResult(index=value)
        previous = value
    return PowerIndexResult(index=None)


def element_to_json(element: GcElement) -> dict:
    """JSON form with decimal-string scalars (``p/q`` for true rationals)."""
    return {
        "translation": [str(x) for x in element.translation],
        "shift": str(element.shift),
    }


def element_from_json(obj: dict) -> GcElement:
    translation = tuple(Fraction(x) for x in obj["translation"])
    return GcElement(translation, int(obj["shift"]))
