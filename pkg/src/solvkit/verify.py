"""Executable re-verification of the algebraic facts the library rests on.

Every check runs concrete instances with exact arithmetic (tolerance is
zero by definition) and reports counts instead of raising, so the harness
behaves as a measurement instrument: failures are data.  All sampling is
driven by explicit ``random.Random`` instances, so a fixed seed gives a
byte-identical run.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .gcgroup import (
    GcSignature,
    band_matrix,
    gc_eval,
    gc_identity,
    gc_is_identity,
    gc_is_proper,
    gc_mul,
    interval_subgroup,
    power_subgroup_index,
    relator_check,
)
from .linalg import Matrix
from .words import GeneratorWord
from .wreath import WreathElement, wr_base_relation, wr_eval, wr_inv, wr_mul, wr_pow


@dataclass(frozen=True)
class LemmaReport:
    """Aggregated outcome of one named check."""

    lemma_id: str
    cases_run: int
    cases_passed: int
    first_failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.cases_passed == self.cases_run

    def __post_init__(self):
        if self.cases_passed > self.cases_run:
            raise ValueError("cases_passed cannot exceed cases_run")
        if (self.first_failure is not None) != (self.cases_passed < self.cases_run):
            raise ValueError("first_failure must be present iff some case failed")


class _Recorder:
    def __init__(self, lemma_id: str):
        self.lemma_id = lemma_id
        self.run = 0
        self.passed = 0
        self.first_failure: str | None = None

    def case(self, ok: bool, description: str):
        self.run += 1
        if ok:
            self.passed += 1
        elif self.first_failure is None:
            self.first_failure = description

    def report(self) -> LemmaReport:
        return LemmaReport(self.lemma_id, self.run, self.passed, self.first_failure)


def merge_reports(lemma_id: str, reports: Iterable[LemmaReport]) -> LemmaReport:
    reports = list(reports)
    run = sum(r.cases_run for r in reports)
    passed = sum(r.cases_passed for r in reports)
    first = next((r.first_failure for r in reports if r.first_failure), None)
    return LemmaReport(lemma_id, run, passed, first)


def random_signature(
    rng: random.Random, s_max: int = 5, coeff_bound: int = 9
) -> GcSignature:
    """Uniformly sampled valid signature (rejection on the constraints)."""
    while True:
        s = rng.randint(1, s_max)
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(s + 1)]
        if coeffs[0] == 0 or coeffs[-1] == 0:
            continue
        if math.gcd(*coeffs) != 1:
            continue
        return GcSignature(tuple(coeffs))


def random_word(
    rng: random.Random, max_terms: int = 10, max_exponent: int = 3
) -> GeneratorWord:
    terms = rng.randint(0, max_terms)
    pairs = [
        (rng.choice("ab"), rng.randint(-max_exponent, max_exponent))
        for _ in range(terms)
    ]
    return GeneratorWord.from_letters(pairs)


def defining_relator_word(c: GcSignature) -> GeneratorWord:
    """The word ``b^{c_0} (a^-1 b a)^{c_1} ... (a^-s b a^s)^{c_s}``."""
    pairs: list[tuple[str, int]] = []
    for i, coeff in enumerate(c.coeffs):
        if coeff == 0:
            continue
        pairs.extend([("a", -i), ("b", coeff), ("a", i)])
    return GeneratorWord.from_letters(pairs)


def conjugate_commutator_word(i: int) -> GeneratorWord:
    """The commutator ``[b, a^-i b a^i]`` as a word."""
    pairs = [
        ("b", -1),
        ("a", -i),
        ("b", -1),
        ("a", i),
        ("b", 1),
        ("a", -i),
        ("b", 1),
        ("a", i),
    ]
    return GeneratorWord.from_letters(pairs)


def _identity_block(m: int, cols: int) -> Matrix:
    return Matrix([[int(i == j) for j in range(cols)] for i in range(m)])


def check_band_snf_identity(
    s_max: int = 5,
    m_max: int = 6,
    coeff_bound: int = 9,
    samples: int = 100,
    rng: random.Random | None = None,
) -> LemmaReport:
    """SNF of every banded relation matrix is the identity block (I_m | 0)."""
    rng = rng or random.Random(0)
    rec = _Recorder("band-matrix-snf-identity-block")
    pinned = [(GcSignature((2, 3)), 2)]
    cases = pinned + [
        (random_signature(rng, s_max, coeff_bound), rng.randint(1, m_max))
        for _ in range(samples)
    ]
    for c, m in cases:
        smith = linalg.snf(band_matrix(c, m)).smith
        rec.case(smith == _identity_block(m, m + c.s), f"c={c}, m={m}")
    return rec.report()


def check_snf_minor_gcds(
    samples: int = 200,
    dim_bound: int = 4,
    entry_bound: int = 9,
    rng: random.Random | None = None,
) -> LemmaReport:
    """Invariant factors against the brute-force minor-gcd oracle.

    For each sampled integer matrix, ``sigma_i * gamma_{i-1} = gamma_i``
    must hold up to the rank, where the gammas enumerate all minors.
    """
    if dim_bound > 5:
        raise ValueError("dim_bound above 5 makes minor enumeration impractical")
    rng = rng or random.Random(0)
    rec = _Recorder("invariant-factors-vs-minor-gcds")
    for _ in range(samples):
        rows = rng.randint(1, dim_bound)
        cols = rng.randint(1, dim_bound + 1)
        matrix = Matrix(
            [
                [rng.randint(-entry_bound, entry_bound) for _ in range(cols)]
                for _ in range(rows)
            ]
        )
        gammas = (1,) + linalg.minor_gcds(matrix)
        sigmas = linalg.snf(matrix).invariant_factors
        ok = all(
            sigmas[i] * gammas[i] == gammas[i + 1] for i in range(len(sigmas))
        ) and all(g == 0 for g in gammas[len(sigmas) + 1 :])
        rec.case(ok, f"matrix={matrix!r}")
    return rec.report()


def check_corner_minors(c: GcSignature, m: int) -> LemmaReport:
    """The extreme maximal minors of the banded matrix are c_0^m and c_s^m."""
    rec = _Recorder("banded-corner-minors")
    matrix = band_matrix(c, m)
    left = matrix.submatrix(range(m), range(m)).det()
    rec.case(left == c.coeffs[0] ** m, f"left window of c={c}, m={m}: {left}")
    right = matrix.submatrix(range(m), range(c.s, c.s + m)).det()
    rec.case(right == c.coeffs[-1] ** m, f"right window of c={c}, m={m}: {right}")
    return rec.report()


def check_corner_minors_sampled(
    samples: int = 50,
    s_max: int = 5,
    m_max: int = 6,
    coeff_bound: int = 9,
    rng: random.Random | None = None,
) -> LemmaReport:
    rng = rng or random.Random(0)
    reports = [check_corner_minors(GcSignature((2, 3)), 2)]
    for _ in range(samples):
        reports.append(
            check_corner_minors(
                random_signature(rng, s_max, coeff_bound), rng.randint(1, m_max)
            )
        )
    return merge_reports("banded-corner-minors", reports)


def check_relator_identities(
    samples: int = 100,
    s_max: int = 5,
    coeff_bound: int = 9,
    conjugate_range: int = 4,
    rng: random.Random | None = None,
) -> LemmaReport:
    """Model images satisfy the defining relations, word by word."""
    rng = rng or random.Random(0)
    rec = _Recorder("companion-model-satisfies-relations")
    for _ in range(samples):
        c = random_signature(rng, s_max, coeff_bound)
        rec.case(relator_check(c), f"relator_check failed for c={c}")
        rec.case(
            gc_is_identity(c, defining_relator_word(c)),
            f"defining relator word not trivial for c={c}",
        )
        i = rng.randint(-conjugate_range, conjugate_range)
        rec.case(
            gc_is_identity(c, conjugate_commutator_word(i)),
            f"commutator [b, b_{i}] not trivial for c={c}",
        )
    return rec.report()


def check_torsion_free(
    samples: int = 200,
    max_power: int = 20,
    rng: random.Random | None = None,
) -> LemmaReport:
    """No nontrivial element has finite order up to the probed power."""
    rng = rng or random.Random(0)
    rec = _Recorder("torsion-free-power-probe")
    for _ in range(samples):
        c = random_signature(rng)
        element = gc_identity(c)
        while element.is_identity:
            element = gc_eval(c, random_word(rng))
        power = element
        ok = True
        for _ in range(max_power):
            if power.is_identity:
                ok = False
                break
            power = gc_mul(c, power, element)
        rec.case(ok, f"torsion found: c={c}, element={element}")
    return rec.report()


def check_bs_crosscheck() -> LemmaReport:
    """Pinned sanity facts in the classic one-relator cases."""
    rec = _Recorder("baumslag-solitar-crosscheck")
    c = GcSignature((2, -1))
    rec.case(
        gc_eval(c, "a^-1 b a") == gc_eval(c, "b^2"),
        "conjugation by a must double b in G((2,-1))",
    )
    rec.case(gc_is_proper(c), "G((2,-1)) must be proper")
    rec.case(not gc_is_proper(GcSignature((1, 1))), "G((1,1)) must not be proper")
    rec.case(
        not gc_is_proper(GcSignature((1, 1, 1))), "G((1,1,1)) must not be proper"
    )
    rec.case(gc_is_proper(GcSignature((1, 3, 1))), "G((1,3,1)) must be proper")
    return rec.report()


def check_power_index(
    samples: int = 50,
    s_max: int = 3,
    t_max: int = 6,
    coeff_bound: int = 9,
    rng: random.Random | None = None,
) -> LemmaReport:
    """Power-subgroup indexes stabilize and divide t**s; pinned values hold."""
    rng = rng or random.Random(0)
    rec = _Recorder("power-subgroup-index-bound")
    pinned = [
        (GcSignature((2, -1)), 2, 1),
        (GcSignature((2, -1)), 3, 3),
        (GcSignature((1, -1)), 5, 5),
    ]
    for c, t, expected in pinned:
        result = power_subgroup_index(c, t)
        rec.case(
            result.index == expected,
            f"index of <a, b^{t}> in G({c}) gave {result.index}, expected {expected}",
        )
    for _ in range(samples):
        c = random_signature(rng, s_max, coeff_bound)
        t = rng.randint(1, t_max)
        result = power_subgroup_index(c, t)
        ok = (
            result.stabilized
            and 1 <= result.index <= t**c.s
            and t**c.s % result.index == 0
        )
        rec.case(ok, f"c={c}, t={t}: result={result.index}")
    return rec.report()


def check_interval_subgroups(
    samples: int = 100,
    s_max: int = 5,
    coeff_bound: int = 9,
    max_width: int = 7,
    rng: random.Random | None = None,
) -> LemmaReport:
    """Interval subgroups are free abelian of rank min(generators, s)."""
    rng = rng or random.Random(0)
    rec = _Recorder("interval-subgroups-free")
    for _ in range(samples):
        c = random_signature(rng, s_max, coeff_bound)
        low = rng.randint(-5, 5)
        high = low + rng.randint(0, max_width)
        report = interval_subgroup(c, low, high)
        ok = (
            report.torsion_factors == ()
            and report.free_rank == min(report.generators, c.s)
        )
        rec.case(ok, f"c={c}, interval=[{low},{high}]: {report}")
    return rec.report()


def check_wreath(
    samples: int = 100,
    rng: random.Random | None = None,
) -> LemmaReport:
    """Wreath model: base freeness, exponent law, conjugation shift, axioms."""
    rng = rng or random.Random(0)
    rec = _Recorder("wreath-model-properties")

    def random_element(modulus=None):
        lamps = {
            rng.randint(-4, 4): rng.randint(-9, 9) for _ in range(rng.randint(0, 4))
        }
        return WreathElement.from_support(lamps, rng.randint(-4, 4), modulus)

    for _ in range(samples):
        cvec = [rng.randint(-9, 9) for _ in range(rng.randint(1, 8))]
        element = wr_base_relation(cvec)
        expect_trivial = all(x == 0 for x in cvec)
        rec.case(
            element.is_identity == expect_trivial,
            f"base relation for cvec={cvec} gave {element}",
        )

        modulus = rng.randint(2, 7)
        flat = random_element(modulus)
        flat = WreathElement(flat.support, 0, modulus)
        rec.case(
            wr_pow(flat, modulus).is_identity,
            f"exponent law failed, modulus={modulus}, element={flat}",
        )

        g = random_element()
        k = rng.randint(-5, 5)
        g_flat = WreathElement(g.support, 0, None)
        shift_in = wr_eval(GeneratorWord.from_letters([("a", -k)]))
        shift_out = wr_eval(GeneratorWord.from_letters([("a", k)]))
        conjugated = wr_mul(wr_mul(shift_in, g_flat), shift_out)
        rec.case(
            conjugated.positions == tuple(p + k for p in g_flat.positions),
            f"conjugation by a^{k} did not shift support of {g_flat}",
        )

        x, y, z = random_element(), random_element(), random_element()
        rec.case(
            wr_mul(wr_mul(x, y), z) == wr_mul(x, wr_mul(y, z)),
            f"associativity failed on {x}, {y}, {z}",
        )
        rec.case(
            wr_mul(x, wr_inv(x)).is_identity and wr_mul(wr_inv(x), x).is_identity,
            f"inverse law failed on {x}",
        )
    return rec.report()


def _primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, int(p**0.5) + 1))]


def minkowski_bound(n: int) -> int:
    """A positive integer divisible by the order of every finite subgroup
    of the n x n integer general linear group.

    Computed by the classical exponent formula: for each prime
    ``p <= n + 1`` the exponent of p is ``sum_k floor(n / (p^k (p-1)))``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    bound = 1
    for p in _primes_up_to(n + 1):
        exponent = 0
        pk = 1
        while pk * (p - 1) <= n:
            exponent += n // (pk * (p - 1))
            pk *= p
        bound *= p**exponent
    return bound


def check_minkowski() -> LemmaReport:
    """Formula sanity: pinned small values and the divisibility chain."""
    rec = _Recorder("finite-subgroup-order-bound")
    rec.case(minkowski_bound(1) == 2, f"bound(1) = {minkowski_bound(1)}")
    rec.case(minkowski_bound(2) == 24, f"bound(2) = {minkowski_bound(2)}")
    for n in range(1, 12):
        rec.case(
            minkowski_bound(n + 1) % minkowski_bound(n) == 0,
            f"bound({n}) does not divide bound({n + 1})",
        )
    for n in range(2, 13):
        rec.case(minkowski_bound(n) % 24 == 0, f"bound({n}) not divisible by 24")
    return rec.report()


def _mul2(x, y):
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


_I2 = (1, 0, 0, 1)


def _finite_order_2x2(m) -> bool:
    det = m[0] * m[3] - m[1] * m[2]
    if det not in (1, -1) or abs(m[0] + m[3]) > 2:
        return False
    # finite order in 2x2 integer matrices forces order dividing 12
    power = _I2
    for _ in range(12):
        power = _mul2(power, m)
    return power == _I2


def _closure_size(generators, cap: int) -> int | None:
    seen = {_I2}
    frontier = [_I2]
    while frontier:
        new = []
        for element in frontier:
            for g in generators:
                product = _mul2(element, g)
                if product not in seen:
                    seen.add(product)
                    new.append(product)
                    if len(seen) > cap:
                        return None
        frontier = new
    return len(seen)


def finite_subgroup_orders(n: int, entry_bound: int = 2, cap: int = 30) -> set[int]:
    """Brute-force oracle: orders of the finite matrix groups generated by
    pairs of finite-order n x n integer matrices with bounded entries.

    Supported for n = 1 and n = 2; pairs that generate an infinite group
    (closure exceeding ``cap``) contribute nothing.
    """
    if n == 1:
        orders = set()
        units = [t for t in range(-entry_bound, entry_bound + 1) if t * t == 1]
        for u in units:
            for v in units:
                orders.add(len({1, u, v, u * v}))
        return orders
    if n != 2:
        raise ValueError("the brute-force oracle only supports n = 1 and n = 2")
    span = range(-entry_bound, entry_bound + 1)
    candidates = [
        (a, b, c, d)
        for a in span
        for b in span
        for c in span
        for d in span
        if _finite_order_2x2((a, b, c, d))
    ]
    orders = set()
    for i, first in enumerate(candidates):
        for second in candidates[i:]:
            size = _closure_size((first, second), cap)
            if size is not None:
                orders.add(size)
    return orders


ALL_CHECKS = (
    "band-matrix-snf-identity-block",
    "invariant-factors-vs-minor-gcds",
    "banded-corner-minors",
    "companion-model-satisfies-relations",
    "torsion-free-power-probe",
    "baumslag-solitar-crosscheck",
    "power-subgroup-index-bound",
    "interval-subgroups-free",
    "wreath-model-properties",
    "finite-subgroup-order-bound",
)


def run_all(seed: int = 0) -> list[LemmaReport]:
    """Run every check with sampling derived deterministically from seed."""
    master = random.Random(seed)

    def child() -> random.Random:
        return random.Random(master.randrange(2**63))

    return [
        check_band_snf_identity(rng=child()),
        check_snf_minor_gcds(rng=child()),
        check_corner_minors_sampled(rng=child()),
        check_relator_identities(rng=child()),
        check_torsion_free(rng=child()),
        check_bs_crosscheck(),
        check_power_index(rng=child()),
        check_interval_subgroups(rng=child()),
        check_wreath(rng=child()),
        check_minkowski(),
    ]


def report_to_json(report: LemmaReport) -> dict:
    return {
        "lemma_id": report.lemma_id,
        "cases_run": str(report.cases_run),
        "cases_passed": str(report.cases_passed),
        "first_failure": report.first_failure,
    }


def reports_to_json(reports: Sequence[LemmaReport]) -> list[dict]:
    return [report_to_json(r) for r in reports]
