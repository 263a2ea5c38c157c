"""Exact arithmetic in the wreath products Z wr Z and C_n wr Z.

An element is a finitely supported lamp configuration on the integer line
together with a shift of the lamplighter.  Without a modulus the lamps
take values in Z; with modulus ``n`` they live in ``C_n`` and every stored
value is reduced into ``1 .. n-1``.  The support convention is fixed so
that the conjugate ``b^(a^i)`` (the word ``a^-i b a^i``) lights the single
lamp at position ``i``, mirroring the coefficient-vector groups where the
same word lands on ``e_1 A^i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .words import GeneratorWord, parse_word


@dataclass(frozen=True)
class WreathElement:
    """Lamp configuration (sorted, zero-free) plus lamplighter shift."""

    support: tuple[tuple[int, int], ...]
    shift: int
    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError("modulus must be at least 2 (or None for Z lamps)")
        _int_only(self.shift, "shift")
        cleaned = _normalize_support(dict(self.support), self.modulus)
        object.__setattr__(self, "support", cleaned)

    @classmethod
    def from_support(
        cls,
        values: Mapping[int, int],
        shift: int = 0,
        modulus: int | None = None,
    ) -> "WreathElement":
        return cls(tuple(values.items()), shift, modulus)

    @classmethod
    def identity(cls, modulus: int | None = None) -> "WreathElement":
        return cls((), 0, modulus)

    def support_dict(self) -> dict[int, int]:
        return dict(self.support)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(pos for pos, _ in self.support)

    @property
    def is_identity(self) -> bool:
        return not self.support and self.shift == 0


def _int_only(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what} must be an integer, got {type(value).__name__}")
    return value


def _normalize_support(
    values: Mapping[int, int], modulus: int | None
) -> tuple[tuple[int, int], ...]:
    out = []
    for pos in sorted(values):
        val = _int_only(values[pos], "lamp value")
        if modulus is not None:
            val %= modulus
        if val != 0:
            out.append((_int_only(pos, "lamp position"), val))
    return tuple(out)


def _require_same_modulus(g: WreathElement, h: WreathElement):
    if g.modulus != h.modulus:
        raise ValueError(f"modulus mismatch: {g.modulus} vs {h.modulus}")


def wr_mul(g: WreathElement, h: WreathElement) -> WreathElement:
    """Product: shift g's lamps by h's shift, then add h's lamps.

    ``(f1, t1)(f2, t2) = (f1 shifted by t2 + f2, t1 + t2)``, the analogue
    of the coefficient-group rule with the index shift playing the role of
    the companion action.
    """
    _require_same_modulus(g, h)
    lamps = {pos + h.shift: val for pos, val in g.support}
    for pos, val in h.support:
        lamps[pos] = lamps.get(pos, 0) + val
    return WreathElement.from_support(lamps, g.shift + h.shift, g.modulus)


def wr_inv(g: WreathElement) -> WreathElement:
    lamps = {pos - g.shift: -val for pos, val in g.support}
    return WreathElement.from_support(lamps, -g.shift, g.modulus)


def wr_pow(g: WreathElement, n: int) -> WreathElement:
    if n < 0:
        return wr_pow(wr_inv(g), -n)
    result = WreathElement.identity(g.modulus)
    for _ in range(n):
        result = wr_mul(result, g)
    return result


def _letter_power(gen: str, exp: int, modulus: int | None) -> WreathElement:
    if gen == "a":
        return WreathElement((), exp, modulus)
    return WreathElement.from_support({0: exp}, 0, modulus)


def wr_eval(word: GeneratorWord | str, modulus: int | None = None) -> WreathElement:
    """Evaluate a word in ``a`` (shift) and ``b`` (lamp at the origin)."""
    if isinstance(word, str):
        word = parse_word(word)
    result = WreathElement.identity(modulus)
    for gen, exp in word.letters:
        result = wr_mul(result, _letter_power(gen, exp, modulus))
    return result


def wr_is_identity(g: WreathElement) -> bool:
    """Word problem in the wreath model: empty support and zero shift."""
    return g.is_identity


def wr_base_relation(
    cvec: Sequence[int] | Iterable[int], modulus: int | None = None
) -> WreathElement:
    """Evaluate ``b_0^{c_0} b_1^{c_1} ...`` for a finite coefficient vector.

    Over Z lamps the result is the identity only for the zero vector, which
    certifies that the conjugates ``b_i`` generate a free abelian group;
    with modulus ``n`` the result is trivial exactly when every entry is
    divisible by ``n``.
    """
    lamps = {i: _int_only(coeff, "coefficient") for i, coeff in enumerate(cvec)}
    return WreathElement.from_support(lamps, 0, modulus)


def element_to_json(element: WreathElement) -> dict:
    """JSON form: decimal-string integers, support keyed by position in
    ascending order, modulus as a bare number or null."""
    return {
        "shift": str(element.shift),
        "support": {str(pos): str(val) for pos, val in element.support},
        "modulus": element.modulus,
    }


def element_from_json(obj: dict) -> WreathElement:
    lamps = {int(pos): int(val) for pos, val in obj["support"].items()}
    return WreathElement.from_support(lamps, int(obj["shift"]), obj["modulus"])
