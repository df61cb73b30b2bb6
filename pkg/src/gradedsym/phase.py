"""Exact roots of unity and cyclotomic integers.

``Phase(num, den)`` stands for exp(2*pi*i*num/den).  ``CycInt`` is an
element of Z[zeta_m], stored as an integer coefficient vector reduced
modulo the m-th cyclotomic polynomial, so two values compare equal exactly
when the complex numbers they denote are equal.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True, order=True)
class Phase:
    num: int = 0
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if den <= 0:
            raise ValueError("phase denominator must be positive")
        num %= den
        g = math.gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    @classmethod
    def from_fraction(cls, f) -> Phase:
        f = Fraction(f)
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, text: str) -> Phase:
        """Parse ``"num/den"`` (or a bare integer)."""
        try:
            f = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a phase: {text!r}") from exc
        return cls.from_fraction(f)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def order(self) -> int:
        """Multiplicative order of the root of unity."""
        return self.den

    def __mul__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        d = self.den * other.den // math.gcd(self.den, other.den)
        return Phase(self.num * (d // self.den) + other.num * (d // other.den), d)

    def __truediv__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int) -> Phase:
        return Phase(self.num * k, self.den)

    def __neg__(self) -> Phase:
        return self * MINUS_ONE

    def inverse(self) -> Phase:
        return Phase(-self.num, self.den)

    conjugate = inverse

    def is_real(self) -> bool:
        return self.den <= 2

    def __complex__(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.num / self.den)

    def pretty(self) -> str:
        """Human form: ``+1``, ``-1``, ``+i``, ``-i`` or ``exp(2pi i*k/d)``."""
        if self.den == 1:
            return "+1"
        if self.den == 2:
            return "-1"
        if self.den == 4:
            return "+i" if self.num == 1 else "-i"
        return f"exp(2pi i*{self.num}/{self.den})"

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


ONE = Phase(0, 1)
MINUS_ONE = Phase(1, 2)


def phase_mul(p: Phase, r: Phase) -> Phase:
    return p * r


def phase_pow(p: Phase, k: int) -> Phase:
    return p**k


# -- integer polynomials, coefficient lists lowest degree first --------------


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_monic(num: list[int], den: tuple) -> tuple[list[int], list[int]]:
    """Divide by a monic integer polynomial; everything stays in Z[x]."""
    num = list(num)
    d = len(den) - 1
    if len(num) - 1 < d:
        return [0], _trim(num)
    quot = [0] * (len(num) - d)
    for k in range(len(num) - 1, d - 1, -1):
        c = num[k]
        if c:
            quot[k - d] = c
            for j, dc in enumerate(den):
                num[k - d + j] -= c * dc
    return _trim(quot), _trim(num[:d] or [0])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Phi_m as a coefficient tuple, lowest degree first.

    Built by exact division: Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_monic(poly, cyclotomic_polynomial(d))
            if any(rem):
                raise ArithmeticError(f"Phi_{d} does not divide x^{m} - 1")
    return tuple(poly)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


class OrderMismatchError(ValueError):
    """Raised when combining cyclotomic integers of different orders."""


class CycInt:
    """Element of Z[zeta_m] reduced modulo Phi_m.

    Plain ``int`` operands are promoted to constants.  Operands of different
    orders must be brought to a common order with :meth:`to_order` first.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("order must be >= 1")
        phi = cyclotomic_polynomial(order)
        coeffs = [int(c) for c in coeffs] or [0]
        _, rem = _poly_divmod_monic(coeffs, phi)
        deg = len(phi) - 1
        rem = rem + [0] * (deg - len(rem))
        self.order = order
        self.coeffs = tuple(rem[:deg])

    @classmethod
    def from_int(cls, order: int, value: int) -> CycInt:
        return cls(order, [value])

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> CycInt:
        """zeta_order ** k."""
        k %= order
        return cls(order, [0] * k + [1])

    def to_order(self, new_order: int) -> CycInt:
        """Re-express in Z[zeta_M] for a multiple M of the current order."""
        if new_order % self.order:
            raise OrderMismatchError(f"{self.order} does not divide {new_order}")
        step = new_order // self.order
        coeffs = [0] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        return CycInt(new_order, coeffs)

    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"orders {self.order} and {other.order} differ; rescale first"
                )
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.order, other)
        raise TypeError(f"cannot combine CycInt with {type(other).__name__}")

    def __add__(self, other) -> CycInt:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CycInt(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.order, [-a for a in self.coeffs])

    def __sub__(self, other) -> CycInt:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CycInt:
        return (-self) + other

    def __mul__(self, other) -> CycInt:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CycInt(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycInt:
        if k < 0:
            raise ValueError("negative powers are not defined in general")
        result = CycInt.from_int(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.order, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        if other.order != self.order:
            m = math.lcm(self.order, other.order)
            return self.to_order(m).coeffs == other.to_order(m).coeffs
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * z**k for k, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> CycInt:
        return cls(data["order"], data["coeffs"])

    def __repr__(self) -> str:
        return f"CycInt({self.order}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def cyc_from_phase(p: Phase, order: int | None = None) -> CycInt:
    """Embed a root of unity into Z[zeta_order] (default order: p.den)."""
    order = p.den if order is None else order
    if order % p.den:
        raise OrderMismatchError(f"phase {p} is not a power of zeta_{order}")
    return CycInt.zeta(order, p.num * (order // p.den))
