"""Finitely generated abelian grading groups.

A group is a direct sum of cyclic factors, each either ``Z`` (modulus
``INF``) or ``Z_m`` with ``m >= 2``.  Elements are immutable
:class:`GradeVector` values whose finite components are kept in ``[0, m)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

INF = None  # modulus marker for a free factor Z


class SpecMismatchError(ValueError):
    """Raised when combining values that live in different groups."""


@dataclass(frozen=True)
class GroupSpec:
    moduli: tuple

    def __post_init__(self):
        moduli = tuple(self.moduli)
        if not moduli:
            raise ValueError("a grading group needs rank >= 1")
        for m in moduli:
            if m is INF:
                continue
            if isinstance(m, bool) or not isinstance(m, int) or m < 2:
                raise ValueError(f"finite modulus must be an integer >= 2, got {m!r}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def free(cls, rank: int) -> GroupSpec:
        return cls((INF,) * rank)

    @classmethod
    def cyclic(cls, m: int, rank: int) -> GroupSpec:
        return cls((m,) * rank)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def is_finite(self) -> bool:
        return all(m is not INF for m in self.moduli)

    @property
    def is_homogeneous(self) -> bool:
        return len(set(self.moduli)) == 1

    @property
    def order(self) -> int | None:
        """Number of elements, or None for an infinite group."""
        if not self.is_finite:
            return None
        return math.prod(self.moduli)

    @property
    def exponent(self) -> int | None:
        """lcm of the moduli; every element's order divides it."""
        if not self.is_finite:
            return None
        return math.lcm(*self.moduli)

    def element(self, components: Sequence[int]) -> GradeVector:
        return GradeVector(tuple(components), self)

    def zero(self) -> GradeVector:
        return GradeVector((0,) * self.rank, self)

    def sigma(self, i: int) -> GradeVector:
        """Canonical generator sigma_i (1-based, matching Theta_i)."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"generator index {i} out of range 1..{self.rank}")
        return GradeVector(tuple(int(j == i - 1) for j in range(self.rank)), self)

    def generators(self) -> list[GradeVector]:
        return [self.sigma(i) for i in range(1, self.rank + 1)]

    def elements(self) -> Iterator[GradeVector]:
        """All elements in lexicographic order (last component fastest)."""
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        for comps in itertools.product(*(range(m) for m in self.moduli)):
            yield GradeVector(comps, self)

    def index(self, g: GradeVector) -> int:
        """Position of ``g`` in :meth:`elements` order."""
        self._check(g)
        idx = 0
        for c, m in zip(g.components, self.moduli):
            idx = idx * m + c
        return idx

    def to_json(self) -> dict:
        return {"moduli": ["inf" if m is INF else m for m in self.moduli]}

    @classmethod
    def from_json(cls, data: dict) -> GroupSpec:
        moduli = []
        for m in data["moduli"]:
            if isinstance(m, str):
                if m.lower() != "inf":
                    raise ValueError(f"unknown modulus {m!r}")
                moduli.append(INF)
            else:
                moduli.append(m)
        return cls(tuple(moduli))

    def _check(self, g: GradeVector) -> None:
        if g.spec != self:
            raise SpecMismatchError(f"{g} does not belong to {self}")

    def __str__(self) -> str:
        parts = ["Z" if m is INF else f"Z_{m}" for m in self.moduli]
        if self.is_homogeneous:
            return f"({parts[0]})^{self.rank}"
        return " + ".join(parts)


@dataclass(frozen=True)
class GradeVector:
    components: tuple
    spec: GroupSpec

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) != self.spec.rank:
            raise ValueError(
                f"expected {self.spec.rank} components, got {len(comps)}"
            )
        reduced = []
        for c, m in zip(comps, self.spec.moduli):
            if isinstance(c, bool) or not isinstance(c, int):
                c = int(c)  # numpy integers and the like
            reduced.append(c if m is INF else c % m)
        object.__setattr__(self, "components", tuple(reduced))

    def _same(self, other: GradeVector) -> None:
        if not isinstance(other, GradeVector):
            raise TypeError(f"cannot combine GradeVector with {type(other).__name__}")
        if other.spec != self.spec:
            raise SpecMismatchError(f"{self.spec} != {other.spec}")

    def __add__(self, other: GradeVector) -> GradeVector:
        self._same(other)
        return GradeVector(
            tuple(a + b for a, b in zip(self.components, other.components)), self.spec
        )

    def __neg__(self) -> GradeVector:
        return GradeVector(tuple(-a for a in self.components), self.spec)

    def __sub__(self, other: GradeVector) -> GradeVector:
        return self + (-other)

    def __mul__(self, k: int) -> GradeVector:
        return GradeVector(tuple(k * a for a in self.components), self.spec)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.components)

    def order(self) -> int | None:
        """Additive order; None for elements of infinite order."""
        if self.is_zero():
            return 1
        result = 1
        for c, m in zip(self.components, self.spec.moduli):
            if c == 0:
                continue
            if m is INF:
                return None
            result = math.lcm(result, m // math.gcd(c, m))
        return result

    def __iter__(self):
        return iter(self.components)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.components)) + ")"


def group_add(a: GradeVector, b: GradeVector) -> GradeVector:
    return a + b


def reduce_grading_group(q_order: int, N: int, *, reduce: bool = True) -> GroupSpec:
    """Grading group for the standard gradation with parameter q of order ``q_order``.

    With ``reduce=False`` the free group Z^N is returned.  Otherwise q = +-1
    (order 1 or 2) gives (Z_2)^N and a primitive n-th root (n >= 3) gives
    (Z_n)^N.
    """
    if q_order < 1:
        raise ValueError(f"q_order must be >= 1, got {q_order}")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if not reduce:
        return GroupSpec.free(N)
    if q_order <= 2:
        return GroupSpec.cyclic(2, N)
    return GroupSpec.cyclic(q_order, N)
