"""Graded-commutative algebras presented by generators and commutation phases.

An algebra context holds generators Theta_i^a (flux ``i`` in 1..N, particle
``a`` in 1..n), a phase lambda(x, y) for every ordered pair with
``x y = lambda(x, y) y x``, and per-generator nilpotency.  Words are brought
to normal form by sorting into (flux, particle) order and collecting one
phase per adjacent swap.

Coefficients are plain ``int`` when every phase is +-1 and :class:`CycInt`
of the common order otherwise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .bicharacter import Report, flux_bicharacter
from .grading import GradeVector, GroupSpec, SpecMismatchError
from .phase import MINUS_ONE, ONE, CycInt, Phase, cyc_from_phase

PARTITION_LIMIT = 1 << 20


class EnumerationLimitError(RuntimeError):
    """Raised when partition enumeration would exceed the subset cap."""


@dataclass(frozen=True, order=True)
class Generator:
    flux: int
    particle: int = 1
    grade: GradeVector = field(default=None, compare=False, repr=False)

    def label(self, n: int = 1) -> str:
        return f"Theta[{self.flux}]" if n == 1 else f"Theta[{self.flux}]^{self.particle}"

    def token(self, n: int = 1) -> str:
        return f"T{self.flux}" if n == 1 else f"T{self.flux}^{self.particle}"


def format_word(word: Sequence[Generator], n: int = 1, style: str = "theta") -> str:
    if not word:
        return "1"
    if style == "token":
        return " ".join(g.token(n) for g in word)
    return " ".join(g.label(n) for g in word)


@dataclass(frozen=True)
class Monomial:
    """A canonical word with a nonzero coefficient."""

    word: tuple
    coeff: object = 1

    @property
    def degree(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class Partition:
    monomial: Monomial
    quasiparticles: int
    quasiholes: int
    admissible: bool

    def to_json(self, n: int = 1) -> dict:
        coeff = self.monomial.coeff
        return {
            "word": format_word(self.monomial.word, n),
            "coeff": coeff.to_json() if isinstance(coeff, CycInt) else coeff,
            "quasiparticles": self.quasiparticles,
            "quasiholes": self.quasiholes,
            "admissible": self.admissible,
        }


@dataclass(frozen=True)
class Relation:
    """``left right = phase * right left`` with left < right canonically."""

    left: Generator
    right: Generator
    phase: Phase
    group: str


class GradedAlgebra:
    """Algebra context: generators, commutation phases, nilpotency.

    Build one with :func:`new_graded_algebra` or :func:`new_flux_algebra`.
    """

    def __init__(
        self,
        spec: GroupSpec,
        generators: Sequence[Generator],
        lam: dict,
        nilpotent: Sequence[bool],
        *,
        n: int = 1,
        bicharacter=None,
        flux_model: bool = False,
    ):
        self.spec = spec
        self.generators = tuple(sorted(generators))
        self.N = spec.rank
        self.n = n
        self.bicharacter = bicharacter
        self.flux_model = flux_model
        self._pos = {g: k for k, g in enumerate(self.generators)}
        size = len(self.generators)
        self._lam = [[lam[(x, y)] for y in self.generators] for x in self.generators]
        self.nilpotent = tuple(bool(b) for b in nilpotent)
        if len(self.nilpotent) != size:
            raise ValueError("need one nilpotency flag per generator")

        for i in range(size):
            li = self._lam[i][i]
            if li not in (ONE, MINUS_ONE):
                raise ValueError(f"lambda({self.generators[i]}, itself) = {li} is not +-1")
            if li == MINUS_ONE and not self.nilpotent[i]:
                raise ValueError(
                    f"{self.generators[i].label(n)} anticommutes with itself and must be nilpotent"
                )
            for j in range(i + 1, size):
                if self._lam[i][j] * self._lam[j][i] != ONE:
                    raise ValueError(
                        "inconsistent relations: lambda(x, y) * lambda(y, x) != 1 for "
                        f"{self.generators[i].label(n)}, {self.generators[j].label(n)}"
                    )

        self.coeff_order = math.lcm(*(p.den for row in self._lam for p in row))
        self._unit = 1 if self.coeff_order <= 2 else CycInt.from_int(self.coeff_order, 1)

    # -- basic accessors -------------------------------------------------

    def gen(self, flux: int, particle: int = 1) -> Generator:
        g = Generator(flux, particle)
        if g not in self._pos:
            raise KeyError(f"no generator Theta[{flux}]^{particle} in this algebra")
        return self.generators[self._pos[g]]

    def theta(self, flux: int, particle: int = 1) -> AlgebraElement:
        return self.element([self.gen(flux, particle)])

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {(): self._unit})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def lam(self, x: Generator, y: Generator) -> Phase:
        return self._lam[self._index(x)][self._index(y)]

    def is_nilpotent(self, x: Generator) -> bool:
        return self.nilpotent[self._index(x)]

    def scalar(self, p: Phase):
        """Embed a phase into the coefficient ring."""
        if self.coeff_order <= 2:
            return 1 if p == ONE else -1
        return cyc_from_phase(p, self.coeff_order)

    def grade_of(self, word: Iterable[Generator]) -> GradeVector:
        total = self.spec.zero()
        for g in word:
            total = total + self.generators[self._index(g)].grade
        return total

    def filling_factor(self) -> Fraction:
        return Fraction(self.n, self.N)

    def _index(self, g: Generator) -> int:
        try:
            return self._pos[g]
        except KeyError:
            raise KeyError(f"{g!r} is not a generator of this algebra") from None

    # -- rewriting -------------------------------------------------------

    def normal_form(self, word: Sequence[Generator]) -> Monomial | None:
        """Sort ``word`` canonically; None when the product vanishes."""
        idx = [self._index(g) for g in word]
        total = Fraction(0)
        lam = self._lam
        for k in range(1, len(idx)):
            j = k
            while j > 0 and idx[j - 1] > idx[j]:
                # x y = lambda(x, y) y x
                total += lam[idx[j - 1]][idx[j]].fraction
                idx[j - 1], idx[j] = idx[j], idx[j - 1]
                j -= 1
        for a, b in zip(idx, idx[1:]):
            if a == b and self.nilpotent[a]:
                return None
        coeff = self.scalar(Phase.from_fraction(total))
        return Monomial(tuple(self.generators[i] for i in idx), coeff)

    def element(self, word: Sequence[Generator], coeff=1) -> AlgebraElement:
        m = self.normal_form(word)
        if m is None or not coeff:
            return self.zero()
        return AlgebraElement(self, {m.word: m.coeff * coeff})

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.ctx is not self or y.ctx is not self:
            raise ValueError("elements belong to a different algebra")
        terms: dict = {}
        for w1, c1 in x.terms.items():
            for w2, c2 in y.terms.items():
                m = self.normal_form(w1 + w2)
                if m is None:
                    continue
                terms[m.word] = terms.get(m.word, 0) + m.coeff * c1 * c2
        return AlgebraElement(self, terms)

    def monomial_from_grade(self, alpha) -> Monomial:
        """Standard monomial Theta_1^a_1 ... Theta_N^a_N for an exponent vector.

        ``alpha`` is a GradeVector or a raw exponent sequence; raw exponents
        are validated against nilpotency before any reduction.
        """
        if self.n != 1:
            raise ValueError("standard monomials are defined for single-particle algebras")
        if isinstance(alpha, GradeVector):
            if alpha.spec != self.spec:
                raise SpecMismatchError("grade lives in a different group")
            exps = alpha.components
        else:
            exps = tuple(int(a) for a in alpha)
            if len(exps) != self.N:
                raise ValueError(f"expected {self.N} exponents, got {len(exps)}")
        word = []
        for i, e in enumerate(exps, start=1):
            g = self.gen(i)
            if e < 0:
                raise ValueError(f"negative exponent {e} for {g.label()}")
            if e > 1 and self.is_nilpotent(g):
                raise ValueError(f"exponent {e} exceeds nilpotency bound for {g.label()}")
            word.extend([g] * e)
        return Monomial(tuple(word), self._unit)

    # -- partitions ------------------------------------------------------

    def is_admissible(self, m: Monomial) -> bool:
        """Generalized Pauli exclusion: every pair of factors must commute exactly."""
        word = m.word
        if len(set(word)) != len(word):
            return False
        for k, x in enumerate(word):
            for y in word[k + 1 :]:
                if self.lam(x, y) != ONE:
                    return False
        return True

    def partition(self, m: Monomial) -> Partition:
        bound = len({g.flux for g in m.word})
        return Partition(m, len(m.word), self.N - bound, self.is_admissible(m))

    def enumerate_partitions(
        self,
        *,
        admissible_only: bool = False,
        degree: int | None = None,
        max_degree: int | None = None,
        force: bool = False,
    ) -> list[Partition]:
        """Every product of distinct generators, classified; unit included."""
        size = len(self.generators)
        if 2**size > PARTITION_LIMIT and not force:
            raise EnumerationLimitError(
                f"{size} generators give 2^{size} candidate partitions (> 2^20); pass force=True"
            )
        degrees = range(size + 1)
        if degree is not None:
            degrees = [degree] if 0 <= degree <= size else []
        elif max_degree is not None:
            degrees = range(min(size, max_degree) + 1)
        result = []
        for d in degrees:
            for subset in itertools.combinations(self.generators, d):
                p = self.partition(Monomial(subset, self._unit))
                if p.admissible or not admissible_only:
                    result.append(p)
        return result

    # -- presentation ----------------------------------------------------

    def relations(self) -> list[Relation]:
        """One relation per unordered pair of distinct generators."""
        out = []
        for k, x in enumerate(self.generators):
            for y in self.generators[k + 1 :]:
                if self.n == 1:
                    group = "i != j"
                elif x.flux == y.flux:
                    group = "i = j, a != b"
                elif x.particle == y.particle:
                    group = "a = b, i != j"
                else:
                    group = "a != b, i != j"
                out.append(Relation(x, y, self.lam(x, y), group))
        return out

    def basis_monomials(self, max_degree: int) -> list[Monomial]:
        """Canonical basis words of degree <= max_degree."""
        out = []
        for d in range(max_degree + 1):
            for word in itertools.combinations_with_replacement(self.generators, d):
                if any(a == b and self.is_nilpotent(a) for a, b in zip(word, word[1:])):
                    continue
                out.append(Monomial(word, self._unit))
        return out

    def verify_graded_commutativity(self, max_degree: int = 3, max_witnesses: int = 20) -> Report:
        """a b = eps(grade a, grade b) b a over all basis pairs up to ``max_degree``."""
        if self.n != 1 or self.bicharacter is None:
            raise ValueError(
                "graded commutativity is grade-determined only for single-particle "
                "algebras built from a bicharacter"
            )
        basis = [self.element(m.word) for m in self.basis_monomials(max_degree)]
        grades = [self.grade_of(next(iter(b.terms))) for b in basis]
        witnesses, checked, violations = [], 0, 0
        for a, ga in zip(basis, grades):
            for b, gb in zip(basis, grades):
                checked += 1
                if a * b != (b * a).scale(self.scalar(self.bicharacter(ga, gb))):
                    violations += 1
                    if len(witnesses) < max_witnesses:
                        witnesses.append({"args": [str(a), str(b)]})
        return Report("graded-commutativity", violations == 0, checked, violations, witnesses)

    def __repr__(self) -> str:
        kind = "flux" if self.flux_model else "graded"
        return f"<GradedAlgebra {kind} N={self.N} n={self.n} over {self.spec}>"


class AlgebraElement:
    """Finite linear combination of canonical words; zero coefficients are dropped."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: GradedAlgebra, terms: dict):
        self.ctx = ctx
        self.terms = {w: c for w, c in terms.items() if c}

    def _lift(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            if other.ctx is not self.ctx:
                raise ValueError("elements belong to a different algebra")
            return other
        return self.ctx.one().scale(other)

    def __add__(self, other) -> AlgebraElement:
        other = self._lift(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return AlgebraElement(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return self.scale(-1)

    def __sub__(self, other) -> AlgebraElement:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> AlgebraElement:
        return self._lift(other) - self

    def scale(self, c) -> AlgebraElement:
        return AlgebraElement(self.ctx, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return self.ctx.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> AlgebraElement:
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx is other.ctx and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def monomials(self) -> list[Monomial]:
        return [Monomial(w, c) for w, c in sorted(self.terms.items())]

    def grade(self) -> GradeVector:
        """Grade of a homogeneous element."""
        grades = {self.ctx.grade_of(w) for w in self.terms}
        if len(grades) != 1:
            raise ValueError("element is zero or not homogeneous")
        return grades.pop()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            word = format_word(w, self.ctx.n)
            if isinstance(c, CycInt) and not any(c.coeffs[1:]):
                c = c.coeffs[0]
            coeff = f"{c:+d}" if isinstance(c, int) else f"+({c})"
            parts.append(f"{coeff} {word}")
        return " ".join(parts)

    __repr__ = __str__


def _flux_generators(spec: GroupSpec, n: int) -> list[Generator]:
    return [Generator(i, a, spec.sigma(i)) for i in range(1, spec.rank + 1) for a in range(1, n + 1)]


def _multiparticle_lambda(eps, gens: Sequence[Generator]) -> dict:
    lam = {}
    for x in gens:
        for y in gens:
            e = eps(x.grade, y.grade)
            lam[(x, y)] = e if x.particle == y.particle else -e
    return lam


def new_graded_algebra(eps, N: int | None = None, *, nilpotent=None) -> GradedAlgebra:
    """Single-particle algebra with Theta_i Theta_j = eps(sigma_i, sigma_j) Theta_j Theta_i.

    Generators with eps_ii = -1 are always nilpotent; ``nilpotent`` (a bool
    or one bool per generator) additionally imposes Theta_i^2 = 0 elsewhere.
    """
    spec = eps.spec
    if N is not None and N != spec.rank:
        raise SpecMismatchError(f"bicharacter has rank {spec.rank}, expected {N}")
    gens = _flux_generators(spec, 1)
    lam = _multiparticle_lambda(eps, gens)
    if nilpotent is None:
        extra = [False] * len(gens)
    elif isinstance(nilpotent, bool):
        extra = [nilpotent] * len(gens)
    else:
        extra = list(nilpotent)
        if len(extra) != len(gens):
            raise ValueError(f"need {len(gens)} nilpotency flags, got {len(extra)}")
    flags = [lam[(g, g)] == MINUS_ONE or bool(f) for g, f in zip(gens, extra)]
    return GradedAlgebra(spec, gens, lam, flags, n=1, bicharacter=eps)


def new_flux_algebra(N: int, n: int = 1) -> GradedAlgebra:
    """Flux model at filling factor n/N over (Z_2)^N.

    Theta_i^a Theta_j^b = eps_ij Theta_j^b Theta_i^a when a = b and
    -eps_ij Theta_j^b Theta_i^a when a != b; every generator squares to zero.
    """
    if N < 1 or n < 1:
        raise ValueError(f"need N >= 1 and n >= 1, got N={N}, n={n}")
    eps = flux_bicharacter(N)
    gens = _flux_generators(eps.spec, n)
    lam = _multiparticle_lambda(eps, gens)
    return GradedAlgebra(
        eps.spec, gens, lam, [True] * len(gens), n=n, bicharacter=eps, flux_model=True
    )


def filling_factor(ctx: GradedAlgebra) -> Fraction:
    return ctx.filling_factor()
