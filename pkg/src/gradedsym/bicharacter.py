"""Bicharacters (commutation factors) on grading groups.

A :class:`Bicharacter` is given in the standard form

    eps(a, b) = (-1)**(a|b) * q**<a|b>

with an integer symmetric biform ``(.|.)``, an integer skew biform
``<.|.>`` and a root of unity ``q``.  Anything with a ``spec`` attribute
and a ``__call__(a, b) -> Phase`` can be handed to the verifiers, which is
how deliberately broken tables (:class:`CommutationTable`) are checked.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Hashable, Sequence

import numpy as np

from .grading import INF, GradeVector, GroupSpec, SpecMismatchError
from .phase import MINUS_ONE, ONE, Phase

EXHAUSTIVE_LIMIT = 4096
_CHUNK_CELLS = 1 << 22  # cap on array cells per vectorized verification block


@dataclass(frozen=True)
class Biform:
    matrix: tuple
    kind: str  # "symmetric" or "skew"

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("biform matrix must be square")
        if self.kind == "symmetric":
            ok = all(rows[i][j] == rows[j][i] for i in range(n) for j in range(n))
        elif self.kind == "skew":
            ok = all(rows[i][j] == -rows[j][i] for i in range(n) for j in range(n))
        else:
            raise ValueError(f"unknown biform kind {self.kind!r}")
        if not ok:
            raise ValueError(f"matrix is not {self.kind}")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def zeros(cls, n: int, kind: str) -> Biform:
        return cls(((0,) * n,) * n, kind)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __call__(self, a: Sequence[int], b: Sequence[int]) -> int:
        return sum(
            ai * mij * bj
            for ai, row in zip(a, self.matrix)
            if ai
            for mij, bj in zip(row, b)
        )


class Bicharacter:
    """eps(a, b) = (-1)**(a|b) * q**<a|b> on ``spec``.

    Construction fails unless the value is well defined on the quotient,
    i.e. eps(m_i * sigma_i, sigma_j) = eps(sigma_j, m_i * sigma_i) = 1 for
    every finite modulus m_i.
    """

    def __init__(self, spec: GroupSpec, sym: Biform, skew: Biform, q: Phase = ONE):
        if sym.kind != "symmetric" or skew.kind != "skew":
            raise ValueError("need a symmetric and a skew biform")
        if sym.rank != spec.rank or skew.rank != spec.rank:
            raise SpecMismatchError(
                f"biform rank {sym.rank}/{skew.rank} does not match group rank {spec.rank}"
            )
        self.spec = spec
        self.sym = sym
        self.skew = skew
        self.q = q
        self._check_well_defined()

    def _raw(self, a: Sequence[int], b: Sequence[int]) -> Phase:
        qd = self.q.den
        D = qd if qd % 2 == 0 else 2 * qd
        return Phase(
            self.sym(a, b) * (D // 2) + self.skew(a, b) * self.q.num * (D // qd), D
        )

    def _check_well_defined(self) -> None:
        unit = [[int(i == j) for j in range(self.spec.rank)] for i in range(self.spec.rank)]
        for i, m in enumerate(self.spec.moduli):
            if m is INF:
                continue
            wrap = [m * x for x in unit[i]]
            for j in range(self.spec.rank):
                if self._raw(wrap, unit[j]) != ONE or self._raw(unit[j], wrap) != ONE:
                    raise ValueError(
                        f"bicharacter is not well defined on {self.spec}: "
                        f"changing component {i + 1} by {m} alters eps against sigma_{j + 1}"
                    )

    def __call__(self, a: GradeVector, b: GradeVector) -> Phase:
        if a.spec != self.spec or b.spec != self.spec:
            raise SpecMismatchError("grade vectors do not belong to this bicharacter's group")
        return self._raw(a.components, b.components)

    eval = __call__

    def generator_table(self) -> list[list[Phase]]:
        """eps_ij = eps(sigma_i, sigma_j), 0-based lists."""
        gens = self.spec.generators()
        return [[self(a, b) for b in gens] for a in gens]

    def phase_table(self, elements: Sequence[GradeVector]) -> tuple[int, np.ndarray]:
        """All values on ``elements`` as numerators over a common denominator."""
        D = math.lcm(2, self.q.den)
        # exponents only matter mod 2 and mod q.den; keeps int64 exact
        s = np.array(self.sym.matrix, dtype=np.int64) % 2
        k = (np.array(self.skew.matrix, dtype=np.int64) * self.q.num) % self.q.den
        X = np.array([g.components for g in elements], dtype=np.int64)
        if not self.spec.is_finite:
            X = X % (2 * self.q.den)
        sv = (X @ s @ X.T) % 2
        kv = (X @ k @ X.T) % self.q.den
        return D, (sv * (D // 2) + kv * (D // self.q.den)) % D

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "sym": [list(r) for r in self.sym.matrix],
            "skew": [list(r) for r in self.skew.matrix],
            "q": str(self.q),
        }

    @classmethod
    def from_json(cls, data: dict) -> Bicharacter:
        spec = GroupSpec.from_json(data["spec"])
        return cls(
            spec,
            Biform(data["sym"], "symmetric"),
            Biform(data["skew"], "skew"),
            Phase.parse(data.get("q", "0/1")),
        )

    def __repr__(self) -> str:
        return f"Bicharacter({self.spec}, q={self.q})"


def trivial_bicharacter(spec: GroupSpec) -> Bicharacter:
    n = spec.rank
    return Bicharacter(spec, Biform.zeros(n, "symmetric"), Biform.zeros(n, "skew"))


def bichar_eval(e: Bicharacter, a: GradeVector, b: GradeVector) -> Phase:
    return e(a, b)


class CommutationTable:
    """A commutation factor given by a base map plus pointwise overrides.

    Overrides need not respect bilinearity; this is how counterexamples for
    the verifiers are built.
    """

    def __init__(self, base: Bicharacter, overrides: dict | None = None):
        self.spec = base.spec
        self.base = base
        self.overrides = {}
        for (a, b), v in (overrides or {}).items():
            a = self.spec.element(a.components if isinstance(a, GradeVector) else a)
            b = self.spec.element(b.components if isinstance(b, GradeVector) else b)
            self.overrides[(a.components, b.components)] = v

    def __call__(self, a: GradeVector, b: GradeVector) -> Phase:
        v = self.overrides.get((a.components, b.components))
        return v if v is not None else self.base(a, b)

    def phase_table(self, elements):
        base_den, T = self.base.phase_table(elements)
        D = math.lcm(base_den, *(v.den for v in self.overrides.values()))
        T = T * (D // base_den)
        pos = {g.components: i for i, g in enumerate(elements)}
        for (a, b), v in self.overrides.items():
            if a in pos and b in pos:
                T[pos[a], pos[b]] = v.num * (D // v.den)
        return D, T

    def to_json(self) -> dict:
        data = self.base.to_json()
        data["overrides"] = [
            {"a": list(a), "b": list(b), "value": str(v)}
            for (a, b), v in sorted(self.overrides.items())
        ]
        return data


# -- flux model ---------------------------------------------------------------


def flux_generator_table(N: int, omega_sign: int = 1) -> list[list[Phase]]:
    """eps_ij = -(-1)**N * (-1)**Omega_ij straight from the model definition.

    ``omega_sign`` picks the convention Omega_ij = omega_sign for i < j
    (and -omega_sign for i > j); the values do not depend on it.
    """
    table = []
    for i in range(N):
        row = []
        for j in range(N):
            omega = 0 if i == j else (omega_sign if i < j else -omega_sign)
            row.append(MINUS_ONE * MINUS_ONE**N * MINUS_ONE**omega)
        table.append(row)
    return table


def flux_bicharacter(N: int) -> Bicharacter:
    """The flux-model bicharacter on (Z_2)^N.

    Realized with q = -1, zero skew form and a symmetric form with N + 1 on
    the diagonal and N off it, so eps_ii = -(-1)**N and eps_ij = (-1)**N.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    spec = GroupSpec.cyclic(2, N)
    sym = Biform(
        tuple(tuple(N + 1 if i == j else N for j in range(N)) for i in range(N)),
        "symmetric",
    )
    e = Bicharacter(spec, sym, Biform.zeros(N, "skew"), MINUS_ONE)
    if e.generator_table() != flux_generator_table(N):
        raise AssertionError(f"flux bicharacter for N={N} does not match its generator table")
    return e


# -- verification -------------------------------------------------------------


@dataclass
class Report:
    name: str
    passed: bool
    checked: int
    violations: int = 0
    witnesses: list = field(default_factory=list)
    exhaustive: bool = True

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "checked": self.checked,
            "violations": self.violations,
            "exhaustive": self.exhaustive,
            "witnesses": self.witnesses,
        }

    def __bool__(self) -> bool:
        return self.passed


def _lists(*gs: GradeVector) -> list:
    return [list(g.components) for g in gs]


def _table(eps, elements) -> tuple[int, np.ndarray]:
    if hasattr(eps, "phase_table"):
        return eps.phase_table(elements)
    vals = [[eps(a, b) for b in elements] for a in elements]
    D = math.lcm(*(v.den for row in vals for v in row))
    T = np.array([[v.num * (D // v.den) for v in row] for row in vals], dtype=np.int64)
    return D, T


def _add_table(spec: GroupSpec, elements) -> np.ndarray:
    return np.array([[spec.index(a + b) for b in elements] for a in elements], dtype=np.int64)


def _sample(spec: GroupSpec, rng: random.Random, spread: int) -> GradeVector:
    return spec.element(
        [rng.randint(-spread, spread) if m is INF else rng.randrange(m) for m in spec.moduli]
    )


def _use_exhaustive(spec: GroupSpec, limit: int) -> bool:
    return spec.is_finite and spec.order <= limit


def verify_bicharacter(
    eps,
    *,
    seed: int = 0,
    samples: int = 2000,
    spread: int = 6,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
    max_witnesses: int = 20,
) -> Report:
    """Check eps(a, b+c) = eps(a,b)eps(a,c) and eps(a+b, c) = eps(a,c)eps(b,c).

    Exhaustive over all triples when the group is finite with at most
    ``exhaustive_limit`` elements, otherwise ``samples`` random triples drawn
    with ``seed``.
    """
    spec = eps.spec
    found: set = set()
    violations = 0
    if _use_exhaustive(spec, exhaustive_limit):
        elements = list(spec.elements())
        o = len(elements)
        D, T = _table(eps, elements)
        A = _add_table(spec, elements)
        rows = max(1, _CHUNK_CELLS // (o * o))
        for start in range(0, o, rows):
            sl = slice(start, min(o, start + rows))
            # second slot: T[a, b+c] vs T[a,b] + T[a,c]
            lhs = T[sl][:, A]
            rhs = (T[sl, :, None] + T[sl, None, :]) % D
            bad = np.argwhere(lhs != rhs)
            # first slot: T[a+b, c] vs T[a,c] + T[b,c]
            lhs = T[A[sl]]
            rhs = (T[sl, None, :] + T[None, :, :]) % D
            bad2 = np.argwhere(lhs != rhs)
            violations += len(bad) + len(bad2)
            for law, hits in (("second", bad), ("first", bad2)):
                for a, b, c in hits[: max_witnesses]:
                    found.add((law, start + int(a), int(b), int(c)))
        witnesses = [
            {"law": f"additive-in-{law}", "args": _lists(elements[a], elements[b], elements[c])}
            for law, a, b, c in sorted(found, key=lambda t: (t[1], t[2], t[3], t[0]))
        ][:max_witnesses]
        return Report("bicharacter", violations == 0, o**3, violations, witnesses)

    rng = random.Random(seed)
    witnesses = []
    for _ in range(samples):
        a, b, c = (_sample(spec, rng, spread) for _ in range(3))
        for law, ok in (
            ("second", eps(a, b + c) == eps(a, b) * eps(a, c)),
            ("first", eps(a + b, c) == eps(a, c) * eps(b, c)),
        ):
            if not ok:
                violations += 1
                witnesses.append({"law": f"additive-in-{law}", "args": _lists(a, b, c)})
    witnesses.sort(key=lambda w: (w["args"], w["law"]))
    return Report(
        "bicharacter", violations == 0, samples, violations, witnesses[:max_witnesses], False
    )


def verify_normalized(
    eps,
    *,
    seed: int = 0,
    samples: int = 2000,
    spread: int = 6,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
    max_witnesses: int = 20,
) -> Report:
    """Check eps(a, b) * eps(b, a) = 1."""
    spec = eps.spec
    if _use_exhaustive(spec, exhaustive_limit):
        elements = list(spec.elements())
        D, T = _table(eps, elements)
        bad = np.argwhere((T + T.T) % D != 0)
        witnesses = [
            {"args": _lists(elements[a], elements[b])} for a, b in bad[:max_witnesses]
        ]
        return Report("normalized", len(bad) == 0, len(elements) ** 2, len(bad), witnesses)

    rng = random.Random(seed)
    witnesses = []
    for _ in range(samples):
        a, b = _sample(spec, rng, spread), _sample(spec, rng, spread)
        if eps(a, b) * eps(b, a) != ONE:
            witnesses.append({"args": _lists(a, b)})
    violations = len(witnesses)
    witnesses.sort(key=lambda w: w["args"])
    return Report(
        "normalized", violations == 0, samples, violations, witnesses[:max_witnesses], False
    )


# -- braiding -----------------------------------------------------------------


@dataclass(frozen=True)
class BasisVector:
    """A homogeneous basis vector of a graded space."""

    label: Hashable
    grade: GradeVector

    def __str__(self) -> str:
        return str(self.label)


def braiding_apply(eps, u: BasisVector, v: BasisVector) -> tuple[Phase, tuple]:
    """Psi(u (x) v) = eps(grade v, grade u) * (v (x) u)."""
    if not isinstance(u, BasisVector) or not isinstance(v, BasisVector):
        raise TypeError("braiding acts on homogeneous basis vectors")
    return eps(v.grade, u.grade), (v, u)


def single_particle_basis(spec: GroupSpec) -> list[BasisVector]:
    """Theta_1..Theta_N with grades sigma_1..sigma_N."""
    return [BasisVector(f"Theta[{i}]", spec.sigma(i)) for i in range(1, spec.rank + 1)]


def _braid_at(eps, pos: int, coeff: Phase, word: tuple) -> tuple[Phase, tuple]:
    """Psi acting on tensor slots ``pos, pos+1`` of a basis word."""
    c, (x, y) = braiding_apply(eps, word[pos], word[pos + 1])
    return coeff * c, word[:pos] + (x, y) + word[pos + 2 :]


def _compose(eps, slots: Sequence[int], word: tuple) -> tuple[Phase, tuple]:
    coeff = ONE
    for pos in slots:
        coeff, word = _braid_at(eps, pos, coeff, word)
    return coeff, word


def verify_ybe(eps, basis: Sequence[BasisVector] | None = None, *, max_witnesses: int = 20) -> Report:
    """(Psi x id)(id x Psi)(Psi x id) = (id x Psi)(Psi x id)(id x Psi) on every basis triple."""
    basis = single_particle_basis(eps.spec) if basis is None else list(basis)
    witnesses, checked, violations = [], 0, 0
    for u in basis:
        for v in basis:
            for w in basis:
                checked += 1
                # rightmost factor acts first
                lhs = _compose(eps, (0, 1, 0), (u, v, w))
                rhs = _compose(eps, (1, 0, 1), (u, v, w))
                if lhs != rhs:
                    violations += 1
                    if len(witnesses) < max_witnesses:
                        witnesses.append({"args": [str(u), str(v), str(w)]})
    return Report("ybe", violations == 0, checked, violations, witnesses)


def verify_braiding_involution(
    eps, basis: Sequence[BasisVector] | None = None, *, max_witnesses: int = 20
) -> Report:
    """Psi o Psi = id on every basis pair (symmetric, not merely braided)."""
    basis = single_particle_basis(eps.spec) if basis is None else list(basis)
    witnesses, checked = [], 0
    for u in basis:
        for v in basis:
            checked += 1
            if _compose(eps, (0, 0), (u, v)) != (ONE, (u, v)):
                witnesses.append({"args": [str(u), str(v)]})
    return Report(
        "braiding-involution", not witnesses, checked, len(witnesses), witnesses[:max_witnesses]
    )
