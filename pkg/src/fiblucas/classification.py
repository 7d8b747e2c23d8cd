"""Split/division classification of H_Q(alpha, beta) with checkable evidence.

The algebra splits iff the conic alpha x^2 + beta y^2 = z^2 has a nontrivial
rational point, iff the Hilbert symbol (alpha, beta)_v is +1 at every place v.
Every :class:`Classification` carries evidence that :meth:`Classification.recheck`
verifies from scratch.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt, prod
from typing import Optional, Union

from .numthy import (
    Place,
    hilbert_symbol,
    pythagorean_family,
    relevant_places,
    rep_x2_9y2,
    two_squares,
    two_squares_criterion,
)
from .sequences import PreconditionError, SeqParams, fibonacci, seq_a, seq_b

DEFAULT_HEIGHT = 200


class Verdict(str, Enum):
    SPLIT = "SPLIT"
    DIVISION = "DIVISION"


@dataclass(frozen=True)
class ConicPoint:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


@dataclass(frozen=True)
class PositiveDefiniteNorm:
    """alpha < 0 and beta < 0: the norm form is positive definite."""


@dataclass(frozen=True)
class Mod4Obstruction:
    """-x^2 + m y^2 = z^2 with m = 3 (mod 4) has no nontrivial solution."""

    m: int
    residue: int


@dataclass(frozen=True)
class HilbertEvidence:
    symbols: tuple[tuple[Place, int], ...]


Evidence = Union[ConicPoint, PositiveDefiniteNorm, Mod4Obstruction, HilbertEvidence]


@dataclass(frozen=True)
class Classification:
    alpha: Fraction
    beta: Fraction
    verdict: Verdict
    evidence: Evidence
    label: str = field(default="", compare=False)

    def recheck(self) -> bool:
        """Re-verify the evidence independently of how it was produced."""
        ev = self.evidence
        if isinstance(ev, ConicPoint):
            return self.verdict is Verdict.SPLIT and verify_conic_point(self.alpha, self.beta, ev)
        if isinstance(ev, PositiveDefiniteNorm):
            return self.verdict is Verdict.DIVISION and self.alpha < 0 and self.beta < 0
        if isinstance(ev, Mod4Obstruction):
            return (
                self.verdict is Verdict.DIVISION
                and self.alpha == -1
                and self.beta == ev.m
                and ev.m % 4 == 3
                and ev.residue == 3
            )
        if isinstance(ev, HilbertEvidence):
            recomputed = tuple((v, hilbert_symbol(self.alpha, self.beta, v)) for v in dict(ev.symbols))
            if recomputed != ev.symbols:
                return False
            has_minus = any(s == -1 for _, s in ev.symbols)
            if self.verdict is Verdict.DIVISION:
                return has_minus
            # SPLIT needs every place that could carry -1
            places = set(relevant_places(self.alpha, self.beta))
            return not has_minus and places <= set(dict(ev.symbols))
        return False


def verify_conic_point(alpha, beta, pt: ConicPoint) -> bool:
    if pt.x == 0 and pt.y == 0 and pt.z == 0:
        return False
    return Fraction(alpha) * pt.x**2 + Fraction(beta) * pt.y**2 == pt.z**2


def conic_search(alpha, beta, height: int = DEFAULT_HEIGHT) -> Optional[ConicPoint]:
    """Scan integer 0 <= x, y <= height for alpha x^2 + beta y^2 = z^2.

    Returns the lexicographically smallest (x, y) hit with z >= 0. Not finding
    a point says nothing about whether the algebra is a division algebra.
    """
    if height < 1:
        raise PreconditionError(f"height must be >= 1, got {height}")
    alpha, beta = Fraction(alpha), Fraction(beta)
    # z^2 = (A x^2 + B y^2) / L with integers A, B, L
    L = alpha.denominator * beta.denominator
    A, B = int(alpha * L), int(beta * L)
    for x in range(height + 1):
        ax = A * x * x
        for y in range(height + 1):
            if x == 0 and y == 0:
                continue
            v, r = divmod(ax + B * y * y, L)
            if r or v < 0:
                continue
            z = isqrt(v)
            if z * z == v:
                return ConicPoint(x, y, z)
    return None


def local_symbols(alpha, beta) -> tuple[tuple[Place, int], ...]:
    symbols = tuple((v, hilbert_symbol(alpha, beta, v)) for v in relevant_places(alpha, beta))
    if prod(s for _, s in symbols) != 1:
        raise ArithmeticError(f"Hilbert reciprocity violated for ({alpha}, {beta}): {symbols}")
    return symbols


def classify(alpha, beta, height: int = DEFAULT_HEIGHT) -> Classification:
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == 0 or beta == 0:
        raise PreconditionError("alpha and beta must be nonzero")
    symbols = local_symbols(alpha, beta)
    if any(s == -1 for _, s in symbols):
        return Classification(alpha, beta, Verdict.DIVISION, HilbertEvidence(symbols))
    pt = conic_search(alpha, beta, height)
    evidence = pt if pt is not None else HilbertEvidence(symbols)
    return Classification(alpha, beta, Verdict.SPLIT, evidence)


FAMILY_CASES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi")

_L1_ONLY = {"i", "ii", "v"}


def _sgn(k: int) -> int:
    return -1 if k % 2 else 1


def family_certificate(case: str, params: SeqParams, n: int) -> Classification:
    """The explicit split/division certificate for one member of a sequence family.

    Cases i, ii and v are the Fibonacci/Lucas (l = 1) forms of iii, iv and vi.
    """
    case = case.lower()
    if case not in FAMILY_CASES:
        raise PreconditionError(f"unknown case {case!r}")
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if case in _L1_ONLY and params.l != 1:
        raise PreconditionError(f"case {case} is the l = 1 specialization; got l={params.l}")

    a = lambda k: seq_a(params, k)  # noqa: E731
    b = lambda k: seq_b(params, k)  # noqa: E731
    label = f"case {case}, l={params.l}, n={n}"

    def split(alpha, beta, x, y, z) -> Classification:
        c = Classification(Fraction(alpha), Fraction(beta), Verdict.SPLIT, ConicPoint(x, y, z), label)
        assert c.recheck(), f"certificate failed for {label}"
        return c

    if case in ("i", "iii"):
        return split(-1, a(2 * n + 1), a(n), 1, a(n + 1))
    if case in ("ii", "iv"):
        return split(-1, params.d * a(2 * n + 1), b(n), 1, b(n + 1))
    if case in ("v", "vi"):
        return split(-1, a(2 * n + 1) * a(2 * n - 1), _sgn(n), 1, a(2 * n))
    if case == "vii":
        c = Classification(
            Fraction(-1), Fraction(-b(n + 1) * b(n - 1)), Verdict.DIVISION, PositiveDefiniteNorm(), label
        )
        assert c.recheck()
        return c
    if case == "viii":
        m = b(n + 1) * b(n - 1)
        x, y, z = pythagorean_family(m, 1, 1)
        return split(1, m, x, y, z)
    if case == "ix":
        if params.l % 2 == 0 or n % 6 != 0:
            raise PreconditionError(f"case ix needs l odd and n = 0 (mod 6); got l={params.l}, n={n}")
        m = b(n + 1) * b(n - 1)
        c = Classification(Fraction(-1), Fraction(m), Verdict.DIVISION, Mod4Obstruction(m, m % 4), label)
        if not c.recheck():
            raise ArithmeticError(f"{label}: b_(n+1) b_(n-1) = {m} is {m % 4} mod 4, expected 3")
        if classify(-1, m).verdict is not Verdict.DIVISION:
            raise ArithmeticError(f"{label}: Hilbert symbols disagree with the mod-4 obstruction")
        return c
    if case == "x":
        if n % 6 == 0:
            raise PreconditionError(f"case x needs 6 not dividing n; got n={n}")
        m = b(n + 1) * b(n - 1)
        if not two_squares_criterion(m):
            raise PreconditionError(
                f"criterion not satisfied: {m} has a prime = 3 (mod 4) to an odd power"
            )
        rep = two_squares(m)
        return split(-1, m, rep.x, 1, rep.y)
    # case xi
    if n % 16 != 7:
        raise PreconditionError(f"case xi needs n = 7 (mod 16); got n={n}")
    f = fibonacci(n)
    rep = rep_x2_9y2(f)
    if rep is None:
        raise ArithmeticError(f"{label}: f_{n} = {f} has no representation x^2 + 9y^2")
    z0, x0 = rep
    return split(-9, f, x0, 1, z0)


__all__ = [
    "ConicPoint",
    "Classification",
    "DEFAULT_HEIGHT",
    "FAMILY_CASES",
    "HilbertEvidence",
    "Mod4Obstruction",
    "PositiveDefiniteNorm",
    "Verdict",
    "classify",
    "conic_search",
    "family_certificate",
    "local_symbols",
    "verify_conic_point",
]
