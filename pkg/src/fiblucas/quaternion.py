"""Generalized quaternion algebras H_Q(alpha, beta).

Basis is ``(1, i, j, k)`` with ``i^2 = alpha``, ``j^2 = beta``, ``ij = -ji = k``.
In the e-notation ``{1, e2, e3, e4}`` this is ``e2 = i``, ``e3 = j``, ``e4 = k``;
the index-shifted notation ``{1, e1, e2, e3}`` used for the U_n quaternions
maps to the same four slots in order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .sequences import GLParams, PreconditionError, SeqParams, u_number


@dataclass(frozen=True)
class QuatAlgebra:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha == 0 or self.beta == 0:
            raise PreconditionError("quaternion algebra parameters must be nonzero")

    def element(self, coords: Iterable) -> "Quaternion":
        return Quaternion(self, tuple(coords))

    def zero(self) -> "Quaternion":
        return Quaternion(self, (0, 0, 0, 0))

    def one(self) -> "Quaternion":
        return Quaternion(self, (1, 0, 0, 0))

    def basis(self) -> tuple["Quaternion", ...]:
        return tuple(Quaternion(self, tuple(int(r == c) for c in range(4))) for r in range(4))

    def is_integral(self) -> bool:
        return self.alpha.denominator == 1 and self.beta.denominator == 1


@dataclass(frozen=True)
class Quaternion:
    algebra: QuatAlgebra
    c: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        if len(self.c) != 4:
            raise ValueError(f"a quaternion has 4 coordinates, got {len(self.c)}")
        object.__setattr__(self, "c", tuple(Fraction(v) for v in self.c))

    def _same(self, other: "Quaternion"):
        if self.algebra != other.algebra:
            raise ValueError(f"algebra mismatch: {self.algebra} vs {other.algebra}")

    def __add__(self, other: "Quaternion") -> "Quaternion":
        self._same(other)
        return Quaternion(self.algebra, tuple(x + y for x, y in zip(self.c, other.c)))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        self._same(other)
        return Quaternion(self.algebra, tuple(x - y for x, y in zip(self.c, other.c)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(self.algebra, tuple(-x for x in self.c))

    def scale(self, s) -> "Quaternion":
        s = Fraction(s)
        return Quaternion(self.algebra, tuple(s * x for x in self.c))

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return self.scale(other)
        self._same(other)
        a, b = self.algebra.alpha, self.algebra.beta
        x1, x2, x3, x4 = self.c
        y1, y2, y3, y4 = other.c
        return Quaternion(
            self.algebra,
            (
                x1 * y1 + a * x2 * y2 + b * x3 * y3 - a * b * x4 * y4,
                x1 * y2 + x2 * y1 - b * x3 * y4 + b * x4 * y3,
                x1 * y3 + x3 * y1 + a * x2 * y4 - a * x4 * y2,
                x1 * y4 + x4 * y1 + x2 * y3 - x3 * y2,
            ),
        )

    def __rmul__(self, s) -> "Quaternion":
        return self.scale(s)

    def is_zero(self) -> bool:
        return not any(self.c)

    def conjugate(self) -> "Quaternion":
        x1, x2, x3, x4 = self.c
        return Quaternion(self.algebra, (x1, -x2, -x3, -x4))

    def trace(self) -> Fraction:
        return 2 * self.c[0]

    def norm(self) -> Fraction:
        a, b = self.algebra.alpha, self.algebra.beta
        x1, x2, x3, x4 = self.c
        return x1 * x1 - a * x2 * x2 - b * x3 * x3 + a * b * x4 * x4

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.c)


def quat_add(x: Quaternion, y: Quaternion) -> Quaternion:
    return x + y


def quat_scale(s, x: Quaternion) -> Quaternion:
    return x.scale(s)


def quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    return x * y


def conjugate(x: Quaternion) -> Quaternion:
    return x.conjugate()


def trace(x: Quaternion) -> Fraction:
    return x.trace()


def norm(x: Quaternion) -> Fraction:
    return x.norm()


# The printed table lists e4*e2 = -alpha*e2. With e2^2 = alpha and
# e2*e3 = e4 the product is forced: e4*e2 = e2 e3 e2 = -e2 e2 e3 = -alpha*e3.
TABLE_ERRATUM = (
    "e4*e2 = -alpha*e3 (forced by e2^2 = alpha, e2*e3 = -e3*e2 = e4); the printed "
    "table cell -alpha*e2 breaks associativity: (e2*e3)*e2 != e2*(e3*e2)"
)


def u_quaternion(params: SeqParams, gl: GLParams, n: int, algebra: QuatAlgebra) -> Quaternion:
    """U_n^{p,q} = u_n + u_{n+1} i + u_{n+2} j + u_{n+3} k."""
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    return Quaternion(algebra, tuple(u_number(params, gl, n + t) for t in range(4)))
