"""Generalized Fibonacci-Lucas sequences and their identities.

For a positive integer ``l`` the two sequences are

    a_n = l*a_{n-1} + a_{n-2},  a_0 = 0, a_1 = 1
    b_n = l*b_{n-1} + b_{n-2},  b_0 = 2, b_1 = l

so ``l = 1`` gives Fibonacci/Lucas and ``l = 2`` gives Pell/Pell-Lucas.
The mixed sequence ``u_n^{p,q} = p*a_{n-1} + q*b_n`` obeys the same recurrence
with ``u_0 = p + 2q`` and ``u_1 = q*l``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional


class PreconditionError(ValueError):
    """An argument is outside the domain an operation is defined on."""


@dataclass(frozen=True)
class SeqParams:
    l: int

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 1:
            raise PreconditionError(f"l must be a positive integer, got {self.l!r}")

    @property
    def d(self) -> int:
        """The discriminant l^2 + 4."""
        return self.l * self.l + 4


@dataclass(frozen=True)
class GLParams:
    p: int
    q: int


@dataclass(frozen=True)
class QuadExt:
    """The number ``a + b*sqrt(d)`` in Q(sqrt(d))."""

    d: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def _check(self, other: "QuadExt"):
        if self.d != other.d:
            raise ValueError(f"mixed radicands {self.d} and {other.d}")

    def __add__(self, other: "QuadExt") -> "QuadExt":
        self._check(other)
        return QuadExt(self.d, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadExt") -> "QuadExt":
        self._check(other)
        return QuadExt(self.d, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "QuadExt":
        return QuadExt(self.d, -self.a, -self.b)

    def __mul__(self, other: "QuadExt") -> "QuadExt":
        self._check(other)
        return QuadExt(
            self.d,
            self.a * other.a + self.d * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.d, self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other: "QuadExt") -> "QuadExt":
        self._check(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        num = self * other.conjugate()
        return QuadExt(self.d, num.a / n, num.b / n)

    def __pow__(self, k: int) -> "QuadExt":
        if k < 0:
            return QuadExt(self.d, 1, 0) / self ** (-k)
        result = QuadExt(self.d, 1, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0


def roots(params: SeqParams) -> tuple[QuadExt, QuadExt]:
    """The two roots (l +- sqrt(l^2+4))/2 of t^2 = l*t + 1."""
    half = Fraction(1, 2)
    return (
        QuadExt(params.d, Fraction(params.l, 2), half),
        QuadExt(params.d, Fraction(params.l, 2), -half),
    )


@lru_cache(maxsize=None)
def _a_nonneg(l: int, n: int) -> int:
    x, y = 0, 1
    for _ in range(n):
        x, y = y, l * y + x
    return x


@lru_cache(maxsize=None)
def _b_nonneg(l: int, n: int) -> int:
    x, y = 2, l
    for _ in range(n):
        x, y = y, l * y + x
    return x


def seq_a(params: SeqParams, n: int) -> int:
    """a_n, extended to negative n by a_{-n} = (-1)^{n+1} a_n."""
    if n < 0:
        k = -n
        return (-1) ** (k + 1) * _a_nonneg(params.l, k)
    return _a_nonneg(params.l, n)


def seq_b(params: SeqParams, n: int) -> int:
    if n < 0:
        raise PreconditionError(f"b_n is only defined for n >= 0, got n={n}")
    return _b_nonneg(params.l, n)


def fibonacci(n: int) -> int:
    return seq_a(SeqParams(1), n)


def lucas(n: int) -> int:
    return seq_b(SeqParams(1), n)


def _rational_integer(z: QuadExt, what: str) -> int:
    # a nonzero sqrt(d)-part or a fractional result can only come from a bug
    assert z.b == 0, f"{what} has irrational part {z.b}"
    assert z.a.denominator == 1, f"{what} is not integral: {z.a}"
    return z.a.numerator


def binet_a(params: SeqParams, n: int) -> int:
    """a_n from (alpha^n - beta^n)/(alpha - beta), computed in Q(sqrt(l^2+4))."""
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    al, be = roots(params)
    return _rational_integer((al ** n - be ** n) / (al - be), f"binet a_{n}")


def binet_b(params: SeqParams, n: int) -> int:
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    al, be = roots(params)
    return _rational_integer(al ** n + be ** n, f"binet b_{n}")


def u_number(params: SeqParams, gl: GLParams, n: int) -> int:
    """u_n^{p,q} = p*a_{n-1} + q*b_n for n >= 0."""
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    return gl.p * seq_a(params, n - 1) + gl.q * seq_b(params, n)


class IdentityId(str, Enum):
    P31_I = "P31_I"
    P31_II = "P31_II"
    P31_III = "P31_III"
    P31_IV = "P31_IV"
    P31_V = "P31_V"
    P31_VI = "P31_VI"
    P31_VII = "P31_VII"
    P32_I = "P32_I"
    P32_II = "P32_II"
    R35 = "R35"


# identities taking a second index m
TWO_INDEX = frozenset({IdentityId.P31_I, IdentityId.P31_II, IdentityId.P31_III, IdentityId.P31_IV})

MIN_N = {i: (1 if i in (IdentityId.P32_I, IdentityId.P32_II, IdentityId.R35) else 0) for i in IdentityId}

# The printed statement of the b-Cassini identity carries (-1)^n; its own
# derivation and the Lucas special case give (-1)^{n-1}.
CASSINI_B_ERRATUM = (
    "b_{n+1}b_{n-1} - b_n^2 equals (-1)^(n-1)(l^2+4); the printed statement "
    "has (-1)^n (e.g. l=1, n=1: b_2*b_0 - b_1^2 = 5, not -5)"
)


@dataclass(frozen=True)
class IdentityReport:
    identity: IdentityId
    l: int
    n: int
    m: Optional[int]
    p: Optional[int]
    q: Optional[int]
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def identity_check(
    identity,
    params: SeqParams,
    n: int,
    m: Optional[int] = None,
    gl: Optional[GLParams] = None,
    *,
    allow_negative_m: bool = False,
) -> IdentityReport:
    """Evaluate both sides of one of the sequence identities exactly.

    ``allow_negative_m`` admits ``m = -1`` for the a-sequence identities
    (P31_II, P31_III), using the negative-index rule for ``a``.
    """
    ident = IdentityId(identity)
    if n < MIN_N[ident]:
        raise PreconditionError(f"{ident.value} requires n >= {MIN_N[ident]}, got n={n}")
    if ident in TWO_INDEX:
        if m is None:
            raise PreconditionError(f"{ident.value} requires m")
        low = -1 if allow_negative_m and ident in (IdentityId.P31_II, IdentityId.P31_III) else 0
        if m < low:
            raise PreconditionError(f"{ident.value} requires m >= {low}, got m={m}")
    else:
        m = None
    if ident is IdentityId.R35 and gl is None:
        raise PreconditionError("R35 requires p and q")

    a = lambda k: seq_a(params, k)  # noqa: E731
    b = lambda k: seq_b(params, k)  # noqa: E731
    d = params.d
    sgn = lambda k: -1 if k % 2 else 1  # noqa: E731

    if ident is IdentityId.P31_I:
        lhs, rhs = b(n) * b(n + m), b(2 * n + m) + sgn(n) * b(m)
    elif ident is IdentityId.P31_II:
        lhs, rhs = a(n) * b(n + m), a(2 * n + m) + sgn(n + 1) * a(m)
    elif ident is IdentityId.P31_III:
        lhs, rhs = a(n + m) * b(n), a(2 * n + m) + sgn(n) * a(m)
    elif ident is IdentityId.P31_IV:
        lhs, rhs = a(n) * a(n + m), Fraction(b(2 * n + m) + sgn(n + 1) * b(m), d)
    elif ident is IdentityId.P31_V:
        lhs, rhs = b(n) + b(n + 2), d * a(n + 1)
    elif ident is IdentityId.P31_VI:
        lhs, rhs = a(n) ** 2 + a(n + 1) ** 2, a(2 * n + 1)
    elif ident is IdentityId.P31_VII:
        lhs, rhs = b(n) ** 2 + b(n + 1) ** 2, d * a(2 * n + 1)
    elif ident is IdentityId.P32_I:
        lhs, rhs = a(n + 1) * a(n - 1) - a(n) ** 2, sgn(n)
    elif ident is IdentityId.P32_II:
        lhs, rhs = b(n + 1) * b(n - 1) - b(n) ** 2, sgn(n - 1) * d
    else:
        lhs = gl.p * a(n + 1) + gl.q * b(n)
        rhs = u_number(params, gl, n) + u_number(params, GLParams(gl.p * params.l, 0), n + 1)

    return IdentityReport(
        identity=ident,
        l=params.l,
        n=n,
        m=m,
        p=gl.p if gl else None,
        q=gl.q if gl else None,
        lhs=Fraction(lhs),
        rhs=Fraction(rhs),
    )


@dataclass(frozen=True)
class ParityFacts:
    b_n_even: bool
    product_residue_mod4: Optional[int]


def parity_facts(params: SeqParams, n: int) -> ParityFacts:
    """Parity of b_n, and b_{n-1}*b_{n+1} mod 4 when n >= 1."""
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    residue = None
    if n >= 1:
        residue = (seq_b(params, n - 1) * seq_b(params, n + 1)) % 4
    return ParityFacts(b_n_even=seq_b(params, n) % 2 == 0, product_residue_mod4=residue)
