"""The cyclotomic field Q(eps), eps^2 + eps + 1 = 0, and the degree-3 symbol
algebra over it generated by x, y with x^3 = alpha1, y^3 = alpha2, yx = eps*xy.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional

from .sequences import GLParams, PreconditionError, SeqParams, fibonacci, lucas, u_number


@dataclass(frozen=True)
class CycRat:
    """a + b*eps with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def coerce(cls, v) -> "CycRat":
        return v if isinstance(v, CycRat) else cls(v)

    def __add__(self, other) -> "CycRat":
        other = CycRat.coerce(other)
        return CycRat(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> "CycRat":
        other = CycRat.coerce(other)
        return CycRat(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "CycRat":
        return CycRat(-self.a, -self.b)

    def __mul__(self, other) -> "CycRat":
        other = CycRat.coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return CycRat(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycRat":
        if k < 0:
            return self.inverse() ** (-k)
        r = CycRat(1)
        for _ in range(k):
            r = r * self
        return r

    def conjugate(self) -> "CycRat":
        # eps -> eps^2 = -1 - eps
        return CycRat(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "CycRat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(eps)")
        c = self.conjugate()
        return CycRat(c.a / n, c.b / n)

    def __truediv__(self, other) -> "CycRat":
        return self * CycRat.coerce(other).inverse()

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1


EPS = CycRat(0, 1)


def cyc_mul(u: CycRat, v: CycRat) -> CycRat:
    return u * v


def cyc_inv(u: CycRat) -> CycRat:
    return u.inverse()


# basis slot t holds x^(t % 3) y^(t // 3): 1, x, x^2, y, xy, x^2y, y^2, xy^2, x^2y^2
BASIS_LABELS = ("1", "x", "x^2", "y", "xy", "x^2y", "y^2", "xy^2", "x^2y^2")


def slot(j1: int, j2: int) -> int:
    return j1 + 3 * j2


@dataclass(frozen=True)
class SymAlgebra:
    alpha1: CycRat
    alpha2: CycRat

    def __post_init__(self):
        object.__setattr__(self, "alpha1", CycRat.coerce(self.alpha1))
        object.__setattr__(self, "alpha2", CycRat.coerce(self.alpha2))
        if not self.alpha1 or not self.alpha2:
            raise PreconditionError("symbol algebra parameters must be nonzero")

    def element(self, coeffs: Iterable) -> "SymbolElem":
        return SymbolElem(self, tuple(coeffs))

    def monomial(self, j1: int, j2: int, coeff=1) -> "SymbolElem":
        c = [CycRat()] * 9
        c[slot(j1, j2)] = CycRat.coerce(coeff)
        return SymbolElem(self, tuple(c))

    def zero(self) -> "SymbolElem":
        return SymbolElem(self, (CycRat(),) * 9)

    def one(self) -> "SymbolElem":
        return self.monomial(0, 0)

    @property
    def x(self) -> "SymbolElem":
        return self.monomial(1, 0)

    @property
    def y(self) -> "SymbolElem":
        return self.monomial(0, 1)

    def is_integral(self) -> bool:
        return self.alpha1.is_integral() and self.alpha2.is_integral()


def _monomial_product(alg: SymAlgebra, a: int, b: int, c: int, d: int) -> tuple[CycRat, int]:
    """(x^a y^b)(x^c y^d) = coeff * x^j1 y^j2; returns (coeff, slot)."""
    coeff = EPS ** ((b * c) % 3)
    j1, j2 = a + c, b + d
    if j1 >= 3:
        coeff, j1 = coeff * alg.alpha1, j1 - 3
    if j2 >= 3:
        coeff, j2 = coeff * alg.alpha2, j2 - 3
    return coeff, slot(j1, j2)


@dataclass(frozen=True)
class SymbolElem:
    algebra: SymAlgebra
    coeffs: tuple[CycRat, ...]

    def __post_init__(self):
        if len(self.coeffs) != 9:
            raise ValueError(f"a symbol element has 9 coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(CycRat.coerce(v) for v in self.coeffs))

    def _same(self, other: "SymbolElem"):
        if self.algebra != other.algebra:
            raise ValueError(f"algebra mismatch: {self.algebra} vs {other.algebra}")

    def __getitem__(self, j: tuple[int, int]) -> CycRat:
        return self.coeffs[slot(*j)]

    def __add__(self, other: "SymbolElem") -> "SymbolElem":
        self._same(other)
        return SymbolElem(self.algebra, tuple(u + v for u, v in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SymbolElem") -> "SymbolElem":
        self._same(other)
        return SymbolElem(self.algebra, tuple(u - v for u, v in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "SymbolElem":
        return SymbolElem(self.algebra, tuple(-u for u in self.coeffs))

    def scale(self, s) -> "SymbolElem":
        s = CycRat.coerce(s)
        return SymbolElem(self.algebra, tuple(s * u for u in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, SymbolElem):
            return self.scale(other)
        self._same(other)
        out = [CycRat()] * 9
        for s, u in enumerate(self.coeffs):
            if not u:
                continue
            for t, v in enumerate(other.coeffs):
                if not v:
                    continue
                coeff, k = _monomial_product(self.algebra, s % 3, s // 3, t % 3, t // 3)
                out[k] = out[k] + u * v * coeff
        return SymbolElem(self.algebra, tuple(out))

    def __rmul__(self, s) -> "SymbolElem":
        return self.scale(s)

    def __pow__(self, k: int) -> "SymbolElem":
        r = self.algebra.one()
        for _ in range(k):
            r = r * self
        return r

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs)


def sym_add(u: SymbolElem, v: SymbolElem) -> SymbolElem:
    return u + v


def sym_scale(s, u: SymbolElem) -> SymbolElem:
    return u.scale(s)


def sym_mul(u: SymbolElem, v: SymbolElem) -> SymbolElem:
    return u * v


class SequenceKind(str, Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    U = "u"


def sym_from_sequence(
    kind,
    n: int,
    algebra: SymAlgebra,
    params: Optional[SeqParams] = None,
    gl: Optional[GLParams] = None,
) -> SymbolElem:
    """Place nine consecutive sequence terms s_n, ..., s_{n+8} on the basis.

    ``kind`` U needs ``params`` (for l) and ``gl`` (for p, q).
    """
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    kind = SequenceKind(kind)
    if kind is SequenceKind.FIBONACCI:
        term = fibonacci
    elif kind is SequenceKind.LUCAS:
        term = lucas
    else:
        if params is None or gl is None:
            raise PreconditionError("U symbol elements need l, p and q")
        term = lambda k: u_number(params, gl, k)  # noqa: E731
    return SymbolElem(algebra, tuple(CycRat(term(n + t)) for t in range(9)))


def u_symbol(params: SeqParams, gl: GLParams, n: int, algebra: SymAlgebra) -> SymbolElem:
    return sym_from_sequence(SequenceKind.U, n, algebra, params, gl)
