"""Small-integer number theory: factoring, sums of squares, Hilbert symbols."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .sequences import PreconditionError

INFINITY = "inf"
Place = Union[int, str]

DEFAULT_TRIAL_LIMIT = 10**6

# deterministic Miller-Rabin witnesses, valid for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


class FactorizationIncomplete(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise FactorizationIncomplete(f"primality of {n} is beyond the deterministic range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)


def factorize(n: int, limit: int = DEFAULT_TRIAL_LIMIT) -> Factorization:
    """Trial division by candidates up to ``limit``.

    A cofactor left over after the trial bound is accepted only if it is
    provably prime (or its square root is below the bound); otherwise
    :class:`FactorizationIncomplete` is raised.
    """
    if n == 0:
        raise PreconditionError("cannot factor 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    factors = []
    p = 2
    while p * p <= m:
        if p > limit:
            if is_prime(m):
                break
            raise FactorizationIncomplete(f"cofactor {m} of {n} has no factor below {limit}")
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(sign, tuple(factors))


def two_squares_criterion(n: int) -> bool:
    """True iff every prime p = 3 (mod 4) divides n to an even power."""
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3)


@dataclass(frozen=True)
class TwoSquares:
    x: int
    y: int

    @property
    def value(self) -> int:
        return self.x * self.x + self.y * self.y


def two_squares(n: int) -> Optional[TwoSquares]:
    """Exhaustive search for n = x^2 + y^2 with x >= y >= 0."""
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    for y in range(isqrt(n // 2) + 1):
        r = n - y * y
        x = isqrt(r)
        if x * x == r:
            return TwoSquares(x, y)
    return None


def rep_x2_9y2(n: int) -> Optional[tuple[int, int]]:
    """Smallest-y solution of n = x^2 + 9y^2 in nonnegative integers."""
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    for y in range(isqrt(n // 9) + 1):
        r = n - 9 * y * y
        x = isqrt(r)
        if x * x == r:
            return x, y
    return None


def pythagorean_family(m: int, a: int, b: int) -> tuple[int, int, int]:
    """A solution (a^2 - m b^2, 2ab, a^2 + m b^2) of x^2 + m y^2 = z^2.

    The middle coordinate is 2ab; 2mab does not satisfy the equation
    unless m = 1 or ab = 0.
    """
    x, y, z = a * a - m * b * b, 2 * a * b, a * a + m * b * b
    assert x * x + m * y * y == z * z
    return x, y, z


PYTHAGOREAN_ERRATUM = (
    "x^2 + m y^2 = z^2 is solved by (a^2 - m b^2, 2ab, a^2 + m b^2); "
    "the printed y = 2mab fails, e.g. m=5, a=2, b=1 gives 1 + 5*400 != 81"
)


def legendre_symbol(a: int, p: int) -> int:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise PreconditionError(f"{p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _square_class_int(x) -> int:
    # num/den and num*den differ by the square den^2
    x = Fraction(x)
    if x == 0:
        raise PreconditionError("Hilbert symbol arguments must be nonzero")
    return x.numerator * x.denominator


def _split(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_symbol(a, b, place: Place) -> int:
    """The local Hilbert symbol (a, b)_v for nonzero rationals a, b.

    ``place`` is a prime number or ``"inf"`` for the real place.
    """
    x, y = _square_class_int(a), _square_class_int(b)
    if place == INFINITY:
        return -1 if x < 0 and y < 0 else 1
    p = int(place)
    if not is_prime(p):
        raise PreconditionError(f"{place!r} is not a place of Q")
    va, ua = _split(x, p)
    vb, ub = _split(y, p)
    if p == 2:
        eps = lambda u: ((u - 1) // 2) % 2  # noqa: E731
        omega = lambda u: ((u * u - 1) // 8) % 2  # noqa: E731
        ua, ub = ua % 8, ub % 8
        e = eps(ua) * eps(ub) + va * omega(ub) + vb * omega(ua)
        return -1 if e % 2 else 1
    s = -1 if (va * vb * ((p - 1) // 2)) % 2 else 1
    if vb % 2:
        s *= legendre_symbol(ua, p)
    if va % 2:
        s *= legendre_symbol(ub, p)
    return s


def relevant_places(a, b, limit: int = DEFAULT_TRIAL_LIMIT) -> list[Place]:
    """Places where (a, b)_v can be -1: infinity, 2 and odd primes of a, b."""
    primes = set()
    for x in (Fraction(a), Fraction(b)):
        for part in (x.numerator, x.denominator):
            primes.update(p for p, _ in factorize(part, limit).factors if p != 2)
    return [INFINITY, 2] + sorted(primes)
