"""Closure of the sets generated by (l^2+4) U_n^{p,q} under multiplication.

Two routes are checked independently:

* the scalar route rewrites ``(l^2+4) u_n^{p,q} * (l^2+4) u_m^{p',q'}`` as a
  sum of six generators ``(l^2+4) u_k^{P,Q}``;
* the module route takes an actual product of two generators in a quaternion
  or degree-3 symbol algebra and asks whether it is an integer combination
  of ``{(l^2+4) U_k^{1,0}, (l^2+4) U_k^{0,1}} U {1}`` by integer row reduction.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

from .quaternion import QuatAlgebra, Quaternion, u_quaternion
from .sequences import GLParams, PreconditionError, SeqParams, u_number
from .symbol3 import SymAlgebra, SymbolElem, u_symbol

Algebra = Union[QuatAlgebra, SymAlgebra]
Element = Union[Quaternion, SymbolElem]


@dataclass(frozen=True)
class GeneratorTerm:
    """Stands for (l^2+4) u_n^{p,q}, or (l^2+4) U_n^{p,q} inside an algebra."""

    n: int
    p: int
    q: int


@dataclass(frozen=True)
class Combination:
    terms: tuple[GeneratorTerm, ...] = ()
    unit: int = 0


def _sgn(k: int) -> int:
    return -1 if k % 2 else 1


def scalar_product_decompose(params: SeqParams, g1: GeneratorTerm, g2: GeneratorTerm) -> Combination:
    """Six generators summing to (l^2+4)u_n^{p,q} * (l^2+4)u_m^{p',q'}, 1 <= n <= m.

    The two terms carrying a_{m-n+1} use the sign (-1)^n; (-1)^(n-1) there
    does not reproduce the product. For n = m the index m - n = 0 relies on
    a_{-1} = 1.
    """
    n, p, q = g1.n, g1.p, g1.q
    m, p2, q2 = g2.n, g2.p, g2.q
    if n < 1:
        raise PreconditionError(f"first index must be >= 1, got {n}")
    if n > m:
        raise PreconditionError(f"need n <= m, got n={n}, m={m}; swap the operands")
    d, l, s = params.d, params.l, _sgn(n)
    return Combination(
        (
            GeneratorTerm(m + n, d * p * q2, d * q * q2),
            GeneratorTerm(m - n, s * d * p2 * q, s * d * q * q2),
            GeneratorTerm(m - n, s * d * p * q2, s * p * p2),
            GeneratorTerm(m - n + 1, s * l * d * p * q2, 0),
            GeneratorTerm(m + n - 2, d * p2 * q, p * p2),
            GeneratorTerm(m + n - 1, l * d * p2 * q, 0),
        )
    )


# the printed grouping of the scalar decomposition, kept for the errata report
def printed_scalar_decompose(params: SeqParams, g1: GeneratorTerm, g2: GeneratorTerm) -> Combination:
    comb = scalar_product_decompose(params, g1, g2)
    t = list(comb.terms)
    # (-1)^(n-1) instead of (-1)^n on the pq' superscripts of terms 3 and 4
    t[2] = GeneratorTerm(t[2].n, -t[2].p, t[2].q)
    t[3] = GeneratorTerm(t[3].n, -t[3].p, t[3].q)
    return Combination(tuple(t), comb.unit)


DECOMPOSITION_ERRATUM = (
    "in (l^2+4)u_n^{p,q} (l^2+4)u_m^{p',q'} the terms u_{m-n}^{.,(-1)^n pp'} and "
    "u_{m-n+1}^{.,0} need superscript sign (-1)^n on pq', not the printed (-1)^(n-1); "
    "l=1, n=1, m=2, p=q=p'=q'=1: printed gives 150, product is 100"
)


def _generator(params: SeqParams, term: GeneratorTerm, algebra: Optional[Algebra]):
    gl = GLParams(term.p, term.q)
    if algebra is None:
        return params.d * u_number(params, gl, term.n)
    if isinstance(algebra, QuatAlgebra):
        return u_quaternion(params, gl, term.n, algebra).scale(params.d)
    return u_symbol(params, gl, term.n, algebra).scale(params.d)


def generator(params: SeqParams, term: GeneratorTerm, algebra: Optional[Algebra] = None):
    """(l^2+4) u_n^{p,q} as an int, or (l^2+4) U_n^{p,q} in ``algebra``."""
    if term.n < 0:
        raise PreconditionError(f"generator index must be >= 0, got {term.n}")
    return _generator(params, term, algebra)


def eval_combination(params: SeqParams, comb: Combination, algebra: Optional[Algebra] = None):
    """Sum of the generators plus ``unit`` copies of 1; an int when ``algebra`` is None."""
    if algebra is None:
        total = comb.unit
        for t in comb.terms:
            total += generator(params, t)
        return total
    total = algebra.one().scale(comb.unit)
    for t in comb.terms:
        total = total + generator(params, t, algebra)
    return total


def raw_u_sum(params: SeqParams, comb: Combination) -> int:
    """Sum of u_n^{p,q} over the terms, without the (l^2+4) factor."""
    return sum(u_number(params, GLParams(t.p, t.q), t.n) for t in comb.terms)


# integer lattice machinery


def _check_integral(algebra: Algebra):
    if not algebra.is_integral():
        raise PreconditionError(f"lattice membership needs integral structure constants, got {algebra}")


def _coords(elem: Element) -> tuple[int, ...]:
    if not elem.is_integral():
        raise PreconditionError("lattice membership needs integral coordinates")
    if isinstance(elem, Quaternion):
        return tuple(v.numerator for v in elem.c)
    out = []
    for c in elem.coeffs:
        out += [c.a.numerator, c.b.numerator]
    return tuple(out)


@dataclass
class _Row:
    vec: list[int]
    coef: list[int]

    def sub(self, k: int, other: "_Row"):
        if k:
            self.vec = [x - k * y for x, y in zip(self.vec, other.vec)]
            self.coef = [x - k * y for x, y in zip(self.coef, other.coef)]

    def negate(self):
        self.vec = [-x for x in self.vec]
        self.coef = [-x for x in self.coef]


def hermite_rows(vectors: list[tuple[int, ...]]) -> list[tuple[int, _Row]]:
    """Row-style Hermite normal form of the Z-span of ``vectors``.

    Returns ``(pivot_column, row)`` pairs; each row also records the integer
    combination of the input vectors that produces it. Pivots are positive
    and entries above a pivot are reduced into ``[0, pivot)``.
    """
    k = len(vectors)
    if not k:
        return []
    ncols = len(vectors[0])
    remaining = [_Row(list(v), [int(i == j) for j in range(k)]) for i, v in enumerate(vectors)]
    pivots: list[tuple[int, _Row]] = []
    for col in range(ncols):
        active = [r for r in remaining if r.vec[col]]
        rest = [r for r in remaining if not r.vec[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r.vec[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                r.sub(r.vec[col] // piv.vec[col], piv)
                (nxt if r.vec[col] else rest).append(r)
            active = nxt
        if not active:
            continue
        piv = active[0]
        if piv.vec[col] < 0:
            piv.negate()
        for _, prev in pivots:
            prev.sub(prev.vec[col] // piv.vec[col], piv)
        pivots.append((col, piv))
        remaining = rest
    return pivots


def solve_integer(pivots: list[tuple[int, _Row]], target: tuple[int, ...], k: int) -> Optional[list[int]]:
    """Integer coefficients c with sum c_i v_i = target, or None."""
    t = list(target)
    coef = [0] * k
    for col, row in pivots:
        if t[col] % row.vec[col]:
            return None
        s = t[col] // row.vec[col]
        if s:
            t = [x - s * y for x, y in zip(t, row.vec)]
            coef = [x + s * y for x, y in zip(coef, row.coef)]
    if any(t):
        return None
    return coef


def _generator_labels(window: tuple[int, int]) -> list:
    lo, hi = window
    labels: list = []
    for n in range(lo, hi + 1):
        labels += [(n, "p"), (n, "q")]
    return labels + ["unit"]


@lru_cache(maxsize=256)
def _lattice(params: SeqParams, algebra: Algebra, window: tuple[int, int]):
    vecs = []
    for label in _generator_labels(window):
        if label == "unit":
            vecs.append(_coords(algebra.one()))
        else:
            n, which = label
            term = GeneratorTerm(n, 1, 0) if which == "p" else GeneratorTerm(n, 0, 1)
            vecs.append(_coords(generator(params, term, algebra)))
    return hermite_rows(vecs), len(vecs)


def generator_rank(params: SeqParams, algebra: Algebra, window: tuple[int, int]) -> int:
    """Rank of the lattice spanned by the generators with index in ``window`` and 1."""
    _check_integral(algebra)
    return len(_lattice(params, algebra, window)[0])


def ambient_rank(algebra: Algebra) -> int:
    return 4 if isinstance(algebra, QuatAlgebra) else 18


def lattice_membership(
    params: SeqParams, algebra: Algebra, elem: Element, window: tuple[int, int]
) -> Optional[Combination]:
    """A Combination of generators with index in ``window`` equal to ``elem``, or None."""
    _check_integral(algebra)
    if elem.algebra != algebra:
        raise ValueError("element does not belong to the given algebra")
    lo, hi = window
    if lo < 0 or hi < lo:
        raise PreconditionError(f"bad window {window}")
    pivots, k = _lattice(params, algebra, (lo, hi))
    coef = solve_integer(pivots, _coords(elem), k)
    if coef is None:
        return None
    by_index: dict[int, list[int]] = {}
    unit = 0
    for c, label in zip(coef, _generator_labels((lo, hi))):
        if label == "unit":
            unit = c
        elif c:
            n, which = label
            by_index.setdefault(n, [0, 0])[0 if which == "p" else 1] += c
    comb = Combination(tuple(GeneratorTerm(n, p, q) for n, (p, q) in sorted(by_index.items())), unit)
    assert eval_combination(params, comb, algebra) == elem
    return comb


def default_window(n: int, m: int) -> tuple[int, int]:
    return 0, n + m + 4


def membership_with_retry(params: SeqParams, algebra: Algebra, elem: Element, n: int, m: int):
    lo, hi = default_window(n, m)
    witness = lattice_membership(params, algebra, elem, (lo, hi))
    if witness is None:
        witness = lattice_membership(params, algebra, elem, (lo, 2 * hi))
    return witness


@dataclass(frozen=True)
class TrialRecord:
    index: int
    g1: GeneratorTerm
    g2: GeneratorTerm
    decomposition_ok: bool
    membership_ok: bool
    witness: Optional[Combination] = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.decomposition_ok and self.membership_ok


@dataclass(frozen=True)
class ClosureReport:
    l: int
    algebra: Algebra
    trials: int
    seed: int
    records: tuple[TrialRecord, ...]

    @property
    def failures(self) -> tuple[TrialRecord, ...]:
        return tuple(r for r in self.records if not r.ok)

    @property
    def passed(self) -> bool:
        return not self.failures


def decomposition_holds(params: SeqParams, g1: GeneratorTerm, g2: GeneratorTerm) -> bool:
    if g1.n > g2.n:
        g1, g2 = g2, g1
    lhs = generator(params, g1) * generator(params, g2)
    return lhs == eval_combination(params, scalar_product_decompose(params, g1, g2))


def closure_check(
    params: SeqParams,
    algebra: Algebra,
    trials: int,
    seed: int,
    max_index: int = 8,
    max_coeff: int = 5,
) -> ClosureReport:
    """Multiply random generator pairs and test both closure routes.

    The scalar route is applied to every pair of coordinate indices of the
    two operands with both indices >= 1.
    """
    _check_integral(algebra)
    rng = random.Random(seed)
    dim = 4 if isinstance(algebra, QuatAlgebra) else 9
    records = []
    for t in range(trials):
        n, m = rng.randint(0, max_index), rng.randint(0, max_index)
        p, q, p2, q2 = (rng.randint(-max_coeff, max_coeff) for _ in range(4))
        g1, g2 = GeneratorTerm(n, p, q), GeneratorTerm(m, p2, q2)
        dec_ok = all(
            decomposition_holds(params, GeneratorTerm(n + i, p, q), GeneratorTerm(m + j, p2, q2))
            for i in range(dim)
            for j in range(dim)
            if n + i >= 1 and m + j >= 1
        )
        product = generator(params, g1, algebra) * generator(params, g2, algebra)
        witness = membership_with_retry(params, algebra, product, n, m)
        records.append(TrialRecord(t, g1, g2, dec_ok, witness is not None, witness))
    return ClosureReport(params.l, algebra, trials, seed, tuple(records))
