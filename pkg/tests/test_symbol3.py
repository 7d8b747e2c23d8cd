import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fiblucas.sequences import GLParams, PreconditionError, SeqParams, fibonacci, lucas
from fiblucas.symbol3 import (
    EPS,
    CycRat,
    SymAlgebra,
    SymbolElem,
    cyc_inv,
    cyc_mul,
    sym_add,
    sym_from_sequence,
    sym_mul,
    sym_scale,
    u_symbol,
)

fracs = st.fractions(min_value=-6, max_value=6, max_denominator=3)
cycs = st.builds(CycRat, fracs, fracs)
nonzero_cycs = cycs.filter(bool)


class TestCycRat:
    def test_examples(self):
        assert cyc_mul(EPS, EPS) == CycRat(-1, -1)
        assert cyc_mul(EPS, EPS * EPS) == CycRat(1)
        assert cyc_inv(EPS) == CycRat(-1, -1)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            cyc_inv(CycRat())

    def test_against_complex_embedding(self):
        # eps = exp(2 pi i / 3), a floating-point oracle for the product rule
        e = complex(-0.5, 3**0.5 / 2)
        rng = random.Random(1)
        for _ in range(100):
            u = CycRat(rng.randint(-9, 9), rng.randint(-9, 9))
            v = CycRat(rng.randint(-9, 9), rng.randint(-9, 9))
            w = u * v
            z = (float(u.a) + float(u.b) * e) * (float(v.a) + float(v.b) * e)
            assert abs(z - (float(w.a) + float(w.b) * e)) < 1e-9
            assert abs(abs(float(u.a) + float(u.b) * e) ** 2 - float(u.norm())) < 1e-9

    @given(nonzero_cycs, cycs, cycs)
    def test_field_axioms(self, u, v, w):
        assert u * cyc_inv(u) == CycRat(1)
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w
        assert u * v == v * u


def alg_xy():
    return SymAlgebra(CycRat(2, 1), CycRat(-3, 2))


class TestDefiningRelations:
    def test_examples(self):
        alg = alg_xy()
        x, y = alg.x, alg.y
        assert y * x == (x * y).scale(EPS)
        assert (x * x) * x == alg.one().scale(alg.alpha1)
        assert (x * y) * (x * y) == alg.monomial(2, 2, EPS)

    def test_cubes_and_eps(self):
        alg = alg_xy()
        assert alg.x ** 3 == alg.one().scale(alg.alpha1)
        assert alg.y ** 3 == alg.one().scale(alg.alpha2)
        assert EPS ** 3 == CycRat(1)

    def test_commutation_generalized(self):
        alg = alg_xy()
        for a, b in itertools.product(range(3), repeat=2):
            lhs = alg.monomial(0, b) * alg.monomial(a, 0)
            assert lhs == alg.monomial(a, b, EPS ** (a * b))

    def test_basis_independence(self):
        alg = alg_xy()
        for j1, j2 in itertools.product(range(3), repeat=2):
            e = alg.monomial(j1, j2)
            assert not e.is_zero()
            assert e[(j1, j2)] == CycRat(1)
            assert sum(bool(c) for c in e.coeffs) == 1


def rand_elem(rng, alg):
    return alg.element(CycRat(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(9))


def test_associativity_random():
    rng = random.Random(99)
    for _ in range(100):
        alg = SymAlgebra(
            CycRat(rng.randint(-3, 3) or 1, rng.randint(-3, 3)),
            CycRat(Fraction(rng.randint(-3, 3) or 2, rng.randint(1, 2)), rng.randint(-3, 3)),
        )
        u, v, w = (rand_elem(rng, alg) for _ in range(3))
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w


def test_scalars_are_central():
    rng = random.Random(4)
    alg = alg_xy()
    for _ in range(30):
        u = rand_elem(rng, alg)
        s = CycRat(rng.randint(-5, 5), rng.randint(-5, 5))
        scalar = alg.one().scale(s)
        assert scalar * u == u * scalar == sym_scale(s, u)


def test_module_ops():
    alg = alg_xy()
    u = rand_elem(random.Random(0), alg)
    assert sym_add(u, alg.zero()) == u
    assert sym_scale(1, u) == u
    assert sym_scale(EPS, alg.x) == alg.monomial(1, 0, EPS)
    assert sym_mul(alg.one(), u) == u


def test_mismatch_and_validation():
    a, b = alg_xy(), SymAlgebra(CycRat(1), CycRat(1))
    with pytest.raises(ValueError):
        a.one() * b.one()
    with pytest.raises(PreconditionError):
        SymAlgebra(CycRat(), CycRat(1))
    with pytest.raises(ValueError):
        SymbolElem(a, (1, 2))


def test_sequence_elements():
    alg = alg_xy()
    L = sym_from_sequence("lucas", 0, alg)
    assert L.coeffs == tuple(CycRat(v) for v in (2, 1, 3, 4, 7, 11, 18, 29, 47))
    F = sym_from_sequence("fibonacci", 1, alg)
    assert F.coeffs == tuple(CycRat(v) for v in (1, 1, 2, 3, 5, 8, 13, 21, 34))
    # printed term order: 1, x, x^2, y, xy, x^2y, y^2, xy^2, x^2y^2
    F5 = sym_from_sequence("fibonacci", 5, alg)
    assert F5[(2, 1)] == CycRat(fibonacci(10)) and F5[(0, 2)] == CycRat(fibonacci(11))
    assert sym_from_sequence("lucas", 3, alg)[(2, 2)] == CycRat(lucas(11))


def test_u_symbol_needs_parameters():
    with pytest.raises(PreconditionError):
        sym_from_sequence("u", 0, alg_xy())


def test_u_symbol_zero_iff_zero_parameters():
    alg = SymAlgebra(CycRat(1, 1), CycRat(2, 1))
    for l in range(1, 4):
        for p in range(-5, 6):
            for q in range(-5, 6):
                for n in range(21):
                    assert u_symbol(SeqParams(l), GLParams(p, q), n, alg).is_zero() == (p == q == 0)
