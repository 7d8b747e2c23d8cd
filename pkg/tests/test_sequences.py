from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fiblucas.sequences import (
    GLParams,
    IdentityId,
    PreconditionError,
    QuadExt,
    SeqParams,
    binet_a,
    binet_b,
    identity_check,
    parity_facts,
    roots,
    seq_a,
    seq_b,
    u_number,
)


def naive(l, first, second, n):
    # plain recursion, independent of the cached iteration in the library
    if n == 0:
        return first
    if n == 1:
        return second
    return l * naive(l, first, second, n - 1) + naive(l, first, second, n - 2)


@pytest.mark.parametrize(
    "l, n, expected",
    [(3, 0, 0), (1, 7, 13), (2, -2, -2), (2, 5, 29), (1, -1, 1), (1, -4, -3)],
)
def test_seq_a_examples(l, n, expected):
    assert seq_a(SeqParams(l), n) == expected


@pytest.mark.parametrize("l, n, expected", [(1, 0, 2), (1, 7, 29), (2, 4, 34), (3, 1, 3)])
def test_seq_b_examples(l, n, expected):
    assert seq_b(SeqParams(l), n) == expected


def test_seq_b_rejects_negative_index():
    with pytest.raises(PreconditionError):
        seq_b(SeqParams(1), -1)


def test_seq_params_validation():
    for bad in (0, -2):
        with pytest.raises(PreconditionError):
            SeqParams(bad)
    assert SeqParams(3).d == 13


@pytest.mark.parametrize("l", [1, 2, 3])
def test_sequences_match_naive_recursion(l):
    p = SeqParams(l)
    for n in range(15):
        assert seq_a(p, n) == naive(l, 0, 1, n)
        assert seq_b(p, n) == naive(l, 2, l, n)


def test_l1_is_fibonacci_and_lucas():
    p = SeqParams(1)
    assert [seq_a(p, n) for n in range(40)] == [sympy.fibonacci(n) for n in range(40)]
    assert [seq_b(p, n) for n in range(40)] == [sympy.lucas(n) for n in range(40)]


@pytest.mark.parametrize("l", range(1, 6))
def test_recurrence_consistency(l):
    p = SeqParams(l)
    for n in range(2, 61):
        assert seq_a(p, n) == l * seq_a(p, n - 1) + seq_a(p, n - 2)
        assert seq_b(p, n) == l * seq_b(p, n - 1) + seq_b(p, n - 2)


def test_negative_a_index_rule():
    p = SeqParams(3)
    for n in range(1, 20):
        assert seq_a(p, -n) == (-1) ** (n + 1) * seq_a(p, n)
    # the recurrence runs backwards through the extension
    for n in range(-15, 2):
        assert seq_a(p, n + 2) == 3 * seq_a(p, n + 1) + seq_a(p, n)


class TestQuadExt:
    def test_roots_satisfy_characteristic_equation(self):
        for l in range(1, 6):
            p = SeqParams(l)
            lq = QuadExt(p.d, l, 0)
            one = QuadExt(p.d, 1, 0)
            for r in roots(p):
                assert r * r == lq * r + one

    def test_difference_of_roots_is_sqrt_d(self):
        al, be = roots(SeqParams(2))
        assert al - be == QuadExt(8, 0, 1)

    def test_division_and_powers(self):
        x = QuadExt(5, Fraction(1, 2), Fraction(3, 4))
        y = QuadExt(5, 2, -1)
        assert (x / y) * y == x
        assert x ** 3 == x * x * x
        assert x ** -2 * x ** 2 == QuadExt(5, 1, 0)

    def test_mixed_radicands_rejected(self):
        with pytest.raises(ValueError):
            QuadExt(5, 1, 1) + QuadExt(8, 1, 1)


@pytest.mark.parametrize(
    "fn, l, n, expected",
    [
        (binet_a, 1, 0, 0),
        (binet_a, 1, 5, 5),
        (binet_a, 2, 3, 5),
        (binet_b, 5, 0, 2),
        (binet_b, 1, 4, 7),
        (binet_b, 2, 2, 6),
    ],
)
def test_binet_examples(fn, l, n, expected):
    assert fn(SeqParams(l), n) == expected


@pytest.mark.parametrize("l", range(1, 6))
def test_binet_agrees_with_recurrence(l):
    p = SeqParams(l)
    for n in range(51):
        assert binet_a(p, n) == seq_a(p, n)
        assert binet_b(p, n) == seq_b(p, n)


def test_binet_irrational_parts_vanish():
    p = SeqParams(4)
    al, be = roots(p)
    for n in range(30):
        assert (al**n + be**n).is_rational()
        assert ((al**n - be**n) / (al - be)).is_rational()


def test_u_number_examples():
    for l in range(1, 6):
        for p, q in [(1, 1), (-3, 2), (0, 5)]:
            assert u_number(SeqParams(l), GLParams(p, q), 0) == p + 2 * q
            assert u_number(SeqParams(l), GLParams(p, q), 1) == q * l
    assert u_number(SeqParams(2), GLParams(1, 1), 2) == 7
    assert all(u_number(SeqParams(3), GLParams(0, 0), n) == 0 for n in range(20))


@given(
    l=st.integers(1, 6),
    p=st.integers(-50, 50),
    q=st.integers(-50, 50),
    n=st.integers(2, 40),
)
def test_u_recurrence(l, p, q, n):
    par, gl = SeqParams(l), GLParams(p, q)
    assert u_number(par, gl, n) == l * u_number(par, gl, n - 1) + u_number(par, gl, n - 2)


@given(
    l=st.integers(1, 5),
    n=st.integers(0, 30),
    c=st.integers(-9, 9),
    d=st.integers(-9, 9),
    pq=st.tuples(*(st.integers(-9, 9) for _ in range(4))),
)
def test_u_linearity(l, n, c, d, pq):
    p, q, p2, q2 = pq
    par = SeqParams(l)
    lhs = u_number(par, GLParams(c * p + d * p2, c * q + d * q2), n)
    assert lhs == c * u_number(par, GLParams(p, q), n) + d * u_number(par, GLParams(p2, q2), n)


def test_u_window_vanishes_only_for_zero_parameters():
    for l in range(1, 4):
        par = SeqParams(l)
        for p in range(-5, 6):
            for q in range(-5, 6):
                for n in range(21):
                    window = [u_number(par, GLParams(p, q), n + t) for t in range(4)]
                    assert (not any(window)) == (p == 0 and q == 0)


def test_nonvanishing_backward_chain():
    # a zero window forces u_0 = p + 2q = 0 and u_1 = q*l = 0
    for l in range(1, 4):
        par = SeqParams(l)
        for p in range(-5, 6):
            for q in range(-5, 6):
                gl = GLParams(p, q)
                if u_number(par, gl, 0) == 0 and u_number(par, gl, 1) == 0:
                    assert p == q == 0


class TestIdentityCheck:
    def test_examples(self):
        r = identity_check("P31_I", SeqParams(2), 1, 1)
        assert (r.lhs, r.rhs, r.holds) == (12, 12, True)
        r = identity_check("P32_II", SeqParams(1), 1)
        assert (r.lhs, r.rhs, r.holds) == (5, 5, True)
        r = identity_check("R35", SeqParams(2), 2, gl=GLParams(1, 1))
        assert (r.lhs, r.rhs, r.holds) == (11, 11, True)

    def test_iv_right_side_is_rational(self):
        r = identity_check(IdentityId.P31_IV, SeqParams(1), 2, 1)
        # a_2 a_3 = 2 = (b_5 + (-1)^3 b_1)/5 = (11 - 1)/5
        assert r.rhs == Fraction(10, 5) and r.holds

    @pytest.mark.parametrize("ident", ["P31_I", "P31_II", "P31_III", "P31_IV"])
    def test_two_index_identities(self, ident):
        for l in range(1, 6):
            for n in range(31):
                for m in range(31):
                    assert identity_check(ident, SeqParams(l), n, m).holds

    @pytest.mark.parametrize("ident", ["P31_V", "P31_VI", "P31_VII", "P32_I", "P32_II"])
    def test_one_index_identities(self, ident):
        for l in range(1, 6):
            for n in range(1, 51):
                assert identity_check(ident, SeqParams(l), n).holds

    def test_printed_b_cassini_sign_fails(self):
        for n in range(1, 20):
            r = identity_check("P32_II", SeqParams(2), n)
            assert r.lhs != (-1) ** n * 8

    @pytest.mark.parametrize("ident", ["P31_II", "P31_III"])
    def test_negative_m_extension(self, ident):
        # n >= 1 keeps every b index nonnegative
        for l in range(1, 6):
            for n in range(1, 31):
                assert identity_check(ident, SeqParams(l), n, -1, allow_negative_m=True).holds

    def test_shifted_u_identity(self):
        for l in range(1, 6):
            for p in range(-3, 4):
                for q in range(-3, 4):
                    for n in range(1, 31):
                        assert identity_check("R35", SeqParams(l), n, gl=GLParams(p, q)).holds

    @pytest.mark.parametrize(
        "ident, n, m",
        [("P32_I", 0, None), ("P31_I", 0, -1), ("P31_II", 1, None), ("R35", 0, None)],
    )
    def test_range_errors(self, ident, n, m):
        with pytest.raises(PreconditionError):
            identity_check(ident, SeqParams(1), n, m, GLParams(1, 1))

    def test_r35_needs_parameters(self):
        with pytest.raises(PreconditionError):
            identity_check("R35", SeqParams(1), 2)

    def test_negative_m_needs_opt_in(self):
        with pytest.raises(PreconditionError):
            identity_check("P31_II", SeqParams(1), 2, -1)


class TestParity:
    def test_examples(self):
        assert parity_facts(SeqParams(2), 3).b_n_even
        assert parity_facts(SeqParams(1), 3).b_n_even
        assert parity_facts(SeqParams(1), 6).product_residue_mod4 == 3
        assert parity_facts(SeqParams(1), 0).product_residue_mod4 is None

    @pytest.mark.parametrize("l", [1, 2, 3, 4])
    def test_parity_rules(self, l):
        par = SeqParams(l)
        for n in range(201):
            f = parity_facts(par, n)
            if l % 2 == 0:
                assert f.b_n_even
            else:
                assert f.b_n_even == (n % 3 == 0)
                if n % 6 == 0 and n:
                    assert f.product_residue_mod4 == 3
                if n % 6 == 3:
                    assert f.product_residue_mod4 == 1
