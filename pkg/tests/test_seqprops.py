import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from qlc.errors import InternalZerosError, NegativeCoefficientError
from qlc.qpoly import QPoly, eval_at
from qlc.seqprops import (Report, Witness, gaussian_binomial, has_internal_zeros,
                          is_log_concave, is_log_convex, is_q_log_concave,
                          is_strong_q_log_concave, is_strong_q_log_convex,
                          random_log_concave, random_log_convex, tp2_window_check)


def P(*c):
    return QPoly(c)


def brute_pairs(seq, concave=True):
    """Independent strong check: every pair compared via dict-of-degree products."""
    def prod(a, b):
        out = {}
        for i, x in enumerate(a.coeffs):
            for j, y in enumerate(b.coeffs):
                out[i + j] = out.get(i + j, 0) + x * y
        return out
    for i in range(1, len(seq) - 1):
        for j in range(i, len(seq) - 1):
            inner, outer = prod(seq[i], seq[j]), prod(seq[i - 1], seq[j + 1])
            for d in sorted(set(inner) | set(outer)):
                delta = inner.get(d, 0) - outer.get(d, 0)
                if (delta < 0) if concave else (delta > 0):
                    return False
    return True


@pytest.mark.parametrize("seq, expected", [
    ([1, 0, 1], True),
    ([0, 1, 2, 0], False),
    ([1, 2, 0, 0, 3], True),
    ([], False),
    ([P(), P(1), P()], False),
])
def test_has_internal_zeros(seq, expected):
    assert has_internal_zeros(seq) is expected


def test_log_concave_examples():
    assert is_log_concave([4, 5, 3, 1]).verdict
    rep = is_log_concave([1, 1, 2])
    assert not rep.verdict
    assert rep.witness.i == rep.witness.j == 1
    assert is_log_concave([1, 3, 3, 1]).verdict
    assert is_log_concave([Fraction(1, 2), 1, 2]).verdict
    assert not is_log_concave([Fraction(1, 2), 1, 3]).verdict


def test_log_convex_examples():
    assert is_log_convex([1, 1, 2, 5, 14]).verdict
    assert not is_log_convex([1, 2, 3]).verdict
    assert is_log_convex([7] * 6).verdict


def test_numeric_checks_reject_internal_zeros_and_negatives():
    with pytest.raises(InternalZerosError):
        is_log_concave([1, 0, 1])
    with pytest.raises(InternalZerosError):
        is_log_convex([2, 0, 0, 2])
    with pytest.raises(NegativeCoefficientError):
        is_log_concave([1, -1, 1])


def test_strong_q_log_concave_examples():
    narayana3 = [P(0, 1, 3, 1), P(1, 5, 3), P(2, 3), P(1)]
    assert is_strong_q_log_concave(narayana3).verdict
    rep = is_strong_q_log_concave([P(1), P(0, 1), P(1)])
    assert not rep.verdict
    assert (rep.witness.i, rep.witness.j, rep.witness.degree) == (1, 1, 0)
    assert rep.witness.lhs == P(0, 0, 1) and rep.witness.rhs == P(1)
    assert is_strong_q_log_concave([P(1), P(1, 1), P(1, 2, 1)]).verdict


def test_q_log_concave_examples():
    assert is_q_log_concave([P(0, 1, 1), P(1, 2), P(1)]).verdict
    assert not is_q_log_concave([P(1), P(0, 1), P(1)]).verdict


def test_strong_q_log_convex_examples():
    assert is_strong_q_log_convex([1, 1, 2, 5]).verdict
    assert not is_strong_q_log_convex([1, 2, 3]).verdict
    assert is_strong_q_log_convex([P(3, 1)] * 5).verdict


def test_strong_beyond_adjacent():
    # adjacent inequalities hold but the (1, 2) pair fails
    seq = [P(0, 3), P(1, 3, 1, 2), P(2, 1, 3, 3), P(0, 3, 1, 1)]
    assert is_q_log_concave(seq).verdict
    rep = is_strong_q_log_concave(seq)
    assert not rep.verdict
    assert (rep.witness.i, rep.witness.j, rep.witness.degree) == (1, 2, 2)
    assert brute_pairs(seq) is False


def test_q_checks_reject_bad_input():
    with pytest.raises(InternalZerosError):
        is_strong_q_log_concave([P(1), P(), P(1)])
    with pytest.raises(NegativeCoefficientError):
        is_strong_q_log_concave([P(1), P(1, -1), P(1)])


def test_report_witness_invariant():
    with pytest.raises(ValueError):
        Report("x", True, Witness(1, 1))
    with pytest.raises(ValueError):
        Report("x", False)


def test_tp2_examples():
    assert tp2_window_check([1, 2, 1]).verdict
    rep = tp2_window_check([1, 1, 3])
    assert not rep.verdict
    assert rep.witness.lhs < rep.witness.rhs
    assert tp2_window_check([1, 1, 1, 1]).verdict


def test_tp2_big_entries_take_exact_path():
    big = 10**12
    assert tp2_window_check([big, 2 * big, big]).verdict
    assert not tp2_window_check([big, big, 3 * big]).verdict


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2) == P(1, 1, 2, 1, 1)
    assert gaussian_binomial(6, 0) == P(1)
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4)


def test_gaussian_binomial_matches_product_formula():
    q = sympy.Symbol("q")
    for m in range(9):
        for r in range(m + 1):
            num = sympy.prod([1 - q ** (m - i) for i in range(r)])
            den = sympy.prod([1 - q ** (i + 1) for i in range(r)])
            expr = sympy.Poly(sympy.cancel(num / den), q)
            expected = QPoly(int(c) for c in reversed(expr.all_coeffs()))
            assert gaussian_binomial(m, r) == expected
            assert eval_at(gaussian_binomial(m, r), 1) == comb(m, r)


@pytest.mark.parametrize("m", range(9))
def test_gaussian_rows_strongly_q_log_concave(m):
    row = [gaussian_binomial(m, r) for r in range(m + 1)]
    assert is_strong_q_log_concave(row).verdict
    assert brute_pairs(row)


@pytest.mark.parametrize("seed", range(20))
def test_random_log_concave_fixture(seed):
    for length in (1, 2, 5, 17, 33):
        a = random_log_concave(length, seed)
        assert len(a) == length and all(x > 0 for x in a)
        assert is_log_concave(a).verdict
        assert a == random_log_concave(length, seed)


@pytest.mark.parametrize("seed", range(20))
def test_random_log_convex_fixture(seed):
    a = random_log_convex(25, seed)
    assert all(x > 0 for x in a)
    assert is_log_convex(a).verdict
    assert a == random_log_convex(25, seed)


def test_single_term_fixture():
    a = random_log_concave(1, 7)
    assert len(a) == 1 and a[0] > 0


# -- invariants -------------------------------------------------------------

small_polys = st.lists(st.integers(0, 4), min_size=1, max_size=3).map(QPoly).filter(bool)


@given(st.lists(small_polys, min_size=1, max_size=7))
def test_strong_implies_weak(seq):
    if is_strong_q_log_concave(seq).verdict:
        assert is_q_log_concave(seq).verdict


@given(st.lists(small_polys, min_size=1, max_size=7))
def test_strong_check_matches_bruteforce(seq):
    assert is_strong_q_log_concave(seq).verdict == brute_pairs(seq)
    assert is_strong_q_log_convex(seq).verdict == brute_pairs(seq, concave=False)


@given(st.lists(st.integers(1, 40), min_size=1, max_size=9))
def test_constant_strong_check_agrees_with_log_concavity(a):
    assert is_strong_q_log_concave(a).verdict == is_log_concave(a).verdict
    assert is_strong_q_log_convex(a).verdict == is_log_convex(a).verdict


def _no_internal_zero_windows(max_len, max_entry):
    for length in range(1, max_len + 1):
        for b in itertools.product(range(max_entry + 1), repeat=length):
            if not has_internal_zeros(b):
                yield b


def test_tp2_agrees_with_log_concavity_small():
    for b in _no_internal_zero_windows(4, 3):
        assert tp2_window_check(b).verdict == is_log_concave(b).verdict, b
