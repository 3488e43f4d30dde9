import math
import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from rwlabel import identities as ids
from rwlabel.exact import RationalSeries, binomial_rational


def test_hockey_examples():
    c = ids.hockey_stick_real(0, 1, 3)
    assert c.lhs == c.rhs == 6
    c = ids.hockey_stick_real(Fraction(1, 2), 2, 3)
    assert c.lhs == c.rhs == Fraction(13, 2)
    # falling-factorial convention at a negative integer: C(k-1, 0) = 1 and C(-1, 1) = -1
    c = ids.hockey_stick_real(-1, 0, 5)
    assert c.lhs == c.rhs == 6


def test_hockey_integer_grid():
    for x in range(-5, 21):
        for r in range(11):
            for n in range(21):
                assert ids.hockey_stick_real(x, r, n).equal


def test_hockey_random_rationals():
    rng = random.Random(99)
    for _ in range(50):
        x = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        assert ids.hockey_stick_real(x, rng.randint(0, 8), rng.randint(0, 15)).equal


@given(st.fractions(min_value=-50, max_value=50, max_denominator=30),
       st.integers(0, 8), st.integers(0, 12))
def test_hockey_property(x, r, n):
    check = ids.hockey_stick_real(x, r, n)
    assert check.equal
    assert check.lhs == sum(binomial_rational(k + x, r) for k in range(n + 1))


def test_kka():
    assert ids.kka_identity(0, 3).lhs == 15
    for n in range(20):
        c = ids.kka_identity(0, n)
        assert c.lhs == c.rhs == 2 ** (n + 1) - 1
    c = ids.kka_identity(2, 2)
    assert c.lhs == c.rhs == 16
    for m in range(61):
        for n in range(61):
            assert ids.kka_identity(m, n).equal


def test_kka_lhs_matches_rational_form():
    for m in range(6):
        for n in range(6):
            direct = 2 ** n * sum(Fraction(math.comb(k + m, k), 2 ** k) for k in range(n + 1))
            assert ids.kka_identity(m, n).lhs == direct


def test_a087547_pair():
    assert ids.a087547_pair(1).lhs == ids.a087547_pair(1).rhs == 1
    c = ids.a087547_pair(2)
    assert c.lhs == c.rhs == 4
    for n in range(1, 201):
        c = ids.a087547_pair(n)
        assert c.equal
        assert c.lhs.denominator == 1


def test_a233449_terms():
    assert ids.a233449_terms(5) == [1, 3, 8, 22, 68]
    assert ids.a233449_terms(1) == [1]
    direct = [sum(Fraction(math.factorial(k), 2 ** k) for k in range(n + 1)) * 2 ** n for n in range(30)]
    assert ids.a233449_terms(30) == direct


def test_a233449_recurrence():
    assert ids.a233449_recurrence_holds(201)


def test_ode():
    for order in (3, 10, 50):
        residual = ids.ode_residual(order)
        assert residual.order == order - 2
        assert residual.is_zero()
    assert ids.ode_initial_conditions() == (1, 3)
    assert ids.a233449_terms(2)[1] == 3


def test_ode_detects_wrong_series():
    # perturbing a single coefficient must leave a nonzero residual
    f = ids.a233449_egf(12)
    bad = RationalSeries(f.coeffs[:5] + (f[5] + 1,) + f.coeffs[6:])
    d1 = bad.derivative()
    d2 = d1.derivative()
    d1, g = d1.truncate(10), bad.truncate(10)
    residual = d2.mul_x() - d2 + d1.scale(4) - d1.mul_x().scale(2) - g.scale(4)
    assert not residual.is_zero()


def test_eulerian_report():
    assert [(c.lhs, c.rhs, c.equal) for c in map(ids.eulerian_claim_report, (1, 2, 3))] == [
        (1, 0, False), (4, 1, False), (14, 4, False)]
    for n in range(1, 11):
        assert not ids.eulerian_claim_report(n).equal
