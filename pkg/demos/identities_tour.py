"""
Exact identity checks
=====================

The closed forms rest on a few binomial identities and on a sequence
whose generating function solves a second-order ODE.  Everything here is
exact rational arithmetic; nothing is sampled in floating point.
"""

from fractions import Fraction

from rwlabel import identities as ids

##############################################################################
# The hockey-stick identity extended to rational upper arguments.
for x in (Fraction(0), Fraction(-3), Fraction(5, 2), Fraction(-7, 3)):
    check = ids.hockey_stick_real(x, 3, 6)
    print(f"x={x}: {check.lhs} == {check.rhs} -> {check.equal}")

##############################################################################
# Two rational sums that are in fact the same integer sequence.
print([ids.a087547_lhs(n) for n in range(1, 9)])
print(all(ids.a087547_pair(n).equal for n in range(1, 101)))

##############################################################################
# a_n = sum_{k<=n} k! 2^(n-k); its egf solves (x-1)f'' + 2(2-x)f' - 4f = 0.
print(ids.a233449_terms(10))
print("residual zero to order 40:", ids.ode_residual(40).is_zero())
print("f(0), f'(0) =", ids.ode_initial_conditions())

##############################################################################
# A claimed match with the Eulerian numbers <n, 1> does not hold under the
# usual convention; both sides are shown side by side.
for n in range(1, 7):
    c = ids.eulerian_claim_report(n)
    print(n, c.lhs, c.rhs, c.equal)
