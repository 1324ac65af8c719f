"""Formal elements: twisted products as an independent commutator oracle.

Elements of the algebra are finite sums c * q^v * X^a.  Multiplying
monomials costs a reordering scalar (the cocycle), and computing the group
commutator X^a X^b X^-a X^-b through actual products must reproduce the
matrix pairing, which is how the test suite cross-checks both modules.
"""

from fractions import Fraction

from qtorus import (
    MultiparameterMatrix,
    TwistedElement,
    ValueGroup,
    cocycle,
    commutator_units,
    pairing_of,
    support,
)

group = ValueGroup(("q",), 1)
bq = MultiparameterMatrix.from_upper(2, group, {(1, 2): group.generator("q")})

x = TwistedElement.monomial(bq, (1, 0))
y = TwistedElement.monomial(bq, (0, 1))

print("x*y:", (x * y).render())
print("y*x:", (y * x).render())
print("reorder cost tau(e2, e1):", cocycle(bq, (0, 1), (1, 0)).free)

one = TwistedElement.one(bq)
poly = (one + x) * (one - x)
print("(1 + X1)(1 - X1) =", poly.render())
print("support:", sorted(support(poly)))

alpha = TwistedElement.monomial(bq, (2, -1), Fraction(3, 2))
print("alpha * alpha^-1 == 1:", (alpha * alpha.inverse_monomial() - one).is_zero())

a, b = (2, 1), (-1, 3)
via_products = commutator_units(bq, a, b)
via_pairing = pairing_of(bq).commutator(a, b)
print("unit commutator:", via_products.free, "| pairing:", via_pairing.free)
