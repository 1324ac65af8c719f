"""Tensor products: superadditivity, and an upper bound attained exactly.

Tensoring two quantum tori multiplies monomial bases, so commutative
sublattices concatenate and the dimension is superadditive.  It is also
bounded above: with both factor dimensions below their ranks,
dim <= min(d1 + r2, d2 + r1) - 1.  The transpose pairing makes that bound
tight: each factor has dimension 1, yet the diagonal monomials X_i (x) X_i'
all commute, giving dimension exactly n.
"""

from qtorus import (
    check_superadditivity,
    check_upper_bound,
    diagonal_sublattice,
    dimension,
    gen_transpose_pair,
    is_commutative,
    pairing_of,
    tensor,
)

n = 3
lam, lam_t = gen_transpose_pair(n)
print("factor dims:", dimension(lam).lower, dimension(lam_t).lower)

product = tensor(lam, lam_t, mode="shared")
res = dimension(product)
print("tensor dim: ", res.to_json())

diag = diagonal_sublattice(n)
print("diagonal witness commutes:", is_commutative(pairing_of(product), diag))
print("witness rows:", diag.to_json())

sup = check_superadditivity(lam, lam_t)
print("superadditivity:", sup.conclusion, "(target", sup.data["target"], ")")

ub = check_upper_bound(lam, lam_t)
print(
    "upper bound:", ub.conclusion,
    "| bound =", ub.data["bound"],
    "| attained =", ub.data["tensor"]["lower"] == ub.data["bound"],
)
