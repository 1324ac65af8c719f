"""Jointly independent commutation scalars force dimension one.

When the scalars lambda_ij (i < j) generate a free abelian group of rank
n(n-1)/2, no two independent monomials commute, so the dimension collapses
to 1 however large the rank is.  The certificate here is not a search: the
forms span every alternating form, so the exterior-square dimension count
already pins the answer.
"""

from qtorus import (
    center_is_trivial,
    codimension,
    dimension,
    gen_independent,
    pairing_of,
)

for n in range(2, 6):
    mat = gen_independent(n)
    res = dimension(mat)
    print(
        f"rank {n}: dim = {res.lower} (exact={res.exact}), "
        f"codim = {codimension(mat)}, "
        f"center trivial = {center_is_trivial(pairing_of(mat))}"
    )

# The value group really does carry one generator per pair.
mat = gen_independent(4)
print("scalar generators:", mat.value_group.free_names)
