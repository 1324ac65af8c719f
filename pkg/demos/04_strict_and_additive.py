"""When the bound is strict, and when the dimension is exactly additive.

Two rank-4 symplectic factors (dimension 2, codimension 2, trivial center)
stay strictly below the two-factor bound: the tensor has dimension 4 < 5.
The same pair sits in the codimension-2 additivity case, so 4 = 2 + 2.
Chains of rank-2 factors with independent scalars are additive as well.
"""

from qtorus import (
    MultiparameterMatrix,
    ValueGroup,
    check_additivity,
    check_strict,
    dimension,
    tensor,
)


def symplectic4() -> MultiparameterMatrix:
    g = ValueGroup(("q",), 1)
    q = g.generator("q")
    return MultiparameterMatrix.from_upper(4, g, {(1, 2): q, (3, 4): q})


lam = symplectic4()
print("factor:", dimension(lam).to_json())

for mode in ("shared", "disjoint"):
    res = dimension(tensor(lam, lam, mode))
    print(f"tensor ({mode}):", res.to_json())

strict = check_strict(lam, lam)
print("strict bound verdict:", strict.conclusion, "| d <", strict.data["rhs"] - 1)

additive = check_additivity(lam, lam)
print("additivity verdict:  ", additive.statement, additive.conclusion)


def rank2(name: str) -> MultiparameterMatrix:
    g = ValueGroup((name,), 1)
    return MultiparameterMatrix.from_upper(2, g, {(1, 2): g.generator(name)})


chain = tensor(tensor(rank2("q1"), rank2("q2"), "disjoint"), rank2("q3"), "disjoint")
print("three-factor chain:  ", dimension(chain).to_json())
