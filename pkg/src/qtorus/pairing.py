"""Multiparameter matrices and the commutator pairing they induce on Z^n.

A multiparameter matrix stores the pairwise commutation scalars of n
invertible generators in exponent notation.  Because the commutator of two
monomials is biadditive in the exponents, it is entirely described by one
integer alternating form per free scalar generator plus one alternating
form modulo the torsion order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import Sublattice, intmat, is_alternating, kernel, zeros
from .valuegroup import GroupElement, ValueGroup, ValueGroupError, embed, merge


class PairingError(ValueError):
    pass


@dataclass(frozen=True)
class MultiparameterMatrix:
    """n x n multiplicatively antisymmetric matrix over a value group."""

    rank: int
    value_group: ValueGroup
    entries: tuple[tuple[GroupElement, ...], ...]

    def __post_init__(self):
        n = self.rank
        if n < 1:
            raise PairingError("rank must be >= 1")
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise PairingError("entry grid must be rank x rank")
        for i in range(n):
            for j in range(n):
                e = self.entries[i][j]
                if e.group != self.value_group:
                    raise PairingError("entry belongs to a different value group")
        for i in range(n):
            if not self.entries[i][i].is_identity():
                raise PairingError(f"diagonal entry ({i + 1},{i + 1}) must be the identity")
            for j in range(i + 1, n):
                if not (self.entries[i][j] + self.entries[j][i]).is_identity():
                    raise PairingError(
                        f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not inverse"
                    )

    @staticmethod
    def from_upper(
        rank: int, value_group: ValueGroup, upper: dict[tuple[int, int], GroupElement]
    ) -> "MultiparameterMatrix":
        """Build from entries given only for i < j (1-based); the rest follows."""
        ident = value_group.identity()
        grid = [[ident for _ in range(rank)] for _ in range(rank)]
        for (i, j), e in upper.items():
            if not (1 <= i < j <= rank):
                raise PairingError(f"upper entry index ({i},{j}) out of range")
            grid[i - 1][j - 1] = e
            grid[j - 1][i - 1] = -e
        return MultiparameterMatrix(rank, value_group, tuple(tuple(r) for r in grid))

    def entry(self, i: int, j: int) -> GroupElement:
        """1-based access to the commutation scalar of generators i and j."""
        return self.entries[i - 1][j - 1]

    def is_commutative_matrix(self) -> bool:
        return all(e.is_identity() for row in self.entries for e in row)


def transpose(mat: MultiparameterMatrix) -> MultiparameterMatrix:
    flipped = tuple(
        tuple(mat.entries[j][i] for j in range(mat.rank)) for i in range(mat.rank)
    )
    return MultiparameterMatrix(mat.rank, mat.value_group, flipped)


def tensor(
    m1: MultiparameterMatrix, m2: MultiparameterMatrix, mode: str = "shared"
) -> MultiparameterMatrix:
    """Multiparameter matrix of the tensor product algebra.

    The result has block structure: each factor keeps its own commutation
    scalars (pushed through the merged value group) and generators from
    different blocks commute.
    """
    try:
        group, emb1, emb2 = merge(m1.value_group, m2.value_group, mode)
    except ValueGroupError as exc:
        raise PairingError(str(exc)) from exc
    n1, n2 = m1.rank, m2.rank
    ident = group.identity()
    grid = [[ident for _ in range(n1 + n2)] for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            grid[i][j] = embed(m1.entries[i][j], group, emb1)
    for i in range(n2):
        for j in range(n2):
            grid[n1 + i][n1 + j] = embed(m2.entries[i][j], group, emb2)
    return MultiparameterMatrix(n1 + n2, group, tuple(tuple(r) for r in grid))


@dataclass(frozen=True)
class Pairing:
    """The commutator pairing Z^n x Z^n -> value group, in matrix form.

    ``free_forms[l][i][j]`` is the exponent of the l-th free generator in
    the commutation scalar of generators i+1 and j+1; ``torsion_form`` holds
    the torsion residues.  All forms are alternating.
    """

    rank: int
    value_group: ValueGroup
    free_forms: tuple
    torsion_form: np.ndarray

    def __post_init__(self):
        for M in self.free_forms:
            if M.shape != (self.rank, self.rank) or not is_alternating(M):
                raise PairingError("free form is not alternating of the right size")
        T = self.torsion_form
        m = self.value_group.torsion_order
        if T.shape != (self.rank, self.rank):
            raise PairingError("torsion form has the wrong size")
        for i in range(self.rank):
            if T[i, i] % m != 0:
                raise PairingError("torsion form has nonzero diagonal")
            for j in range(self.rank):
                if (T[i, j] + T[j, i]) % m != 0:
                    raise PairingError("torsion form is not alternating mod m")

    def commutator(self, a, b) -> GroupElement:
        """Value of the pairing on two exponent vectors."""
        a = [int(x) for x in a]
        b = [int(x) for x in b]
        if len(a) != self.rank or len(b) != self.rank:
            raise PairingError("vector length does not match the pairing rank")
        free = tuple(
            sum(a[i] * int(M[i, j]) * b[j] for i in range(self.rank) for j in range(self.rank))
            for M in self.free_forms
        )
        t = sum(
            a[i] * int(self.torsion_form[i, j]) * b[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )
        return GroupElement(self.value_group, free, t)


def pairing_of(mat: MultiparameterMatrix) -> Pairing:
    n = mat.rank
    k = mat.value_group.free_rank
    forms = [zeros(n, n) for _ in range(k)]
    torsion = zeros(n, n)
    for i in range(n):
        for j in range(n):
            e = mat.entries[i][j]
            for l in range(k):
                forms[l][i, j] = e.free[l]
            torsion[i, j] = e.torsion
    return Pairing(n, mat.value_group, tuple(forms), torsion)


def is_commutative(pairing: Pairing, B: Sublattice) -> bool:
    """Whether the pairing vanishes on the sublattice (generator pairs suffice)."""
    rows = B.rows
    for s in range(len(rows)):
        for t in range(s + 1, len(rows)):
            if not pairing.commutator(rows[s], rows[t]).is_identity():
                return False
    return True


def radical(pairing: Pairing) -> Sublattice:
    """Saturated sublattice of vectors pairing trivially with everything.

    Computed from the free forms only: a torsion obstruction on a vector a
    disappears for m*a, and passing to a finite-index subgroup changes
    neither the center test nor the dimension, so the radical is the common
    rational kernel of the free forms intersected with Z^n.
    """
    n = pairing.rank
    if not pairing.free_forms:
        return Sublattice.full(n)
    stacked = np.concatenate([intmat(M) for M in pairing.free_forms], axis=0)
    return kernel(stacked)


def center_is_trivial(pairing: Pairing) -> bool:
    """True iff the algebra's center is just the scalars (radical rank 0)."""
    return radical(pairing).rank == 0


# Conventional alias: the center being trivial means it is exactly F.
center_is_F = center_is_trivial


def restrict(pairing: Pairing, B: Sublattice) -> Pairing:
    """Pairing induced on a sublattice, in the coordinates of its generators.

    B is used exactly as given; callers restricting to finite-index
    sublattices do so deliberately and no saturation is applied.
    """
    if B.rank < 1:
        raise PairingError("cannot restrict to a rank-0 sublattice")
    G = B.matrix
    m = pairing.value_group.torsion_order
    forms = tuple(np.ascontiguousarray(G @ intmat(M) @ G.T) for M in pairing.free_forms)
    T = G @ intmat(pairing.torsion_form) @ G.T
    for i in range(B.rank):
        for j in range(B.rank):
            T[i, j] = int(T[i, j]) % m
    return Pairing(B.rank, pairing.value_group, forms, T)


def restrict_matrix(mat: MultiparameterMatrix, B: Sublattice) -> MultiparameterMatrix:
    """Multiparameter matrix of the subalgebra generated by a sublattice's rows."""
    if B.rank < 1:
        raise PairingError("cannot restrict to a rank-0 sublattice")
    p = pairing_of(mat)
    rows = B.rows
    upper = {}
    for s in range(len(rows)):
        for t in range(s + 1, len(rows)):
            upper[(s + 1, t + 1)] = p.commutator(rows[s], rows[t])
    return MultiparameterMatrix.from_upper(B.rank, mat.value_group, upper)


@dataclass(frozen=True)
class DimensionResult:
    """Certified dimension interval with a commutative witness sublattice."""

    lower: int
    upper: int
    exact: bool
    witness: Sublattice

    def __post_init__(self):
        if not (1 <= self.lower <= self.upper):
            raise PairingError("dimension interval must satisfy 1 <= lower <= upper")
        if self.exact != (self.lower == self.upper):
            raise PairingError("exact flag inconsistent with interval")
        if self.witness.rank != self.lower:
            raise PairingError("witness rank must equal the certified lower bound")

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "witness": self.witness.to_json(),
        }
