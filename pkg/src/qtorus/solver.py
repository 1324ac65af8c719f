"""Dimension of a quantum torus as a certified interval.

The dimension equals the largest rank of a sublattice of Z^n on which the
commutator pairing vanishes.  For at most one independent alternating form
this has a closed form (n minus half the form's matrix rank) and the solver
is always exact.  For two or more independent forms no simple closed form
is known, so the solver reports a certified interval:

* the lower bound is the rank of an explicit commutative sublattice found
  by a deterministic search, and
* the upper bound is the minimum of several independently sound
  certificates (pencil ranks, an exterior-square dimension count, and a
  tensor-splitting bound), each documented at its implementation.

The ``exact`` flag is set only when the two meet.  Exhausting the search
budget can therefore cost exactness but never correctness.

Torsion scalars never change the answer: if a sublattice B is isotropic for
the free forms, then m*B (same rank) is isotropic for the full pairing
because every torsion residue is multiplied by m^2.  The supremum of
isotropic ranks is therefore computed from the free forms alone
(``free_reduction``), and witnesses are rescaled by m at the end when
needed.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

import numpy as np

from .lattice import (
    Sublattice,
    identity,
    intmat,
    kernel,
    kernel_with_complement,
    primitive,
    rank,
    skew_rank,
    zeros,
)
from .pairing import (
    DimensionResult,
    MultiparameterMatrix,
    Pairing,
    center_is_trivial,
    is_commutative,
    pairing_of,
)


class InexactDimensionError(RuntimeError):
    """Raised when an operation demands an exact dimension and only an interval exists."""


class ResourceLimitError(RuntimeError):
    """Raised when brute-force enumeration is asked for more than it safely supports."""


@dataclass(frozen=True)
class SolverOptions:
    search_bound: int = 2
    combo_samples: int = 64
    time_budget: float = 10.0
    node_budget: int = 20_000
    seed: int = 0


class _Budget:
    """Deterministic node counter with a wall-clock safety valve.

    The node budget is the primary limit so that identical inputs explore
    identical search trees; the time budget only guards against pathological
    instances.
    """

    def __init__(self, opts: SolverOptions):
        self.nodes_left = opts.node_budget
        self.deadline = time.monotonic() + opts.time_budget
        self.exhausted = False

    def tick(self) -> bool:
        if self.exhausted:
            return False
        self.nodes_left -= 1
        if self.nodes_left <= 0 or time.monotonic() > self.deadline:
            self.exhausted = True
            return False
        return True


def free_reduction(pairing: Pairing) -> list[np.ndarray]:
    """Integer alternating forms that determine the dimension.

    The torsion form is dropped: a sublattice isotropic for the free forms
    becomes isotropic for the full pairing after scaling by the torsion
    order, without changing its rank, so the supremum over isotropic ranks
    is unchanged.
    """
    return [intmat(M) for M in pairing.free_forms]


def _form_coords(M: np.ndarray, n: int) -> list[int]:
    return [int(M[i, j]) for i in range(n) for j in range(i + 1, n)]


def _span_basis(forms: list[np.ndarray], n: int) -> list[np.ndarray]:
    """Drop forms that are rational combinations of earlier ones."""
    kept: list[np.ndarray] = []
    coords: list[list[int]] = []
    for M in forms:
        c = _form_coords(M, n)
        if all(x == 0 for x in c):
            continue
        if not kept:
            kept.append(M)
            coords.append(c)
            continue
        if rank(intmat(coords + [c])) > len(kept):
            kept.append(M)
            coords.append(c)
    return kept


# ---------------------------------------------------------------------------
# exact closed form for a single alternating form


def max_isotropic_single(M: np.ndarray, n: int) -> np.ndarray:
    """Rows of a maximal isotropic sublattice for one alternating form.

    Splits off a hyperbolic pair (e_i, e_j) with M[i, j] != 0, recurses on
    the saturated symplectic complement, and rejoins e_i, which pairs
    trivially with the whole complement.  Yields rank n - skew_rank(M).
    """
    if n == 0:
        return zeros(0, 0)
    A = intmat(M)
    pivot = None
    for i in range(n):
        for j in range(i + 1, n):
            if A[i, j] != 0:
                pivot = (i, j)
                break
        if pivot:
            break
    if pivot is None:
        return identity(n)
    i, j = pivot
    conditions = np.concatenate([A[i : i + 1], A[j : j + 1]], axis=0)
    C, _ = kernel_with_complement(conditions)
    sub = np.ascontiguousarray(C @ A @ C.T)
    W = max_isotropic_single(sub, C.shape[0])
    lifted = W @ C if W.shape[0] else zeros(0, n)
    e_i = zeros(1, n)
    e_i[0, i] = 1
    return np.concatenate([e_i, lifted], axis=0)


def single_form_dimension(M: np.ndarray) -> tuple[int, Sublattice]:
    """Maximal isotropic rank n - skew_rank(M) of one alternating form, with witness."""
    A = intmat(M)
    n = A.shape[0]
    r = skew_rank(A)
    witness = Sublattice.span(n, max_isotropic_single(A, n))
    if witness.rank != n - r:
        raise AssertionError("isotropic construction missed the closed-form rank")
    return n - r, witness


# ---------------------------------------------------------------------------
# sound upper bounds


def _combo_vectors(k: int, opts: SolverOptions):
    """Deterministic stream of integer combination vectors for pencil bounds."""
    seen = set()

    def emit(c):
        c = tuple(c)
        if any(c) and c not in seen:
            seen.add(c)
            return c
        return None

    count = 0
    for l in range(k):
        c = emit([1 if i == l else 0 for i in range(k)])
        if c:
            count += 1
            yield c
    for signs in itertools.product((1, -1), repeat=k - 1):
        if count >= opts.combo_samples:
            return
        c = emit((1,) + signs)
        if c:
            count += 1
            yield c
    rng = random.Random(opts.seed)
    attempts = 0
    while count < opts.combo_samples and attempts < 20 * opts.combo_samples:
        attempts += 1
        c = emit([rng.randint(-3, 3) for _ in range(k)])
        if c:
            count += 1
            yield c


def _pencil_upper(forms: list[np.ndarray], n: int, opts: SolverOptions) -> int:
    """Upper bound from single-form ranks of sampled integer combinations.

    A common isotropic sublattice is isotropic for every integer
    combination of the forms, hence its rank is at most n minus half the
    combination's matrix rank.
    """
    best = n
    floor = n - n // 2
    for c in _combo_vectors(len(forms), opts):
        F = zeros(n, n)
        for coeff, M in zip(c, forms):
            if coeff:
                F = F + coeff * M
        if all(x == 0 for x in F.flat):
            continue
        best = min(best, n - skew_rank(F))
        if best == floor:
            break
    return best


def _wedge_upper(forms: list[np.ndarray], n: int) -> int:
    """Upper bound by dimension count in the exterior square.

    The products v /\\ w of vectors from a rank-g isotropic sublattice span
    a g(g-1)/2-dimensional subspace annihilated by every form, viewed as a
    linear functional on the exterior square; that space has dimension
    C(n,2) minus the rank of the forms' coefficient matrix.
    """
    if not forms:
        return n
    coords = intmat([_form_coords(M, n) for M in forms])
    free_dim = n * (n - 1) // 2 - rank(coords)
    g = n
    while g > 1 and g * (g - 1) // 2 > free_dim:
        g -= 1
    return g


# ---------------------------------------------------------------------------
# lower-bound search


def _orthogonal_complement(v, forms: list[np.ndarray], n: int) -> np.ndarray:
    """Saturated basis of the vectors pairing trivially with v (contains v)."""
    rows = zeros(len(forms), n)
    vv = intmat([list(v)])
    for idx, M in enumerate(forms):
        rows[idx] = (vv @ M)[0]
    K, _ = kernel_with_complement(rows)
    return K


def _structured_candidates(forms: list[np.ndarray], n: int) -> list[tuple[int, ...]]:
    """Kernel vectors of individual forms and of simple sums: cheap isotropic seeds."""
    out: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def add_rows(rows):
        for row in rows:
            p = primitive(row)
            if any(p) and p not in seen:
                seen.add(p)
                out.append(p)

    for M in forms:
        add_rows(kernel(M).rows)
    if len(forms) > 1:
        total = zeros(n, n)
        alt = zeros(n, n)
        for idx, M in enumerate(forms):
            total = total + M
            alt = alt + (M if idx % 2 == 0 else -M)
        add_rows(kernel(total).rows)
        add_rows(kernel(alt).rows)
    return out


def _box_vectors(n: int, bound: int):
    """Canonical primitive vectors in [-bound, bound]^n, graded by |entries| sum.

    Within a degree, positions are filled left to right with values ordered
    0, 1, -1, 2, -2, ...; only representatives with positive leading entry
    and content one are produced.  The order is part of the determinism
    contract for witnesses.
    """
    values = [0]
    for a in range(1, bound + 1):
        values.extend((a, -a))

    def rec(pos: int, remaining: int, prefix: tuple[int, ...]):
        if pos == n:
            if remaining == 0:
                yield prefix
            return
        slots = n - pos - 1
        for val in values:
            a = abs(val)
            if a > remaining:
                break
            if remaining - a > slots * bound:
                continue
            yield from rec(pos + 1, remaining - a, prefix + (val,))

    for degree in range(1, n * bound + 1):
        for v in rec(0, degree, ()):
            lead = next((x for x in v if x != 0), 0)
            if lead < 0:
                continue
            if v != primitive(v):
                continue
            yield v


_CHUNK = 128


def _candidate_stream(forms: list[np.ndarray], n: int, opts: SolverOptions):
    """Structured seeds first, then boxed enumeration, in orth-rank-sorted chunks.

    Candidates whose orthogonal complement is larger are tried first; ties
    keep the enumeration order.  Sorting happens per chunk so the stream
    stays lazy and deterministic.
    """
    seen: set[tuple[int, ...]] = set()

    def ranked(vs):
        scored = []
        for v in vs:
            if v in seen:
                continue
            seen.add(v)
            comp = _orthogonal_complement(v, forms, n)
            scored.append((-comp.shape[0], v, comp))
        scored.sort(key=lambda t: t[0])
        return [(v, comp) for _, v, comp in scored]

    yield from ranked(_structured_candidates(forms, n))
    chunk: list[tuple[int, ...]] = []
    for v in _box_vectors(n, opts.search_bound):
        chunk.append(v)
        if len(chunk) >= _CHUNK:
            yield from ranked(chunk)
            chunk = []
    if chunk:
        yield from ranked(chunk)


def _split_radical(forms: list[np.ndarray], n: int) -> tuple[np.ndarray, np.ndarray]:
    """Rows spanning the common kernel of the forms, plus complementary rows."""
    if not forms:
        return identity(n), zeros(0, n)
    stacked = np.concatenate([intmat(M) for M in forms], axis=0)
    return kernel_with_complement(stacked)


class _Searcher:
    """Depth-first search for a maximum-rank common isotropic sublattice.

    Every maximal isotropic sublattice contains the common kernel of the
    forms, so each level strips that kernel, restricts to a complement, and
    branches on the first vector of the remaining witness; the chosen
    vector's orthogonal complement becomes the next level's lattice.  All
    coordinates are exact, so witnesses survive unbounded entry growth even
    though each level only enumerates small coordinate vectors.
    """

    def __init__(self, opts: SolverOptions, budget: _Budget):
        self.opts = opts
        self.budget = budget
        self.memo: dict = {}

    def run(self, forms: list[np.ndarray], n: int, target: int) -> tuple[int, np.ndarray]:
        got, rows, _ = self._solve(forms, n, target)
        return got, rows

    def _solve(self, forms, n, target):
        forms = _span_basis(forms, n)
        key = (n, tuple(tuple(int(x) for x in M.flat) for M in forms))
        cached = self.memo.get(key)
        if cached is not None:
            c_rank, c_rows, c_complete = cached
            if c_complete or c_rank >= target:
                return cached
        K, C = _split_radical(forms, n)
        r0 = K.shape[0]
        if r0 == n:
            result = (n, K, True)
            self.memo[key] = result
            return result
        qforms = [np.ascontiguousarray(C @ M @ C.T) for M in forms]
        qforms = _span_basis(qforms, C.shape[0])
        mq = C.shape[0]
        if len(qforms) == 1:
            W = max_isotropic_single(qforms[0], mq)
            rows = np.concatenate([K, W @ C], axis=0) if W.shape[0] else K
            result = (r0 + W.shape[0], rows, True)
            self.memo[key] = result
            return result
        best_rank, best_rows = r0, K
        complete = True
        for v, comp in _candidate_stream(qforms, mq, self.opts):
            if best_rank >= target:
                complete = False
                break
            if not self.budget.tick():
                complete = False
                break
            if r0 + comp.shape[0] <= best_rank:
                continue
            sforms = [np.ascontiguousarray(comp @ M @ comp.T) for M in qforms]
            sub_rank, sub_rows, sub_complete = self._solve(
                sforms, comp.shape[0], target - r0
            )
            complete = complete and sub_complete
            if r0 + sub_rank > best_rank:
                best_rank = r0 + sub_rank
                lifted = (sub_rows @ comp) @ C if sub_rows.shape[0] else zeros(0, n)
                best_rows = np.concatenate([K, lifted], axis=0)
        if self.budget.exhausted:
            complete = False
        result = (best_rank, best_rows, complete)
        prev = self.memo.get(key)
        if prev is None or best_rank > prev[0] or (complete and not prev[2]):
            self.memo[key] = result
        return result


# ---------------------------------------------------------------------------
# tensor-splitting certificate


def _components(mat: MultiparameterMatrix) -> list[tuple[int, ...]]:
    """Connected components of generators under 'does not commute with'."""
    n = mat.rank
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and not mat.entries[i][j].is_identity():
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _submatrix(mat: MultiparameterMatrix, idxs: tuple[int, ...]) -> MultiparameterMatrix:
    grid = tuple(tuple(mat.entries[i][j] for j in idxs) for i in idxs)
    return MultiparameterMatrix(len(idxs), mat.value_group, grid)


def _pair_bound(lo1, hi1, r1, cf1, lo2, hi2, r2, cf2) -> int:
    """Upper bound for the dimension of a two-factor tensor product.

    Uses the interval endpoints so that every comparison is sound even when
    a factor's dimension is only known as an interval: the bound is
    monotone in the factor dimensions, strict hypotheses are checked
    against the conservative endpoint, and 'center is trivial' is computed
    exactly.
    """
    b = min(hi1 + r2, hi2 + r1)
    if hi1 < r1 and hi2 < r2:
        b -= 1
        if lo1 >= 2 and lo2 >= 2 and r1 - hi1 >= 2 and r2 - hi2 >= 2 and cf1 and cf2:
            b -= 1
    return min(b, r1 + r2)


def _split_certificate(
    mat: MultiparameterMatrix,
    comps: list[tuple[int, ...]],
    opts: SolverOptions,
    budget: _Budget,
) -> tuple[int, int, np.ndarray]:
    """Bounds from the block decomposition of a visibly split pairing.

    Generators in different components commute, so the algebra is the
    tensor product of the component subalgebras: concatenated component
    witnesses give the lower bound, and folding the component intervals
    through the two-factor bound over all bipartitions gives the upper.
    """
    n = mat.rank
    infos = []
    for comp in comps:
        sub = _submatrix(mat, comp)
        res = _dimension(sub, opts, budget)
        infos.append(
            {
                "comp": comp,
                "lo": res.lower,
                "hi": res.upper,
                "rank": len(comp),
                "center": center_is_trivial(pairing_of(sub)),
                "rows": res.witness.rows,
            }
        )
    t = len(infos)
    table: dict[frozenset, tuple[int, int, int, bool]] = {}
    for i, info in enumerate(infos):
        table[frozenset([i])] = (info["lo"], info["hi"], info["rank"], info["center"])
    indices = list(range(t))
    for size in range(2, t + 1):
        for combo in itertools.combinations(indices, size):
            fs = frozenset(combo)
            lo = sum(infos[i]["lo"] for i in combo)
            rk = sum(infos[i]["rank"] for i in combo)
            cf = all(infos[i]["center"] for i in combo)
            hi = rk
            members = sorted(fs)
            head = members[0]
            rest = members[1:]
            for r in range(0, len(rest) + 1):
                for pick in itertools.combinations(rest, r):
                    s1 = frozenset([head, *pick])
                    s2 = fs - s1
                    if not s2:
                        continue
                    l1, h1, r1, c1 = table[s1]
                    l2, h2, r2, c2 = table[s2]
                    hi = min(hi, _pair_bound(l1, h1, r1, c1, l2, h2, r2, c2))
            hi = max(hi, lo)
            table[fs] = (lo, hi, rk, cf)
    lo, hi, _, _ = table[frozenset(indices)]
    rows = zeros(sum(len(i["rows"]) for i in infos), n)
    at = 0
    for info in infos:
        for row in info["rows"]:
            for col, val in zip(info["comp"], row):
                rows[at, col] = val
            at += 1
    return lo, hi, rows


# ---------------------------------------------------------------------------
# the solver proper


def _dimension(
    mat: MultiparameterMatrix, opts: SolverOptions, budget: _Budget
) -> DimensionResult:
    p = pairing_of(mat)
    n = mat.rank
    forms = _span_basis(free_reduction(p), n)
    rad_rows, comp_rows = _split_radical(forms, n)
    r0 = rad_rows.shape[0]
    mq = n - r0

    if mq == 0:
        lower = upper = n
        wit_rows = rad_rows
    else:
        qforms = _span_basis(
            [np.ascontiguousarray(comp_rows @ M @ comp_rows.T) for M in forms], mq
        )
        if len(qforms) <= 1:
            value, wq = single_form_dimension(qforms[0]) if qforms else (mq, Sublattice.full(mq))
            lower = upper = r0 + value
            lifted = wq.matrix @ comp_rows if wq.rank else zeros(0, n)
            wit_rows = np.concatenate([rad_rows, lifted], axis=0)
        else:
            upper = r0 + min(
                _pencil_upper(qforms, mq, opts), _wedge_upper(qforms, mq)
            )
            comps = _components(mat)
            split = None
            if len(comps) >= 2:
                split = _split_certificate(mat, comps, opts, budget)
                upper = min(upper, split[1])
            lower, wit_rows = r0, rad_rows
            if split is not None and split[0] > lower:
                lower, wit_rows = split[0], split[2]
            if lower < upper:
                searcher = _Searcher(opts, budget)
                found, rows_q = searcher.run(qforms, mq, upper - r0)
                if r0 + found > lower:
                    lower = r0 + found
                    lifted = rows_q @ comp_rows if rows_q.shape[0] else zeros(0, n)
                    wit_rows = np.concatenate([rad_rows, lifted], axis=0)
            if lower == 0:
                # Any single vector spans a commutative sublattice.
                lower, wit_rows = 1, identity(n)[:1]

    upper = min(upper, n)
    if lower > upper:
        raise AssertionError("certified lower bound exceeded the upper bound")
    witness = Sublattice.span(n, wit_rows)
    if witness.rank < lower:
        raise AssertionError("witness rank fell short of the certified lower bound")
    if mat.value_group.torsion_order > 1 and not is_commutative(p, witness):
        witness = witness.scaled(mat.value_group.torsion_order)
    if not is_commutative(p, witness):
        raise AssertionError("witness is not commutative for the pairing")
    return DimensionResult(lower, upper, lower == upper, witness)


def dimension(mat: MultiparameterMatrix, opts: SolverOptions | None = None) -> DimensionResult:
    """Certified dimension interval of the quantum torus presented by ``mat``."""
    opts = opts or SolverOptions()
    return _dimension(mat, opts, _Budget(opts))


def codimension(mat: MultiparameterMatrix, opts: SolverOptions | None = None) -> int:
    """rank minus dimension; refuses to answer from an inexact interval."""
    res = dimension(mat, opts)
    if not res.exact:
        raise InexactDimensionError(
            f"dimension only certified in [{res.lower}, {res.upper}]; codimension inconclusive"
        )
    return mat.rank - res.lower


# ---------------------------------------------------------------------------
# independent brute-force oracle

_BRUTE_MAX_RANK = 6
_BRUTE_MAX_BOUND = 3
_INT64_SAFE = 1 << 20


_CANDIDATE_CACHE: dict[tuple[int, int], list[tuple[int, ...]]] = {}


def _brute_candidates(n: int, bound: int) -> list[tuple[int, ...]]:
    key = (n, bound)
    if key not in _CANDIDATE_CACHE:
        _CANDIDATE_CACHE[key] = list(_box_vectors(n, bound))
    return _CANDIDATE_CACHE[key]


_Echelon = list[tuple[int, tuple[int, ...]]]


def _echelon_add(ech: _Echelon, vec) -> _Echelon | None:
    """Fraction-free echelon extension; None when ``vec`` is dependent."""
    w = list(vec)
    for piv, row in ech:
        if w[piv]:
            a, b = row[piv], w[piv]
            w = [a * x - b * y for x, y in zip(w, row)]
    for p, x in enumerate(w):
        if x:
            return ech + [(p, tuple(w))]
    return None


def _echelon_reach(ech: _Echelon, vectors, cap: int) -> int:
    """Rank of the echelon extended by ``vectors``, stopping early at ``cap``."""
    r = len(ech)
    if r >= cap:
        return r
    for vec in vectors:
        grown = _echelon_add(ech, vec)
        if grown is not None:
            ech = grown
            r += 1
            if r >= cap:
                return r
    return r


def brute_force_dimension(
    mat: MultiparameterMatrix, entry_bound: int = 2, node_limit: int | None = None
) -> int:
    """Exhaustive oracle: largest independent pairwise-commuting vector set.

    Enumerates canonical primitive vectors with entries in
    [-entry_bound, entry_bound] and maximizes the cardinality of linearly
    independent sets on which the full pairing (torsion included) vanishes.
    Shares nothing with the interval solver beyond the pairing definition.

    Refuses oversized inputs, and with ``node_limit`` set also refuses
    (deterministically) instances whose search tree outgrows the limit, so
    callers never receive an under-explored maximum.
    """
    n = mat.rank
    if n > _BRUTE_MAX_RANK or entry_bound > _BRUTE_MAX_BOUND:
        raise ResourceLimitError(
            f"brute force refused: rank {n} > {_BRUTE_MAX_RANK} or bound"
            f" {entry_bound} > {_BRUTE_MAX_BOUND}"
        )
    p = pairing_of(mat)
    cands = _brute_candidates(n, entry_bound)
    N = len(cands)
    if N == 0:
        return 1
    m = mat.value_group.torsion_order
    max_entry = 0
    for M in list(p.free_forms) + [p.torsion_form]:
        for x in M.flat:
            max_entry = max(max_entry, abs(int(x)))
    iso = np.ones((N, N), dtype=bool)
    C = np.array(cands, dtype=np.int64)
    if max_entry * entry_bound * entry_bound * n * n < _INT64_SAFE:
        for M in p.free_forms:
            vals = C @ M.astype(np.int64) @ C.T
            iso &= vals == 0
        if m > 1:
            vals = (C @ p.torsion_form.astype(np.int64) @ C.T) % m
            iso &= vals == 0
    else:
        for a in range(N):
            for b in range(a + 1, N):
                ok = p.commutator(cands[a], cands[b]).is_identity()
                iso[a, b] = iso[b, a] = ok
    best = 1
    nodes = [node_limit if node_limit is not None else -1]

    def extend(depth: int, ech: _Echelon, mask: np.ndarray):
        nonlocal best
        if nodes[0] == 0:
            raise ResourceLimitError(
                f"brute force refused: node limit {node_limit} exhausted"
            )
        if nodes[0] > 0:
            nodes[0] -= 1
        if depth > best:
            best = depth
        if best == n:
            return
        idxs = np.nonzero(mask)[0]
        if depth + len(idxs) <= best:
            return
        # Vectors compatible with the whole pool can be taken greedily: by
        # matroid exchange some maximum solution contains any maximal
        # independent subset of them, so they never need to be branched on.
        sub = iso[np.ix_(idxs, idxs)]
        universal = idxs[sub.all(axis=1)]
        if universal.size:
            for i in universal:
                grown = _echelon_add(ech, cands[i])
                if grown is not None:
                    ech = grown
                    depth += 1
            mask = mask.copy()
            mask[universal] = False
            idxs = np.nonzero(mask)[0]
            if depth > best:
                best = depth
            if best == n:
                return
            if depth + len(idxs) <= best:
                return
        # No superset of the chosen vectors inside the compatible pool can
        # exceed the pool's joint rank; skip the subtree when that rank
        # cannot beat the current best.
        if _echelon_reach(ech, (cands[i] for i in idxs), best + 1) <= best:
            return
        for pos, i in enumerate(idxs):
            if depth + (len(idxs) - pos) <= best:
                break
            grown = _echelon_add(ech, cands[i])
            if grown is None:
                continue
            new_mask = mask & iso[i]
            new_mask[: i + 1] = False
            extend(depth + 1, grown, new_mask)

    extend(0, [], np.ones(N, dtype=bool))
    return best
