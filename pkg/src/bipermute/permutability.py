"""Searches for product-preserving permutations of matrix sequences.

A sequence A_1..A_k is permutation-rigid when only the identity ordering
yields its product; strong permutability asserts a non-trivial preserving
permutation exists for every long-enough tuple.  The searcher here tries a
fixed strategy ladder (equal pair, adjacent transpositions, general
transpositions, random shuffles, full enumeration) and always re-verifies a
candidate exactly before reporting it.

The path-assignment machinery realizes the combinatorial argument for weak
permutability: every entry of a permuted product is attained by one path in
the complete directed graph on the index set, and two permutations inducing
the same per-matrix edge assignment necessarily have equal products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    CapExceeded,
    DomainError,
    EmptySequence,
    LengthMismatch,
    ShapeMismatch,
)
from .matrices import FULL, Matrix, mat_mul, prefix_suffix_products, seq_product
from .sampling import DEFAULT_SEED, derive_rng

EXHAUSTIVE_CAP_DEFAULT = 8
SEGMENT_STORAGE_CAP = 2048  # beyond this, the O(k^2) transposition scan is skipped

Perm = tuple[int, ...]


def identity_perm(k: int) -> Perm:
    return tuple(range(k))


def transposition(k: int, i: int, j: int) -> Perm:
    perm = list(range(k))
    perm[i], perm[j] = perm[j], perm[i]
    return tuple(perm)


def is_permutation(perm: Sequence[int], k: int) -> bool:
    return len(perm) == k and sorted(perm) == list(range(k))


def perm_kind(perm: Perm) -> str:
    """Shape of a permutation: adjacent_transposition, transposition or general."""
    moved = [i for i, v in enumerate(perm) if v != i]
    if len(moved) == 2 and perm[moved[0]] == moved[1] and perm[moved[1]] == moved[0]:
        return "adjacent_transposition" if moved[1] == moved[0] + 1 else "transposition"
    return "general"


@dataclass(frozen=True)
class SearchPolicy:
    exhaustive_cap: int = EXHAUSTIVE_CAP_DEFAULT
    try_equal_pair: bool = True
    try_adjacent: bool = True
    try_all_transpositions: bool = True
    random_trials: int = 0
    seed: int = DEFAULT_SEED


@dataclass(frozen=True)
class IdentityOnly:
    k: int
    evidence: str = "exhaustive"


@dataclass(frozen=True)
class Found:
    perm: Perm
    kind: str
    strategy: str


@dataclass(frozen=True)
class NoneFoundUnderPolicy:
    policy: SearchPolicy


PermutationWitness = Union[IdentityOnly, Found, NoneFoundUnderPolicy]


def apply_perm_product(seq: Sequence[Matrix], perm: Sequence[int]) -> Matrix:
    """Product of the sequence taken in permuted order: seq[perm[0]] * seq[perm[1]] * ..."""
    if not seq:
        raise EmptySequence("no matrices to multiply")
    if not is_permutation(perm, len(seq)):
        raise LengthMismatch(f"{perm!r} is not a permutation of 0..{len(seq) - 1}")
    return seq_product([seq[i] for i in perm])


def _combine(*parts: Optional[Matrix]) -> Matrix:
    acc = None
    for p in parts:
        if p is not None:
            acc = p if acc is None else mat_mul(acc, p)
    return acc


def _exhaustive_search(seq: Sequence[Matrix], target: Matrix) -> Optional[Perm]:
    """First non-identity preserving permutation in lexicographic order, if any.

    Depth-first enumeration shares prefix products between permutations with
    a common prefix, costing about e * k! matrix products in total.
    """
    k = len(seq)
    identity = identity_perm(k)
    chosen: list[int] = []
    used = [False] * k

    def rec(prefix: Optional[Matrix]) -> Optional[Perm]:
        depth = len(chosen)
        for idx in range(k):
            if used[idx]:
                continue
            prod = seq[idx] if prefix is None else mat_mul(prefix, seq[idx])
            chosen.append(idx)
            used[idx] = True
            if depth + 1 == k:
                perm = tuple(chosen)
                if perm != identity and prod == target:
                    chosen.pop()
                    used[idx] = False
                    return perm
            else:
                hit = rec(prod)
                if hit is not None:
                    chosen.pop()
                    used[idx] = False
                    return hit
            chosen.pop()
            used[idx] = False
        return None

    return rec(None)


def exhaustive_identity_only(seq: Sequence[Matrix], cap: int = EXHAUSTIVE_CAP_DEFAULT) -> bool:
    """True iff no non-trivial permutation preserves the product (full sweep)."""
    if len(seq) > cap:
        raise CapExceeded(f"sequence length {len(seq)} exceeds the exhaustive cap {cap}")
    target = seq_product(seq)
    return _exhaustive_search(seq, target) is None


def _verified(seq: Sequence[Matrix], target: Matrix, perm: Perm, strategy: str) -> Optional[Found]:
    if apply_perm_product(seq, perm) == target:
        return Found(perm, perm_kind(perm), strategy)
    return None


def find_preserving_permutation(seq: Sequence[Matrix], policy: SearchPolicy = SearchPolicy()) -> PermutationWitness:
    """Deterministic strategy ladder for a non-trivial product-preserving permutation.

    Strategies run in a fixed order (equal pair, adjacent transpositions,
    all transpositions, random shuffles, exhaustive enumeration) and the
    first verified witness in canonical order is returned.  An exhaustive
    sweep that finds nothing proves the product is identity-only; otherwise
    a failed search is reported as none-found-under-policy.
    """
    k = len(seq)
    if k < 2:
        raise LengthMismatch("need at least two matrices")
    target = seq_product(seq)

    if policy.try_equal_pair:
        seen: dict[Matrix, int] = {}
        for idx, m in enumerate(seq):
            prev = seen.get(m)
            if prev is not None:
                hit = _verified(seq, target, transposition(k, prev, idx), "equal_pair")
                if hit:
                    return hit
            else:
                seen[m] = idx

    prefixes = suffixes = None
    if policy.try_adjacent:
        prefixes, suffixes = prefix_suffix_products(seq)
        for t in range(k - 1):
            tail = suffixes[t + 2] if t + 2 < k else None
            cand = _combine(prefixes[t], seq[t + 1], seq[t], tail)
            if cand == target:
                hit = _verified(seq, target, transposition(k, t, t + 1), "adjacent")
                if hit:
                    return hit

    if policy.try_all_transpositions and k <= SEGMENT_STORAGE_CAP:
        if prefixes is None:
            prefixes, suffixes = prefix_suffix_products(seq)
        start_gap = 2 if policy.try_adjacent else 1
        for i in range(k - 1):
            mid = None if start_gap == 1 else seq[i + 1]
            for j in range(i + start_gap, k):
                tail = suffixes[j + 1] if j + 1 < k else None
                cand = _combine(prefixes[i], seq[j], mid, seq[i], tail)
                if cand == target:
                    hit = _verified(seq, target, transposition(k, i, j), "transposition")
                    if hit:
                        return hit
                mid = seq[j] if mid is None else mat_mul(mid, seq[j])

    if policy.random_trials > 0:
        rng = derive_rng(policy.seed, "find_preserving_permutation", "random")
        identity = identity_perm(k)
        for _ in range(policy.random_trials):
            perm = list(range(k))
            rng.shuffle(perm)
            tperm = tuple(perm)
            if tperm == identity:
                continue
            hit = _verified(seq, target, tperm, "random")
            if hit:
                return hit

    if k <= policy.exhaustive_cap:
        perm = _exhaustive_search(seq, target)
        if perm is not None:
            hit = _verified(seq, target, perm, "exhaustive")
            if hit:
                return hit
        else:
            return IdentityOnly(k)

    return NoneFoundUnderPolicy(policy)


# -- path assignments --------------------------------------------------------


@dataclass(frozen=True)
class PathAssignment:
    """Per-matrix edge choices explaining every entry of a permuted product.

    ``edges[i][x][y]`` is the edge of the complete directed graph on the
    index set whose entry of matrix i contributes to the (x, y) entry of the
    permuted product.
    """

    n: int
    k: int
    edges: tuple[tuple[tuple[tuple[int, int], ...], ...], ...]


def path_assignment(seq: Sequence[Matrix], perm: Sequence[int]) -> PathAssignment:
    """Choose, for every entry, an attaining path of the permuted product.

    Bipotency guarantees each entry of the product equals the value of at
    least one path; ties are broken toward the lexicographically least
    sequence of intermediate nodes so the assignment is deterministic.
    """
    if not seq:
        raise EmptySequence("no matrices")
    k = len(seq)
    if not is_permutation(perm, k):
        raise LengthMismatch(f"{perm!r} is not a permutation of 0..{k - 1}")
    if any(m.family != FULL for m in seq):
        raise DomainError("path assignments are defined for full matrices only")
    n = seq[0].n
    desc = seq[0].semiring
    mul = desc._mul
    sigma_seq = [seq[p] for p in perm]
    target = seq_product(sigma_seq)
    _, suffixes = prefix_suffix_products(sigma_seq)

    edges = [[[None] * n for _ in range(n)] for _ in range(k)]
    for x in range(n):
        for y in range(n):
            goal = target.entries[x][y]
            cur = x
            acc = None
            for t in range(k):
                row = sigma_seq[t].entries[cur]
                candidates = range(n) if t < k - 1 else (y,)
                for u in candidates:
                    step = row[u] if acc is None else mul(acc, row[u])
                    if t + 1 < k:
                        total = mul(step, suffixes[t + 1].entries[u][y])
                    else:
                        total = step
                    if total == goal:
                        edges[perm[t]][x][y] = (cur, u)
                        acc = step
                        cur = u
                        break
                else:
                    raise DomainError("no attaining path; non-bipotent semiring?")
    frozen = tuple(tuple(tuple(row) for row in plane) for plane in edges)
    return PathAssignment(n, k, frozen)


def reconstruct_from_assignment(seq: Sequence[Matrix], pa: PathAssignment) -> Matrix:
    """Multiply each matrix's assigned entry, in original order, per entry.

    When the assignment came from ``path_assignment(seq, perm)`` this equals
    the permuted product, by commutativity of the scalar multiplication.
    """
    if len(seq) != pa.k:
        raise ShapeMismatch(f"assignment is for {pa.k} matrices, got {len(seq)}")
    if not seq or seq[0].n != pa.n:
        raise ShapeMismatch("dimension mismatch between sequence and assignment")
    desc = seq[0].semiring
    mul = desc._mul
    n = pa.n
    rows = []
    for x in range(n):
        out = []
        for y in range(n):
            acc = None
            for i in range(pa.k):
                r, c = pa.edges[i][x][y]
                v = seq[i].entries[r][c]
                acc = v if acc is None else mul(acc, v)
            out.append(acc)
        rows.append(tuple(out))
    return Matrix(desc, FULL, tuple(rows))


def weak_bound(n: int) -> int:
    """Smallest k with k! > c^k for c = n^(2n^2), by exact integer comparison.

    This is the tuple length at which the path-assignment pigeonhole forces
    two orderings to agree.  Exact factorials keep the answer provable; the
    bound is practical to evaluate for n <= 2 (already astronomically large
    as an experiment), while n >= 3 would need factorials of ~e*c terms.
    """
    if n < 1:
        raise DomainError("dimension must be at least 1")
    c = n ** (2 * n * n)
    if c <= 16:
        kfact, cpow, k = 1, 1, 0
        while True:
            k += 1
            kfact *= k
            cpow *= c
            if kfact > cpow:
                return k
    # k! <= k^k <= c^k for k <= c, and k!/c^k grows monotonically past c,
    # so the unique crossing can be bisected.
    def crossed(k: int) -> bool:
        return math.factorial(k) > c ** k

    lo, hi = c, 2 * c
    while not crossed(hi):
        lo, hi = hi, hi * 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if crossed(mid):
            hi = mid
        else:
            lo = mid
    return hi
