"""Permutation products, the witness search ladder, and path assignments."""

from fractions import Fraction as F

import pytest

from bipermute.constructions import witness_U3_Nmax, witness_U3_negNmax
from bipermute.errors import CapExceeded, DomainError, LengthMismatch
from bipermute.matrices import FULL, Matrix, mat_mul, seq_product
from bipermute.permutability import (
    Found,
    IdentityOnly,
    NoneFoundUnderPolicy,
    SearchPolicy,
    apply_perm_product,
    exhaustive_identity_only,
    find_preserving_permutation,
    identity_perm,
    path_assignment,
    perm_kind,
    reconstruct_from_assignment,
    transposition,
    weak_bound,
)
from bipermute.sampling import derive_rng, sample_matrix
from bipermute.scalars import NEG_INF, Atom
from bipermute.semirings import boolean, chain, tropical, trunc


def test_apply_perm_product_basics():
    rng = derive_rng(1, "perm-basics")
    seq = [sample_matrix(tropical(), 2, rng) for _ in range(4)]
    assert apply_perm_product(seq, identity_perm(4)) == seq_product(seq)
    with pytest.raises(LengthMismatch):
        apply_perm_product(seq, (0, 1, 2))
    with pytest.raises(LengthMismatch):
        apply_perm_product(seq, (0, 0, 1, 2))


def test_swapping_equal_matrices_is_neutral():
    rng = derive_rng(2, "equal-swap")
    a = sample_matrix(trunc(1, 3), 2, rng)
    b = sample_matrix(trunc(1, 3), 2, rng)
    seq = [a, a, b]
    assert apply_perm_product(seq, (1, 0, 2)) == seq_product(seq)


def test_commuting_diagonal_reversal():
    desc = trunc(1, 3)
    d1 = Matrix.make(desc, FULL, [[2, NEG_INF], [NEG_INF, F(5, 2)]])
    d2 = Matrix.make(desc, FULL, [[F(3, 2), NEG_INF], [NEG_INF, 1]])
    assert apply_perm_product([d1, d2], (1, 0)) == seq_product([d1, d2])


def test_perm_kind():
    assert perm_kind(transposition(5, 1, 2)) == "adjacent_transposition"
    assert perm_kind(transposition(5, 0, 3)) == "transposition"
    assert perm_kind((1, 2, 0)) == "general"


# -- the search ladder ---------------------------------------------------------


def test_equal_pair_strategy():
    rng = derive_rng(3, "ladder-equal")
    a = sample_matrix(chain(5), 2, rng)
    b = sample_matrix(chain(5), 2, rng)
    w = find_preserving_permutation([a, a, b])
    assert isinstance(w, Found) and w.strategy == "equal_pair" and w.perm == (1, 0, 2)


def test_identity_only_for_rigid_families():
    w = find_preserving_permutation(witness_U3_Nmax(5))
    assert w == IdentityOnly(5)
    assert exhaustive_identity_only(witness_U3_Nmax(4))
    assert exhaustive_identity_only(witness_U3_negNmax(4))


def test_exhaustive_identity_only_basics():
    rng = derive_rng(4, "exh")
    a = sample_matrix(boolean(), 2, rng)
    assert not exhaustive_identity_only([a, a])
    with pytest.raises(CapExceeded):
        exhaustive_identity_only([a] * 9, cap=8)
    # appending a duplicate of any member forces a witness to exist
    seq = witness_U3_Nmax(4)
    assert exhaustive_identity_only(seq)
    assert not exhaustive_identity_only(list(seq) + [seq[0]], cap=8)


def test_adjacent_fast_path_agrees_with_naive():
    rng = derive_rng(5, "adjacent-agree")
    for i in range(1000):
        desc = [chain(4), trunc(1, 2), boolean(), tropical()][i % 4]
        k = rng.randint(2, 7)
        seq = [sample_matrix(desc, 2, rng) for _ in range(k)]
        target = seq_product(seq)
        policy = SearchPolicy(try_equal_pair=False, try_all_transpositions=False,
                              random_trials=0, exhaustive_cap=0)
        w = find_preserving_permutation(seq, policy)
        naive = None
        for t in range(k - 1):
            if apply_perm_product(seq, transposition(k, t, t + 1)) == target:
                naive = transposition(k, t, t + 1)
                break
        if naive is None:
            assert isinstance(w, NoneFoundUnderPolicy)
        else:
            assert isinstance(w, Found) and w.perm == naive and w.strategy == "adjacent"


def test_found_witnesses_reverify():
    rng = derive_rng(6, "reverify")
    for i in range(100):
        desc = [chain(4), boolean(), trunc(1, 2)][i % 3]
        k = rng.randint(2, 6)
        seq = [sample_matrix(desc, 2, rng) for _ in range(k)]
        w = find_preserving_permutation(seq, SearchPolicy(random_trials=20, seed=i))
        if isinstance(w, Found):
            assert w.perm != identity_perm(k)
            assert apply_perm_product(seq, w.perm) == seq_product(seq)


def test_transposition_stage_and_policy_gates():
    # a, b do not commute, so in [a, b, a] no adjacent swap preserves the
    # product but the outer transposition trivially does
    a = Matrix.make(tropical(), FULL, [[0, 1], [NEG_INF, 0]])
    b = Matrix.make(tropical(), FULL, [[0, NEG_INF], [1, 0]])
    assert mat_mul(a, b) != mat_mul(b, a)
    seq = [a, b, a]
    no_equal = SearchPolicy(try_equal_pair=False, try_adjacent=False, random_trials=0, exhaustive_cap=0)
    w = find_preserving_permutation(seq, no_equal)
    assert isinstance(w, Found) and w.perm == (2, 1, 0) and w.strategy == "transposition"
    nothing = SearchPolicy(try_equal_pair=False, try_adjacent=False, try_all_transpositions=False,
                           random_trials=0, exhaustive_cap=0)
    assert isinstance(find_preserving_permutation(seq, nothing), NoneFoundUnderPolicy)


def test_random_stage_is_deterministic():
    rng = derive_rng(8, "rand-stage")
    seq = [sample_matrix(boolean(), 2, rng) for _ in range(10)]
    policy = SearchPolicy(try_equal_pair=False, try_adjacent=False, try_all_transpositions=False,
                          random_trials=50, exhaustive_cap=0, seed=123)
    w1 = find_preserving_permutation(seq, policy)
    w2 = find_preserving_permutation(seq, policy)
    assert w1 == w2


def test_pigeonhole_boolean_17():
    rng = derive_rng(9, "pigeon")
    for _ in range(50):
        seq = [sample_matrix(boolean(), 2, rng) for _ in range(17)]
        w = find_preserving_permutation(seq)
        assert isinstance(w, Found) and w.strategy == "equal_pair"


# -- path assignments ------------------------------------------------------------


def test_path_assignment_trivia():
    desc = chain(4)
    m = Matrix.make(desc, FULL, [[Atom(1), Atom(2)], [Atom(3), Atom(0)]])
    pa = path_assignment([m], (0,))
    for x in range(2):
        for y in range(2):
            assert pa.edges[0][x][y] == (x, y)
    one = Matrix.make(desc, FULL, [[Atom(2)]])
    pa = path_assignment([one, one, one], (2, 0, 1))
    assert all(pa.edges[i][0][0] == (0, 0) for i in range(3))
    with pytest.raises(DomainError):
        path_assignment([Matrix.make(tropical(), "ut", [[1, 2], [NEG_INF, 3]])], (0,))


def test_reconstruction_identity_random():
    rng = derive_rng(10, "pa-recon")
    for i in range(300):
        desc = [chain(4), boolean(), trunc(1, 2), tropical()][i % 4]
        n = rng.randint(1, 3)
        k = rng.randint(1, 6)
        seq = [sample_matrix(desc, n, rng) for _ in range(k)]
        perm = list(range(k))
        rng.shuffle(perm)
        perm = tuple(perm)
        pa = path_assignment(seq, perm)
        assert reconstruct_from_assignment(seq, pa) == apply_perm_product(seq, perm)


def test_equal_assignments_give_equal_products():
    from itertools import permutations

    rng = derive_rng(11, "pa-collide")
    seq = [sample_matrix(boolean(), 2, rng) for _ in range(4)]
    by_pa = {}
    collisions = 0
    for perm in permutations(range(4)):
        pa = path_assignment(seq, perm)
        prod = apply_perm_product(seq, perm)
        if pa in by_pa:
            collisions += 1
            assert by_pa[pa] == prod
        else:
            by_pa[pa] = prod
    assert collisions > 0  # booleans collide a lot at k=4


# -- the weak-permutability bound --------------------------------------------------


def _weak_bound_oracle(n: int) -> int:
    # independent linear scan with running factorial and power
    c = n ** (2 * n * n)
    kfact, cpow, k = 1, 1, 0
    while True:
        k += 1
        kfact *= k
        cpow *= c
        if kfact > cpow:
            return k


def test_weak_bound():
    assert weak_bound(1) == 2
    k2 = weak_bound(2)
    assert k2 == _weak_bound_oracle(2)
    c = 2 ** 8
    import math

    assert math.factorial(k2) > c ** k2
    assert math.factorial(k2 - 1) <= c ** (k2 - 1)
    with pytest.raises(DomainError):
        weak_bound(0)
