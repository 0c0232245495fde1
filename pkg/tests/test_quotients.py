"""Congruence quotients, their verification, and the transposition finders."""

from fractions import Fraction as F

import pytest

from bipermute.errors import DomainError, InfeasibleExhaustive, LengthTooShort, PatternMismatch
from bipermute.matrices import FULL, Matrix, mat_mul, seq_product
from bipermute.permutability import Found, apply_perm_product
from bipermute.quotients import (
    CongruenceQuotient,
    Interval,
    Singleton,
    chain_class_bound,
    chain_congruence,
    kerperm_bound,
    kerperm_find_swap,
    min_entry_case_bound,
    trunc12_class_bound,
    trunc12_congruence,
    truncperm_bound,
    verify_congruence,
    xperm_bound,
    xperm_find,
)
from bipermute.sampling import derive_rng, sample_matrix, sample_scalar
from bipermute.scalars import NEG_INF, Atom
from bipermute.semirings import Exhaustive, Sampled, chain, check_axioms, trunc


def test_chain_congruence_layout():
    q = chain_congruence(chain(10), [Atom(3), Atom(7)])
    assert q.classes == (
        Interval(Atom(0), Atom(2)),
        Singleton(Atom(3)),
        Interval(Atom(4), Atom(6)),
        Singleton(Atom(7)),
        Interval(Atom(8), Atom(9)),
    )
    assert [q.class_of(Atom(i)) for i in range(10)] == [0, 0, 0, 1, 2, 2, 2, 3, 4, 4]
    assert len(q.classes) <= 2 * 2 + 1


def test_chain_congruence_edges():
    assert len(chain_congruence(chain(6), []).classes) == 1
    q = chain_congruence(chain(4), [Atom(i) for i in range(4)])
    assert all(isinstance(c, Singleton) for c in q.classes)
    with pytest.raises(DomainError):
        chain_congruence(chain(4), [Atom(9)])
    with pytest.raises(DomainError):
        chain_congruence(trunc(1, 2), [Atom(0)])


def test_trunc12_congruence_layout():
    q = trunc12_congruence([F(3, 2)])
    assert q.classes == (
        Singleton(NEG_INF),
        Singleton(0),
        Interval(F(1), F(3, 2), lo_open=False, hi_open=True),
        Singleton(F(3, 2)),
        Interval(F(3, 2), F(2), lo_open=True, hi_open=False),
    )
    assert len(trunc12_congruence([]).classes) == 3
    # protected endpoints collapse their empty side intervals
    q2 = trunc12_congruence([1, 2])
    assert len(q2.classes) == 5  # {-inf},{0},{1},(1,2),{2}
    assert len(q2.classes) <= 2 * 2 + 3


def test_quotient_tables_are_lawful():
    for q in (
        chain_congruence(chain(10), [Atom(3), Atom(7)]),
        trunc12_congruence([F(3, 2), F(9, 8)]),
        trunc12_congruence([]),
    ):
        assert check_axioms(q.quotient_semiring(), Exhaustive()).passed


def test_verify_congruence_modes():
    q = chain_congruence(chain(10), [Atom(3), Atom(7)])
    assert verify_congruence(q, Exhaustive()).passed
    q2 = trunc12_congruence([F(3, 2)])
    report = verify_congruence(q2, Sampled(seed=42, trials=10_000))
    assert report.passed
    with pytest.raises(InfeasibleExhaustive):
        verify_congruence(q2, Exhaustive())


def test_verify_congruence_negative_controls():
    # merging {0} into the first interval breaks the product law: 0 is the
    # identity while everything >= 1 multiplies to the top class
    src = trunc(1, 2)
    classes = (
        Singleton(NEG_INF),
        Interval(F(0), F(3, 2), lo_open=False, hi_open=True),
        Singleton(F(3, 2)),
        Interval(F(3, 2), F(2), lo_open=True, hi_open=False),
    )
    good = trunc12_congruence([F(3, 2)])
    corrupted = CongruenceQuotient(src, classes, (NEG_INF, 0, F(3, 2), F(7, 4)), good.tables)
    report = verify_congruence(corrupted, Sampled(seed=5, trials=4000))
    assert not report.passed
    failed = {c.name for c in report.checks if not c.passed}
    assert "mul_congruence" in failed
    bad = next(c for c in report.checks if c.name == "mul_congruence")
    assert bad.counterexample is not None

    # overlapping intervals break the partition check
    overlapping = CongruenceQuotient(
        src,
        (
            Singleton(NEG_INF),
            Singleton(0),
            Interval(F(1), F(8, 5), lo_open=False, hi_open=True),
            Interval(F(3, 2), F(2), lo_open=False, hi_open=False),
        ),
        (NEG_INF, 0, 1, F(7, 4)),
        trunc12_congruence([]).tables,
    )
    report = verify_congruence(overlapping, Sampled(seed=6, trials=4000))
    assert not report.passed
    assert any(c.name == "partition" and not c.passed for c in report.checks)


def test_kernel_image_is_a_homomorphism():
    rng = derive_rng(30, "psi-hom")
    q = trunc12_congruence([F(5, 4), F(7, 4)])
    for _ in range(100):
        a = sample_matrix(trunc(1, 2), 2, rng)
        b = sample_matrix(trunc(1, 2), 2, rng)
        assert q.kernel_image(mat_mul(a, b)) == mat_mul(q.kernel_image(a), q.kernel_image(b))


def test_kerperm_bounds():
    assert kerperm_bound(11, 2) == 14642
    assert kerperm_bound(9, 2) == 6562
    assert kerperm_bound(1, 5) == 2
    assert chain_class_bound(2) == 9 and trunc12_class_bound(2) == 11


def test_kerperm_find_swap_chain():
    rng = derive_rng(31, "kerperm-chain")
    desc = chain(40)
    seq = [sample_matrix(desc, 2, rng) for _ in range(kerperm_bound(9, 2))]
    w = kerperm_find_swap(seq)
    assert isinstance(w, Found)
    assert w.kind in ("transposition", "adjacent_transposition")
    assert apply_perm_product(seq, w.perm) == seq_product(seq)
    with pytest.raises(LengthTooShort):
        kerperm_find_swap(seq[:100])


def test_kerperm_find_swap_trunc12():
    rng = derive_rng(32, "kerperm-t12")
    desc = trunc(1, 2)
    seq = [sample_matrix(desc, 2, rng) for _ in range(kerperm_bound(11, 2))]
    w = kerperm_find_swap(seq)
    assert isinstance(w, Found)
    assert apply_perm_product(seq, w.perm) == seq_product(seq)
    with pytest.raises(DomainError):
        kerperm_find_swap([sample_matrix(trunc(1, 3), 2, rng) for _ in range(10)])


# -- the pattern finder ---------------------------------------------------------


def smat(desc, a, b):
    return Matrix.make(desc, FULL, [[0, a], [NEG_INF, b]])


def test_xperm_bounds():
    assert xperm_bound(3) == 11
    assert xperm_bound(F(5, 2)) == 11
    assert min_entry_case_bound(3) == 17 * 93
    assert truncperm_bound(3) == 20553


def test_xperm_case_routing():
    desc = trunc(1, 3)
    base = [smat(desc, 1, 2) for _ in range(11)]

    right_zero = list(base)
    right_zero[5] = smat(desc, 2, NEG_INF)
    w = xperm_find(right_zero)
    assert w.strategy == "right_zero" and w.perm[:2] == (1, 0)
    assert apply_perm_product(right_zero, w.perm) == seq_product(right_zero)

    diagonal = list(base)
    diagonal[3] = smat(desc, NEG_INF, 2)
    diagonal[4] = smat(desc, NEG_INF, F(5, 2))
    w = xperm_find(diagonal)
    assert w.strategy == "diagonal_pair" and w.perm[3:5] == (4, 3)

    unitri = list(base)
    unitri[6] = smat(desc, 1, 0)
    unitri[7] = smat(desc, 2, 0)
    w = xperm_find(unitri)
    assert w.strategy == "unitriangular_pair" and w.perm[6:8] == (7, 6)

    saturated = [smat(desc, 1 + F(t, 16), 1 + F(t, 32)) for t in range(11)]
    w = xperm_find(saturated)
    assert w.strategy == "saturation" and w.perm[9:] == (10, 9)
    assert apply_perm_product(saturated, w.perm) == seq_product(saturated)


def test_xperm_transposed_family():
    desc = trunc(1, 3)
    rng = derive_rng(33, "xperm-sprime")
    for _ in range(200):
        seq = [
            Matrix.make(desc, FULL, [[0, NEG_INF], [sample_scalar(desc, rng), sample_scalar(desc, rng)]])
            for _ in range(11)
        ]
        w = xperm_find(seq)
        assert isinstance(w, Found)
        assert apply_perm_product(seq, w.perm) == seq_product(seq)


def test_xperm_pattern_mismatch():
    desc = trunc(1, 3)
    rng = derive_rng(34, "xperm-mismatch")
    good = [smat(desc, 1, 2) for _ in range(11)]
    bad = list(good)
    bad[4] = Matrix.make(desc, FULL, [[1, 1], [1, 1]])
    with pytest.raises(PatternMismatch):
        xperm_find(bad)
    with pytest.raises(PatternMismatch):
        xperm_find([sample_matrix(trunc(1, 2), 2, rng) for _ in range(11)])  # z must exceed 2


def test_xperm_never_falls_through_at_bound():
    rng = derive_rng(35, "xperm-sweep")
    desc = trunc(1, 3)
    k = xperm_bound(3)
    for _ in range(10_000):
        seq = [smat(desc, sample_scalar(desc, rng), sample_scalar(desc, rng)) for _ in range(k)]
        w = xperm_find(seq)  # CaseFallthrough would raise
        assert isinstance(w, Found)
