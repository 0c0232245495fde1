"""Finite congruence quotients and the transposition finders they power.

A finite subset X of a chain semiring (or of the truncated semiring on
[1, 2]) can be protected by a congruence with at most 2|X|+1 (resp. 2|X|+3)
classes: singletons for the protected elements and order intervals between
them.  Mapping a long enough matrix sequence through the induced quotient
homomorphism forces two factors into the same image, and swapping that pair
preserves the product exactly.  A separate case-analysis finder handles the
triangular-pattern subsemigroups of 2x2 truncated matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    CaseFallthrough,
    DomainError,
    InfeasibleExhaustive,
    LengthTooShort,
    NoPairFound,
    PatternMismatch,
)
from .matrices import FULL, Matrix, seq_product
from .permutability import Found, PermutationWitness, apply_perm_product, perm_kind, transposition
from .sampling import derive_rng, sample_scalar
from .scalars import NEG_INF, Atom, Rational, Scalar
from .semirings import (
    BOOLEAN,
    CHAIN,
    TRUNC,
    Exhaustive,
    FiniteSemiringTable,
    Sampled,
    Semiring,
    table_semiring,
    trunc,
)


@dataclass(frozen=True)
class Singleton:
    value: Scalar


@dataclass(frozen=True)
class Interval:
    """An order interval of the carrier; None endpoints mean unbounded."""

    lo: Optional[Scalar]
    hi: Optional[Scalar]
    lo_open: bool = False
    hi_open: bool = False


ClassDesc = Union[Singleton, Interval]


def _contains(desc: Semiring, cls: ClassDesc, a: Scalar) -> bool:
    if isinstance(cls, Singleton):
        return a == cls.value
    leq = desc._leq
    if cls.lo is not None:
        if cls.lo_open:
            if leq(a, cls.lo):
                return False
        elif not leq(cls.lo, a):
            return False
    if cls.hi is not None:
        if cls.hi_open:
            if leq(cls.hi, a):
                return False
        elif not leq(a, cls.hi):
            return False
    return True


@dataclass(frozen=True)
class CongruenceQuotient:
    """A finite quotient of a bipotent semiring given by ordered classes.

    ``classes`` ascend in the semiring order, ``reps`` holds one member per
    class (the least element where one exists), and ``tables`` is the
    quotient semiring itself, validated as a lawful bipotent semiring at
    construction.
    """

    source: Semiring
    classes: tuple[ClassDesc, ...]
    reps: tuple[Scalar, ...]
    tables: FiniteSemiringTable

    def class_of(self, a: Scalar) -> int:
        self.source.validate(a)
        for idx, cls in enumerate(self.classes):
            if _contains(self.source, cls, a):
                return idx
        raise DomainError(f"{a!r} is not covered by any congruence class")

    def quotient_semiring(self) -> Semiring:
        return table_semiring(self.tables)

    def kernel_image(self, m: Matrix) -> Matrix:
        """The induced matrix homomorphism: apply class_of entrywise."""
        target = self.quotient_semiring()
        rows = tuple(tuple(Atom(self.class_of(v)) for v in row) for row in m.entries)
        return Matrix(target, m.family, rows)


def _build_quotient(source: Semiring, classes: Sequence[ClassDesc], reps: Sequence[Scalar]) -> CongruenceQuotient:
    def locate(a: Scalar) -> int:
        for idx, cls in enumerate(classes):
            if _contains(source, cls, a):
                return idx
        raise DomainError(f"{a!r} not covered while building quotient tables")

    r = len(classes)
    add_fn, mul_fn = source._add, source._mul
    add = tuple(tuple(locate(add_fn(reps[i], reps[j])) for j in range(r)) for i in range(r))
    mul = tuple(tuple(locate(mul_fn(reps[i], reps[j])) for j in range(r)) for i in range(r))
    tables = FiniteSemiringTable(r, add, mul)
    return CongruenceQuotient(source, tuple(classes), tuple(reps), tables)


def chain_congruence(desc: Semiring, protected: Sequence[Scalar]) -> CongruenceQuotient:
    """Congruence of a finite chain protecting each given element in a singleton.

    Classes are the singletons of the protected set and the maximal runs of
    unprotected atoms between them: at most 2|X|+1 classes in total.  Any
    order-convex partition of a chain is a congruence because max and min of
    convex classes land in a class determined by the operands' classes.
    """
    if desc.family not in (CHAIN, BOOLEAN):
        raise DomainError("chain congruences are defined for chain semirings")
    for a in protected:
        desc.validate(a)
        if not isinstance(a, Atom):
            raise DomainError(f"{a!r} is not a chain atom")
    marks = sorted({a.index for a in protected})
    classes: list[ClassDesc] = []
    reps: list[Scalar] = []
    cursor = 0
    for x in marks:
        if cursor < x:
            classes.append(Interval(Atom(cursor), Atom(x - 1)))
            reps.append(Atom(cursor))
        classes.append(Singleton(Atom(x)))
        reps.append(Atom(x))
        cursor = x + 1
    if cursor <= desc.size - 1:
        classes.append(Interval(Atom(cursor), Atom(desc.size - 1)))
        reps.append(Atom(cursor))
    return _build_quotient(desc, classes, reps)


def trunc12_congruence(protected: Sequence[Scalar]) -> CongruenceQuotient:
    """Congruence of the truncated semiring on [1, 2] protecting a finite set.

    The two sentinels are always protected alongside the given elements;
    interval classes collect the points lying above exactly the same
    protected elements.  At most 2|X|+3 classes.  Multiplication of two
    interval elements always saturates to 2, which is what makes every such
    order-convex partition compatible with the product.
    """
    source = trunc(1, 2)
    xs = []
    for a in protected:
        source.validate(a)
        if a is not NEG_INF and a != 0:
            xs.append(Fraction(a))
    marks = sorted(set(xs))
    classes: list[ClassDesc] = [Singleton(NEG_INF), Singleton(0)]
    reps: list[Scalar] = [NEG_INF, 0]
    lo: Fraction = Fraction(1)
    lo_open = False
    for x in marks:
        if lo < x:
            classes.append(Interval(lo, x, lo_open=lo_open, hi_open=True))
            reps.append(lo if not lo_open else (lo + x) / 2)
        classes.append(Singleton(x))
        reps.append(x)
        lo, lo_open = x, True
    if lo < 2:
        classes.append(Interval(lo, Fraction(2), lo_open=lo_open, hi_open=False))
        reps.append(lo if not lo_open else (lo + 2) / 2)
    return _build_quotient(source, classes, reps)


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class CongruenceCheck:
    name: str
    passed: bool
    counterexample: Optional[tuple[Scalar, ...]] = None


@dataclass(frozen=True)
class CongruenceReport:
    mode: str
    checks: tuple[CongruenceCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _class_member(desc: Semiring, cls: ClassDesc, rng) -> Optional[Scalar]:
    """A random carrier element of the class, or None if none can be found.

    Corrupted class descriptors (as fed to verify_congruence by negative
    tests) may describe intervals that leave the carrier; such draws are
    rejected rather than crashing the verification.
    """
    if isinstance(cls, Singleton):
        return cls.value
    if isinstance(cls.lo, Atom):
        return Atom(rng.randint(cls.lo.index, cls.hi.index))
    lo, hi = Fraction(cls.lo), Fraction(cls.hi)
    lo_t = 1 if cls.lo_open else 0
    hi_t = 63 if cls.hi_open else 64
    for _ in range(8):
        t = rng.randint(lo_t, hi_t)
        value = lo + (hi - lo) * Fraction(t, 64)
        value = int(value) if value.denominator == 1 else value
        try:
            desc.validate(value)
        except DomainError:
            continue
        return value
    return None


def verify_congruence(q: CongruenceQuotient, mode) -> CongruenceReport:
    """Check the partition, both congruence laws, and table consistency.

    Exhaustive mode enumerates the finite carrier; sampled mode draws pairs
    from random classes plus free elements from the carrier sampler.  Each
    law reports the first counterexample found, if any.
    """
    desc = q.source
    failures: dict[str, tuple[Scalar, ...]] = {}

    def check_partition(a: Scalar) -> None:
        if "partition" in failures:
            return
        hits = sum(1 for cls in q.classes if _contains(desc, cls, a))
        if hits != 1:
            failures["partition"] = (a,)

    def check_pair(a: Scalar, b: Scalar, c: Scalar) -> None:
        add, mul = desc._add, desc._mul
        ca = q.class_of(a)
        if "mul_congruence" not in failures:
            if q.class_of(mul(a, c)) != q.class_of(mul(b, c)) or q.class_of(mul(c, a)) != q.class_of(mul(c, b)):
                failures["mul_congruence"] = (a, b, c)
        if "add_congruence" not in failures:
            if q.class_of(add(a, c)) != q.class_of(add(b, c)):
                failures["add_congruence"] = (a, b, c)
        if "table_consistency" not in failures:
            cc = q.class_of(c)
            try:
                consistent = (
                    q.class_of(mul(a, c)) == q.tables.mul[ca][cc]
                    and q.class_of(add(a, c)) == q.tables.add[ca][cc]
                )
            except IndexError:  # corrupted quotient: tables smaller than the class list
                consistent = False
            if not consistent:
                failures["table_consistency"] = (a, c)

    if isinstance(mode, Exhaustive):
        carrier = desc.carrier_elements()
        if carrier is None:
            raise InfeasibleExhaustive("carrier is infinite; use sampled verification")
        for a in carrier:
            check_partition(a)
        index = {}
        for a in carrier:
            index.setdefault(q.class_of(a), []).append(a)
        for members in index.values():
            for a in members:
                for b in members:
                    for c in carrier:
                        check_pair(a, b, c)
        mode_name = "exhaustive"
    elif isinstance(mode, Sampled):
        rng = derive_rng(mode.seed, "verify_congruence")
        for _ in range(mode.trials):
            cls = q.classes[rng.randrange(len(q.classes))]
            a = _class_member(desc, cls, rng)
            b = _class_member(desc, cls, rng)
            c = sample_scalar(desc, rng)
            check_partition(c)
            if a is None or b is None:
                continue
            check_partition(a)
            check_pair(a, b, c)
        mode_name = "sampled"
    else:
        raise DomainError(f"unknown verification mode {mode!r}")

    names = ("partition", "add_congruence", "mul_congruence", "table_consistency")
    checks = tuple(CongruenceCheck(n, n not in failures, failures.get(n)) for n in names)
    return CongruenceReport(mode_name, checks)


# -- pigeonhole bounds and the generic transposition finder ------------------


def kerperm_bound(quot_size: int, n: int) -> int:
    """Sequence length guaranteeing two factors share a quotient image: size^(n^2)+1."""
    if quot_size < 1:
        raise DomainError("quotient size must be at least 1")
    return quot_size ** (n * n) + 1


def chain_class_bound(n: int) -> int:
    return 2 * n * n + 1


def trunc12_class_bound(n: int) -> int:
    return 2 * n * n + 3


def kerperm_find_swap(seq: Sequence[Matrix]) -> PermutationWitness:
    """Find a product-preserving transposition via a protecting congruence.

    Builds the congruence whose singleton classes protect the entries of the
    full product, maps every factor through the induced matrix homomorphism,
    and swaps the first two factors with equal images.  The swap provably
    preserves the product; it is still re-verified exactly.
    """
    if not seq:
        raise LengthTooShort("empty sequence")
    desc = seq[0].semiring
    n = seq[0].n
    for m in seq:
        if m.family != FULL or m.semiring != desc or m.n != n:
            raise DomainError("need a uniform sequence of full matrices")
    if desc.family in (CHAIN, BOOLEAN):
        class_bound = chain_class_bound(n)
        build = lambda xs: chain_congruence(desc, xs)
    elif desc.family == TRUNC and desc.x == 1 and desc.y == 2:
        class_bound = trunc12_class_bound(n)
        build = lambda xs: trunc12_congruence(xs)
    else:
        raise DomainError("constructive swap finder supports chains and the [1,2] truncation")
    required = kerperm_bound(class_bound, n)
    if len(seq) < required:
        raise LengthTooShort(f"need at least {required} matrices, got {len(seq)}")

    total = seq_product(seq)
    protected = {v for row in total.entries for v in row}
    q = build(list(protected))  # the builders sort and dedup internally

    seen: dict[tuple, int] = {}
    pair = None
    for idx, m in enumerate(seq):
        img = tuple(tuple(q.class_of(v) for v in row) for row in m.entries)
        prev = seen.get(img)
        if prev is not None:
            pair = (prev, idx)
            break
        seen[img] = idx
    if pair is None:
        raise NoPairFound("pigeonhole violated: no equal-image pair (implementation bug)")
    perm = transposition(len(seq), *pair)
    if apply_perm_product(seq, perm) != total:
        raise NoPairFound("equal-image swap failed to verify (implementation bug)")
    return Found(perm, perm_kind(perm), "kernel_pair")


# -- the triangular-pattern finder -------------------------------------------


def xperm_bound(z: Rational) -> int:
    """Tuple length at which the triangular-pattern subsemigroups always permute."""
    return 2 * math.ceil(Fraction(z)) + 5


def min_entry_case_bound(z: Rational) -> int:
    """Length constant of the minimal-entry case analysis for 2x2 truncated matrices."""
    return 17 * (16 * math.ceil(Fraction(z)) + 45)


def truncperm_bound(z: Rational) -> int:
    """Length at which every 2x2 truncated-matrix tuple admits a preserving permutation."""
    z_ceil = math.ceil(Fraction(z))
    return 17 * (4 * z_ceil + 1) * (16 * z_ceil + 45)


def _is_s_pattern(m: Matrix) -> bool:
    e = m.entries
    return e[0][0] == 0 and e[1][0] is NEG_INF


def _is_s_prime_pattern(m: Matrix) -> bool:
    e = m.entries
    return e[0][0] == 0 and e[0][1] is NEG_INF


def _xperm_case(seq: Sequence[Matrix]) -> tuple[tuple[int, int], str]:
    k = len(seq)
    for t in range(2, k):
        if seq[t].entries[1][1] is NEG_INF:
            # such a factor is a right zero of the pattern semigroup, so the
            # order of everything before it is irrelevant
            return (0, 1), "right_zero"
    for t in range(k - 1):
        if seq[t].entries[0][1] is NEG_INF and seq[t + 1].entries[0][1] is NEG_INF:
            return (t, t + 1), "diagonal_pair"
    for t in range(k - 1):
        if seq[t].entries[1][1] == 0 and seq[t + 1].entries[1][1] == 0:
            return (t, t + 1), "unitriangular_pair"
    # saturation: the prefix product acts as a left zero on the final factors
    return (k - 2, k - 1), "saturation"


def xperm_find(seq: Sequence[Matrix]) -> PermutationWitness:
    """Case-analysis transposition finder for the 2x2 triangular patterns.

    All matrices must look like [[0, a], [-inf, b]] (or all transposed);
    the transposed family is solved through the transpose anti-isomorphism,
    which reverses products, so the solved permutation is conjugated by the
    order reversal before verification.  With at least 2*ceil(z)+5 factors
    the final fallback case cannot fail; if it does, CaseFallthrough.
    """
    k = len(seq)
    if k < 3:
        raise PatternMismatch("need at least three matrices")
    desc = seq[0].semiring
    if desc.family != TRUNC or desc.x != 1 or not desc.y > 2:
        raise PatternMismatch("pattern finder works over a truncation [1, z] with z > 2")
    for m in seq:
        if m.n != 2 or m.family != FULL or m.semiring != desc:
            raise PatternMismatch("need uniform full 2x2 matrices")

    if all(_is_s_pattern(m) for m in seq):
        (i, j), label = _xperm_case(seq)
    elif all(_is_s_prime_pattern(m) for m in seq):
        flipped = [m.transpose() for m in reversed(seq)]
        (ti, tj), label = _xperm_case(flipped)
        i, j = sorted((k - 1 - tj, k - 1 - ti))
        label += "_transposed"
    else:
        raise PatternMismatch("matrices are not uniformly of the triangular pattern")

    perm = transposition(k, i, j)
    if apply_perm_product(seq, perm) != seq_product(seq):
        raise CaseFallthrough(f"case {label!r} produced a non-preserving swap")
    return Found(perm, perm_kind(perm), label)
