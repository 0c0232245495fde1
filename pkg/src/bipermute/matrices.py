"""Square matrices over a bipotent semiring and the three matrix families.

``full`` matrices have arbitrary carrier entries; ``ut`` (upper triangular)
matrices carry the zero element below the diagonal; ``uni`` (unitriangular)
matrices additionally carry the adjoined identity sentinel on the diagonal.
Unitriangular products only ever need the defined partial sums 1+1 and 1+0,
so multiplication is total on all three families.

Matrices are immutable and hashable; products of same-family matrices stay
in the family, which tests assert but hot paths do not re-check.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import (
    BadDimension,
    DimensionMismatch,
    DomainError,
    EmptySequence,
    SemiringMismatch,
)
from .scalars import ADJOINED_ID, NEG_INF, Scalar
from .semirings import Semiring

FULL = "full"
UT = "ut"
UNI = "uni"

_FAMILIES = (FULL, UT, UNI)


class Matrix:
    __slots__ = ("n", "semiring", "family", "entries", "_hash")

    def __init__(self, semiring: Semiring, family: str, entries: tuple[tuple[Scalar, ...], ...]):
        self.semiring = semiring
        self.family = family
        self.entries = entries
        self.n = len(entries)
        self._hash = None

    @classmethod
    def make(cls, semiring: Semiring, family: str, rows: Sequence[Sequence[Scalar]]) -> "Matrix":
        """Validated construction: checks squareness and family membership."""
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise BadDimension("matrix must be square and non-empty")
        if family not in _FAMILIES:
            raise DomainError(f"unknown matrix family {family!r}")
        entries = tuple(tuple(r) for r in rows)
        if family == FULL:
            for row in entries:
                for v in row:
                    semiring.validate(v)
        else:
            zero = semiring.zero_element()
            if zero is None:
                raise DomainError(
                    f"{family} matrices need a semiring with a zero element; adjoin one first"
                )
            for i, row in enumerate(entries):
                for j, v in enumerate(row):
                    if j < i:
                        if v != zero:
                            raise DomainError(f"entry ({i},{j}) below the diagonal must be {zero!r}")
                    elif family == UNI and j == i:
                        if v is not ADJOINED_ID:
                            raise DomainError(f"unitriangular diagonal entry ({i},{i}) must be the identity sentinel")
                    elif family == UNI:
                        # above-diagonal entries come from the semiring proper,
                        # not from the adjoined sentinels
                        if v is ADJOINED_ID or (v is NEG_INF and semiring.adjoined_zero):
                            raise DomainError(f"entry ({i},{j}) must be a proper carrier element")
                        semiring.validate(v)
                    else:
                        semiring.validate(v)
        return cls(semiring, family, entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.n == other.n
            and self.family == other.family
            and self.semiring == other.semiring
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash((self.n, self.family, self.semiring, self.entries))
        return h

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        return self.entries[ij[0]][ij[1]]

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(repr(v) for v in row) for row in self.entries)
        return f"Matrix<{self.family},{self.semiring.family}>[{rows}]"

    def transpose(self) -> "Matrix":
        if self.family != FULL:
            raise DomainError("only full matrices can be transposed in place of their family")
        return Matrix(self.semiring, FULL, tuple(zip(*self.entries)))

    def is_member(self) -> bool:
        """Re-check family membership (used by closure tests)."""
        try:
            Matrix.make(self.semiring, self.family, self.entries)
        except DomainError:
            return False
        return True


def _check_pair(a: Matrix, b: Matrix) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"{a.n} vs {b.n}")
    if a.semiring != b.semiring:
        raise SemiringMismatch("matrices live over different semirings")
    if a.family != b.family:
        raise SemiringMismatch(f"mixed matrix families {a.family!r} and {b.family!r}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product with addition and multiplication induced entrywise."""
    _check_pair(a, b)
    add = a.semiring._add
    mul = a.semiring._mul
    n = a.n
    ae = a.entries
    be = b.entries
    cols = tuple(zip(*be))
    rows = []
    for i in range(n):
        arow = ae[i]
        out = []
        for j in range(n):
            bcol = cols[j]
            acc = mul(arow[0], bcol[0])
            for k in range(1, n):
                acc = add(acc, mul(arow[k], bcol[k]))
            out.append(acc)
        rows.append(tuple(out))
    return Matrix(a.semiring, a.family, tuple(rows))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    """Entrywise maximum (unoptimized; products are the primary operation)."""
    _check_pair(a, b)
    add = a.semiring._add
    rows = tuple(
        tuple(add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)
    )
    return Matrix(a.semiring, a.family, rows)


def seq_product(seq: Sequence[Matrix]) -> Matrix:
    """Left-associated product of a non-empty uniform sequence."""
    if not seq:
        raise EmptySequence("cannot multiply an empty sequence")
    acc = seq[0]
    for m in seq[1:]:
        acc = mat_mul(acc, m)
    return acc


def prefix_suffix_products(seq: Sequence[Matrix]) -> tuple[list[Optional[Matrix]], list[Matrix]]:
    """prefixes[i] = product of seq[:i] (None when empty); suffixes[i] = product of seq[i:].

    Both lists have the length of the sequence; the trivial ends (empty
    prefix, empty suffix) are represented as absent and handled by callers.
    """
    if not seq:
        raise EmptySequence("cannot build prefix/suffix products of an empty sequence")
    k = len(seq)
    prefixes: list[Optional[Matrix]] = [None] * k
    acc = None
    for i in range(1, k):
        acc = seq[i - 1] if acc is None else mat_mul(acc, seq[i - 1])
        prefixes[i] = acc
    suffixes: list[Matrix] = [seq[-1]] * k
    acc = seq[-1]
    for i in range(k - 2, -1, -1):
        acc = mat_mul(seq[i], acc)
        suffixes[i] = acc
    return prefixes, suffixes


def unitriangular_to_genuine(a: Matrix) -> Matrix:
    """Rewrite a unitriangular matrix with the semiring's own identity element.

    The diagonal sentinel is only a notational device; over a semiring that
    has a genuine identity (and a genuine zero) the same matrix lives in the
    upper triangular family, and products commute with this rewriting.
    """
    if a.family != UNI:
        raise DomainError("only unitriangular matrices can be normalized")
    one = a.semiring.identity_element()
    if one is None or a.semiring.adjoined_zero:
        raise DomainError(f"{a.semiring.family} has no genuine identity/zero to normalize to")
    rows = tuple(
        tuple(one if v is ADJOINED_ID else v for v in row) for row in a.entries
    )
    return Matrix(a.semiring, UT, rows)


def project_topleft(a: Matrix, m: int) -> Matrix:
    """Top-left m x m corner; a semigroup morphism on triangular families."""
    if not 1 <= m <= a.n:
        raise BadDimension(f"cannot project a {a.n}x{a.n} matrix to {m}x{m}")
    if a.family == FULL:
        raise DomainError("corner projection is a morphism only for triangular families")
    rows = tuple(row[:m] for row in a.entries[:m])
    return Matrix(a.semiring, a.family, rows)


def pad_sequence(seq: Sequence[Matrix], n: int) -> list[Matrix]:
    """Pad full m x m matrices to n x n with the least entry of the sequence.

    The padding value z is the minimum entry across the whole sequence (the
    zero element if any entry is the zero element), which makes the top-left
    corner of any product of the padded matrices equal the corresponding
    product of the originals.
    """
    if not seq:
        raise EmptySequence("cannot pad an empty sequence")
    m = seq[0].n
    desc = seq[0].semiring
    for mat in seq:
        if mat.family != FULL:
            raise DomainError("padding is defined for full matrices")
        if mat.n != m or mat.semiring != desc:
            raise SemiringMismatch("padding needs a uniform sequence")
    if n <= m:
        raise BadDimension(f"target dimension {n} must exceed {m}")
    leq = desc._leq
    z = seq[0].entries[0][0]
    for mat in seq:
        for row in mat.entries:
            for v in row:
                if leq(v, z):
                    z = v
    padded = []
    for mat in seq:
        rows = [row + (z,) * (n - m) for row in mat.entries]
        rows.extend([(z,) * n] * (n - m))
        padded.append(Matrix(desc, FULL, tuple(rows)))
    return padded
