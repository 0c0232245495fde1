"""Matrices over a bipotent semiring: the three families and two morphisms.

Run:  python demos/02_matrix_families.py
"""

from bipermute import (
    ADJOINED_ID,
    FULL,
    NEG_INF,
    UNI,
    UT,
    Matrix,
    mat_mul,
    pad_sequence,
    prefix_suffix_products,
    project_topleft,
    seq_product,
    nat_max,
    tropical,
)

t = tropical()

# Full matrices multiply with (max, +): each product entry is the best path
# value through the index graph.
a = Matrix.make(t, FULL, [[0, 2], [1, NEG_INF]])
b = Matrix.make(t, FULL, [[3, 0], [0, 1]])
print("full product:", mat_mul(a, b).entries)

# Upper triangular matrices keep the zero below the diagonal.
u = Matrix.make(t, UT, [[1, 1], [NEG_INF, -1]])
v = Matrix.make(t, UT, [[-1, 1], [NEG_INF, 1]])
print("triangular product:", mat_mul(u, v).entries)

# Unitriangular matrices carry an adjoined identity on the diagonal; the
# partially defined sums 1+1 and 1+0 are the only ones products ever need.
n0 = nat_max(adjoined_zero=True)
w = Matrix.make(n0, UNI, [[ADJOINED_ID, 4, 2], [NEG_INF, ADJOINED_ID, 1], [NEG_INF, NEG_INF, ADJOINED_ID]])
print("unitriangular square:", mat_mul(w, w).entries)

# Taking the top-left corner is a morphism of the triangular families:
x = Matrix.make(t, UT, [[1, 2, 3], [NEG_INF, 0, 5], [NEG_INF, NEG_INF, 2]])
y = Matrix.make(t, UT, [[0, 1, 0], [NEG_INF, 2, 2], [NEG_INF, NEG_INF, 1]])
lhs = project_topleft(mat_mul(x, y), 2)
rhs = mat_mul(project_topleft(x, 2), project_topleft(y, 2))
print("corner of product == product of corners:", lhs == rhs)

# Padding with the least entry of a sequence embeds small full matrices into
# bigger ones without disturbing any product's top-left corner.
seq = [a, b, mat_mul(a, b)]
padded = pad_sequence(seq, 4)
corner = tuple(row[:2] for row in seq_product(padded).entries[:2])
print("padded corner preserved:", corner == seq_product(seq).entries)

# Prefix/suffix product arrays recombine to the total at every split point;
# the permutation searches use them to re-evaluate swaps in O(1) products.
prefixes, suffixes = prefix_suffix_products(seq)
total = seq_product(seq)
print("recombination:", all(
    (suffixes[i] if prefixes[i] is None else mat_mul(prefixes[i], suffixes[i])) == total
    for i in range(len(seq))
))
