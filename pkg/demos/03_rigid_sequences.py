"""Sequences whose product no non-trivial reordering preserves.

These witness families show that various matrix monoids are NOT strongly
permutable: for every length m there is a tuple only the identity ordering
evaluates to its product.

Run:  python demos/03_rigid_sequences.py
"""

from fractions import Fraction as F

from bipermute import (
    BicyclicElement,
    bicyclic_mul,
    bicyclic_rho,
    exhaustive_identity_only,
    find_preserving_permutation,
    lift_scale_UT2,
    lift_to_full_Nmax,
    mat_mul,
    seq_product,
    witness_M3_trunc,
    witness_U3_Nmax,
)

# The bicyclic monoid <p, q | pq = 1> is the master source of rigidity: it
# embeds into 2x2 upper triangular tropical matrices.
p, q = BicyclicElement(0, 1), BicyclicElement(1, 0)
print("pq =", bicyclic_mul(p, q), " qp =", bicyclic_mul(q, p))
print("rho(q) =", bicyclic_rho(q).entries)
print("rho(p)rho(q) = rho(pq):", mat_mul(bicyclic_rho(p), bicyclic_rho(q)) == bicyclic_rho(bicyclic_mul(p, q)))

# Tropical scaling moves such witnesses into the natural numbers: shift all
# finite entries up (entrywise products just shift), or shift and fill the
# below-diagonal with 1 to land in full natural matrices.
seq = [bicyclic_rho(BicyclicElement(i, 3 - i)) for i in range(4)]
shifted = lift_scale_UT2(seq, -5)
print("\nscaled into the naturals:", shifted[0].entries)
full = lift_to_full_Nmax(seq, 200)
print("lifted to full 2x2 naturals:", full[0].entries)

# Three explicit parametric families are rigid at every length.  Each hides
# a strictly increasing perturbation in the (1,2) entries: any inversion in
# the ordering overshoots the (1,3) entry of the product.
for name, seq in [
    ("unitriangular naturals, m=6", witness_U3_Nmax(6)),
    ("perturbed truncated, z=3, eps=1/2, m=6", witness_M3_trunc(3, F(1, 2), 6)),
]:
    print(f"\n{name}:")
    print("  B_2 =", seq[1].entries)
    print("  product =", seq_product(seq).entries)
    print("  only the identity ordering works:", exhaustive_identity_only(seq))
    print("  search agrees:", find_preserving_permutation(seq))
