"""Why every full matrix semigroup over these semirings is weakly permutable.

Each entry of a permuted product is attained by one path through the complete
directed graph on the index set.  Recording, for every matrix, which edge it
contributes per entry gives a finite fingerprint: permutations with the same
fingerprint have equal products.  Since there are k! orderings but only
(n^(2n^2))^k fingerprints, long tuples must have two orderings that agree.

Run:  python demos/04_weak_permutability.py
"""

from itertools import permutations

from bipermute import (
    apply_perm_product,
    chain,
    path_assignment,
    reconstruct_from_assignment,
    weak_bound,
)
from bipermute.sampling import derive_rng, sample_matrix

rng = derive_rng(2024, "weak-demo")
desc = chain(4)
seq = [sample_matrix(desc, 2, rng) for _ in range(5)]

# The fingerprint of one ordering reconstructs its product exactly, with the
# factors taken back in the original order (commutativity pays the bill).
sigma = (2, 0, 4, 1, 3)
pa = path_assignment(seq, sigma)
print("entry edges chosen for matrix 0:", pa.edges[0])
print("reconstruction equals the permuted product:",
      reconstruct_from_assignment(seq, pa) == apply_perm_product(seq, sigma))

# Collisions appear well before the pigeonhole bound forces them, and every
# collision implies equal products:
by_fingerprint = {}
collisions = 0
for perm in permutations(range(5)):
    key = path_assignment(seq, perm)
    prod = apply_perm_product(seq, perm)
    if key in by_fingerprint:
        collisions += 1
        assert by_fingerprint[key] == prod
    else:
        by_fingerprint[key] = prod
print(f"120 orderings produced {len(by_fingerprint)} distinct fingerprints "
      f"({collisions} collisions, all with equal products)")

# The guaranteed bound is astronomically larger: even at n = 2 the pigeonhole
# only fires at tuple length
print("guaranteed collision length for n=1:", weak_bound(1))
print("guaranteed collision length for n=2:", weak_bound(2))
print("(the n=2 experiment would need products of", weak_bound(2), "matrices",
      "for all k! orderings -- far beyond desk scale, which is why the demo",
      "checks the reconstruction identity instead)")
