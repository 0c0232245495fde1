"""A tour of the bipotent semiring families and their exact arithmetic.

Run:  python demos/01_semiring_zoo.py
"""

from fractions import Fraction as F

from bipermute import (
    Atom,
    NEG_INF,
    Exhaustive,
    Sampled,
    boolean,
    chain,
    check_axioms,
    classify_monogenic,
    element_order,
    nat_max,
    noidentity_obstruction,
    noidentity_semiring,
    srk_add,
    srk_leq,
    srk_mul,
    tropical,
    trunc,
    trunc_neg_nat,
)

# Every semiring here has "max of a total order" as its addition, so a + b is
# always one of its arguments.  Multiplication varies by family.
t = tropical()
print("tropical:  3 + 5 =", srk_add(t, 3, 5), "   3 * 5 =", srk_mul(t, 3, 5))
print("tropical:  -inf absorbs:", srk_mul(t, NEG_INF, 100))

t13 = trunc(1, 3)
print("\ntruncated [1,3]:  3/2 * 2 =", srk_mul(t13, F(3, 2), 2), "(sums clip at 3)")
print("truncated [1,3]:  0 is the identity:", srk_mul(t13, 0, F(5, 2)))
print("order of the carrier: -inf < 0 < 1 <= ... <= 3:", srk_leq(t13, 0, 1))

tn4 = trunc_neg_nat(4)
print("\nnegative naturals truncated at -4:  -3 * -2 =", srk_mul(tn4, -3, -2))

ch = chain(5)
print("chain of 5:  max/min of atoms:", srk_add(ch, Atom(1), Atom(3)), srk_mul(ch, Atom(1), Atom(3)))

# Multiplicative order = number of distinct powers.  Finite order always
# stabilizes (period one); the unbounded families certify infinitude.
print("\norders:")
print("  1 in [1, 5/2]:", element_order(trunc(1, F(5, 2)), 1))   # 1, 2, 5/2
print("  1/4 in [0, 1]:", element_order(trunc(0, 1), F(1, 4)))   # 1/4, 1/2, 3/4, 1
print("  2 in naturals:", element_order(nat_max(), 2))

# Every subsemiring generated by one element is one of four shapes.
print("\nmonogenic classes:")
for desc, a, label in [
    (tropical(), 1, "1 in the tropicals"),
    (tropical(), -1, "-1 in the tropicals"),
    (trunc(1, 3), 1, "1 in [1,3]"),
    (trunc_neg_nat(5), -2, "-2 in the truncated negatives"),
    (boolean(), Atom(1), "true in the booleans"),
]:
    print(f"  {label}: {classify_monogenic(desc, a)}")

# The semiring laws can be checked exhaustively on finite carriers and by
# sampling on infinite ones.
print("\naxioms:")
print("  boolean, exhaustive:", check_axioms(boolean(), Exhaustive()).passed)
print("  [1,2], 2000 samples:", check_axioms(trunc(1, 2), Sampled(seed=1, trials=2000)).passed)

# A zero can always be adjoined to a commutative bipotent semiring, but an
# identity cannot: the 3-element semiring below embeds in no bipotent
# semiring with identity, whichever place in the order the identity takes.
print("\nthe 3-element obstruction (a <= b <= c, mixed products are b):")
print("  lawful:", check_axioms(noidentity_semiring(), Exhaustive()).passed)
for p in noidentity_obstruction().placements:
    print(f"  placing {p.placement}: x={p.witness} gives x*(1+b) = {p.lhs} but x*1 + x*b = {p.rhs}")
