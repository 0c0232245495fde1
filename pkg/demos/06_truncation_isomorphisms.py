"""Which truncated tropical semirings are secretly the same?

Every truncation on a rational interval [x, y] is isomorphic to one of four
canonical targets, and the isomorphism is an explicit piecewise linear map
with exact rational coefficients.

Run:  python demos/06_truncation_isomorphisms.py
"""

from fractions import Fraction as F

from bipermute import apply_iso, classify_truncated, distinguisher, max_element_order, verify_iso

for x, y in [(0, 7), (2, 4), (2, 5), (3, 7), (1, 3), (2, 6)]:
    cl = classify_truncated(x, y)
    label = cl.canonical if cl.ratio is None else f"T1({cl.ratio})"
    print(f"[{x},{y}] ~ {label}   via {len(cl.map.segments)} linear piece(s)")

# The only case that needs more than a rescaling: 2x < y < 3x maps through
# three pieces onto [1, 5/2].  Watch the interval [3,7] fold:
cl = classify_truncated(3, 7)
for z in (3, 4, 5, 6, 7):
    print(f"  phi({z}) = {apply_iso(cl.map, z)}")
report = verify_iso(cl.map, cl.source, cl.target, seed=1, trials=2000)
print("verified as an isomorphism on 2000 exact pairs:", report.passed)

# The canonical classes are genuinely different, and mostly a machine can
# tell them apart by element orders:
print()
for p, q in [((0, 1), (1, 2)), ((1, 2), (1, 3)), ((1, 3), (1, 4)), ((1, F(5, 2)), (1, 3))]:
    d = distinguisher(p, q)
    tag = "machine-checked" if d.machine_checked else "analytic"
    print(f"T{list(p)} vs T{list(q)}: {d.detail}  [{tag}]")

# Max element order grows with the ceiling of the truncation bound:
print()
print("max element orders:", {str(y): max_element_order(y) for y in (2, F(5, 2), 3, F(7, 2), 4)})
