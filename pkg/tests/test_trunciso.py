"""Classification of truncated semirings and the explicit isomorphisms."""

from fractions import Fraction as F

import pytest

from bipermute.errors import BadInterval, OutOfDomain
from bipermute.sampling import derive_rng
from bipermute.scalars import NEG_INF
from bipermute.semirings import Finite, element_order, trunc
from bipermute.trunciso import (
    apply_iso,
    classify_truncated,
    distinguisher,
    max_element_order,
    max_order_by_iteration,
    verify_iso,
)


def test_classification_cases():
    assert classify_truncated(2, 4).canonical == "T12"
    assert classify_truncated(2, 5).canonical == "T1_2p5"
    assert classify_truncated(0, 7).canonical == "T01"
    cl = classify_truncated(1, 3)
    assert cl.canonical == "T1" and cl.ratio == 3 and cl.map.is_identity()
    # the statement's boundary: y = 3x belongs to the rescaling case
    assert classify_truncated(2, 6).canonical == "T1"
    assert classify_truncated(2, 6).ratio == 3
    with pytest.raises(BadInterval):
        classify_truncated(3, 2)
    with pytest.raises(BadInterval):
        classify_truncated(-1, 2)


def test_apply_iso_values():
    cl = classify_truncated(2, 5)
    assert [apply_iso(cl.map, v) for v in (2, 3, 4, 5)] == [1, F(3, 2), 2, F(5, 2)]
    assert apply_iso(cl.map, F(7, 2)) == F(7, 4)
    assert apply_iso(cl.map, NEG_INF) is NEG_INF
    assert apply_iso(cl.map, 0) == 0
    assert apply_iso(classify_truncated(0, 7).map, 7) == 1
    with pytest.raises(OutOfDomain):
        apply_iso(cl.map, 1)


def test_three_piece_map_levels():
    # pick an instance where the two slopes differ: x=3, y=7 (2x=6 < 7 < 9=3x)
    cl = classify_truncated(3, 7)
    assert cl.canonical == "T1_2p5"
    assert apply_iso(cl.map, 3) == 1
    assert apply_iso(cl.map, 4) == F(3, 2)  # y-x boundary
    assert apply_iso(cl.map, 6) == 2  # 2x boundary
    assert apply_iso(cl.map, 7) == F(5, 2)
    assert apply_iso(cl.map, 5) == F(7, 4)  # interior of the middle piece


def test_maps_strictly_increasing_on_grids():
    rng = derive_rng(40, "mono-grid")
    for x, y in [(0, 3), (2, 4), (3, 7), (1, 9), (F(3, 2), F(7, 2))]:
        cl = classify_truncated(x, y)
        points = sorted(F(x) + (F(y) - F(x)) * F(t, 97) for t in range(98))
        images = [apply_iso(cl.map, p) for p in points]
        assert all(a < b for a, b in zip(images, images[1:]))
        assert images[0] == cl.target.x and images[-1] == cl.target.y


def test_verify_iso_reports():
    for x, y in [(2, 5), (2, 4), (0, 7), (1, 3), (5, 8), (F(1, 3), F(5, 9))]:
        cl = classify_truncated(x, y)
        report = verify_iso(cl.map, cl.source, cl.target, seed=11, trials=800)
        assert report.passed, (x, y, [c for c in report.checks if not c.passed])


def test_verify_iso_key_identities():
    # saturation inside [1,5/2]: phi(2 (x) 3) = phi(5) = 5/2 = phi(2) (x) phi(3)
    cl = classify_truncated(2, 5)
    src, dst = cl.source, cl.target
    lhs = apply_iso(cl.map, src._mul(2, 3))
    rhs = dst._mul(apply_iso(cl.map, 2), apply_iso(cl.map, 3))
    assert lhs == rhs == F(5, 2)
    # in the y <= 2x case every product of interval elements lands on 2
    cl = classify_truncated(2, 4)
    rng = derive_rng(41, "t12-sat")
    for _ in range(200):
        a = F(2) + F(rng.randint(0, 64), 32)
        b = F(2) + F(rng.randint(0, 64), 32)
        assert cl.target._mul(apply_iso(cl.map, a), apply_iso(cl.map, b)) == 2
        assert apply_iso(cl.map, cl.source._mul(a, b)) == 2


def test_canonicalization_is_idempotent():
    for x, y in [(2, 5), (2, 4), (0, 7), (1, 3), (5, 8), (3, 7)]:
        cl = classify_truncated(x, y)
        again = classify_truncated(cl.target.x, cl.target.y)
        assert again.map.is_identity()
        assert again.canonical == cl.canonical


def test_max_element_order():
    assert max_element_order(2) == 2
    assert max_element_order(F(5, 2)) == 3
    assert max_element_order(3) == 3
    with pytest.raises(BadInterval):
        max_element_order(1)
    for y in (2, F(5, 2), 3, F(7, 2), 4, F(9, 2)):
        assert max_element_order(y) == max_order_by_iteration(y, samples=64, seed=7)
    # order-4 elements exist exactly when y > 3
    assert isinstance(element_order(trunc(1, F(13, 4)), 1), Finite)
    assert element_order(trunc(1, F(13, 4)), 1).order == 4


def test_distinguisher():
    d = distinguisher((0, 1), (1, 2))
    assert not d.isomorphic and d.invariant == "unbounded_order" and d.machine_checked
    d = distinguisher((1, 2), (1, F(5, 2)))
    assert d.invariant == "max_element_order" and d.machine_checked
    d = distinguisher((1, F(5, 2)), (1, 3))
    assert not d.isomorphic and d.invariant == "dyadic_rigidity" and not d.machine_checked
    d = distinguisher((1, 3), (1, 4))
    assert d.invariant == "max_element_order" and "3 vs 4" in d.detail
    d = distinguisher((1, F(10, 3)), (1, F(7, 2)))  # same ceiling, different ratio
    assert not d.isomorphic and not d.machine_checked
    d = distinguisher((2, 5), (1, F(5, 2)))  # same class through different intervals
    assert d.isomorphic
