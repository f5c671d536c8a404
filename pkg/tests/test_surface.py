import random

import pytest

from ratblow.surface import (CenterError, CenterSpec, CurveError, DivisorClass,
                             MarkedSurface, SurfaceError, projective_plane)


def test_projective_plane():
    s = projective_plane()
    e, sigma, b2, k2 = s.invariants()
    assert (e, sigma, b2, k2) == (3, 1, 1, 9)
    assert s.canonical_class() == DivisorClass((-3,))


def test_add_plane_curve_budgets():
    s = projective_plane()
    s = s.add_plane_curve("line", 1)
    assert s.curve("line").node_budget == 0
    s = s.add_plane_curve("conic", 2)
    assert s.curve("conic").node_budget == 0
    s = s.add_plane_curve("cubic", 3)
    assert s.curve("cubic").node_budget == 1
    assert s.genus_a("cubic") == 1
    with pytest.raises(CurveError):
        s.add_plane_curve("line", 1)  # duplicate name
    with pytest.raises(CurveError):
        s.add_plane_curve("bad", 0)


def test_degree_curve_forbidden_after_blowup():
    s = projective_plane().blow_up(CenterSpec("e1"))
    with pytest.raises(CurveError):
        s.add_plane_curve("late", 1)


def test_add_class_curve():
    s = projective_plane()
    for i in range(9):
        s = s.blow_up(CenterSpec("x%d" % i))
    fiber = [3] + [-1] * 9
    s = s.add_class_curve("F1", fiber, node_budget=1)
    assert s.genus_a("F1") == 1
    assert s.self_int("F1") == 0

    # a line through three points is rational: budget 0 is fine, 1 is not
    cls = [1, -1, -1, -1, 0, 0, 0, 0, 0, 0]
    s2 = s.add_class_curve("tri", cls, node_budget=0)
    assert s2.genus_a("tri") == 0
    with pytest.raises(CurveError):
        s.add_class_curve("tri", cls, node_budget=1)

    # a degree-one class with a double point has negative genus
    bad = [1, -2, 0, 0, 0, 0, 0, 0, 0, 0]
    with pytest.raises(CurveError):
        s.add_class_curve("bad", bad)
    # exceptional class itself is a fine rational curve
    exc = [0, 1, 0, 0, 0, 0, 0, 0, 0, 0]
    assert s.add_class_curve("exc", exc).genus_a("exc") == 0


def test_pairing_examples():
    s = projective_plane()
    s = s.add_plane_curve("l1", 1).add_plane_curve("l2", 1)
    s = s.add_plane_curve("conic", 2)
    assert s.pair("l1", "l2") == 1
    assert s.pair("l1", "conic") == 2
    assert s.self_int("conic") == 4


def test_blow_up_separates_two_lines():
    s = projective_plane().add_plane_curve("l1", 1).add_plane_curve("l2", 1)
    s = s.blow_up(CenterSpec("e1", on=("l1", "l2")))
    assert s.pair("l1", "l2") == 0
    assert s.self_int("l1") == 0
    assert s.pair("l1", "e1") == 1
    assert s.pair("l2", "e1") == 1
    with pytest.raises(CenterError):
        s.blow_up(CenterSpec("e2", on=("l1", "l2")))  # pairing exhausted


def test_blow_up_at_node():
    s = projective_plane().add_plane_curve("cubic", 3)
    assert s.curve("cubic").node_budget == 1
    s2 = s.blow_up(CenterSpec("e1", node_of="cubic"))
    assert s2.self_int("cubic") == 9 - 4
    assert s2.curve("cubic").node_budget == 0
    assert s2.pair("cubic", "e1") == 2
    assert s2.genus_a("cubic") == 0
    with pytest.raises(CenterError):
        s2.blow_up(CenterSpec("e2", node_of="cubic"))  # no node left


def test_node_center_requires_double_pairing():
    s = projective_plane().add_plane_curve("cubic", 3).add_plane_curve("l", 1)
    # l meets the cubic 3 times, so sitting on the node is allowed
    s2 = s.blow_up(CenterSpec("e1", on=("l",), node_of="cubic"))
    assert s2.pair("cubic", "l") == 1
    s3 = s.blow_up(CenterSpec("e1", on=("l",)))
    # after using up two of the three crossings, the node is out of reach
    s3 = s3.blow_up(CenterSpec("e2", on=("l", "cubic")))
    s3 = s3.blow_up(CenterSpec("e3", on=("l", "cubic")))
    with pytest.raises(CenterError):
        s3.blow_up(CenterSpec("e4", on=("l",), node_of="cubic"))


def test_center_spec_validation():
    with pytest.raises(CenterError):
        CenterSpec("e1", on=("c",), node_of="c")
    s = projective_plane()
    with pytest.raises(SurfaceError):
        s.blow_up(CenterSpec("e1", on=("ghost",)))
    s = s.blow_up(CenterSpec("e1"))
    with pytest.raises(CenterError):
        s.blow_up(CenterSpec("e1"))  # label reuse


def test_invariants_track_blowups():
    s = projective_plane()
    for i in range(9):
        s = s.blow_up(CenterSpec("y%d" % i))
    assert s.invariants() == (12, -8, 10, 0)
    for i in range(13):
        s = s.blow_up(CenterSpec("z%d" % i))
    e, sigma, b2, k2 = s.invariants()
    assert (e, k2, b2) == (25, -13, 23)


def test_exceptional_class_lookup():
    s = projective_plane().blow_up(CenterSpec("a")).blow_up(CenterSpec("b"))
    assert s.exceptional_class("b") == DivisorClass((0, 0, 1))
    with pytest.raises(SurfaceError):
        s.exceptional_class("c")


def random_surface(rng, steps=6):
    s = projective_plane()
    s = s.add_plane_curve("c1", rng.randint(1, 3))
    s = s.add_plane_curve("c2", rng.randint(1, 3))
    for i in range(steps):
        names = [c.name for c in s.curves]
        choice = rng.random()
        on = []
        if choice < 0.7:
            rng.shuffle(names)
            for n in names[:2]:
                trial = on + [n]
                if all(s.pair(a, b) >= 1 for ai, a in enumerate(trial)
                       for b in trial[ai + 1:]):
                    on = trial
        try:
            s = s.blow_up(CenterSpec("e%d" % i, on=tuple(on)))
        except SurfaceError:
            s = s.blow_up(CenterSpec("e%d" % i))
    return s


def test_blow_up_bilinearity_random():
    # (C - m e)(D - n e) = C.D - m n, checked through the engine
    rng = random.Random(99)
    for _ in range(40):
        s = projective_plane().add_plane_curve("c", 3).add_plane_curve("d", 2)
        before = s.pair("c", "d")
        s2 = s.blow_up(CenterSpec("e", on=("c", "d")))
        assert s2.pair("c", "d") == before - 1
        s3 = s.blow_up(CenterSpec("e", on=("d",), node_of="c"))
        assert s3.pair("c", "d") == before - 2
        assert s3.pair("c", "e") == 2 and s3.pair("d", "e") == 1


def test_k2_identity_and_genus_budget_random():
    rng = random.Random(4)
    for _ in range(25):
        s = random_surface(rng, steps=rng.randint(1, 8))
        e, sigma, b2, k2 = s.invariants()
        assert 2 * e + 3 * sigma == k2
        assert b2 == 1 + s.n_blowups
        for rec in s.curves:
            assert s.genus_a(rec.name) >= rec.node_budget >= 0


def test_blowup_decrements_invariants():
    rng = random.Random(17)
    s = random_surface(rng, steps=3)
    e, sigma, b2, k2 = s.invariants()
    s2 = s.blow_up(CenterSpec("extra"))
    e2, sigma2, b22, k22 = s2.invariants()
    assert (e2, sigma2, b22, k22) == (e + 1, sigma - 1, b2 + 1, k2 - 1)


def test_node_blowup_drops_genus_by_one():
    s = projective_plane().add_plane_curve("quartic", 4)
    g = s.genus_a("quartic")
    assert g == 3 and s.curve("quartic").node_budget == 3
    s2 = s.blow_up(CenterSpec("e1", node_of="quartic"))
    assert s2.genus_a("quartic") == g - 1


def test_class_length_checks():
    s = projective_plane().blow_up(CenterSpec("e1"))
    with pytest.raises(SurfaceError):
        s.pair(DivisorClass((1,)), "e1")
    with pytest.raises(CurveError):
        s.add_class_curve("short", [1])
