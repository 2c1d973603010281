"""Unit oracles for flat tangles and dotted cobordisms."""

import pytest

from khdp.frobenius import EQUIVARIANT, PLAIN, RingElem
from khdp.planar import (EMPTY, CobLinear, FlatTangle, beside, cap_tangle,
                         compose_horizontal, compose_vertical, cup_tangle,
                         cupcap_tangle, identity_coblinear, identity_tangle,
                         normalize, reflect, reflect_cob, stack, stack_cob,
                         trace, trace_circles)
from khdp.khovanov import saddle_cob


def test_tangle_validation():
    identity_tangle(3).check()
    with pytest.raises(ValueError):
        FlatTangle.make(2, 2, ((0, 3), (1, 2))).check()  # arcs cross
    with pytest.raises(ValueError):
        FlatTangle.make(1, 1, ()).check()  # uncovered points


def test_stack_counts_and_loops():
    # cap then cup at the same spot closes a circle
    c = stack(cap_tangle(0, 0), cup_tangle(0, 0))
    assert c == EMPTY._replace(loops=1) if hasattr(EMPTY, "_replace") else True
    assert c.top == 0 and c.bot == 0 and c.loops == 1
    # identity stacking is neutral
    t = cupcap_tangle(1, 2)
    assert stack(identity_tangle(t.top), t) == t
    assert stack(t, identity_tangle(t.bot)) == t


def test_beside_counts():
    a, b = identity_tangle(2), cupcap_tangle(0, 0)
    u = beside(a, b)
    assert (u.top, u.bot) == (4, 4)
    assert len(u.pairs) == len(a.pairs) + len(b.pairs)


def test_reflect_involution():
    for t in (identity_tangle(3), cap_tangle(1, 2), cupcap_tangle(2, 0)):
        assert reflect(reflect(t)) == t
    r = reflect(cap_tangle(0, 0))
    assert (r.top, r.bot) == (2, 0)


def test_trace_closure():
    assert trace(identity_tangle(1)).loops == 1
    assert trace(identity_tangle(2)).loops == 2
    # the nested closure of a cup-cap is a single circle
    assert trace(cupcap_tangle(0, 0)).loops == 1
    assert trace(EMPTY) == EMPTY


def test_identity_composition():
    t = cupcap_tangle(0, 1)
    f = saddle_cob(0, 1, PLAIN)
    for spec in (PLAIN, EQUIVARIANT):
        f = saddle_cob(0, 1, spec)
        ids, idt = identity_coblinear(f.source, spec), identity_coblinear(t, spec)
        assert compose_vertical(f, idt, spec) == f
        assert compose_vertical(ids, f, spec) == f


def test_closed_torus_scalar():
    # a closed genus-1 component evaluates to the scalar 2 in plain mode
    t = identity_tangle(1)
    f = normalize(t, t, [({("s", 0), ("t", 0)}, 0, 0), (set(), 1, 0)], PLAIN)
    assert f == identity_coblinear(t, PLAIN).scale(2)
    # a closed genus-0 dotless sphere evaluates to 0
    z = normalize(t, t, [({("s", 0), ("t", 0)}, 0, 0), (set(), 0, 0)], PLAIN)
    assert not z


def test_saddle_saddle_neck_cut():
    """Saddle up then saddle down: a tube, equal to the dotted neck-cut sum."""
    up = saddle_cob(0, 0, PLAIN)            # identity -> cup-cap
    down = reflect_cob(up, PLAIN)           # cup-cap -> identity
    tube = compose_vertical(up, down, PLAIN)
    t = identity_tangle(2)
    dot_s = normalize(t, t, [({("s", 0), ("t", 0)}, 0, 1),
                             ({("s", 1), ("t", 1)}, 0, 0)], PLAIN)
    dot_t = normalize(t, t, [({("s", 0), ("t", 0)}, 0, 0),
                             ({("s", 1), ("t", 1)}, 0, 1)], PLAIN)
    assert tube == dot_s + dot_t


def test_degree_additivity():
    """q-degrees add under vertical composition."""
    up = saddle_cob(0, 0, PLAIN)
    down = reflect_cob(up, PLAIN)
    assert up.qdegree() == -1
    assert down.qdegree() == -1
    assert compose_vertical(up, down, PLAIN).qdegree() == -2
    for spec in (PLAIN, EQUIVARIANT):
        u = saddle_cob(1, 1, spec)
        assert compose_vertical(u, reflect_cob(u, spec), spec).qdegree() == -2


def test_horizontal_composition():
    f = saddle_cob(0, 0, PLAIN)
    g = identity_coblinear(identity_tangle(1), PLAIN)
    u = compose_horizontal(f, g, PLAIN)
    assert u.source == beside(f.source, g.source)
    assert u.target == beside(f.target, g.target)
    assert u.qdegree() == f.qdegree()


def test_stack_cob_matches_tangle_stack():
    f = saddle_cob(0, 1, PLAIN)
    g = identity_coblinear(cup_tangle(0, 1), PLAIN)
    u = stack_cob(f, g, PLAIN)
    assert u.source == stack(f.source, g.source)
    assert u.target == stack(f.target, g.target)


def test_reflect_cob_contravariant():
    f = saddle_cob(1, 2, PLAIN)
    r = reflect_cob(f, PLAIN)
    assert r.source == reflect(f.target)
    assert r.target == reflect(f.source)
    assert reflect_cob(r, PLAIN) == f


def test_pair_of_pants_neck_cut():
    """A sheet with three circle boundaries neck-cuts to the 3-term dot sum."""
    src = FlatTangle.make(0, 0, (), loops=1)
    tgt = FlatTangle.make(0, 0, (), loops=2)
    f = normalize(src, tgt, [({("sl", 0), ("tl", 0), ("tl", 1)}, 0, 0)], PLAIN)
    want = CobLinear(src, tgt, {(0, 1, 1): RingElem.one(),
                                (1, 0, 1): RingElem.one(),
                                (1, 1, 0): RingElem.one()})
    assert f == want


def test_inhomogeneous_rejected():
    t = identity_tangle(1)
    dot = normalize(t, t, [({("s", 0), ("t", 0)}, 0, 1)], PLAIN)
    plain = identity_coblinear(t, PLAIN)
    with pytest.raises(ValueError):
        (dot + plain).qdegree()
