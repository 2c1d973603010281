"""Unit oracles for complexes, simplification, and hom-complexes."""

import pytest

from khdp.frobenius import EQUIVARIANT, PLAIN
from khdp.complexes import (check_chain_map, compose_maps, deloop, dual,
                            hom_complex, homotopic_up_to_sign, identity_map,
                            simplify, single_complex, tensor, tensor_maps,
                            validate)
from khdp.homology import homology_of
from khdp.khovanov import braid_complex, complex_of, crossing_complex
from khdp.movies import hopf_word, trefoil_word, unknot_word
from khdp.planar import identity_tangle


def test_crossing_complex_valid():
    for sign in (1, -1):
        for kind in ("X", "XBAR"):
            validate(crossing_complex(sign, 1, 2, PLAIN, kind))


def test_tensor_validates_and_associates():
    a = crossing_complex(1, 0, 1, PLAIN)
    b = crossing_complex(-1, 1, 0, PLAIN, "XBAR")
    ab = tensor(a, b)
    validate(ab)
    c = crossing_complex(1, 1, 0, PLAIN)
    left = tensor(tensor(a, b), c)
    right = tensor(a, tensor(b, c))
    assert left.objects == right.objects
    assert left.diff == right.diff


def test_deloop_round_trip():
    from khdp.khovanov import full_complex
    full = full_complex(hopf_word(True), PLAIN)
    assert any(o.tangle.loops for o in full.objects)
    nxt, fwd, bwd = deloop(full)
    validate(nxt)
    check_chain_map(fwd)
    check_chain_map(bwd)
    # mutually inverse on the delooped side
    assert compose_maps(fwd, bwd).entries == identity_map(nxt).entries


def test_eliminate_preserves_homology():
    from khdp.khovanov import full_complex
    word = trefoil_word(True)
    cur = full_complex(word, PLAIN)
    while any(o.tangle.loops for o in cur.objects):
        cur, _, _ = deloop(cur)
    h0 = homology_of(cur)
    red, _, _ = simplify(cur)
    assert homology_of(red) == h0


def test_simplify_equivalence_maps():
    from khdp.khovanov import full_complex
    c = full_complex(unknot_word(), PLAIN)
    red, to_red, from_red = simplify(c)
    check_chain_map(to_red)
    check_chain_map(from_red)
    assert compose_maps(to_red, from_red).entries == identity_map(red).entries


def test_simplify_no_maps_agrees():
    from khdp.khovanov import full_complex
    c = full_complex(hopf_word(False), PLAIN)
    r1, _, _ = simplify(c)
    r2, m1, m2 = simplify(c, maps=True)
    assert r1.objects == r2.objects and r1.diff == r2.diff
    assert m1 is not None and m2 is not None


def test_hom_complex_identity_class():
    c, _, _ = simplify(braid_complex(2, [(0, 1)], PLAIN))
    hc = hom_complex(c, c)
    validate(hc.complex)
    ident = identity_map(c)
    verdict = homotopic_up_to_sign(ident, ident, hc)
    assert verdict.verdict == "plus" and verdict.literally_equal


def test_homotopic_detects_difference():
    c, _, _ = simplify(braid_complex(2, [(0, 1)], PLAIN))
    hc = hom_complex(c, c)
    ident = identity_map(c)
    doubled = type(ident)(ident.source, ident.target, ident.tshift,
                          {k: v.scale(2) for k, v in ident.entries.items()})
    verdict = homotopic_up_to_sign(ident, doubled, hc)
    assert verdict.verdict == "no"


def test_dual_flips_bidegrees():
    from khdp.khovanov import complex_of
    c = complex_of(trefoil_word(True), PLAIN)
    d = dual(c)
    validate(d)
    assert homology_of(d).free_part() == \
        {(-t, -q): r for (t, q), r in homology_of(c).free_part().items()}


def test_tensor_maps_is_chain_map():
    a = crossing_complex(1, 0, 0, PLAIN)
    ra, ta, fa = simplify(a)
    f = compose_maps(fa, ta)  # projection onto the reduced model and back
    check_chain_map(f)
    g = identity_map(crossing_complex(-1, 0, 0, PLAIN, "XBAR"))
    u = tensor_maps(f, g)
    check_chain_map(u)


@pytest.mark.parametrize("spec", (PLAIN, EQUIVARIANT))
def test_d_squared_zero_along_pipeline(spec):
    from khdp.khovanov import full_complex, token_complex
    from khdp.movies import scan
    word = hopf_word(True)
    s = scan(word)
    c = single_complex(identity_tangle(0), spec)
    for idx, tok in enumerate(word.tokens):
        c = tensor(c, token_complex(tok, s.signs.get(idx), s.widths[idx], spec))
        validate(c)  # includes d^2 = 0
        c, _, _ = simplify(c, maps=False)
        validate(c)
