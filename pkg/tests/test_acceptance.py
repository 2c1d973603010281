"""Acceptance suite: each test prints one PASS/FAIL line and asserts a
wall-clock budget alongside the exactness checks."""

import time

import pytest

from khdp.complexes import (check_chain_map, compose_maps, dual, hom_complex,
                            simplify, single_complex, tensor, validate)
from khdp.cube import cube_homology
from khdp.frobenius import EQUIVARIANT, PLAIN
from khdp.homology import BigradedGroup, class_coordinates, homology_of
from khdp.khovanov import (braid_complex, complex_of, full_complex, homology,
                           movie_class, node_A, node_B, saddle_cob,
                           token_complex, verify_movie_move)
from khdp.movies import (enumerate_closed_words, hopf_word, scan,
                         seifert_hopf_movie, trefoil_word, unknot_word)
from khdp.planar import compose_vertical, identity_tangle, reflect_cob


def bg(entries):
    g = BigradedGroup()
    for (t, q), r in entries.items():
        g.set(t, q, r)
    return g


def report(num, ok, budget, took):
    line = f"ACCEPTANCE {num}: {'PASS' if ok and took < budget else 'FAIL'} " \
           f"({took:.2f}s of {budget:.0f}s budget)"
    print(line, flush=True)
    assert ok, f"criterion {num} failed"
    assert took < budget, f"criterion {num} exceeded budget: {took:.2f}s"


def test_criterion_1_hopf_homologies():
    t0 = time.time()
    plus = homology(hopf_word(True))
    minus = homology(hopf_word(False))
    ok = (plus == bg({(0, 0): 1, (0, 2): 1, (2, 4): 1, (2, 6): 1})
          and minus == bg({(0, 0): 1, (0, -2): 1, (-2, -4): 1, (-2, -6): 1}))
    report(1, ok, 1.0, time.time() - t0)


def test_criterion_2_node_maps():
    t0 = time.time()
    ok = True
    for f, star in ((node_A(), (-2, -6)), (node_B(), (2, 4))):
        check_chain_map(f)
        hc = hom_complex(f.source, f.target)
        cc = class_coordinates(f, hc)
        ok = ok and cc.bidegree == star and cc.is_generator and cc.is_cycle
        ok = ok and homology_of(hc.complex).get(*star) == (1, ())
    report(2, ok, 1.0, time.time() - t0)


def test_criterion_3_mm16():
    t0 = time.time()
    reports = verify_movie_move("MM16")
    ok = len(reports) == 4
    for r in reports:
        ok = ok and r.verdict in ("plus", "minus")
        star = (2, 4) if r.node_kind == "B" else (-2, -6)
        ok = ok and r.star == star and r.star_group == (1, ())
    report(3, ok, 30.0, time.time() - t0)


def test_criterion_4_mm17_hom_table():
    t0 = time.time()
    # endpoints of the all-up variant's node event, as 3-strand braids
    src, _, _ = simplify(braid_complex(3, [(0, -1), (1, 1), (0, 1)]), maps=False)
    tgt, _, _ = simplify(braid_complex(3, [(0, 1), (1, 1), (0, 1)]), maps=False)
    table = homology_of(hom_complex(src, tgt).complex)
    want = bg({(0, -4): 1, (0, -2): 2, (0, 0): 1, (2, 0): 1, (2, 2): 2, (2, 4): 1})
    ok = table == want and table.get(2, 4) == (1, ())
    rep = verify_movie_move("MM17", "MM17[UUU]")[0]
    ok = ok and rep.verdict in ("plus", "minus") and rep.star == (2, 4)
    ok = ok and rep.left_class.is_generator and rep.right_class.is_generator
    report(4, ok, 300.0, time.time() - t0)


def test_criterion_5_mm18_and_commutations():
    t0 = time.time()
    ok = True
    for mid in ("MM18", "COMM"):
        for r in verify_movie_move(mid):
            ok = ok and r.verdict == "plus" and r.literally_equal
    report(5, ok, 10.0, time.time() - t0)


def test_criterion_6_equivariant_hopf():
    t0 = time.time()
    ok = True
    for pos, degs in ((True, {(0, 1), (2, 5)}), (False, {(0, -1), (-2, -5)})):
        c = complex_of(hopf_word(pos), EQUIVARIANT)
        ok = ok and all(not v for v in c.diff.values())
        got = sorted((o.tdeg, o.qshift) for o in c.objects)
        want = sorted((t, q + e) for (t, q) in degs for e in (1, -1))
        ok = ok and got == want
    report(6, ok, 5.0, time.time() - t0)


def test_criterion_7_seifert_classes():
    t0 = time.time()
    _, minus, _ = movie_class(seifert_hopf_movie(False))
    _, minus_dot, _ = movie_class(seifert_hopf_movie(False, dotted=True))
    _, plus, _ = movie_class(seifert_hopf_movie(True))
    _, plus_dot, _ = movie_class(seifert_hopf_movie(True, dotted=True))
    ok = minus.bidegree == (0, 0) and minus.is_generator
    ok = ok and minus_dot.bidegree == (0, -2) and minus_dot.is_generator
    ok = ok and plus.bidegree == (0, 0) and tuple(abs(x) for x in plus.free) == (2,)
    ok = ok and plus_dot.is_cycle and not any(plus_dot.free) \
        and not any(plus_dot.torsion)
    report(7, ok, 5.0, time.time() - t0)


def test_criterion_8_oracle_equivalence():
    t0 = time.time()
    ok = True
    for w in enumerate_closed_words(3, 2):
        if cube_homology(w) != homology(w):
            ok = False
            break
    report(8, ok, 120.0, time.time() - t0)


def test_criterion_9_property_suites():
    t0 = time.time()
    ok = True

    # d^2 = 0 after every pipeline stage
    for word in (hopf_word(True), trefoil_word(False)):
        s = scan(word)
        c = single_complex(identity_tangle(0), PLAIN)
        for idx, tok in enumerate(word.tokens):
            c = tensor(c, token_complex(tok, s.signs.get(idx), s.widths[idx],
                                        PLAIN))
            validate(c)
            c, _, _ = simplify(c, maps=False)
            validate(c)

    # degree additivity of cobordism composition
    up = saddle_cob(0, 0, PLAIN)
    down = reflect_cob(up, PLAIN)
    ok = ok and compose_vertical(up, down, PLAIN).qdegree() == \
        up.qdegree() + down.qdegree()

    # dual-flip of free ranks on all closed diagrams with <= 3 crossings
    for w in enumerate_closed_words(3, 2):
        c = complex_of(w)
        h = homology_of(c)
        hd = homology_of(dual(c))
        if hd.free_part() != {(-t, -q): r for (t, q), r in h.free_part().items()}:
            ok = False
            break

    # braid complexes invert under tangle composition
    for n, gens in ((2, [(0, 1)]), (2, [(0, 1), (0, 1)]), (3, [(0, 1), (1, 1)])):
        inv = [(col, -s) for col, s in reversed(gens)]
        red, _, _ = simplify(tensor(braid_complex(n, gens),
                                    braid_complex(n, inv)), maps=False)
        ok = ok and len(red.objects) == 1 and not red.diff
        o = red.objects[0]
        ok = ok and o.tangle == identity_tangle(n) and (o.tdeg, o.qshift) == (0, 0)

    report(9, ok, 120.0, time.time() - t0)
