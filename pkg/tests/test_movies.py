"""Unit oracles for bookmark words, movies, and the move catalog."""

import pytest

from khdp.movies import (CATALOG_IDS, BookmarkWord, Movie, MovieEvent,
                         MovieError, WordError, apply_event, catalog,
                         enumerate_closed_words, hopf_word, is_closed,
                         make_word, parse, parse_movie, scan,
                         seifert_hopf_movie, serialize_movie, serialize_word,
                         stills, trefoil_word, unknot_word, validate_movie)


def test_scan_widths_and_signs():
    w = hopf_word(True)
    s = scan(w)
    assert s.widths[0] == 0 and s.final_width == 0
    assert max(s.widths) == 4
    assert sorted(s.signs.values()) == [1, 1]
    assert sorted(scan(hopf_word(False)).signs.values()) == [-1, -1]


def test_scan_rejects_bad_widths():
    with pytest.raises(WordError):
        scan(make_word(0, (), [("CAP", 0, "SW"), ("CUP", 1)]))
    with pytest.raises(WordError):
        scan(make_word(1, ("U",), [("X", 0)]))


def test_roundtrip_words():
    for w in (unknot_word(), hopf_word(True), trefoil_word(False)):
        assert parse(serialize_word(w)) == w


def test_roundtrip_movies():
    for m in (seifert_hopf_movie(True), seifert_hopf_movie(False, dotted=True)):
        assert parse_movie(serialize_movie(m)) == m


def test_closedness():
    assert is_closed(hopf_word(True))
    assert not is_closed(make_word(2, ("U", "U"), [("X", 0)]))


def test_node_flips_kind():
    w = make_word(2, ("U", "U"), [("X", 0)])
    w2 = apply_event(w, MovieEvent.make("node", 0))
    assert w2.tokens[0].kind == "XBAR"
    assert apply_event(w2, MovieEvent.make("node", 0)) == w


def test_node_flips_sign():
    w = make_word(2, ("U", "U"), [("X", 0)])
    assert scan(w).signs[0] == 1
    assert scan(apply_event(w, MovieEvent.make("node", 0))).signs[0] == -1


def test_birth_death_inverse():
    w = unknot_word()
    w2 = apply_event(w, MovieEvent.make("birth", 1, l=0, dir="SW"))
    assert scan(w2).final_width == 0
    assert apply_event(w2, MovieEvent.make("death", 1)) == w


def test_r1_r1inv_inverse():
    w = make_word(1, ("U",), [])
    w2 = apply_event(w, MovieEvent.make("r1", 0, l=0, kind="X"))
    assert len(w2.tokens) == 3
    assert apply_event(w2, MovieEvent.make("r1inv", 0)) == w


def test_r2_r2inv_inverse():
    w = make_word(2, ("U", "D"), [])
    w2 = apply_event(w, MovieEvent.make("r2", 0, l=0, first="X"))
    kinds = [t.kind for t in w2.tokens]
    assert kinds == ["X", "XBAR"]
    assert apply_event(w2, MovieEvent.make("r2inv", 0)) == w


def test_saddle_requires_antiparallel():
    w = make_word(2, ("U", "U"), [])
    with pytest.raises(MovieError):
        apply_event(w, MovieEvent.make("saddle", 0, l=0))
    w = make_word(2, ("U", "D"), [])
    w2 = apply_event(w, MovieEvent.make("saddle", 0, l=0))
    assert [t.kind for t in w2.tokens] == ["CUP", "CAP"]


def test_r3_artin_guard():
    # middle crossing of the opposite kind from both outer ones: no triangle
    w = make_word(3, ("U", "U", "U"), [("X", 0), ("XBAR", 1), ("X", 0)])
    with pytest.raises(MovieError):
        apply_event(w, MovieEvent.make("r3", 0))
    # mixed outer kinds are fine
    w = make_word(3, ("U", "U", "U"), [("XBAR", 0), ("X", 1), ("X", 0)])
    w2 = apply_event(w, MovieEvent.make("r3", 0))
    assert [t.l for t in w2.tokens] == [1, 0, 1]
    assert [t.kind for t in w2.tokens] == ["X", "X", "XBAR"]


def test_exchange_disjoint_only():
    w = make_word(4, ("U", "U", "U", "U"), [("X", 0), ("X", 2)])
    w2 = apply_event(w, MovieEvent.make("exchange", 0))
    assert [t.l for t in w2.tokens] == [2, 0]
    with pytest.raises(MovieError):
        apply_event(make_word(3, ("U",) * 3, [("X", 0), ("X", 1)]),
                    MovieEvent.make("exchange", 0))


def test_node_after_r1_prohibited():
    m = Movie(make_word(1, ("U",), []),
              (MovieEvent.make("r1", 0, l=0, kind="X"),
               MovieEvent.make("node", 1)))
    with pytest.raises(MovieError):
        validate_movie(m)


def test_catalog_replays():
    for mid in CATALOG_IDS:
        for v in catalog(mid):
            left = stills(v.left)
            right = stills(v.right)
            assert left[0] == right[0]
            assert left[-1] == right[-1]


def test_seifert_movie_targets():
    for pos in (True, False):
        words = validate_movie(seifert_hopf_movie(pos))
        assert words[0] == BookmarkWord()
        final = words[-1]
        s = scan(final)
        assert sorted(s.signs.values()) == ([1, 1] if pos else [-1, -1])


def test_enumeration_is_exhaustive_and_closed():
    words = enumerate_closed_words(2, 2)
    assert len(words) >= 1000
    for w in words[:50]:
        assert is_closed(w)
    assert len({str(w) for w in words}) == len(words)
