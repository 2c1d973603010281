"""The brute-force cube oracle against the scanning pipeline."""

import random

import pytest

from khdp.cube import cube_homology
from khdp.khovanov import homology
from khdp.movies import (enumerate_closed_words, hopf_word, make_word,
                         trefoil_word, unknot_word)


def test_cube_standard_links():
    for word in (unknot_word(), hopf_word(True), hopf_word(False),
                 trefoil_word(True), trefoil_word(False)):
        assert cube_homology(word) == homology(word)


def test_cube_includes_torsion():
    h = cube_homology(trefoil_word(True))
    assert h.get(3, 7) == (0, (2,))


def test_cube_rejects_open_diagrams():
    with pytest.raises(ValueError):
        cube_homology(make_word(2, ("U", "U"), [("X", 0)]))


def test_cube_random_sample_equivalence():
    words = enumerate_closed_words(3, 2)
    random.seed(20240817)
    for w in random.sample(words, 120):
        assert cube_homology(w) == homology(w)
