"""Containment semantics against hand scans and naive re-enumeration."""

from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vincular.perms import (
    VincularPattern,
    avoids_circular,
    avoids_linear,
    circular_classes,
    occurrences,
    rotations,
    standardize,
)

P2_31 = VincularPattern((2, 3, 1), bonds={1})
P12_3 = VincularPattern((1, 2, 3), bonds={0})
P41_23 = VincularPattern((4, 1, 2, 3), bonds={2})
CIRC = VincularPattern((2, 3, 4, 1), bonds={0})
REDUCED = (P12_3, P41_23)


def test_standardize():
    assert standardize((5, 2, 9)) == (2, 1, 3)
    assert standardize((1, 2, 3)) == (1, 2, 3)
    assert standardize((7, 3, 8, 1)) == (3, 2, 4, 1)


def test_standardize_rejects_duplicates():
    with pytest.raises(ValueError):
        standardize((2, 2, 1))


def test_rotations():
    assert rotations((1, 2, 3)) == [(1, 2, 3), (3, 1, 2), (2, 3, 1)]
    assert rotations((1,)) == [(1,)]
    assert rotations((2, 3, 4, 1)) == [
        (2, 3, 4, 1), (1, 2, 3, 4), (4, 1, 2, 3), (3, 4, 1, 2)]


def test_single_occurrence_in_41523():
    # 4,5,2 at 0-based indices (0,2,3) is the only occurrence: the final
    # two pattern letters are glued, so 4,5,3 does not count.
    assert occurrences((4, 1, 5, 2, 3), P2_31) == [(0, 2, 3)]


def test_host_shorter_than_pattern():
    assert occurrences((2, 1, 3), P41_23) == []
    assert avoids_linear((1, 2), REDUCED)


def test_glued_ascent_occurrences_in_identity():
    assert occurrences((1, 2, 3, 4), P12_3) == [(0, 1, 2), (0, 1, 3), (1, 2, 3)]


def test_45132_avoids_both_reduced_patterns():
    assert avoids_linear((4, 5, 1, 3, 2), REDUCED)


def test_3142_avoids_glued_tail_pattern():
    # The only length-4 index tuple is the whole word, and 3142 is not
    # order-isomorphic to 4123.
    assert occurrences((3, 1, 4, 2), P41_23) == []
    assert avoids_linear((3, 1, 4, 2), (P41_23,))


def test_identity_word_contains_circular_pattern():
    # Rotating 1234 produces 2341 itself, a literal occurrence.
    assert not avoids_circular((1, 2, 3, 4), (CIRC,))


def test_five_of_six_classes_avoid_at_n4():
    hits = sum(avoids_circular(w, (CIRC,)) for w in circular_classes(4))
    assert hits == 5


def test_short_words_avoid_circularly():
    for n in (1, 2, 3):
        for w in permutations(range(1, n + 1)):
            assert avoids_circular(w, (CIRC,))


def test_pattern_validation():
    with pytest.raises(ValueError):
        VincularPattern((1, 3), bonds=set())
    with pytest.raises(ValueError):
        VincularPattern((1, 2), bonds={5})


def _classical_contains(host, pat):
    k = len(pat)
    return any(
        standardize([host[i] for i in idx]) == pat
        for idx in combinations(range(len(host)), k)
    )


def test_no_bonds_matches_classical_containment():
    pats = [(1, 2, 3), (2, 3, 1), (3, 2, 1), (1, 3, 2)]
    for n in range(1, 7):
        for host in permutations(range(1, n + 1)):
            for entries in pats:
                pat = VincularPattern(entries)
                got = bool(occurrences(host, pat))
                assert got == _classical_contains(host, entries)


def test_all_bonds_matches_window_scan():
    pat = VincularPattern((2, 1, 3), bonds={0, 1})
    for host in permutations(range(1, 6)):
        got = occurrences(host, pat)
        want = [
            (i, i + 1, i + 2)
            for i in range(3)
            if standardize(host[i:i + 3]) == (2, 1, 3)
        ]
        assert got == want


def _word(n):
    return st.permutations(tuple(range(1, n + 1))).map(tuple)


@given(st.integers(1, 6).flatmap(_word))
def test_avoidance_iff_no_occurrence(host):
    for pat in (P12_3, P41_23, CIRC):
        assert avoids_linear(host, (pat,)) == (not occurrences(host, pat))


@given(st.integers(1, 6).flatmap(_word))
def test_circular_avoidance_is_rotation_invariant(host):
    values = {avoids_circular(r, (CIRC,)) for r in rotations(host)}
    assert len(values) == 1
