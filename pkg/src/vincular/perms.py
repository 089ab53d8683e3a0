"""Words, rotations, and vincular pattern containment.

A permutation is handled as a tuple of the integers 1..n in one-line
notation ("word" form).  A vincular pattern is a pattern word together
with a set of bonds: positions where two consecutive pattern letters must
sit in adjacent host positions in any occurrence.

Circular permutations are identified with the set of words obtained by
repeatedly moving the last letter to the front; a circular word contains a
pattern when at least one of those rotations contains it linearly.
"""

from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]


def standardize(values: Sequence[int]) -> Word:
    """Replace each entry by its rank, smallest -> 1.

    >>> standardize((5, 2, 9))
    (2, 1, 3)
    >>> standardize((7, 3, 8, 1))
    (3, 2, 4, 1)
    """
    if len(set(values)) != len(values):
        raise ValueError(f"cannot standardize, entries not distinct: {values!r}")
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(rank[v] for v in values)


def is_permutation_word(word: Sequence[int]) -> bool:
    """True when word is exactly the integers 1..n in some order."""
    n = len(word)
    return sorted(word) == list(range(1, n + 1))


def check_word(word: Sequence[int]) -> Word:
    word = tuple(word)
    if not is_permutation_word(word):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word!r}")
    return word


def rotations(word: Sequence[int]) -> list[Word]:
    """All cyclic shifts of word, moving the last letter to the front.

    The word itself comes first, then each successive shift.

    >>> rotations((1, 2, 3))
    [(1, 2, 3), (3, 1, 2), (2, 3, 1)]
    """
    word = tuple(word)
    out = [word]
    cur = word
    for _ in range(len(word) - 1):
        cur = (cur[-1],) + cur[:-1]
        out.append(cur)
    return out


def canonical_rotation(word: Sequence[int]) -> Word:
    """The rotation of word that starts with its smallest letter.

    Words in the same cyclic class share their canonical rotation, so this
    serves as the class representative.
    """
    word = tuple(word)
    pos = word.index(min(word))
    return word[pos:] + word[:pos]


def circular_classes(n: int) -> Iterator[Word]:
    """Canonical representatives of all (n-1)! cyclic classes of [n].

    Each representative starts with 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    for rest in _permutations(range(2, n + 1)):
        yield (1,) + rest


class VincularPattern:
    """A pattern word plus adjacency bonds.

    ``entries`` is a permutation of 1..k.  ``bonds`` is a set of 0-based
    positions t meaning pattern positions t and t+1 must occupy adjacent
    host positions in an occurrence.  No bonds gives a classical pattern;
    all k-1 bonds give a subword pattern.
    """

    __slots__ = ("entries", "bonds")

    def __init__(self, entries: Sequence[int], bonds: Iterable[int] = ()):
        self.entries: Word = check_word(entries)
        self.bonds: frozenset[int] = frozenset(bonds)
        k = len(self.entries)
        if any(t < 0 or t >= k - 1 for t in self.bonds):
            raise ValueError(f"bond positions must lie in 0..{k - 2}: {sorted(self.bonds)}")

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VincularPattern):
            return NotImplemented
        return self.entries == other.entries and self.bonds == other.bonds

    def __hash__(self) -> int:
        return hash((self.entries, self.bonds))

    def __repr__(self) -> str:
        return f"VincularPattern({self.entries!r}, bonds={sorted(self.bonds)!r})"


def iter_occurrences(host: Sequence[int], pattern: VincularPattern) -> Iterator[Word]:
    """Yield the 0-based index tuples of occurrences, lexicographically.

    An occurrence is a strictly increasing index tuple whose host values are
    order-isomorphic to the pattern and which honors every bond.  The search
    is plain backtracking over index tuples; the only shortcuts are the
    forced next index under a bond and abandoning prefixes that already
    violate the relative order.
    """
    entries = pattern.entries
    bonds = pattern.bonds
    k = len(entries)
    n = len(host)
    if k == 0:
        yield ()
        return
    chosen: list[int] = []

    def consistent(pos: int, idx: int) -> bool:
        val = host[idx]
        pv = entries[pos]
        for m, prev_idx in enumerate(chosen):
            if (entries[m] < pv) != (host[prev_idx] < val):
                return False
        return True

    def extend(pos: int) -> Iterator[Word]:
        if pos == k:
            yield tuple(chosen)
            return
        if pos > 0 and (pos - 1) in bonds:
            candidates: Iterable[int] = (chosen[-1] + 1,)
        else:
            start = chosen[-1] + 1 if pos > 0 else 0
            candidates = range(start, n)
        for idx in candidates:
            if idx >= n:
                break
            if consistent(pos, idx):
                chosen.append(idx)
                yield from extend(pos + 1)
                chosen.pop()

    yield from extend(0)


def occurrences(host: Sequence[int], pattern: VincularPattern) -> list[Word]:
    """All occurrences of pattern in host as 0-based index tuples.

    >>> occurrences((4, 1, 5, 2, 3), VincularPattern((2, 3, 1), bonds={1}))
    [(0, 2, 3)]
    >>> occurrences((1, 2, 3, 4), VincularPattern((1, 2, 3), bonds={0}))
    [(0, 1, 2), (0, 1, 3), (1, 2, 3)]
    """
    return list(iter_occurrences(host, pattern))


def contains(host: Sequence[int], pattern: VincularPattern) -> bool:
    """True when host has at least one occurrence of pattern."""
    for _ in iter_occurrences(host, pattern):
        return True
    return False


def avoids_linear(host: Sequence[int], patterns: Iterable[VincularPattern]) -> bool:
    """True when host contains none of the given patterns."""
    return not any(contains(host, p) for p in patterns)


def avoids_circular(word: Sequence[int], patterns: Iterable[VincularPattern]) -> bool:
    """True when every rotation of word avoids every given pattern."""
    patterns = tuple(patterns)
    return all(avoids_linear(rot, patterns) for rot in rotations(word))
