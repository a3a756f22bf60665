"""Closed sets in coset normal form: finite unions of points and cyclic cosets.

A cyclic coset ``a<r>`` is a left translate of a maximal cyclic subgroup;
its root must be primitive, so the subgroup is a full centralizer.  Every
set here is kept canonical: roots orientation-canonical, representatives
minimal, no point inside a listed coset, components sorted.  Canonical
forms are unique, which turns equality and inclusion into structural
checks and makes serialized output reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import AlphabetError, RootError
from .words import Alphabet, Word, parse_word


@dataclass(frozen=True)
class CyclicCoset:
    """Canonical ``rep * <root>``; build with :meth:`make`."""

    rep: Word
    root: Word

    @classmethod
    def make(cls, rep: Word, root: Word) -> "CyclicCoset":
        """Canonicalize a raw (representative, root) pair.

        The root must be primitive: a proper power would denote a coset of
        a non-maximal cyclic subgroup, which is not a centralizer coset
        and is rejected with a diagnostic.
        """
        if rep.alphabet != root.alphabet:
            raise AlphabetError("rep and root must share an alphabet")
        if root.is_identity:
            raise RootError("coset root must be nontrivial")
        dec = root.primitive_root()
        if dec.exponent != 1:
            raise RootError(
                f"root {root} is a proper power ({dec.root})^{dec.exponent}; "
                "only cosets of maximal cyclic subgroups (full centralizers) "
                "are representable - use the primitive root"
            )
        if ~root < root:
            root = ~root
        span = len(rep) + len(root) + 2
        rep = min(
            (rep * root ** m for m in range(-span, span + 1)),
            key=Word.sort_key,
        )
        return cls(rep, root)

    @property
    def alphabet(self) -> Alphabet:
        return self.root.alphabet

    def member(self, g: Word) -> bool:
        """True iff ``rep^-1 * g`` is a power of the root (zeroth included)."""
        h = ~self.rep * g
        if h.is_identity:
            return True
        dec = h.primitive_root()
        return dec.root == self.root or dec.root == ~self.root

    def element(self, m: int) -> Word:
        return self.rep * self.root ** m

    def sort_key(self) -> tuple:
        return (self.rep.sort_key(), self.root.sort_key())

    def __str__(self) -> str:
        return f"({self.rep})<{self.root}>"


class _WholeGroupType:
    """Singleton marker for the whole group, which has no coset normal form."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "WHOLE_GROUP"


WHOLE_GROUP = _WholeGroupType()


@dataclass(frozen=True)
class AlgebraicSet:
    """Finite union of singleton points and cyclic cosets, canonical form."""

    alphabet: Alphabet
    points: tuple[Word, ...] = ()
    cosets: tuple[CyclicCoset, ...] = ()

    @classmethod
    def of(
        cls,
        alphabet: Alphabet,
        points: Iterable[Word] = (),
        cosets: Iterable[Union[CyclicCoset, tuple[Word, Word]]] = (),
    ) -> "AlgebraicSet":
        """Canonicalize raw components into an AlgebraicSet.

        Cosets may be given as CyclicCoset values or raw (rep, root) pairs;
        roots are orientation-canonicalized, representatives minimized,
        duplicate cosets merged and absorbed points removed.
        """
        canon: dict[tuple, CyclicCoset] = {}
        for c in cosets:
            if isinstance(c, tuple):
                c = CyclicCoset.make(*c)
            else:
                c = CyclicCoset.make(c.rep, c.root)
            if c.alphabet != alphabet:
                raise AlphabetError("coset over a different alphabet")
            canon[c.sort_key()] = c
        coset_list = [canon[k] for k in sorted(canon)]
        kept: dict[tuple, Word] = {}
        for p in points:
            if p.alphabet != alphabet:
                raise AlphabetError("point over a different alphabet")
            if any(c.member(p) for c in coset_list):
                continue
            kept[p.sort_key()] = p
        return cls(alphabet, tuple(kept[k] for k in sorted(kept)), tuple(coset_list))

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "AlgebraicSet":
        return cls(alphabet)

    @property
    def is_empty(self) -> bool:
        return not self.points and not self.cosets

    @property
    def is_finite(self) -> bool:
        return not self.cosets

    def member(self, g: Word) -> bool:
        return g in self.points or any(c.member(g) for c in self.cosets)

    def __contains__(self, g: Word) -> bool:
        return self.member(g)

    def __str__(self) -> str:
        if self.is_empty:
            return "empty"
        parts = [f"{{{', '.join(str(p) for p in self.points)}}}"] if self.points else []
        parts.extend(str(c) for c in self.cosets)
        return " u ".join(parts)


def intersect_cosets(c1: CyclicCoset, c2: CyclicCoset) -> AlgebraicSet:
    """Intersection of two canonical cosets: a coset, a singleton, or empty.

    Equal cosets meet in themselves; distinct cosets of one subgroup are
    disjoint; cosets of different subgroups share at most one element,
    found by a bounded search (two common elements would force equal
    roots).
    """
    alphabet = c1.alphabet
    if c1 == c2:
        return AlgebraicSet.of(alphabet, cosets=(c1,))
    if c1.root == c2.root:
        return AlgebraicSet.empty(alphabet)
    span = len(c1.rep) + len(c2.rep) + 2 * (len(c1.root) + len(c2.root)) + 4
    for m in range(-span, span + 1):
        g = c1.element(m)
        if c2.member(g):
            return AlgebraicSet.of(alphabet, points=(g,))
    return AlgebraicSet.empty(alphabet)


def union(s1: AlgebraicSet, s2: AlgebraicSet) -> AlgebraicSet:
    if s1.alphabet != s2.alphabet:
        raise AlphabetError("operands over different alphabets")
    return AlgebraicSet.of(s1.alphabet, s1.points + s2.points, s1.cosets + s2.cosets)


def intersect(s1: AlgebraicSet, s2: AlgebraicSet) -> AlgebraicSet:
    if s1.alphabet != s2.alphabet:
        raise AlphabetError("operands over different alphabets")
    points = [p for p in s1.points if s2.member(p)]
    points += [p for p in s2.points if s1.member(p)]
    cosets: list[CyclicCoset] = []
    for c1 in s1.cosets:
        for c2 in s2.cosets:
            piece = intersect_cosets(c1, c2)
            points.extend(piece.points)
            cosets.extend(piece.cosets)
    return AlgebraicSet.of(s1.alphabet, points, cosets)


def _coset_contained(small: CyclicCoset, big: CyclicCoset) -> bool:
    # small.root must generate a subgroup of <big.root>; both primitive,
    # so the roots must agree up to orientation, and the representative
    # quotient must land in the subgroup.
    if small.root not in (big.root, ~big.root):
        return False
    return big.member(small.rep)


def subset(s1: AlgebraicSet, s2: AlgebraicSet) -> bool:
    """True iff every component of s1 is covered by s2.

    An infinite coset inside a finite union must lie inside one of its
    cosets, so coset containment reduces to per-coset checks.
    """
    if s1.alphabet != s2.alphabet:
        raise AlphabetError("operands over different alphabets")
    for p in s1.points:
        if not s2.member(p):
            return False
    for c in s1.cosets:
        if not any(_coset_contained(c, d) for d in s2.cosets):
            return False
    return True


def equals(s1: AlgebraicSet, s2: AlgebraicSet) -> bool:
    """Extensional equality; coincides with structural equality of canonical forms."""
    return s1 == s2


@dataclass(frozen=True)
class ChainReport:
    """Result of checking a descending chain of closed sets."""

    descending: bool
    strict_prefix_length: int
    stabilization_index: int
    measure_ok: bool


def chain_check(sets: Sequence[AlgebraicSet]) -> ChainReport:
    """Verify S0 >= S1 >= ... and locate where the chain stabilizes.

    ``strict_prefix_length`` counts the sets in the longest strictly
    decreasing initial run; ``stabilization_index`` is the first index
    after which all sets are equal.  Along every strict inclusion of
    canonical forms the measure (coset count, point count) must strictly
    lexicographically decrease; ``measure_ok`` records that check.
    """
    n = len(sets)
    if n == 0:
        return ChainReport(True, 0, 0, True)
    descending = True
    measure_ok = True
    strict = 1
    strict_run = True
    for i in range(n - 1):
        big, small = sets[i], sets[i + 1]
        step_subset = subset(small, big)
        if not step_subset:
            descending = False
        is_strict = step_subset and small != big
        if strict_run and is_strict:
            strict += 1
        else:
            strict_run = False
        if is_strict:
            m_big = (len(big.cosets), len(big.points))
            m_small = (len(small.cosets), len(small.points))
            if not m_small < m_big:
                measure_ok = False
    stab = n - 1
    while stab > 0 and sets[stab - 1] == sets[-1]:
        stab -= 1
    return ChainReport(descending, strict, stab, measure_ok)


def to_json_dict(s: Union[AlgebraicSet, _WholeGroupType]) -> dict:
    """The documented JSON shape: points, cosets, whole_group."""
    if s is WHOLE_GROUP:
        return {"points": [], "cosets": [], "whole_group": True}
    return {
        "points": [str(p) for p in s.points],
        "cosets": [{"rep": str(c.rep), "root": str(c.root)} for c in s.cosets],
        "whole_group": False,
    }


def from_json_dict(d: dict, alphabet: Alphabet) -> Union[AlgebraicSet, _WholeGroupType]:
    if d.get("whole_group"):
        return WHOLE_GROUP
    points = [parse_word(t, alphabet) for t in d.get("points", ())]
    cosets = [
        (parse_word(c["rep"], alphabet), parse_word(c["root"], alphabet))
        for c in d.get("cosets", ())
    ]
    return AlgebraicSet.of(alphabet, points, cosets)


def from_json_text(text: str, alphabet: Alphabet) -> Union[AlgebraicSet, _WholeGroupType]:
    return from_json_dict(json.loads(text), alphabet)
