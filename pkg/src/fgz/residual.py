"""Finite separation witnesses: map a nontrivial word to a symmetric group.

The word's prefixes become states 0..L; each letter contributes the
partial injection that advances the state along its occurrences, and the
partial maps complete to permutations.  The resulting homomorphism moves
state 0 to L on the input word, so the image of the word is not the
identity: every nontrivial element is separated from the identity in a
finite quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphabetError, IdentityWordError
from .words import Alphabet, Word


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0..n-1}; ``images[i]`` is the image of i.

    Products compose left to right: ``(p * q)(i) == q(p(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[v] for v in self.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for i, v in enumerate(self.images):
            out[v] = i
        return Permutation(tuple(out))

    def cycle_notation(self) -> str:
        seen = set()
        cycles = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                seen.add(start)
                continue
            cycle = [start]
            seen.add(start)
            i = self.images[start]
            while i != start:
                cycle.append(i)
                seen.add(i)
                i = self.images[i]
            cycles.append("(" + " ".join(str(c) for c in cycle) + ")")
        return "".join(cycles) or "()"

    def __repr__(self) -> str:
        return f"<Permutation {self.cycle_notation()}>"


@dataclass(frozen=True)
class PermRep:
    """One permutation per alphabet letter; extends freely to all words."""

    alphabet: Alphabet
    degree: int
    letter_images: tuple[Permutation, ...]

    def image_of_letter(self, name: str) -> Permutation:
        return self.letter_images[self.alphabet.index(name)]


def apply_perm_rep(rep: PermRep, w: Word) -> Permutation:
    """Image of a word: the product of letter images in reading order."""
    if w.alphabet != rep.alphabet:
        raise AlphabetError("word is not over the representation's alphabet")
    result = Permutation.identity(rep.degree)
    for v in w.data:
        p = rep.letter_images[abs(v) - 1]
        result = result * (p if v > 0 else p.inverse())
    return result


def separate(g: Word) -> PermRep:
    """A permutation representation of degree |g| + 1 not killing g.

    States are the prefixes of g.  Letter maps send state i to i + 1 when
    the (i+1)-th signed letter is the letter itself, and i + 1 to i when
    it is the inverse; unmatched states pair up in increasing order.
    Because g is reduced the partial maps are injections, which is
    asserted at runtime.
    """
    if g.is_identity:
        raise IdentityWordError("cannot separate the identity from itself")
    degree = len(g) + 1
    partial: list[dict[int, int]] = [{} for _ in g.alphabet.names]
    for pos, v in enumerate(g.data):
        src, dst = (pos, pos + 1) if v > 0 else (pos + 1, pos)
        m = partial[abs(v) - 1]
        assert src not in m, "prefix-path map got two images for one state"
        assert dst not in m.values(), "prefix-path map got two sources for one state"
        m[src] = dst
    perms = []
    for m in partial:
        free_sources = [i for i in range(degree) if i not in m]
        used_targets = set(m.values())
        free_targets = [i for i in range(degree) if i not in used_targets]
        for s, d in zip(free_sources, free_targets):
            m[s] = d
        perms.append(Permutation(tuple(m[i] for i in range(degree))))
    rep = PermRep(g.alphabet, degree, tuple(perms))
    image = apply_perm_rep(rep, g)
    assert image(0) == len(g), "prefix path must lead from state 0 to state L"
    return rep
