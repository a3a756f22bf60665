"""Shared deterministic generators for the test suite."""

from __future__ import annotations

import random

from fgz.words import Alphabet, Word

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))


def random_reduced_data(rng: random.Random, rank: int, length: int) -> tuple[int, ...]:
    """A uniformly chosen reduced int-tuple of exactly the given length."""
    data: list[int] = []
    signed = [v for i in range(1, rank + 1) for v in (i, -i)]
    for _ in range(length):
        choices = [v for v in signed if not data or v != -data[-1]]
        data.append(rng.choice(choices))
    return tuple(data)


def random_word(rng: random.Random, alphabet: Alphabet, max_len: int, min_len: int = 0) -> Word:
    n = rng.randint(min_len, max_len)
    return Word(alphabet, random_reduced_data(rng, len(alphabet), n))


def random_unreduced_letters(rng: random.Random, alphabet: Alphabet, length: int):
    """A raw (name, sign) sequence, cancellations allowed."""
    out = []
    for _ in range(length):
        out.append((rng.choice(alphabet.names), rng.choice((1, -1))))
    return out


def brute_reduce(alphabet: Alphabet, letters) -> Word:
    """Reduction oracle: cancel one adjacent inverse pair at a time, at a
    position chosen by scanning from a random offset, until none remain."""
    rng = random.Random(len(letters) * 7919 + 13)
    seq = [alphabet.value(n, s) for n, s in letters]
    while True:
        pairs = [i for i in range(len(seq) - 1) if seq[i] == -seq[i + 1]]
        if not pairs:
            return Word(alphabet, tuple(seq))
        i = rng.choice(pairs)
        del seq[i : i + 2]
