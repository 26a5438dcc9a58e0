"""Finite words over ordered alphabets: balance, conjugation, projection, decimation."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np


@dataclass(frozen=True)
class OrderedAlphabet:
    """A totally ordered alphabet of distinct single-character letters."""

    letters: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("alphabet must contain at least one letter")
        for c in self.letters:
            if not isinstance(c, str) or len(c) != 1 or not c.isprintable():
                raise ValueError(f"letter {c!r} is not a single printable character")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"alphabet letters must be distinct: {self.letters}")

    def __contains__(self, letter):
        return letter in self.letters

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def index(self, letter: str) -> int:
        if letter not in self.letters:
            raise ValueError(f"letter {letter!r} not in alphabet {self.letters}")
        return self.letters.index(letter)

    def without(self, letter: str) -> "OrderedAlphabet":
        """The alphabet with one letter removed, order preserved."""
        if letter not in self.letters:
            raise ValueError(f"letter {letter!r} not in alphabet {self.letters}")
        return OrderedAlphabet(tuple(c for c in self.letters if c != letter))


def alphabet(letters) -> OrderedAlphabet:
    """Build an OrderedAlphabet from a string or letter sequence, e.g. alphabet("ax")."""
    return OrderedAlphabet(tuple(letters))


@dataclass(frozen=True)
class Word:
    """A finite word: a string of symbols together with its ordered alphabet."""

    symbols: str
    alphabet: OrderedAlphabet

    def __post_init__(self):
        for i, c in enumerate(self.symbols):
            if c not in self.alphabet:
                raise ValueError(
                    f"symbol {c!r} at index {i} is not in alphabet {self.alphabet.letters}"
                )

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self):
        return self.symbols


def make_word(symbols, alpha: OrderedAlphabet) -> Word:
    """Build a word over the given alphabet, rejecting foreign symbols."""
    if not isinstance(symbols, str):
        symbols = "".join(symbols)
    return Word(symbols, alpha)


def count_letter(w: Word, letter: str) -> int:
    """Number of occurrences of `letter` in `w`."""
    if letter not in w.alphabet:
        raise ValueError(f"letter {letter!r} not in alphabet {w.alphabet.letters}")
    return w.symbols.count(letter)


def _balanced_symbols(s: str) -> bool:
    # Every pair of equal-length factors must have letter counts within 1 of
    # each other; equivalently max-min of sliding-window counts is <= 1 for
    # every window length and letter.
    n = len(s)
    if n < 2:
        return True
    codes = np.frombuffer(s.encode("utf-32-le"), dtype=np.uint32)
    for letter in np.unique(codes):
        occ = np.concatenate(([0], np.cumsum(codes == letter)))
        for width in range(1, n):
            windows = occ[width:] - occ[:-width]
            if int(windows.max()) - int(windows.min()) > 1:
                return False
    return True


def is_balanced(w: Word) -> bool:
    """True iff all equal-length factors of `w` have letter counts within 1."""
    return _balanced_symbols(w.symbols)


def is_circularly_balanced(w: Word) -> bool:
    """True iff ww is balanced, i.e. `w` is balanced read cyclically."""
    return _balanced_symbols(w.symbols + w.symbols)


def reverse(w: Word) -> Word:
    """The mirror image of `w`, over the same alphabet."""
    return Word(w.symbols[::-1], w.alphabet)


def conjugate(w: Word, k: int) -> Word:
    """The k-th conjugate of `w`: rotate the first k letters to the end.

    k is taken modulo len(w); negative k rotates the other way.
    """
    n = len(w)
    if n == 0:
        if k != 0:
            raise ValueError("cannot rotate the empty word by a nonzero amount")
        return w
    k %= n
    return Word(w.symbols[k:] + w.symbols[:k], w.alphabet)


def is_primitive(w: Word) -> bool:
    """True iff `w` is not a power of a strictly shorter word."""
    n = len(w)
    if n == 0:
        raise ValueError("primitivity is undefined for the empty word")
    for d in range(1, n):
        if n % d == 0 and w.symbols[:d] * (n // d) == w.symbols:
            return False
    return True


def projection(w: Word, letter: str, filler: str) -> Word:
    """Keep `letter` where it occurs and replace every other symbol by `filler`.

    The result is a word over the two-letter alphabet (letter, filler).
    """
    if letter not in w.alphabet:
        raise ValueError(f"letter {letter!r} not in alphabet {w.alphabet.letters}")
    if filler in w.alphabet:
        raise ValueError(f"filler {filler!r} collides with the alphabet {w.alphabet.letters}")
    out = "".join(c if c == letter else filler for c in w.symbols)
    return Word(out, OrderedAlphabet((letter, filler)))


class Direction(Enum):
    LEFT_TO_RIGHT = "left-to-right"
    RIGHT_TO_LEFT = "right-to-left"


@dataclass(frozen=True)
class DecimationSpec:
    """Remove p occurrences out of every q of `letter`, scanning in `direction`."""

    p: int
    q: int
    direction: Direction
    letter: str = field(default="a")

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("block size q must be positive")
        if not 0 <= self.p <= self.q:
            raise ValueError(f"need 0 <= p <= q, got p={self.p}, q={self.q}")


def decimate(w: Word, spec: DecimationSpec) -> Word:
    """Delete target-letter occurrences blockwise.

    With the occurrences of the target letter numbered 1..N, block l
    (l = 0..N//q) marks occurrences l*q+1 .. l*q+p for deletion when scanning
    left to right, and N-l*q .. N-l*q-p+1 when scanning right to left.
    Occurrence numbers falling outside 1..N are skipped; other letters are
    never touched.
    """
    if spec.letter not in w.alphabet:
        raise ValueError(f"letter {spec.letter!r} not in alphabet {w.alphabet.letters}")
    occurrences = [i for i, c in enumerate(w.symbols) if c == spec.letter]
    n_occ = len(occurrences)
    doomed = set()
    for block in range(n_occ // spec.q + 1):
        for offset in range(spec.p):
            if spec.direction is Direction.LEFT_TO_RIGHT:
                j = block * spec.q + 1 + offset
            else:
                j = n_occ - block * spec.q - offset
            if 1 <= j <= n_occ:
                doomed.add(occurrences[j - 1])
    kept = "".join(c for i, c in enumerate(w.symbols) if i not in doomed)
    return Word(kept, w.alphabet)
