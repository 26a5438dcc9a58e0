"""Fraenkel words, rational Beatty sequences, and the disjointness criterion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from .christoffel import modular_inverse
from .words import OrderedAlphabet, Word

# Letter for recursion index i; indices past 9 continue through the uppercase
# alphabet so every letter stays a single character.
_INDEX_LETTERS = "123456789ABCDEFGHIJK"
MAX_FRAENKEL_INDEX = len(_INDEX_LETTERS)


def fraenkel_word(k: int) -> Word:
    """The k-th Fraenkel word: F_1 = 1 and F_k = F_{k-1} k F_{k-1}.

    Length 2**k - 1, with letter i occurring 2**(k-i) times.  k is capped at
    20 to keep the doubling recursion bounded.
    """
    if not 1 <= k <= MAX_FRAENKEL_INDEX:
        raise ValueError(f"index must lie in [1, {MAX_FRAENKEL_INDEX}], got {k}")
    word = _INDEX_LETTERS[0]
    for i in range(1, k):
        word = word + _INDEX_LETTERS[i] + word
    return Word(word, OrderedAlphabet(tuple(_INDEX_LETTERS[:k])))


def letter_frequencies(w: Word) -> dict[str, int]:
    """Occurrence count of every alphabet letter, including absent ones."""
    return {c: w.symbols.count(c) for c in w.alphabet.letters}


@dataclass(frozen=True)
class BeattySpec:
    """A rational Beatty sequence floor(slope*i + offset), slope = numerator/denominator."""

    numerator: int
    denominator: int
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be positive")
        object.__setattr__(self, "offset", Fraction(self.offset))

    @property
    def slope(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def beatty_slice(spec: BeattySpec, lo: int, hi: int) -> list[int]:
    """The terms floor(slope*i + offset) for i = lo..hi, in exact arithmetic."""
    if lo > hi:
        raise ValueError(f"empty index range: {lo} > {hi}")
    slope = Fraction(spec.numerator, spec.denominator)
    return [floor(slope * i + spec.offset) for i in range(lo, hi + 1)]


def beatty_disjoint_exists(p1: int, q1: int, p2: int, q2: int) -> bool:
    """Whether offsets exist making the Beatty sequences of slopes p1/q1, p2/q2 disjoint.

    Each slope is first reduced to lowest terms; the sequence floor(p*i/q + b)
    only depends on the reduced fraction, and the criterion below is false
    without that normalisation.  With p = gcd(p1, p2), q = gcd(q1, q2),
    u1 = q1/q and u2 = q2/q taken from the reduced slopes, disjoint offsets
    exist exactly when x*u1 + y*u2 = p - 2*u1*u2*(q-1) has a positive
    solution.  u1 and u2 are always coprime.
    """
    if min(p1, q1, p2, q2) < 1:
        raise ValueError("slope parameters must be positive")
    g1, g2 = gcd(p1, q1), gcd(p2, q2)
    p1, q1, p2, q2 = p1 // g1, q1 // g1, p2 // g2, q2 // g2
    p = gcd(p1, p2)
    q = gcd(q1, q2)
    u1, u2 = q1 // q, q2 // q
    rhs = p - 2 * u1 * u2 * (q - 1)
    y = (rhs * modular_inverse(u2, u1)) % u1 if u1 > 1 else 0
    if y == 0:
        y = u1
    x = (rhs - y * u2) // u1
    return x >= 1
