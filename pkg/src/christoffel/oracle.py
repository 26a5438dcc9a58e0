"""Brute-force reference implementations for every fast path in the package.

Everything here re-derives its answer by exhaustion over residues, shifts, or
sieves, sharing no arithmetic with the closed-form routines it is used to
check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd, lcm

from .money import CoinPair
from .words import Word


@dataclass(frozen=True)
class OracleResult:
    """All shifts of the second (longer) word that separate the marked positions."""

    decision: bool
    witnesses: tuple[int, ...]
    modulus: int


def _mark_positions(w: Word, other: Word) -> list[int]:
    lw, lo = set(w.alphabet.letters), set(other.alphabet.letters)
    if len(lw) != 2 or len(lo) != 2 or len(lw & lo) != 1:
        raise ValueError(
            f"alphabets {w.alphabet.letters} and {other.alphabet.letters} must share exactly the filler"
        )
    mark = (lw - lo).pop()
    return [i for i, c in enumerate(w.symbols) if c == mark]


def _replicated_mask(positions: list[int], period: int, length: int) -> int:
    base = 0
    for pos in positions:
        base |= 1 << pos
    mask = 0
    for t in range(length // period):
        mask |= base << (t * period)
    return mask


def oracle_superimposable(u: Word, v: Word) -> OracleResult:
    """Try every shift of the longer word and test residue disjointness directly.

    The operands are ordered so the shifted word is the longer one; each
    candidate shift k is checked by intersecting the two periodic position
    sets on the residues modulo lcm(len(u), len(v)).
    """
    if len(u) == 0 or len(v) == 0:
        raise ValueError("superimposition needs nonempty words")
    pos_u = _mark_positions(u, v)
    pos_v = _mark_positions(v, u)
    n, m = len(u), len(v)
    if n > m:
        pos_u, pos_v = pos_v, pos_u
        n, m = m, n
    period = lcm(n, m)
    fixed = _replicated_mask(pos_u, n, period)
    moving = _replicated_mask(pos_v, m, period)
    full = (1 << period) - 1
    witnesses = []
    for k in range(m):
        rotated = ((moving >> k) | (moving << (period - k))) & full
        if rotated & fixed == 0:
            witnesses.append(k)
    return OracleResult(bool(witnesses), tuple(witnesses), m)


def oracle_frobenius(coins: CoinPair) -> tuple[int, int]:
    """Sieve the payable amounts up to a*b; report the largest gap and the gap count."""
    if coins.a < 2 or coins.b < 2:
        raise ValueError("both denominations must be at least 2")
    limit = coins.a * coins.b
    payable = [False] * (limit + 1)
    payable[0] = True
    for coin in (coins.a, coins.b):
        for amount in range(coin, limit + 1):
            if payable[amount - coin]:
                payable[amount] = True
    gaps = [amount for amount, ok in enumerate(payable) if not ok]
    return max(gaps), len(gaps)


@dataclass(frozen=True)
class BeattyOracleResult:
    """Outcome of the offset grid search, with one witness pair when found."""

    disjoint_possible: bool
    offsets: tuple[Fraction, Fraction] | None


def oracle_beatty_disjoint(p1: int, q1: int, p2: int, q2: int,
                           grid_denominator: int) -> BeattyOracleResult:
    """Search rational offsets making the two Beatty sequences disjoint.

    The first offset ranges over [0, 1) and the second over [0, p2) in steps
    of 1/grid_denominator; each candidate pair is tested exactly over one
    common period.  Because the sequences only change when an offset crosses
    a multiple of 1/q_i, any grid with grid_denominator >= max(q1, q2) is
    exhaustive.  Shifting both offsets by the same integer and either offset
    by its own period leaves disjointness unchanged, which justifies the
    ranges.
    """
    if min(p1, q1, p2, q2, grid_denominator) < 1:
        raise ValueError("all parameters must be positive")
    period = lcm(p1, p2)
    d = grid_denominator

    def residues(p, q, offset):
        slope = Fraction(p, q)
        return frozenset(floor(slope * i + offset) % period for i in range(q * (period // p)))

    first = [(Fraction(t, d), residues(p1, q1, Fraction(t, d))) for t in range(d)]
    second = [(Fraction(t, d), residues(p2, q2, Fraction(t, d))) for t in range(d * p2)]
    for off1, res1 in first:
        for off2, res2 in second:
            if not (res1 & res2):
                return BeattyOracleResult(True, (off1, off2))
    return BeattyOracleResult(False, None)
