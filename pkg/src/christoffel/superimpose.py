"""Superimposition of two Christoffel words: decision, count, and witness shifts.

Two periodic words over {mark, filler} alphabets superimpose when some cyclic
shift makes their marked-letter position sets disjoint as subsets of the
integers.  The fast paths here decide that question, count the admissible
shifts, and produce one shift that always works; the oracle module re-derives
everything by exhaustion.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .christoffel import ChristoffelSpec, christoffel_word, modular_inverse
from .words import OrderedAlphabet, Word, conjugate, reverse


@dataclass(frozen=True)
class SuperimpositionProblem:
    """The pair C(n, q*alpha) over (a < x) and C(m, q*beta) over (b < x).

    alpha and beta are the reduced marked-letter counts, q their common
    factor.  Both total counts must be coprime to their word lengths, so each
    operand is a primitive Christoffel word.
    """

    n: int
    m: int
    q: int
    alpha: int
    beta: int

    def __post_init__(self):
        for name in ("n", "m", "q", "alpha", "beta"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if gcd(self.alpha, self.beta) != 1:
            raise ValueError(f"alpha and beta must be coprime, got {self.alpha}, {self.beta}")
        if self.q * self.alpha > self.n or gcd(self.q * self.alpha, self.n) != 1:
            raise ValueError(
                f"first marked count {self.q * self.alpha} must be <= and coprime to n={self.n}"
            )
        if self.q * self.beta > self.m or gcd(self.q * self.beta, self.m) != 1:
            raise ValueError(
                f"second marked count {self.q * self.beta} must be <= and coprime to m={self.m}"
            )

    @classmethod
    def from_letter_counts(cls, n: int, a_count: int, m: int, b_count: int) -> "SuperimpositionProblem":
        """Decompose raw marked-letter counts as q*alpha, q*beta with q = gcd."""
        if a_count < 1 or b_count < 1:
            raise ValueError("marked-letter counts must be positive")
        q = gcd(a_count, b_count)
        return cls(n, m, q, a_count // q, b_count // q)

    @property
    def p(self) -> int:
        return gcd(self.n, self.m)

    def first_word(self, mark: str = "a", filler: str = "x") -> Word:
        return christoffel_word(ChristoffelSpec(self.n, self.q * self.alpha, mark, filler))

    def second_word(self, mark: str = "b", filler: str = "x") -> Word:
        return christoffel_word(ChristoffelSpec(self.m, self.q * self.beta, mark, filler))


@dataclass(frozen=True)
class BezoutSolution:
    """The solution of x*alpha + y*beta = p - 2*alpha*beta*(q-1) with 1 <= y <= alpha."""

    x: int
    y: int
    z: int


def solve_bezout(problem: SuperimpositionProblem) -> BezoutSolution:
    """Solve x*alpha + y*beta = p - 2*alpha*beta*(q-1), windowing y into [1, alpha].

    The window makes the solution unique; superimposability is then just the
    sign of x.  z = alpha - y is coprime to alpha and drives the interval
    bookkeeping of the count.
    """
    a, b, q = problem.alpha, problem.beta, problem.q
    rhs = problem.p - 2 * a * b * (q - 1)
    y = (rhs * modular_inverse(b, a)) % a if a > 1 else 0
    if y == 0:
        y = a
    x = (rhs - y * b) // a
    assert x * a + y * b == rhs
    return BezoutSolution(x, y, a - y)


def is_superimposable(problem: SuperimpositionProblem) -> bool:
    """True iff some cyclic shift separates the two marked position sets."""
    return solve_bezout(problem).x >= 1


def count_superimpositions(problem: SuperimpositionProblem) -> int:
    """Number of admissible shifts of the longer word, modulo max(n, m).

    For equal lengths this is xy when x <= beta and x*alpha + y*beta -
    alpha*beta otherwise; unequal lengths scale the gcd-length count by
    max(n, m) / gcd(n, m).  Shifts are counted on the longer operand (the
    operands are swapped internally when needed), matching the oracle.
    """
    sol = solve_bezout(problem)
    if sol.x < 1:
        return 0
    x, y, a, b = sol.x, sol.y, problem.alpha, problem.beta
    base = x * y if x <= b else x * a + y * b - a * b
    return base * (max(problem.n, problem.m) // problem.p)


def canonical_shift(problem: SuperimpositionProblem) -> tuple[int, bool]:
    """A shift that always works: rotate the reversed second word by 1 - r.

    r is the inverse of q modulo p = gcd(n, m).  Returns (shift mod m, True);
    the flag records that the shift applies to the reversed second operand.
    """
    if not is_superimposable(problem):
        raise ValueError("the two words are not superimposable; no shift exists")
    r = modular_inverse(problem.q, problem.p)
    return (1 - r) % problem.m, True


def canonical_shift_lifts(problem: SuperimpositionProblem) -> tuple[int, ...]:
    """All m/p shifts of the reversed second word obtained by stepping the canonical one by p."""
    shift, _ = canonical_shift(problem)
    p, m = problem.p, problem.m
    return tuple((shift + i * p) % m for i in range(m // p))


def interval_offset(r: int, sol: BezoutSolution, q: int, alpha: int, beta: int) -> int:
    """Offset of the r-th difference interval: r*(x + (2q-1)*beta) - floor(z*r/alpha)*beta."""
    if not 0 <= r < alpha:
        raise ValueError(f"interval index must lie in [0, {alpha}), got {r}")
    return r * (sol.x + (2 * q - 1) * beta) - (sol.z * r // alpha) * beta


@dataclass(frozen=True)
class IntervalFamily:
    """Diagnostic view of the count: per-index offsets and the shifted intervals.

    Interval r is [-(q-1)*beta, q*beta - 1] translated left by offsets[r];
    shifts avoiding every interval modulo n are exactly the admissible ones.
    """

    offsets: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...]


def interval_family(problem: SuperimpositionProblem) -> IntervalFamily:
    """The family of blocked-shift intervals underlying the count, at length p."""
    sol = solve_bezout(problem)
    q, a, b = problem.q, problem.alpha, problem.beta
    offsets = tuple(interval_offset(r, sol, q, a, b) for r in range(a))
    intervals = tuple((-(q - 1) * b - off, q * b - 1 - off) for off in offsets)
    return IntervalFamily(offsets, intervals)


@dataclass(frozen=True)
class SuperimpositionReport:
    """Decision, Bezout pair, shift count, and canonical witness for one problem."""

    superimposable: bool
    bezout: BezoutSolution
    count: int
    canonical_shift: int | None
    reversed_form: bool


def analyze(problem: SuperimpositionProblem) -> SuperimpositionReport:
    """Run the full fast path: decision, count, and canonical witness shift."""
    sol = solve_bezout(problem)
    ok = sol.x >= 1
    shift = canonical_shift(problem)[0] if ok else None
    return SuperimpositionReport(
        superimposable=ok,
        bezout=sol,
        count=count_superimpositions(problem),
        canonical_shift=shift,
        reversed_form=ok,
    )


def _marked_letters(u: Word, v: Word) -> tuple[str, str, str]:
    """Resolve (mark of u, mark of v, shared filler) from two binary alphabets."""
    lu, lv = set(u.alphabet.letters), set(v.alphabet.letters)
    if len(lu) != 2 or len(lv) != 2:
        raise ValueError("both words must use two-letter alphabets")
    common = lu & lv
    if len(common) != 1:
        raise ValueError(
            f"alphabets {u.alphabet.letters} and {v.alphabet.letters} must share exactly the filler"
        )
    filler = common.pop()
    return (lu - {filler}).pop(), (lv - {filler}).pop(), filler


def perfectly_superimposable(u: Word, v: Word) -> bool:
    """True iff the marked positions of u and v are disjoint as periodic sets.

    The words repeat with their own lengths as periods; disjointness is
    decided on the residues modulo lcm(len(u), len(v)).
    """
    if len(u) == 0 or len(v) == 0:
        raise ValueError("superimposition needs nonempty words")
    mark_u, mark_v, _ = _marked_letters(u, v)
    n, m = len(u), len(v)
    period = lcm(n, m)
    res_u = {i + n * t for i, c in enumerate(u.symbols) if c == mark_u for t in range(period // n)}
    res_v = {i + m * t for i, c in enumerate(v.symbols) if c == mark_v for t in range(period // m)}
    return not (res_u & res_v)


def merge_superimposition(u: Word, v: Word) -> Word:
    """Overlay two perfectly superimposable equal-length words into one.

    Position i carries u's mark if u has it there, v's mark if v does, and
    the shared filler otherwise.
    """
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    mark_u, mark_v, filler = _marked_letters(u, v)
    out = []
    for i in range(len(u)):
        if u.symbols[i] == mark_u:
            if v.symbols[i] == mark_v:
                raise ValueError(f"marked letters collide at position {i}")
            out.append(mark_u)
        elif v.symbols[i] == mark_v:
            out.append(mark_v)
        else:
            out.append(filler)
    return Word("".join(out), OrderedAlphabet((mark_u, mark_v, filler)))


def collapse_merge(w: Word, filler: str) -> Word:
    """Delete every filler occurrence; the alphabet drops the filler too."""
    if filler not in w.alphabet:
        raise ValueError(f"filler {filler!r} not in alphabet {w.alphabet.letters}")
    return Word(w.symbols.replace(filler, ""), w.alphabet.without(filler))


def reversal_superimposition_criterion(n: int, alpha: int, beta: int) -> bool:
    """Whether C(n, alpha) and the reversal of C(n, beta) are perfectly superimposable.

    Equivalent to the existence of positive integers x, y with
    alpha*x + beta*y = n.  Requires alpha and beta coprime.
    """
    if n < 1:
        raise ValueError("length must be positive")
    if not (1 <= alpha <= n and 1 <= beta <= n):
        raise ValueError("marked counts must lie in [1, n]")
    if gcd(alpha, beta) != 1:
        raise ValueError(f"alpha and beta must be coprime, got {alpha}, {beta}")
    y = (n * modular_inverse(beta, alpha)) % alpha if alpha > 1 else 0
    if y == 0:
        y = alpha
    x = (n - y * beta) // alpha
    return x >= 1


def canonical_witness(problem: SuperimpositionProblem, mark_u: str = "a", mark_v: str = "b",
                      filler: str = "x") -> tuple[Word, Word]:
    """The concrete pair (first word, rotated reversal of second) that overlays cleanly."""
    shift, _ = canonical_shift(problem)
    u = problem.first_word(mark_u, filler)
    v = problem.second_word(mark_v, filler)
    return u, conjugate(reverse(v), shift)
