"""Christoffel words and their powers: construction, position sets, Cayley graphs, lattice paths."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .words import OrderedAlphabet, Word


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, s, t) with a*s + b*t == g == gcd(a, b)."""
    s, old_s = 0, 1
    t, old_t = 1, 0
    r, old_r = b, a
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    return old_r, old_s, old_t


def modular_inverse(a: int, n: int) -> int:
    """The inverse of a modulo n, for coprime inputs."""
    g, s, _ = _xgcd(a % n, n)
    if g != 1:
        raise ValueError(f"{a} has no inverse modulo {n} (gcd {g})")
    return s % n


def modular_complement(alpha: int, n: int) -> int:
    """The unique residue r in [0, n) with alpha*r = -1 (mod n)."""
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    r = (-modular_inverse(alpha, n)) % n
    assert (alpha * r) % n == n - 1
    return r


@dataclass(frozen=True)
class ChristoffelSpec:
    """Identifies C(n, alpha): length n with alpha occurrences of the low letter.

    When gcd(n, alpha) = r > 1 this is the r-th power of the primitive word
    C(n/r, alpha/r).  alpha = n is admitted as the degenerate word low**n.
    """

    n: int
    alpha: int
    low: str = "a"
    high: str = "x"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"length must be positive, got {self.n}")
        if not 1 <= self.alpha <= self.n:
            raise ValueError(f"need 1 <= alpha <= n, got alpha={self.alpha}, n={self.n}")
        if self.low == self.high:
            raise ValueError("low and high letters must differ")

    @property
    def beta(self) -> int:
        return self.n - self.alpha

    @property
    def alphabet(self) -> OrderedAlphabet:
        return OrderedAlphabet((self.low, self.high))


@dataclass(frozen=True)
class PositionSet:
    """A set of residues modulo `modulus`, kept sorted."""

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(sorted(self.residues)))
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if len(set(self.residues)) != len(self.residues):
            raise ValueError("residues must be distinct")
        if self.residues and not 0 <= self.residues[0] <= self.residues[-1] < self.modulus:
            raise ValueError(f"residues must lie in [0, {self.modulus})")

    def __contains__(self, r):
        return r % self.modulus in set(self.residues)

    def __iter__(self):
        return iter(self.residues)

    def __len__(self):
        return len(self.residues)


def christoffel_word(spec: ChristoffelSpec) -> Word:
    """The word C(n, alpha) over (low < high).

    Letter i is low exactly when (i+1)*beta advances modulo n past i*beta
    without wrapping, beta = n - alpha.  Without coprimality the same rule
    yields the power (C(n/r, alpha/r))**r.
    """
    n, alpha = spec.n, spec.alpha
    if alpha == n:
        return Word(spec.low * n, spec.alphabet)
    beta = spec.beta
    prev = 0
    out = []
    for i in range(n):
        cur = ((i + 1) * beta) % n
        out.append(spec.low if cur > prev else spec.high)
        prev = cur
    return Word("".join(out), spec.alphabet)


def letter_positions(spec: ChristoffelSpec) -> PositionSet:
    """Positions of the low letter in C(n, alpha), as residues modulo n.

    For coprime (n, alpha) these are the alpha multiples of the modular
    complement of alpha; a power with gcd r > 1 translates the primitive
    word's positions by the multiples of n/r.
    """
    n, alpha = spec.n, spec.alpha
    if alpha == n:
        return PositionSet(n, tuple(range(n)))
    r = gcd(n, alpha)
    if r == 1:
        abar = modular_complement(alpha, n)
        return PositionSet(n, tuple((k * abar) % n for k in range(alpha)))
    base = letter_positions(ChristoffelSpec(n // r, alpha // r, spec.low, spec.high))
    period = n // r
    return PositionSet(n, tuple(b + i * period for i in range(r) for b in base))


@dataclass(frozen=True)
class CayleyGraph:
    """The labelled cycle on residues mod n stepping by beta, walked from 0."""

    n: int
    edges: tuple[tuple[int, int, str], ...]

    @property
    def traversal(self) -> tuple[int, ...]:
        """Vertices in walk order, starting and ending at 0."""
        return (0,) + tuple(dst for _, dst, _ in self.edges)

    @property
    def labels(self) -> str:
        """Edge labels in walk order; they spell the Christoffel word."""
        return "".join(label for _, _, label in self.edges)


def cayley_graph(spec: ChristoffelSpec) -> CayleyGraph:
    """Walk i -> i + beta (mod n) from 0; label low when the step ascends."""
    if spec.alpha == spec.n:
        raise ValueError("Cayley graph is undefined for alpha = n (no high letter)")
    n, beta = spec.n, spec.beta
    edges = []
    v = 0
    for _ in range(n):
        u = (v + beta) % n
        edges.append((v, u, spec.low if v < u else spec.high))
        v = u
    return CayleyGraph(n, tuple(edges))


class Step(Enum):
    RIGHT = "R"
    UP = "U"


@dataclass(frozen=True)
class LatticePath:
    """A monotone lattice path of unit Right/Up steps from the origin."""

    steps: tuple[Step, ...]
    endpoint: tuple[int, int]

    def encode(self, low: str = "a", high: str = "x") -> Word:
        """Spell the path, Right as the low letter and Up as the high one."""
        return Word(
            "".join(low if s is Step.RIGHT else high for s in self.steps),
            OrderedAlphabet((low, high)),
        )


def christoffel_path(a: int, b: int) -> LatticePath:
    """The lattice path from (0,0) to (a,b) hugging the segment from below.

    Encoding Right -> low and Up -> high spells C(a+b, a).  All geometry is
    exact integer arithmetic; the cross product b*x - a*y stays in [0, a+b)
    at every vertex, which certifies that the path is weakly below the
    segment and encloses no interior lattice point.
    """
    if a < 1 or b < 1:
        raise ValueError(f"endpoint coordinates must be positive, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise ValueError(f"slope must be reduced: gcd({a}, {b}) != 1")
    word = christoffel_word(ChristoffelSpec(a + b, a))
    steps = tuple(Step.RIGHT if c == "a" else Step.UP for c in word.symbols)
    x = y = 0
    for s in steps:
        if s is Step.RIGHT:
            x += 1
        else:
            y += 1
        cross = b * x - a * y
        assert 0 <= cross < a + b
    return LatticePath(steps, (x, y))
