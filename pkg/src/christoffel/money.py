"""The two-coin money problem, solved geometrically with Christoffel words."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .christoffel import ChristoffelSpec, cayley_graph
from .words import Word


@dataclass(frozen=True)
class CoinPair:
    """Two coprime coin denominations."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("denominations must be positive")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"denominations must be coprime, got {self.a}, {self.b}")


def frobenius_number(coins: CoinPair) -> int:
    """Largest amount not payable with the two coins: (a-1)(b-1) - 1.

    With a unit coin every amount is payable; that degenerate case returns -1.
    """
    if coins.a == 1 or coins.b == 1:
        return -1
    return (coins.a - 1) * (coins.b - 1) - 1


def nonrepresentable_count(coins: CoinPair) -> int:
    """How many amounts can never be paid: (a-1)(b-1) / 2."""
    return (coins.a - 1) * (coins.b - 1) // 2


def representable(coins: CoinPair, amount: int) -> bool:
    """True iff amount = a*x + b*y for some nonnegative x, y."""
    if amount < 0:
        raise ValueError("amounts are nonnegative")
    return any((amount - coins.a * x) % coins.b == 0 for x in range(amount // coins.a + 1))


@dataclass(frozen=True)
class QuadrantBoundary:
    """Staircase boundary of the quadrant cells whose value x*b + y*a stays below a*b.

    `word` codes the walk (right moves then up moves as its two letters),
    `values` lists the walked values starting and ending at a*b - a - b, and
    `cells` maps each retained coordinate (x, -y) to its value.
    """

    word: Word
    values: tuple[int, ...]
    cells: dict[tuple[int, int], int]


def boundary_word(coins: CoinPair, low: str = "α", high: str = "β") -> QuadrantBoundary:
    """Walk the lower-right boundary of the cells with value below a*b.

    Start from the value a*b - a - b; move right (+b, the low letter) while
    that stays under a*b, otherwise move up (-a, the high letter).  The walk
    spells C(a+b, a) and its values retrace the Cayley graph shifted by
    a*b - a - b.
    """
    a, b = coins.a, coins.b
    limit = a * b
    value = limit - a - b
    values = [value]
    letters = []
    for _ in range(a + b):
        if value + b < limit:
            letters.append(low)
            value += b
        else:
            letters.append(high)
            value -= a
        values.append(value)
    word = Word("".join(letters), ChristoffelSpec(a + b, a, low, high).alphabet)
    cells = {
        (x, -y): x * b + y * a
        for x in range(a)
        for y in range(b)
        if x * b + y * a < limit
    }
    return QuadrantBoundary(word, tuple(values), cells)


def shifted_cayley(coins: CoinPair) -> tuple[int, ...]:
    """Cayley traversal of C(a+b, a) with every vertex raised by a*b - a - b.

    The first and last entries both equal the Frobenius number a*b - a - b.
    """
    if coins.a < 2 or coins.b < 2:
        raise ValueError("both denominations must be at least 2")
    a, b = coins.a, coins.b
    shift = a * b - a - b
    graph = cayley_graph(ChristoffelSpec(a + b, a))
    return tuple(v + shift for v in graph.traversal)
