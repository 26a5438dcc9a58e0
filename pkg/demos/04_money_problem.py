"""The two-coin money problem drawn on a quadrant of values.

Run:  python demos/04_money_problem.py
"""

from christoffel import (
    CoinPair,
    boundary_word,
    frobenius_number,
    nonrepresentable_count,
    oracle_frobenius,
    representable,
    shifted_cayley,
)

coins = CoinPair(8, 5)
g = frobenius_number(coins)
print(f"coins 8 and 5: largest unpayable amount g = {g}")
print(f"unpayable amounts in total: {nonrepresentable_count(coins)}")
print(f"sieve agrees: {oracle_frobenius(coins)}")

unpayable = [v for v in range(g + 1) if not representable(coins, v)]
print(f"they are: {unpayable}")

# Fill the quadrant with the values 5x + 8y and keep the cells below 40.
# The staircase edge of that region, read from the bottom-left corner,
# spells the Christoffel word with 8 low letters and 5 high ones.
walk = boundary_word(coins)
print(f"\nboundary word: {walk.word}")

width = max(x for x, _ in walk.cells) + 1
height = -min(y for _, y in walk.cells) + 1
print("retained cell values (origin top-left, moving down adds 8):")
for y in range(height):
    row = [walk.cells.get((x, -y)) for x in range(width)]
    print("  " + " ".join(f"{v:3d}" if v is not None else "  ." for v in row))

# Walking the boundary visits the Cayley graph of that word, every vertex
# shifted up by g: the walk starts and ends at the Frobenius number itself.
print("\nboundary values:", " -> ".join(str(v) for v in shifted_cayley(coins)))
