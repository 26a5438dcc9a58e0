"""Three roads to the same Christoffel word: arithmetic, graph walk, lattice path.

Run:  python demos/02_building_christoffel_words.py
"""

from christoffel import (
    ChristoffelSpec,
    Step,
    cayley_graph,
    christoffel_path,
    christoffel_word,
    letter_positions,
    modular_complement,
)

spec = ChristoffelSpec(8, 5)

# Road 1: the defining arithmetic.  Letter i is low when stepping by
# beta = n - alpha advances modulo n without wrapping.
word = christoffel_word(spec)
print(f"C(8,5) = {word}")

# The low letter lands exactly on the multiples of the modular complement
# of alpha (the residue r with alpha * r = -1 mod n).
abar = modular_complement(spec.alpha, spec.n)
print(f"complement of 5 mod 8: {abar}")
print(f"positions of 'a':      {tuple(letter_positions(spec))}")

# Road 2: walk the Cayley graph of the cyclic group, stepping by beta and
# labelling each edge by whether it ascends (low) or wraps (high).
graph = cayley_graph(spec)
print("\nCayley walk:", " -> ".join(str(v) for v in graph.traversal))
print("edge labels:", graph.labels)

# Road 3: the staircase path hugging the segment from (0,0) to (5,3) from
# below.  Rights spell the low letter, ups the high one.
path = christoffel_path(5, 3)
print("\nlattice path:", "".join(s.value for s in path.steps), "->", path.encode("a", "x"))

rows = []
x = y = 0
cells = {(0, 0)}
for step in path.steps:
    x, y = (x + 1, y) if step is Step.RIGHT else (x, y + 1)
    cells.add((x, y))
for row in range(3, -1, -1):
    rows.append("".join("#" if (col, row) in cells else "." for col in range(6)))
print("\n".join(rows))

# Powers: when the letter counts share a factor, the construction simply
# repeats the primitive word.
print("\nC(12,9) =", christoffel_word(ChristoffelSpec(12, 9)), "  (= C(4,3) cubed)")
