from math import gcd

import pytest

from christoffel import (
    ChristoffelSpec,
    Step,
    cayley_graph,
    christoffel_path,
    christoffel_word,
    conjugate,
    is_circularly_balanced,
    is_primitive,
    letter_positions,
    modular_complement,
    reverse,
)

from conftest import cw, scan_positions


def test_modular_complement_examples():
    assert modular_complement(5, 8) == 3
    assert modular_complement(3, 13) == 4
    for n in range(2, 30):
        assert modular_complement(1, n) == n - 1


def test_modular_complement_matches_scan():
    for n in range(2, 61):
        for alpha in range(1, n):
            if gcd(alpha, n) != 1:
                continue
            brute = next(r for r in range(n) if (alpha * r) % n == n - 1)
            assert modular_complement(alpha, n) == brute


def test_modular_complement_errors():
    with pytest.raises(ValueError):
        modular_complement(2, 4)
    with pytest.raises(ValueError):
        modular_complement(1, 1)


def test_spec_validation():
    with pytest.raises(ValueError):
        ChristoffelSpec(8, 0)
    with pytest.raises(ValueError):
        ChristoffelSpec(8, 9)
    with pytest.raises(ValueError):
        ChristoffelSpec(8, 3, "a", "a")


def test_christoffel_word_examples():
    assert cw(8, 5).symbols == "aaxaaxax"
    assert cw(13, 4, "a", "z").symbols == "azzazzazzazzz"
    assert cw(4, 2).symbols == "axax"
    assert cw(5, 5).symbols == "aaaaa"
    assert cw(1, 1).symbols == "a"


def test_letter_positions_examples():
    assert tuple(letter_positions(ChristoffelSpec(8, 5))) == (0, 1, 3, 4, 6)
    assert tuple(letter_positions(ChristoffelSpec(13, 4))) == (0, 3, 6, 9)
    for n in (1, 2, 7):
        assert tuple(letter_positions(ChristoffelSpec(n, n))) == tuple(range(n))


def test_positions_match_word_scan():
    for n in range(1, 201):
        for alpha in range(1, n + 1):
            if alpha != n and gcd(alpha, n) != 1:
                continue
            word = cw(n, alpha)
            assert set(letter_positions(ChristoffelSpec(n, alpha))) == scan_positions(word, "a"), (n, alpha)


def test_positions_match_word_scan_for_powers():
    for n in range(2, 121):
        for alpha in range(1, n):
            if gcd(alpha, n) == 1:
                continue
            word = cw(n, alpha)
            assert set(letter_positions(ChristoffelSpec(n, alpha))) == scan_positions(word, "a"), (n, alpha)


def test_reversal_identity():
    # Reversal swaps the letter order: the mirror of C(n, alpha) over (a < x)
    # spells C(n, n - alpha) over (x < a).
    for n in range(2, 201):
        for alpha in range(1, n):
            mirrored = reverse(cw(n, alpha))
            assert mirrored.symbols == cw(n, n - alpha, "x", "a").symbols, (n, alpha)


def test_conjugation_identity():
    # C(n, alpha) equals its own reversal rotated by the modular complement.
    for n in range(2, 201):
        for alpha in range(1, n):
            if gcd(alpha, n) != 1:
                continue
            word = cw(n, alpha)
            abar = modular_complement(alpha, n)
            assert conjugate(reverse(word), abar) == word, (n, alpha)


def test_primitive_balanced_lexmin():
    for n in range(1, 49):
        for alpha in range(1, n + 1):
            if gcd(alpha, n) != 1:
                continue
            word = cw(n, alpha)
            assert is_primitive(word)
            assert is_circularly_balanced(word)
            rotations = [conjugate(word, k).symbols for k in range(n)]
            assert word.symbols == min(rotations), (n, alpha)


def test_power_decomposition():
    for n in range(1, 51):
        for alpha in range(1, n + 1):
            if gcd(alpha, n) != 1:
                continue
            for q in range(1, 200 // n + 1):
                assert cw(n * q, alpha * q).symbols == cw(n, alpha).symbols * q


def test_mirror_position_rule():
    # i holds the low letter in the mirror of C(n, alpha) exactly when some
    # multiple of n lands in (i*alpha, (i+1)*alpha].
    for n in range(2, 101):
        for alpha in range(1, n):
            if gcd(alpha, n) != 1:
                continue
            mirrored = reverse(cw(n, alpha))
            expected = {i for i in range(n) if (i + 1) * alpha // n > i * alpha // n}
            assert scan_positions(mirrored, "a") == expected, (n, alpha)


def test_position_subset_when_counts_divide():
    for n in range(1, 101):
        for alpha in range(1, n + 1):
            pos_a = scan_positions(cw(n, alpha), "a")
            for beta in range(alpha, n + 1, alpha):
                pos_b = scan_positions(cw(n, beta), "a")
                assert pos_a <= pos_b, (n, alpha, beta)


def test_cayley_graph_examples():
    g = cayley_graph(ChristoffelSpec(8, 5))
    assert g.traversal == (0, 3, 6, 1, 4, 7, 2, 5, 0)
    assert g.labels == "aaxaaxax"
    assert cayley_graph(ChristoffelSpec(13, 8)).traversal == (0, 5, 10, 2, 7, 12, 4, 9, 1, 6, 11, 3, 8, 0)
    assert cayley_graph(ChristoffelSpec(2, 1)).labels == "ax"


def test_cayley_graph_spells_word():
    for n in range(2, 101):
        for alpha in range(1, n):
            assert cayley_graph(ChristoffelSpec(n, alpha)).labels == cw(n, alpha).symbols


def test_cayley_graph_rejects_degenerate():
    with pytest.raises(ValueError):
        cayley_graph(ChristoffelSpec(5, 5))


def test_cayley_edge_structure():
    g = cayley_graph(ChristoffelSpec(8, 5))
    for src, dst, label in g.edges:
        assert dst == (src + 3) % 8
        assert label == ("a" if src < dst else "x")


def test_christoffel_path_examples():
    path = christoffel_path(5, 3)
    assert path.encode("a", "x").symbols == "aaxaaxax"
    assert path.endpoint == (5, 3)
    assert christoffel_path(1, 1).steps == (Step.RIGHT, Step.UP)
    greek = christoffel_path(8, 5).encode("α", "β")
    assert greek.symbols == "ααβααβαβααβαβ"


def test_christoffel_path_stays_below_segment():
    for a, b in [(5, 3), (8, 5), (1, 1), (7, 2), (3, 10), (12, 7)]:
        path = christoffel_path(a, b)
        x = y = 0
        for step in path.steps:
            x, y = (x + 1, y) if step is Step.RIGHT else (x, y + 1)
            assert b * x - a * y >= 0, (a, b, x, y)
        assert (x, y) == (a, b)


def test_christoffel_path_rejects_bad_slopes():
    with pytest.raises(ValueError):
        christoffel_path(6, 4)
    with pytest.raises(ValueError):
        christoffel_path(0, 3)
