"""Shared helpers: independent brute-force reference checks used across the suite."""

from itertools import product

from hypothesis import settings

from christoffel import ChristoffelSpec, christoffel_word

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


def cw(n, alpha, low="a", high="x"):
    return christoffel_word(ChristoffelSpec(n, alpha, low, high))


def scan_positions(word, letter):
    """Letter positions read off the word symbols directly."""
    return {i for i, c in enumerate(word.symbols) if c == letter}


def brute_balanced(s):
    """Balance by literal comparison of every pair of equal-length factors."""
    n = len(s)
    for width in range(1, n + 1):
        factors = [s[i:i + width] for i in range(n - width + 1)]
        for letter in set(s):
            counts = [f.count(letter) for f in factors]
            if max(counts) - min(counts) > 1:
                return False
    return True


def brute_circularly_balanced(s):
    return brute_balanced(s + s)


def balanced_words(letters, max_len):
    """All balanced words up to max_len, grown by DFS.

    A factor of a balanced word is balanced, so unbalanced prefixes prune.
    """
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        new = []
        for w in frontier:
            for c in letters:
                cand = w + c
                if brute_balanced(cand):
                    new.append(cand)
        frontier = new
        out.extend(new)
    return out


def words_upto(letters, max_len):
    for length in range(max_len + 1):
        for tup in product(letters, repeat=length):
            yield "".join(tup)
