"""Leaf/vertex bookkeeping for permutations of the p^n leaves of the p-adic tree.

Leaves are words x_1...x_n over {1..p} in lexicographic order, so the
0-indexed leaf number is sum (x_k - 1) p^(n-k).  Internal vertices are listed
breadth first (root, then level 1 left to right, ...).  The label of a vertex
v under x is the exponent c with x acting as sigma^c on the children of v.
"""

from __future__ import annotations

from functools import lru_cache


def prime_power_shape(degree: int):
    """Return ``(p, n)`` with ``degree == p**n`` and p prime, or None."""
    if degree < 2:
        return None
    p = next(q for q in range(2, degree + 1) if degree % q == 0)
    n, rest = 0, degree
    while rest % p == 0:
        rest //= p
        n += 1
    return (p, n) if rest == 1 else None


class TreeShape:
    """Vertex tables for the tree of arity p truncated at depth n."""

    def __init__(self, p: int, n: int):
        if n < 1:
            raise ValueError("depth must be at least 1")
        self.p = p
        self.n = n
        self.degree = p**n
        self.level_start = [(p**k - 1) // (p - 1) for k in range(n + 1)]
        self.num_vertices = self.level_start[n]
        # per BFS position: level, index within level, probe leaf, digit divisor
        self.levels = []
        self.probe = []
        self.div = []
        for level in range(n):
            for idx in range(p**level):
                self.levels.append(level)
                self.probe.append(idx * p ** (n - level))
                self.div.append(p ** (n - level - 1))

    def position(self, level: int, index: int) -> int:
        return self.level_start[level] + index

    def vertex_word(self, pos: int) -> tuple:
        """1-indexed word of the vertex at BFS position ``pos``."""
        level = self.levels[pos]
        idx = pos - self.level_start[level]
        digits = []
        for _ in range(level):
            idx, r = divmod(idx, self.p)
            digits.append(r + 1)
        return tuple(reversed(digits))

    def labels(self, img: tuple) -> list:
        """Labels at every vertex, BFS order (assumes ``img`` is in Gamma)."""
        p = self.p
        return [(img[leaf] // d) % p for leaf, d in zip(self.probe, self.div)]

    def images_from_labels(self, labels) -> tuple:
        """Leaf permutation (0-indexed images) of a labelled portrait."""
        p = self.p
        img = [0]
        pos = 0
        for level in range(self.n):
            nxt = [0] * (len(img) * p)
            for q, w in enumerate(img):
                c = labels[pos + q]
                base = w * p
                for child in range(p):
                    nxt[q * p + child] = base + (child + c) % p
            pos += len(img)
            img = nxt
        return tuple(img)

    def in_gamma(self, img: tuple) -> bool:
        """Whether the leaf permutation respects the tree with sigma-power local actions."""
        return self.images_from_labels(self.labels(img)) == img


@lru_cache(maxsize=None)
def tree_shape(p: int, n: int) -> TreeShape:
    return TreeShape(p, n)
