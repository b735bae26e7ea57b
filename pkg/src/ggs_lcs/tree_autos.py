"""Automorphisms of the p-adic tree truncated at depth n, stored as portraits.

A portrait carries one label in F_p per internal vertex; label c at v means
the automorphism acts as sigma^c = (1 2 ... p)^c on the children of v.
Vertices of level k are indexed 0..p^k-1 in lexicographic order of their
words, so the children of vertex q are q*p + 0, ..., q*p + (p-1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .perm_core import Permutation
from .perm_core.treeshape import tree_shape


@dataclass(frozen=True)
class Portrait:
    p: int
    depth: int
    labels: tuple  # labels[k] is a tuple of p**k residues mod p

    def __post_init__(self):
        if len(self.labels) != self.depth:
            raise ValueError(f"expected {self.depth} levels of labels, got {len(self.labels)}")
        for k, row in enumerate(self.labels):
            if len(row) != self.p**k:
                raise ValueError(f"level {k} needs {self.p ** k} labels, got {len(row)}")
            if any(not 0 <= c < self.p for c in row):
                raise ValueError(f"labels must be residues mod {self.p}")

    @classmethod
    def identity(cls, p: int, depth: int) -> "Portrait":
        return cls(p, depth, tuple((0,) * p**k for k in range(depth)))

    @classmethod
    def from_mapping(cls, p: int, depth: int, mapping: dict) -> "Portrait":
        """Build from ``{word: label}`` with 1-indexed words; missing vertices get 0."""
        rows = [[0] * p**k for k in range(depth)]
        for word, c in mapping.items():
            if len(word) >= depth:
                raise ValueError(f"{word} is not an internal vertex at depth {depth}")
            rows[len(word)][_word_index(p, word)] = c % p
        return cls(p, depth, tuple(map(tuple, rows)))

    def label(self, word) -> int:
        """Label at the vertex with the given 1-indexed word."""
        return self.labels[len(word)][_word_index(self.p, word)]

    def as_mapping(self) -> dict:
        return {
            _index_word(self.p, k, q): c
            for k, row in enumerate(self.labels)
            for q, c in enumerate(row)
        }

    @property
    def root_label(self) -> int:
        return self.labels[0][0] if self.depth else 0

    def is_identity(self) -> bool:
        return not any(any(row) for row in self.labels)

    def stabilizes_level(self, k: int) -> bool:
        return not any(any(row) for row in self.labels[:k])

    def vertex_images(self) -> list:
        """``out[k][q]`` is the index of the image of vertex q of level k (k = 0..depth)."""
        p = self.p
        out = [[0]]
        for k in range(self.depth):
            prev, row = out[-1], self.labels[k]
            nxt = [0] * (p ** (k + 1))
            for q, w in enumerate(prev):
                c = row[q]
                for child in range(p):
                    nxt[q * p + child] = w * p + (child + c) % p
            out.append(nxt)
        return out

    def __mul__(self, other: "Portrait") -> "Portrait":
        return multiply(self, other)

    def __invert__(self) -> "Portrait":
        return inverse(self)

    def __pow__(self, e: int) -> "Portrait":
        base = self if e >= 0 else inverse(self)
        out = Portrait.identity(self.p, self.depth)
        for _ in range(abs(e)):
            out = multiply(out, base)
        return out


def _word_index(p, word):
    q = 0
    for x in word:
        if not 1 <= x <= p:
            raise ValueError(f"letter {x} outside 1..{p}")
        q = q * p + (x - 1)
    return q


def _index_word(p, level, q):
    digits = []
    for _ in range(level):
        q, r = divmod(q, p)
        digits.append(r + 1)
    return tuple(reversed(digits))


def _check_shape(x: Portrait, y: Portrait):
    if (x.p, x.depth) != (y.p, y.depth):
        raise ValueError(f"shape mismatch: (p={x.p}, n={x.depth}) vs (p={y.p}, n={y.depth})")


def multiply(x: Portrait, y: Portrait) -> Portrait:
    """Product applying x first: label_xy(v) = label_x(v) + label_y(v x)."""
    _check_shape(x, y)
    p = x.p
    moves = x.vertex_images()
    rows = tuple(
        tuple((cx + ry[w]) % p for cx, w in zip(rx, moves[k]))
        for k, (rx, ry) in enumerate(zip(x.labels, y.labels))
    )
    return Portrait(p, x.depth, rows)


def inverse(x: Portrait) -> Portrait:
    p = x.p
    moves = x.vertex_images()
    rows = []
    for k, row in enumerate(x.labels):
        out = [0] * len(row)
        for q, w in enumerate(moves[k]):
            out[w] = (-row[q]) % p
        rows.append(tuple(out))
    return Portrait(p, x.depth, tuple(rows))


def commutator(x: Portrait, y: Portrait) -> Portrait:
    """[x, y] = x^-1 y^-1 x y."""
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y))


def to_permutation(x: Portrait) -> Permutation:
    """Leaf permutation under the lexicographic leaf order."""
    if x.depth < 1:
        raise ValueError("depth-0 portraits have no leaves to permute")
    flat = [c for row in x.labels for c in row]
    return Permutation._raw(tree_shape(x.p, x.depth).images_from_labels(flat))


def from_permutation(perm: Permutation, p: int) -> Portrait:
    """Inverse of ``to_permutation``; raises if ``perm`` is not of that form."""
    from .perm_core.treeshape import prime_power_shape

    shape = prime_power_shape(perm.degree)
    if shape is None or shape[0] != p:
        raise ValueError(f"degree {perm.degree} is not a power of {p}")
    ts = tree_shape(p, shape[1])
    img = perm._img
    flat = ts.labels(img)
    if ts.images_from_labels(flat) != img:
        raise ValueError("permutation is not a tree automorphism with sigma-power labels")
    rows, pos = [], 0
    for k in range(shape[1]):
        rows.append(tuple(flat[pos : pos + p**k]))
        pos += p**k
    return Portrait(p, shape[1], tuple(rows))


def random_portrait(p: int, depth: int, rng: random.Random, stabilize: int = 0) -> Portrait:
    """Uniform random portrait, with zero labels on the first ``stabilize`` levels."""
    return Portrait(
        p,
        depth,
        tuple(
            tuple(0 if k < stabilize else rng.randrange(p) for _ in range(p**k))
            for k in range(depth)
        ),
    )


# ---------------------------------------------------------------------------
# the generators a and b


def generator_a(p: int, n: int) -> Portrait:
    """sigma at the root and trivial below."""
    if n < 1:
        raise ValueError("depth must be at least 1")
    return Portrait.from_mapping(p, n, {(): 1})


def _vector_entries(e, p=None):
    entries = getattr(e, "entries", None)
    if entries is None:
        entries = tuple(e)
    q = getattr(e, "p", None) or p or len(entries) + 1
    if len(entries) != q - 1:
        raise ValueError(f"defining vector for p={q} needs {q - 1} entries")
    return q, tuple(int(c) % q for c in entries)


def generator_b(e, n: int, p: int | None = None) -> Portrait:
    """The directed generator: section a^{e_j} at vertex j < p and b again at vertex p.

    ``e`` is a DefiningVector or a plain sequence (e_1, ..., e_{p-1}).
    """
    if n < 1:
        raise ValueError("depth must be at least 1")
    p, entries = _vector_entries(e, p)
    mapping = {}
    for k in range(n - 1):
        for j, c in enumerate(entries, start=1):
            if c:
                mapping[(p,) * k + (j,)] = c
    return Portrait.from_mapping(p, n, mapping)


# ---------------------------------------------------------------------------
# sections


@dataclass(frozen=True)
class SectionTuple:
    """psi(f) = (f|_1, ..., f|_p) sigma^root_label."""

    entries: tuple
    root_label: int

    @property
    def p(self) -> int:
        return len(self.entries)

    def is_identity(self) -> bool:
        return self.root_label == 0 and all(s.is_identity() for s in self.entries)


def section(x: Portrait, vertex: int) -> Portrait:
    """Section at the first-level vertex ``vertex`` in 1..p."""
    if x.depth < 1:
        raise ValueError("depth-0 portraits have no sections")
    p, off = x.p, vertex - 1
    rows = tuple(
        x.labels[k + 1][off * p**k : (off + 1) * p**k] for k in range(x.depth - 1)
    )
    return Portrait(p, x.depth - 1, rows)


def psi_decompose(x: Portrait) -> SectionTuple:
    return SectionTuple(tuple(section(x, v) for v in range(1, x.p + 1)), x.root_label)


def reassemble(t: SectionTuple) -> Portrait:
    """Inverse of ``psi_decompose``."""
    p = t.p
    depth = {s.depth for s in t.entries}
    if len(depth) != 1 or any(s.p != p for s in t.entries):
        raise ValueError("sections must share p and depth")
    d = depth.pop()
    rows = [(t.root_label % p,)]
    for k in range(d):
        rows.append(tuple(c for s in t.entries for c in s.labels[k]))
    return Portrait(p, d + 1, tuple(rows))


def commutator_with_a_sections(f: Portrait) -> SectionTuple:
    """Sections of [f, a] for f fixing level 1, by the closed formula.

    Entry k is f|_k^-1 f|_{k-1}, indices read cyclically so that entry 1 is
    f|_1^-1 f|_p.  The root label is 0.
    """
    if f.depth < 1 or f.root_label != 0:
        raise ValueError("f must stabilise the first level")
    secs = psi_decompose(f).entries
    p = f.p
    return SectionTuple(
        tuple(multiply(inverse(secs[k]), secs[k - 1]) for k in range(p)),
        0,
    )
