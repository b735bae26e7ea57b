"""Permutations of {1..d} acting on the right.

The product ``x * y`` applies ``x`` first and then ``y``, so that
``(k)(x * y) == y(x(k))``.  Commutators follow ``[x, y] = x^-1 y^-1 x y``.
Internally the images are stored 0-indexed; the public surface is 1-indexed.
"""

from __future__ import annotations

from operator import itemgetter


def _compose(x: tuple, y: tuple) -> tuple:
    # x then y, both 0-indexed image tuples of equal length
    if len(x) == 1:
        return (y[x[0]],)
    return itemgetter(*x)(y)


def _invert(x: tuple) -> tuple:
    inv = [0] * len(x)
    for k, v in enumerate(x):
        inv[v] = k
    return tuple(inv)


def _power(x: tuple, e: int) -> tuple:
    if e < 0:
        x, e = _invert(x), -e
    result = tuple(range(len(x)))
    base = x
    while e:
        if e & 1:
            result = _compose(result, base)
        e >>= 1
        if e:
            base = _compose(base, base)
    return result


def _commutator(x: tuple, y: tuple) -> tuple:
    return _compose(_compose(_invert(x), _invert(y)), _compose(x, y))


class Permutation:
    """An immutable bijection of {1..degree}."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images, *, _checked=False):
        if _checked:
            self._img = images
        else:
            img = tuple(int(v) - 1 for v in images)
            if not img:
                raise ValueError("permutation must have positive degree")
            if sorted(img) != list(range(len(img))):
                raise ValueError(f"not a permutation of 1..{len(img)}: {list(images)}")
            self._img = img
        self._hash = None

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        return cls(img, _checked=True)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles) -> "Permutation":
        """Build from 1-indexed cycles, e.g. ``from_cycles(3, (1, 2, 3))``."""
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(tuple(v + 1 for v in img))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        return tuple(v + 1 for v in self._img)

    def __call__(self, k: int) -> int:
        return self._img[k - 1] + 1

    def _check(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        return None

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Permutation._raw(_compose(self._img, other._img))

    def inverse(self) -> "Permutation":
        return Permutation._raw(_invert(self._img))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, e: int) -> "Permutation":
        return Permutation._raw(_power(self._img, e))

    def conj(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 self g``."""
        self._check(g)
        return Permutation._raw(_compose(_compose(_invert(g._img), self._img), g._img))

    def is_identity(self) -> bool:
        return all(k == v for k, v in enumerate(self._img))

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles()), 1)

    def cycles(self) -> list:
        """Non-trivial cycles, 1-indexed, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self._img)):
            if start in seen or self._img[start] == start:
                continue
            cyc = [start + 1]
            seen.add(start)
            j = self._img[start]
            while j != start:
                seen.add(j)
                cyc.append(j + 1)
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._img)
        return self._hash

    def __repr__(self):
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def compose(x: Permutation, y: Permutation) -> Permutation:
    """Apply ``x`` first, then ``y``."""
    return x * y


def inverse(x: Permutation) -> Permutation:
    return x.inverse()


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """``[x, y] = x^-1 y^-1 x y``."""
    if x.degree != y.degree:
        raise ValueError(f"degree mismatch: {x.degree} != {y.degree}")
    return Permutation._raw(_commutator(x._img, y._img))


def left_normed(*elems: Permutation) -> Permutation:
    """Left-normed commutator ``[x1, x2, ..., xk] = [[x1, x2], ..., xk]``."""
    if not elems:
        raise ValueError("need at least one element")
    acc = elems[0]
    for g in elems[1:]:
        acc = commutator(acc, g)
    return acc
