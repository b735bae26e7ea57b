"""Stabilizer chains: order, membership and normal closure.

Two deterministic constructions sit behind one interface.

``SchreierSimsChain`` is the textbook incremental Schreier-Sims algorithm on
points, with explicit transversals.  It handles any permutation group.

``LevelChain`` is used when the degree is p^n and every generator is a tree
automorphism whose local actions are powers of the p-cycle, i.e. the group
lies in the Sylow p-subgroup of Sym(p^n).  Such a group acts faithfully on the
vertices of the truncated tree, and the chain takes as base the first child of
each internal vertex in breadth-first order.  Each fundamental orbit then has
length 1 or p, the level stabilisers St(k) are tails of the chain, and a
strong generating set is obtained by sifting and closing under p-th powers and
commutators.
"""

from __future__ import annotations

from functools import lru_cache

from .permutation import Permutation, _commutator, _compose, _invert, _power
from .treeshape import prime_power_shape, tree_shape


def _is_id(x: tuple) -> bool:
    return all(k == v for k, v in enumerate(x))


def prime_valuation(order: int):
    """Return ``(p, k)`` when ``order == p**k`` (``(None, 0)`` for 1), else None."""
    if order == 1:
        return (None, 0)
    shape = prime_power_shape(order)
    return shape


class StabilizerChain:
    """Common read-only surface of both chain kinds."""

    degree: int
    base: tuple
    strong_generators: tuple

    @property
    def order(self) -> int:
        out = 1
        for k in self.orbit_lengths:
            out *= k
        return out

    @property
    def orbit_lengths(self) -> tuple:
        raise NotImplementedError

    @property
    def order_valuation(self):
        """log_p of the order if the order is a prime power (0 for the trivial group)."""
        pv = prime_valuation(self.order)
        return None if pv is None else pv[1]

    def valuation(self, p: int) -> int:
        k, rest = 0, self.order
        while rest % p == 0:
            rest //= p
            k += 1
        if rest != 1:
            raise ValueError(f"order {self.order} is not a power of {p}")
        return k

    def contains(self, x: Permutation) -> bool:
        if x.degree != self.degree:
            raise ValueError(f"degree mismatch: {x.degree} != {self.degree}")
        return self._contains_raw(x._img)

    def __contains__(self, x):
        return self.contains(x)

    def is_trivial(self) -> bool:
        return not self.strong_generators

    def is_subgroup_of(self, other: "StabilizerChain") -> bool:
        return all(other.contains(g) for g in self.strong_generators)

    def same_group(self, other: "StabilizerChain") -> bool:
        """Equality certified by mutual generator membership plus equal orders."""
        return (
            self.order == other.order
            and self.is_subgroup_of(other)
            and other.is_subgroup_of(self)
        )

    def _contains_raw(self, x: tuple) -> bool:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# generic Schreier-Sims


class _SSBuilder:
    """Mutable state of the incremental Schreier-Sims algorithm."""

    def __init__(self, degree: int):
        self.degree = degree
        self.ident = tuple(range(degree))
        self.base = []
        self.strong = []
        self.level_gens = []
        self.trans = []
        self.trans_inv = []

    def _moved_point(self, x):
        return next(k for k, v in enumerate(x) if k != v)

    def _orbit(self, level):
        b = self.base[level]
        gens = self.level_gens[level]
        trans = {b: self.ident}
        queue = [b]
        for pt in queue:
            u = trans[pt]
            for s in gens:
                q = s[pt]
                if q not in trans:
                    trans[q] = _compose(u, s)
                    queue.append(q)
        self.trans[level] = trans
        self.trans_inv[level] = {}

    def _inv(self, level, pt):
        cache = self.trans_inv[level]
        if pt not in cache:
            cache[pt] = _invert(self.trans[level][pt])
        return cache[pt]

    def sift(self, x, start=0):
        for level in range(start, len(self.base)):
            pt = x[self.base[level]]
            if pt not in self.trans[level]:
                return x, level
            if pt != self.base[level]:
                x = _compose(x, self._inv(level, pt))
        return x, len(self.base)

    def contains(self, x) -> bool:
        res, level = self.sift(x)
        return level == len(self.base) and _is_id(res)

    def _add_strong(self, x, upto):
        # x fixes base[:upto]; it joins the generating sets of levels 0..upto
        if upto == len(self.base):
            self.base.append(self._moved_point(x))
            self.level_gens.append([])
            self.trans.append({})
            self.trans_inv.append({})
        self.strong.append(x)
        for level in range(upto + 1):
            if all(x[b] == b for b in self.base[:level]):
                self.level_gens[level].append(x)
        for level in range(upto + 1):
            self._orbit(level)

    def add_generators(self, gens):
        fresh = False
        for g in gens:
            if _is_id(g) or self.contains(g):
                continue
            upto = 0
            while upto < len(self.base) and g[self.base[upto]] == self.base[upto]:
                upto += 1
            self._add_strong(g, upto)
            fresh = True
        if fresh:
            self._complete()

    def _complete(self):
        level = len(self.base) - 1
        while level >= 0:
            restart = None
            trans = self.trans[level]
            for pt in list(trans):
                u = trans[pt]
                for s in self.level_gens[level]:
                    image = s[pt]
                    h = _compose(_compose(u, s), self._inv(level, image))
                    res, stop = self.sift(h, level + 1)
                    if stop < len(self.base) or not _is_id(res):
                        self._add_strong(res, stop)
                        restart = stop
                        break
                if restart is not None:
                    break
            if restart is None:
                level -= 1
            else:
                level = restart

    def freeze(self) -> "SchreierSimsChain":
        return SchreierSimsChain(self)


class SchreierSimsChain(StabilizerChain):
    """Base and strong generating set from the deterministic Schreier-Sims algorithm."""

    method = "schreier-sims"

    def __init__(self, builder: _SSBuilder):
        self.degree = builder.degree
        self._base = tuple(builder.base)
        self._strong = tuple(builder.strong)
        self._trans = tuple(dict(t) for t in builder.trans)
        self._trans_inv = tuple({} for _ in builder.trans)
        self.base = tuple(b + 1 for b in self._base)
        self.strong_generators = tuple(Permutation._raw(s) for s in self._strong)

    @property
    def orbit_lengths(self) -> tuple:
        return tuple(len(t) for t in self._trans)

    def fundamental_orbit(self, level: int) -> tuple:
        return tuple(sorted(pt + 1 for pt in self._trans[level]))

    def _contains_raw(self, x: tuple) -> bool:
        for level, b in enumerate(self._base):
            pt = x[b]
            trans = self._trans[level]
            if pt not in trans:
                return False
            if pt != b:
                inv = self._trans_inv[level].get(pt)
                if inv is None:
                    inv = self._trans_inv[level][pt] = _invert(trans[pt])
                x = _compose(x, inv)
        return _is_id(x)

    def _builder(self) -> _SSBuilder:
        b = _SSBuilder(self.degree)
        b.base = list(self._base)
        b.strong = list(self._strong)
        b.level_gens = [
            [s for s in self._strong if all(s[q] == q for q in self._base[:level])]
            for level in range(len(self._base))
        ]
        b.trans = [dict(t) for t in self._trans]
        b.trans_inv = [{} for _ in self._trans]
        return b

    def __repr__(self):
        return f"SchreierSimsChain(degree={self.degree}, order={self.order}, base={self.base})"


def schreier_sims(generators, degree=None) -> SchreierSimsChain:
    """Deterministic Schreier-Sims on points, for an arbitrary permutation group."""
    gens = list(generators)
    degree = _degree_of(gens, degree)
    b = _SSBuilder(degree)
    b.add_generators([g._img for g in gens])
    return b.freeze()


# ---------------------------------------------------------------------------
# chains for subgroups of the Sylow p-subgroup of Sym(p^n)


class LevelChain(StabilizerChain):
    """Chain along the breadth-first vertex order of the p-adic tree.

    Position j refers to the j-th internal vertex v_j; the chain stabilises
    the vertices v_1.1, v_2.1, ... in turn.  ``pivots[j]`` is a strong
    generator acting as sigma on the children of v_j and trivially on the
    children of every earlier vertex.
    """

    method = "tree-levels"

    def __init__(self, p: int, n: int, pivots: dict):
        self.p = p
        self.n = n
        self.shape = tree_shape(p, n)
        self.degree = self.shape.degree
        # position -> (h, [None, h^-1, h^-2, ..., h^-(p-1)])
        self._pivots = dict(sorted(pivots.items()))
        self.base = tuple(self.shape.vertex_word(j) + (1,) for j in self._pivots)
        self.strong_generators = tuple(Permutation._raw(h) for h, _ in self._pivots.values())

    @property
    def orbit_lengths(self) -> tuple:
        return (self.p,) * len(self._pivots)

    @property
    def order(self) -> int:
        return self.p ** len(self._pivots)

    @property
    def pivot_positions(self) -> tuple:
        return tuple(self._pivots)

    def _sift(self, x: tuple):
        shape, p, pivots = self.shape, self.p, self._pivots
        probe, div = shape.probe, shape.div
        for j in range(shape.num_vertices):
            c = (x[probe[j]] // div[j]) % p
            if c:
                piv = pivots.get(j)
                if piv is None:
                    return x, j, c
                x = _compose(x, piv[1][c])
        return x, None, 0

    def _contains_raw(self, x: tuple) -> bool:
        if not self.shape.in_gamma(x):
            return False
        return self._sift(x)[1] is None

    def tail(self, position: int) -> "LevelChain":
        """Chain of the subgroup acting trivially on the children of v_1..v_position."""
        return LevelChain(self.p, self.n, {j: v for j, v in self._pivots.items() if j >= position})

    def level_stabilizer(self, k: int) -> "LevelChain":
        """Chain of the kernel of the action on level k."""
        return self.tail(self.shape.level_start[k])

    def extended(self, generators=(), conj_by=()) -> "LevelChain":
        """Chain of the group generated by this one and ``generators``.

        With ``conj_by`` the result is additionally closed under conjugation
        by those elements, giving the normal closure in any group they generate.
        """
        pivots = dict(self._pivots)
        _level_closure(self, pivots, [g._img for g in generators], [g._img for g in conj_by])
        return LevelChain(self.p, self.n, pivots)

    def __repr__(self):
        return f"LevelChain(p={self.p}, n={self.n}, order={self.p}^{len(self._pivots)})"


def _level_closure(chain: LevelChain, pivots: dict, queue: list, conj_by: list):
    # pivots is mutated in place; chain._pivots must alias it during sifting
    p = chain.p
    chain._pivots = pivots
    conj = [(_invert(g), g) for g in conj_by]
    while queue:
        x, j, c = chain._sift(queue.pop())
        if j is None:
            continue
        h = _power(x, pow(c, -1, p))
        hinv = _invert(h)
        pows = [None, hinv]
        for _ in range(p - 2):
            pows.append(_compose(pows[-1], hinv))
        pivots[j] = (h, pows)
        queue.append(_power(h, p))
        for k, (hk, _) in list(pivots.items()):
            if k != j:
                queue.append(_commutator(h, hk))
        for ginv, g in conj:
            queue.append(_compose(_compose(ginv, h), g))


def level_chain(p: int, n: int, generators, conj_by=()) -> LevelChain:
    chain = LevelChain(p, n, {})
    return chain.extended(generators, conj_by)


# ---------------------------------------------------------------------------
# public entry points


def _degree_of(gens, degree):
    if degree is None:
        if not gens:
            raise ValueError("cannot infer the degree of an empty generating set")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"degree mismatch: {g.degree} != {degree}")
    return degree


def tree_shape_of(gens, degree):
    """``(p, n)`` when all generators lie in the Sylow p-subgroup of Sym(p^n)."""
    shape = prime_power_shape(degree)
    if shape is None:
        return None
    ts = tree_shape(*shape)
    if all(ts.in_gamma(g._img) for g in gens):
        return shape
    return None


def build_chain(generators, degree=None, method="auto") -> StabilizerChain:
    """Stabilizer chain of the group generated by ``generators``.

    ``method`` is "auto", "tree-levels" or "schreier-sims".  Both are exact
    and deterministic; "auto" takes the tree chain whenever it applies.
    """
    gens = tuple(generators)
    degree = _degree_of(gens, degree)
    return _build_chain_cached(gens, degree, method)


@lru_cache(maxsize=512)
def _build_chain_cached(gens, degree, method):
    if method not in ("auto", "tree-levels", "schreier-sims"):
        raise ValueError(f"unknown method {method!r}")
    if method != "schreier-sims":
        shape = tree_shape_of(gens, degree)
        if shape is not None:
            return level_chain(shape[0], shape[1], gens)
        if method == "tree-levels":
            raise ValueError("generators are not tree automorphisms with sigma-power labels")
    return schreier_sims(gens, degree)


def contains(chain: StabilizerChain, x: Permutation) -> bool:
    return chain.contains(x)


def normal_closure(ambient, seeds, method="auto") -> StabilizerChain:
    """Chain of the normal closure of ``seeds`` in the group generated by ``ambient``.

    Raises ValueError when a seed is not an element of the ambient group.
    """
    ambient = tuple(ambient)
    seeds = tuple(seeds)
    degree = _degree_of(ambient + seeds, None)
    amb_chain = build_chain(ambient, degree, method)
    for s in seeds:
        if not amb_chain.contains(s):
            raise ValueError(f"seed {s!r} is not in the ambient group")
    return closure_in(amb_chain, ambient, seeds)


def closure_in(amb_chain: StabilizerChain, ambient, seeds) -> StabilizerChain:
    """Normal closure without re-validating the seeds (chain kind follows ``amb_chain``)."""
    if isinstance(amb_chain, LevelChain):
        return level_chain(amb_chain.p, amb_chain.n, seeds, conj_by=ambient)
    b = _SSBuilder(amb_chain.degree)
    conj = [(_invert(g._img), g._img) for g in ambient]
    queue = []
    for s in seeds:
        if not b.contains(s._img):
            b.add_generators([s._img])
            queue.append(s._img)
    while queue:
        x = queue.pop()
        for ginv, g in conj:
            y = _compose(_compose(ginv, x), g)
            if not b.contains(y):
                b.add_generators([y])
                queue.append(y)
    return b.freeze()


def subgroup_chain(amb_chain: StabilizerChain, generators) -> StabilizerChain:
    """Chain of a subgroup, built with the same method as ``amb_chain``."""
    gens = list(generators)
    if isinstance(amb_chain, LevelChain):
        return level_chain(amb_chain.p, amb_chain.n, gens)
    return schreier_sims(gens, amb_chain.degree)


def enumerate_group(generators, limit=10**5) -> frozenset:
    """All elements of the generated group by breadth-first closure (small groups only)."""
    gens = [g._img for g in generators]
    degree = _degree_of(list(generators), None)
    ident = tuple(range(degree))
    seen = {ident}
    queue = [ident]
    for x in queue:
        for g in gens:
            y = _compose(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
                if len(seen) > limit:
                    raise ValueError(f"group has more than {limit} elements")
    return frozenset(Permutation._raw(x) for x in seen)
