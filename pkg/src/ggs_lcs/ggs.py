"""GGS-groups: defining vectors, congruence quotients, commutator words and the index schedule."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .perm_core import (
    LevelChain,
    Permutation,
    SeriesReport,
    StabilizerChain,
    build_chain,
    commutator,
    lower_central_series,
)
from .tree_autos import generator_a, generator_b, to_permutation


def is_odd_prime(p) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    return all(p % q for q in range(3, int(p**0.5) + 1, 2))


@dataclass(frozen=True)
class DefiningVector:
    p: int
    entries: tuple
    epsilon: int
    delta: int
    is_constant: bool
    is_symmetric: bool
    is_periodic: bool
    is_fg_type: bool

    def text(self) -> str:
        return ",".join(map(str, self.entries))

    def __str__(self):
        return f"({self.text()})"


def classify_vector(p: int, entries) -> DefiningVector:
    """Validate ``entries`` as a defining vector over F_p and compute its invariants."""
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")
    entries = tuple(int(c) % p for c in entries)
    if len(entries) != p - 1:
        raise ValueError(f"defining vector for p={p} needs {p - 1} entries, got {len(entries)}")
    if not any(entries):
        raise ValueError("defining vector must be nonzero")
    eps = sum(entries) % p
    delta = sum(i * c for i, c in enumerate(entries, start=1)) % p
    return DefiningVector(
        p=p,
        entries=entries,
        epsilon=eps,
        delta=delta,
        is_constant=len(set(entries)) == 1,
        is_symmetric=entries == entries[::-1],
        is_periodic=eps == 0,
        is_fg_type=eps != 0 and delta != 0,
    )


def parse_vector(p: int, text: str) -> DefiningVector:
    """Parse comma-separated residues such as ``"1,0,0,4"``."""
    try:
        entries = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse defining vector {text!r}") from None
    return classify_vector(p, entries)


def all_vectors(p: int):
    """Every nonzero defining vector for p, in lexicographic order of entries."""
    from itertools import product

    return [classify_vector(p, v) for v in product(range(p), repeat=p - 1) if any(v)]


def predicted_order_valuation(n: int, p: int | None = None) -> int:
    """log_p |G_n| for non-periodic non-symmetric vectors: p^(n-1) + 1, and 1 at n = 1."""
    if n < 1:
        raise ValueError("level must be at least 1")
    if n == 1:
        return 1
    if p is None:
        raise ValueError("p is needed for n >= 2")
    return p ** (n - 1) + 1


# ---------------------------------------------------------------------------
# congruence quotients


@dataclass(frozen=True, eq=False)
class CongruenceQuotient:
    """G_n = G / St_G(n) as a permutation group on the p^n leaves."""

    vector: DefiningVector
    n: int
    gen_a: Permutation
    gen_b: Permutation
    chain: StabilizerChain

    @property
    def p(self) -> int:
        return self.vector.p

    @property
    def generators(self) -> tuple:
        return (self.gen_a, self.gen_b)

    @property
    def order_valuation(self) -> int:
        return self.chain.valuation(self.p)

    @cached_property
    def stabilizer_chains(self) -> dict:
        """Level k -> chain of St_{G_n}(k), for k = 0..n."""
        return {k: self.level_stabilizer(k) for k in range(self.n + 1)}

    def level_stabilizer(self, k: int) -> StabilizerChain:
        if not 0 <= k <= self.n:
            raise ValueError(f"level {k} outside 0..{self.n}")
        if isinstance(self.chain, LevelChain):
            return self.chain.level_stabilizer(k)
        raise TypeError("level stabilisers need a tree-level chain")

    @cached_property
    def series(self) -> SeriesReport:
        return lower_central_series(self.generators)

    @cached_property
    def g_power_b(self) -> Permutation:
        """The element a^epsilon b."""
        return self.gen_a ** self.vector.epsilon * self.gen_b

    def power_of_a(self, e: int) -> Permutation:
        return self.gen_a ** (e % self.p)


@lru_cache(maxsize=64)
def congruence_quotient(vector: DefiningVector, n: int) -> CongruenceQuotient:
    if n < 1:
        raise ValueError("level must be at least 1")
    a = to_permutation(generator_a(vector.p, n))
    b = to_permutation(generator_b(vector, n))
    return CongruenceQuotient(vector, n, a, b, build_chain([a, b]))


# ---------------------------------------------------------------------------
# commutator words


def x_word(e: DefiningVector, i: int, n: int) -> Permutation:
    """x(1) = b and x(i) = [x(i-1), a^eps b] in G_n."""
    if i < 1:
        raise ValueError("x(i) needs i >= 1")
    return _x_word(e, i, n)


@lru_cache(maxsize=None)
def _x_word(e, i, n):
    q = congruence_quotient(e, n)
    if i == 1:
        return q.gen_b
    return commutator(_x_word(e, i - 1, n), q.g_power_b)


def y_word(e: DefiningVector, j: int, i: int, n: int) -> Permutation:
    """y_1(1) = a, y_j(j) = [x(j-1), b] and y_j(i) = [y_j(i-1), a^eps b] for 2 <= j <= i."""
    if not ((j, i) == (1, 1) or 2 <= j <= i):
        raise ValueError(f"y_j(i) is defined for (j, i) = (1, 1) or 2 <= j <= i, got ({j}, {i})")
    return _y_word(e, j, i, n)


@lru_cache(maxsize=None)
def _y_word(e, j, i, n):
    q = congruence_quotient(e, n)
    if j == 1:
        return q.gen_a
    if i == j:
        return commutator(_x_word(e, j - 1, n), q.gen_b)
    return commutator(_y_word(e, j, i - 1, n), q.g_power_b)


def word_for_tag(e: DefiningVector, tag: str, n: int) -> Permutation:
    """Evaluate a schedule tag such as ``"x(4)"`` or ``"y_3(5)"``."""
    name, _, rest = tag.partition("(")
    i = int(rest.rstrip(")"))
    if name == "x":
        return x_word(e, i, n)
    if name.startswith("y_"):
        return y_word(e, int(name[2:]), i, n)
    raise ValueError(f"unknown word tag {tag!r}")


# ---------------------------------------------------------------------------
# the interval schedule


def ell_sequence(p: int, count: int) -> list:
    """l(0), ..., l(count-1) by the recursion l(m) = p(l(m-1) - 1) - 1."""
    out = []
    for m in range(count):
        out.append(1 if m == 0 else p if m == 1 else p * (out[-1] - 1) - 1)
    return out


def r_sequence(p: int, count: int) -> list:
    """r(0), ..., r(count-1) by the recursion r(m) = p(r(m-1) - 1) - 1."""
    out = []
    for m in range(count):
        out.append(2 if m == 0 else p + 1 if m == 1 else p * (out[-1] - 1) - 1)
    return out


def ell_closed(p: int, m: int) -> int:
    """Closed form of l(m), valid for m >= 2."""
    return p**m - p ** (m - 1) - 2 * sum(p**i for i in range(1, m - 1)) - 1


def r_closed(p: int, m: int) -> int:
    """Closed form of r(m), valid for m >= 2."""
    return p**m - 2 * sum(p**i for i in range(1, m - 1)) - 1


def class_formula(p: int, n: int) -> int:
    """c(n) = p^(n-1) - p^(n-3) - ... - p - 1 for n >= 3."""
    return p ** (n - 1) - sum(p**k for k in range(n - 2))


@dataclass(frozen=True)
class IntervalSchedule:
    p: int
    n: int
    ell: tuple
    r: tuple
    class_c: int
    predictions: dict  # i -> (exponent, tuple of tags)

    def exponent(self, i: int) -> int:
        return self.predictions[i][0] if i in self.predictions else 0

    def tags(self, i: int) -> tuple:
        return self.predictions[i][1] if i in self.predictions else ()

    @property
    def exponents(self) -> list:
        return [self.predictions[i][0] for i in range(1, self.class_c + 1)]

    @property
    def total(self) -> int:
        return sum(self.exponents)


def interval_schedule(p: int, n: int) -> IntervalSchedule:
    """Predicted index exponents and generating words of gamma_i(G_n), n >= 3."""
    if n < 3:
        raise ValueError("the interval schedule needs n >= 3; G_1 and G_2 are of maximal class")
    ell = ell_sequence(p, n - 1)
    r = r_sequence(p, n - 1)
    c = class_formula(p, n)
    predictions = {}
    for i in range(1, c + 1):
        m = next((m for m in range(n - 1) if ell[m] <= i < r[m]), None)
        if m is None:
            predictions[i] = (1, (f"x({i})",))
        else:
            predictions[i] = (2, (f"x({i})", f"y_{ell[m]}({i})"))
    return IntervalSchedule(p, n, tuple(ell), tuple(r), c, predictions)


def maximal_class_exponents(p: int) -> list:
    """Index exponents of G_2: p^2 at the top, then p-1 factors of order p."""
    return [2] + [1] * (p - 1)
