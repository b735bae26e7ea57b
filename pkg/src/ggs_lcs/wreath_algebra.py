"""The wreath product W = B x| <sigma> and its lower central series.

Vectors over F_p of length p are identified with the algebra F_p[X]/(X^p - 1)
by sending (v_0, ..., v_{p-1}) to v_0 + v_1 X + ... + v_{p-1} X^{p-1}.  Under
this identification the commutator with sigma becomes multiplication by X - 1,
which is how every closed form below is computed.

Tuples of group elements are indexed 0..p-1 here; tree sections are indexed
1..p.  ``sections_to_tuple`` is the single place where the two meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .perm_core import Permutation, SeriesReport, StabilizerChain, build_chain
from .perm_core.permutation import _compose, _invert
from .tree_autos import SectionTuple, to_permutation


# ---------------------------------------------------------------------------
# the algebra F_p[X]/(X^p - 1)


@dataclass(frozen=True)
class AlgebraElement:
    p: int
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.p:
            raise ValueError(f"need {self.p} coefficients, got {len(self.coefficients)}")
        object.__setattr__(self, "coefficients", tuple(c % self.p for c in self.coefficients))

    @classmethod
    def constant(cls, p: int, c: int = 1) -> "AlgebraElement":
        return cls(p, (c,) + (0,) * (p - 1))

    @classmethod
    def x(cls, p: int) -> "AlgebraElement":
        """The class of X."""
        return cls(p, (0, 1) + (0,) * (p - 2))

    def _same(self, other):
        if not isinstance(other, AlgebraElement) or other.p != self.p:
            raise ValueError("operands must live in the same algebra")

    def __add__(self, other):
        self._same(other)
        return AlgebraElement(self.p, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self):
        return AlgebraElement(self.p, tuple(-a for a in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgebraElement(self.p, tuple(other * a for a in self.coefficients))
        self._same(other)
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[(i + j) % p] += a * b
        return AlgebraElement(p, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in general")
        out = AlgebraElement.constant(self.p)
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def y_coefficients(self) -> tuple:
        """Coordinates in the basis 1, Y, ..., Y^(p-1) where Y = X - 1."""
        p = self.p
        return tuple(
            sum(v * comb(r, k) for r, v in enumerate(self.coefficients)) % p for k in range(p)
        )

    def valuation(self) -> int:
        """Largest k with the element in (X - 1)^k; p for zero."""
        return next((k for k, c in enumerate(self.y_coefficients()) if c), self.p)


def theta(v) -> AlgebraElement:
    v = tuple(v)
    if not v:
        raise ValueError("empty vector")
    return AlgebraElement(len(v), v)


def theta_inverse(x: AlgebraElement, p: int | None = None) -> tuple:
    if p is not None and x.p != p:
        raise ValueError(f"element lives in the algebra for p={x.p}, not p={p}")
    return x.coefficients


# ---------------------------------------------------------------------------
# tuples of group elements


@dataclass(frozen=True)
class GroupTuple:
    """(g_0, ..., g_{p-1}) in the base group; sigma moves entry r to position r+1."""

    entries: tuple

    @property
    def p(self) -> int:
        return len(self.entries)

    def shifted(self) -> "GroupTuple":
        """Conjugate by sigma: (g_{p-1}, g_0, ..., g_{p-2})."""
        return GroupTuple(self.entries[-1:] + self.entries[:-1])

    def __mul__(self, other: "GroupTuple") -> "GroupTuple":
        if other.p != self.p:
            raise ValueError("tuples of different length")
        return GroupTuple(tuple(x * y for x, y in zip(self.entries, other.entries)))

    def inverse(self) -> "GroupTuple":
        return GroupTuple(tuple(x**-1 for x in self.entries))

    def __pow__(self, e: int) -> "GroupTuple":
        return GroupTuple(tuple(x**e for x in self.entries))

    def is_identity(self) -> bool:
        return all(x.is_identity() for x in self.entries)

    @classmethod
    def first(cls, g, p: int) -> "GroupTuple":
        """(g, 1, ..., 1)."""
        one = g**0
        return cls((g,) + (one,) * (p - 1))


def delta_map(t, p: int | None = None):
    """[t, sigma] = t^-1 t^sigma for group tuples; v^sigma - v for F_p sequences.

    For plain sequences ``p`` is the modulus (default: the length).
    """
    if isinstance(t, GroupTuple):
        return t.inverse() * t.shifted()
    v = tuple(t)
    q = p or len(v)
    return tuple((v[r - 1] - v[r]) % q for r in range(len(v)))


def iterate_delta(t, times: int, p: int | None = None):
    for _ in range(times):
        t = delta_map(t, p)
    return t


def lambda_coefficient(i: int, r: int) -> int:
    """(-1)^(i-r-1) binom(i-1, r) as an exact integer (zero for r >= i)."""
    if r >= i:
        return 0
    return (-1) ** (i - r - 1) * comb(i - 1, r)


def _check_index(p, i):
    if not 1 <= i <= p:
        raise ValueError(f"index {i} outside 1..{p}")


def lambda_vector(p: int, i: int) -> tuple:
    """Coefficients of (X - 1)^(i-1), reduced mod p."""
    _check_index(p, i)
    return tuple(lambda_coefficient(i, r) % p for r in range(p))


def lambda_tuple(g, i: int, p: int) -> GroupTuple:
    """(g^lambda_{i,0}, ..., g^lambda_{i,i-1}, 1, ..., 1) with exact integer exponents.

    The exact exponents make this equal to Delta^(i-1)(g, 1, ..., 1) for any g,
    whatever its order.
    """
    _check_index(p, i)
    return GroupTuple(tuple(g ** lambda_coefficient(i, r) for r in range(p)))


# ---------------------------------------------------------------------------
# lower central series of W(F_p)


def gamma_level_field(v) -> int:
    """Largest i with v in gamma_i(W(F_p)) (gamma_1 meaning the base group); p+1 for zero."""
    return 1 + theta(v).valuation()


def _poly_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def power_of_x_minus_1(p: int, ell: int) -> tuple:
    """Coefficients of (X - 1)^ell as a polynomial of degree ell < p."""
    f = [1]
    for _ in range(ell):
        f = _poly_mul(f, [p - 1, 1], p)
    return tuple(f) + (0,) * (p - len(f))


def derivative_of_all_ones(p: int, ell: int) -> tuple:
    """Coefficients of the ell-th derivative of 1 + X + ... + X^(p-1)."""
    f = [1] * p
    for _ in range(ell):
        f = [(k * c) % p for k, c in enumerate(f)][1:] + [0]
    return tuple(f)


def linear_form(f, v, p: int) -> int:
    """Evaluate f_0 v_0 + ... + f_{p-1} v_{p-1} in F_p."""
    return sum(a * b for a, b in zip(f, v)) % p


def equation_system(p: int, i: int, kind: str = "power") -> list:
    """Coefficient rows whose common zeros form gamma_i(W(F_p)), for 2 <= i <= p.

    ``kind="power"`` uses (X - 1)^l for p-i+1 <= l <= p-1;
    ``kind="derivative"`` uses f^(l) for 0 <= l <= i-2, f = 1 + X + ... + X^(p-1).
    """
    if not 2 <= i <= p:
        raise ValueError(f"equation systems exist for 2 <= i <= {p}")
    if kind == "power":
        return [power_of_x_minus_1(p, ell) for ell in range(p - i + 1, p)]
    if kind == "derivative":
        return [derivative_of_all_ones(p, ell) for ell in range(i - 1)]
    raise ValueError(f"unknown equation system {kind!r}")


def gamma_level_equations(v, kind: str = "power") -> int:
    """Same quantity as ``gamma_level_field`` but read off the equation systems."""
    v = tuple(v)
    p = len(v)
    if not any(c % p for c in v):
        return p + 1
    level = 1
    for i in range(2, p + 1):
        if all(linear_form(row, v, p) == 0 for row in equation_system(p, i, kind)):
            level = i
    return level


def iterated_delta_p_minus_2(v) -> tuple:
    """Delta^(p-2)(v) in closed form: (-a+b, -2a+b, ..., -(p-1)a+b, b).

    Here a = sum v_r and b = sum r v_r over F_p.
    """
    v = tuple(v)
    p = len(v)
    alpha = sum(v) % p
    beta = sum(r * c for r, c in enumerate(v)) % p
    return tuple((-(r + 1) * alpha + beta) % p for r in range(p - 1)) + (beta,)


# ---------------------------------------------------------------------------
# word equations over W(G)


def word_value(t: GroupTuple, f) -> object:
    """g_0^f_0 g_1^f_1 ... g_{p-1}^f_{p-1} with exponents reduced into 0..p-1."""
    p = t.p
    out = t.entries[0] ** 0
    for g, e in zip(t.entries, f):
        e %= p
        if e:
            out = out * g**e
    return out


def wreath_membership(t: GroupTuple, j: int, k: int, quotient_oracle, entry_oracle=None) -> bool:
    """Whether t lies in gamma_{(j-1)p+k}(W(G)), for t with entries in gamma_j(G).

    ``quotient_oracle(g)`` decides g in gamma_{j+1}(G).  The optional
    ``entry_oracle`` decides membership in gamma_j(G) and guards the
    precondition.  k runs over 1..p+1, where k = p+1 means B(gamma_{j+1}).
    """
    p = t.p
    if j < 1:
        raise ValueError("j must be at least 1")
    if not 1 <= k <= p + 1:
        raise ValueError(f"k must lie in 1..{p + 1}")
    if entry_oracle is not None and not all(entry_oracle(g) for g in t.entries):
        raise ValueError(f"tuple has an entry outside gamma_{j}")
    if k == p + 1:
        return all(quotient_oracle(g) for g in t.entries)
    return all(
        quotient_oracle(word_value(t, power_of_x_minus_1(p, ell))) for ell in range(p - k + 1, p)
    )


def reduce_to_first_component(t: GroupTuple) -> GroupTuple:
    """(g_0 g_1 ... g_{p-1}, 1, ..., 1)."""
    prod = t.entries[0]
    for g in t.entries[1:]:
        prod = prod * g
    return GroupTuple.first(prod, t.p)


# ---------------------------------------------------------------------------
# W(G) as an imprimitive permutation group


def block_rotation(p: int, d: int) -> Permutation:
    """sigma moving block r (points r*d+1..(r+1)*d) onto block r+1."""
    return Permutation._raw(tuple(((k // d + 1) % p) * d + k % d for k in range(p * d)))


def tuple_to_permutation(t: GroupTuple) -> Permutation:
    """Act by g_r on block r."""
    d = t.entries[0].degree
    img = []
    for r, g in enumerate(t.entries):
        if g.degree != d:
            raise ValueError("entries must share a degree")
        img.extend(r * d + v for v in g._img)
    return Permutation._raw(tuple(img))


def permutation_to_tuple(x: Permutation, p: int) -> GroupTuple:
    """Inverse of ``tuple_to_permutation``; raises if x moves a block."""
    if x.degree % p:
        raise ValueError(f"degree {x.degree} is not a multiple of {p}")
    d = x.degree // p
    out = []
    for r in range(p):
        block = x._img[r * d : (r + 1) * d]
        if any(v // d != r for v in block):
            raise ValueError("permutation does not fix every block")
        out.append(Permutation._raw(tuple(v - r * d for v in block)))
    return GroupTuple(tuple(out))


def sections_to_tuple(st: SectionTuple) -> GroupTuple:
    """Sections f|_1..f|_p (1-indexed) as the 0-indexed tuple of their leaf permutations."""
    if st.root_label:
        raise ValueError("only elements fixing the first level give base-group tuples")
    return GroupTuple(tuple(to_permutation(s) for s in st.entries))


def _generators_of(group):
    gens = getattr(group, "generators", None)
    if gens is None:
        gens = getattr(group, "strong_generators", None)
    if gens is None:
        gens = group
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    return gens


def wreath_perm_group(group, p: int) -> tuple:
    """Generators of W(G) on p blocks: each G-generator on block 0, plus sigma.

    ``group`` may be a sequence of permutations or any object exposing
    ``generators`` or ``strong_generators``.
    """
    gens = _generators_of(group)
    d = gens[0].degree
    one = Permutation.identity(d)
    out = [tuple_to_permutation(GroupTuple((g,) + (one,) * (p - 1))) for g in gens]
    out.append(block_rotation(p, d))
    return tuple(out)


def base_group_generators(gens, p: int) -> tuple:
    """Generators of B(H) = H x ... x H, from generators of H."""
    gens = tuple(gens)
    if not gens:
        return ()
    one = gens[0] ** 0
    out = []
    for r in range(p):
        for g in gens:
            entries = [one] * p
            entries[r] = g
            out.append(GroupTuple(tuple(entries)))
    return tuple(out)


# ---------------------------------------------------------------------------
# closed-form lower central series of W(G)


def check_exponent_p_factors(series: SeriesReport) -> None:
    """Raise unless every gamma_j/gamma_{j+1} has exponent p."""
    p = series.p
    if p is None:
        raise ValueError("the group is not a p-group")
    for j in range(1, series.nilpotency_class + 1):
        below = series.term(j + 1)
        for g in series.term(j).strong_generators:
            if not below.contains(g**p):
                raise ValueError(f"gamma_{j}/gamma_{j + 1} has exponent larger than {p}")


def wreath_term_generators(series: SeriesReport, i: int) -> tuple:
    """Generating tuples of gamma*_i(W(G)) for i = (j-1)p + k.

    These are lambda_k'(g) for k <= k' <= p and g generating gamma_j(G),
    together with the coordinate copies of generators of gamma_{j+1}(G).
    """
    p = series.p
    if i < 1:
        raise ValueError("terms are numbered from 1")
    j, k = divmod(i - 1, p)
    j, k = j + 1, k + 1
    if j > series.nilpotency_class:
        return ()
    top = series.term(j).strong_generators
    below = series.term(j + 1).strong_generators
    out = [lambda_tuple(g, kk, p) for kk in range(k, p + 1) for g in top]
    out.extend(base_group_generators(below, p))
    return tuple(out)


def wreath_lcs_closed_form(series: SeriesReport) -> SeriesReport:
    """Predicted series gamma*_i(W(G)) from the series of G.

    gamma*_1 is the base group B(G).  The index exponent at i = (j-1)p + k is
    the exponent at j, the class is c*p, and the term generators are the
    tuples of ``wreath_term_generators``.
    """
    check_exponent_p_factors(series)
    p, c = series.p, series.nilpotency_class
    exps = tuple(series.index_exponents[(i - 1) // p] for i in range(1, c * p + 1))
    vals = [sum(exps[i:]) for i in range(len(exps) + 1)]
    terms = tuple((wreath_term_generators(series, i), vals[i - 1]) for i in range(1, c * p + 2))
    return SeriesReport(
        p=p,
        terms=terms,
        index_exponents=exps,
        nilpotency_class=c * p,
        orders=tuple(p**v for v in vals),
    )


def chain_of_tuples(tuples, degree: int) -> StabilizerChain:
    """Chain of the subgroup of W(G) generated by base-group tuples (degree p*d)."""
    perms = [tuple_to_permutation(t) for t in tuples]
    if not perms:
        perms = [Permutation.identity(degree)]
    return build_chain(perms)


def tuple_commutator_with_sigma_perm(x: Permutation, p: int) -> Permutation:
    """[x, sigma] computed on permutations, for cross-checking ``delta_map``."""
    s = block_rotation(p, x.degree // p)._img
    xi = x._img
    return Permutation._raw(_compose(_compose(_invert(xi), _invert(s)), _compose(xi, s)))
