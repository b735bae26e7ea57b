"""Lower central series by repeated normal closure of commutators."""

from __future__ import annotations

from dataclasses import dataclass, field

from .chain import StabilizerChain, build_chain, closure_in, prime_valuation
from .permutation import Permutation, commutator


class NonNilpotentError(RuntimeError):
    """The series stalled at a nontrivial term or ran past the iteration bound."""


@dataclass(frozen=True)
class SeriesReport:
    """Terms gamma_1 > gamma_2 > ... > gamma_{c+1} = 1 of a finite nilpotent group.

    ``terms[i - 1]`` is ``(generators, order_valuation)`` for gamma_i; the
    trivial final term is included.  ``index_exponents[i - 1]`` is
    log_p |gamma_i : gamma_{i+1}|.  For nilpotent groups that are not p-groups
    ``p`` and every valuation are None, and only ``orders`` is meaningful.
    """

    p: int | None
    terms: tuple
    index_exponents: tuple
    nilpotency_class: int
    orders: tuple
    chains: tuple = field(default=(), repr=False, compare=False)

    def term(self, i: int) -> StabilizerChain:
        """Chain of gamma_i (1-indexed); past the end this is the trivial group."""
        if i < 1:
            raise ValueError("terms are numbered from 1")
        return self.chains[min(i, len(self.chains)) - 1]

    def weight(self, x: Permutation):
        """Largest i with x in gamma_i, or None for the identity."""
        if x.is_identity():
            return None
        w = 0
        for chain in self.chains:
            if not chain.contains(x):
                break
            w += 1
        return w

    @property
    def order_valuation(self):
        return self.terms[0][1]


def lower_central_series(generators, max_terms=None, method="auto") -> SeriesReport:
    """Compute gamma_i of the group generated by ``generators`` until it becomes trivial.

    gamma_{i+1} is the normal closure in gamma_1 of the commutators [h, g]
    with h running over generators of gamma_i and g over ``generators``.
    Raises NonNilpotentError if a term repeats without being trivial or if
    more than ``max_terms`` nontrivial terms appear.
    """
    gens = tuple(generators)
    if not gens:
        raise ValueError("need at least one generator")
    top = build_chain(gens, method=method)
    chains = [top]
    term_gens = [gens]
    while not chains[-1].is_trivial():
        if max_terms is not None and len(chains) > max_terms:
            raise NonNilpotentError(f"more than {max_terms} nontrivial terms")
        prev = chains[-1]
        seeds = []
        for h in prev.strong_generators:
            for g in gens:
                c = commutator(h, g)
                if not c.is_identity():
                    seeds.append(c)
        nxt = closure_in(top, gens, seeds)
        if nxt.order == prev.order:
            raise NonNilpotentError(f"series stalls at a term of order {prev.order}")
        chains.append(nxt)
        term_gens.append(nxt.strong_generators)

    orders = tuple(c.order for c in chains)
    pv = prime_valuation(orders[0])
    p = pv[0] if pv else None
    if p is None:
        vals = [None] * len(chains)
        exps = ()
    else:
        vals = [c.valuation(p) for c in chains]
        exps = tuple(vals[k] - vals[k + 1] for k in range(len(vals) - 1))
    return SeriesReport(
        p=p,
        terms=tuple(zip(term_gens, vals)),
        index_exponents=exps,
        nilpotency_class=len(chains) - 1,
        orders=orders,
        chains=tuple(chains),
    )
