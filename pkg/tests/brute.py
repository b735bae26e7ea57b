"""Exhaustive oracles on explicit element sets, independent of the chain code."""

from math import log


def compose(x, y):
    return tuple(y[v] for v in x)


def invert(x):
    out = [0] * len(x)
    for k, v in enumerate(x):
        out[v] = k
    return tuple(out)


def comm(x, y):
    return compose(compose(invert(x), invert(y)), compose(x, y))


def closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    for x in frontier:
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def normal_closure(seeds, ambient, degree):
    """Smallest subgroup containing ``seeds`` and closed under conjugation by ``ambient``."""
    kept, group = [], {tuple(range(degree))}
    queue = list(seeds)
    while queue:
        s = queue.pop()
        if s in group:
            continue
        kept.append(s)
        group = closure(kept, degree)
        for g in ambient:
            queue.append(compose(compose(invert(g), s), g))
    return group


def lower_central_orders(gens, degree):
    """Orders of gamma_1, gamma_2, ... down to the trivial group."""
    group = closure(gens, degree)
    orders = [len(group)]
    term = group
    while len(term) > 1:
        term = normal_closure({comm(h, g) for h in term for g in gens}, gens, degree)
        if len(term) == orders[-1]:
            raise RuntimeError("not nilpotent")
        orders.append(len(term))
    return orders


def valuation(order, p):
    return round(log(order, p))
