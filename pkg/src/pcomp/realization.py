"""Digraphs whose p-competition graph is a covered graph.

The realization attaches set j of a family to prey vertex j: arc (x, j)
iff x is in set j.  Two vertices then share exactly as many prey as the
number of sets containing both, so for a valid p-edge clique cover with at
most n sets the p-competition graph of the realization is the covered
graph.  An ordering with "member of set j sits at position < j" yields an
acyclic variant.
"""

from __future__ import annotations

from typing import Sequence

from .covers import CliqueCover
from .errors import InfeasibleError, InvalidParameterError
from .graphs import Digraph


def realize(f: CliqueCover) -> Digraph:
    """Digraph on f.n vertices with an arc (x, j) for every x in set j.

    Needs len(f) <= f.n so that every set has its own prey vertex;
    vertices beyond the last set simply receive no arcs from the family.
    """
    if len(f.sets) > f.n:
        raise InfeasibleError(
            f"realization requires |sets| <= n ({len(f.sets)} sets on {f.n} vertices)")
    arcs = [(x, j) for j, s in enumerate(f.sets) for x in sorted(s)]
    return Digraph(f.n, arcs)


def _position_map(order: Sequence[int], n: int) -> dict[int, int]:
    order = list(order)
    if sorted(order) != list(range(n)):
        raise InvalidParameterError(
            f"order must be a permutation of 0..{n - 1}, got {order}")
    return {v: i for i, v in enumerate(order)}


def satisfies_acyclic_ordering(f: CliqueCover, order: Sequence[int]) -> bool:
    """True iff every member of set j sits at a position before j in order."""
    pos = _position_map(order, f.n)
    if len(f.sets) != f.n:
        raise InvalidParameterError(
            f"ordering check needs exactly n sets ({len(f.sets)} sets on {f.n} vertices)")
    return all(pos[x] < j for j, s in enumerate(f.sets) for x in s)


def realize_acyclic(f: CliqueCover, order: Sequence[int]) -> Digraph:
    """Like realize, but the prey of set j is order[j].

    Under the ordering condition every arc goes from a lower position to a
    higher one, so the result is acyclic; prey vertices stay distinct per
    set, which keeps common-prey counts equal to common-set counts.
    """
    if not satisfies_acyclic_ordering(f, order):
        raise InfeasibleError(
            "ordering condition violated: some set j contains a vertex at position >= j")
    order = list(order)
    arcs = [(x, order[j]) for j, s in enumerate(f.sets) for x in sorted(s)]
    return Digraph(f.n, arcs)


def is_acyclic(d: Digraph) -> bool:
    """True iff d has no directed cycle; a loop counts as a cycle."""
    indeg = [0] * d.n
    outs: list[list[int]] = [[] for _ in range(d.n)]
    for x, v in d.arcs:
        if x == v:
            return False
        indeg[v] += 1
        outs[x].append(v)
    stack = [v for v in range(d.n) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for w in outs[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == d.n
