"""Finite posets, their bounded extension, purity, and maximal chains.

Elements are kept in a fixed linear-extension order: whenever x_i < x_j in
the poset, the index i is smaller than j.  ``build_poset`` accepts any
acyclic relation set and canonicalizes it (transitive reduction plus a
stable relabeling), so every other function can rely on that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import networkx as nx

from .errors import InputError, InternalInvariantError, LimitExceededError

DEFAULT_CHAIN_LIMIT = 10**6


@dataclass(frozen=True)
class Poset:
    """A finite poset given by its cover relations on linearly-extended indices."""

    labels: tuple
    covers: frozenset

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def _up(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for i, j in self.covers:
            out[i].append(j)
        return tuple(tuple(sorted(js)) for js in out)

    @cached_property
    def _down(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for i, j in self.covers:
            out[j].append(i)
        return tuple(tuple(sorted(js)) for js in out)

    def up_covers(self, i: int) -> tuple:
        return self._up[i]

    def minimals(self) -> tuple:
        return tuple(i for i in range(self.n) if not self._down[i])

    def maximals(self) -> tuple:
        return tuple(i for i in range(self.n) if not self._up[i])

    def cover_label_pairs(self) -> tuple:
        """Cover relations as (smaller, larger) label pairs, sorted by index."""
        return tuple((self.labels[i], self.labels[j]) for i, j in sorted(self.covers))


BOTTOM = 0


@dataclass(frozen=True)
class BoundedPoset:
    """The extension of a poset by a new bottom and top element.

    Vertices are integers: 0 is the bottom, 1..n are the poset elements in
    label order, n+1 is the top.  ``edges`` lists the Hasse edges in a fixed
    order: internal covers (lexicographic), then bottom edges, then top
    edges.  The empty poset degenerates to the single edge (bottom, top).
    """

    base: Poset
    edges: tuple

    @property
    def top(self) -> int:
        return self.base.n + 1

    def vertex_name(self, v: int) -> str:
        if v == BOTTOM:
            return "bot"
        if v == self.top:
            return "top"
        return str(self.base.labels[v - 1])


@dataclass(frozen=True)
class ChainPair:
    """Two element-disjoint maximal chains, stored as label tuples."""

    first: tuple
    second: tuple

    @property
    def lengths(self) -> tuple:
        # chain length counts cover steps, one less than the element count
        return (len(self.first) - 1, len(self.second) - 1)


def build_poset(names: Iterable[str], relations: Iterable[Sequence] = ()) -> Poset:
    """Canonical poset from element names and any set of strict relations.

    The relations may include comparisons implied by others; they are closed
    transitively, reduced back to covers, and the elements are renumbered by
    a stable linear extension (ties broken by input order).  Cycles and
    unknown names are rejected.
    """
    names = [str(x) for x in names]
    if len(set(names)) != len(names):
        raise InputError("element names must be distinct")
    index = {x: i for i, x in enumerate(names)}
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(len(names)))
    for pair in relations:
        a, b = pair
        a, b = str(a), str(b)
        for x in (a, b):
            if x not in index:
                raise InputError(f"relation mentions unknown element {x!r}")
        if a == b:
            raise InputError(f"relation {a!r} < {b!r} is reflexive, hence a cycle")
        digraph.add_edge(index[a], index[b])
    if not nx.is_directed_acyclic_graph(digraph):
        raise InputError("relations contain a cycle")
    reduced = nx.transitive_reduction(digraph)
    # lexicographic topological order over input positions = stable relabeling
    order = list(nx.lexicographical_topological_sort(reduced))
    position = {node: k for k, node in enumerate(order)}
    return Poset(
        labels=tuple(names[node] for node in order),
        covers=frozenset((position[u], position[v]) for u, v in reduced.edges),
    )


def bound(poset: Poset) -> BoundedPoset:
    """Bounded extension with its deterministic edge enumeration."""
    n = poset.n
    if n == 0:
        return BoundedPoset(poset, ((BOTTOM, 1),))
    internal = sorted((i + 1, j + 1) for i, j in poset.covers)
    bottom_edges = [(BOTTOM, i + 1) for i in poset.minimals()]
    top_edges = [(i + 1, n + 1) for i in poset.maximals()]
    return BoundedPoset(poset, tuple(internal + bottom_edges + top_edges))


def is_pure(poset: Poset) -> bool:
    """Whether every maximal chain has the same cardinality.

    Equivalent to the bounded extension being graded: ranks propagate from
    the bottom along cover edges, and purity fails exactly when two edge
    paths assign different ranks to the same vertex.
    """
    extension = bound(poset)
    ranks: list = [None] * (poset.n + 2)
    ranks[BOTTOM] = 0
    for u, v in sorted(extension.edges, key=lambda e: (e[1], e[0])):
        if ranks[u] is None:
            raise InternalInvariantError(f"vertex {u} reached before being ranked")
        candidate = ranks[u] + 1
        if ranks[v] is None:
            ranks[v] = candidate
        elif ranks[v] != candidate:
            return False
    return True


def maximal_chains(poset: Poset, limit: int = DEFAULT_CHAIN_LIMIT) -> list:
    """All maximal chains as index tuples, in depth-first enumeration order."""
    chains: list = []

    def extend(chain):
        ups = poset.up_covers(chain[-1])
        if not ups:
            if len(chains) >= limit:
                raise LimitExceededError(
                    f"maximal-chain enumeration exceeded the limit of {limit}"
                )
            chains.append(tuple(chain))
            return
        for w in ups:
            chain.append(w)
            extend(chain)
            chain.pop()

    for start in poset.minimals():
        extend([start])
    return chains


def disjoint_maximal_chain_pair(
    poset: Poset, limit: int = DEFAULT_CHAIN_LIMIT
) -> Optional[ChainPair]:
    """First element-disjoint pair of maximal chains, if any exists."""
    chains = maximal_chains(poset, limit)
    for a in range(len(chains)):
        first = set(chains[a])
        for b in range(a + 1, len(chains)):
            if first.isdisjoint(chains[b]):
                return ChainPair(
                    first=tuple(poset.labels[i] for i in chains[a]),
                    second=tuple(poset.labels[i] for i in chains[b]),
                )
    return None


def two_chains_poset(a: int, b: int) -> Poset:
    """Disjoint union of two chains with a and b cover steps each.

    The chains have a+1 and b+1 elements; a = b = 0 is the two-element
    antichain.
    """
    if a < 0 or b < 0:
        raise InputError("chain lengths must be nonnegative")
    xs = [f"x{i}" for i in range(a + 1)]
    ys = [f"y{i}" for i in range(b + 1)]
    relations = list(zip(xs, xs[1:])) + list(zip(ys, ys[1:]))
    return build_poset(xs + ys, relations)
