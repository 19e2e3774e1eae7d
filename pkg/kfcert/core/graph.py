# kfcert/core/graph.py
"""
Graph value type
================

Simple undirected graphs stored as one Python integer per vertex: bit ``v``
of ``rows[u]`` is set iff ``{u, v}`` is an edge. Neighbourhood intersection,
degree and complement are therefore single big-int operations.

``Graph`` values are immutable. Every "mutating" operation returns a new
graph, so instances can be shared freely across worker processes.
"""

from __future__ import annotations

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .exceptions import InvalidGraphError

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


def list_to_bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_rows", "_edge_count")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise InvalidGraphError(f"vertex count must be nonnegative, got {n}")
        if len(rows) != n:
            raise InvalidGraphError(f"expected {n} adjacency rows, got {len(rows)}")
        self._n = n
        self._rows: Tuple[int, ...] = tuple(rows)
        if __debug__:
            self._check_invariants()
        self._edge_count = sum(row.bit_count() for row in self._rows) // 2

    def _check_invariants(self) -> None:
        full = (1 << self._n) - 1
        for u, row in enumerate(self._rows):
            if row & ~full:
                raise InvalidGraphError(f"row {u} references a vertex >= {self._n}")
            if (row >> u) & 1:
                raise InvalidGraphError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not (self._rows[v] >> u) & 1:
                    raise InvalidGraphError(f"asymmetric adjacency between {u} and {v}")

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbors(self, u: int) -> List[int]:
        return bits_to_list(self._rows[u])

    def neighbor_mask(self, u: int) -> int:
        return self._rows[u]

    def degree(self, u: int) -> int:
        return self._rows[u].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self._rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> List[Edge]:
        """All edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        out: List[Edge] = []
        for u, row in enumerate(self._rows):
            out.extend((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))
        return out

    def non_edges(self) -> List[Edge]:
        full = self.vertex_mask
        out: List[Edge] = []
        for u, row in enumerate(self._rows):
            missing = full & ~row & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in iter_bits(missing))
        return out

    # -- derived graphs ----------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        return add_edge(self, u, v)

    def remove_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self._n, rows)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled ``0..len-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InvalidGraphError("induced_subgraph received duplicate vertices")
        rows = []
        for v in vertices:
            self._check_vertex(v)
            row = 0
            for w in iter_bits(self._rows[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph(len(vertices), rows)

    def delete_vertices(self, removed: Iterable[int]) -> "Graph":
        gone = list_to_bits(removed)
        return self.induced_subgraph([v for v in range(self._n) if not (gone >> v) & 1])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of old vertex ``v``."""
        if sorted(perm) != list(range(self._n)):
            raise InvalidGraphError("relabel expects a permutation of 0..n-1")
        rows = [0] * self._n
        for u, row in enumerate(self._rows):
            rows[perm[u]] = list_to_bits(perm[v] for v in iter_bits(row))
        return Graph(self._n, rows)

    def components(self, within: Optional[int] = None) -> List[int]:
        """Connected components (as bit masks) of the subgraph induced by ``within``."""
        remaining = self.vertex_mask if within is None else within
        comps: List[int] = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self._rows[v]
                reach &= remaining & ~comp
                comp |= reach
                frontier = reach
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self, within: Optional[int] = None) -> bool:
        return len(self.components(within)) <= 1

    def is_spanning_subgraph_of(self, other: "Graph") -> bool:
        return self._n == other._n and all(
            row & ~big == 0 for row, big in zip(self._rows, other._rows)
        )

    # -- checks --------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InvalidGraphError(f"vertex {v} out of range for n={self._n}")

    def _check_pair(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InvalidGraphError(f"loop at vertex {u} is not allowed")

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self._edge_count})"


# -- constructors -------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def add_edge(graph: Graph, u: int, v: int) -> Graph:
    """Return ``graph + uv``; adding an existing edge returns an equal graph."""
    graph._check_pair(u, v)
    if graph.has_edge(u, v):
        return graph
    rows = list(graph.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(graph.n, rows)


def from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidGraphError(f"loop at vertex {u} is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << u) for u in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def circulant_graph(n: int, offsets: Iterable[int]) -> Graph:
    """Vertex ``i`` is joined to ``i ± d (mod n)`` for every offset ``d``."""
    edges = []
    for d in offsets:
        if d % n == 0:
            continue
        edges.extend((i, (i + d) % n) for i in range(n))
    return from_edges(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``G + H``: the vertices of ``h`` are shifted by ``g.n``."""
    shift = g.n
    return Graph(g.n + h.n, list(g.rows) + [row << shift for row in h.rows])


def join(g: Graph, h: Graph) -> Graph:
    """``G ∨ H``: disjoint union plus every edge between the two sides."""
    shift = g.n
    h_block = ((1 << h.n) - 1) << shift
    g_block = (1 << g.n) - 1
    rows = [row | h_block for row in g.rows] + [(row << shift) | g_block for row in h.rows]
    return Graph(g.n + h.n, rows)


def complement(graph: Graph) -> Graph:
    full = graph.vertex_mask
    return Graph(graph.n, [full & ~row & ~(1 << u) for u, row in enumerate(graph.rows)])
