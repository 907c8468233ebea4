"""Directed multigraph with stable edge identifiers.

Edge ids survive contraction and vertex deletion, which is what lets flow
values transfer between a graph and its minors. Loops and parallel edges are
ordinary edges. Graphs are immutable after construction: every "mutation"
returns a new graph (the recursive construction needs the old and new graph
alive at the same time).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import InputError


class Edge(NamedTuple):
    id: int
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class ContractionMap:
    """How the vertices of G map onto the vertices of G/S.

    ``vertex_image[v]`` is the vertex of G/S that v was merged into; two
    vertices share an image iff a path of S-edges joins them. ``surviving``
    lists the edge ids of G/S (= E(G) minus S), in ascending order.
    """

    vertex_image: tuple[int, ...]
    contracted: frozenset[int]
    surviving: tuple[int, ...]


class Multigraph:
    __slots__ = ("n", "_edges", "_adj")

    def __init__(self, n: int, edges: dict[int, tuple[int, int]]):
        # edges: id -> (tail, head), iteration order ascending by id
        self.n = n
        self._edges = edges
        self._adj = None

    @classmethod
    def build(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Multigraph":
        """Build a graph from (tail, head) pairs; ids are assigned 0..m-1 in order."""
        edges: dict[int, tuple[int, int]] = {}
        for i, (t, h) in enumerate(arcs):
            if not (0 <= t < n and 0 <= h < n):
                raise InputError(f"edge {i}: endpoint out of range ({t}, {h}) with n={n}")
            edges[i] = (t, h)
        return cls(n, edges)

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edge_ids(self) -> Iterable[int]:
        return self._edges.keys()

    def has_edge(self, eid: int) -> bool:
        return eid in self._edges

    def edge(self, eid: int) -> Edge:
        try:
            t, h = self._edges[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid}") from None
        return Edge(eid, t, h)

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._edges[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid}") from None

    def edges(self) -> Iterator[Edge]:
        for eid, (t, h) in self._edges.items():
            yield Edge(eid, t, h)

    def vertices(self) -> range:
        return range(self.n)

    def incidence(self, v: int) -> list[tuple[int, int]]:
        """All (edge id, direction) pairs at v: +1 outgoing, -1 incoming.

        A loop at v appears twice, once with each direction.
        """
        self._check_vertex(v)
        out = []
        for eid, (t, h) in self._edges.items():
            if t == v:
                out.append((eid, +1))
            if h == v:
                out.append((eid, -1))
        return out

    def undirected_adj(self) -> list[list[tuple[int, int]]]:
        """Per-vertex (edge id, other endpoint) lists, loops excluded, by edge id.

        Cached; this is the workhorse structure for all traversals.
        """
        if self._adj is None:
            adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
            for eid, (t, h) in self._edges.items():
                if t != h:
                    adj[t].append((eid, h))
                    adj[h].append((eid, t))
            self._adj = adj
        return self._adj

    def loops_at(self, v: int) -> list[int]:
        return [eid for eid, (t, h) in self._edges.items() if t == v and h == v]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"unknown vertex id {v} (n={self.n})")

    # -- derived graphs --------------------------------------------------

    def contract(self, s: Iterable[int]) -> tuple["Multigraph", ContractionMap]:
        """Contract the edge set S, keeping surviving edge ids and orientations.

        One result vertex per connected component of the spanning subgraph
        (V, S); result vertices are numbered by smallest original member.
        Edges whose remapped endpoints coincide become loops and are kept.
        """
        s = frozenset(s)
        for eid in s:
            if eid not in self._edges:
                raise InputError(f"unknown edge id {eid} in contraction set")
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for eid in s:
            t, h = self._edges[eid]
            rt, rh = find(t), find(h)
            if rt != rh:
                if rt < rh:
                    parent[rh] = rt
                else:
                    parent[rt] = rh
        image = [0] * self.n
        next_id = 0
        assigned: dict[int, int] = {}
        for v in range(self.n):
            r = find(v)
            if r not in assigned:
                assigned[r] = next_id
                next_id += 1
            image[v] = assigned[r]
        edges = {
            eid: (image[t], image[h])
            for eid, (t, h) in self._edges.items()
            if eid not in s
        }
        cmap = ContractionMap(
            vertex_image=tuple(image),
            contracted=s,
            surviving=tuple(edges.keys()),
        )
        return Multigraph(next_id, edges), cmap

    def reverse_edge(self, eid: int) -> "Multigraph":
        """Swap tail and head of one edge."""
        t, h = self.endpoints(eid)
        edges = dict(self._edges)
        edges[eid] = (h, t)
        return Multigraph(self.n, edges)

    def delete_vertex(self, u: int) -> "Multigraph":
        """Remove u and every edge at u; vertices above u shift down by one.

        Surviving edges keep their ids, so results on G - u (paths, bridges)
        transfer back to G directly by edge id.
        """
        self._check_vertex(u)
        edges = {
            eid: (t - (t > u), h - (h > u))
            for eid, (t, h) in self._edges.items()
            if t != u and h != u
        }
        return Multigraph(self.n - 1, edges)

    # -- misc ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._edges.items()))))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={dict(self._edges)!r})"
