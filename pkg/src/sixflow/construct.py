"""Recursive construction of a nowhere-zero Z2 x Z3 flow whose f2 component
vanishes on every edge at a chosen root vertex.

The recursion contracts pieces of the graph, solves the smaller instance,
then extends the flow back over the contracted edges. Two cases:

* cut case - the graph minus the root has a bridge e; the rest of the edges
  split into two sides, each side is contracted away in turn, and the two
  sub-flows are glued along e (negating one f3 component if they disagree).
* bridgeless case - pick two root edges into the same component of G - root,
  join their far endpoints by two edge-disjoint paths, contract the path
  union and then the root-to-path edges, solve, and extend back in stages:
  nonzero f3 on the parallel root edges, f3 by conservation on the path
  union, then f2 = 1 on the whole path union (every path-union vertex has
  even degree, so mod-2 conservation survives).

Recursion is driven by an explicit stack of generators, so depth is bounded
only by memory, never by the interpreter call stack.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .connectivity import (
    bridges,
    components,
    is_2_edge_connected,
    partition_at_bridge,
    require_2_edge_connected,
    two_edge_disjoint_paths,
)
from .errors import InputError, InternalCheckError
from .flows import GroupFlow, negate_f3, support, verify_flow, verify_rooted
from .multigraph import Multigraph


@dataclass(frozen=True)
class BaseStep:
    depth: int
    loop_edges: int


@dataclass(frozen=True)
class CutStep:
    depth: int
    bridge: int
    side1: frozenset[int]
    side2: frozenset[int]
    contracted_sizes: tuple[int, int]


@dataclass(frozen=True)
class BridgelessStep:
    depth: int
    root_edges: tuple[int, int]
    path_edges: frozenset[int]
    spoke_edges: frozenset[int]
    contracted_sizes: tuple[int, int]


Step = Union[BaseStep, CutStep, BridgelessStep]


@dataclass
class ConstructionTrace:
    """Audit log of the recursion: one record per instance solved."""

    steps: list[Step] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return max((s.depth for s in self.steps), default=0)


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InternalCheckError(message)


def solve(
    g: Multigraph, u: int, debug: bool = False
) -> tuple[GroupFlow, ConstructionTrace]:
    """Construct a nowhere-zero Z2 x Z3 flow on g with f2 = 0 across delta(u).

    Deterministic in (g, u). Raises StructuralError naming a bridge or a
    disconnection when g is not 2-edge-connected. With debug=True every
    intermediate flow is re-verified and every recursed instance is checked
    for 2-edge-connectivity.
    """
    g._check_vertex(u)
    require_2_edge_connected(g)
    trace = ConstructionTrace()

    # Trampoline: each task is a generator that yields subinstances and
    # receives their flows back, so recursion depth costs no call stack.
    stack = [_solve_task(g, u, 0, trace, debug)]
    result: Optional[GroupFlow] = None
    while stack:
        try:
            child = stack[-1].send(result)
        except StopIteration as done:
            stack.pop()
            result = done.value
        else:
            stack.append(child)
            result = None
    assert result is not None
    if debug:
        _check(verify_rooted(g, u, result), "final flow fails the rooted check")
    return result, trace


def _solve_task(g: Multigraph, u: int, depth: int, trace, debug: bool):
    if g.n == 1:
        # Base case: every edge is a loop; (0, 1) is nonzero with f2 = 0.
        trace.steps.append(BaseStep(depth=depth, loop_edges=g.m))
        return {eid: (0, 1) for eid in g.edge_ids}
    gu = g.delete_vertex(u)
    cut_edges = bridges(gu)
    if cut_edges:
        cut = partition_at_bridge(g, u, gu, min(cut_edges))
        flow = yield from _cut_case(g, u, cut, depth, trace, debug)
    else:
        flow = yield from _bridgeless_case(g, u, gu, depth, trace, debug)
    if debug:
        _check(verify_rooted(g, u, flow), f"flow fails the rooted check at depth {depth}")
    return flow


def _cut_case(g, u, cut, depth, trace, debug):
    eid, side1, side2 = cut
    e1: set[int] = set()
    e2: set[int] = set()
    for other, (t, h) in g._edges.items():
        if other == eid:
            continue
        if t == u and h == u:
            e1.add(other)  # loops at the root ride with side 1
            continue
        v = t if t != u else h
        if v in side1:
            _check(h == u or t == u or (t in side1 and h in side1),
                   "cut-case edge crosses the partition")
            e1.add(other)
        else:
            _check(v in side2 and (h == u or t == u or (t in side2 and h in side2)),
                   "cut-case edge crosses the partition")
            e2.add(other)

    g1, map1 = g.contract(e1)
    g2, map2 = g.contract(e2)
    r1 = map1.vertex_image[u]
    r2 = map2.vertex_image[u]
    _check(g1.n == len(side2) + 1, "side 1 did not contract to a single vertex")
    _check(g2.n == len(side1) + 1, "side 2 did not contract to a single vertex")
    _check(g1.n < g.n and g2.n < g.n, "cut case failed to shrink the instance")
    if debug:
        _check(is_2_edge_connected(g1) and is_2_edge_connected(g2),
               "cut-case contraction broke 2-edge-connectivity")
    trace.steps.append(CutStep(
        depth=depth, bridge=eid, side1=side1, side2=side2,
        contracted_sizes=(len(e1), len(e2)),
    ))

    fa = yield _solve_task(g1, r1, depth + 1, trace, debug)  # covers e2 + {eid}
    fb = yield _solve_task(g2, r2, depth + 1, trace, debug)  # covers e1 + {eid}

    _check(fa[eid][0] == 0 == fb[eid][0],
           "cut edge carries nonzero f2 from a subflow")
    if fa[eid][1] != fb[eid][1]:
        fa = negate_f3(fa)
    _check(fa[eid][1] == fb[eid][1] != 0, "cut edge f3 values failed to align")
    flow = fb
    flow.update(fa)
    return flow


def _bridgeless_case(g, u, gu, depth, trace, debug):
    to_g = lambda v: v if v < u else v + 1
    to_gu = lambda v: v if v < u else v - 1

    comps = components(gu)
    spokes_per_comp = [0] * len(comps)
    comp_of = {}
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    root_edges = []  # non-loop edges at u, ascending id
    for eid, (t, h) in g._edges.items():
        if (t == u) != (h == u):
            root_edges.append((eid, to_gu(h if t == u else t)))
    root_edges.sort()
    for eid, w in root_edges:
        spokes_per_comp[comp_of[w]] += 1
    _check(bool(root_edges) and all(k >= 2 for k in spokes_per_comp),
           "a component of G - root has fewer than two edges to the root")

    e_first, x = root_edges[0]
    target_comp = comp_of[x]
    e_second, x2 = next(
        ((eid, w) for eid, w in root_edges[1:] if comp_of[w] == target_comp),
        (-1, -1),
    )
    _check(e_second >= 0, "no second root edge into the chosen component")

    if x == x2:
        path_edges: frozenset[int] = frozenset()
        h_vertices = {to_g(x)}
    else:
        p1, p2 = two_edge_disjoint_paths(gu, x, x2)
        path_edges = frozenset(eid for eid, _ in p1 + p2)
        h_vertices = {to_g(x), to_g(x2)}
        for eid in path_edges:
            t, h = g.endpoints(eid)
            h_vertices.add(t)
            h_vertices.add(h)
        deg = {}
        for eid in path_edges:
            t, h = g.endpoints(eid)
            deg[t] = deg.get(t, 0) + 1
            deg[h] = deg.get(h, 0) + 1
        _check(all(d % 2 == 0 for d in deg.values()),
               "path union has a vertex of odd degree")
    _check(u not in h_vertices, "path union touches the root")

    spokes = frozenset(
        eid for eid, w in root_edges if to_g(w) in h_vertices
    )
    _check(len(spokes) >= 2, "fewer than two root edges reach the path union")

    g1, map1 = g.contract(path_edges)
    u_in_1 = map1.vertex_image[u]
    hub = map1.vertex_image[min(h_vertices)]
    _check(all(map1.vertex_image[v] == hub for v in h_vertices),
           "path union did not contract to a single vertex")
    _check(u_in_1 != hub, "root merged into the path union")
    for eid in spokes:
        t, h = g1.endpoints(eid)
        _check({t, h} == {u_in_1, hub}, "spoke edges are not a parallel class")

    g2, map2 = g1.contract(spokes)
    u2 = map2.vertex_image[u_in_1]
    _check(g2.n < g.n, "bridgeless case failed to shrink the instance")
    if debug:
        _check(is_2_edge_connected(g1) and is_2_edge_connected(g2),
               "bridgeless-case contraction broke 2-edge-connectivity")
    trace.steps.append(BridgelessStep(
        depth=depth, root_edges=(e_first, e_second), path_edges=path_edges,
        spoke_edges=spokes, contracted_sizes=(len(path_edges), len(spokes)),
    ))

    flow = yield _solve_task(g2, u2, depth + 1, trace, debug)

    # Stage 1: nonzero f3 across the parallel spoke class, f2 = 0 there.
    residual = 0
    for eid, (t, h) in g1._edges.items():
        if eid in spokes:
            continue
        if h == hub and t != hub:
            residual += flow[eid][1]
        elif t == hub and h != hub:
            residual -= flow[eid][1]
    ordered = sorted(spokes)
    signs = [1 if g1.endpoints(eid)[1] == hub else -1 for eid in ordered]
    values = extend_nonzero_parallel((-residual) % 3, len(ordered), signs)
    for eid, val in zip(ordered, values):
        flow[eid] = (0, val)

    if debug:
        _check(verify_flow(g1, flow), "spoke extension broke conservation")
    for eid, (t, h) in g1._edges.items():
        if t in (u_in_1, hub) or h in (u_in_1, hub):
            _check(flow[eid][0] == 0,
                   "f2 support touches the root or the contracted path vertex")

    # Stage 2: f3 over the path union by conservation, then f2 = 1 on it.
    if path_edges:
        f3_known = {eid: p[1] for eid, p in flow.items()}
        f3_full = extend_flow_over_contraction(g, path_edges, f3_known, modulus=3)
        for eid in path_edges:
            flow[eid] = (1, f3_full[eid])
    _check(all(flow[eid][1] != 0 for eid in spokes), "a spoke edge lost its f3 value")
    if debug:
        _check(verify_flow(g, flow), "path-union extension broke conservation")
    return flow


def extend_nonzero_parallel(
    d: int, k: int, orientations: Sequence[int]
) -> list[int]:
    """Nonzero mod-3 values for k >= 2 parallel edges with given signed sum.

    orientations holds +1/-1 per edge; the returned values v satisfy
    sum(sign * v) = d (mod 3) with every v in {1, 2}. Deterministic: in the
    sign-normalised view all values start at 1 and the first few flip to 2.
    """
    if k < 2:
        raise InputError("need at least two parallel edges to stay nonzero")
    if len(orientations) != k:
        raise InputError("orientation count does not match edge count")
    w = [1] * k
    delta = (d - k) % 3
    if delta == 1:
        w[0] = 2
    elif delta == 2:
        w[0] = 2
        w[1] = 2
    return [v if s > 0 else 3 - v for v, s in zip(w, orientations)]


def extend_flow_over_contraction(
    g: Multigraph,
    contracted: Iterable[int],
    known: dict[int, int],
    modulus: int = 3,
    preset: Optional[dict[int, int]] = None,
) -> dict[int, int]:
    """Extend a flow on G/S to all of G (values mod ``modulus``).

    ``known`` must cover every edge outside S and form a flow on G/S; some
    S-edges may carry preset values (chords). The rest are fixed through a
    spanning forest of (V, S): non-tree edges get 0, tree edges are forced
    leaf-upward by conservation. Assigned values may legitimately be zero.
    """
    contracted = frozenset(contracted)
    total = dict(known)
    if preset:
        total.update(preset)

    exc = [0] * g.n
    for eid, (t, h) in g._edges.items():
        if eid in contracted and eid not in total:
            continue
        if t == h:
            continue
        val = total[eid]
        exc[h] += val
        exc[t] -= val

    # Spanning forest of (V, S) by BFS from the smallest vertex of each part.
    adj: dict[int, list[tuple[int, int]]] = {}
    todo: list[int] = []
    for eid in sorted(contracted):
        if eid in total:
            continue
        t, h = g.endpoints(eid)
        if t == h:
            total[eid] = 0  # contracted loop carries no conservation demand
            continue
        adj.setdefault(t, []).append((eid, h))
        adj.setdefault(h, []).append((eid, t))
        todo.append(eid)
    seen: set[int] = set()
    tree_edges: set[int] = set()
    parts: list[tuple[int, list[int], dict[int, int]]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        seen.add(start)
        order = [start]
        parent_edge: dict[int, int] = {}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for eid, w in adj[v]:
                if w in seen:
                    continue
                seen.add(w)
                parent_edge[w] = eid
                tree_edges.add(eid)
                order.append(w)
                queue.append(w)
        parts.append((start, order, parent_edge))
    for eid in todo:
        if eid not in tree_edges:
            total[eid] = 0  # chord: contributes nothing to any excess
    for start, order, parent_edge in parts:
        for v in reversed(order[1:]):
            eid = parent_edge[v]
            t, h = g.endpoints(eid)
            sign = 1 if h == v else -1
            val = (-sign * exc[v]) % modulus
            total[eid] = val
            exc[h] += val
            exc[t] -= val
        _check(exc[start] % modulus == 0,
               "contracted component has nonzero total excess")
    return total
