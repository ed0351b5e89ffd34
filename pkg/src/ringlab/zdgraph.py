"""Directed zero-divisor graphs and the quantities defined on them.

The graph of a ring has the nonzero one-sided zero-divisors as vertices
and an edge x -> y whenever x != y and xy = 0. Squares that vanish are
kept as a separate loop set: sink and source determination and all
distances use the loop-free (simple) graph, while degree queries can
include loops on request. Everything downstream (verification, CLI
export) reads from here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InternalInvariantViolation, NotLeftIdentity, VertexNotInGraph
from .rings import FiniteRing, element_sets

Infinite = float


@dataclass(frozen=True)
class ZdGraph:
    """Immutable directed graph with loops stored out of band.

    ring is None for hand-built graphs; adjacency maps hold sorted
    tuples and exist for every vertex.
    """

    vertices: tuple[int, ...]
    out_adj: dict[int, tuple[int, ...]]
    in_adj: dict[int, tuple[int, ...]]
    loops: frozenset[int]
    ring: FiniteRing | None = None

    @classmethod
    def from_edges(cls, vertices, edges, loops=()) -> "ZdGraph":
        verts = tuple(sorted(set(vertices)))
        vset = set(verts)
        out: dict[int, list[int]] = {v: [] for v in verts}
        inn: dict[int, list[int]] = {v: [] for v in verts}
        for x, y in edges:
            if x not in vset or y not in vset:
                raise VertexNotInGraph(f"edge ({x}, {y}) leaves the vertex set")
            if x == y:
                raise InternalInvariantViolation("loops are passed separately, not as edges")
            out[x].append(y)
            inn[y].append(x)
        if not set(loops) <= vset:
            raise VertexNotInGraph(f"loops {sorted(loops)} leave the vertex set")
        return cls(
            vertices=verts,
            out_adj={v: tuple(sorted(set(out[v]))) for v in verts},
            in_adj={v: tuple(sorted(set(inn[v]))) for v in verts},
            loops=frozenset(loops),
        )

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in self.vertices for y in self.out_adj[x]]

    def __contains__(self, x: int) -> bool:
        return x in self.out_adj


def build_graph(ring: FiniteRing) -> ZdGraph:
    """The directed zero-divisor graph of a ring."""
    sets = element_sets(ring)
    verts = tuple(sorted(sets.zero_divisors))
    mul = ring.mul
    out: dict[int, tuple[int, ...]] = {}
    inn: dict[int, list[int]] = {v: [] for v in verts}
    for x in verts:
        row = mul[x]
        nbrs = tuple(y for y in verts if y != x and row[y] == 0)
        out[x] = nbrs
        for y in nbrs:
            inn[y].append(x)
    loops = frozenset(x for x in verts if mul[x][x] == 0)
    return ZdGraph(
        vertices=verts,
        out_adj=out,
        in_adj={v: tuple(inn[v]) for v in verts},
        loops=loops,
        ring=ring,
    )


class DegreeReport(NamedTuple):
    out_simple: int
    in_simple: int
    has_loop: bool


def degree_report(graph: ZdGraph, x: int) -> DegreeReport:
    if x not in graph:
        raise VertexNotInGraph(f"{x} is not a vertex")
    return DegreeReport(
        out_simple=len(graph.out_adj[x]),
        in_simple=len(graph.in_adj[x]),
        has_loop=x in graph.loops,
    )


def sinks(graph: ZdGraph) -> list[int]:
    """Vertices with positive in-degree and zero out-degree, loops aside."""
    return [v for v in graph.vertices if graph.in_adj[v] and not graph.out_adj[v]]


def sources(graph: ZdGraph) -> list[int]:
    return [v for v in graph.vertices if graph.out_adj[v] and not graph.in_adj[v]]


@dataclass(frozen=True)
class DistanceMatrix:
    """Directed distances over the simple graph; missing pairs are infinite."""

    vertices: tuple[int, ...]
    finite: dict[tuple[int, int], int]

    def d(self, x: int, y: int) -> int | Infinite:
        if x == y:
            return 0
        return self.finite.get((x, y), math.inf)

    @property
    def max_finite(self) -> int:
        return max(self.finite.values(), default=0)

    @property
    def diameter(self) -> int | Infinite:
        n = len(self.vertices)
        if len(self.finite) < n * (n - 1):
            return math.inf
        return self.max_finite

    def all_finite(self) -> bool:
        n = len(self.vertices)
        return len(self.finite) == n * (n - 1)


def distances(graph: ZdGraph) -> DistanceMatrix:
    """All-pairs BFS distances between distinct vertices."""
    finite: dict[tuple[int, int], int] = {}
    for s in graph.vertices:
        depth = {s: 0}
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for y in graph.out_adj[x]:
                    if y not in depth:
                        depth[y] = d
                        nxt.append(y)
            frontier = nxt
        for t, dist in depth.items():
            if t != s:
                finite[(s, t)] = dist
    return DistanceMatrix(vertices=graph.vertices, finite=finite)


def strongly_connected(graph: ZdGraph) -> bool:
    """True iff every ordered vertex pair is joined by a directed path.

    Empty and single-vertex graphs are vacuously connected.
    """
    verts = graph.vertices
    if len(verts) <= 1:
        return True
    for adj in (graph.out_adj, graph.in_adj):
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(verts):
            return False
    return True


def weakly_connected(graph: ZdGraph) -> bool:
    verts = graph.vertices
    if len(verts) <= 1:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        x = stack.pop()
        for y in graph.out_adj[x] + graph.in_adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def clique_number(graph: ZdGraph) -> int:
    """Largest vertex set whose distinct pairs are adjacent both ways."""
    verts = graph.vertices
    mutual = {v: set() for v in verts}
    for x in verts:
        for y in graph.out_adj[x]:
            if x in graph.out_adj[y]:
                mutual[x].add(y)
    best = 0

    def expand(r_size: int, candidates: set, excluded: set) -> None:
        nonlocal best
        if not candidates and not excluded:
            best = max(best, r_size)
            return
        if r_size + len(candidates) <= best:
            return
        pivot = max(candidates | excluded, key=lambda u: len(mutual[u] & candidates))
        for v in sorted(candidates - mutual[pivot]):
            expand(r_size + 1, candidates & mutual[v], excluded & mutual[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand(0, set(verts), set())
    return best


def is_network(graph: ZdGraph) -> bool:
    """Exactly one sink k and one source c, with c -> v and v -> k edges.

    c must have an edge to every other vertex and every other vertex an
    edge to k.
    """
    sk = sinks(graph)
    sc = sources(graph)
    if len(sk) != 1 or len(sc) != 1:
        return False
    k, c = sk[0], sc[0]
    for v in graph.vertices:
        if v != c and v not in graph.out_adj[c]:
            return False
        if v != k and k not in graph.out_adj[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# algebraic endpoint sets


def strongly_right_invertible(ring: FiniteRing) -> frozenset[int]:
    """Elements with a unique right inverse relative to every left identity.

    Empty when the ring has no proper left identity.
    """
    sets = element_sets(ring)
    if sets.two_sided_identity is not None or not sets.left_identities:
        return frozenset()
    ids = sorted(sets.left_identities)
    out = set()
    for r in range(1, ring.order):
        row = ring.mul[r]
        if all(sum(1 for s in range(ring.order) if row[s] == e) == 1 for e in ids):
            out.add(r)
    return frozenset(out)


def strongly_left_invertible(ring: FiniteRing) -> frozenset[int]:
    """Dual of strongly_right_invertible, relative to right identities."""
    sets = element_sets(ring)
    if sets.two_sided_identity is not None or not sets.right_identities:
        return frozenset()
    ids = sorted(sets.right_identities)
    out = set()
    for r in range(1, ring.order):
        if all(sum(1 for s in range(ring.order) if ring.mul[s][r] == e) == 1 for e in ids):
            out.add(r)
    return frozenset(out)


@dataclass(frozen=True)
class EndpointSets:
    """Graph endpoints next to their algebraic counterparts."""

    sinks: frozenset[int]
    sources: frozenset[int]
    inv_r: frozenset[int]
    inv_l: frozenset[int]
    middle: frozenset[int]


def endpoint_sets(ring: FiniteRing, graph: ZdGraph) -> EndpointSets:
    """Compute endpoint sets and cross-check graph against algebra.

    For rings with at least 5 elements the graph sinks must equal
    Z_r - Z_l and the sources Z_l - Z_r; disagreement is an internal
    bug by the supporting theory. Smaller rings genuinely deviate, so
    the check is skipped there.
    """
    sets = element_sets(ring)
    graph_sinks = frozenset(sinks(graph))
    graph_sources = frozenset(sources(graph))
    alg_sinks = frozenset(sets.right_zero_divisors - sets.left_zero_divisors)
    alg_sources = frozenset(sets.left_zero_divisors - sets.right_zero_divisors)
    if ring.order >= 5:
        if graph_sinks != alg_sinks:
            raise InternalInvariantViolation(
                f"sink sets disagree: graph {sorted(graph_sinks)} vs algebra {sorted(alg_sinks)}"
            )
        if graph_sources != alg_sources:
            raise InternalInvariantViolation(
                f"source sets disagree: graph {sorted(graph_sources)} vs algebra {sorted(alg_sources)}"
            )
    return EndpointSets(
        sinks=graph_sinks,
        sources=graph_sources,
        inv_r=strongly_right_invertible(ring),
        inv_l=strongly_left_invertible(ring),
        middle=frozenset(sets.right_zero_divisors & sets.left_zero_divisors),
    )


class SemigroupCheck(NamedTuple):
    closed: bool
    cancellative: bool
    witness: tuple | None


def semigroup_closure_check(subset, ring: FiniteRing, side: str) -> SemigroupCheck:
    """Is the subset a multiplicative semigroup, cancellative on one side.

    side selects the cancellation law: left means ax = ay forces x = y,
    right means xa = ya forces x = y, quantified over the subset. The
    first counterexample found is returned as the witness.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be left or right, not {side!r}")
    members = sorted(set(subset))
    mset = set(members)
    mul = ring.mul
    for a in members:
        for b in members:
            if mul[a][b] not in mset:
                return SemigroupCheck(False, False, (a, b, mul[a][b]))
    for a in members:
        for x in members:
            for y in members:
                if x >= y:
                    continue
                if side == "left" and mul[a][x] == mul[a][y]:
                    return SemigroupCheck(True, False, (a, x, y))
                if side == "right" and mul[x][a] == mul[y][a]:
                    return SemigroupCheck(True, False, (a, x, y))
    return SemigroupCheck(True, True, None)


# ---------------------------------------------------------------------------
# the edge-count formula


class EdgeCountComparison(NamedTuple):
    claimed: int
    actual: int
    parts: dict


def _bipartite_edge_count(ring: FiniteRing, left, right, convention: str) -> int:
    count = 0
    for m in left:
        row = ring.mul[m]
        for n in right:
            if m == n:
                if convention == "loop" and row[n] == 0:
                    count += 1
            elif row[n] == 0:
                count += 1
    return count


def claimed_edge_count(ring: FiniteRing, e: int, convention: str = "simple") -> EdgeCountComparison:
    """Evaluate the decomposition edge formula against the actual count.

    claimed = |I| (|I| - 1 + E(R_e*, I_e*) + E(R_e*, R_e* (+) I_e*)
              + (2 - |I|) E(R_e)), with E(M, N) the number of ordered
    zero-product pairs from M to N. Under convention "simple" loops are
    excluded everywhere; under "loop" self-pairs with square zero count
    in both the parts and the actual total.
    """
    if convention not in ("simple", "loop"):
        raise ValueError(f"convention must be simple or loop, not {convention!r}")
    mul = ring.mul
    if not 0 <= e < ring.order or any(mul[e][x] != x for x in ring.elements):
        raise NotLeftIdentity(f"{e} is not a left identity")
    i_e = [a for a in ring.elements if mul[a][e] == 0]
    r_e = [a for a in ring.elements if mul[a][e] == a]
    i_star = [a for a in i_e if a != 0]
    r_star = [a for a in r_e if a != 0]
    k_set = sorted({ring.add[x][y] for x in r_star for y in i_star})
    e1 = _bipartite_edge_count(ring, r_star, i_star, convention)
    e2 = _bipartite_edge_count(ring, r_star, k_set, convention)
    from .builders import subring  # late import; builders depends on rings only

    r_e_ring = subring(ring, r_e, label="R_e")
    sub_graph = build_graph(r_e_ring)
    e3 = len(sub_graph.edges())
    if convention == "loop":
        e3 += len(sub_graph.loops)
    size_i = len(i_e)
    claimed = size_i * (size_i - 1 + e1 + e2 + (2 - size_i) * e3)
    graph = build_graph(ring)
    actual = len(graph.edges())
    if convention == "loop":
        actual += len(graph.loops)
    return EdgeCountComparison(
        claimed=claimed,
        actual=actual,
        parts={
            "ideal_size": size_i,
            "e_re_ie": e1,
            "e_re_k": e2,
            "e_re_internal": e3,
            "convention": convention,
        },
    )


# ---------------------------------------------------------------------------
# export


def graph_to_json_dict(graph: ZdGraph) -> dict:
    dist = distances(graph)
    diam = dist.diameter
    return {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges()],
        "loops": sorted(graph.loops),
        "sinks": sinks(graph),
        "sources": sources(graph),
        "diameter": None if diam == math.inf else diam,
        "max_finite_distance": dist.max_finite,
        "clique_number": clique_number(graph),
    }


def graph_to_dot(graph: ZdGraph) -> str:
    """DOT rendering; sinks are lightcoral, sources palegreen."""
    sink_set = set(sinks(graph))
    source_set = set(sources(graph))
    names = None
    if graph.ring is not None and graph.ring.element_names is not None:
        names = graph.ring.element_names
    lines = ["digraph zd {"]
    for v in graph.vertices:
        label = names[v] if names else str(v)
        attrs = [f'label="{label}"']
        if v in sink_set:
            attrs.append('style=filled fillcolor=lightcoral')
        elif v in source_set:
            attrs.append('style=filled fillcolor=palegreen')
        lines.append(f'  n{v} [{" ".join(attrs)}];')
    for x, y in graph.edges():
        lines.append(f"  n{x} -> n{y};")
    for x in sorted(graph.loops):
        lines.append(f"  n{x} -> n{x};")
    lines.append("}")
    return "\n".join(lines) + "\n"
