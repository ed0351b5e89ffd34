"""Mechanical verification of a catalog of claims about zero-divisor graphs.

Every claim is an executable checker run against concrete rings:
enumerated isomorphism-class representatives plus a family of built
rings that make the existence claims non-vacuous. A checker returns one
report per ring (or per family, for the worked examples) with verdict
pass, fail, not-applicable, or unreconciled.

Verdict policy: claims whose hypothesis a ring does not meet report
not-applicable; universally applicable claims whose inner implication
has an empty antecedent report pass (vacuously). A failed report always
carries the ring table and the witnessing elements so it can be
replayed. Unreconciled marks statements whose asserted numbers disagree
with the measured values under every supported reading; the details
hold both sides.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from time import perf_counter

from .builders import (
    cyclic_ring,
    decompose,
    direct_product,
    first_row_ring,
    full_matrix_ring,
    null_ring,
)
from .enumeration import opposite_ring, ring_classes
from .errors import InternalInvariantViolation
from .rings import FiniteRing, element_sets, left_annihilator, right_annihilator
from .zdgraph import (
    build_graph,
    claimed_edge_count,
    clique_number,
    degree_report,
    distances,
    is_network,
    semigroup_closure_check,
    sinks,
    sources,
    strongly_connected,
    strongly_left_invertible,
    strongly_right_invertible,
)

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_NA = "not-applicable"
VERDICT_UNRECONCILED = "unreconciled"


def _json_safe(value):
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_json_safe(v) for v in value)
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return value


@dataclass
class TheoremReport:
    claim: str
    scope: str
    verdict: str
    details: dict = field(default_factory=dict)
    seconds: float | None = None

    def to_json_dict(self) -> dict:
        # seconds is deliberately not serialized so that repeated runs
        # with the same configuration emit byte-identical output
        return {
            "claim": self.claim,
            "scope": self.scope,
            "verdict": self.verdict,
            "details": _json_safe(self.details),
        }


class RingContext:
    """Cached per-ring data shared by all checkers."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring

    @property
    def order(self) -> int:
        return self.ring.order

    @property
    def scope(self) -> str:
        return f"{self.ring.label or 'ring'} (order {self.ring.order})"

    @cached_property
    def sets(self):
        return element_sets(self.ring)

    @cached_property
    def graph(self):
        return build_graph(self.ring)

    @cached_property
    def dist(self):
        return distances(self.graph)

    @cached_property
    def sinks(self) -> frozenset[int]:
        return frozenset(sinks(self.graph))

    @cached_property
    def sources(self) -> frozenset[int]:
        return frozenset(sources(self.graph))

    @cached_property
    def inv_r(self) -> frozenset[int]:
        return strongly_right_invertible(self.ring)

    @cached_property
    def inv_l(self) -> frozenset[int]:
        return strongly_left_invertible(self.ring)

    @cached_property
    def op(self) -> "RingContext":
        return RingContext(opposite_ring(self.ring))


def _report(claim: str, ctx: RingContext, verdict: str, details: dict | None = None,
            witness: dict | None = None) -> TheoremReport:
    details = dict(details or {})
    if witness is not None:
        details["witness"] = witness
    if verdict == VERDICT_FAIL:
        details.setdefault("ring", ctx.ring.to_json_dict())
    return TheoremReport(claim=claim, scope=ctx.scope, verdict=verdict, details=details)


# ---------------------------------------------------------------------------
# graph shapes for small orders


def graph_shape(graph) -> str:
    """Classify the loop-free shape of a graph, for small-order catalogs.

    Recognized names: K<n> (complete, both directions), path3 (a mutual
    3-vertex path), outstar3 (one vertex pointing at the two others),
    instar3 (the reverse). Anything else encodes its edge list.
    """
    verts = list(graph.vertices)
    n = len(verts)
    edges = set(graph.edges())
    if all((x, y) in edges for x in verts for y in verts if x != y):
        return f"K{n}"
    if n == 3:
        mutual = {(x, y) for x, y in edges if (y, x) in edges and x < y}
        if len(edges) == 4 and len(mutual) == 2:
            (a1, b1), (a2, b2) = sorted(mutual)
            if len({a1, b1} & {a2, b2}) == 1:
                return "path3"
        if len(edges) == 2:
            starts = {x for x, _ in edges}
            ends = {y for _, y in edges}
            if len(starts) == 1 and len(ends) == 2:
                return "outstar3"
            if len(ends) == 1 and len(starts) == 2:
                return "instar3"
    body = ",".join(f"{x}>{y}" for x, y in sorted(edges))
    return f"other[{body}]"


SMALL_ORDER_SHAPES = {
    2: frozenset({"K0", "K1"}),
    3: frozenset({"K0", "K2"}),
    4: frozenset({"K0", "K1", "K2", "K3", "path3", "instar3", "outstar3"}),
}


# ---------------------------------------------------------------------------
# per-ring checkers


def check_lemma_2_1(ctx: RingContext, convention: str) -> TheoremReport:
    """Z_l subset of Z_r, and incoming arrows for edge tails, when every
    right identity is two-sided."""
    sets = ctx.sets
    if sets.proper_right_identities:
        return _report("Lemma2.1", ctx, VERDICT_NA,
                       {"reason": "has a proper right identity"})
    extra = sets.left_zero_divisors - sets.right_zero_divisors
    if extra:
        return _report("Lemma2.1", ctx, VERDICT_FAIL,
                       witness={"left_only_zero_divisor": min(extra)})
    part2 = ctx.order >= 5
    if part2:
        mul = ctx.ring.mul
        for a in ctx.graph.vertices:
            for b in ctx.graph.out_adj[a]:
                if not any(mul[c][a] == 0 for c in range(1, ctx.order) if c != a):
                    return _report("Lemma2.1", ctx, VERDICT_FAIL,
                                   witness={"edge": [a, b], "missing": "c with ca = 0"})
    return _report("Lemma2.1", ctx, VERDICT_PASS, {"incoming_arrow_part_checked": part2})


def check_lemma_2_2(ctx: RingContext, convention: str) -> TheoremReport:
    """Zero products are symmetric in rings of order at most 4 whose
    one-sided identities are all two-sided."""
    if ctx.order > 4:
        return _report("Lemma2.2", ctx, VERDICT_NA, {"reason": "order exceeds 4"})
    if not ctx.sets.identities_all_two_sided:
        return _report("Lemma2.2", ctx, VERDICT_NA,
                       {"reason": "has a proper one-sided identity"})
    mul = ctx.ring.mul
    for a in range(1, ctx.order):
        for b in range(1, ctx.order):
            if a != b and mul[a][b] == 0 and mul[b][a] != 0:
                return _report("Lemma2.2", ctx, VERDICT_FAIL,
                               witness={"a": a, "b": b, "ba": mul[b][a]})
    return _report("Lemma2.2", ctx, VERDICT_PASS)


def check_lemma_2_2_list(ctx: RingContext, convention: str) -> TheoremReport:
    """Every graph of a ring of order 2..4 appears in the small-order
    shape catalog."""
    if not 2 <= ctx.order <= 4:
        return _report("Lemma2.2(list)", ctx, VERDICT_NA,
                       {"reason": "order outside 2..4"})
    shape = graph_shape(ctx.graph)
    allowed = SMALL_ORDER_SHAPES[ctx.order]
    if shape in allowed:
        return _report("Lemma2.2(list)", ctx, VERDICT_PASS, {"shape": shape})
    return _report("Lemma2.2(list)", ctx, VERDICT_FAIL,
                   {"shape": shape, "allowed": sorted(allowed)},
                   witness={"edges": ctx.graph.edges(), "loops": sorted(ctx.graph.loops)})


def check_prop_2_3(ctx: RingContext, convention: str) -> TheoremReport:
    """Every edge extends backwards at its tail and forwards at its head
    when one-sided identities are all two-sided."""
    if not ctx.sets.identities_all_two_sided:
        return _report("Prop2.3", ctx, VERDICT_NA,
                       {"reason": "has a proper one-sided identity"})
    mul = ctx.ring.mul
    verts = ctx.graph.vertices
    edge_count = 0
    for a in verts:
        for b in ctx.graph.out_adj[a]:
            edge_count += 1
            if not any(c != a and mul[c][a] == 0 for c in verts):
                return _report("Prop2.3", ctx, VERDICT_FAIL,
                               witness={"edge": [a, b], "missing": "c -> a"})
            if not any(d != b and mul[b][d] == 0 for d in verts):
                return _report("Prop2.3", ctx, VERDICT_FAIL,
                               witness={"edge": [a, b], "missing": "b -> d"})
    return _report("Prop2.3", ctx, VERDICT_PASS, {"edges_checked": edge_count})


def check_thm_2_4(ctx: RingContext, convention: str) -> TheoremReport:
    """Strong connectivity, absence of proper one-sided identities, and
    absence of endpoints are equivalent; connected graphs have diameter
    at most 3."""
    p1 = strongly_connected(ctx.graph)
    p2 = ctx.sets.identities_all_two_sided
    p2_alt = ctx.sets.two_sided_identity is not None or p2
    p3 = not ctx.sinks and not ctx.sources
    details = {"connected": p1, "no_proper_one_sided_identity": p2,
               "identity_or_no_proper": p2_alt, "no_endpoints": p3}
    if not (p1 == p2 == p2_alt == p3):
        return _report("Thm2.4", ctx, VERDICT_FAIL, details,
                       witness={"sinks": ctx.sinks, "sources": ctx.sources})
    if p1 and len(ctx.graph.vertices) > 1:
        if not ctx.dist.all_finite() or ctx.dist.max_finite > 3:
            return _report("Thm2.4", ctx, VERDICT_FAIL, details,
                           witness={"diameter": ctx.dist.diameter})
        details["diameter"] = ctx.dist.diameter
    return _report("Thm2.4", ctx, VERDICT_PASS, details)


def check_prop_2_5_1(ctx: RingContext, convention: str) -> TheoremReport:
    """Stated out-degree of annihilator elements; the stated value
    |R| + 1 exceeds any possible degree, so measured values are
    reported for comparison."""
    proper = sorted(ctx.sets.proper_left_identities)
    if not proper:
        return _report("Prop2.5(1)", ctx, VERDICT_NA, {"reason": "no proper left identity"})
    claimed = ctx.order + 1
    measured = {}
    all_match = True
    for e in proper:
        ideal = sorted(left_annihilator(ctx.ring, e) - {0})
        out_simple = sorted({degree_report(ctx.graph, a).out_simple for a in ideal})
        out_with_loop = sorted({degree_report(ctx.graph, a).out_simple
                                + (1 if a in ctx.graph.loops else 0) for a in ideal})
        measured[e] = {"out_simple": out_simple, "out_with_loop": out_with_loop}
        if out_simple != [claimed] and out_with_loop != [claimed]:
            all_match = False
    verdict = VERDICT_PASS if all_match else VERDICT_UNRECONCILED
    return _report("Prop2.5(1)", ctx, verdict,
                   {"claimed_out_degree": claimed, "measured": measured})


def check_prop_2_5_2(ctx: RingContext, convention: str) -> TheoremReport:
    """Vertex count |R| - 1 and the product decomposition of the order
    for rings with a proper left identity."""
    proper = sorted(ctx.sets.proper_left_identities)
    if not proper:
        return _report("Prop2.5(2)", ctx, VERDICT_NA, {"reason": "no proper left identity"})
    n_vertices = len(ctx.graph.vertices)
    if n_vertices != ctx.order - 1:
        return _report("Prop2.5(2)", ctx, VERDICT_FAIL,
                       witness={"vertices": n_vertices, "expected": ctx.order - 1})
    factors = {}
    for e in proper:
        dec = decompose(ctx.ring, e)
        factors[e] = {"corner_size": len(dec.r_e), "ideal_size": len(dec.i_e)}
        if len(dec.r_e) * len(dec.i_e) != ctx.order:
            return _report("Prop2.5(2)", ctx, VERDICT_FAIL,
                           witness={"e": e, "corner_size": len(dec.r_e),
                                    "ideal_size": len(dec.i_e)})
    return _report("Prop2.5(2)", ctx, VERDICT_PASS,
                   {"vertices": n_vertices, "decompositions": factors})


def check_prop_2_5_3(ctx: RingContext, convention: str) -> TheoremReport:
    """Edge-count formula from the corner/ideal decomposition, evaluated
    under the requested loop conventions."""
    proper = sorted(ctx.sets.proper_left_identities)
    if not proper:
        return _report("Prop2.5(3)", ctx, VERDICT_NA, {"reason": "no proper left identity"})
    conventions = ("simple", "loop") if convention == "both" else (convention,)
    by_e = {}
    all_ok = True
    for e in proper:
        row = {}
        matched = False
        for conv in conventions:
            cmp = claimed_edge_count(ctx.ring, e, conv)
            row[conv] = {"claimed": cmp.claimed, "actual": cmp.actual, "parts": cmp.parts}
            if cmp.claimed == cmp.actual:
                matched = True
        by_e[e] = row
        if not matched:
            all_ok = False
    verdict = VERDICT_PASS if all_ok else VERDICT_UNRECONCILED
    return _report("Prop2.5(3)", ctx, verdict,
                   {"conventions": list(conventions), "comparisons": by_e})


def check_prop_2_6(ctx: RingContext, convention: str) -> TheoremReport:
    """Finite distances stay at most 6 in rings with a proper one-sided
    identity."""
    sets = ctx.sets
    if not sets.proper_left_identities and not sets.proper_right_identities:
        return _report("Prop2.6", ctx, VERDICT_NA, {"reason": "no proper one-sided identity"})
    worst = ctx.dist.max_finite
    if worst > 6:
        far = max(ctx.dist.finite, key=ctx.dist.finite.get)
        return _report("Prop2.6", ctx, VERDICT_FAIL,
                       witness={"pair": list(far), "distance": worst})
    return _report("Prop2.6", ctx, VERDICT_PASS, {"max_finite_distance": worst})


def check_cor_2_7(ctx: RingContext, convention: str) -> TheoremReport:
    """Finite eccentricity exceeds the corner ring's by at most 3."""
    cases = []
    for side_ctx, label in ((ctx, "left"), (ctx.op, "right")):
        for e in sorted(side_ctx.sets.proper_left_identities):
            dec = decompose(side_ctx.ring, e)
            sub_graph = build_graph(dec.r_e_ring)
            if not sub_graph.vertices:
                continue
            bound = 3 + distances(sub_graph).max_finite
            cases.append((label, e, side_ctx.dist.max_finite, bound))
    if not cases:
        return _report("Cor2.7", ctx, VERDICT_NA,
                       {"reason": "no decomposition with a nonempty corner graph"})
    rows = []
    for label, e, measured, bound in cases:
        rows.append({"side": label, "e": e, "max_finite": measured, "bound": bound})
        if measured > bound:
            return _report("Cor2.7", ctx, VERDICT_FAIL,
                           witness={"side": label, "e": e,
                                    "max_finite": measured, "bound": bound})
    return _report("Cor2.7", ctx, VERDICT_PASS, {"cases": rows})


def check_prop_3_1(ctx: RingContext, convention: str) -> TheoremReport:
    """A square-zero source forces order 4 with the two remaining
    elements acting as left identities; dually for sinks."""
    mul = ctx.ring.mul
    nonzero = set(range(1, ctx.order))
    hits = {"sources_with_square_zero": 0, "sinks_with_square_zero": 0}
    for b in sorted(ctx.sources):
        if mul[b][b] != 0:
            continue
        hits["sources_with_square_zero"] += 1
        others = sorted(nonzero - {b})
        ok = (ctx.order == 4
              and all(o in ctx.sets.left_identities for o in others)
              and all(mul[b][o] == 0 for o in others))
        if not ok:
            return _report("Prop3.1", ctx, VERDICT_FAIL,
                           witness={"source": b, "others": others})
    for b in sorted(ctx.sinks):
        if mul[b][b] != 0:
            continue
        hits["sinks_with_square_zero"] += 1
        others = sorted(nonzero - {b})
        ok = (ctx.order == 4
              and all(o in ctx.sets.right_identities for o in others)
              and all(mul[o][b] == 0 for o in others))
        if not ok:
            return _report("Prop3.1", ctx, VERDICT_FAIL,
                           witness={"sink": b, "others": others})
    return _report("Prop3.1", ctx, VERDICT_PASS, hits)


def check_prop_3_2(ctx: RingContext, convention: str) -> TheoremReport:
    """Rings of order at least 5 with a proper left identity have at
    least two sinks, no source, and no loop at any sink."""
    if ctx.order < 5 or not ctx.sets.proper_left_identities:
        return _report("Prop3.2", ctx, VERDICT_NA,
                       {"reason": "needs order >= 5 and a proper left identity"})
    mul = ctx.ring.mul
    if len(ctx.sinks) < 2:
        return _report("Prop3.2", ctx, VERDICT_FAIL, witness={"sinks": ctx.sinks})
    if ctx.sources:
        return _report("Prop3.2", ctx, VERDICT_FAIL, witness={"sources": ctx.sources})
    bad = [r for r in ctx.sinks if mul[r][r] == 0]
    if bad:
        return _report("Prop3.2", ctx, VERDICT_FAIL, witness={"square_zero_sinks": bad})
    return _report("Prop3.2", ctx, VERDICT_PASS, {"sink_count": len(ctx.sinks)})


def check_cor_3_3(ctx: RingContext, convention: str) -> TheoremReport:
    """When the left annihilator of a proper left identity is {0, b},
    b reaches every other element and something reaches b."""
    if ctx.order < 5:
        return _report("Cor3.3", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    pairs = []
    for e in sorted(ctx.sets.proper_left_identities):
        ann = left_annihilator(ctx.ring, e)
        if len(ann) == 2:
            pairs.append((e, max(ann)))
    if not pairs:
        return _report("Cor3.3", ctx, VERDICT_NA,
                       {"reason": "no proper left identity with a 2-element annihilator"})
    rows = []
    for e, b in pairs:
        deg = degree_report(ctx.graph, b)
        full_out = deg.out_simple + (1 if deg.has_loop else 0)
        rows.append({"e": e, "b": b, "out_with_loop": full_out, "in": deg.in_simple})
        if full_out != ctx.order - 1 or deg.in_simple == 0:
            return _report("Cor3.3", ctx, VERDICT_FAIL,
                           witness={"e": e, "b": b, "out_with_loop": full_out,
                                    "in_degree": deg.in_simple})
    return _report("Cor3.3", ctx, VERDICT_PASS, {"cases": rows})


def check_prop_3_4(ctx: RingContext, convention: str) -> TheoremReport:
    """Dual of the sink statement: proper right identity forces at least
    two sources, no sink, and no loop at any source."""
    if ctx.order < 5 or not ctx.sets.proper_right_identities:
        return _report("Prop3.4", ctx, VERDICT_NA,
                       {"reason": "needs order >= 5 and a proper right identity"})
    mul = ctx.ring.mul
    if len(ctx.sources) < 2:
        return _report("Prop3.4", ctx, VERDICT_FAIL, witness={"sources": ctx.sources})
    if ctx.sinks:
        return _report("Prop3.4", ctx, VERDICT_FAIL, witness={"sinks": ctx.sinks})
    bad = [r for r in ctx.sources if mul[r][r] == 0]
    if bad:
        return _report("Prop3.4", ctx, VERDICT_FAIL, witness={"square_zero_sources": bad})
    return _report("Prop3.4", ctx, VERDICT_PASS, {"source_count": len(ctx.sources)})


def check_cor_3_5(ctx: RingContext, convention: str) -> TheoremReport:
    """Mirror of the annihilator corollary for proper right identities,
    using the elements killed from the left."""
    if ctx.order < 5:
        return _report("Cor3.5", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    pairs = []
    for e in sorted(ctx.sets.proper_right_identities):
        ann = right_annihilator(ctx.ring, e)
        if len(ann) == 2:
            pairs.append((e, max(ann)))
    if not pairs:
        return _report("Cor3.5", ctx, VERDICT_NA,
                       {"reason": "no proper right identity with a 2-element annihilator"})
    rows = []
    for e, b in pairs:
        deg = degree_report(ctx.graph, b)
        full_in = deg.in_simple + (1 if deg.has_loop else 0)
        rows.append({"e": e, "b": b, "in_with_loop": full_in, "out": deg.out_simple})
        if full_in != ctx.order - 1 or deg.out_simple == 0:
            return _report("Cor3.5", ctx, VERDICT_FAIL,
                           witness={"e": e, "b": b, "in_with_loop": full_in,
                                    "out_degree": deg.out_simple})
    return _report("Cor3.5", ctx, VERDICT_PASS, {"cases": rows})


def check_cor_3_6_1(ctx: RingContext, convention: str) -> TheoremReport:
    """Sinks and sources never coexist once the order reaches 5."""
    if ctx.order < 5:
        return _report("Cor3.6(1)", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    if ctx.sinks and ctx.sources:
        return _report("Cor3.6(1)", ctx, VERDICT_FAIL,
                       witness={"sinks": ctx.sinks, "sources": ctx.sources})
    return _report("Cor3.6(1)", ctx, VERDICT_PASS,
                   {"sink_count": len(ctx.sinks), "source_count": len(ctx.sources)})


def check_cor_3_6_2(ctx: RingContext, convention: str) -> TheoremReport:
    """No zero-divisor graph is a network."""
    if is_network(ctx.graph):
        return _report("Cor3.6(2)", ctx, VERDICT_FAIL,
                       witness={"sinks": ctx.sinks, "sources": ctx.sources})
    return _report("Cor3.6(2)", ctx, VERDICT_PASS)


def check_prop_3_8(ctx: RingContext, convention: str) -> TheoremReport:
    """Among elements with nonzero square, sinks are exactly the
    strongly right invertible elements; dually for sources. Also checks
    that unique right inverses relative to one left identity exist
    relative to all of them."""
    mul = ctx.ring.mul
    sink_side = {r for r in ctx.sinks if mul[r][r] != 0}
    inv_r_side = {r for r in ctx.inv_r if mul[r][r] != 0}
    source_side = {r for r in ctx.sources if mul[r][r] != 0}
    inv_l_side = {r for r in ctx.inv_l if mul[r][r] != 0}
    if sink_side != inv_r_side:
        return _report("Prop3.8", ctx, VERDICT_FAIL,
                       witness={"sinks_nonzero_square": sink_side,
                                "strongly_right_invertible": inv_r_side})
    if source_side != inv_l_side:
        return _report("Prop3.8", ctx, VERDICT_FAIL,
                       witness={"sources_nonzero_square": source_side,
                                "strongly_left_invertible": inv_l_side})
    # uniqueness relative to some left identity must agree with
    # uniqueness relative to every left identity
    left_ids = sorted(ctx.sets.left_identities)
    if ctx.sets.two_sided_identity is None and left_ids:
        for r in range(1, ctx.order):
            row = mul[r]
            uniq = [sum(1 for s in range(ctx.order) if row[s] == e) == 1 for e in left_ids]
            if any(uniq) != all(uniq):
                return _report("Prop3.8", ctx, VERDICT_FAIL,
                               witness={"r": r, "unique_per_identity": uniq})
    return _report("Prop3.8", ctx, VERDICT_PASS,
                   {"sink_matches": len(sink_side), "source_matches": len(source_side)})


def check_cor_3_9_1(ctx: RingContext, convention: str) -> TheoremReport:
    """A unique source (or sink) pins the ring order to 4 and the graph
    to a two-armed star with a loop at the center."""
    details = {"source_count": len(ctx.sources), "sink_count": len(ctx.sinks)}
    edges = set(ctx.graph.edges())
    verts = set(ctx.graph.vertices)
    if len(ctx.sources) == 1:
        b = next(iter(ctx.sources))
        others = verts - {b}
        shape_ok = (ctx.order == 4 and len(verts) == 3
                    and edges == {(b, o) for o in others}
                    and ctx.graph.loops == {b})
        if not shape_ok:
            return _report("Cor3.9(1)", ctx, VERDICT_FAIL,
                           witness={"source": b, "edges": sorted(edges),
                                    "loops": ctx.graph.loops})
    if len(ctx.sinks) == 1:
        b = next(iter(ctx.sinks))
        others = verts - {b}
        shape_ok = (ctx.order == 4 and len(verts) == 3
                    and edges == {(o, b) for o in others}
                    and ctx.graph.loops == {b})
        if not shape_ok:
            return _report("Cor3.9(1)", ctx, VERDICT_FAIL,
                           witness={"sink": b, "edges": sorted(edges),
                                    "loops": ctx.graph.loops})
    return _report("Cor3.9(1)", ctx, VERDICT_PASS, details)


def check_cor_3_9_2(ctx: RingContext, convention: str) -> TheoremReport:
    """From order 5 on, sinks coincide with the strongly right
    invertible elements and sources with the strongly left invertible
    ones; nonempty endpoint sets have no squares vanishing and at least
    two members."""
    if ctx.order < 5:
        return _report("Cor3.9(2)", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    mul = ctx.ring.mul
    if ctx.sinks != ctx.inv_r:
        return _report("Cor3.9(2)", ctx, VERDICT_FAIL,
                       witness={"sinks": ctx.sinks, "inv_r": ctx.inv_r})
    if ctx.sources != ctx.inv_l:
        return _report("Cor3.9(2)", ctx, VERDICT_FAIL,
                       witness={"sources": ctx.sources, "inv_l": ctx.inv_l})
    for name, group in (("sinks", ctx.sinks), ("sources", ctx.sources)):
        if group:
            if len(group) < 2 or any(mul[r][r] == 0 for r in group):
                return _report("Cor3.9(2)", ctx, VERDICT_FAIL,
                               witness={name: group})
    return _report("Cor3.9(2)", ctx, VERDICT_PASS,
                   {"sink_count": len(ctx.sinks), "source_count": len(ctx.sources)})


def check_prop_4_2_1(ctx: RingContext, convention: str) -> TheoremReport:
    """Nonempty sink sets multiply back into themselves with left
    cancellation; source sets dually with right cancellation (order at
    least 5)."""
    if ctx.order < 5:
        return _report("Prop4.2(1)", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    details = {}
    for name, group, side in (("sinks", ctx.sinks, "left"), ("sources", ctx.sources, "right")):
        if not group:
            details[name] = "empty"
            continue
        res = semigroup_closure_check(group, ctx.ring, side)
        details[name] = {"closed": res.closed, "cancellative": res.cancellative}
        if not res.closed or not res.cancellative:
            return _report("Prop4.2(1)", ctx, VERDICT_FAIL, details,
                           witness={"set": name, "triple": res.witness})
    return _report("Prop4.2(1)", ctx, VERDICT_PASS, details)


def check_prop_4_2_2(ctx: RingContext, convention: str) -> TheoremReport:
    """Strongly invertible element sets are cancellative semigroups
    inside the matching endpoint sets (order at least 5)."""
    if ctx.order < 5:
        return _report("Prop4.2(2)", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    details = {}
    for name, group, side, host in (("inv_r", ctx.inv_r, "left", ctx.sinks),
                                    ("inv_l", ctx.inv_l, "right", ctx.sources)):
        if not group:
            details[name] = "empty"
            continue
        res = semigroup_closure_check(group, ctx.ring, side)
        inside = group <= host
        details[name] = {"closed": res.closed, "cancellative": res.cancellative,
                         "inside_endpoints": inside}
        if not (res.closed and res.cancellative and inside):
            return _report("Prop4.2(2)", ctx, VERDICT_FAIL, details,
                           witness={"set": name, "triple": res.witness})
    return _report("Prop4.2(2)", ctx, VERDICT_PASS, details)


def check_prop_4_2_3(ctx: RingContext, convention: str) -> TheoremReport:
    """Sinks are the right-only zero divisors and sources the left-only
    ones from order 5 on; smaller orders report the measured truth."""
    sets = ctx.sets
    sink_alg = sets.right_zero_divisors - sets.left_zero_divisors
    source_alg = sets.left_zero_divisors - sets.right_zero_divisors
    agree = ctx.sinks == sink_alg and ctx.sources == source_alg
    if ctx.order < 5:
        return _report("Prop4.2(3)", ctx, VERDICT_NA,
                       {"reason": "needs order >= 5", "holds_here_anyway": agree})
    if not agree:
        return _report("Prop4.2(3)", ctx, VERDICT_FAIL,
                       witness={"sinks": ctx.sinks, "right_only": sink_alg,
                                "sources": ctx.sources, "left_only": source_alg})
    return _report("Prop4.2(3)", ctx, VERDICT_PASS)


def check_prop_4_2_4(ctx: RingContext, convention: str) -> TheoremReport:
    """Vertices split into sources, two-sided zero divisors, and sinks,
    disjointly, from order 5 on; smaller orders report the measured
    truth (the union always covers, disjointness can fail)."""
    sets = ctx.sets
    middle = sets.left_zero_divisors & sets.right_zero_divisors
    union_ok = (ctx.sources | middle | ctx.sinks) == set(ctx.graph.vertices)
    disjoint = (not ctx.sources & middle and not middle & ctx.sinks
                and not ctx.sources & ctx.sinks)
    if ctx.order < 5:
        return _report("Prop4.2(4)", ctx, VERDICT_NA,
                       {"reason": "needs order >= 5",
                        "union_covers": union_ok, "disjoint_here": disjoint})
    if not union_ok or not disjoint:
        return _report("Prop4.2(4)", ctx, VERDICT_FAIL,
                       witness={"sources": ctx.sources, "middle": middle,
                                "sinks": ctx.sinks, "vertices": list(ctx.graph.vertices)})
    return _report("Prop4.2(4)", ctx, VERDICT_PASS,
                   {"sizes": [len(ctx.sources), len(middle), len(ctx.sinks)]})


def check_prop_4_3(ctx: RingContext, convention: str) -> TheoremReport:
    """A proper left identity exists exactly when some sink multiplies
    the sink set onto itself; and then sources vanish and sinks number
    at least two (order at least 5)."""
    if ctx.order < 5:
        return _report("Prop4.3", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    mul = ctx.ring.mul
    has_proper_left = bool(ctx.sets.proper_left_identities)
    stabilizers = [x for x in sorted(ctx.sinks)
                   if {mul[x][s] for s in ctx.sinks} == set(ctx.sinks)]
    rhs = bool(ctx.sinks) and bool(stabilizers)
    if has_proper_left != rhs:
        return _report("Prop4.3", ctx, VERDICT_FAIL,
                       witness={"proper_left_identity": has_proper_left,
                                "sinks": ctx.sinks, "stabilizers": stabilizers})
    if has_proper_left and (ctx.sources or len(ctx.sinks) < 2):
        return _report("Prop4.3", ctx, VERDICT_FAIL,
                       witness={"sources": ctx.sources, "sinks": ctx.sinks})
    return _report("Prop4.3", ctx, VERDICT_PASS,
                   {"holds": has_proper_left, "stabilizer_count": len(stabilizers)})


def check_cor_4_4(ctx: RingContext, convention: str) -> TheoremReport:
    """A nonempty (finite) sink set equals the strongly right invertible
    set and rules out sources (order at least 5)."""
    if ctx.order < 5:
        return _report("Cor4.4", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    if not ctx.sinks:
        return _report("Cor4.4", ctx, VERDICT_PASS, {"sinks": "empty, nothing to check"})
    if ctx.sinks != ctx.inv_r or ctx.sources:
        return _report("Cor4.4", ctx, VERDICT_FAIL,
                       witness={"sinks": ctx.sinks, "inv_r": ctx.inv_r,
                                "sources": ctx.sources})
    return _report("Cor4.4", ctx, VERDICT_PASS,
                   {"sink_count": len(ctx.sinks),
                    "note": "finiteness is automatic here, every ring is finite"})


def check_prop_4_5(ctx: RingContext, convention: str) -> TheoremReport:
    """Dual of the sink criterion: proper right identities correspond to
    a source that multiplies the source set onto itself."""
    if ctx.order < 5:
        return _report("Prop4.5", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    mul = ctx.ring.mul
    has_proper_right = bool(ctx.sets.proper_right_identities)
    stabilizers = [x for x in sorted(ctx.sources)
                   if {mul[t][x] for t in ctx.sources} == set(ctx.sources)]
    rhs = bool(ctx.sources) and bool(stabilizers)
    if has_proper_right != rhs:
        return _report("Prop4.5", ctx, VERDICT_FAIL,
                       witness={"proper_right_identity": has_proper_right,
                                "sources": ctx.sources, "stabilizers": stabilizers})
    if has_proper_right and (ctx.sinks or len(ctx.sources) < 2):
        return _report("Prop4.5", ctx, VERDICT_FAIL,
                       witness={"sinks": ctx.sinks, "sources": ctx.sources})
    return _report("Prop4.5", ctx, VERDICT_PASS,
                   {"holds": has_proper_right, "stabilizer_count": len(stabilizers)})


def check_cor_4_6(ctx: RingContext, convention: str) -> TheoremReport:
    """A nonempty source set equals the strongly left invertible set and
    rules out sinks (order at least 5)."""
    if ctx.order < 5:
        return _report("Cor4.6", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    if not ctx.sources:
        return _report("Cor4.6", ctx, VERDICT_PASS, {"sources": "empty, nothing to check"})
    if ctx.sources != ctx.inv_l or ctx.sinks:
        return _report("Cor4.6", ctx, VERDICT_FAIL,
                       witness={"sources": ctx.sources, "inv_l": ctx.inv_l,
                                "sinks": ctx.sinks})
    return _report("Cor4.6", ctx, VERDICT_PASS, {"source_count": len(ctx.sources)})


def check_prop_4_7(ctx: RingContext, convention: str) -> TheoremReport:
    """The two-sidedness of identities is equivalent to the no-endpoint
    case of the four-case trichotomy; the strict-shrink cases cannot
    occur in a finite ring."""
    if ctx.order < 5:
        return _report("Prop4.7", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    mul = ctx.ring.mul
    p2 = ctx.sets.identities_all_two_sided
    sink_set = set(ctx.sinks)
    source_set = set(ctx.sources)
    sinks_shrink = bool(sink_set) and all(
        {mul[s][x] for x in sink_set} != sink_set for s in sink_set)
    sources_shrink = bool(source_set) and all(
        {mul[t][x] for t in source_set} != source_set for x in source_set)
    case1 = not sink_set and not source_set
    case2 = not sink_set and sources_shrink
    case3 = not source_set and sinks_shrink
    case4 = sinks_shrink and sources_shrink
    details = {"case_no_endpoints": case1, "case_sources_shrink": case2,
               "case_sinks_shrink": case3, "case_both_shrink": case4,
               "note": "the shrinking cases force infinite descent, impossible here"}
    if p2 != case1 or case2 or case3 or case4:
        return _report("Prop4.7", ctx, VERDICT_FAIL, details,
                       witness={"identities_all_two_sided": p2,
                                "sinks": ctx.sinks, "sources": ctx.sources})
    return _report("Prop4.7", ctx, VERDICT_PASS, details)


def check_cor_4_8(ctx: RingContext, convention: str) -> TheoremReport:
    """Two-sidedness of identities removes all endpoints (order at
    least 5); the chain condition hypothesis is automatic in a finite
    ring."""
    if ctx.order < 5:
        return _report("Cor4.8", ctx, VERDICT_NA, {"reason": "needs order >= 5"})
    if not ctx.sets.identities_all_two_sided:
        return _report("Cor4.8", ctx, VERDICT_PASS,
                       {"note": "hypothesis empty, has a proper one-sided identity"})
    if ctx.sinks or ctx.sources:
        return _report("Cor4.8", ctx, VERDICT_FAIL,
                       witness={"sinks": ctx.sinks, "sources": ctx.sources})
    return _report("Cor4.8", ctx, VERDICT_PASS)


def check_cor_4_9(ctx: RingContext, convention: str) -> TheoremReport:
    """No zero-divisor graph is a network, at any order."""
    if is_network(ctx.graph):
        return _report("Cor4.9", ctx, VERDICT_FAIL,
                       witness={"sinks": ctx.sinks, "sources": ctx.sources,
                                "edges": ctx.graph.edges()})
    return _report("Cor4.9", ctx, VERDICT_PASS)


PER_RING_CHECKERS = (
    ("Lemma2.1", check_lemma_2_1),
    ("Lemma2.2", check_lemma_2_2),
    ("Lemma2.2(list)", check_lemma_2_2_list),
    ("Prop2.3", check_prop_2_3),
    ("Thm2.4", check_thm_2_4),
    ("Prop2.5(1)", check_prop_2_5_1),
    ("Prop2.5(2)", check_prop_2_5_2),
    ("Prop2.5(3)", check_prop_2_5_3),
    ("Prop2.6", check_prop_2_6),
    ("Cor2.7", check_cor_2_7),
    ("Prop3.1", check_prop_3_1),
    ("Prop3.2", check_prop_3_2),
    ("Cor3.3", check_cor_3_3),
    ("Prop3.4", check_prop_3_4),
    ("Cor3.5", check_cor_3_5),
    ("Cor3.6(1)", check_cor_3_6_1),
    ("Cor3.6(2)", check_cor_3_6_2),
    ("Prop3.8", check_prop_3_8),
    ("Cor3.9(1)", check_cor_3_9_1),
    ("Cor3.9(2)", check_cor_3_9_2),
    ("Prop4.2(1)", check_prop_4_2_1),
    ("Prop4.2(2)", check_prop_4_2_2),
    ("Prop4.2(3)", check_prop_4_2_3),
    ("Prop4.2(4)", check_prop_4_2_4),
    ("Prop4.3", check_prop_4_3),
    ("Cor4.4", check_cor_4_4),
    ("Prop4.5", check_prop_4_5),
    ("Cor4.6", check_cor_4_6),
    ("Prop4.7", check_prop_4_7),
    ("Cor4.8", check_cor_4_8),
    ("Cor4.9", check_cor_4_9),
)


# ---------------------------------------------------------------------------
# worked families


def _euler_phi(n: int) -> int:
    return sum(1 for a in range(n) if gcd(a, n) == 1)


def check_example_matrix(convention: str) -> TheoremReport:
    """2x2 matrices over the 2-element field: diameter exactly 2, and a
    common annihilating middle element for every ordered pair."""
    ring = full_matrix_ring(2, 2)
    ctx = RingContext(ring)
    dist = ctx.dist
    if not strongly_connected(ctx.graph) or dist.diameter != 2:
        return _report("Ex2.8", ctx, VERDICT_FAIL,
                       witness={"diameter": dist.diameter})
    mul = ring.mul
    verts = ctx.graph.vertices
    for a in verts:
        for b in verts:
            if not any(mul[a][c] == 0 and mul[c][b] == 0 for c in verts):
                return _report("Ex2.8", ctx, VERDICT_FAIL,
                               witness={"pair": [a, b], "missing": "middle annihilator"})
    return _report("Ex2.8", ctx, VERDICT_PASS,
                   {"vertices": len(verts), "diameter": 2})


def check_example_binary_rows(convention: str) -> TheoremReport:
    """Row rings over the 2-element field: sinks are the left
    identities, half the ring; the rest is a mutual complete block
    pointing at every sink."""
    for k in (2, 3):
        ring = first_row_ring(k, 2)
        ctx = RingContext(ring)
        half = 2 ** (k - 1)
        left_ids = set(ctx.sets.left_identities)
        e = min(left_ids)
        ideal = left_annihilator(ring, e)
        kernel = [v for v in ctx.graph.vertices if v not in ctx.sinks]
        mutual_ok = all(y in ctx.graph.out_adj[x] and x in ctx.graph.out_adj[y]
                        for x in kernel for y in kernel if x < y)
        to_sinks_ok = all(s in ctx.graph.out_adj[x] for x in kernel for s in ctx.sinks)
        ok = (set(ctx.sinks) == left_ids and len(ctx.sinks) == half
              and len(ideal) == half and mutual_ok and to_sinks_ok
              and len(kernel) == half - 1)
        if not ok:
            return _report("Ex2.9", ctx, VERDICT_FAIL,
                           witness={"sinks": ctx.sinks, "left_identities": left_ids,
                                    "kernel": kernel, "annihilator_size": len(ideal)})
    return _report("Ex2.9", ctx, VERDICT_PASS, {"sizes_checked": [4, 8]})


def check_example_row_scale(convention: str) -> TheoremReport:
    """Two-entry row rings over Z/n for n up to 6: sink census by unit
    count, annihilator size n, sources only at n = 2, clique number
    n - 1."""
    for n in range(2, 7):
        ring = first_row_ring(2, n)
        ctx = RingContext(ring)
        expected_sinks = {a * n + b for a in range(n) if gcd(a, n) == 1 for b in range(n)}
        e = n  # the element (1, 0)
        ideal = left_annihilator(ring, e)
        clique = clique_number(ctx.graph)
        ok = (set(ctx.sinks) == expected_sinks
              and len(ctx.sinks) == n * _euler_phi(n)
              and len(ideal) == n
              and (not ctx.sources if n >= 3 else bool(ctx.sources))
              and clique == n - 1)
        if not ok:
            return _report("Ex2.10", ctx, VERDICT_FAIL,
                           witness={"sinks": ctx.sinks, "expected": expected_sinks,
                                    "sources": ctx.sources, "clique": clique,
                                    "annihilator_size": len(ideal)})
    return _report("Ex2.10", ctx, VERDICT_PASS, {"moduli_checked": [2, 3, 4, 5, 6]})


FAMILY_CHECKERS = (
    ("Ex2.8", check_example_matrix),
    ("Ex2.9", check_example_binary_rows),
    ("Ex2.10", check_example_row_scale),
)


# ---------------------------------------------------------------------------
# catalog and suite

CLAIM_CATALOG = {
    "Lemma2.1": "one-sided zero divisors and edge tails, under two-sided right identities",
    "Lemma2.2": "symmetry of zero products at order <= 4",
    "Lemma2.2(list)": "graphs of order <= 4 rings land in a 7-shape catalog",
    "Lemma2.2(realization)": "every cataloged shape is realized by some ring",
    "Prop2.3": "edges extend at both ends when identities are two-sided",
    "Thm2.4": "connectivity, identity two-sidedness, and endpoint absence align",
    "Prop2.5(1)": "out-degree of annihilator elements (stated value unreachable)",
    "Prop2.5(2)": "vertex count and order factorization under a proper left identity",
    "Prop2.5(3)": "edge-count formula from the corner decomposition",
    "Prop2.6": "finite distances bounded by 6 under a proper one-sided identity",
    "Cor2.7": "eccentricity bounded by the corner ring's plus 3",
    "Ex2.8": "2x2 matrix ring: diameter 2 with universal middle annihilators",
    "Ex2.9": "binary row rings: sinks are the left identities",
    "Ex2.10": "row rings over Z/n: sink census and clique number",
    "Prop3.1": "square-zero endpoint forces order 4 with identity companions",
    "Prop3.2": "proper left identity: two or more sinks, no source, no sink loop",
    "Cor3.3": "two-element annihilator: its generator dominates the graph",
    "Prop3.4": "dual: proper right identity forces sources",
    "Cor3.5": "dual annihilator corollary on the incoming side",
    "Cor3.6(1)": "sinks and sources never coexist at order >= 5",
    "Cor3.6(2)": "the graph is never a network",
    "Def3.7": "strong one-sided invertibility (definition, exercised by Prop3.8 and Cor3.9(2))",
    "Prop3.8": "sinks with nonzero square are the strongly right invertible elements",
    "Cor3.9(1)": "a unique endpoint pins the graph to the order-4 star",
    "Cor3.9(2)": "endpoint sets equal invertibility sets at order >= 5",
    "Def4.1": "endpoint partition sets (definition, exercised by Prop4.2 and its corollaries)",
    "Prop4.2(1)": "endpoint sets are one-sided cancellative semigroups",
    "Prop4.2(2)": "invertibility sets are cancellative semigroups inside endpoints",
    "Prop4.2(3)": "sinks are the right-only zero divisors (and dually)",
    "Prop4.2(4)": "vertices partition into sources, middle, sinks",
    "Prop4.3": "proper left identity iff a sink stabilizes the sink set",
    "Cor4.4": "nonempty sinks equal the strongly right invertible set",
    "Prop4.5": "dual stabilizer criterion for proper right identities",
    "Cor4.6": "nonempty sources equal the strongly left invertible set",
    "Prop4.7": "two-sided identities match the endpoint-free case of the trichotomy",
    "Cor4.8": "two-sided identities leave no endpoints (chain condition automatic)",
    "Cor4.9": "no zero-divisor graph is a network, any order",
}

DEFINITION_CLAIMS = frozenset({"Def3.7", "Def4.1"})


def claim_matches(claim_id: str, wanted) -> bool:
    if not wanted:
        return True
    return any(claim_id == w or claim_id.startswith(w + "(") for w in wanted)


def family_rings() -> list[FiniteRing]:
    """Built rings that give the existence-flavored claims substance."""
    out = [cyclic_ring(n) for n in range(1, 13)]
    out += [null_ring([k]) for k in (2, 3, 4)]
    out += [null_ring([2, 2]), null_ring([2, 4]), null_ring([3, 3])]
    out += [first_row_ring(2, n) for n in range(2, 7)]
    out += [first_row_ring(3, 2)]
    out += [full_matrix_ring(2, 2)]
    out += [
        direct_product(cyclic_ring(2), null_ring([2])),
        direct_product(cyclic_ring(2), cyclic_ring(2)),
        direct_product(first_row_ring(2, 2), cyclic_ring(4)),
    ]
    out += [opposite_ring(first_row_ring(2, 2)), opposite_ring(first_row_ring(2, 3))]
    return out


def run_suite(orders=(), include_families: bool = True, claims=None,
              convention: str = "both", fail_fast: bool = False) -> list[TheoremReport]:
    """Run every requested checker over families and enumerated rings.

    orders selects exhaustive per-isomorphism-class coverage; families
    add the built rings. claims filters by catalog id (a bare id also
    selects its parenthesized sub-claims). The report list is
    deterministic for a fixed configuration.
    """
    if convention not in ("simple", "loop", "both"):
        raise ValueError(f"convention must be simple, loop, or both, not {convention!r}")
    wanted = list(claims) if claims else None
    reports: list[TheoremReport] = []

    def add(report: TheoremReport, started: float) -> bool:
        report.seconds = perf_counter() - started
        reports.append(report)
        return fail_fast and report.verdict == VERDICT_FAIL

    def run_ring(ring: FiniteRing, shape_sink=None) -> bool:
        ctx = RingContext(ring)
        if shape_sink is not None:
            shape_sink.add(graph_shape(ctx.graph))
        for claim_id, fn in PER_RING_CHECKERS:
            if not claim_matches(claim_id, wanted):
                continue
            t0 = perf_counter()
            try:
                rep = fn(ctx, convention)
            except InternalInvariantViolation as exc:
                rep = _report(claim_id, ctx, VERDICT_FAIL,
                              {"internal_invariant": str(exc)})
            if add(rep, t0):
                return True
        return False

    if include_families:
        for ring in family_rings():
            if run_ring(ring):
                return reports
        for claim_id, fn in FAMILY_CHECKERS:
            if not claim_matches(claim_id, wanted):
                continue
            t0 = perf_counter()
            rep = fn(convention)
            if add(rep, t0):
                return reports

    enum_orders = sorted(set(orders or ()))
    shapes_by_order: dict[int, set[str]] = {}
    for order in enum_orders:
        sink = shapes_by_order.setdefault(order, set()) if 2 <= order <= 4 else None
        for ring in ring_classes(order):
            if run_ring(ring, sink):
                return reports

    if claim_matches("Lemma2.2(realization)", wanted):
        t0 = perf_counter()
        scope = "orders " + (f"{enum_orders[0]}..{enum_orders[-1]}" if enum_orders else "none")
        if not {2, 3, 4} <= set(enum_orders):
            rep = TheoremReport("Lemma2.2(realization)", scope, VERDICT_NA,
                                {"reason": "needs enumerated orders 2..4"})
        else:
            missing = {o: sorted(SMALL_ORDER_SHAPES[o] - shapes_by_order[o])
                       for o in (2, 3, 4) if SMALL_ORDER_SHAPES[o] - shapes_by_order[o]}
            extra = {o: sorted(shapes_by_order[o] - SMALL_ORDER_SHAPES[o])
                     for o in (2, 3, 4) if shapes_by_order[o] - SMALL_ORDER_SHAPES[o]}
            if missing or extra:
                rep = TheoremReport("Lemma2.2(realization)", scope, VERDICT_FAIL,
                                    {"missing": missing, "off_catalog": extra})
            else:
                rep = TheoremReport("Lemma2.2(realization)", scope, VERDICT_PASS,
                                    {"shapes": {o: sorted(shapes_by_order[o])
                                                for o in (2, 3, 4)}})
        if add(rep, t0):
            return reports

    return reports


def reports_to_jsonl(reports) -> str:
    return "".join(json.dumps(r.to_json_dict(), sort_keys=True) + "\n" for r in reports)


def has_failures(reports) -> bool:
    return any(r.verdict == VERDICT_FAIL for r in reports)


def summarize(reports) -> str:
    """Human-readable table with one line per report and a tally."""
    lines = []
    width = max((len(r.claim) for r in reports), default=5)
    for r in reports:
        lines.append(f"{r.claim:<{width}}  {r.verdict:<14}  {r.scope}")
    tally = Counter(r.verdict for r in reports)
    order = [VERDICT_PASS, VERDICT_FAIL, VERDICT_UNRECONCILED, VERDICT_NA]
    summary = ", ".join(f"{tally[v]} {v}" for v in order if tally[v])
    lines.append(f"{len(reports)} reports: {summary if summary else 'none'}")
    return "\n".join(lines) + "\n"
