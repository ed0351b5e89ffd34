"""Exhaustive enumeration of finite rings up to isomorphism.

A ring structure on a fixed abelian group is pinned down by the products
of the additive generators, viewed through the left-multiplication maps
L_i(x) = g_i * x. The search assigns one map at a time, propagates the
associativity constraints L_i . L_j = sum_m v_m L_m (v = digit vector of
g_i * g_j), and solves for a not-yet-assigned map whenever a constraint
pins it down with a coefficient invertible modulo its torsion. Survivors
are deduplicated by the lexicographically least relabeling of the
multiplication table under additive automorphisms.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import product
from math import gcd, prod

from .errors import BadDimensions, InternalInvariantViolation, OrderTooLarge
from .rings import FiniteRing, Table, abelian_add_table, additive_order, validate_ring

DEFAULT_ENUM_CAP = 16


def enum_cap() -> int:
    return int(os.environ.get("RINGLAB_ENUM_CAP", DEFAULT_ENUM_CAP))


def _check_enum_order(order: int) -> None:
    if order < 1:
        raise BadDimensions(f"order {order} < 1")
    cap = enum_cap()
    if order > cap:
        raise OrderTooLarge(f"order {order} is over the enumeration cap of {cap}")


# ---------------------------------------------------------------------------
# additive group shapes


def _ascending_partitions(total: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, minimum: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(minimum, remaining + 1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(total, 1, [])
    return out


def _prime_powers(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


@dataclass(frozen=True)
class AdditiveGroupShape:
    """An abelian group given by its invariant factor chain d_0 | d_1 | ..."""

    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    def add_table(self) -> Table:
        return abelian_add_table(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "Z/1"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


def abelian_group_shapes(n: int) -> list[AdditiveGroupShape]:
    """All abelian groups of order n, cyclic first, then by factor count."""
    if n < 1:
        raise BadDimensions(f"order {n} < 1")
    if n == 1:
        return [AdditiveGroupShape(())]
    primes = _prime_powers(n)
    per_prime = [_ascending_partitions(a) for _, a in primes]
    shapes = []
    for combo in product(*per_prime):
        k = max(len(part) for part in combo)
        factors = []
        for i in range(k):
            d = 1
            for (p, _), part in zip(primes, combo):
                pad = k - len(part)
                if i >= pad:
                    d *= p ** part[i - pad]
            factors.append(d)
        shapes.append(AdditiveGroupShape(tuple(factors)))
    shapes.sort(key=lambda s: (len(s.invariant_factors), s.invariant_factors))
    return shapes


# ---------------------------------------------------------------------------
# one shape's precomputed search space


class _ShapeSpace:
    """Tables shared by every search over one additive shape."""

    def __init__(self, factors: tuple[int, ...]):
        self.factors = factors
        self.k = len(factors)
        self.n = prod(factors)
        self.add = abelian_add_table(factors)
        self.neg = tuple(row.index(0) for row in self.add)
        strides = []
        acc = 1
        for d in reversed(factors):
            strides.append(acc)
            acc *= d
        strides.reverse()
        self.strides = tuple(strides)
        self.gens = tuple(strides)
        self.digits_of = tuple(self._digits(x) for x in range(self.n))
        max_d = max(factors, default=1)
        smul = [tuple([0] * self.n)]
        for _ in range(max_d):
            prev = smul[-1]
            smul.append(tuple(self.add[prev[e]][e] for e in range(self.n)))
        self.smul = smul
        self.torsion: dict[int, tuple[int, ...]] = {}
        for di in factors:
            for dj in factors:
                m = gcd(di, dj)
                if m not in self.torsion:
                    self.torsion[m] = tuple(e for e in range(self.n) if smul[m][e] == 0)
        # all admissible maps for level i: columns c_ij range over the
        # gcd(d_i, d_j)-torsion subgroup
        self.level_candidates: list[list[tuple[int, ...]]] = []
        for i in range(self.k):
            col_sets = [self.torsion[gcd(factors[i], factors[j])] for j in range(self.k)]
            self.level_candidates.append([self._map_from_columns(cols) for cols in product(*col_sets)])

    def _digits(self, x: int) -> tuple[int, ...]:
        return tuple((x // s) % d for d, s in zip(self.factors, self.strides))

    def _map_from_columns(self, cols: tuple[int, ...]) -> tuple[int, ...]:
        add, smul = self.add, self.smul
        out = []
        for x in range(self.n):
            dx = self.digits_of[x]
            acc = 0
            for t in range(self.k):
                if dx[t]:
                    acc = add[acc][smul[dx[t]][cols[t]]]
            out.append(acc)
        return tuple(out)


def _propagate(space: _ShapeSpace, assigned: list, trail: list[int], verified: set) -> bool:
    """Sweep the constraints to a fixpoint; False on contradiction.

    Newly solved levels are appended to trail (caller undoes them).
    """
    k, n = space.k, space.n
    add, neg, smul = space.add, space.neg, space.smul
    gens, digits, d = space.gens, space.digits_of, space.factors
    while True:
        progress = False
        for a in range(k):
            la = assigned[a]
            if la is None:
                continue
            for b in range(k):
                if (a, b) in verified:
                    continue
                lb = assigned[b]
                if lb is None:
                    continue
                v = digits[la[gens[b]]]
                needed = [m for m in range(k) if v[m]]
                unknown = [m for m in needed if assigned[m] is None]
                if not unknown:
                    for x in range(n):
                        acc = 0
                        for m in needed:
                            acc = add[acc][smul[v[m]][assigned[m][x]]]
                        if la[lb[x]] != acc:
                            return False
                    verified.add((a, b))
                elif len(unknown) == 1:
                    m0 = unknown[0]
                    coef = v[m0]
                    if gcd(coef, d[m0]) != 1:
                        continue
                    inv = pow(coef, -1, d[m0])
                    sol = []
                    for x in range(n):
                        acc = la[lb[x]]
                        for m in needed:
                            if m != m0:
                                acc = add[acc][neg[smul[v[m]][assigned[m][x]]]]
                        sol.append(smul[inv][acc])
                    # bilinearity needs d_m0-torsion columns; the solved
                    # map is the only possible completion, so a violation
                    # kills the whole branch
                    dm = d[m0]
                    if any(smul[dm][sol[g]] != 0 for g in gens):
                        return False
                    assigned[m0] = tuple(sol)
                    trail.append(m0)
                    progress = True
        if not progress:
            return True


def _build_mul(space: _ShapeSpace, assigned: list) -> Table:
    n, k = space.n, space.k
    add, smul, digits = space.add, space.smul, space.digits_of
    scaled = [[tuple(smul[s][e] for e in assigned[t]) for s in range(space.factors[t])] for t in range(k)]
    rows = []
    for x in range(n):
        dx = digits[x]
        row = None
        for t in range(k):
            if dx[t]:
                part = scaled[t][dx[t]]
                row = part if row is None else tuple(add[row[y]][part[y]] for y in range(n))
        rows.append(row if row is not None else tuple([0] * n))
    return tuple(rows)


def _search_shape(space: _ShapeSpace, shard_count: int, shard_index: int, base: int):
    """Yield every multiplication table on the shape, in DFS order."""
    k = space.k
    if k == 0:
        if shard_count <= 1 or shard_index == 0:
            yield ((0,),)
        return
    assigned: list = [None] * k

    def descend(count: int, verified: set):
        i = next(t for t in range(k) if assigned[t] is None)
        for idx, cand in enumerate(space.level_candidates[i]):
            if count == 0 and shard_count > 1 and (base + idx) % shard_count != shard_index:
                continue
            trail = [i]
            assigned[i] = cand
            branch_verified = set(verified)
            if _propagate(space, assigned, trail, branch_verified):
                if count + len(trail) == k:
                    yield _build_mul(space, assigned)
                else:
                    yield from descend(count + len(trail), branch_verified)
            for t in trail:
                assigned[t] = None

    yield from descend(0, set())


# ---------------------------------------------------------------------------
# additive automorphisms and canonical forms


_AUT_CACHE: dict[Table, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}


def _add_orders(add: Table) -> list[int]:
    out = []
    for x in range(len(add)):
        acc, k = x, 1
        while acc != 0:
            acc = add[acc][x]
            k += 1
        out.append(k)
    return out


def _generating_sequence(add: Table, ords: list[int]) -> list[int]:
    n = len(add)
    gens: list[int] = []
    span = {0}
    while len(span) < n:
        x = min((c for c in range(n) if c not in span), key=lambda c: (-ords[c], c))
        gens.append(x)
        span.add(x)
        changed = True
        while changed:
            changed = False
            for a in list(span):
                for b in list(span):
                    s = add[a][b]
                    if s not in span:
                        span.add(s)
                        changed = True
    return gens


def additive_automorphisms(add: Table) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All permutations preserving the addition table, with inverses."""
    cached = _AUT_CACHE.get(add)
    if cached is not None:
        return cached
    n = len(add)
    ords = _add_orders(add)
    gens = _generating_sequence(add, ords)
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    a2b = [-1] * n
    b2a = [-1] * n
    a2b[0] = 0
    b2a[0] = 0
    assigned = [0]

    def extend(x: int, u: int, trail: list[int]) -> bool:
        stack = [(x, u)]
        while stack:
            xx, uu = stack.pop()
            cur = a2b[xx]
            if cur != -1:
                if cur != uu:
                    return False
                continue
            if b2a[uu] != -1 or ords[xx] != ords[uu]:
                return False
            a2b[xx] = uu
            b2a[uu] = xx
            trail.append(xx)
            assigned.append(xx)
            for yy in list(assigned):
                stack.append((add[xx][yy], add[uu][a2b[yy]]))
        return True

    def dfs(gi: int) -> None:
        if gi == len(gens):
            if -1 in a2b:
                raise InternalInvariantViolation("generator closure left a gap")
            out.append((tuple(a2b), tuple(b2a)))
            return
        g = gens[gi]
        if a2b[g] != -1:
            dfs(gi + 1)
            return
        for h in range(n):
            if ords[h] != ords[g] or b2a[h] != -1:
                continue
            trail: list[int] = []
            if extend(g, h, trail):
                dfs(gi + 1)
            for _ in trail:
                xx = assigned.pop()
                b2a[a2b[xx]] = -1
                a2b[xx] = -1

    dfs(0)
    _AUT_CACHE[add] = out
    return out


def canonical_form(mul: Table, add: Table) -> Table:
    """Least relabeling of mul over the additive automorphisms of add."""
    n = len(add)
    best: Table | None = None
    for sigma, sinv in additive_automorphisms(add):
        verdict = -1 if best is None else 0
        rows = []
        for a in range(n):
            mrow = mul[sinv[a]]
            row = tuple(sigma[mrow[sinv[b]]] for b in range(n))
            if verdict == 0:
                cur = best[a]
                if row < cur:
                    verdict = -1
                elif row > cur:
                    verdict = 1
                    break
            rows.append(row)
        if verdict == -1:
            best = tuple(rows)
    if best is None:
        raise InternalInvariantViolation("no automorphisms found")
    return best


# ---------------------------------------------------------------------------
# public enumeration API


@dataclass
class EnumerationTask:
    """What to enumerate, plus running counters.

    examined counts completed multiplication tables, emitted counts rings
    actually yielded (these differ only when dedup drops repeats).
    """

    order: int
    shape: tuple[int, ...] | None = None
    dedup: bool = True
    examined: int = 0
    emitted: int = 0


def _spaces_for(task: EnumerationTask) -> list[tuple[int, _ShapeSpace]]:
    shapes = abelian_group_shapes(task.order)
    out = []
    for pos, shape in enumerate(shapes):
        if task.shape is not None and shape.invariant_factors != tuple(task.shape):
            continue
        out.append((pos, _ShapeSpace(shape.invariant_factors)))
    if task.shape is not None and not out:
        raise BadDimensions(f"{task.shape} is not an invariant factor chain for order {task.order}")
    return out


def enumerate_rings(task: EnumerationTask, shard_count: int = 1, shard_index: int = 0):
    """Yield rings of the given order, one per multiplication table found.

    With dedup, each additive shape contributes the canonical form of each
    isomorphism class exactly once; without it, every table the search
    reaches is yielded in DFS order.
    """
    _check_enum_order(task.order)
    base = 0
    for pos, space in _spaces_for(task):
        seen: set[Table] = set()
        for mul in _search_shape(space, shard_count, shard_index, base):
            task.examined += 1
            if task.dedup:
                mul = canonical_form(mul, space.add)
                if mul in seen:
                    continue
                seen.add(mul)
            label = f"enum{task.order}_{task.emitted}"
            yield validate_ring(space.add, mul, label=label)
            task.emitted += 1
        base += len(space.level_candidates[0]) if space.k else 1


def _shard_worker(order: int, shard_count: int, shard_index: int) -> list[tuple[int, Table]]:
    out = []
    base = 0
    for pos, space in _spaces_for(EnumerationTask(order)):
        seen: set[Table] = set()
        for mul in _search_shape(space, shard_count, shard_index, base):
            cf = canonical_form(mul, space.add)
            if cf not in seen:
                seen.add(cf)
                out.append((pos, cf))
        base += len(space.level_candidates[0]) if space.k else 1
    return out


def _default_shards(order: int) -> int:
    if order < 7:
        return 1
    return min(4, os.cpu_count() or 1)


def enumerate_order(order: int, dedup: bool = True, shards: int | None = None) -> list[FiniteRing]:
    """All rings of one order; with dedup, one representative per class.

    Representatives are canonical and sorted, so the result is the same
    list on every run. Raw mode (dedup=False) runs serially.
    """
    _check_enum_order(order)
    if not dedup:
        return list(enumerate_rings(EnumerationTask(order, dedup=False)))
    if shards is None:
        shards = _default_shards(order)
    if shards <= 1:
        found = _shard_worker(order, 1, 0)
    else:
        found = []
        with ProcessPoolExecutor(max_workers=shards) as pool:
            futures = [pool.submit(_shard_worker, order, shards, i) for i in range(shards)]
            for fut in futures:
                found.extend(fut.result())
    per_shape: dict[int, set[Table]] = {}
    for pos, mul in found:
        per_shape.setdefault(pos, set()).add(mul)
    shapes = abelian_group_shapes(order)
    rings: list[FiniteRing] = []
    for pos, shape in enumerate(shapes):
        muls = sorted(per_shape.get(pos, ()))
        add = shape.add_table()
        for mul in muls:
            rings.append(validate_ring(add, mul, label=f"ring{order}_{len(rings)}"))
    return rings


@lru_cache(maxsize=None)
def ring_classes(order: int) -> tuple[FiniteRing, ...]:
    """The isomorphism classes of rings of one order, cached."""
    return tuple(enumerate_order(order))


def count_rings(order: int) -> int:
    return len(ring_classes(order))


# ---------------------------------------------------------------------------
# isomorphism testing


def opposite_ring(ring: FiniteRing, label: str | None = None) -> FiniteRing:
    """Same elements, multiplication reversed."""
    n = ring.order
    mul = tuple(tuple(ring.mul[y][x] for y in range(n)) for x in range(n))
    return validate_ring(ring.add, mul, label=label or f"op({ring.label})", element_names=ring.element_names)


def _profiles(ring: FiniteRing) -> list[tuple]:
    n = ring.order
    ords = [additive_order(ring, x) for x in range(n)]
    out = []
    for x in range(n):
        row = ring.mul[x]
        col = tuple(ring.mul[y][x] for y in range(n))
        out.append(
            (
                ords[x],
                ords[ring.mul[x][x]],
                ring.mul[x][x] == x,
                row.count(0),
                col.count(0),
                tuple(sorted(ords[e] for e in row)),
                tuple(sorted(ords[e] for e in col)),
            )
        )
    return out


def fingerprint(ring: FiniteRing) -> tuple:
    """Cheap isomorphism invariant; unequal fingerprints mean not isomorphic."""
    n = ring.order
    left_ids = sum(1 for e in range(n) if all(ring.mul[e][x] == x for x in range(n)))
    right_ids = sum(1 for e in range(n) if all(ring.mul[x][e] == x for x in range(n)))
    commutative = all(ring.mul[i][j] == ring.mul[j][i] for i in range(n) for j in range(i))
    return (n, commutative, left_ids, right_ids, tuple(sorted(_profiles(ring))))


def find_isomorphism(a: FiniteRing, b: FiniteRing) -> tuple[int, ...] | None:
    """A ring isomorphism a -> b as an index permutation, or None."""
    if a.order != b.order:
        return None
    n = a.order
    pa, pb = _profiles(a), _profiles(b)
    if sorted(pa) != sorted(pb):
        return None
    ords = [p[0] for p in pa]
    gens = _generating_sequence(a.add, ords)
    a2b = [-1] * n
    b2a = [-1] * n
    a2b[0] = 0
    b2a[0] = 0
    assigned = [0]

    def extend(x: int, u: int, trail: list[int]) -> bool:
        stack = [(x, u)]
        while stack:
            xx, uu = stack.pop()
            cur = a2b[xx]
            if cur != -1:
                if cur != uu:
                    return False
                continue
            if b2a[uu] != -1 or pa[xx] != pb[uu]:
                return False
            a2b[xx] = uu
            b2a[uu] = xx
            trail.append(xx)
            assigned.append(xx)
            for yy in list(assigned):
                vv = a2b[yy]
                stack.append((a.add[xx][yy], b.add[uu][vv]))
                stack.append((a.mul[xx][yy], b.mul[uu][vv]))
                stack.append((a.mul[yy][xx], b.mul[vv][uu]))
        return True

    def dfs(gi: int) -> tuple[int, ...] | None:
        if gi == len(gens):
            if -1 in a2b:
                raise InternalInvariantViolation("generator closure left a gap")
            return tuple(a2b)
        g = gens[gi]
        if a2b[g] != -1:
            return dfs(gi + 1)
        for h in range(n):
            if b2a[h] != -1 or pb[h] != pa[g]:
                continue
            trail: list[int] = []
            if extend(g, h, trail):
                res = dfs(gi + 1)
                if res is not None:
                    return res
            for _ in trail:
                xx = assigned.pop()
                b2a[a2b[xx]] = -1
                a2b[xx] = -1
        return None

    return dfs(0)


def is_isomorphic(a: FiniteRing, b: FiniteRing) -> bool:
    if a.order != b.order:
        return False
    if a.add == b.add and a.mul == b.mul:
        return True
    return find_isomorphism(a, b) is not None


def relabel(ring: FiniteRing, label: str) -> FiniteRing:
    return replace(ring, label=label)
