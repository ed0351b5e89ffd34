"""Constructors for the ring families used throughout the package.

Every builder returns a fully validated FiniteRing. Families:

* cyclic_ring(n)          -- Z/n with the usual product
* null_ring(factors)      -- abelian group with all products zero
* first_row_ring(k, n)    -- k x k matrices over Z/n, only the first row free
* full_matrix_ring(k, q)  -- all k x k matrices over the prime field F_q
* direct_product(a, b)    -- componentwise operations on pairs
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from . import rings
from .errors import (
    BadDimensions,
    EmptyFactorList,
    InternalInvariantViolation,
    NotAnIdeal,
    NotLeftIdentity,
    NotPrime,
    TooLarge,
)
from .rings import FiniteRing, validate_ring

DEFAULT_BUILDER_CAP = 4096


def builder_cap() -> int:
    return int(os.environ.get("RINGLAB_BUILDER_CAP", DEFAULT_BUILDER_CAP))


def _check_cap(order: int, what: str) -> None:
    cap = builder_cap()
    if order > cap:
        raise TooLarge(f"{what} has order {order}, over the cap of {cap}")


def _table(n: int, fn) -> rings.Table:
    return tuple(tuple(fn(i, j) for j in range(n)) for i in range(n))


def cyclic_ring(n: int, label: str | None = None) -> FiniteRing:
    """Z/n: index i is the residue i."""
    if n < 1:
        raise BadDimensions(f"order {n} < 1")
    _check_cap(n, f"Z/{n}")
    add = _table(n, lambda i, j: (i + j) % n)
    mul = _table(n, lambda i, j: (i * j) % n)
    return validate_ring(add, mul, label=label or f"Z/{n}", element_names=[str(i) for i in range(n)])


def null_ring(factors: list[int] | tuple[int, ...]) -> FiniteRing:
    """All products zero on the abelian group with the given invariant factors."""
    factors = tuple(factors)
    if not factors:
        raise EmptyFactorList("need at least one invariant factor")
    if any(d < 2 for d in factors):
        raise BadDimensions(f"invariant factors must be >= 2, got {factors}")
    order = 1
    for d in factors:
        order *= d
    _check_cap(order, f"null ring on {factors}")
    add = rings.abelian_add_table(factors)
    mul = _table(order, lambda i, j: 0)
    tag = "x".join(str(d) for d in factors)
    return validate_ring(add, mul, label=f"null[{tag}]")


def _vec_codec(k: int, n: int):
    """Index <-> digit-vector helpers, most significant digit first."""
    size = n**k

    def to_vec(idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(k):
            idx, r = divmod(idx, n)
            out.append(r)
        return tuple(reversed(out))

    def to_idx(vec) -> int:
        acc = 0
        for v in vec:
            acc = acc * n + v % n
        return acc

    return size, to_vec, to_idx


def first_row_ring(k: int, n: int) -> FiniteRing:
    """k x k matrices over Z/n whose rows below the first are zero.

    An element is its first row (a_1, ..., a_k); the matrix product
    collapses to (a_1 b_1, ..., a_1 b_k), so the index encoding is the
    base-n reading of the row with the (1,1) entry most significant.
    """
    if k < 2 or n < 2:
        raise BadDimensions(f"need k >= 2 and n >= 2, got k={k}, n={n}")
    order, to_vec, to_idx = _vec_codec(k, n)
    _check_cap(order, f"first-row ring k={k}, n={n}")
    vecs = [to_vec(i) for i in range(order)]
    add = _table(order, lambda i, j: to_idx(a + b for a, b in zip(vecs[i], vecs[j])))
    mul = _table(order, lambda i, j: to_idx(vecs[i][0] * b for b in vecs[j]))
    names = ["(" + ",".join(str(v) for v in vec) + ")" for vec in vecs]
    return validate_ring(add, mul, label=f"FirstRow{k}(Z/{n})", element_names=names)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def full_matrix_ring(k: int, q: int) -> FiniteRing:
    """All k x k matrices over the field F_q, q prime; order q**(k*k)."""
    if k < 1:
        raise BadDimensions(f"matrix size {k} < 1")
    if not _is_prime(q):
        raise NotPrime(f"{q} is not prime")
    order, to_vec, to_idx = _vec_codec(k * k, q)
    _check_cap(order, f"matrix ring k={k}, q={q}")
    vecs = [to_vec(i) for i in range(order)]

    def mat_mul(i: int, j: int) -> int:
        a, b = vecs[i], vecs[j]
        out = []
        for r in range(k):
            for c in range(k):
                out.append(sum(a[r * k + t] * b[t * k + c] for t in range(k)) % q)
        return to_idx(out)

    add = _table(order, lambda i, j: to_idx(a + b for a, b in zip(vecs[i], vecs[j])))
    mul = _table(order, mat_mul)
    names = ["[" + ";".join(",".join(str(vec[r * k + c]) for c in range(k)) for r in range(k)) + "]" for vec in vecs]
    return validate_ring(add, mul, label=f"Mat{k}(Z/{q})", element_names=names)


def direct_product(a: FiniteRing, b: FiniteRing) -> FiniteRing:
    """Componentwise ring structure on pairs; (x, y) sits at index x*|b| + y."""
    order = a.order * b.order
    _check_cap(order, f"product of {a.label or '?'} and {b.label or '?'}")
    nb = b.order

    def pair(i: int) -> tuple[int, int]:
        return divmod(i, nb)

    def comp(table_a, table_b):
        def fn(i: int, j: int) -> int:
            xa, xb = pair(i)
            ya, yb = pair(j)
            return table_a[xa][ya] * nb + table_b[xb][yb]

        return fn

    add = _table(order, comp(a.add, b.add))
    mul = _table(order, comp(a.mul, b.mul))
    names = None
    if a.element_names is not None and b.element_names is not None:
        names = [f"({a.element_names[pair(i)[0]]},{b.element_names[pair(i)[1]]})" for i in range(order)]
    return validate_ring(add, mul, label=f"({a.label})x({b.label})", element_names=names)


def subring(ring: FiniteRing, subset, label: str | None = None) -> FiniteRing:
    """Restrict the tables to a subset closed under both operations.

    Element i of the result is sorted(subset)[i]; 0 must be a member.
    """
    elems = sorted(set(subset))
    if not elems or elems[0] != 0:
        raise BadDimensions("a subring must contain 0")
    pos = {x: i for i, x in enumerate(elems)}
    for x in elems:
        for y in elems:
            if ring.add[x][y] not in pos or ring.mul[x][y] not in pos:
                raise BadDimensions(f"subset not closed at ({x}, {y})")
    m = len(elems)
    add = _table(m, lambda i, j: pos[ring.add[elems[i]][elems[j]]])
    mul = _table(m, lambda i, j: pos[ring.mul[elems[i]][elems[j]]])
    names = None
    if ring.element_names is not None:
        names = [ring.element_names[x] for x in elems]
    return validate_ring(add, mul, label=label or f"{ring.label}|sub{elems}", element_names=names)


def is_ideal(ring: FiniteRing, subset) -> bool:
    """True when subset is a two-sided ideal (additive subgroup, absorbs both sides)."""
    members = set(subset)
    if 0 not in members:
        return False
    for x in members:
        if not 0 <= x < ring.order:
            return False
        for y in members:
            if ring.add[x][y] not in members:
                return False
    for r in ring.elements:
        for x in members:
            if ring.mul[r][x] not in members or ring.mul[x][r] not in members:
                return False
    return True


def quotient_ring(ring: FiniteRing, ideal, label: str | None = None) -> FiniteRing:
    """R/I with cosets represented by their smallest member, 0-coset first."""
    members = sorted(set(ideal))
    if not is_ideal(ring, members):
        raise NotAnIdeal(f"{members} is not a two-sided ideal")
    coset_of = [-1] * ring.order
    reps: list[int] = []
    for x in ring.elements:
        if coset_of[x] >= 0:
            continue
        idx = len(reps)
        reps.append(x)
        for i in members:
            coset_of[ring.add[x][i]] = idx
    m = len(reps)
    add = _table(m, lambda i, j: coset_of[ring.add[reps[i]][reps[j]]])
    mul = _table(m, lambda i, j: coset_of[ring.mul[reps[i]][reps[j]]])
    return validate_ring(add, mul, label=label or f"{ring.label}/{members}")


@dataclass(frozen=True)
class LeftIdentityDecomposition:
    """R = R_e (+) I_e for a left identity e.

    I_e = {a : a*e = 0} is a two-sided ideal, R_e = {a : a*e = a} a subring
    with e as its two-sided identity, and every r splits uniquely as
    r = r*e + (r - r*e). ``splitting`` maps r to that (R_e, I_e) pair.
    """

    e: int
    i_e: frozenset[int]
    r_e: frozenset[int]
    splitting: dict[int, tuple[int, int]]
    r_e_ring: FiniteRing


def decompose(ring: FiniteRing, e: int) -> LeftIdentityDecomposition:
    """Split R along a left identity e and verify every structural claim."""
    from .enumeration import is_isomorphic  # local import keeps module deps acyclic

    mul = ring.mul
    if not 0 <= e < ring.order or any(mul[e][x] != x for x in ring.elements):
        raise NotLeftIdentity(f"{e} is not a left identity of {ring.label or 'the ring'}")
    i_e = frozenset(a for a in ring.elements if mul[a][e] == 0)
    r_e = frozenset(a for a in ring.elements if mul[a][e] == a)

    if not is_ideal(ring, i_e):
        raise InternalInvariantViolation("I_e is not a two-sided ideal")
    e_proper = any(mul[x][e] != x for x in ring.elements)
    if e_proper and len(i_e) < 2:
        raise InternalInvariantViolation("I_e must have at least 2 elements for a proper left identity")

    for x in r_e:
        for y in r_e:
            if ring.add[x][y] not in r_e or mul[x][y] not in r_e:
                raise InternalInvariantViolation("R_e is not closed")
    if e not in r_e or any(mul[x][e] != x or mul[e][x] != x for x in r_e):
        raise InternalInvariantViolation("e is not a two-sided identity of R_e")

    splitting: dict[int, tuple[int, int]] = {}
    seen = set()
    for r in ring.elements:
        x = mul[r][e]
        y = ring.sub(r, x)
        if x not in r_e or y not in i_e:
            raise InternalInvariantViolation(f"splitting of {r} leaves R_e x I_e")
        splitting[r] = (x, y)
        seen.add((x, y))
    if len(seen) != ring.order or len(r_e) * len(i_e) != ring.order:
        raise InternalInvariantViolation("splitting is not a bijection onto R_e x I_e")

    r_e_ring = subring(ring, r_e, label=f"{ring.label}|R_e@{e}")
    quotient = quotient_ring(ring, i_e, label=f"{ring.label}/I_e@{e}")
    if not is_isomorphic(r_e_ring, quotient):
        raise InternalInvariantViolation("R_e is not isomorphic to R/I_e")

    return LeftIdentityDecomposition(e=e, i_e=i_e, r_e=r_e, splitting=splitting, r_e_ring=r_e_ring)
