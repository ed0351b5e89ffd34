"""Finite rings as dense Cayley tables over element indices 0..n-1.

A ring is represented by two n x n tables: ``add[i][j]`` and ``mul[i][j]``
are element indices. Index 0 is always the additive identity. Validation
is exhaustive: every group axiom, associativity instance, and distributive
law instance is checked before a ``FiniteRing`` is handed out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadEntry,
    IndexOutOfRange,
    InternalInvariantViolation,
    NotAbelianGroup,
    NotAssociative,
    NotDistributive,
)

Table = tuple[tuple[int, ...], ...]

# Below this order the pure-Python checks win; above it numpy does.
_NUMPY_MIN_ORDER = 32


@dataclass(frozen=True)
class FiniteRing:
    """An exhaustively validated finite ring.

    Equality and hashing look at the tables only; ``label`` is free-form
    provenance and ``element_names`` an optional display aid.
    """

    order: int
    add: Table
    mul: Table
    neg: tuple[int, ...] = field(compare=False, repr=False)
    label: str = field(default="", compare=False)
    element_names: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def zero(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    def sub(self, i: int, j: int) -> int:
        """i - j."""
        return self.add[i][self.neg[j]]

    def name_of(self, x: int) -> str:
        if self.element_names is not None:
            return self.element_names[x]
        return str(x)

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "add": [list(row) for row in self.add],
            "mul": [list(row) for row in self.mul],
            "label": self.label,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@dataclass(frozen=True)
class ElementSets:
    """The distinguished element sets of a ring, 0 never included."""

    left_zero_divisors: frozenset[int]
    right_zero_divisors: frozenset[int]
    zero_divisors: frozenset[int]
    left_identities: frozenset[int]
    right_identities: frozenset[int]
    two_sided_identity: int | None

    @property
    def proper_left_identities(self) -> frozenset[int]:
        return self.left_identities - self.right_identities

    @property
    def proper_right_identities(self) -> frozenset[int]:
        return self.right_identities - self.left_identities

    @property
    def identities_all_two_sided(self) -> bool:
        """True when no proper one-sided identity exists."""
        return not self.proper_left_identities and not self.proper_right_identities


def _as_table(rows, n: int | None, what: str) -> Table:
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise BadEntry(f"{what} table is not a nested sequence of ints: {exc}") from None
    if n is None:
        n = len(table)
    if n == 0:
        raise BadEntry(f"{what} table is empty")
    if len(table) != n or any(len(row) != n for row in table):
        raise BadEntry(f"{what} table is not {n}x{n}")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise BadEntry(f"{what}[{i}][{j}] = {v} outside 0..{n - 1}")
    return table


def _check_abelian_group(add: Table) -> tuple[int, ...]:
    """Verify (add, 0) is an abelian group; return the negation table."""
    n = len(add)
    for j in range(n):
        if add[0][j] != j:
            raise NotAbelianGroup(f"0 + {j} = {add[0][j]}, index 0 is not the identity")
    for i in range(n):
        if sorted(add[i]) != list(range(n)):
            raise NotAbelianGroup(f"row {i} of the addition table is not a permutation")
        for j in range(i):
            if add[i][j] != add[j][i]:
                raise NotAbelianGroup(f"{i} + {j} != {j} + {i}")
    neg = [0] * n
    for i in range(n):
        neg[i] = add[i].index(0)
    if n >= _NUMPY_MIN_ORDER:
        w = _assoc_witness_np(np.array(add, dtype=np.int32))
        if w is not None:
            raise NotAbelianGroup(f"addition is not associative at {w}")
    else:
        for i in range(n):
            row_i = add[i]
            for j in range(n):
                ij = add[i][j]
                row_ij = add[ij]
                row_j = add[j]
                for k in range(n):
                    if row_ij[k] != row_i[row_j[k]]:
                        raise NotAbelianGroup(f"addition is not associative at ({i}, {j}, {k})")
    return tuple(neg)


def _assoc_witness_np(t: np.ndarray) -> tuple[int, int, int] | None:
    n = t.shape[0]
    chunk = max(1, (1 << 24) // (n * n))
    for start in range(0, n, chunk):
        block = t[start : start + chunk]
        left = t[block]          # left[x, j, k] = t[t[i, j], k]
        right = block[:, t]      # right[x, j, k] = t[i, t[j, k]]
        if not np.array_equal(left, right):
            x, j, k = np.argwhere(left != right)[0]
            return (start + int(x), int(j), int(k))
    return None


def _distrib_witness_np(add: np.ndarray, mul: np.ndarray) -> tuple[str, int, int, int] | None:
    n = add.shape[0]
    chunk = max(1, (1 << 24) // (n * n))
    for start in range(0, n, chunk):
        mblock = mul[start : start + chunk]
        # x*(y+z) == x*y + x*z
        lhs = mblock[:, add]
        rhs = add[mblock[:, :, None], mblock[:, None, :]]
        if not np.array_equal(lhs, rhs):
            x, j, k = np.argwhere(lhs != rhs)[0]
            return ("left", start + int(x), int(j), int(k))
        # (x+y)*z == x*z + y*z; rhs[x, j, k] = add[mul[x, k], mul[j, k]]
        ablock = add[start : start + chunk]
        lhs = mul[ablock]
        rhs = add[mblock[:, None, :], mul[None, :, :]]
        if not np.array_equal(lhs, rhs):
            x, j, k = np.argwhere(lhs != rhs)[0]
            return ("right", start + int(x), int(j), int(k))
    return None


def _check_ring_laws(add: Table, mul: Table) -> None:
    n = len(add)
    if n >= _NUMPY_MIN_ORDER:
        m = np.array(mul, dtype=np.int32)
        a = np.array(add, dtype=np.int32)
        w = _assoc_witness_np(m)
        if w is not None:
            raise NotAssociative(*w)
        d = _distrib_witness_np(a, m)
        if d is not None:
            side, i, j, k = d
            raise NotDistributive(i, j, k, side)
    else:
        for i in range(n):
            mrow_i = mul[i]
            for j in range(n):
                ij = mul[i][j]
                mrow_ij = mul[ij]
                mrow_j = mul[j]
                for k in range(n):
                    if mrow_ij[k] != mrow_i[mrow_j[k]]:
                        raise NotAssociative(i, j, k)
        for i in range(n):
            mrow_i = mul[i]
            arow = add[i]
            for j in range(n):
                mij = mrow_i[j]
                aij = arow[j]
                mrow_aij = mul[aij]
                for k in range(n):
                    if mrow_i[add[j][k]] != add[mij][mrow_i[k]]:
                        raise NotDistributive(i, j, k, "left")
                    if mrow_aij[k] != add[mul[i][k]][mul[j][k]]:
                        raise NotDistributive(i, j, k, "right")
    for i in range(n):
        if mul[0][i] != 0 or mul[i][0] != 0:
            # distributivity forces this; reaching here means the checks above lied
            raise InternalInvariantViolation(f"0 does not absorb element {i} under multiplication")


def validate_ring(
    add: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
    label: str = "",
    element_names: Sequence[str] | None = None,
) -> FiniteRing:
    """Check every ring axiom exhaustively and return the ring.

    Raises BadEntry, NotAbelianGroup, NotAssociative, or NotDistributive
    with a witness. Order 1 (the zero ring) is accepted.
    """
    add_t = _as_table(add, None, "add")
    mul_t = _as_table(mul, len(add_t), "mul")
    neg = _check_abelian_group(add_t)
    _check_ring_laws(add_t, mul_t)
    names = tuple(element_names) if element_names is not None else None
    if names is not None and len(names) != len(add_t):
        raise BadEntry("element_names length does not match the order")
    return FiniteRing(order=len(add_t), add=add_t, mul=mul_t, neg=neg, label=label, element_names=names)


def ring_from_json(source: str | dict) -> FiniteRing:
    """Parse the {order, add, mul, label} interchange object and validate it."""
    data = json.loads(source) if isinstance(source, str) else source
    try:
        order = data["order"]
        add = data["add"]
        mul = data["mul"]
    except (KeyError, TypeError) as exc:
        raise BadEntry(f"ring object must carry order/add/mul: {exc}") from None
    ring = validate_ring(add, mul, label=str(data.get("label", "")))
    if ring.order != order:
        raise BadEntry(f"declared order {order} but tables are {ring.order}x{ring.order}")
    return ring


def _check_index(ring: FiniteRing, x: int) -> None:
    if not 0 <= x < ring.order:
        raise IndexOutOfRange(f"element {x} not in 0..{ring.order - 1}")


def left_annihilator(ring: FiniteRing, x: int) -> frozenset[int]:
    """{a : a*x = 0}. Always contains 0."""
    _check_index(ring, x)
    mul = ring.mul
    return frozenset(a for a in ring.elements if mul[a][x] == 0)


def right_annihilator(ring: FiniteRing, x: int) -> frozenset[int]:
    """{a : x*a = 0}. Always contains 0."""
    _check_index(ring, x)
    row = ring.mul[x]
    return frozenset(a for a in ring.elements if row[a] == 0)


def element_sets(ring: FiniteRing) -> ElementSets:
    """Zero-divisor and identity sets; 0 belongs to none of them.

    x is a left zero-divisor iff x*y = 0 for some nonzero y, i.e. its
    right annihilator is nontrivial, and dually on the other side.
    """
    n = ring.order
    mul = ring.mul
    left_zd, right_zd = set(), set()
    for x in range(1, n):
        row = mul[x]
        if any(row[y] == 0 for y in range(1, n)):
            left_zd.add(x)
        if any(mul[y][x] == 0 for y in range(1, n)):
            right_zd.add(x)
    left_ids, right_ids = set(), set()
    for e in range(1, n):
        row = mul[e]
        if all(row[x] == x for x in range(n)):
            left_ids.add(e)
        if all(mul[x][e] == x for x in range(n)):
            right_ids.add(e)
    both = left_ids & right_ids
    if len(both) > 1:
        raise InternalInvariantViolation("two distinct two-sided identities")
    return ElementSets(
        left_zero_divisors=frozenset(left_zd),
        right_zero_divisors=frozenset(right_zd),
        zero_divisors=frozenset(left_zd | right_zd),
        left_identities=frozenset(left_ids),
        right_identities=frozenset(right_ids),
        two_sided_identity=next(iter(both)) if both else None,
    )


def is_commutative(ring: FiniteRing) -> bool:
    mul = ring.mul
    return all(mul[i][j] == mul[j][i] for i in ring.elements for j in range(i))


def additive_order(ring: FiniteRing, x: int) -> int:
    """Smallest m >= 1 with m*x = 0 under addition."""
    _check_index(ring, x)
    m, acc = 1, x
    while acc != 0:
        acc = ring.add[acc][x]
        m += 1
    return m


def abelian_add_table(factors: Iterable[int]) -> Table:
    """Addition table of Z/d1 x ... x Z/dk in mixed-radix element order.

    The first factor is the most significant digit, so the zero tuple
    lands on index 0. An empty factor list gives the one-element group.
    """
    factors = tuple(factors)
    n = 1
    for d in factors:
        if d < 2:
            raise BadEntry(f"invariant factor {d} < 2")
        n *= d
    if not factors:
        return ((0,),)
    strides = []
    s = 1
    for d in reversed(factors):
        strides.append(s)
        s *= d
    strides.reverse()
    k = len(factors)
    vecs = []
    for idx in range(n):
        rem = idx
        v = []
        for i in range(k):
            v.append(rem // strides[i])
            rem %= strides[i]
        vecs.append(tuple(v))
    rows = []
    for i in range(n):
        vi = vecs[i]
        row = []
        for j in range(n):
            vj = vecs[j]
            row.append(sum(((vi[t] + vj[t]) % factors[t]) * strides[t] for t in range(k)))
        rows.append(tuple(row))
    return tuple(rows)
