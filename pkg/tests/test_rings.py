import json

import pytest

from ringlab.builders import cyclic_ring, first_row_ring, null_ring
from ringlab.errors import (
    BadEntry,
    NotAbelianGroup,
    NotAssociative,
    NotDistributive,
)
from ringlab.rings import (
    abelian_add_table,
    additive_order,
    element_sets,
    is_commutative,
    left_annihilator,
    right_annihilator,
    ring_from_json,
    validate_ring,
)


def _mutate(table, i, j, v):
    rows = [list(r) for r in table]
    rows[i][j] = v
    return tuple(tuple(r) for r in rows)


def test_validate_accepts_cyclic_tables():
    n = 5
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    ring = validate_ring(add, mul, label="five")
    assert ring.order == 5
    assert ring.label == "five"
    assert ring.neg == (0, 4, 3, 2, 1)
    assert ring.sub(1, 3) == 3  # 1 - 3 = -2 = 3 mod 5


def test_validate_rejects_bad_entry():
    add = ((0, 1), (1, 0))
    with pytest.raises(BadEntry):
        validate_ring(add, ((0, 0), (0, 9)))
    with pytest.raises(BadEntry):
        validate_ring(((0, 1), (1,)), ((0, 0), (0, 0)))


def test_validate_rejects_non_group_addition():
    # row 1 not a permutation
    with pytest.raises(NotAbelianGroup):
        validate_ring(((0, 1), (1, 1)), ((0, 0), (0, 0)))
    # zero is not the identity
    with pytest.raises(NotAbelianGroup):
        validate_ring(((1, 0), (0, 1)), ((0, 0), (0, 0)))


def test_validate_reports_associativity_witness():
    z4 = cyclic_ring(4)
    bad = _mutate(z4.mul, 2, 2, 1)  # 2*2 = 1 breaks (2*2)*2 = 2 vs 2*(2*2)
    with pytest.raises((NotAssociative, NotDistributive)) as err:
        validate_ring(z4.add, bad)
    assert len(err.value.witness) == 3


def test_validate_reports_distributivity_side():
    z5 = cyclic_ring(5)
    bad = _mutate(z5.mul, 1, 1, 0)
    with pytest.raises((NotAssociative, NotDistributive)):
        validate_ring(z5.add, bad)


def test_numpy_path_agrees_with_loop_path():
    # order 36 goes through the vectorized checks, order 6 through loops
    big = first_row_ring(2, 6)
    assert big.order == 36
    validate_ring(big.add, big.mul)
    bad = _mutate(big.mul, 7, 7, (big.mul[7][7] + 1) % 36)
    with pytest.raises((NotAssociative, NotDistributive)):
        validate_ring(big.add, bad)
    small = cyclic_ring(6)
    bad_small = _mutate(small.mul, 2, 2, 1)
    with pytest.raises((NotAssociative, NotDistributive)):
        validate_ring(small.add, bad_small)


def test_json_round_trip(z6):
    blob = z6.to_json()
    back = ring_from_json(blob)
    assert back.add == z6.add
    assert back.mul == z6.mul
    assert back.label == z6.label
    data = json.loads(blob)
    assert sorted(data) == ["add", "label", "mul", "order"]


def test_json_rejects_order_mismatch(z6):
    data = json.loads(z6.to_json())
    data["order"] = 7
    with pytest.raises(BadEntry):
        ring_from_json(data)


def test_element_sets_cyclic(z6):
    sets = element_sets(z6)
    assert sets.zero_divisors == {2, 3, 4}
    assert sets.left_zero_divisors == {2, 3, 4}
    assert sets.two_sided_identity == 1
    assert sets.left_identities == {1}
    assert sets.identities_all_two_sided


def test_element_sets_row_ring(t2):
    sets = element_sets(t2)
    # (1,0) and (1,1) reproduce everything from the left, nothing does from the right
    assert sets.left_identities == {2, 3}
    assert sets.right_identities == frozenset()
    assert sets.two_sided_identity is None
    assert sets.proper_left_identities == {2, 3}
    assert not sets.identities_all_two_sided
    assert sets.left_zero_divisors == {1}
    assert sets.right_zero_divisors == {1, 2, 3}


def test_element_sets_null_ring(null22):
    sets = element_sets(null22)
    assert sets.zero_divisors == {1, 2, 3}
    assert sets.left_identities == frozenset()
    assert sets.identities_all_two_sided


def test_annihilators(t2):
    # e = (1,0): its left annihilator is the ideal {0, (0,1)}
    assert left_annihilator(t2, 2) == {0, 1}
    assert right_annihilator(t2, 1) == {0, 1, 2, 3}
    assert left_annihilator(t2, 0) == {0, 1, 2, 3}


def test_is_commutative(z6, t2):
    assert is_commutative(z6)
    assert not is_commutative(t2)


def test_additive_order(z6):
    assert additive_order(z6, 0) == 1
    assert additive_order(z6, 1) == 6
    assert additive_order(z6, 2) == 3
    assert additive_order(z6, 3) == 2


def test_abelian_add_table_mixed_radix():
    add = abelian_add_table([2, 3])
    # index = 3*a + b for (a, b) in Z/2 x Z/3
    assert add[1][2] == 0  # (0,1) + (0,2) = (0,0)
    assert add[3][3] == 0  # (1,0) + (1,0) = (0,0)
    assert add[4][5] == 0  # (1,1) + (1,2) = (0,0)
    ring = validate_ring(add, [[0] * 6 for _ in range(6)])
    assert ring.order == 6


def test_zero_ring_accepted():
    ring = validate_ring(((0,),), ((0,),))
    assert ring.order == 1
    assert element_sets(ring).zero_divisors == frozenset()


def test_element_names_length_checked():
    add = ((0, 1), (1, 0))
    mul = ((0, 0), (0, 0))
    with pytest.raises(BadEntry):
        validate_ring(add, mul, element_names=["only-one"])
    ring = validate_ring(add, mul, element_names=["0", "x"])
    assert ring.name_of(1) == "x"
