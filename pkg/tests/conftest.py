import pytest

from ringlab.builders import (
    cyclic_ring,
    direct_product,
    first_row_ring,
    full_matrix_ring,
    null_ring,
)


@pytest.fixture
def z6():
    return cyclic_ring(6)


@pytest.fixture
def t2():
    # 1x2 rows over Z/2: the smallest ring with proper left identities
    return first_row_ring(2, 2)


@pytest.fixture
def u3():
    return first_row_ring(2, 3)


@pytest.fixture
def null22():
    return null_ring([2, 2])


@pytest.fixture
def m2f2():
    return full_matrix_ring(2, 2)


def small_ring_pool():
    """A deterministic assortment used by property-style tests."""
    return [
        cyclic_ring(2),
        cyclic_ring(4),
        cyclic_ring(6),
        cyclic_ring(9),
        null_ring([2]),
        null_ring([2, 2]),
        null_ring([6]),
        first_row_ring(2, 2),
        first_row_ring(2, 3),
        first_row_ring(3, 2),
        direct_product(cyclic_ring(2), null_ring([2])),
        direct_product(cyclic_ring(3), cyclic_ring(3)),
    ]
