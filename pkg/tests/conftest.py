from __future__ import annotations

import pytest

from nearrings import (
    AutomorphismGroup,
    FerreroPair,
    RepChoice,
    catalog_group,
    construct,
    derived_planar_nearring,
    identity_twist,
    make_dickson_nearfield_9,
    make_field,
    make_nearvector_space,
    power_twist,
)


def negation(group):
    return tuple(int(v) for v in group.neg)


@pytest.fixture(scope="session")
def c9_example():
    """Order 9 on Z9, Phi = {id, -id}, R = {2,3,5,8}, M = {3}."""
    g = catalog_group(9, "C9")
    phi = AutomorphismGroup.from_generators(g, [negation(g)])
    return construct(FerreroPair(g, phi), RepChoice((2, 3, 5, 8), (3,)), name="c9-example")


@pytest.fixture(scope="session")
def order15_example():
    """Order 15, Phi = {id, -id}, zero multipliers the multiples of 3.

    The free representatives are the coset {x : x = 1 mod 3}; that choice is
    what makes the multiples of 5 distributive.
    """
    g = catalog_group(15, "C15")
    phi = AutomorphismGroup.from_generators(g, [negation(g)])
    return construct(FerreroPair(g, phi), RepChoice((1, 3, 4, 6, 7, 10, 13), (3, 6)),
                     name="order15-example")


@pytest.fixture(scope="session")
def planar_ring9():
    """The planar ring of order 9: GF(3)^2 with a*b = a times (first coord of b)."""
    f3 = make_field(3)
    space = make_nearvector_space(f3, [identity_twist(f3), identity_twist(f3)])
    return derived_planar_nearring(space, 0)


@pytest.fixture(scope="session")
def dickson9():
    return make_dickson_nearfield_9()


@pytest.fixture(scope="session")
def example1_space():
    """GF(5)^2 with twists (id, x -> x^3)."""
    f5 = make_field(5)
    return make_nearvector_space(f5, [identity_twist(f5), power_twist(f5, 3)])


@pytest.fixture(scope="session")
def example2_space(dickson9):
    """Dickson-9 squared with identity twists."""
    return make_nearvector_space(dickson9, [identity_twist(dickson9)] * 2)
