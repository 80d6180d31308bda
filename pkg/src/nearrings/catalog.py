"""Built-in catalog of all isomorphism classes of groups of order 1..15.

Every class is reachable by a conventional name (cyclic CN, products AxB,
dihedral D2m of order 2m, quaternion Q8, dicyclic Dic3, alternating A4).
Tables are built once, validated by the group axiom checker, and cached.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import CatalogMissError
from .groups import FiniteGroup


def cyclic_group(n: int, name: str | None = None) -> FiniteGroup:
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(add, name or f"C{n}")


def direct_product(g1: FiniteGroup, g2: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Product group with index encoding (a, b) -> a*|g2| + b."""
    n1, n2 = g1.order, g2.order
    add = np.zeros((n1 * n2, n1 * n2), dtype=np.int64)
    for a1, a2 in itertools.product(range(n1), range(n2)):
        for b1, b2 in itertools.product(range(n1), range(n2)):
            add[a1 * n2 + a2, b1 * n2 + b2] = g1.add[a1, b1] * n2 + g2.add[a2, b2]
    return FiniteGroup(add, name or f"{g1.name}x{g2.name}")


def dihedral_group(m: int) -> FiniteGroup:
    """Dihedral group of order 2m; element i + m*j is r^i s^j."""
    n = 2 * m
    add = np.zeros((n, n), dtype=np.int64)
    for i1, j1 in itertools.product(range(m), range(2)):
        for i2, j2 in itertools.product(range(m), range(2)):
            i = (i1 + i2) % m if j1 == 0 else (i1 - i2) % m
            add[i1 + m * j1, i2 + m * j2] = i + m * ((j1 + j2) % 2)
    return FiniteGroup(add, f"D{n}")


def dicyclic_group(m: int, name: str | None = None) -> FiniteGroup:
    """Dicyclic group of order 4m: a^i b^j with b^2 = a^m, b a b^-1 = a^-1."""
    n = 4 * m
    add = np.zeros((n, n), dtype=np.int64)
    for i1, j1 in itertools.product(range(2 * m), range(2)):
        for i2, j2 in itertools.product(range(2 * m), range(2)):
            i, j = (i1 + i2, j2) if j1 == 0 else (i1 - i2, 1 + j2)
            if j == 2:
                i, j = i + m, 0
            add[i1 + 2 * m * j1, i2 + 2 * m * j2] = i % (2 * m) + 2 * m * j
    return FiniteGroup(add, name or f"Dic{m}")


def alternating_4() -> FiniteGroup:
    perms = sorted(
        p for p in itertools.permutations(range(4))
        if sum(p[j] > p[i] for i in range(4) for j in range(i)) % 2 == 0
    )
    idx = {p: i for i, p in enumerate(perms)}
    add = np.zeros((12, 12), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            add[i, j] = idx[tuple(q[p[k]] for k in range(4))]
    return FiniteGroup(add, "A4")


_BUILDERS = {
    (1, "C1"): lambda: cyclic_group(1),
    (2, "C2"): lambda: cyclic_group(2),
    (3, "C3"): lambda: cyclic_group(3),
    (4, "C4"): lambda: cyclic_group(4),
    (4, "C2xC2"): lambda: direct_product(cyclic_group(2), cyclic_group(2)),
    (5, "C5"): lambda: cyclic_group(5),
    (6, "C6"): lambda: cyclic_group(6),
    (6, "D6"): lambda: dihedral_group(3),
    (7, "C7"): lambda: cyclic_group(7),
    (8, "C8"): lambda: cyclic_group(8),
    (8, "C4xC2"): lambda: direct_product(cyclic_group(4), cyclic_group(2)),
    (8, "C2xC2xC2"): lambda: direct_product(
        direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2), "C2xC2xC2"),
    (8, "D8"): lambda: dihedral_group(4),
    (8, "Q8"): lambda: dicyclic_group(2, "Q8"),
    (9, "C9"): lambda: cyclic_group(9),
    (9, "C3xC3"): lambda: direct_product(cyclic_group(3), cyclic_group(3)),
    (10, "C10"): lambda: cyclic_group(10),
    (10, "D10"): lambda: dihedral_group(5),
    (11, "C11"): lambda: cyclic_group(11),
    (12, "C12"): lambda: cyclic_group(12),
    (12, "C6xC2"): lambda: direct_product(cyclic_group(6), cyclic_group(2)),
    (12, "D12"): lambda: dihedral_group(6),
    (12, "A4"): alternating_4,
    (12, "Dic3"): lambda: dicyclic_group(3),
    (13, "C13"): lambda: cyclic_group(13),
    (14, "C14"): lambda: cyclic_group(14),
    (14, "D14"): lambda: dihedral_group(7),
    (15, "C15"): lambda: cyclic_group(15),
}

_CACHE: dict[tuple[int, str], FiniteGroup] = {}


def group_names(order: int) -> list[str]:
    """Names of all isomorphism classes of the given order (1..15)."""
    return [name for (o, name) in _BUILDERS if o == order]


def catalog_group(order: int, name: str) -> FiniteGroup:
    """Look up a catalog group; every class of order <= 15 is reachable."""
    key = (order, str(name).replace("×", "x"))
    if key not in _BUILDERS:
        raise CatalogMissError(f"no group of order {order} named {name!r} in the catalog")
    if key not in _CACHE:
        _CACHE[key] = _BUILDERS[key]()  # FiniteGroup.__init__ runs the axiom checker
    return _CACHE[key]


def all_catalog_groups(max_order: int = 15) -> list[FiniteGroup]:
    out = []
    for order, name in sorted(_BUILDERS):
        if order <= max_order:
            out.append(catalog_group(order, name))
    return out


def find_catalog_name(group: FiniteGroup):
    """Identify the catalog class a group table belongs to, if any."""
    from .groups import group_isomorphisms

    for order, name in sorted(_BUILDERS):
        if order == group.order:
            if group_isomorphisms(catalog_group(order, name), group, first_only=True):
                return (order, name)
    return None
