"""Finite groups as Cayley tables, their automorphisms, and orbit machinery.

Elements are canonical indices 0..n-1 with 0 the identity, written additively
(the group need not be abelian).  All tables are immutable numpy arrays, so
every structure can be shared freely and hashed by its bytes.  Automorphisms
act from the right: the image of x under p is p[x].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

Perm = tuple[int, ...]


def freeze(table) -> np.ndarray:
    """Convert to an immutable int64 array."""
    arr = np.asarray(table, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def group_axiom_failure(add: np.ndarray) -> str | None:
    """Return a witness message if `add` is not a group table with identity 0."""
    n = len(add)
    if add.shape != (n, n) or n == 0:
        return f"table is not square ({add.shape})"
    if add.min() < 0 or add.max() >= n:
        return "entries out of range"
    rng = np.arange(n)
    if not (add[0] == rng).all() or not (add[:, 0] == rng).all():
        return "0 is not a two-sided identity"
    mism = np.argwhere(add[add] != add[:, add])
    if len(mism):
        x, y, z = (int(v) for v in mism[0])
        return f"associativity fails at ({x},{y},{z})"
    for x in range(n):
        if 0 not in add[x]:
            return f"element {x} has no inverse"
    return None


class FiniteGroup:
    """A finite group given by its Cayley table, with elements 0..n-1."""

    def __init__(self, add, name: str = "G", validate: bool = True):
        self.add = freeze(add)
        self.name = str(name)
        if validate:
            fail = group_axiom_failure(self.add)
            if fail is not None:
                raise ValidationError(f"{self.name}: {fail}")
        n = len(self.add)
        neg = np.zeros(n, dtype=np.int64)
        for x in range(n):
            neg[x] = int(np.argmax(self.add[x] == 0))
        self.neg = freeze(neg)

    @property
    def order(self) -> int:
        return len(self.add)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = int(self.add[y, x])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool((self.add == self.add.T).all())

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


# ---------------------------------------------------------------------------
# permutations acting on group elements

def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Right-action composition: apply p, then q."""
    return tuple(q[x] for x in p)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def is_additive_automorphism(perm: Perm, group: FiniteGroup) -> bool:
    """True iff perm is a bijection with perm[x+y] = perm[x]+perm[y]."""
    n = group.order
    if len(perm) != n or perm[0] != 0 or len(set(perm)) != n:
        return False
    p = np.asarray(perm, dtype=np.int64)
    return bool((p[group.add] == group.add[np.ix_(p, p)]).all())


def minimal_generating_set(group: FiniteGroup) -> list[int]:
    """A small generating set, chosen greedily and deterministically."""
    n = group.order
    add = group.add

    def closure(gens: list[int]) -> set[int]:
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = int(add[x, g])
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    gens: list[int] = []
    generated = {0}
    while len(generated) < n:
        best, best_size = None, 0
        for x in range(1, n):
            if x in generated:
                continue
            size = len(closure(gens + [x]))
            if size > best_size:
                best, best_size = x, size
                if size == n:
                    break
        gens.append(best)
        generated = closure(gens)
    return gens


def _expression_order(group: FiniteGroup, gens: list[int]) -> list[tuple[int, int, int]]:
    """BFS expressions elem = parent + gen; returns (elem, parent, gen index)."""
    add = group.add
    expr: list[tuple[int, int, int]] = []
    known = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop(0)
        for gi, g in enumerate(gens):
            y = int(add[x, g])
            if y not in known:
                known.add(y)
                expr.append((y, x, gi))
                frontier.append(y)
    return expr


def group_isomorphisms(g1: FiniteGroup, g2: FiniteGroup, first_only: bool = False) -> list[Perm]:
    """All isomorphisms g1 -> g2, by brute force over generator images.

    Generator images are constrained to elements of equal order, then each
    candidate assignment is extended along a fixed BFS expression tree and
    verified on all pairs.
    """
    n = g1.order
    if g2.order != n:
        return []
    gens = minimal_generating_set(g1) if n > 1 else []
    expr = _expression_order(g1, gens)
    orders2: dict[int, list[int]] = {}
    for y in range(n):
        orders2.setdefault(g2.element_order(y), []).append(y)
    cands = [orders2.get(g1.element_order(g), []) for g in gens]
    add2 = g2.add
    out: list[Perm] = []
    for images in itertools.product(*cands):
        phi = np.full(n, -1, dtype=np.int64)
        phi[0] = 0
        for elem, parent, gi in expr:
            phi[elem] = add2[phi[parent], images[gi]]
        if len(set(phi.tolist())) != n:
            continue
        if (phi[g1.add] == add2[np.ix_(phi, phi)]).all():
            out.append(tuple(int(v) for v in phi))
            if first_only:
                return out
    return sorted(out)


class AutomorphismGroup:
    """A set of additive automorphisms closed under composition and inverse."""

    def __init__(self, group: FiniteGroup, perms, validate: bool = True):
        self.group = group
        self.perms: tuple[Perm, ...] = tuple(sorted({tuple(p) for p in perms}))
        if validate:
            self._validate()
        self.identity_index = self.perms.index(identity_perm(group.order))
        self._index = {p: i for i, p in enumerate(self.perms)}
        k = len(self.perms)
        comp = np.zeros((k, k), dtype=np.int64)
        for i, p in enumerate(self.perms):
            for j, q in enumerate(self.perms):
                comp[i, j] = self._index[compose(p, q)]
        self.compose_table = freeze(comp)
        inv = np.zeros(k, dtype=np.int64)
        for i in range(k):
            inv[i] = int(np.argmax(comp[i] == self.identity_index))
        self.inverse_table = freeze(inv)
        self.arrays = freeze(np.array(self.perms))

    def _validate(self) -> None:
        g = self.group
        ident = identity_perm(g.order)
        if ident not in self.perms:
            raise ValidationError("automorphism set lacks the identity map")
        for p in self.perms:
            if not is_additive_automorphism(p, g):
                raise ValidationError(f"map {p} is not an additive automorphism")
        have = set(self.perms)
        for p in self.perms:
            if invert(p) not in have:
                raise ValidationError(f"automorphism set not closed under inverse of {p}")
            for q in self.perms:
                if compose(p, q) not in have:
                    raise ValidationError("automorphism set not closed under composition")

    @property
    def order(self) -> int:
        return len(self.perms)

    def index_of(self, perm: Perm) -> int:
        return self._index[tuple(perm)]

    def subgroup(self, indices) -> "AutomorphismGroup":
        return AutomorphismGroup(self.group, [self.perms[i] for i in indices])

    @classmethod
    def from_generators(cls, group: FiniteGroup, gens) -> "AutomorphismGroup":
        """Close a set of generator permutations under composition and inverse."""
        gens = [tuple(g) for g in gens]
        for g in gens:
            if not is_additive_automorphism(g, group):
                raise ValidationError(f"generator {g} is not an additive automorphism")
        have = {identity_perm(group.order)}
        frontier = list(have)
        while frontier:
            p = frontier.pop()
            for g in gens:
                for q in (compose(p, g), invert(compose(p, g))):
                    if q not in have:
                        have.add(q)
                        frontier.append(q)
        return cls(group, have, validate=False)

    def __repr__(self) -> str:
        return f"AutomorphismGroup(order={self.order} on {self.group.name})"


def automorphism_group(group: FiniteGroup) -> AutomorphismGroup:
    """The full automorphism group, by brute force over generator images."""
    return AutomorphismGroup(group, group_isomorphisms(group, group), validate=False)


def is_fixed_point_free(phi: AutomorphismGroup, group: FiniteGroup) -> bool:
    """True iff every non-identity map in phi fixes only 0."""
    ident = identity_perm(group.order)
    for p in phi.perms:
        if p == ident:
            continue
        if any(p[x] == x for x in range(1, group.order)):
            return False
    return True


def minus_id_plus_phi_bijective(perm: Perm, group: FiniteGroup) -> bool:
    """True iff x -> -x + perm[x] is a bijection of the group."""
    p = np.asarray(perm, dtype=np.int64)
    image = group.add[group.neg, p]
    return len(set(image.tolist())) == group.order


@dataclass(frozen=True)
class Orbit:
    """An orbit of a right automorphism action, sorted by least member."""

    representative: int
    members: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self.members


def orbits(phi: AutomorphismGroup, group: FiniteGroup) -> list[Orbit]:
    """Partition into phi-orbits: the singleton {0} first, then by least member."""
    out = [Orbit(0, (0,))]
    seen = {0}
    for x in range(1, group.order):
        if x in seen:
            continue
        members = tuple(sorted({p[x] for p in phi.perms}))
        seen.update(members)
        out.append(Orbit(members[0], members))
    return out


def centre_of(phi: AutomorphismGroup) -> AutomorphismGroup:
    """The subgroup of maps commuting with every element of phi."""
    comp = phi.compose_table
    central = [i for i in range(phi.order) if (comp[i] == comp[:, i]).all()]
    return phi.subgroup(central)
