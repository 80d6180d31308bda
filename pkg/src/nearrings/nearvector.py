"""Nearvector spaces in component form and their derived planar nearrings.

A space is a list of components over one scalar nearfield F, each with a
multiplicative twist psi_i (a bijection of F fixing 0 whose nonzero part
preserves multiplication).  Scalars act coordinatewise from the right:

    (x_1, ..., x_n) . alpha = (x_1 * psi_1(alpha), ..., x_n * psi_n(alpha))

Vectors are encoded big-endian as integers base |F| so the derived nearrings
reuse the table machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .ferrero import FerreroPair, PlanarNearring, RepChoice, construct
from .groups import AutomorphismGroup, FiniteGroup, Perm, orbits
from .nearfields import Nearfield, kern, nearfield_automorphisms

Vector = tuple[int, ...]


def identity_twist(field: Nearfield) -> Perm:
    return tuple(range(field.order))


def power_twist(field: Nearfield, k: int) -> Perm:
    """x -> x^k on the multiplicative group, fixing 0."""
    out = [0] * field.order
    for x in range(1, field.order):
        y = field.one
        for _ in range(k):
            y = int(field.mul[y, x])
        out[x] = y
    return tuple(out)


def _check_twist(field: Nearfield, psi: Perm) -> None:
    if len(psi) != field.order or psi[0] != 0 or len(set(psi)) != field.order:
        raise ValidationError(f"twist {psi} is not a bijection fixing 0")
    for a in range(1, field.order):
        for b in range(1, field.order):
            if psi[field.mul[a, b]] != field.mul[psi[a], psi[b]]:
                raise ValidationError(
                    f"twist is not multiplicative at ({a},{b}):"
                    f" psi({a}*{b}) != psi({a})*psi({b})")


class NearvectorSpace:
    """Components F^n over a scalar nearfield, with per-component twists."""

    def __init__(self, scalar: Nearfield, twists, validate: bool = True):
        self.scalar = scalar
        self.twists: tuple[Perm, ...] = tuple(tuple(t) for t in twists)
        if not self.twists:
            raise ValidationError("a nearvector space needs at least one component")
        if validate:
            for psi in self.twists:
                _check_twist(scalar, psi)
        q, n = scalar.order, len(self.twists)
        self.dimension = n
        self.order = q ** n
        # vector index = sum coords[i] * q^(n-1-i)
        self._weights = tuple(q ** (n - 1 - i) for i in range(n))
        add = scalar.add
        grid = np.zeros((self.order, self.order), dtype=np.int64)
        coords = np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64)
        w = np.array(self._weights)
        for i in range(self.order):
            grid[i] = (add[coords[i], coords] @ w)
        self.group = FiniteGroup(grid, f"({scalar.name}^{n},+)", validate=False)
        # scalar action permutations, one per scalar
        act = np.zeros((q, self.order), dtype=np.int64)
        for alpha in range(q):
            imgs = np.stack([scalar.mul[coords[:, i], psi[alpha]]
                             for i, psi in enumerate(self.twists)], axis=1)
            act[alpha] = imgs @ w
        self.action = act
        self.action.setflags(write=False)
        if validate:
            self._validate_action()

    def encode(self, coords: Vector) -> int:
        return sum(c * w for c, w in zip(coords, self._weights))

    def decode(self, index: int) -> Vector:
        q = self.scalar.order
        out = []
        for w in self._weights:
            out.append(index // w)
            index %= w
        return tuple(out)

    def _validate_action(self) -> None:
        q = self.scalar.order
        add = self.group.add
        for alpha in range(1, q):
            p = self.action[alpha]
            if (p[add] != add[np.ix_(p, p)]).any():
                raise ValidationError(f"scalar {alpha} does not act additively")
            if alpha != self.scalar.one and (p[1:] == np.arange(1, self.order)).any():
                v = int(np.argmax(p[1:] == np.arange(1, self.order))) + 1
                raise ValidationError(f"scalar {alpha} fixes nonzero vector {v}")

    def scalar_group(self) -> AutomorphismGroup:
        perms = [tuple(int(v) for v in self.action[a]) for a in range(1, self.scalar.order)]
        return AutomorphismGroup(self.group, perms)

    def __repr__(self) -> str:
        return f"NearvectorSpace({self.scalar.name}^{self.dimension})"


def make_nearvector_space(field: Nearfield, twists) -> NearvectorSpace:
    """Build and fully validate a component-form nearvector space."""
    return NearvectorSpace(field, twists)


def quasi_kernel(space: NearvectorSpace) -> tuple[Vector, ...]:
    """All x with: for every pair of scalars, x.alpha + x.beta is some x.gamma."""
    q = space.scalar.order
    add = space.group.add
    act = space.action
    out = []
    for v in range(space.order):
        reachable = set(int(act[g, v]) for g in range(q))
        imgs = act[:, v]
        sums = add[np.ix_(imgs, imgs)]
        if all(int(s) in reachable for s in sums.flat):
            out.append(space.decode(v))
    return tuple(sorted(out))


def regular_decomposition(space: NearvectorSpace) -> tuple[tuple[int, ...], ...]:
    """Partition component indices: i ~ j iff psi_j = psi_i followed by a
    nearfield automorphism of the scalar nearfield."""
    autos = nearfield_automorphisms(space.scalar)
    n = space.dimension
    parts: list[list[int]] = []
    for i in range(n):
        placed = False
        for part in parts:
            j = part[0]
            pi, pj = space.twists[i], space.twists[j]
            if any(tuple(theta[x] for x in pj) == pi for theta in autos):
                part.append(i)
                placed = True
                break
        if not placed:
            parts.append([i])
    return tuple(tuple(p) for p in parts)


def _kernel_orbit_reps(space: NearvectorSpace, coordinate: int,
                       phi: AutomorphismGroup) -> list[tuple[int, ...]]:
    orbs = orbits(phi, space.group)[1:]
    return [o.members for o in orbs
            if all(space.decode(m)[coordinate] == 0 for m in o.members)]


def derived_planar_nearring(space: NearvectorSpace, coordinate: int = 0,
                            zero_reps=None) -> PlanarNearring:
    """The planar nearring a*b = a.(coordinate of b) on the space.

    zero_reps optionally picks one representative per orbit inside the
    kernel of the projection; the default takes each least member.  The
    table from the representative data must agree with the direct
    definition, which is asserted.
    """
    if not 0 <= coordinate < space.dimension:
        raise ValueError(f"coordinate {coordinate} out of range")
    phi = space.scalar_group()
    pair = FerreroPair(space.group, phi)
    kernel_orbits = _kernel_orbit_reps(space, coordinate, phi)
    if zero_reps is None:
        zero = tuple(o[0] for o in kernel_orbits)
    else:
        zero = tuple(space.encode(v) if isinstance(v, tuple) else int(v)
                     for v in zero_reps)
        chosen = set(zero)
        for z in zero:
            if space.decode(z)[coordinate] != 0:
                raise ValidationError(
                    f"selection {space.decode(z)} is outside the projection kernel")
        for o in kernel_orbits:
            if len(chosen.intersection(o)) != 1:
                raise ValidationError(f"kernel orbit {o} is not covered exactly once")
    reps = list(zero)
    for orb in orbits(phi, space.group)[1:]:
        if orb.members in kernel_orbits:
            continue
        ones = [m for m in orb.members
                if space.decode(m)[coordinate] == space.scalar.one]
        if len(ones) != 1:
            raise ValidationError(f"orbit {orb.members} has {len(ones)} unit projections")
        reps.append(ones[0])
    nr = construct(pair, RepChoice(tuple(sorted(reps)), zero),
                   name=f"{space.scalar.name}^{space.dimension}|coord{coordinate}")
    direct = space.action[[space.decode(b)[coordinate] for b in range(space.order)]].T
    if nr.mul.tobytes() != direct.astype(np.int64).tobytes():
        raise ValidationError("derived table disagrees with a*(b projection)")
    return nr


def twist_adjusted_kern(field: Nearfield, psi: Perm) -> tuple[int, ...]:
    """Elements w with w.psi(x+y) = w.psi(x) + w.psi(y) for all x, y."""
    out = []
    for w in range(field.order):
        if all(field.mul[w, psi[field.add[x, y]]]
               == field.add[field.mul[w, psi[x]], field.mul[w, psi[y]]]
               for x in range(field.order) for y in range(field.order)):
            out.append(w)
    return tuple(out)


@dataclass(frozen=True)
class BlockComparison:
    components: tuple[int, ...]
    intersection: tuple[Vector, ...]      # D meet the block subspace
    plain_kern_power: tuple[Vector, ...]  # kern(F)^{n_i} embedded in the block
    twist_kern_power: tuple[Vector, ...]  # product of twist-adjusted kerns
    matches_plain: bool
    matches_twist_adjusted: bool


@dataclass(frozen=True)
class ConjectureReport:
    """Observed distributive structure of a derived nearring versus the
    predicted per-block kern powers.  Both the plain reading (kern of the
    scalar nearfield) and the twist-adjusted reading are reported; neither
    is asserted."""

    distributive: tuple[Vector, ...]
    blocks: tuple[BlockComparison, ...]
    splits_over_blocks: bool

    def lines(self) -> list[str]:
        out = [f"D = {[list(v) for v in self.distributive]}",
               f"splits over regular blocks: {self.splits_over_blocks}"]
        for b in self.blocks:
            out.append(
                f"block {list(b.components)}: |D meet block| = {len(b.intersection)},"
                f" plain kern power {'matches' if b.matches_plain else 'differs'},"
                f" twist-adjusted {'matches' if b.matches_twist_adjusted else 'differs'}")
        return out


def check_conjecture(space: NearvectorSpace, coordinate: int = 0,
                     zero_reps=None) -> ConjectureReport:
    """Compare brute-forced D of the derived nearring with kern powers per block."""
    from .analysis import distributive_elements

    nr = derived_planar_nearring(space, coordinate, zero_reps)
    dist = [space.decode(d) for d in distributive_elements(nr)]
    dist_set = set(dist)
    blocks = regular_decomposition(space)
    K = kern(space.scalar)
    comparisons = []
    sum_embed = {tuple([0] * space.dimension)}
    for comp in blocks:
        in_block = sorted(v for v in dist_set
                          if all(v[i] == 0 for i in range(space.dimension) if i not in comp))
        plain = _embedded_power(space, comp, [K] * len(comp))
        twists = [twist_adjusted_kern(space.scalar, space.twists[i]) for i in comp]
        twist = _embedded_power(space, comp, twists)
        comparisons.append(BlockComparison(
            comp, tuple(in_block), plain, twist,
            matches_plain=set(in_block) == set(plain),
            matches_twist_adjusted=set(in_block) == set(twist)))
        sum_embed = {_vec_add(space, u, v) for u in sum_embed for v in in_block}
    return ConjectureReport(tuple(sorted(dist)), tuple(comparisons),
                            splits_over_blocks=sum_embed == dist_set)


def _vec_add(space: NearvectorSpace, u: Vector, v: Vector) -> Vector:
    return tuple(int(space.scalar.add[a, b]) for a, b in zip(u, v))


def _embedded_power(space: NearvectorSpace, comp, member_sets) -> tuple[Vector, ...]:
    out = []
    for combo in itertools.product(*member_sets):
        vec = [0] * space.dimension
        for i, c in zip(comp, combo):
            vec[i] = c
        out.append(tuple(vec))
    return tuple(sorted(out))
