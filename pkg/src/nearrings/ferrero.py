"""The Ferrero-pair construction of planar nearrings and its accessors.

A pair (N, Phi) with Phi a fixed-point-free automorphism group such that
-id + phi is bijective for non-identity phi, together with a choice of orbit
representatives R and a subset M of them, determines a multiplication

    a * b = 0           if b = 0 or the representative of b lies in M,
    a * b = a . phi_b   otherwise, where b = r_b . phi_b uniquely.

Multiplication tables are materialized eagerly; every constructed nearring
is checked against the nearring axioms by exhaustion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndeterminateError, ValidationError
from .groups import (
    AutomorphismGroup,
    FiniteGroup,
    Orbit,
    freeze,
    identity_perm,
    is_fixed_point_free,
    minus_id_plus_phi_bijective,
    orbits,
)


class FerreroPair:
    """A group with a fixed-point-free automorphism group acting on it."""

    def __init__(self, group: FiniteGroup, phi: AutomorphismGroup, validate: bool = True):
        self.group = group
        self.phi = phi
        if validate:
            if phi.group is not group and phi.group.add.tobytes() != group.add.tobytes():
                raise ValidationError("phi does not act on the given group")
            if not is_fixed_point_free(phi, group):
                raise ValidationError("phi is not fixed point free")
            ident = identity_perm(group.order)
            for p in phi.perms:
                if p != ident and not minus_id_plus_phi_bijective(p, group):
                    raise ValidationError(f"-id + {p} is not bijective")
        self.orbits = orbits(phi, group)

    @property
    def nonzero_orbits(self) -> list[Orbit]:
        return self.orbits[1:]

    def __repr__(self) -> str:
        return f"FerreroPair({self.group.name}, |Phi|={self.phi.order})"


@dataclass(frozen=True)
class RepChoice:
    """Chosen orbit representatives R and the zero-multiplier subset M."""

    reps: tuple[int, ...]
    zero_reps: tuple[int, ...] = ()


def _validate_choice(pair: FerreroPair, choice: RepChoice) -> None:
    reps = list(choice.reps)
    if len(set(reps)) != len(reps):
        raise ValidationError(f"duplicate representatives in {reps}")
    by_orbit = {}
    for r in reps:
        hits = [o for o in pair.nonzero_orbits if r in o]
        if not hits:
            raise ValidationError(f"representative {r} is not a nonzero element")
        if hits[0].representative in by_orbit:
            raise ValidationError(f"orbit {hits[0].members} is covered twice")
        by_orbit[hits[0].representative] = r
    missed = [o.members for o in pair.nonzero_orbits if o.representative not in by_orbit]
    if missed:
        raise ValidationError(f"representatives miss orbits {missed}")
    if not set(choice.zero_reps) <= set(reps):
        raise ValidationError("zero-multiplier set is not a subset of the representatives")


class PlanarNearring:
    """Addition and multiplication tables plus optional construction metadata."""

    def __init__(self, add, mul, meta: tuple[FerreroPair, RepChoice] | None = None,
                 name: str = "N", validate: bool = True):
        self.add = freeze(add)
        self.mul = freeze(mul)
        self.meta = meta
        self.name = str(name)
        self.group = FiniteGroup(self.add, f"({name},+)", validate=validate)
        self.neg = self.group.neg
        if validate:
            fail = self._axiom_failure()
            if fail is not None:
                raise ValidationError(f"{self.name}: {fail}")
        self.factor_rep: np.ndarray | None = None
        self.factor_phi: np.ndarray | None = None
        if meta is not None:
            self._build_factorization()

    @property
    def order(self) -> int:
        return len(self.add)

    def _axiom_failure(self) -> str | None:
        add, mul = self.add, self.mul
        if (mul[0] != 0).any() or (mul[:, 0] != 0).any():
            return "not zero symmetric"
        mism = np.argwhere(mul[add, :] != add[mul[:, None, :], mul[None, :, :]])
        if len(mism):
            a, b, c = (int(v) for v in mism[0])
            return f"right distributivity fails at ({a},{b},{c})"
        mism = np.argwhere(mul[mul] != mul[:, mul])
        if len(mism):
            a, b, c = (int(v) for v in mism[0])
            return f"associativity fails at ({a},{b},{c})"
        return None

    def _build_factorization(self) -> None:
        pair, choice = self.meta
        n = self.order
        rep = np.full(n, -1, dtype=np.int64)
        phi_idx = np.full(n, -1, dtype=np.int64)
        for r in choice.reps:
            for pi, p in enumerate(pair.phi.perms):
                a = p[r]
                if rep[a] != -1:
                    raise ValidationError(
                        f"element {a} factors both as {rep[a]}.phi and {r}.phi")
                rep[a] = r
                phi_idx[a] = pi
        if (rep[1:] == -1).any():
            missing = int(np.argmax(rep[1:] == -1)) + 1
            raise ValidationError(f"element {missing} has no factorization")
        self.factor_rep = freeze(rep)
        self.factor_phi = freeze(phi_idx)

    def zero_multiplier_elements(self) -> tuple[int, ...]:
        """{0} plus the elements whose multiplication column is all zero."""
        zero_cols = (self.mul == 0).all(axis=0)
        return tuple(int(b) for b in np.flatnonzero(zero_cols))

    def __repr__(self) -> str:
        return f"PlanarNearring({self.name}, order={self.order})"


def construct(pair: FerreroPair, choice: RepChoice, name: str | None = None) -> PlanarNearring:
    """Materialize the multiplication table for a Ferrero pair and rep choice."""
    _validate_choice(pair, choice)
    g = pair.group
    n = g.order
    perms = pair.phi.arrays
    zero_set = set(choice.zero_reps)
    mul = np.zeros((n, n), dtype=np.int64)
    for r in choice.reps:
        if r in zero_set:
            continue
        for pi in range(pair.phi.order):
            b = int(perms[pi, r])
            mul[:, b] = perms[pi]
    if name is None:
        name = f"{g.name}/Phi{pair.phi.order}"
    return PlanarNearring(g.add, mul, meta=(pair, choice), name=name)


def factorize(nr: PlanarNearring, a: int) -> tuple[int, int]:
    """The unique (representative, phi index) with a = r_a . phi_a."""
    if a == 0:
        raise ValueError("0 has no orbit factorization")
    if nr.factor_rep is None:
        raise ValidationError("nearring has no construction metadata")
    return int(nr.factor_rep[a]), int(nr.factor_phi[a])


@dataclass(frozen=True)
class MultiplierClasses:
    """Partition of elements by column equality of the multiplication table."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


def multiplier_classes(nr: PlanarNearring) -> MultiplierClasses:
    """Group elements a ~ b whenever x*a = x*b for every x."""
    by_col: dict[bytes, list[int]] = {}
    for b in range(nr.order):
        by_col.setdefault(nr.mul[:, b].tobytes(), []).append(b)
    classes = tuple(sorted((tuple(v) for v in by_col.values()), key=lambda c: c[0]))
    class_of = [0] * nr.order
    for ci, cls in enumerate(classes):
        for b in cls:
            class_of[b] = ci
    return MultiplierClasses(classes, tuple(class_of))


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    mode: str  # "exhaustive" or "by-construction"
    witness: tuple | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.planar


EXHAUSTIVE_PLANARITY_LIMIT = 32


def is_planar(nr: PlanarNearring, exhaustive: bool | None = None) -> PlanarityResult:
    """Decide planarity: >= 3 multiplier classes and x*a = x*b + c uniquely solvable.

    With `exhaustive` unset, orders above 32 fall back to re-verifying the
    Ferrero preconditions on the construction metadata ("planar by
    construction"); pass exhaustive=True to force the full check anywhere.
    """
    if exhaustive is None:
        exhaustive = nr.order <= EXHAUSTIVE_PLANARITY_LIMIT
    if not exhaustive:
        if nr.meta is None:
            raise IndeterminateError(
                "cannot decide planarity without metadata; pass exhaustive=True")
        pair, choice = nr.meta
        FerreroPair(pair.group, pair.phi)  # re-run the precondition checks
        _validate_choice(pair, choice)
        if pair.phi.order < 2:
            return PlanarityResult(False, "by-construction", reason="fewer than 3 classes")
        if len(choice.zero_reps) == len(choice.reps):
            return PlanarityResult(False, "by-construction", reason="fewer than 3 classes")
        return PlanarityResult(True, "by-construction")

    classes = multiplier_classes(nr)
    if len(classes) < 3:
        return PlanarityResult(False, "exhaustive",
                               reason=f"only {len(classes)} multiplier classes")
    # For inequivalent a, b the map x -> -(x*b) + x*a hits each c exactly once
    # iff it is a bijection; a failure witness is a repeated or missing value.
    reps = [cls[0] for cls in classes.classes]
    for a in reps:
        col_a = nr.mul[:, a]
        for b in reps:
            if a == b:
                continue
            diff = nr.add[nr.neg[nr.mul[:, b]], col_a]
            counts = np.bincount(diff, minlength=nr.order)
            if (counts == 1).all():
                continue
            c = int(np.argmax(counts != 1))
            return PlanarityResult(False, "exhaustive", witness=(a, b, c, int(counts[c])))
    return PlanarityResult(True, "exhaustive")


def right_identities(nr: PlanarNearring) -> tuple[int, ...]:
    """All e with x*e = x for every x."""
    hits = (nr.mul == np.arange(nr.order)[:, None]).all(axis=0)
    return tuple(int(e) for e in np.flatnonzero(hits))


def nearring_from_nearfield(field) -> PlanarNearring:
    """View a nearfield as a planar nearring, with provenance attached.

    Phi is the group of right multiplication maps, R = {1} and M is empty;
    the resulting Ferrero table reproduces the nearfield multiplication.
    """
    g = FiniteGroup(field.add, f"({field.name},+)", validate=False)
    maps = [tuple(int(v) for v in field.mul[:, c]) for c in range(1, field.order)]
    phi = AutomorphismGroup(g, maps)
    pair = FerreroPair(g, phi)
    nr = construct(pair, RepChoice((field.one,), ()), name=field.name)
    if nr.mul.tobytes() != field.mul.tobytes():
        raise ValidationError(f"{field.name}: Ferrero table differs from field table")
    return nr


def reconstruct_provenance(nr: PlanarNearring) -> PlanarNearring:
    """Rebuild (Phi, R, M) from a bare planar table and attach it.

    Phi is recovered as the set of nonzero multiplication columns, R as the
    right identity of each free orbit plus the least member of each
    zero-multiplier orbit; the reconstruction must reproduce the table.
    """
    if nr.meta is not None:
        return nr
    n = nr.order
    cols = {nr.mul[:, b].tobytes(): tuple(int(v) for v in nr.mul[:, b]) for b in range(n)}
    perms = [c for c in cols.values() if sorted(c) == list(range(n))]
    if not perms:
        raise ValidationError("no invertible multiplication column; table is not planar")
    phi = AutomorphismGroup(nr.group, perms)
    if phi.order != len(perms):
        raise ValidationError("multiplication columns are not closed as a group")
    pair = FerreroPair(nr.group, phi)
    rid = set(right_identities(nr))
    reps, zero_reps = [], []
    for orb in pair.nonzero_orbits:
        zero_orbit = (nr.mul[:, orb.representative] == 0).all()
        if zero_orbit:
            reps.append(orb.representative)
            zero_reps.append(orb.representative)
        else:
            inside = sorted(rid.intersection(orb.members))
            if len(inside) != 1:
                raise ValidationError(
                    f"orbit {orb.members} has {len(inside)} right identities, expected 1")
            reps.append(inside[0])
    rebuilt = construct(pair, RepChoice(tuple(reps), tuple(zero_reps)), name=nr.name)
    if rebuilt.mul.tobytes() != nr.mul.tobytes():
        raise ValidationError("reconstructed provenance does not reproduce the table")
    return rebuilt
