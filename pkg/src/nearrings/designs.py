"""Block designs from planar nearrings and the closed-orbit structure checks.

Blocks are the translates a.Phi* + b of the basic blocks a.Phi* = orbit of a
together with 0.  Balance is decided only by the exhaustive pair-coverage
count; no parameter formulas are assumed.  Degenerate designs (k = v, or
colliding translates) are flagged, not rejected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .ferrero import PlanarNearring, reconstruct_provenance
from .nearfields import Nearfield, nearfield_axiom_failure


def _orbit_star_sets(nr: PlanarNearring) -> list[tuple[int, ...]]:
    """The sets a.Phi ∪ {0}, one per nonzero orbit, in representative order."""
    if nr.meta is None:
        raise ValidationError("block extraction needs construction metadata")
    pair, choice = nr.meta
    by_rep = {}
    for orb in pair.nonzero_orbits:
        by_rep[orb.representative] = tuple(sorted({0, *orb.members}))
    ordered = []
    for r in sorted(choice.reps):
        orb = next(o for o in pair.nonzero_orbits if r in o.members)
        if by_rep.get(orb.representative) is not None:
            ordered.append(by_rep.pop(orb.representative))
    return ordered


def basic_blocks(nr: PlanarNearring) -> list[tuple[int, ...]]:
    """The distinct sets a.Phi* for nonzero a, deduplicated, in stable order."""
    seen = set()
    out = []
    for block in _orbit_star_sets(nr):
        if block not in seen:
            seen.add(block)
            out.append(block)
    return out


@dataclass(frozen=True)
class BlockDesign:
    points: tuple[int, ...]
    basic: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[int, ...], ...]
    block_size: int
    pair_counts: tuple[tuple[int, int, int], ...]  # (x, y, count), x < y
    balanced: bool
    replication: int | None       # uniform per-point count, when it exists
    coverage: int | None          # lambda, when balanced
    imbalance_witness: tuple[int, int, int] | None
    degenerate: bool              # k = v
    repeated_translates: bool     # distinct (a, b) producing equal blocks

    @property
    def parameters(self) -> tuple[int, int, int, int, int] | None:
        """(v, b, r, k, lambda) for a balanced design with uniform replication."""
        if not self.balanced or self.replication is None:
            return None
        return (len(self.points), len(self.blocks), self.replication,
                self.block_size, self.coverage)


def block_design(nr: PlanarNearring) -> BlockDesign:
    """All translates of the basic blocks with an exhaustive pair count."""
    n = nr.order
    basic = basic_blocks(nr)
    sizes = {len(b) for b in basic}
    if len(sizes) != 1:
        raise ValidationError(f"basic blocks of mixed sizes {sorted(sizes)}")
    blocks = set()
    raw = 0
    for block in basic:
        arr = np.array(block)
        for b in range(n):
            raw += 1
            blocks.add(tuple(sorted(int(v) for v in nr.add[arr, b])))
    ordered = tuple(sorted(blocks))
    counts: dict[tuple[int, int], int] = {}
    point_count = [0] * n
    for block in ordered:
        for x in block:
            point_count[x] += 1
        for x, y in itertools.combinations(block, 2):
            counts[(x, y)] = counts.get((x, y), 0) + 1
    pair_counts = tuple((x, y, counts.get((x, y), 0))
                        for x, y in itertools.combinations(range(n), 2))
    values = {c for _, _, c in pair_counts}
    balanced = len(values) == 1
    # witness: the least-covered pair, ties broken by the pair itself
    witness = None if balanced else min(pair_counts, key=lambda t: (t[2], t))
    k = len(basic[0])
    return BlockDesign(
        points=tuple(range(n)),
        basic=tuple(basic),
        blocks=ordered,
        block_size=k,
        pair_counts=pair_counts,
        balanced=balanced,
        replication=point_count[0] if len(set(point_count)) == 1 else None,
        coverage=values.pop() if balanced else None,
        imbalance_witness=witness,
        degenerate=(k == n),
        repeated_translates=(raw != len(ordered)),
    )


def export_design(design: BlockDesign) -> str:
    """The plain text form: `v b k` header, balance line, one block per line."""
    lines = [f"{len(design.points)} {len(design.blocks)} {design.block_size}"]
    if design.balanced:
        lines.append(f"lambda {design.coverage}")
    else:
        x, y, c = design.imbalance_witness
        lines.append(f"unbalanced {x} {y} {c}")
    for block in design.blocks:
        lines.append(" ".join(str(x) for x in block))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ClosedOrbitsReport:
    all_closed: bool
    witness_orbit: tuple[int, ...] | None      # first non-closed a.Phi*, if any
    witness_sum: tuple[int, int, int] | None   # (x, y, x+y) escaping it
    field_elements: tuple[int, ...] | None
    field: Nearfield | None
    field_is_field: bool
    vector_space_ok: bool
    vs_witness: str | None
    phi_matches_field_units: bool

    @property
    def conclusion_holds(self) -> bool:
        return (self.all_closed and self.field_is_field and self.vector_space_ok
                and self.phi_matches_field_units)


def orbits_additively_closed(nr: PlanarNearring) -> ClosedOrbitsReport:
    """Check closure of every a.Phi* under +, and when everything is closed
    exhibit a subfield orbit and verify N is a vector space over it.

    Orbits are scanned in representative order, so the reported witness is
    the first failure in that order.
    """
    nr = reconstruct_provenance(nr)
    for block in _orbit_star_sets(nr):
        members = set(block)
        for x in block:
            for y in block:
                s = int(nr.add[x, y])
                if s not in members:
                    return ClosedOrbitsReport(False, block, (x, y, s), None, None,
                                              False, False, None, False)
    zm = set(nr.zero_multiplier_elements())
    free = [blk for blk in _orbit_star_sets(nr)
            if not set(blk) - {0} <= zm]
    pair, _ = nr.meta
    if not nr.group.is_abelian() or len(pair.nonzero_orbits) < 2 or not free:
        return ClosedOrbitsReport(True, None, None, None, None, False, False,
                                  "hypotheses (abelian, >1 orbit, free orbit) not met",
                                  False)
    f_elems = free[0]
    local = {e: i for i, e in enumerate(f_elems)}
    m = len(f_elems)
    add = np.array([[local[int(nr.add[x, y])] for y in f_elems] for x in f_elems])
    mul = np.array([[local[int(nr.mul[x, y])] for y in f_elems] for x in f_elems])
    rng = np.arange(nr.order)
    rid = next(e for e in f_elems if e != 0 and (nr.mul[:, e] == rng).all())
    fail = nearfield_axiom_failure(add, mul, local[rid])
    commutative = (mul == mul.T).all()
    field = None
    field_ok = False
    if fail is None:
        field = Nearfield(add, mul, one=local[rid], name=f"{nr.name}|subfield")
        field_ok = field.is_field() and bool(commutative)
    # vector space axioms for N over F with n.f = n*f
    vs_witness = None
    arr = np.array(f_elems)
    scal = nr.mul[:, arr]  # scal[n, i] = n * f_i
    if not (nr.mul[:, nr.add[np.ix_(arr, arr)]]
            == nr.add[scal[:, :, None], scal[:, None, :]]).all():
        vs_witness = "n*(f+g) = n*f + n*g fails"
    elif not (nr.mul[:, nr.mul[np.ix_(arr, arr)]] == nr.mul[scal][:, :, arr]).all():
        vs_witness = "n*(f*g) = (n*f)*g fails"
    elif not (nr.mul[:, rid] == rng).all():
        vs_witness = "the field identity is not a scalar identity"
    # scalar maps of F* against Phi
    phi_cols = {tuple(int(v) for v in nr.mul[:, f]) for f in f_elems if f != 0}
    phi_set = {tuple(p) for p in pair.phi.perms}
    return ClosedOrbitsReport(True, None, None, tuple(f_elems), field,
                              field_ok, vs_witness is None, vs_witness,
                              phi_cols == phi_set)
