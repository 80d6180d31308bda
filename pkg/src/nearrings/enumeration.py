"""Exhaustive, isomorphism-reduced enumeration of planar nearrings.

For every catalog group, every conjugacy class of fixed-point-free
automorphism subgroup (the trivial one included; planarity itself rejects
it), every representative choice and every zero-multiplier subset, the
Ferrero table is built and kept when planar.  Candidates on one group are
isomorphic exactly when an additive automorphism carries one multiplication
table to the other, so each candidate is reduced to the lexicographically
least relabeling of its table over Aut(G,+) and classes are merged by that
canonical key.  Work is partitioned by (group, Phi class); partitions are
isomorphism-closed, so merging is trivially deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .catalog import all_catalog_groups, catalog_group, cyclic_group
from .errors import ValidationError
from .ferrero import FerreroPair, PlanarNearring, RepChoice, construct, is_planar
from .groups import (
    AutomorphismGroup,
    FiniteGroup,
    Perm,
    automorphism_group,
    group_isomorphisms,
    identity_perm,
)


def fpf_automorphism_groups(group: FiniteGroup) -> list[AutomorphismGroup]:
    """All fixed-point-free automorphism subgroups up to conjugacy in Aut(G).

    Found by closing sets of fixed-point-free elements, pruning any closure
    that picks up a non-fpf element or outgrows n-1 (orbits of a fpf group
    on nonzero elements all have size |Phi|).  The trivial group is included.
    """
    auts = automorphism_group(group)
    n = group.order
    k = auts.order
    comp = auts.compose_table
    inv = auts.inverse_table
    ident = auts.identity_index
    is_fpf = np.zeros(k, dtype=bool)
    for i, p in enumerate(auts.perms):
        if i != ident:
            is_fpf[i] = all(p[x] != x for x in range(1, n))
    fpf_elems = [i for i in range(k) if is_fpf[i]]

    def close(seed: frozenset[int]) -> frozenset[int] | None:
        have = set(seed) | {ident}
        frontier = list(have)
        while frontier:
            x = frontier.pop()
            new = {int(inv[x])} | {int(comp[x, y]) for y in have} \
                | {int(comp[y, x]) for y in have}
            for z in new:
                if z not in have:
                    if z != ident and not is_fpf[z]:
                        return None
                    have.add(z)
                    frontier.append(z)
                    if len(have) > n - 1 and n > 1:
                        return None
        return frozenset(have)

    found = {frozenset({ident})}
    frontier = [frozenset({ident})]
    while frontier:
        S = frontier.pop()
        for f in fpf_elems:
            if f not in S:
                T = close(S | {f})
                if T is not None and T not in found:
                    found.add(T)
                    frontier.append(T)

    def conjugacy_key(S: frozenset[int]) -> tuple[int, ...]:
        best = None
        for g in range(k):
            gi = int(inv[g])
            image = tuple(sorted(int(comp[gi, int(comp[s, g])]) for s in S))
            if best is None or image < best:
                best = image
        return best

    reduced: dict[tuple[int, ...], frozenset[int]] = {}
    for S in found:
        reduced.setdefault(conjugacy_key(S), S)
    groups = [auts.subgroup(sorted(reduced[key])) for key in sorted(reduced)]
    groups.sort(key=lambda g: (g.order, g.perms))
    return groups


# ---------------------------------------------------------------------------
# fingerprints and explicit isomorphism testing

def fingerprint(nr: PlanarNearring) -> tuple:
    """An isomorphism-invariant signature: global counts plus the sorted
    multiset of per-element profiles (additive order, additive-order
    multisets of the element's product row and column, membership in D and
    in the zero multipliers)."""
    from .analysis import distributive_elements

    n = nr.order
    add_order = [nr.group.element_order(x) for x in range(n)]
    dist = set(distributive_elements(nr))
    zm = set(nr.zero_multiplier_elements())
    profiles = []
    for x in range(n):
        row = tuple(sorted(add_order[int(v)] for v in nr.mul[x]))
        col = tuple(sorted(add_order[int(v)] for v in nr.mul[:, x]))
        profiles.append((add_order[x], row, col, x in dist, x in zm))
    return (n, len(dist), len(zm), nr.group.is_abelian(), tuple(sorted(profiles)))


def nearrings_isomorphic(n1: PlanarNearring, n2: PlanarNearring) -> Perm | None:
    """A bijection preserving both tables, or None.

    Every nearring isomorphism is an additive isomorphism, so the search
    runs over those, pruned by the fingerprint.
    """
    if n1.order != n2.order:
        return None
    if fingerprint(n1) != fingerprint(n2):
        return None
    for phi in group_isomorphisms(n1.group, n2.group):
        arr = np.asarray(phi, dtype=np.int64)
        if (arr[n1.mul] == n2.mul[np.ix_(arr, arr)]).all():
            return phi
    return None


# ---------------------------------------------------------------------------
# the sweep

@dataclass(frozen=True)
class IsoClass:
    representative: PlanarNearring
    group_name: str
    phi_order: int
    fingerprint: tuple
    canonical_key: bytes
    members_found: int


def _canonical_key(mul: np.ndarray, aut_arrays, aut_inverses) -> bytes:
    best = None
    for a, ai in zip(aut_arrays, aut_inverses):
        t = a[mul[np.ix_(ai, ai)]]
        b = t.tobytes()
        if best is None or b < best:
            best = b
    return best


def _sweep_partition(group: FiniteGroup, phi: AutomorphismGroup,
                     aut_arrays, aut_inverses) -> list[dict]:
    """All planar iso classes arising from one (group, Phi class) partition."""
    n = group.order
    pair = FerreroPair(group, phi)
    orbs = [o.members for o in pair.nonzero_orbits]
    perms = phi.arrays
    k = phi.order
    # planarity: >= 3 multiplier classes needs |Phi| >= 2 and some free orbit;
    # the unique-solution half is the bijectivity of -id + phi, already
    # verified for the whole class by the FerreroPair constructor.
    found: dict[bytes, dict] = {}
    member_arrays = [np.array(o) for o in orbs]
    for reps in itertools.product(*orbs):
        f_of = np.zeros(n, dtype=np.int64)
        for r in reps:
            for pi in range(k):
                f_of[perms[pi, r]] = pi
        base = perms[f_of].T.copy()
        base[:, 0] = 0
        for zm_mask in range(1 << len(orbs)):
            if k < 2 or zm_mask == (1 << len(orbs)) - 1:
                continue  # at most 2 multiplier classes: not planar
            mul = base.copy()
            for oi, members in enumerate(member_arrays):
                if zm_mask >> oi & 1:
                    mul[:, members] = 0
            key = _canonical_key(mul, aut_arrays, aut_inverses)
            hit = found.get(key)
            if hit is None:
                found[key] = {
                    "reps": reps,
                    "zero": tuple(r for oi, r in enumerate(reps) if zm_mask >> oi & 1),
                    "count": 1,
                }
            else:
                hit["count"] += 1
    return [dict(key=key, **info) for key, info in sorted(found.items())]


def _partition_worker(task) -> list[dict]:
    order, name, phi_index = task
    group = catalog_group(order, name)
    phis = fpf_automorphism_groups(group)
    auts = automorphism_group(group)
    aut_arrays = [np.asarray(p, dtype=np.int64) for p in auts.perms]
    aut_inverses = [np.argsort(a) for a in aut_arrays]
    out = _sweep_partition(group, phis[phi_index], aut_arrays, aut_inverses)
    for rec in out:
        rec["order"], rec["name"], rec["phi_index"] = order, name, phi_index
    return out


def enumerate_planar_nearrings(max_order: int, which: str = "all",
                               jobs: int = 1) -> list[IsoClass]:
    """Every planar nearring up to order max_order, one per isomorphism class.

    which = "all" keeps everything; "nontrivial-distributive" keeps classes
    with |D(N)| > 1.  The result is ordered by (order, fingerprint,
    canonical key) and is deterministic, jobs or not.
    """
    if which not in ("all", "nontrivial-distributive"):
        raise ValueError(f"unknown filter {which!r}")
    if max_order < 1:
        raise ValueError("max_order must be positive")
    records = _run_sweep(min(max_order, 15), jobs)
    classes = []
    for rec in records:
        group = catalog_group(rec["order"], rec["name"])
        phis = fpf_automorphism_groups(group)
        pair = FerreroPair(group, phis[rec["phi_index"]])
        nr = construct(pair, RepChoice(tuple(sorted(rec["reps"])), rec["zero"]),
                       name=f"{rec['name']}#{rec['phi_index']}")
        check = is_planar(nr, exhaustive=True)
        if not check.planar:
            raise ValidationError(f"swept candidate is not planar: {check}")
        classes.append(IsoClass(
            representative=nr,
            group_name=rec["name"],
            phi_order=pair.phi.order,
            fingerprint=fingerprint(nr),
            canonical_key=rec["key"],
            members_found=rec["count"],
        ))
    if which == "nontrivial-distributive":
        classes = [c for c in classes if c.fingerprint[1] > 1]
    classes.sort(key=lambda c: (c.representative.order, c.fingerprint, c.canonical_key))
    return classes


@lru_cache(maxsize=4)
def _run_sweep(max_order: int, jobs: int = 1) -> tuple[dict, ...]:
    tasks = []
    for group in all_catalog_groups(max_order):
        order, name = group.order, group.name
        for phi_index in range(len(fpf_automorphism_groups(group))):
            tasks.append((order, name, phi_index))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            chunks = pool.map(_partition_worker, tasks)
    else:
        chunks = [_partition_worker(t) for t in tasks]
    return tuple(rec for chunk in chunks for rec in chunk)


# ---------------------------------------------------------------------------
# the cyclic p-squared family

def zp2_family(p: int) -> PlanarNearring:
    """The nearring on Z_{p^2} whose distributive elements are exactly the
    zero multipliers p.Z_{p^2}.

    Phi is the unique order-(p-1) subgroup of the multiplicative units, the
    zero-multiplier orbit is the nonzero multiples of p with representative
    p, and the free representatives form the coset 2 + p.Z_{p^2} (which for
    p = 3 reproduces the order-9 example verbatim).
    """
    if p not in (3, 5, 7, 11):
        raise ValueError("p must be an odd prime at most 11")
    n = p * p
    group = cyclic_group(n)
    units = [u for u in range(1, n) if u % p != 0]
    phi_units = [u for u in units if pow(u, p - 1, n) == 1]
    perms = [tuple((u * x) % n for x in range(n)) for u in phi_units]
    phi = AutomorphismGroup(group, perms)
    pair = FerreroPair(group, phi)
    reps = [p] + [2 + k * p for k in range(p)]
    return construct(pair, RepChoice(tuple(sorted(reps)), (p,)), name=f"Z{n}-family")
