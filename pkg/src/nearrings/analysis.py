"""Distributive elements, zero multipliers, ideals, and the generalized centre.

Everything here is computed by exhaustion with early exit; the point of the
package is independent verification, so no algebraic shortcuts are taken on
the result sets themselves.  Closed-form predictions (the four-case centre
classification, the split theorem) are checked against the brute-forced sets
and any disagreement raises TheoremViolationError rather than being resolved
silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import TheoremViolationError, ValidationError
from .ferrero import PlanarNearring, reconstruct_provenance
from .nearfields import Nearfield
from .groups import centre_of


def distributive_elements(nr: PlanarNearring) -> tuple[int, ...]:
    """D(N): all d with d*(a+b) = d*a + d*b for every a, b."""
    left = nr.mul[:, nr.add]
    right = nr.add[nr.mul[:, :, None], nr.mul[:, None, :]]
    good = (left == right).all(axis=(1, 2))
    return tuple(int(d) for d in np.flatnonzero(good))


def zero_multipliers(nr: PlanarNearring) -> tuple[int, ...]:
    """{0} plus every n whose multiplication column is identically zero."""
    return nr.zero_multiplier_elements()


@dataclass(frozen=True)
class IdealCheck:
    status: str  # not-subgroup | not-normal | two-sided | right-only | left-only | not-ideal
    witness: tuple | None = None

    def __str__(self) -> str:
        return self.status if self.witness is None else f"{self.status} {self.witness}"


def is_ideal(nr: PlanarNearring, members) -> IdealCheck:
    """Classify a subset by the subgroup/normality/right/left ideal conditions."""
    S = sorted(set(int(x) for x in members))
    inS = np.zeros(nr.order, dtype=bool)
    inS[S] = True
    if 0 not in S:
        return IdealCheck("not-subgroup", (0,))
    for x in S:
        if not inS[nr.neg[x]]:
            return IdealCheck("not-subgroup", (x,))
        for y in S:
            if not inS[nr.add[x, y]]:
                return IdealCheck("not-subgroup", (x, y, int(nr.add[x, y])))
    arr = np.array(S)
    conj = nr.add[nr.add[:, arr], nr.neg[:, None]]  # n + i - n
    if not inS[conj].all():
        n_i = np.argwhere(~inS[conj])[0]
        return IdealCheck("not-normal", (int(n_i[0]), S[int(n_i[1])]))
    closed_mul = bool(inS[nr.mul[np.ix_(arr, arr)]].all())
    right = nr.mul[arr, :]  # i*n
    right_ok = bool(inS[right].all())
    # n*m - n*(m+i)
    shifted = nr.mul[:, nr.add[:, arr]]
    left_val = nr.add[nr.mul[:, :, None], nr.neg[shifted]]
    left_ok = bool(inS[left_val].all())
    if right_ok and left_ok:
        return IdealCheck("two-sided")
    if right_ok:
        return IdealCheck("right-only")
    if left_ok and closed_mul:
        bad = np.argwhere(~inS[right])[0]
        return IdealCheck("left-only", (S[int(bad[0])], int(bad[1])))
    return IdealCheck("not-ideal")


# ---------------------------------------------------------------------------
# orbit nearfields

def orbit_nearfield(nr: PlanarNearring, d: int) -> Nearfield:
    """The nearfield carried by the orbit of d together with 0.

    For a non zero multiplier the multiplication is the restriction of *;
    for a zero multiplier it is the induced product r.phi1 o r.phi2 =
    r.(phi1 phi2).  Raises ValidationError if the orbit is not additively
    closed or the axioms fail.
    """
    if d == 0:
        raise ValueError("0 spans no orbit nearfield")
    nr = reconstruct_provenance(nr)
    pair, _ = nr.meta
    r = int(nr.factor_rep[d])
    members = next(o.members for o in pair.nonzero_orbits if d in o.members)
    elems = (0,) + members
    local = {e: i for i, e in enumerate(elems)}
    m = len(elems)
    add = np.zeros((m, m), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            s = int(nr.add[x, y])
            if s not in local:
                raise ValidationError(f"orbit of {d} is not additively closed: {x}+{y}={s}")
            add[i, j] = local[s]
    mul = np.zeros((m, m), dtype=np.int64)
    zero_orbit = (nr.mul[:, d] == 0).all()
    if zero_orbit:
        perms = pair.phi
        for x in members:
            for y in members:
                pi = perms.compose_table[nr.factor_phi[x], nr.factor_phi[y]]
                mul[local[x], local[y]] = local[int(perms.arrays[pi, r])]
    else:
        for x in members:
            for y in members:
                p = int(nr.mul[x, y])
                if p not in local:
                    raise ValidationError(f"orbit of {d} not closed under *: {x}*{y}={p}")
                mul[local[x], local[y]] = local[p]
    kind = "o" if zero_orbit else "*"
    return Nearfield(add, mul, one=local[r], name=f"{nr.name}|orbit({d},{kind})")


# ---------------------------------------------------------------------------
# generalized centre

@dataclass(frozen=True)
class GCReport:
    members: tuple[int, ...]
    case_tag: int  # 1..4
    bounds: tuple[tuple[int, ...], tuple[int, ...]] | None = None  # case 3 only

    def __str__(self) -> str:
        return f"case {self.case_tag}: GC = {list(self.members)}"


def _gc_brute_force(nr: PlanarNearring, dist) -> tuple[int, ...]:
    out = []
    for c in range(nr.order):
        if all(nr.mul[c, d] == nr.mul[d, c] for d in dist):
            out.append(c)
    return tuple(out)


def generalized_centre(nr: PlanarNearring) -> GCReport:
    """GC(N) by exhaustion, tagged with the four-case classification.

    The case is inferred from which orbits D(N) meets; the brute-forced set
    must then satisfy that case's closed form (D(N) = {0} takes priority as
    case 4 over the vacuous reading of case 1).
    """
    nr = reconstruct_provenance(nr)
    pair, _ = nr.meta
    dist = distributive_elements(nr)
    zm = set(zero_multipliers(nr))
    gc = _gc_brute_force(nr, dist)
    nonzero_dist = [d for d in dist if d != 0]

    if not nonzero_dist:
        if gc != tuple(range(nr.order)):
            raise TheoremViolationError(f"{nr.name}: trivial D but GC = {gc}")
        return GCReport(gc, 4)

    hit = {}
    for orb in pair.nonzero_orbits:
        if any(d in orb.members for d in nonzero_dist):
            hit[orb.representative] = orb
    all_zm = all(set(o.members) <= zm for o in hit.values())
    if all_zm:
        expected = tuple(sorted(zm))
        if gc != expected:
            raise TheoremViolationError(
                f"{nr.name}: case 1 predicts GC = zero multipliers {expected}, got {gc}")
        return GCReport(gc, 1)
    if len(hit) >= 2:
        if gc != (0,):
            raise TheoremViolationError(f"{nr.name}: case 2 predicts GC = {{0}}, got {gc}")
        return GCReport(gc, 2)

    (orb,) = hit.values()
    a = int(nr.factor_rep[orb.representative])
    upper = tuple(sorted({0, *orb.members}))
    z_phi = centre_of(pair.phi)
    lower = tuple(sorted({0, *(int(p[a]) for p in z_phi.perms)}))
    gcs = set(gc)
    if not set(lower) <= gcs or not gcs <= set(upper):
        raise TheoremViolationError(
            f"{nr.name}: case 3 bounds {lower} <= GC <= {upper} violated by {gc}")
    if nr.group.is_abelian() and gc != upper:
        raise TheoremViolationError(
            f"{nr.name}: finite abelian case 3 predicts GC = {upper}, got {gc}")
    if not nr.group.is_abelian() and (gc != upper or set(dist) != set(upper)):
        raise TheoremViolationError(
            f"{nr.name}: nonabelian case 3 predicts GC = D = {upper}, got GC={gc} D={dist}")
    return GCReport(gc, 3, bounds=(lower, upper))


# ---------------------------------------------------------------------------
# the split theorem

@dataclass(frozen=True)
class SemidirectSplit:
    kernel: tuple[int, ...]              # the zero multipliers K
    field_elements: tuple[int, ...]      # the orbit nearfield F inside N
    field: Nearfield
    components: tuple[tuple[int, int], ...]  # element i -> (k, f) with i = k + f
    action: tuple[tuple[int, ...], ...]  # action[fi][ki]: conjugation of K by F


@dataclass(frozen=True)
class SemidirectReport:
    split: SemidirectSplit | None
    reason: str | None = None

    @property
    def found(self) -> bool:
        return self.split is not None


def semidirect_decomposition(nr: PlanarNearring) -> SemidirectReport:
    """Split N as K x| F when a non-zero-multiplier distributive element exists.

    K is the set of zero multipliers, F the orbit nearfield of such an
    element; the additive decomposition n = k + f is verified to be unique
    and the multiplication to match (a,b)*(c,d) = 0 if d = 0 else
    (a.phi_d, b.phi_d).
    """
    nr = reconstruct_provenance(nr)
    dist = distributive_elements(nr)
    zm = zero_multipliers(nr)
    candidates = [d for d in dist if d != 0 and d not in zm]
    if len(dist) <= 1:
        return SemidirectReport(None, "D(N) is trivial")
    if not candidates:
        return SemidirectReport(None, "every nonzero distributive element is a zero multiplier")
    d = candidates[0]
    fld = orbit_nearfield(nr, d)  # validates the nearfield axioms
    # F = d*N = the orbit of d together with 0
    f_elems = tuple(sorted({int(nr.mul[d, x]) for x in range(nr.order)}))
    comp = {}
    for k in zm:
        for f in f_elems:
            s = int(nr.add[k, f])
            if s in comp:
                raise TheoremViolationError(
                    f"{nr.name}: {s} = {comp[s]} and ({k},{f}) both decompose it")
            comp[s] = (k, f)
    if len(comp) != nr.order:
        missing = sorted(set(range(nr.order)) - set(comp))
        raise TheoremViolationError(f"{nr.name}: K + F misses elements {missing}")
    phi_perms = nr.meta[0].phi.arrays
    for n1 in range(nr.order):
        k1, f1 = comp[n1]
        for n2 in range(nr.order):
            _, f2 = comp[n2]
            prod = int(nr.mul[n1, n2])
            if f2 == 0:
                expected = 0
            else:
                p = phi_perms[int(nr.factor_phi[f2])]
                expected = int(nr.add[p[k1], p[f1]])
            if prod != expected:
                raise TheoremViolationError(
                    f"{nr.name}: split multiplication fails at ({n1},{n2}):"
                    f" {prod} != {expected}")
    action = tuple(
        tuple(int(nr.add[nr.add[f, k], nr.neg[f]]) for k in zm) for f in f_elems)
    split = SemidirectSplit(zm, f_elems, fld,
                            tuple(comp[i] for i in range(nr.order)), action)
    return SemidirectReport(split)


# ---------------------------------------------------------------------------
# the lemma suite

PASS, FAIL, NA = "pass", "fail", "not-applicable"

LEMMA_KEYS = (
    "distributive-orbits-additively-closed",
    "distributor-stabilizer-subgroup",
    "orbit-is-planar-nearfield",
    "zero-multiplier-shift-keeps-factor",
    "zero-multipliers-form-ideal",
    "single-nontrivial-primary-summand",
    "generalized-centre-case-agreement",
)


@dataclass(frozen=True)
class LemmaItem:
    status: str
    detail: str | None = None

    def __str__(self) -> str:
        return self.status if self.detail is None else f"{self.status} ({self.detail})"


@dataclass
class LemmaReport:
    items: dict[str, LemmaItem] = field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.items.items() if v.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        return [f"{k}: {v}" for k, v in self.items.items()]


def _primary_components(nr: PlanarNearring) -> dict[int, list[int]]:
    """The p-primary parts: elements whose additive order is a power of p."""
    comps: dict[int, list[int]] = {}
    primes = [p for p in range(2, nr.order + 1)
              if nr.order % p == 0 and all(p % q for q in range(2, p))]
    for p in primes:
        members = [0]
        for x in range(1, nr.order):
            o = nr.group.element_order(x)
            while o % p == 0:
                o //= p
            if o == 1:
                members.append(x)
        comps[p] = members
    return comps


def verify_lemma_suite(nr: PlanarNearring) -> LemmaReport:
    """Check every named structural result against the nearring by exhaustion."""
    nr = reconstruct_provenance(nr)
    pair, _ = nr.meta
    dist = distributive_elements(nr)
    zm = zero_multipliers(nr)
    zm_set = set(zm)
    nontrivial = len(dist) > 1
    nonzm_dist = [d for d in dist if d != 0 and d not in zm_set]
    report = LemmaReport()

    # (a) every distributive orbit aPhi* is additively closed
    item = LemmaItem(PASS)
    for d in dist:
        if d == 0:
            continue
        members = {0, *next(o.members for o in pair.nonzero_orbits if d in o.members)}
        for x in members:
            for y in members:
                s = int(nr.add[x, y])
                if s not in members:
                    item = LemmaItem(FAIL, f"d={d}: {x}+{y}={s} escapes the orbit")
                    break
            if item.status == FAIL:
                break
        if item.status == FAIL:
            break
    report.items[LEMMA_KEYS[0]] = item

    # (b) for non-zero-multiplier d in D: {phi : r_d.phi in D} <= Phi, contains Z(Phi)
    if not nonzm_dist:
        report.items[LEMMA_KEYS[1]] = LemmaItem(NA, "no non-zero-multiplier distributive element")
    else:
        item = LemmaItem(PASS)
        centre_idx = {pair.phi.index_of(p) for p in centre_of(pair.phi).perms}
        dset = set(dist)
        for d in nonzm_dist:
            r = int(nr.factor_rep[d])
            H = {pi for pi in range(pair.phi.order) if int(pair.phi.arrays[pi, r]) in dset}
            comp = pair.phi.compose_table
            inv = pair.phi.inverse_table
            if pair.phi.identity_index not in H or not centre_idx <= H:
                item = LemmaItem(FAIL, f"d={d}: stabilizer misses Z(Phi) or identity")
                break
            if any(int(comp[i, j]) not in H for i in H for j in H) \
                    or any(int(inv[i]) not in H for i in H):
                item = LemmaItem(FAIL, f"d={d}: stabilizer is not a subgroup")
                break
        report.items[LEMMA_KEYS[1]] = item

    # (c) the orbit of a non-zero-multiplier distributive d is a planar nearfield
    if not nonzm_dist:
        report.items[LEMMA_KEYS[2]] = LemmaItem(NA, "no non-zero-multiplier distributive element")
    else:
        item = LemmaItem(PASS)
        for d in nonzm_dist:
            try:
                fld = orbit_nearfield(nr, d)
            except ValidationError as exc:
                item = LemmaItem(FAIL, f"d={d}: {exc}")
                break
            if fld.order < 3:
                item = LemmaItem(FAIL, f"d={d}: orbit nearfield of order {fld.order} not planar")
                break
        report.items[LEMMA_KEYS[2]] = item

    # (d) phi_{m+a} = phi_a for zero multipliers m and non-zero-multipliers a
    if not nontrivial:
        report.items[LEMMA_KEYS[3]] = LemmaItem(NA, "D(N) is trivial")
    else:
        item = LemmaItem(PASS)
        nonzm = [a for a in range(1, nr.order) if a not in zm_set]
        for m in zm:
            if m == 0:
                continue
            for a in nonzm:
                s = int(nr.add[m, a])
                if s == 0 or s in zm_set or nr.factor_phi[s] != nr.factor_phi[a]:
                    item = LemmaItem(FAIL, f"m={m}, a={a}: phi_(m+a) != phi_a")
                    break
            if item.status == FAIL:
                break
        report.items[LEMMA_KEYS[3]] = item

    # (e) the zero multipliers form a two-sided ideal
    if not nontrivial:
        report.items[LEMMA_KEYS[4]] = LemmaItem(NA, "D(N) is trivial")
    else:
        check = is_ideal(nr, zm)
        report.items[LEMMA_KEYS[4]] = (
            LemmaItem(PASS) if check.status == "two-sided" else LemmaItem(FAIL, str(check)))

    # (f) p-primary decomposition with at most one multiplicatively nontrivial summand
    if not (nontrivial and nonzm_dist):
        report.items[LEMMA_KEYS[5]] = LemmaItem(NA, "no non-zero-multiplier distributive element")
    else:
        item = None
        comps = _primary_components(nr)
        # direct sum check: summing one element per component hits N bijectively
        total = {0}
        for p in sorted(comps):
            total = {int(nr.add[x, y]) for x in total for y in comps[p]}
        if len(total) != nr.order:
            item = LemmaItem(FAIL, "primary components do not sum to N")
        else:
            loud = []
            for p in sorted(comps):
                arr = np.array(comps[p])
                if (nr.mul[np.ix_(arr, arr)] != 0).any():
                    loud.append(p)
            if len(loud) > 1:
                item = LemmaItem(FAIL, f"nontrivial multiplication in summands {loud}")
        report.items[LEMMA_KEYS[5]] = item or LemmaItem(PASS)

    # (g) brute-forced GC agrees with the four-case prediction
    try:
        gc = generalized_centre(nr)
        report.items[LEMMA_KEYS[6]] = LemmaItem(PASS, f"case {gc.case_tag}")
    except TheoremViolationError as exc:
        report.items[LEMMA_KEYS[6]] = LemmaItem(FAIL, str(exc))

    return report
