"""Small finite fields and the proper nearfield of order 9.

Prime-power fields use one fixed irreducible polynomial per order so the
tables are bit-reproducible:

    q = 4:  t^2 = t + 1        q = 8:  t^3 = t + 1
    q = 9:  t^2 = -1           q = 16: t^4 = t + 1

Field elements are indexed by their coefficient vectors in base p, constant
term in the lowest digit, so 0 is the zero and 1 the multiplicative identity.
The order-9 nearfield twists the field multiplication: a o b = a*b when b is
a square, a^3*b otherwise.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError
from .groups import FiniteGroup, Perm, freeze, group_axiom_failure

_IRREDUCIBLE = {4: (2, (1, 1)), 8: (2, (1, 1, 0)), 9: (3, (2, 0)), 16: (2, (1, 1, 0, 0))}
_FIELD_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)


def nearfield_axiom_failure(add: np.ndarray, mul: np.ndarray, one: int) -> str | None:
    """Witness message if (add, mul) is not a nearfield with the given identity."""
    n = len(add)
    fail = group_axiom_failure(add)
    if fail is not None:
        return f"additive {fail}"
    if not (add == add.T).all():
        return "addition is not abelian"
    if (mul[0] != 0).any() or (mul[:, 0] != 0).any():
        return "0 is not multiplicatively absorbing"
    mism = np.argwhere(mul[add, :] != add[mul[:, None, :], mul[None, :, :]])
    if len(mism):
        a, b, c = (int(v) for v in mism[0])
        return f"right distributivity fails at ({a},{b},{c})"
    mism = np.argwhere(mul[mul] != mul[:, mul])
    if len(mism):
        a, b, c = (int(v) for v in mism[0])
        return f"associativity fails at ({a},{b},{c})"
    if n == 1:
        return None
    nz = np.arange(1, n)
    sub = mul[np.ix_(nz, nz)]
    if (sub == 0).any():
        return "nonzero elements are not closed under multiplication"
    if not (mul[one] == np.arange(n)).all() or not (mul[:, one] == np.arange(n)).all():
        return f"{one} is not a two-sided multiplicative identity"
    for x in nz:
        if sorted(mul[x, nz].tolist()) != list(nz):
            return f"nonzero row of {x} is not a permutation"
        if sorted(mul[nz, x].tolist()) != list(nz):
            return f"nonzero column of {x} is not a permutation"
    return None


class Nearfield:
    """A finite nearfield: abelian addition, group multiplication on nonzeros."""

    def __init__(self, add, mul, one: int = 1, name: str = "F", validate: bool = True):
        self.add = freeze(add)
        self.mul = freeze(mul)
        self.one = int(one)
        self.name = str(name)
        if validate:
            fail = nearfield_axiom_failure(self.add, self.mul, self.one)
            if fail is not None:
                raise ValidationError(f"{self.name}: {fail}")
        self.group = FiniteGroup(self.add, f"({self.name},+)", validate=False)
        self.neg = self.group.neg

    @property
    def order(self) -> int:
        return len(self.add)

    def is_field(self) -> bool:
        """Check the left distributive law on top of the nearfield axioms."""
        left = self.mul[:, self.add]
        right = self.add[self.mul[:, :, None], self.mul[:, None, :]]
        return bool((left == right).all())

    def mul_inverse(self, x: int) -> int:
        if x == 0:
            raise ValueError("0 has no multiplicative inverse")
        return int(np.argmax(self.mul[x] == self.one))

    def __repr__(self) -> str:
        return f"Nearfield({self.name}, order={self.order})"


def make_field(q: int) -> Nearfield:
    """The finite field of order q, for q in {2,3,4,5,7,8,9,11,13,16}."""
    if q not in _FIELD_ORDERS:
        raise ValueError(f"order {q} is not a supported prime power")
    if q in _IRREDUCIBLE:
        p, red = _IRREDUCIBLE[q]
        k = len(red)

        def digits(i):
            return [(i // p**j) % p for j in range(k)]

        def undigits(cs):
            return sum((c % p) * p**j for j, c in enumerate(cs))

        def poly_mul(a, b):
            raw = [0] * (2 * k - 1)
            for i, ai in enumerate(a):
                for j, bj in enumerate(b):
                    raw[i + j] += ai * bj
            for d in range(2 * k - 2, k - 1, -1):
                c = raw[d] % p
                raw[d] = 0
                for j, rj in enumerate(red):  # t^k = sum red[j] t^j
                    raw[d - k + j] += c * rj
            return [c % p for c in raw[:k]]

        add = [[undigits([x + y for x, y in zip(digits(i), digits(j))])
                for j in range(q)] for i in range(q)]
        mul = [[undigits(poly_mul(digits(i), digits(j)))
                for j in range(q)] for i in range(q)]
    else:
        add = [[(i + j) % q for j in range(q)] for i in range(q)]
        mul = [[(i * j) % q for j in range(q)] for i in range(q)]
    return Nearfield(add, mul, one=1, name=f"GF({q})")


def make_dickson_nearfield_9() -> Nearfield:
    """The proper nearfield of order 9: field multiplication twisted by cubing."""
    f9 = make_field(9)
    squares = {int(f9.mul[y, y]) for y in range(9)}
    mul = np.zeros((9, 9), dtype=np.int64)
    for a in range(9):
        a3 = int(f9.mul[f9.mul[a, a], a])
        for b in range(9):
            mul[a, b] = f9.mul[a, b] if b in squares else f9.mul[a3, b]
    return Nearfield(f9.add, mul, one=1, name="DN(9)")


def kern(field: Nearfield) -> tuple[int, ...]:
    """All two-sided distributive elements d: d*(a+b) = d*a + d*b, by exhaustion."""
    left = field.mul[:, field.add]
    right = field.add[field.mul[:, :, None], field.mul[:, None, :]]
    good = (left == right).all(axis=(1, 2))
    return tuple(int(d) for d in np.flatnonzero(good))


def multiplicative_centre(field: Nearfield) -> tuple[int, ...]:
    """{0} together with the nonzero elements commuting with everything."""
    central = (field.mul == field.mul.T).all(axis=1)
    out = {0} | {int(c) for c in np.flatnonzero(central)}
    return tuple(sorted(out))


def nearfield_automorphisms(field: Nearfield) -> list[Perm]:
    """All bijections preserving + and *, found through the additive ones."""
    from .groups import automorphism_group

    auts = automorphism_group(field.group)
    out = []
    for p in auts.perms:
        arr = np.asarray(p, dtype=np.int64)
        if (arr[field.mul] == field.mul[np.ix_(arr, arr)]).all():
            out.append(p)
    return out
