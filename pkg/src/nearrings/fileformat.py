"""The line-oriented nearring document format.

    planar-nearring 1
    name <label>
    order <n>
    add
    <n rows of n space-separated indices>
    mul
    <n rows>
    provenance            (optional section)
    phi <k>
    <k permutation rows>
    reps <r1> <r2> ...
    zero [<m1> ...]
    end

Writing is canonical (fixed section order, single spaces), so write . read
is the identity on documents and read . write on well-formed text.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .ferrero import FerreroPair, PlanarNearring, RepChoice, construct
from .groups import AutomorphismGroup, FiniteGroup

FORMAT_NAME = "planar-nearring"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class NearringDocument:
    order: int
    name: str
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    phi: tuple[tuple[int, ...], ...] | None = None  # generators or full group
    reps: tuple[int, ...] | None = None
    zero: tuple[int, ...] | None = None
    version: int = FORMAT_VERSION

    @property
    def has_provenance(self) -> bool:
        return self.phi is not None


def document_from_nearring(nr: PlanarNearring) -> NearringDocument:
    to_rows = lambda t: tuple(tuple(int(v) for v in row) for row in t)
    phi = reps = zero = None
    if nr.meta is not None:
        pair, choice = nr.meta
        phi = tuple(pair.phi.perms)
        reps = tuple(sorted(choice.reps))
        zero = tuple(sorted(choice.zero_reps))
    return NearringDocument(nr.order, nr.name, to_rows(nr.add), to_rows(nr.mul),
                            phi, reps, zero)


def nearring_from_document(doc: NearringDocument) -> PlanarNearring:
    """Rebuild and fully validate; provenance must reproduce the stored table."""
    if doc.has_provenance:
        group = FiniteGroup(np.array(doc.add), doc.name)
        phi = AutomorphismGroup.from_generators(group, doc.phi)
        nr = construct(FerreroPair(group, phi), RepChoice(doc.reps, doc.zero or ()),
                       name=doc.name)
        if nr.mul.tobytes() != np.array(doc.mul, dtype=np.int64).tobytes():
            raise ValidationError("provenance does not reproduce the stored table")
        return nr
    return PlanarNearring(np.array(doc.add), np.array(doc.mul), name=doc.name)


def write_document(doc: NearringDocument) -> str:
    lines = [f"{FORMAT_NAME} {doc.version}", f"name {doc.name}", f"order {doc.order}"]
    lines.append("add")
    lines.extend(" ".join(str(v) for v in row) for row in doc.add)
    lines.append("mul")
    lines.extend(" ".join(str(v) for v in row) for row in doc.mul)
    if doc.has_provenance:
        lines.append("provenance")
        lines.append(f"phi {len(doc.phi)}")
        lines.extend(" ".join(str(v) for v in row) for row in doc.phi)
        lines.append("reps " + " ".join(str(v) for v in doc.reps))
        lines.append(("zero " + " ".join(str(v) for v in doc.zero)).rstrip())
    lines.append("end")
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, text: str):
        self.lines = [ln.rstrip("\n") for ln in text.splitlines()]
        self.pos = 0

    def next(self) -> str:
        if self.pos >= len(self.lines):
            raise ValidationError("unexpected end of document")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def peek(self) -> str | None:
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def ints(self, expect: int | None = None) -> tuple[int, ...]:
        row = tuple(int(v) for v in self.next().split())
        if expect is not None and len(row) != expect:
            raise ValidationError(f"expected {expect} values, got {len(row)}")
        return row


def read_document(text: str) -> NearringDocument:
    r = _Reader(text)
    header = r.next().split()
    if len(header) != 2 or header[0] != FORMAT_NAME:
        raise ValidationError(f"not a {FORMAT_NAME} document")
    version = int(header[1])
    if version != FORMAT_VERSION:
        raise ValidationError(f"unsupported format version {version}")
    name_line = r.next()
    if not name_line.startswith("name "):
        raise ValidationError("missing name line")
    name = name_line[5:]
    order_line = r.next().split()
    if order_line[0] != "order":
        raise ValidationError("missing order line")
    n = int(order_line[1])
    if r.next() != "add":
        raise ValidationError("missing add section")
    add = tuple(r.ints(n) for _ in range(n))
    if r.next() != "mul":
        raise ValidationError("missing mul section")
    mul = tuple(r.ints(n) for _ in range(n))
    phi = reps = zero = None
    marker = r.next()
    if marker == "provenance":
        head = r.next().split()
        if head[0] != "phi":
            raise ValidationError("missing phi count")
        phi = tuple(r.ints(n) for _ in range(int(head[1])))
        reps_line = r.next().split()
        if reps_line[0] != "reps":
            raise ValidationError("missing reps line")
        reps = tuple(int(v) for v in reps_line[1:])
        zero_line = r.next().split()
        if zero_line[0] != "zero":
            raise ValidationError("missing zero line")
        zero = tuple(int(v) for v in zero_line[1:])
        marker = r.next()
    if marker != "end":
        raise ValidationError(f"expected end, got {marker!r}")
    return NearringDocument(n, name, add, mul, phi, reps, zero, version)
