"""Command-line interface.

Subcommands: construct, analyze, enumerate, nearvector, bibd, verify.
Exit codes: 0 success, 1 usage error, 2 validation/parse failure,
3 theorem violation (a lemma-suite failure).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import (
    distributive_elements,
    generalized_centre,
    is_ideal,
    semidirect_decomposition,
    verify_lemma_suite,
    zero_multipliers,
)
from .catalog import catalog_group, group_names
from .designs import block_design, export_design, orbits_additively_closed
from .enumeration import enumerate_planar_nearrings, zp2_family
from .errors import NearringError, TheoremViolationError, ValidationError
from .ferrero import FerreroPair, RepChoice, construct, is_planar, reconstruct_provenance
from .fileformat import (
    document_from_nearring,
    nearring_from_document,
    read_document,
    write_document,
)
from .groups import AutomorphismGroup
from .nearfields import make_dickson_nearfield_9, make_field
from .nearvector import (
    check_conjecture,
    derived_planar_nearring,
    identity_twist,
    make_nearvector_space,
    power_twist,
    quasi_kernel,
    regular_decomposition,
)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems, per the contract
        raise UsageError(message)


def _find_group(name: str):
    for order in range(1, 16):
        if name in group_names(order):
            return catalog_group(order, name)
    raise ValidationError(f"unknown catalog group {name!r}")


def _parse_phi(group, spec: str) -> AutomorphismGroup:
    gens = []
    for item in spec.split(";"):
        item = item.strip()
        if item == "neg":
            gens.append(tuple(int(group.neg[x]) for x in range(group.order)))
        elif item.startswith("mult:"):
            u = int(item[5:])
            gens.append(tuple((u * x) % group.order for x in range(group.order)))
        else:
            gens.append(tuple(int(v) for v in item.split(",")))
    return AutomorphismGroup.from_generators(group, gens)


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    return tuple(int(v) for v in text.split(",")) if text else ()


def _load(path: str):
    doc = read_document(Path(path).read_text())
    return nearring_from_document(doc)


def _summary_lines(nr) -> list[str]:
    nr = reconstruct_provenance(nr)
    pair, _ = nr.meta
    dist = distributive_elements(nr)
    gc = generalized_centre(nr)
    return [
        f"order {nr.order}",
        f"phi order {pair.phi.order}",
        f"distributive {len(dist)}: {list(dist)}",
        f"gc case {gc.case_tag}: {list(gc.members)}",
    ]


def cmd_construct(args) -> int:
    if args.zp2:
        nr = zp2_family(args.zp2)
    else:
        if not (args.group and args.phi and args.reps):
            raise UsageError("construct needs --group, --phi and --reps (or --zp2)")
        group = _find_group(args.group)
        phi = _parse_phi(group, args.phi)
        pair = FerreroPair(group, phi)
        nr = construct(pair, RepChoice(_parse_ints(args.reps), _parse_ints(args.zero)),
                       name=args.group)
    check = is_planar(nr)
    if not check.planar:
        raise ValidationError(f"construction is not planar: {check}")
    for line in _summary_lines(nr):
        print(line)
    if args.out:
        Path(args.out).write_text(write_document(document_from_nearring(nr)))
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    nr = reconstruct_provenance(_load(args.path))
    dist = distributive_elements(nr)
    zm = zero_multipliers(nr)
    ideal = is_ideal(nr, zm)
    gc = generalized_centre(nr)
    report = verify_lemma_suite(nr)
    split = semidirect_decomposition(nr)
    if args.json:
        payload = {
            "order": nr.order,
            "distributive": list(dist),
            "zero_multipliers": list(zm),
            "zero_multiplier_ideal": ideal.status,
            "gc": {"members": list(gc.members), "case": gc.case_tag},
            "lemmas": {k: v.status for k, v in report.items.items()},
            "semidirect": None if not split.found else {
                "kernel": list(split.split.kernel),
                "field": list(split.split.field_elements),
            },
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"distributive {len(dist)}: {list(dist)}")
        print(f"zero multipliers {len(zm)}: {list(zm)} ({ideal.status})")
        print(f"gc case {gc.case_tag}: {list(gc.members)}")
        if split.found:
            print(f"splits: kernel {list(split.split.kernel)}"
                  f" x| field {list(split.split.field_elements)}")
        else:
            print(f"no split: {split.reason}")
        for line in report.lines():
            print(line)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _fingerprint_hex(fp: tuple) -> str:
    return hashlib.sha256(repr(fp).encode()).hexdigest()[:16]


def manifest_text(classes, max_order: int, which: str) -> str:
    lines = [
        "planar-nearring-manifest 1",
        f"max-order {max_order}",
        f"filter {which}",
        f"classes {len(classes)}",
    ]
    for i, cls in enumerate(classes):
        nr = cls.representative
        gc = generalized_centre(nr)
        pair, choice = nr.meta
        phi_text = ";".join(",".join(str(v) for v in p) for p in pair.phi.perms)
        lines.extend([
            f"class {i}",
            f"group {cls.group_name}",
            f"order {nr.order}",
            f"phi-order {cls.phi_order}",
            f"distributive {cls.fingerprint[1]}",
            f"zero-multipliers {cls.fingerprint[2]}",
            f"gc-case {gc.case_tag}",
            f"members-found {cls.members_found}",
            f"fingerprint {_fingerprint_hex(cls.fingerprint)}",
            f"reps {','.join(str(r) for r in sorted(choice.reps))}",
            ("zero " + ",".join(str(r) for r in sorted(choice.zero_reps))).rstrip(),
            f"phi {phi_text}",
        ])
    lines.append("end")
    return "\n".join(lines) + "\n"


def cmd_enumerate(args) -> int:
    classes = enumerate_planar_nearrings(args.max_order, args.filter, jobs=args.jobs)
    text = manifest_text(classes, args.max_order, args.filter)
    if args.manifest:
        Path(args.manifest).write_text(text)
    if args.tables:
        outdir = Path(args.tables)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, cls in enumerate(classes):
            doc = document_from_nearring(cls.representative)
            (outdir / f"class-{i:03d}-{cls.group_name}.nr").write_text(write_document(doc))
    print(f"{len(classes)} classes")
    return EXIT_OK


_TWISTS = {"id": identity_twist}


def _parse_twist(field, text: str):
    text = text.strip()
    if text == "id":
        return identity_twist(field)
    if text.startswith("pow:"):
        return power_twist(field, int(text[4:]))
    return tuple(int(v) for v in text.split("/"))


def cmd_nearvector(args) -> int:
    field = make_dickson_nearfield_9() if args.dickson9 else make_field(args.field)
    twists = [_parse_twist(field, t) for t in args.twists.split(",")]
    space = make_nearvector_space(field, twists)
    qk = quasi_kernel(space)
    blocks = regular_decomposition(space)
    print(f"space {field.name}^{space.dimension}, order {space.order}")
    print(f"quasi-kernel size {len(qk)}")
    print(f"regular blocks {[list(b) for b in blocks]}")
    nr = derived_planar_nearring(space, args.coordinate)
    dist = distributive_elements(nr)
    print(f"derived nearring distributive size {len(dist)}")
    report = check_conjecture(space, args.coordinate)
    for line in report.lines():
        print(line)
    if args.out:
        Path(args.out).write_text(write_document(document_from_nearring(nr)))
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_bibd(args) -> int:
    nr = reconstruct_provenance(_load(args.path))
    design = block_design(nr)
    text = export_design(design)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out} ({len(design.blocks)} blocks,"
              f" {'balanced' if design.balanced else 'unbalanced'})")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    nr = reconstruct_provenance(_load(args.path))
    report = verify_lemma_suite(nr)
    for line in report.lines():
        print(line)
    closed = orbits_additively_closed(nr)
    print(f"orbits additively closed: {closed.all_closed}")
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> Parser:
    parser = Parser(prog="nearrings", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a nearring from Ferrero data")
    p.add_argument("--group", help="catalog group name, e.g. C9 or C3xC3")
    p.add_argument("--phi", help="generators: neg | mult:U | comma permutation; ';'-joined")
    p.add_argument("--reps", help="comma-separated orbit representatives")
    p.add_argument("--zero", default="", help="comma-separated zero-multiplier reps")
    p.add_argument("--zp2", type=int, help="build the Z_{p^2} family member instead")
    p.add_argument("--out", help="write the nearring document here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="report D, zero multipliers, GC and the lemma suite")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="enumerate planar nearrings up to an order")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--filter", choices=["all", "nontrivial-distributive"], default="all")
    p.add_argument("--manifest", help="write the class manifest here")
    p.add_argument("--tables", help="write one document per class into this directory")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("nearvector", help="build a nearvector space and report on it")
    p.add_argument("--field", type=int, help="scalar field order")
    p.add_argument("--dickson9", action="store_true", help="use the proper nearfield of order 9")
    p.add_argument("--twists", default="id", help="comma list: id | pow:K | perm with '/'")
    p.add_argument("--coordinate", type=int, default=0)
    p.add_argument("--out", help="write the derived nearring document here")
    p.set_defaults(func=cmd_nearvector)

    p = sub.add_parser("bibd", help="export the block design of a nearring document")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bibd)

    p = sub.add_parser("verify", help="run the lemma suite on a nearring document")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (NearringError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
