"""Command-line front end: JSON in, JSON (or text) out.

Input documents carry exactly one mode:

    {"mode": "poset", "elements": ["a", "b"], "relations": [["a", "b"]]}
    {"mode": "cone", "dim": 2, "forms": [[1, 0], [-1, 2]],
     "interior_point": [1, 2]}          # interior_point optional

Integer entries may be given as numbers or decimal strings; all
potentially large integers in the output are decimal strings.  Exit codes:
0 success, 1 input error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .errors import InputError, InternalInvariantError
from .joinmeet import joinmeet_report
from .poset import Poset, build_poset, two_chains_poset
from .semigroup import (
    ClassGroupReport,
    ConeDescription,
    cone_report,
    determinantal_invariants,
    segre_veronese_cone,
    veronese_cone,
)
from .sweep import run_sweep

_TOOL = {"name": "divclass", "version": __version__}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # bad flags are input errors, exit code 1
        raise InputError(message)


@dataclass(frozen=True)
class InputDocument:
    mode: str
    elements: Optional[tuple] = None
    relations: Optional[tuple] = None
    dim: Optional[int] = None
    forms: Optional[tuple] = None
    interior_point: Optional[tuple] = None


def _as_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise InputError(f"{what} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise InputError(f"{what} must be a decimal integer, got {value!r}") from None
    raise InputError(f"{what} must be an integer, got {value!r}")


def _as_int_vector(value, what: str) -> tuple:
    if not isinstance(value, (list, tuple)):
        raise InputError(f"{what} must be an array of integers")
    return tuple(_as_int(x, what) for x in value)


def parse_input_document(obj) -> InputDocument:
    """Validate a decoded JSON object into an InputDocument."""
    if not isinstance(obj, dict):
        raise InputError("input document must be a JSON object")
    mode = obj.get("mode")
    if mode not in ("poset", "cone"):
        raise InputError('input document needs "mode": "poset" or "cone"')
    poset_fields = {"elements", "relations"}
    cone_fields = {"dim", "forms", "interior_point"}
    present = set(obj) - {"mode"}
    unknown = present - poset_fields - cone_fields
    if unknown:
        raise InputError(f"unknown input fields: {sorted(unknown)}")
    if mode == "poset":
        if present & cone_fields:
            raise InputError("poset mode must not carry cone fields")
        if not poset_fields <= present:
            raise InputError('poset mode needs "elements" and "relations"')
        elements = obj["elements"]
        if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
            raise InputError('"elements" must be an array of strings')
        relations = obj["relations"]
        if not isinstance(relations, list):
            raise InputError('"relations" must be an array of string pairs')
        pairs = []
        for rel in relations:
            if not (isinstance(rel, list) and len(rel) == 2 and all(isinstance(x, str) for x in rel)):
                raise InputError(f"relation {rel!r} is not a pair of element names")
            pairs.append(tuple(rel))
        return InputDocument(mode="poset", elements=tuple(elements), relations=tuple(pairs))
    if present & poset_fields:
        raise InputError("cone mode must not carry poset fields")
    if "dim" not in present or "forms" not in present:
        raise InputError('cone mode needs "dim" and "forms"')
    dim = _as_int(obj["dim"], '"dim"')
    if not isinstance(obj["forms"], list):
        raise InputError('"forms" must be an array of integer arrays')
    forms = tuple(_as_int_vector(f, '"forms" entry') for f in obj["forms"])
    interior = None
    if obj.get("interior_point") is not None:
        interior = _as_int_vector(obj["interior_point"], '"interior_point"')
    return InputDocument(mode="cone", dim=dim, forms=forms, interior_point=interior)


def _poset_echo(poset: Poset) -> dict:
    return {
        "mode": "poset",
        "elements": list(poset.labels),
        "relations": [list(pair) for pair in poset.cover_label_pairs()],
    }


def _cone_echo(cone: ConeDescription) -> dict:
    doc = {
        "mode": "cone",
        "dim": cone.dim,
        "forms": [[str(x) for x in f] for f in cone.forms],
    }
    if cone.interior_point is not None:
        doc["interior_point"] = [str(x) for x in cone.interior_point]
    return doc


def _report_document(mode: str, echo, report: ClassGroupReport, family=None) -> dict:
    basis_tag = "nontree-edges" if mode == "poset" else "smith"
    doc = {
        "tool": dict(_TOOL),
        "mode": mode,
        "input": echo,
        "num_height_one_primes": report.num_height_one_primes,
        "rank": report.group.free_rank,
        "invariant_factors": [str(f) for f in report.group.torsion_factors],
        "canonical_class": (
            None
            if report.canonical_in_basis is None
            else {"basis": basis_tag, "coords": [str(c) for c in report.canonical_in_basis]}
        ),
        "torsion_number": str(report.torsion_number),
        "gorenstein": report.gorenstein,
    }
    if mode == "poset":
        doc["pure"] = report.pure
    if family is not None:
        doc["family"] = family
    return doc


def _analyze(document: InputDocument, family=None) -> dict:
    if document.mode == "poset":
        poset = build_poset(document.elements, document.relations)
        return _report_document("poset", _poset_echo(poset), joinmeet_report(poset), family)
    cone = ConeDescription(document.dim, document.forms, document.interior_point)
    return _report_document("cone", _cone_echo(cone), cone_report(cone), family)


def _require_params(args, names) -> dict:
    values = {}
    for name in names:
        value = getattr(args, name)
        if value is None:
            flags = " ".join(f"--{p}" for p in names)
            raise InputError(f"family {args.name!r} needs {flags}")
        values[name] = value
    return values


def _cmd_family(args) -> dict:
    name = args.name
    if name == "two-chains":
        params = _require_params(args, ("a", "b"))
        if params["a"] < 0 or params["b"] < 0:
            raise InputError("two-chains parameters must be nonnegative")
        poset = two_chains_poset(params["a"], params["b"])
        return _analyze(
            InputDocument(
                mode="poset",
                elements=poset.labels,
                relations=poset.cover_label_pairs(),
            ),
            family={"name": name, **params},
        )
    if name == "veronese":
        params = _require_params(args, ("n", "r"))
        cone = veronese_cone(params["n"], params["r"])
        return _report_document(
            "cone", _cone_echo(cone), cone_report(cone), family={"name": name, **params}
        )
    if name == "segre":
        params = _require_params(args, ("m", "p", "n", "q"))
        cone = segre_veronese_cone(params["m"], params["p"], params["n"], params["q"])
        return _report_document(
            "cone", _cone_echo(cone), cone_report(cone), family={"name": name, **params}
        )
    if name == "determinantal":
        params = _require_params(args, ("m", "n"))
        inv = determinantal_invariants(params["m"], params["n"])
        # no analyzable input document exists for this closed form
        return {
            "tool": dict(_TOOL),
            "mode": "determinantal",
            "input": None,
            "num_height_one_primes": None,
            "rank": inv.rank,
            "invariant_factors": [],
            "canonical_class": {
                "basis": "height-one-prime",
                "coords": [str(params["n"] - params["m"])],
            },
            "torsion_number": str(inv.torsion_number),
            "gorenstein": inv.torsion_number == 0,
            "family": {"name": name, **params},
        }
    raise InputError(f"unknown family {name!r}")


def _cmd_sweep(args):
    summary = run_sweep(args.count, args.max_n, args.seed)
    doc = {"tool": dict(_TOOL), "mode": "sweep", **summary.as_document()}
    return doc, 0 if summary.all_passed else 2


def _render_text(doc, prefix="") -> list:
    lines = []
    if isinstance(doc, dict):
        for key in doc:
            value = doc[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{prefix}{key}:")
                lines.extend(_render_text(value, prefix + "  "))
            else:
                lines.append(f"{prefix}{key}: {value}")
    elif isinstance(doc, list):
        if not doc:
            lines.append(f"{prefix}(none)")
        for item in doc:
            if isinstance(item, (dict, list)):
                lines.append(f"{prefix}-")
                lines.extend(_render_text(item, prefix + "  "))
            else:
                lines.append(f"{prefix}- {item}")
    else:
        lines.append(f"{prefix}{doc}")
    return lines


def render(doc, output: str) -> str:
    if output == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    return "\n".join(_render_text(doc))


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="divclass",
        description="Divisor class groups and torsion numbers of normal affine semigroup rings.",
    )
    parser.add_argument("--output", choices=("json", "text"), default="json")
    # accepted before or after the subcommand; the subparser only overrides
    # when the flag is actually given
    common = _ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser(
        "analyze", parents=[common], help="analyze a poset or cone input document"
    )
    analyze.add_argument("--input", metavar="FILE", help="JSON file (stdin when absent)")

    family = sub.add_parser("family", parents=[common], help="analyze a built-in parametric family")
    family.add_argument("name", choices=("two-chains", "veronese", "segre", "determinantal"))
    for flag in ("a", "b", "n", "r", "m", "p", "q"):
        family.add_argument(f"--{flag}", type=int)

    sweep = sub.add_parser("sweep", parents=[common], help="randomized property sweep over posets")
    sweep.add_argument("--count", type=int, default=200)
    sweep.add_argument("--max-n", dest="max_n", type=int, default=7)
    sweep.add_argument("--seed", type=int, default=42)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "analyze":
            if args.input is None:
                raw = sys.stdin.read()
            else:
                try:
                    with open(args.input, "r", encoding="utf-8") as handle:
                        raw = handle.read()
                except OSError as exc:
                    raise InputError(f"cannot read {args.input}: {exc}") from None
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise InputError(f"input is not valid JSON: {exc}") from None
            doc, code = _analyze(parse_input_document(obj)), 0
        elif args.command == "family":
            doc, code = _cmd_family(args), 0
        else:
            doc, code = _cmd_sweep(args)
        sys.stdout.write(render(doc, args.output) + "\n")
        return code
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
