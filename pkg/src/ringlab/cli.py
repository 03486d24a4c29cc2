"""``ringlab`` command line: classify, check, decompose, verify and atlas.

Every command prints one JSON document (sorted keys, ``"schema": "1"``).
Failures print a JSON error object and exit non-zero: 2 for usage, parse and
precondition errors, 3 when a construction exceeds the carrier cap.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any

from .classify import (
    ClassReport,
    classify_element,
    is_local,
    radical_indices,
    ring_identities,
)
from .decompose import KINDS, SCOPES, brute_force_decompose, decompose
from .expr import ParseError, literal_to_json, parse_literal, parse_ring_expr
from .properties import (
    DEFAULT_CORPUS,
    PROPERTIES,
    check_property,
    matrix_tripotent_sum_check,
    theorem_suite,
    zn_kosan_numbertheory,
)
from .rings import (
    DEFAULT_CAP,
    Elem,
    FiniteRing,
    RingError,
    SizeLimitError,
    build_ring,
    carrier_cap,
    get_carrier_cap,
    make_zmod,
)

SCHEMA = "1"
EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
NUMBER_THEORY_LIMIT = 100_000
CHECKABLE = (*PROPERTIES, "matrix_tripotent_sum")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _scope(text: str) -> str:
    for s in SCOPES:
        if text.lower() == s.lower():
            return s
    raise argparse.ArgumentTypeError(f"invalid scope {text!r} (choose from {', '.join(SCOPES)})")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help=f"carrier cap (default {DEFAULT_CAP})")
    common.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    common.add_argument("--json", action="store_true", default=True, help="JSON output (the default)")

    parser = _Parser(prog="ringlab", description="Finite ring decompositions and property checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="classify every element, or one")
    p.add_argument("expr")
    p.add_argument("--elem", default=None)

    p = sub.add_parser("check", parents=[common], help="decide a ring-level property")
    p.add_argument("property", choices=CHECKABLE)
    p.add_argument("expr")
    p.add_argument("--strict", action="store_true", help="exit 1 when the property fails")
    p.add_argument("--witnesses", action="store_true", help="attach a decomposition per element")

    p = sub.add_parser("decompose", parents=[common], help="decompose one element")
    p.add_argument("kind", choices=tuple(KINDS))
    p.add_argument("expr")
    p.add_argument("lit")
    p.add_argument("--scope", type=_scope, default=None)
    p.add_argument("--oracle", action="store_true", help="use the exhaustive search only")

    p = sub.add_parser("verify", parents=[common], help="run the theorem suite over a corpus")
    p.add_argument("--corpus", type=Path, default=None, help="one ring expression per line, # comments")

    p = sub.add_parser("atlas", parents=[common], help="property table for Z/n over a range lo..hi")
    p.add_argument("range")
    return parser


def _ring(text: str) -> FiniteRing:
    return build_ring(parse_ring_expr(text))


def _element(ring: FiniteRing, text: str) -> Elem:
    return ring.element(parse_literal(text))


def _show(x: Elem | None) -> Any:
    return None if x is None else literal_to_json(x.value)


def report_json(r: ClassReport) -> dict[str, Any]:
    return {
        "element": _show(r.element),
        "nilpotent": r.nilpotent,
        "nilpotency_index": r.nilpotency_index,
        "idempotent": r.idempotent,
        "tripotent": r.tripotent,
        "two_idempotent": r.two_idempotent,
        "unit": r.unit,
        "unipotent": r.unipotent,
        "inverse": _show(r.inverse),
    }


def _classify(args) -> tuple[dict[str, Any], int]:
    ring = _ring(args.expr)
    out: dict[str, Any] = {"ring": ring.label, "size": ring.size}
    if args.elem is not None:
        out["elements"] = [report_json(classify_element(ring, _element(ring, args.elem)))]
        return out, EXIT_OK
    ids = ring_identities(ring)
    local = is_local(ring)
    out["elements"] = [report_json(classify_element(ring, x)) for x in ring.elements()]
    out["jacobson_radical"] = [_show(Elem(ring, x)) for x in sorted(radical_indices(ring))]
    out["local"] = {"local": local.local, "residue_size": local.residue_size, "residue_is_field": local.residue_is_field}
    out["identities"] = {
        "reduced": ids.reduced,
        "x5_eq_x": ids.x5_eq_x,
        "quintic_identity": ids.quintic_identity,
        "commutative": ids.commutative,
        "bounded_index": ids.bounded_index,
    }
    return out, EXIT_OK


def _check(args) -> tuple[dict[str, Any], int]:
    ring = _ring(args.expr)
    if args.property == "matrix_tripotent_sum":
        verdict = matrix_tripotent_sum_check(ring, witnesses=args.witnesses)
    else:
        verdict = check_property(ring, args.property, witnesses=args.witnesses)
    out = {"ring": ring.label, **verdict.to_json()}
    return out, EXIT_FALSE if args.strict and not verdict.holds else EXIT_OK


def _decompose(args) -> tuple[dict[str, Any], int]:
    ring = _ring(args.expr)
    a = _element(ring, args.lit)
    find = brute_force_decompose if args.oracle else decompose
    d = find(ring, a, args.kind, args.scope)
    out = {
        "ring": ring.label,
        "kind": args.kind,
        "element": _show(a),
        "exists": d is not None,
        "decomposition": None if d is None else d.to_json(),
    }
    return out, EXIT_OK


def read_corpus(path: Path) -> list[str]:
    lines = []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _verify(args) -> tuple[dict[str, Any], int]:
    texts = read_corpus(args.corpus) if args.corpus else list(DEFAULT_CORPUS)
    return theorem_suite([_ring(t) for t in texts]), EXIT_OK


_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def atlas_row(n: int) -> dict[str, Any]:
    row: dict[str, Any] = {"n": n}
    row["zn_kosan_numbertheory"] = zn_kosan_numbertheory(n) if n <= NUMBER_THEORY_LIMIT else "skipped"
    if n > get_carrier_cap():
        row.update({p: "skipped" for p in PROPERTIES})
        return row
    ring = make_zmod(n)
    row.update({p: check_property(ring, p).holds for p in PROPERTIES})
    return row


def _atlas(args) -> tuple[dict[str, Any], int]:
    m = _RANGE.match(args.range)
    if not m:
        raise UsageError(f"atlas range must look like lo..hi, got {args.range!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo < 1 or hi < lo:
        raise UsageError(f"atlas range needs 1 <= lo <= hi, got {lo}..{hi}")
    return {"range": [lo, hi], "rows": [atlas_row(n) for n in range(lo, hi + 1)]}, EXIT_OK


_COMMANDS = {
    "classify": _classify,
    "check": _check,
    "decompose": _decompose,
    "verify": _verify,
    "atlas": _atlas,
}


def render(doc: dict[str, Any]) -> str:
    return json.dumps({"schema": SCHEMA, **doc}, sort_keys=True, indent=2) + "\n"


def _error(kind: str, message: str, **extra: Any) -> dict[str, Any]:
    return {"error": {"type": kind, "message": message, **extra}}


def run(argv: list[str]) -> tuple[str, int, Path | None]:
    """Execute one invocation; returns (report text, exit code, output path)."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return render(_error("usage", str(e))), EXIT_USAGE, None
    try:
        if args.cap is not None and args.cap < 1:
            raise UsageError("--cap must be positive")
        cap = get_carrier_cap() if args.cap is None else args.cap
        with carrier_cap(cap):
            doc, code = _COMMANDS[args.command](args)
        doc = {"command": args.command, **doc}
    except ParseError as e:
        doc, code = _error("parse", e.message, offset=e.offset), EXIT_USAGE
    except SizeLimitError as e:
        doc, code = _error("cap_exceeded", str(e)), EXIT_CAP
    except UsageError as e:
        doc, code = _error("usage", str(e)), EXIT_USAGE
    except (RingError, ValueError, TypeError) as e:
        doc, code = _error(type(e).__name__, str(e)), EXIT_USAGE
    except OSError as e:
        doc, code = _error("io", str(e)), EXIT_USAGE
    return render(doc), code, args.out


def main(argv: list[str] | None = None) -> int:
    text, code, out = run(sys.argv[1:] if argv is None else argv)
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            out.write_text(text)
        except OSError as e:
            sys.stdout.write(render(_error("io", str(e))))
            return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
