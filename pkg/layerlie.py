#!/usr/bin/env python3
"""
layerlie: weight counts, characters and layer decompositions of the simple
Lie algebras, computed in exact arithmetic.

Examples:
    layerlie.py dim G2 1,1
    layerlie.py count G2 1,1 --brute
    layerlie.py layerpoly A3 --fix 2=0,3=0
    layerlie.py shifts G2
    layerlie.py table G2 2,2 --format json
    layerlie.py verify G2 --upto 2,2 --checks all
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from charcalc import (
    CHECKS,
    ConjectureViolation,
    character_in_orbit_basis,
    character_table,
    depth_sorted_items,
    layer_decomposition,
    layer_sum_expansion,
    orbit_sum_expansion,
    ordered_upto,
    verify_identities,
    verify_sweep,
)
from fixtures import FIXTURE_ALGEBRAS, check_fixture
from layercalc import (
    DEFAULT_MAX_LAYER_ROOTS,
    LAYER_METHODS,
    LayerTooLargeError,
    count_weights_bruteforce,
    dim_polynomial,
    dim_value,
    layer_polynomial,
    layer_polynomial_report,
    pair_shift_table,
    zgroup_shift_table,
)
from polyring import PolyError, format_coef, from_json, poly_eval, poly_restrict, to_json, to_latex, to_text
from resultcache import CacheEntry, ResultCache, cache_get, cache_put
from rootsystem import (
    LieTypeError,
    RootSystem,
    Weight,
    WeightError,
    build_root_system,
    check_weight,
    format_labels,
    format_weight,
    parse_lie_type,
    parse_weight,
    rho_prime_root_basis,
    roots_table,
    to_root_basis,
)
from weylgroup import DEFAULT_MAX_ORDER, GroupTooLargeError, enumerate_group

logger = logging.getLogger("layerlie")

TOOL_VERSION = "1.1.0"

VERBS = (
    "dim",
    "dimpoly",
    "layerpoly",
    "count",
    "orbit-sum",
    "layer-sum",
    "char",
    "decompose",
    "table",
    "verify",
    "rho",
    "roots",
    "shifts",
)
FORMATS = ("text", "json", "csv", "latex")
MATRICES = {
    "characters": "characters",
    "layers": "layers",
    "orbit-inverse": "orbit_inverse",
    "layer-inverse": "layer_inverse",
    "dominance": "dominance",
}

_NEEDS_LABELS = {"dim", "count", "orbit-sum", "layer-sum", "char", "decompose", "table"}
_NEEDS_DOMINANT = _NEEDS_LABELS - {"dim"}

# (lhs symbol, rhs symbol) for each expansion verb
_EXPANSIONS = {
    "orbit-sum": ("m", "ch"),
    "layer-sum": ("L", "ch"),
    "char": ("ch", "m"),
    "decompose": ("ch", "L"),
}


class UsageError(ValueError):
    """Bad combination of command-line arguments."""


def _parse_checks(text: str) -> List[str]:
    if text == "all":
        return list(CHECKS) + ["fixtures"]
    names = [part.strip() for part in text.split(",") if part.strip()]
    unknown = [n for n in names if n not in CHECKS and n != "fixtures"]
    if unknown:
        raise UsageError(f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(CHECKS)}, fixtures, all")
    return names


def _parse_fixed(text: str, rank: int) -> Dict[int, int]:
    """Parse "2=0,3=1" into {1: 0, 2: 1}; indices are 1-based on the command line."""
    fixed: Dict[int, int] = {}
    for part in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*=\s*(-?\d+)\s*", part)
        if not m or not 1 <= int(m.group(1)) <= rank:
            raise UsageError(f"bad --fix entry '{part.strip()}'; expected i=value with 1 <= i <= {rank}")
        fixed[int(m.group(1)) - 1] = int(m.group(2))
    return fixed


# document builders

def _expansion_doc(rs: RootSystem, verb: str, lam: Weight, group) -> Dict[str, Any]:
    if verb == "orbit-sum":
        expansion = orbit_sum_expansion(rs, lam, group)
    elif verb == "layer-sum":
        expansion = layer_sum_expansion(rs, lam)
    elif verb == "char":
        expansion = character_in_orbit_basis(rs, lam, group)
    else:
        expansion = layer_decomposition(rs, lam)
    lhs, rhs = _EXPANSIONS[verb]
    if verb in ("orbit-sum", "layer-sum"):
        # deepest last, without building R
        items = depth_sorted_items(rs, lam, expansion)
    else:
        order = ordered_upto(rs, lam)
        items = expansion.sorted_items(order if all(w in order for w in expansion.support()) else None)
    return {
        "kind": "expansion",
        "lhs": lhs,
        "rhs": rhs,
        "head": list(lam),
        "weights": [list(w) for w, _ in items],
        "coeffs": [c for _, c in items],
    }


def _verify_doc(rs: RootSystem, args, lam: Optional[Weight]) -> Dict[str, Any]:
    checks = _parse_checks(args.checks)
    weight_checks = [c for c in checks if c != "fixtures"]
    entries: List[Dict[str, Any]] = []
    if weight_checks:
        group = enumerate_group(rs, args.max_order)
        layer_polynomial(rs, max_roots=args.max_layer_roots)
        if args.upto is not None:
            upto = check_weight(rs, parse_weight(args.upto), dominant=True)
            reports = verify_sweep(rs, upto, weight_checks, group)
        else:
            target = lam if lam is not None else rs.zero()
            reports = [verify_identities(rs, target, weight_checks, group)]
        for report in reports:
            for check in report["checks"]:
                entry = dict(check)
                entry["weight"] = list(report["weight"])
                entries.append(entry)
    if "fixtures" in checks:
        entries.extend(check_fixture(name) for name in FIXTURE_ALGEBRAS)
    return {
        "kind": "verify",
        "algebra": rs.name,
        "upto": args.upto,
        "checks": entries,
        "passed": all(e["status"] != "fail" for e in entries),
    }


def _root_coeffs(rs: RootSystem, shift: Weight) -> List[int]:
    return [int(x) for x in to_root_basis(rs, [-x for x in shift])]


def _shifts_doc(rs: RootSystem, max_roots: int) -> Dict[str, Any]:
    # the table has up to 2^k entries
    if rs.k > max_roots:
        raise LayerTooLargeError(rs.name, rs.k, max_roots)
    table = zgroup_shift_table(rs)
    return {
        "kind": "shifts",
        "total": _root_coeffs(rs, table.total_shift),
        "pairs": [
            {"count": c, "shift": _root_coeffs(rs, s), "partner": _root_coeffs(rs, p)}
            for c, s, p in pair_shift_table(table)
        ],
    }


def compute(rs: RootSystem, args, lam: Optional[Weight]) -> Dict[str, Any]:
    """Build the JSON-ready document for one command."""
    verb = args.verb
    base = {"algebra": rs.name, "verb": verb}
    if lam is not None:
        base["weight"] = list(lam)
    if verb == "dim":
        base.update(kind="scalar", value=format_coef(dim_value(rs, lam)))
    elif verb == "dimpoly":
        base.update(kind="polynomial", polynomial=to_json(dim_polynomial(rs)))
    elif verb == "layerpoly":
        poly = layer_polynomial(rs, args.method, args.max_layer_roots)
        base.update(kind="polynomial", method=args.method, report=layer_polynomial_report(rs, poly))
        if args.fix is not None:
            fixed = _parse_fixed(args.fix, rs.rank)
            poly = poly_restrict(poly, fixed)
            base["fixed"] = {str(i + 1): v for i, v in sorted(fixed.items())}
        base["polynomial"] = to_json(poly)
    elif verb == "count":
        value = poly_eval(layer_polynomial(rs, args.method, args.max_layer_roots), lam)
        base.update(kind="scalar", value=format_coef(value))
        if args.brute:
            brute = count_weights_bruteforce(rs, lam)
            base.update(brute=brute, agree=brute == value)
    elif verb in _EXPANSIONS:
        if verb in ("char", "decompose"):
            layer_polynomial(rs, max_roots=args.max_layer_roots)
        group = enumerate_group(rs, args.max_order) if verb in ("orbit-sum", "char") else None
        base.update(_expansion_doc(rs, verb, lam, group))
    elif verb == "table":
        layer_polynomial(rs, max_roots=args.max_layer_roots)
        base.update(kind="table")
        base.update(character_table(rs, lam, enumerate_group(rs, args.max_order)).to_json())
    elif verb == "verify":
        base.update(_verify_doc(rs, args, lam))
    elif verb == "shifts":
        base.update(_shifts_doc(rs, args.max_layer_roots))
    elif verb == "rho":
        base.update(
            kind="rho",
            labels=[format_coef(x) for x in rs.rho_prime],
            root_basis=[format_coef(x) for x in rho_prime_root_basis(rs)],
            k=rs.k,
        )
    else:
        base.update(kind="roots", roots=roots_table(rs))
    return base


# rendering

def _latex_weight(w: Sequence[int]) -> str:
    return re.sub(r"w(\d+)", r"\\omega_{\1}", format_weight(w))


def _combo_text(doc: Dict[str, Any], latex: bool = False) -> str:
    def sym(name: str, w) -> str:
        if latex:
            tag = {"m": "m", "ch": r"\mathrm{ch}", "L": r"\mathcal{L}"}[name]
            return f"{tag}_{{{_latex_weight(w)}}}"
        return f"{name}_{{{format_weight(w)}}}"

    pieces: List[str] = []
    for w, c in zip(doc["weights"], doc["coeffs"]):
        mag = abs(c)
        body = sym(doc["rhs"], w) if mag == 1 else f"{mag} {sym(doc['rhs'], w)}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {body}")
    return f"{sym(doc['lhs'], doc['head'])} = {' '.join(pieces) or '0'}"


def _matrix_rows(doc: Dict[str, Any], matrix: str) -> List[List[int]]:
    return doc[MATRICES[matrix]]


def _render_csv(doc: Dict[str, Any], matrix: str) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    kind = doc["kind"]
    if kind == "table":
        order = doc["order"]
        out.writerow(["weight"] + [format_weight(w) for w in order])
        for w, row in zip(order, _matrix_rows(doc, matrix)):
            out.writerow([format_weight(w)] + row)
    elif kind == "expansion":
        out.writerow(["weight", "coefficient"])
        for w, c in zip(doc["weights"], doc["coeffs"]):
            out.writerow([format_weight(w), c])
    elif kind == "polynomial":
        poly = doc["polynomial"]
        out.writerow(poly["vars"] + ["coefficient"])
        for term in poly["terms"]:
            out.writerow(term["exp"] + [term["coef"]])
    elif kind == "verify":
        out.writerow(["weight", "check", "status"])
        for e in doc["checks"]:
            out.writerow([format_labels(e["weight"]) if "weight" in e else "", e["name"], e["status"]])
    elif kind == "roots":
        out.writerow(["coeffs", "labels", "height", "simple", "highest"])
        for root in doc["roots"]:
            out.writerow([format_labels(root["coeffs"]), format_labels(root["labels"]), root["height"], root["simple"], root["highest"]])
    elif kind == "shifts":
        out.writerow(["count", "shift", "partner"])
        for pair in doc["pairs"]:
            out.writerow([pair["count"], format_labels(pair["shift"]), format_labels(pair["partner"])])
    elif kind == "rho":
        out.writerow(["basis"] + [f"{i}" for i in range(1, len(doc["labels"]) + 1)])
        out.writerow(["labels"] + doc["labels"])
        out.writerow(["roots"] + doc["root_basis"])
    else:
        out.writerow(["algebra", "weight", "value"] + (["brute"] if "brute" in doc else []))
        row = [doc["algebra"], format_labels(doc.get("weight", [])), doc["value"]]
        out.writerow(row + ([doc["brute"]] if "brute" in doc else []))
    return buf.getvalue()


def _render_text(doc: Dict[str, Any], matrix: str) -> str:
    kind = doc["kind"]
    if kind == "scalar":
        if "brute" in doc:
            return f"{doc['value']} (enumerated: {doc['brute']})"
        return doc["value"]
    if kind == "polynomial":
        return to_text(from_json(doc["polynomial"]))
    if kind == "expansion":
        return _combo_text(doc)
    if kind == "table":
        names = [format_weight(w) for w in doc["order"]]
        width = max(len(n) for n in names)
        rows = _matrix_rows(doc, matrix)
        cell = max(len(str(x)) for row in rows + [doc["r_values"]] for x in row)
        lines = [f"{'R':>{width}}  " + " ".join(f"{v:>{cell}}" for v in doc["r_values"])]
        for name, row in zip(names, rows):
            lines.append(f"{name:>{width}}  " + " ".join(f"{x:>{cell}}" for x in row))
        return "\n".join(lines)
    if kind == "verify":
        lines = []
        for e in doc["checks"]:
            where = format_weight(e["weight"]) if "weight" in e else ""
            lines.append(f"{e['status']:<8} {e['name']:<14} {where}".rstrip())
            if e["status"] == "fail":
                lines.append(f"         witness: {json.dumps(e.get('witness'), sort_keys=True)}")
        failed = sum(1 for e in doc["checks"] if e["status"] == "fail")
        lines.append("all checks passed" if not failed else f"{failed} check(s) failed")
        return "\n".join(lines)
    if kind == "shifts":
        # shifts are -(n_1 alpha_1 + ... + n_r alpha_r), shown as n_1,...,n_r
        return "\n".join(
            f"{p['count']:+d}  {format_labels(p['shift']):<16} {format_labels(p['partner'])}" for p in doc["pairs"]
        )
    if kind == "rho":
        return f"labels: {', '.join(doc['labels'])}\nroot basis: {', '.join(doc['root_basis'])}\nk: {doc['k']}"
    lines = []
    for r in doc["roots"]:
        line = f"{format_labels(r['coeffs']):<20} {format_labels(r['labels']):<20} {r['height']}"
        lines.append(f"{line} highest" if r["highest"] else line)
    return "\n".join(lines)


def _render_latex(doc: Dict[str, Any], matrix: str) -> str:
    kind = doc["kind"]
    if kind == "polynomial":
        return to_latex(from_json(doc["polynomial"]))
    if kind == "expansion":
        return _combo_text(doc, latex=True)
    if kind == "table":
        body = " \\\\\n".join(" & ".join(str(x) for x in row) for row in _matrix_rows(doc, matrix))
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"
    return _render_text(doc, matrix)


def render(doc: Dict[str, Any], fmt: str, matrix: str = "characters") -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == "csv":
        return _render_csv(doc, matrix)
    if fmt == "latex":
        return _render_latex(doc, matrix)
    return _render_text(doc, matrix)


def exit_status(doc: Dict[str, Any]) -> int:
    if doc["kind"] == "verify":
        return 0 if doc["passed"] else 1
    if doc.get("agree") is False:
        return 1
    return 0


def _cache_key(args, rs: RootSystem, lam: Optional[Weight]) -> List[str]:
    options = f"method={args.method};max_order={args.max_order};max_layer_roots={args.max_layer_roots}"
    if args.verb == "count":
        options += f";brute={bool(args.brute)}"
    if args.verb == "layerpoly":
        options += f";fix={args.fix}"
    if args.verb == "verify":
        options += f";checks={args.checks};upto={args.upto}"
    return [rs.name, args.verb, format_labels(lam) if lam is not None else "", TOOL_VERSION, options]


def run(args) -> Tuple[int, str]:
    """Execute one parsed command; returns (exit status, rendered document)."""
    rs = build_root_system(parse_lie_type(args.algebra))
    lam: Optional[Weight] = None
    if args.labels is not None:
        lam = check_weight(rs, parse_weight(args.labels), dominant=args.verb in _NEEDS_DOMINANT)
    elif args.verb in _NEEDS_LABELS:
        raise UsageError(f"'{args.verb}' needs Dynkin labels, e.g. {format_labels(rs.rho)}")
    if args.fix is not None and args.verb != "layerpoly":
        raise UsageError("--fix only applies to layerpoly")
    fmt = args.format or ("csv" if args.verb == "table" else "text")

    cache = ResultCache(args.cache_dir, enabled=not args.no_cache)
    key = _cache_key(args, rs, lam)
    doc = cache_get(cache, key)
    if doc is None:
        doc = compute(rs, args, lam)
        cache_put(cache, CacheEntry(key, doc))
    else:
        logger.info("served %s %s from cache", rs.name, args.verb)
    return exit_status(doc), render(doc, fmt, args.matrix)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="layerlie",
        description="Exact weight counts, characters and layer decompositions of simple Lie algebras.",
    )
    ap.add_argument("verb", choices=VERBS, help="What to compute")
    ap.add_argument("algebra", help="Algebra token, letter then rank (e.g. G2, b3)")
    ap.add_argument("labels", nargs="?", help="Comma-separated Dynkin labels (e.g. 1,1)")
    ap.add_argument("--format", choices=FORMATS, default=None, help="Output format (default text; csv for table)")
    ap.add_argument("--matrix", choices=sorted(MATRICES), default="characters", help="Matrix shown by 'table' in text/csv/latex")
    ap.add_argument("--upto", default=None, help="verify: sweep every weight of the R-ordering up to these labels")
    ap.add_argument("--checks", default="all", help="verify: comma-separated checks or 'all'")
    ap.add_argument("--brute", action="store_true", help="count: cross-check against orbit-length enumeration")
    ap.add_argument("--fix", default=None, help="layerpoly: fix labels before printing R, e.g. 2=0,3=0")
    ap.add_argument("--method", choices=LAYER_METHODS, default="operator", help="How the layer polynomial is computed")
    ap.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="Largest Weyl group to enumerate")
    ap.add_argument(
        "--max-layer-roots",
        type=int,
        default=DEFAULT_MAX_LAYER_ROOTS,
        help="Most non-simple positive roots for which the layer polynomial is built",
    )
    ap.add_argument("--no-cache", action="store_true", help="Do not read or write the result cache")
    ap.add_argument("--cache-dir", default=None, help="Cache directory (default $LAYERLIE_CACHE_DIR or ~/.cache/layerlie)")
    noise = ap.add_mutually_exclusive_group()
    noise.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    noise.add_argument("--quiet", "-q", action="store_true", help="Only warnings and errors on stderr")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    try:
        status, text = run(args)
    except (LieTypeError, WeightError, PolyError, GroupTooLargeError, LayerTooLargeError, UsageError) as e:
        print(f"layerlie: error: {e}", file=sys.stderr)
        return 2
    except ConjectureViolation as e:
        print(json.dumps(e.report, indent=2, sort_keys=True))
        return 1
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
