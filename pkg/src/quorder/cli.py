"""Command-line surface: file ingestion, builtin families, decisions,
enumeration, census, and the bundled verification suite of known small cases.

All reports are a single JSON document on standard output. Exit codes:
0 the run completed (whatever the mathematical answer), 1 the answer was
negative and --fail-on-no was set, 2 bad input, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace

from .corders import (
    CyclicOrder,
    LinearOrder,
    TripleFunction,
    circular_from_linear,
    cyclic_to_function,
    is_degenerate_triple,
)
from .errors import (
    DegenerateTriple,
    NotAGroup,
    NotAQuandle,
    ParseError,
    QuorderError,
    ResourceLimit,
)
from .groups import FiniteGroup, cyclic_group, direct_product, scaling_automorphism, symmetric_group
from .quandles import (
    FiniteQuandle,
    affine_quandle,
    conj_quandle,
    core_quandle,
    dihedral_quandle,
    generalized_alexander_quandle,
    product_quandle,
    trivial_quandle,
)
from .search import (
    DEFAULT_CAPS,
    NON_CYCLIC,
    SearchCaps,
    Verdict,
    census,
    decide_bicircular,
    decide_left_circular,
    decide_left_orderable,
    decide_right_circular,
    decide_right_orderable,
    embedding_image,
    enumerate_bicircular,
    enumerate_lco,
    enumerate_left_orderings,
    enumerate_rco,
    enumerate_right_orderings,
    generate_all_quandles,
    recheck_certificate,
    subbasic_linear,
    subbasic_right,
)

PROPERTIES = ("right-circular", "left-circular", "bi-circular", "right-order", "left-order")

_DECIDERS = {
    "right-circular": decide_right_circular,
    "left-circular": decide_left_circular,
    "bi-circular": decide_bicircular,
    "right-order": decide_right_orderable,
    "left-order": decide_left_orderable,
}

_ENUMERATORS = {
    "right-circular": enumerate_rco,
    "left-circular": enumerate_lco,
    "bi-circular": enumerate_bicircular,
    "right-order": enumerate_right_orderings,
    "left-order": enumerate_left_orderings,
}


# ---------------------------------------------------------------------------
# JSON codecs


def parse_input(document) -> FiniteQuandle | FiniteGroup:
    """Normalize a JSON document to a validated 0-indexed structure."""
    if not isinstance(document, dict):
        raise ParseError("input document must be a JSON object")
    kind = document.get("kind")
    if kind not in ("quandle", "group"):
        raise ParseError(f"unknown kind {kind!r}; expected 'quandle' or 'group'")
    base = document.get("index_base", 0)
    if base not in (0, 1):
        raise ParseError(f"index_base must be 0 or 1, got {base!r}")
    table = document.get("table")
    if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
        raise ParseError("table must be a list of lists")
    try:
        norm = tuple(tuple(int(v) - base for v in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"table entries must be integers: {exc}") from None
    name = document.get("name")
    if kind == "quandle":
        return FiniteQuandle(norm, name=name)
    identity = document.get("identity")
    if not isinstance(identity, int):
        raise ParseError("group documents need an integer 'identity'")
    return FiniteGroup(norm, identity - base, name=name)


def quandle_to_json(q: FiniteQuandle) -> dict:
    doc = {"kind": "quandle", "index_base": 0, "table": [list(row) for row in q.table]}
    if q.name is not None:
        doc["name"] = q.name
    return doc


def group_to_json(g: FiniteGroup) -> dict:
    doc = {
        "kind": "group",
        "index_base": 0,
        "identity": g.identity,
        "table": [list(row) for row in g.table],
    }
    if g.name is not None:
        doc["name"] = g.name
    return doc


def order_to_json(order: CyclicOrder | LinearOrder) -> dict:
    if isinstance(order, CyclicOrder):
        return {"arrangement": list(order.arrangement)}
    return {"ranking": list(order.ranking)}


def order_from_json(doc: dict) -> CyclicOrder | LinearOrder:
    if "arrangement" in doc:
        return CyclicOrder(tuple(doc["arrangement"]))
    if "ranking" in doc:
        return LinearOrder(tuple(doc["ranking"]))
    raise ParseError("order document needs 'arrangement' or 'ranking'")


def triple_function_to_json(f: TripleFunction) -> list:
    """Nondegenerate entries only; degenerate triples are 0 by definition."""
    n = f.size
    return [
        [x, y, z, f.value(x, y, z)]
        for x in range(n)
        for y in range(n)
        for z in range(n)
        if not is_degenerate_triple(x, y, z)
    ]


def triple_function_from_json(n: int, entries: list) -> TripleFunction:
    dense = [0] * n**3
    for x, y, z, v in entries:
        dense[(x * n + y) * n + z] = v
    return TripleFunction(n, tuple(dense))


def verdict_to_json(v: Verdict) -> dict:
    cert = None
    if v.certificate is not None:
        cert = {"kind": v.certificate.kind, "data": v.certificate.data, "detail": v.certificate.detail}
    return {
        "answer": "yes" if v.answer else "no",
        "witness": order_to_json(v.witness) if v.witness is not None else None,
        "certificate": cert,
    }


# ---------------------------------------------------------------------------
# builtin family and group specs


def group_from_spec(spec: str) -> FiniteGroup:
    """Parse 'z3', 's3', or an x-separated product such as 'z2xz2'."""
    parts = spec.lower().split("x")
    groups = []
    for part in parts:
        if len(part) >= 2 and part[0] == "z" and part[1:].isdigit():
            groups.append(cyclic_group(int(part[1:])))
        elif len(part) >= 2 and part[0] == "s" and part[1:].isdigit():
            degree = int(part[1:])
            if degree > 5:
                raise ParseError(f"symmetric group degree {degree} too large")
            groups.append(symmetric_group(degree))
        else:
            raise ParseError(f"unrecognized group spec {part!r}")
    g = groups[0]
    for h in groups[1:]:
        g = direct_product(g, h)
    return g


def quandle_from_builtin(spec: str) -> FiniteQuandle:
    """Parse a builtin family spec such as 'dihedral:3' or 'conj:s3'."""
    head, _, rest = spec.partition(":")
    head = head.lower()
    try:
        if head == "trivial":
            return trivial_quandle(int(rest))
        if head == "dihedral":
            return dihedral_quandle(int(rest))
        if head == "affine":
            n_str, _, alpha_str = rest.partition(":")
            return affine_quandle(int(n_str), int(alpha_str))
        if head == "conj":
            return conj_quandle(group_from_spec(rest))
        if head == "core":
            return core_quandle(group_from_spec(rest))
        if head == "alexander":
            group_str, _, alpha_str = rest.rpartition(":")
            g = group_from_spec(group_str)
            return generalized_alexander_quandle(g, scaling_automorphism(g, int(alpha_str)))
        if head == "product":
            return product_quandle([quandle_from_builtin(part) for part in rest.split("+")])
    except ValueError as exc:
        raise ParseError(f"bad builtin spec {spec!r}: {exc}") from None
    raise ParseError(f"unknown builtin family {head!r}")


# ---------------------------------------------------------------------------
# named reference checks


def _check_three_element_example(caps: SearchCaps) -> dict:
    """The order-3 quandle with orbits {0,1} and {2} admits no circular
    ordering invariant on either side."""
    q = parse_input({"kind": "quandle", "index_base": 1, "table": [[1, 1, 2], [2, 2, 1], [3, 3, 3]]})
    rco = enumerate_rco(q, caps)
    lco = enumerate_lco(q, caps)
    vr = decide_right_circular(q, caps=caps)
    vl = decide_left_circular(q, caps=caps)
    certs_ok = (
        not vr.answer
        and not vl.answer
        and recheck_certificate(q, vr.certificate)
        and recheck_certificate(q, vl.certificate)
    )
    return {
        "name": "example:three-element-neither",
        "passed": len(rco) == 0 and len(lco) == 0 and certs_ok,
        "details": {
            "rco_count": len(rco),
            "lco_count": len(lco),
            "right_certificate": vr.certificate.kind if vr.certificate else None,
            "left_certificate": vl.certificate.kind if vl.certificate else None,
        },
    }


def _check_dihedral_example(caps: SearchCaps) -> dict:
    q = dihedral_quandle(3)
    rco = enumerate_rco(q, caps)
    lco = enumerate_lco(q, caps)
    vr = decide_right_circular(q, caps=caps)
    cert = vr.certificate
    cert_ok = (
        cert is not None
        and cert.kind == NON_CYCLIC
        and cert.data.get("group_order") == 6
        and recheck_certificate(q, cert)
    )
    return {
        "name": "example:dihedral-z3-neither",
        "passed": len(rco) == 0 and len(lco) == 0 and not vr.answer and cert_ok,
        "details": {
            "rco_count": len(rco),
            "lco_count": len(lco),
            "right_certificate": cert.kind if cert else None,
            "inner_group_order": cert.data.get("group_order") if cert else None,
        },
    }


def _check_trivial_two_example(caps: SearchCaps) -> dict:
    q = trivial_quandle(2)
    bco = enumerate_bicircular(q, caps)
    zero_ok = (
        len(bco) == 1
        and bco.members[0] == CyclicOrder((0, 1))
        and all(v == 0 for v in cyclic_to_function(bco.members[0]).values)
    )
    return {
        "name": "example:trivial-2-bicircular",
        "passed": zero_ok,
        "details": {"bco_count": len(bco)},
    }


def _check_conj_not_left_circular(caps: SearchCaps) -> dict:
    groups = [
        cyclic_group(3),
        cyclic_group(4),
        direct_product(cyclic_group(2), cyclic_group(2)),
        symmetric_group(3),
    ]
    counts = {}
    for g in groups:
        lco = enumerate_lco(conj_quandle(g), caps)
        counts[g.name] = len(lco)
    return {
        "name": "lemma:conj-not-left-circular",
        "passed": all(c == 0 for c in counts.values()),
        "details": {"lco_counts": counts},
    }


def _check_ordering_lemma(caps: SearchCaps) -> dict:
    """Closing any one-sided ordering into a cycle stays invariant on that side,
    over every quandle of order <= 4."""
    checked = 0
    failures = 0
    for n in range(1, 5):
        for q in generate_all_quandles(n, caps=caps):
            rco = set(enumerate_rco(q, caps).members)
            lco = set(enumerate_lco(q, caps).members)
            for o in enumerate_right_orderings(q, caps):
                checked += 1
                if circular_from_linear(o) not in rco:
                    failures += 1
            for o in enumerate_left_orderings(q, caps):
                checked += 1
                if circular_from_linear(o) not in lco:
                    failures += 1
    return {
        "name": "lemma:ordering",
        "passed": failures == 0 and checked > 0,
        "details": {"orderings_checked": checked, "failures": failures},
    }


def _check_subbasis_semantics(caps: SearchCaps) -> dict:
    q = trivial_quandle(3)
    picked = subbasic_right(q, (0, 1, 2), caps)
    rco = enumerate_rco(q, caps)
    try:
        subbasic_right(q, (0, 0, 1), caps)
        degenerate_rejected = False
    except DegenerateTriple:
        degenerate_rejected = True
    linear_counts = {
        f"{a}<{b}": len(subbasic_linear(q, "right", (a, b), caps))
        for a in range(3)
        for b in range(3)
        if a != b
    }
    return {
        "name": "subbasis:semantics",
        "passed": (
            len(rco) == 2
            and len(picked) == 1
            and degenerate_rejected
            and all(c == 3 for c in linear_counts.values())
        ),
        "details": {
            "rco_count": len(rco),
            "picked_count": len(picked),
            "degenerate_rejected": degenerate_rejected,
            "linear_counts": linear_counts,
        },
    }


def _check_embedding_fibers(caps: SearchCaps) -> dict:
    q = trivial_quandle(3)
    report = embedding_image(q, "right", caps)
    rco = set(enumerate_rco(q, caps).members)
    return {
        "name": "embedding:trivial-3-right",
        "passed": (
            report.domain_size == 6
            and report.image_size == 2
            and report.fiber_sizes() == (3, 3)
            and all(c in rco for c in report.image)
        ),
        "details": {
            "domain_size": report.domain_size,
            "image_size": report.image_size,
            "fiber_sizes": list(report.fiber_sizes()),
        },
    }


def verify_paper(caps: SearchCaps = DEFAULT_CAPS) -> list[dict]:
    """Run every named reference check; failures are report content."""
    return [
        _check_three_element_example(caps),
        _check_dihedral_example(caps),
        _check_trivial_two_example(caps),
        _check_conj_not_left_circular(caps),
        _check_ordering_lemma(caps),
        _check_subbasis_semantics(caps),
        _check_embedding_fibers(caps),
    ]


# ---------------------------------------------------------------------------
# run configuration and dispatch


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    builtin: str | None = None
    prop: str | None = None
    strategy: str = "auto"
    caps: SearchCaps = DEFAULT_CAPS
    threads: int = 1
    max_order: int = 4
    fail_on_no: bool = False
    pretty: bool = False
    output: str | None = None


def _load_quandle(config: RunConfig) -> FiniteQuandle:
    if (config.input_path is None) == (config.builtin is None):
        raise ParseError("exactly one of --input and --builtin is required")
    if config.builtin is not None:
        return quandle_from_builtin(config.builtin)
    try:
        with open(config.input_path, "r", encoding="utf-8") as fh:
            document = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {config.input_path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {config.input_path}: {exc}") from None
    structure = parse_input(document)
    if isinstance(structure, FiniteGroup):
        raise ParseError(
            "orderability properties apply to quandles; wrap the group with a "
            "builtin spec such as conj:... or core:..."
        )
    return structure


def _execute(config: RunConfig) -> tuple[dict, bool]:
    """Produce (report, negative) where negative drives --fail-on-no."""
    if config.command in ("check", "enumerate", "witness") and config.prop not in PROPERTIES:
        raise ParseError(f"property must be one of {', '.join(PROPERTIES)}")
    if config.command == "check":
        q = _load_quandle(config)
        verdict = _DECIDERS[config.prop](q, strategy=config.strategy, caps=config.caps)
        report = {
            "command": "check",
            "property": config.prop,
            "input": quandle_to_json(q),
            "verdict": verdict_to_json(verdict),
        }
        return report, not verdict.answer
    if config.command == "enumerate":
        q = _load_quandle(config)
        space = _ENUMERATORS[config.prop](q, config.caps, config.threads)
        report = {
            "command": "enumerate",
            "property": config.prop,
            "input": quandle_to_json(q),
            "kind": space.kind,
            "count": len(space),
            "members": [order_to_json(m) for m in space],
        }
        return report, len(space) == 0
    if config.command == "witness":
        q = _load_quandle(config)
        verdict = _DECIDERS[config.prop](q, strategy=config.strategy, caps=config.caps)
        witness = order_to_json(verdict.witness) if verdict.witness is not None else None
        return {"command": "witness", "witness": witness}, witness is None
    if config.command == "census":
        records = census(config.max_order, config.caps)
        return {"command": "census", "max_order": config.max_order, "records": records}, False
    if config.command == "verify-paper":
        checks = verify_paper(config.caps)
        all_passed = all(c["passed"] for c in checks)
        report = {"command": "verify-paper", "checks": checks, "all_passed": all_passed}
        return report, not all_passed
    raise ParseError(f"unknown command {config.command!r}")


def run(config: RunConfig) -> tuple[dict, int]:
    """Execute a configuration, returning the report and the exit status."""
    try:
        report, negative = _execute(config)
    except ResourceLimit as exc:
        return {"error": {"kind": "resource-limit", "detail": str(exc)}}, 3
    except NotAQuandle as exc:
        return {
            "error": {"kind": "not-a-quandle", "axiom": exc.axiom, "witness": list(exc.witness), "detail": str(exc)}
        }, 2
    except NotAGroup as exc:
        return {
            "error": {"kind": "not-a-group", "reason": exc.reason, "witness": list(exc.witness), "detail": str(exc)}
        }, 2
    except QuorderError as exc:
        return {"error": {"kind": type(exc).__name__, "detail": str(exc)}}, 2
    status = 1 if (config.fail_on_no and negative) else 0
    return report, status


def render_report(report: dict, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(report, sort_keys=True, indent=2)
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p: argparse.ArgumentParser, with_input: bool, with_property: bool) -> None:
    if with_input:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", metavar="FILE", help="JSON quandle file")
        src.add_argument("--builtin", metavar="SPEC", help="builtin family spec, e.g. dihedral:3")
    if with_property:
        p.add_argument("--property", required=True, choices=PROPERTIES)
        p.add_argument(
            "--strategy",
            choices=("auto", "fast", "brute"),
            default="auto",
            help="force the structural fast path or the exhaustive tier",
        )
    p.add_argument("--max-enum", type=int, metavar="N", help="cap carrier size for enumeration")
    p.add_argument("--threads", type=int, default=1, metavar="K")
    p.add_argument("--fail-on-no", action="store_true", help="exit 1 when the answer is no")
    p.add_argument("--pretty", action="store_true", help="indent the JSON report")
    p.add_argument("--output", metavar="FILE", help="write the report to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quorder",
        description="Decide and enumerate circular and linear orderings of finite quandles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("check", "decide one orderability property"),
        ("enumerate", "list all orderings with the property"),
        ("witness", "print just the witness ordering, if any"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_common(p, with_input=True, with_property=True)
    p = sub.add_parser("census", help="orderability flags for all small quandles")
    p.add_argument("--max-order", type=int, default=4, metavar="N")
    _add_common(p, with_input=False, with_property=False)
    p = sub.add_parser("verify-paper", help="run the named small-case reference checks")
    _add_common(p, with_input=False, with_property=False)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    caps = DEFAULT_CAPS
    if getattr(args, "max_enum", None) is not None:
        caps = replace(caps, max_circular_n=args.max_enum, max_linear_n=args.max_enum)
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        builtin=getattr(args, "builtin", None),
        prop=getattr(args, "property", None),
        strategy=getattr(args, "strategy", "auto"),
        caps=caps,
        threads=args.threads,
        max_order=getattr(args, "max_order", 4),
        fail_on_no=args.fail_on_no,
        pretty=args.pretty,
        output=args.output,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    report, status = run(config)
    text = render_report(report, config.pretty)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
