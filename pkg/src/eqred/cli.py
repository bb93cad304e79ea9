"""Command-line front end.

Exit status: 0 when the verdict is positive, 1 when a reduction does not exist or
a verification fails, 2 on malformed input.  Output is JSON on stdout; ``--text``
prints a one-line human summary instead.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import deciders, oracle
from .cardinals import Cardinal, CertificateError, SymbolicProfile, check_condition, load_fixture, verify_fixture
from .cardinals.fixtures import FIXTURE_NAMES, Fixture
from .lattice import (
    ImplicationDiagram,
    builtin_diagram,
    infinite_fixtures,
    nice_scan,
    to_dot,
    verify_completeness,
    verify_soundness,
)
from .relcore import MapWitness, NotAHomomorphism, ParseError, ReductionKind, SizeProfile, classify_map


class UsageError(Exception):
    pass


def _kind(text: str) -> ReductionKind:
    try:
        return ReductionKind.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _relation(text: str) -> SizeProfile:
    try:
        return SizeProfile.parse(text)
    except (ParseError, ValueError) as exc:
        raise UsageError(f"bad relation spec: {exc}") from None


def _kind_json(kind: ReductionKind) -> dict:
    return {"name": kind.slug, "symbol": kind.symbol}


def cmd_decide(args) -> tuple[int, dict, str]:
    kind = _kind(args.kind)
    pe, pf = _relation(args.E), _relation(args.F)
    result = deciders.decide(kind, pe.expand(), pf.expand())
    out = {"kind": _kind_json(kind), "E": pe.to_spec(), "F": pf.to_spec(), "exists": result.exists}
    if result.exists and args.witness:
        out["witness"] = result.witness.table()
    if not result.exists:
        out["reason"] = result.reason.to_json()
    text = f"E {kind.symbol} F: {'yes' if result.exists else 'no'}"
    if not result.exists:
        text += f" ({result.reason})"
    return (0 if result.exists else 1), out, text


def cmd_oracle(args):
    kind = _kind(args.kind)
    pe, pf = _relation(args.E), _relation(args.F)
    try:
        found = oracle.oracle_witness(kind, pe, pf, budget=args.budget)
    except oracle.BudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    out = {"kind": _kind_json(kind), "E": pe.to_spec(), "F": pf.to_spec(), "exists": found is not None,
           "maps_searched": oracle.map_count(pe.expand(), pf.expand())}
    if found is not None:
        out["witness"] = found.table()
    return (0 if found else 1), out, f"oracle: E {kind.symbol} F: {'yes' if found else 'no'}"


def cmd_classify(args):
    pe, pf = _relation(args.E), _relation(args.F)
    try:
        phi = MapWitness.parse(args.map)
        flags = classify_map(pe.expand(), pf.expand(), phi)
    except NotAHomomorphism as exc:
        out = {"homomorphism": False, "error": str(exc)}
        return 1, out, f"not a homomorphism: {exc}"
    except (ParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    kinds = [k.slug for k in ReductionKind if all(getattr(flags, f) for f in k.required)]
    out = {
        "homomorphism": True,
        "flags": {"inj": flags.inj, "surj": flags.surj, "class_inj": flags.class_inj,
                  "class_surj": flags.class_surj, "range_invariant": flags.range_invariant},
        "kinds": kinds,
    }
    return 0, out, f"flags (i)-(v) = {flags.as_bits()}; kinds: {', '.join(kinds) or 'none'}"


def cmd_verify_diagram(args):
    D = ImplicationDiagram.load(args.diagram) if args.diagram else builtin_diagram(args.figure)
    U = oracle.enumerate_relations(args.max_ground)
    sound = verify_soundness(D, U)
    fixtures = infinite_fixtures() if args.figure == 2 else None
    complete = verify_completeness(D, U, fixtures)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(D, overlay_closure=args.closure))
    out = {"figure": args.figure, "max_ground": args.max_ground,
           "soundness": sound.to_json(), "completeness": complete.to_json()}
    ok = sound.ok and complete.ok
    used = len(complete.canonical_used())
    text = f"{'sound' if sound.ok else 'UNSOUND'}, {'complete' if complete.ok else 'INCOMPLETE'}; " \
           f"{used} canonical counterexamples used"
    fixtures_used = sorted({w['source'] for w in complete.witnesses.values() if w['source'].startswith('fixture:')})
    if fixtures_used:
        text += f"; infinite fixtures: {', '.join(f.split(':', 1)[1] for f in fixtures_used)}"
    return (0 if ok else 1), out, text


def cmd_nice_scan(args):
    kind = _kind(args.kind)
    try:
        report = nice_scan(kind, oracle.enumerate_relations(args.max_ground))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = report.to_json()
    ok = not report.unexplained
    return (0 if ok else 1), out, (f"{len(report.implied_by_kind)} atoms implied by {kind.slug}; "
                                   f"{len(report.unexplained)} not explained by the stated condition")


def _load_profile(spec: str) -> SymbolicProfile:
    """A JSON profile file, ``NAME:E`` / ``NAME:F`` for a shipped fixture side, or a finite relation spec."""
    if ":" in spec and spec.rsplit(":", 1)[0] in FIXTURE_NAMES:
        name, side = spec.rsplit(":", 1)
        fixture = load_fixture(name)
        return fixture.E if side == "E" else fixture.F
    if spec.strip().startswith("<"):
        return SymbolicProfile.from_size_profile(_relation(spec))
    try:
        with open(spec) as fh:
            return SymbolicProfile.from_json(json.load(fh))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load profile {spec!r}: {exc}") from None


def cmd_profile_check(args):
    if args.item not in range(1, 8):
        raise UsageError("item must be between 1 and 7")
    verdict = check_condition(args.item, _load_profile(args.E), _load_profile(args.F))
    return (0 if verdict.holds else 1), verdict.to_json(), str(verdict)


def cmd_certificate(args):
    names = FIXTURE_NAMES if args.target == "all" else [args.target]
    reports = []
    for name in names:
        try:
            fixture: Fixture = load_fixture(name)
        except (OSError, ValueError, KeyError, CertificateError) as exc:
            raise UsageError(f"cannot load fixture {name!r}: {exc}") from None
        reports.append(verify_fixture(fixture))
    ok = all(r["ok"] for r in reports)
    text = "; ".join(f"{r['name']}: {'ok' if r['ok'] else 'FAILED'}" for r in reports)
    return (0 if ok else 1), {"fixtures": reports, "ok": ok}, text


def cmd_census(args):
    bound, history = oracle.census(args.limit)
    vectors = sorted(f.as_bits() for f in oracle.achievable_property_vectors(bound or args.limit))
    out = {"bound": bound, "counts_per_bound": history, "vectors": vectors,
           "constraint_ok": all(v[1] == str(int(v[3] == "1" and v[4] == "1")) for v in vectors)}
    ok = bound is not None and len(vectors) == 16
    return (0 if ok else 1), out, f"{len(vectors)} property vectors, reached at bound {bound}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eqred", description="Reductions between equivalence relations.")
    parser.add_argument("--text", action="store_true", help="print a one-line summary instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = ", ".join(k.slug for k in ReductionKind)

    p = sub.add_parser("decide", help="decide whether a reduction of a kind exists")
    p.add_argument("kind", help=kinds)
    p.add_argument("E")
    p.add_argument("F")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="brute-force decision over all maps")
    p.add_argument("kind", help=kinds)
    p.add_argument("E")
    p.add_argument("F")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("classify", help="properties (i)-(v) of a map")
    p.add_argument("E")
    p.add_argument("F")
    p.add_argument("map", help="images of 0..n-1, e.g. 0,2,1")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-diagram", help="check soundness and completeness of an implication diagram")
    p.add_argument("figure", type=int, choices=(1, 2), help="1: directional diagram, 2: bi-relation diagram")
    p.add_argument("--max-ground", type=int, default=5)
    p.add_argument("--diagram", help="JSON diagram file to use instead of the built-in one")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--closure", action="store_true", help="overlay closure edges in the DOT output")
    p.set_defaults(func=cmd_verify_diagram)

    p = sub.add_parser("nice-scan", help="atomic conditions implied by a kind over a finite universe")
    p.add_argument("kind")
    p.add_argument("--max-ground", type=int, default=4)
    p.set_defaults(func=cmd_nice_scan)

    p = sub.add_parser("profile-check", help="evaluate a counting condition on symbolic profiles")
    p.add_argument("item", type=int)
    p.add_argument("E", help="profile JSON file, FIXTURE:E, FIXTURE:F or <n1,...>")
    p.add_argument("F")
    p.set_defaults(func=cmd_profile_check)

    p = sub.add_parser("certificate", help="validate fixture certificates")
    p.add_argument("action", choices=("validate",))
    p.add_argument("target", help=f"'all', a fixture name ({', '.join(FIXTURE_NAMES)}) or a fixture file")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("census", help="count achievable property vectors")
    p.add_argument("--limit", type=int, default=6)
    p.set_defaults(func=cmd_census)
    return parser


def _default(o):
    if isinstance(o, Cardinal):
        return o.to_json()
    raise TypeError(type(o))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, payload, text = args.func(args)
    except (UsageError, oracle.BoundExceeded) as exc:
        print(f"eqred: error: {exc}", file=sys.stderr)
        return 2
    if args.text:
        print(text)
    else:
        print(json.dumps(payload, indent=2, ensure_ascii=False, default=_default))
    return status


if __name__ == "__main__":
    sys.exit(main())
