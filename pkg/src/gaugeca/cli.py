"""Command-line front end.

Exit codes: 0 pass, 1 usage or parse error, 2 I/O error, 3 property failure,
4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .ca import FullState, parse_matter
from .errors import GaugeCAError, InvalidArgumentError, ResourceLimitError
from .gauge import parse_field
from .invariance import (
    DEFAULT_BOUND,
    Domain,
    check_characterization,
    check_equivalent,
    check_gauge_invariance,
    check_inhomogeneous,
    count_orbits,
    fig5_demo,
    orbit_field,
    orbit_joint,
    orbit_matter,
)
from .render import render_json, render_ppm, render_text
from .scenario import load_scenario, simulate
from .theories import get_theory

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_FAIL, EXIT_LIMIT = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _domain_flags(p, theory=True):
    p.add_argument("--L", type=int, default=2, help="ring length (default 2)")
    p.add_argument("--K", type=int, default=2, help="color count (default 2)")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="exhaustive evaluation bound")
    if theory:
        p.add_argument("--theory", default="T", help="registry name (default T)")
    _output_flags(p)


def _output_flags(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times (reproducible output)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaugeca", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="simulate a scenario and render its spacetime diagram")
    run.add_argument("scenario", help="scenario file, or a bundled name (fig1, fig4)")
    run.add_argument("--format", choices=("text", "ppm", "json"), default="text")
    run.add_argument("--json", dest="format", action="store_const", const="json")
    run.add_argument("--out", default="-", help="output path (default stdout)")
    run.add_argument("--scale", type=int, default=8, help="PPM pixels per subcell")

    check = sub.add_parser("check", help="run a verification suite")
    check.add_argument("suite", choices=("invariance", "inhomogeneous", "characterization", "fig5"))
    check.add_argument("--t2", default="T", help="second theory for characterization")
    _domain_flags(check)

    orbits = sub.add_parser("orbits", help="count orbits or list one orbit")
    orbits.add_argument("--L", type=int)
    orbits.add_argument("--K", type=int, required=True)
    orbits.add_argument("--kind", choices=("matter", "field", "joint"), default="matter")
    orbits.add_argument("--state", help="state literal; joint states are 'psi/field'")
    orbits.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    orbits.add_argument("--json", action="store_true")

    equiv = sub.add_parser("equiv", help="compare two theories up to gauge")
    equiv.add_argument("--t1", required=True)
    equiv.add_argument("--t2", required=True)
    _domain_flags(equiv, theory=False)
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _domain(args) -> Domain:
    return Domain(args.L, args.K, args.mode, args.trials, args.seed, args.bound)


def cmd_run(args) -> int:
    try:
        scenario = load_scenario(args.scenario)
    except OSError as exc:
        print(f"error: cannot read scenario: {exc}", file=sys.stderr)
        return EXIT_IO
    states = simulate(scenario)
    if args.format == "text":
        data = render_text(states, scenario.palette).encode()
    elif args.format == "ppm":
        data = render_ppm(states, scenario.palette, args.scale)
    else:
        data = render_json(states, scenario.theory).encode()
    try:
        if args.out == "-":
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        else:
            with open(args.out, "wb") as fh:
                fh.write(data)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_check(args) -> int:
    timing = not args.no_timing
    if args.suite == "fig5":
        report = fig5_demo()
        _emit(json.dumps(report.to_dict(), indent=2) if args.json else report.to_text())
        return EXIT_OK if report.passed else EXIT_FAIL
    domain = _domain(args)
    if args.suite == "invariance":
        report = check_gauge_invariance(get_theory(args.theory), domain=domain)
    elif args.suite == "inhomogeneous":
        report = check_inhomogeneous(domain)
    else:
        report = check_characterization(get_theory(args.theory), get_theory(args.t2), domain)
    _emit(report.to_json(timing) if args.json else report.to_text(timing))
    return EXIT_OK if report.verdict else EXIT_FAIL


def _parse_state(kind, text, K, L):
    if kind == "matter":
        return parse_matter(text, K, L)
    if kind == "field":
        return parse_field(text, K, L)
    if "/" not in text:
        raise InvalidArgumentError("joint state literal must be 'psi/field'")
    psi_text, field_text = text.split("/", 1)
    return FullState(parse_matter(psi_text, K, L), parse_field(field_text, K, L))


def _state_literal(obj):
    return str(obj)


def cmd_orbits(args) -> int:
    if args.state is not None:
        state = _parse_state(args.kind, args.state, args.K, args.L)
        orbit = {"matter": orbit_matter, "field": orbit_field, "joint": orbit_joint}[args.kind](
            state, args.bound
        )
        members = [_state_literal(m) for m in orbit.members]
        if args.json:
            _emit(json.dumps({
                "kind": args.kind,
                "size": len(members),
                "representative": members[0],
                "members": members,
            }, indent=2))
        else:
            lines = [f"orbit size: {len(members)}", f"representative: {members[0]}", "members:"]
            lines += [f"  {m}" for m in members]
            _emit("\n".join(lines))
        return EXIT_OK
    if args.L is None:
        raise InvalidArgumentError("--L is required when no --state is given")
    result = count_orbits(args.L, args.K, args.kind, args.bound)
    if args.json:
        _emit(json.dumps({
            "kind": args.kind,
            "L": args.L,
            "K": args.K,
            "direct": result.direct,
            "burnside": result.burnside,
            "agree": result.agree,
        }, indent=2))
    else:
        _emit(str(result))
    return EXIT_OK if result.agree else EXIT_FAIL


def cmd_equiv(args) -> int:
    t1, t2 = get_theory(args.t1), get_theory(args.t2)
    domain = _domain(args)
    timing = not args.no_timing
    eq = check_equivalent(t1, t2, domain)
    char = check_characterization(t1, t2, domain)
    if args.json:
        doc = eq.to_dict(timing)
        doc["equivalent"] = eq.verdict
        doc["characterization"] = char.details
        doc["characterization_agrees"] = char.verdict
        _emit(json.dumps(doc, indent=2))
    else:
        lines = [f"{k}: {v}" for k, v in eq.details.items()]
        lines.append(f"equivalent: {eq.verdict}")
        lines += [f"{k}: {v}" for k, v in char.details.items()]
        lines.append(f"characterization agrees: {char.verdict}")
        if eq.witness is not None:
            w = eq.witness.to_dict()
            lines.append(f"witness configuration: {w['state']['psi']} / {w['state']['field']}")
        if timing:
            lines.append(f"elapsed_ms: {(eq.elapsed + char.elapsed) * 1000:.3f}")
        _emit("\n".join(lines))
    return EXIT_OK if eq.verdict else EXIT_FAIL


COMMANDS = {"run": cmd_run, "check": cmd_check, "orbits": cmd_orbits, "equiv": cmd_equiv}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        card = f" (cardinality {exc.cardinality})" if exc.cardinality is not None else ""
        print(f"resource limit: {exc}{card}", file=sys.stderr)
        return EXIT_LIMIT
    except GaugeCAError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
