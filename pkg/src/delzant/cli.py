"""Command-line interface.

Ten subcommands expose the library over JSON (rationals as strings, see
``jsonio``):

  verify <polygon.json>                 Delzant report
  classify <polygon.json>               trapezoid parameters + witness map
  standard --a A --b B --m M            standard trapezoid polygon
  count-tori --manifold JSON            number of maximal-torus classes
  enumerate-tori --manifold JSON        the classes as parameter triples
  graph <polygon.json> --xi X,Y [--dot] labeled graph (JSON or DOT)
  betti <polygon.json> --xi X,Y         Betti numbers b0..b4
  betti --fixed-data JSON               same, from explicit fixed-point data
  congruent <p1.json> <p2.json>         witness map or "none"
  extendable <polygon.json> --xi X,Y    toric-extension report
  form-autos --form NAME --bound N      automorphisms of an intersection form

Polygon arguments are file paths, or "-" for stdin.  Exit codes: 0 on
success, 1 on a domain error (JSON error object on stderr), 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import circle_actions, hirzebruch, jsonio, polygon
from .errors import DelzantError


def _load_json(path: str, stdin):
    if path == "-":
        text = stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DelzantError(f"malformed JSON in {path!r}: {exc}") from exc


def _load_polygon(path: str, stdin) -> polygon.Polygon:
    return jsonio.polygon_from_json(_load_json(path, stdin))


def _parse_manifold(text: str) -> hirzebruch.ManifoldClass:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DelzantError(f"malformed manifold JSON: {exc}") from exc
    return jsonio.manifold_from_json(data)


_FORMS = {
    "hyperbolic": hirzebruch.HYPERBOLIC_FORM,
    "blowup": hirzebruch.BLOWUP_FORM,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delzant",
        description="Exact computations with Delzant polygons and Hirzebruch trapezoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the Delzant condition")
    p.add_argument("polygon", help="polygon JSON file, or - for stdin")

    p = sub.add_parser("classify", help="identify a Delzant quadrilateral")
    p.add_argument("polygon")

    p = sub.add_parser("standard", help="emit a standard trapezoid")
    p.add_argument("--a", required=True, help="average width, e.g. 5/2")
    p.add_argument("--b", required=True, help="height")
    p.add_argument("--m", required=True, type=int, help="nonnegative integer parameter")

    p = sub.add_parser("count-tori", help="count conjugacy classes of maximal tori")
    p.add_argument("--manifold", required=True, help="manifold JSON")

    p = sub.add_parser("enumerate-tori", help="list the classes as parameters")
    p.add_argument("--manifold", required=True)

    p = sub.add_parser("graph", help="labeled graph of a circle subaction")
    p.add_argument("polygon")
    p.add_argument("--xi", required=True, help="primitive direction, e.g. 0,1 (use --xi=-1,2)")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")

    p = sub.add_parser("betti", help="Betti numbers from a circle action")
    p.add_argument("polygon", nargs="?", help="polygon JSON (omit with --fixed-data)")
    p.add_argument("--xi", help="primitive direction")
    p.add_argument("--fixed-data", help="fixed-point data JSON string")

    p = sub.add_parser("congruent", help="find a lattice-affine congruence")
    p.add_argument("polygon1")
    p.add_argument("polygon2")

    p = sub.add_parser("extendable", help="toric-extension criterion for a circle subaction")
    p.add_argument("polygon")
    p.add_argument("--xi", required=True)

    p = sub.add_parser("form-autos", help="automorphisms of an intersection form")
    p.add_argument("--form", required=True, choices=sorted(_FORMS))
    p.add_argument("--bound", type=int, default=3, help="entry bound for the search")

    return parser


def _dispatch(args, stdin) -> tuple[str, bool]:
    """Run one subcommand; returns (output text, is_raw) with is_raw set
    for DOT output, which is not JSON."""
    if args.command == "verify":
        report = polygon.is_delzant(_load_polygon(args.polygon, stdin))
        return json.dumps(jsonio.delzant_report_to_json(report), indent=2), False

    if args.command == "classify":
        params, witness = hirzebruch.classify_quadrilateral(_load_polygon(args.polygon, stdin))
        payload = {
            "params": jsonio.params_to_json(params),
            "witness": jsonio.affine_to_json(witness),
        }
        return json.dumps(payload, indent=2), False

    if args.command == "standard":
        params = hirzebruch.HirzebruchParams(
            jsonio.rational_from_json(args.a), jsonio.rational_from_json(args.b), args.m
        )
        poly = hirzebruch.standard_trapezoid(params)
        return json.dumps(jsonio.polygon_to_json(poly), indent=2), False

    if args.command == "count-tori":
        manifold = _parse_manifold(args.manifold)
        return json.dumps(hirzebruch.count_tori(manifold)), False

    if args.command == "enumerate-tori":
        manifold = _parse_manifold(args.manifold)
        entries = [jsonio.params_to_json(p) for p in hirzebruch.enumerate_tori(manifold)]
        return json.dumps(entries, indent=2), False

    if args.command == "graph":
        g = circle_actions.circle_graph(
            _load_polygon(args.polygon, stdin), jsonio.xi_from_text(args.xi)
        )
        if args.dot:
            return jsonio.graph_to_dot(g), True
        return json.dumps(jsonio.graph_to_json(g), indent=2), False

    if args.command == "betti":
        if args.fixed_data is not None:
            try:
                data = json.loads(args.fixed_data)
            except json.JSONDecodeError as exc:
                raise DelzantError(f"malformed fixed-data JSON: {exc}") from exc
            fixed = jsonio.fixed_data_from_json(data)
        else:
            if args.polygon is None or args.xi is None:
                raise DelzantError("betti needs either a polygon with --xi or --fixed-data")
            g = circle_actions.circle_graph(
                _load_polygon(args.polygon, stdin), jsonio.xi_from_text(args.xi)
            )
            fixed = circle_actions.fixed_point_data(g)
        return json.dumps(list(circle_actions.betti_numbers(fixed))), False

    if args.command == "congruent":
        p1 = _load_polygon(args.polygon1, stdin)
        p2 = _load_polygon(args.polygon2, stdin)
        witness = polygon.congruent(p1, p2)
        if witness is None:
            return json.dumps("none"), False
        return json.dumps(jsonio.affine_to_json(witness), indent=2), False

    if args.command == "extendable":
        g = circle_actions.circle_graph(
            _load_polygon(args.polygon, stdin), jsonio.xi_from_text(args.xi)
        )
        report = circle_actions.check_extendable(g)
        return json.dumps(jsonio.extendability_to_json(report), indent=2), False

    if args.command == "form-autos":
        autos = hirzebruch.form_automorphisms(_FORMS[args.form], args.bound)
        return json.dumps(jsonio.matrices_to_json(autos), indent=2), False

    raise AssertionError(f"unhandled command {args.command!r}")


def run(argv, stdout=None, stderr=None, stdin=None) -> int:
    """Entry point suitable for in-process testing."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    stdin = stdin if stdin is not None else sys.stdin
    parser = _build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        output, is_raw = _dispatch(args, stdin)
    except DelzantError as exc:
        error = {"error": exc.code, "detail": str(exc)}
        print(json.dumps(error), file=stderr)
        return 1
    except OSError as exc:
        print(json.dumps({"error": "io_error", "detail": str(exc)}), file=stderr)
        return 1
    if is_raw:
        stdout.write(output)
    else:
        print(output, file=stdout)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
