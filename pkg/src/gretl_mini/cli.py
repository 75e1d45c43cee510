"""Command line driver.

    gretl-mini transform --source A.graph --rules X.gretl --out out.graph [--dot out.dot] [--trace t.json]
    gretl-mini validate --source A.graph
    gretl-mini query --source A.graph 'from c: V{Class} reportSet c.name end'
    gretl-mini case [--source FIXTURE_DIR]

Payload goes to stdout; diagnostics go to stderr.  Failures print one line
``ERROR <kind> <location> <message>`` and exit with status 1; usage errors
exit with status 2.
"""

import argparse
import logging
import os
import sys
from pathlib import Path

from .case import FIXTURE_DIR, manifest_paths, run_case
from .errors import GretlError, IoError, ValidationError
from .interchange import export_dot, export_trace, load_graph, save_graph, write_text
from .query import Environment, evaluate, parse_query
from .transform import execute, load_transformation
from .values import render

log = logging.getLogger("gretl_mini")


def _color(text, code):
    if os.environ.get("GRETL_MINI_COLOR") == "1":
        return f"\033[{code}m{text}\033[0m"
    return text


def _location(exc):
    if isinstance(exc, ValidationError) and exc.element is not None and exc.statement_index is None:
        return str(exc.element)
    return exc.location


def report_error(exc):
    message = " ".join(str(exc).split())
    print(f"ERROR {exc.kind_name()} {_location(exc)} {message}", file=sys.stderr)


def _read_rules(path):
    try:
        return load_transformation(path)
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from None


def cmd_transform(args):
    _, source = load_graph(args.source)
    transformation = _read_rules(args.rules)
    ctx = execute(transformation, source)
    ctx.target.validate()
    save_graph(ctx.target, args.out)
    log.info("wrote %s (%d vertices, %d edges)", args.out, len(ctx.target.vertices), len(ctx.target.edges))
    if args.dot:
        write_text(args.dot, export_dot(ctx.target))
    if args.trace:
        export_trace(ctx, args.trace)
    return 0


def cmd_validate(args):
    _, graph = load_graph(args.source)
    log.info("%s: %d vertices, %d edges, valid", args.source, len(graph.vertices), len(graph.edges))
    return 0


def cmd_query(args):
    _, graph = load_graph(args.source)
    env = Environment(graph, imports=sorted(graph.schema.packages))
    print(render(evaluate(parse_query(args.query), env)))
    return 0


def cmd_case(args):
    directory = Path(args.source) if args.source else FIXTURE_DIR
    paths = manifest_paths(directory)
    if not paths:
        print(f"ERROR IoError - no fixture manifests in {directory}", file=sys.stderr)
        return 1
    status = 0
    for path in paths:
        name = path.name[:-len(".manifest.json")]
        try:
            report = run_case(path, out_dir=args.out)
        except GretlError as exc:
            status = 1
            print(f"{_color('FAIL', 31)} {name}: {exc.kind_name()} {' '.join(str(exc).split())}")
            continue
        if not report.passed:
            status = 1
        line = report.summary()
        print(_color(line[:4], 32 if report.passed else 31) + line[4:])
        print(f"{report.fixture}: {report.seconds:.3f}s", file=sys.stderr)
    return status


def build_parser():
    verbosity = argparse.ArgumentParser(add_help=False)
    verbosity.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS,
                           help="-v info, -vv debug (stderr)")
    parser = argparse.ArgumentParser(prog="gretl-mini", description=__doc__.split("\n\n")[0],
                                     parents=[verbosity])
    parser.set_defaults(verbose=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[verbosity], help="run a transformation on a source graph")
    p.add_argument("--source", required=True)
    p.add_argument("--rules", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dot")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("validate", parents=[verbosity], help="check a graph document against its schema")
    p.add_argument("--source", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("query", parents=[verbosity], help="evaluate a query on a graph")
    p.add_argument("--source", required=True)
    p.add_argument("query")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("case", parents=[verbosity], help="run the bundled state machine fixtures")
    p.add_argument("--source", help="fixture directory (default: bundled fixtures)")
    p.add_argument("--out", help="directory for extracted target graphs")
    p.set_defaults(func=cmd_case)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except GretlError as exc:
        report_error(exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
