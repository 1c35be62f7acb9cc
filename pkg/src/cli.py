"""
Command-line front end.

    python -m src check FAN.json
    python -m src gw FAN.json --basis e,f --cap 4 --out table.csv
    python -m src open FAN.json --divisor 0 --alpha 1 --fixed-point all
    python -m src pipeline FAN.json --divisor 0 --fixed-point 0
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence, TextIO, Tuple

from src import __version__
from src.config import settings
from src.documents import FanDocument, FanDocumentReader, ResultWriter, dumps
from src.homology.classes import ClassLattice, kernel_basis, named_basis
from src.lattice.fan import compact_divisor_rays, cy_vector, height_one_polygon, validate_fan
from src.surgery.pipeline import enumerate_fixed_points, open_invariant_surgery
from src.utils import ErrorHandler, configure_logging
from src.utils.errors import NotCalabiYauError, QueryError
from src.vertex.gv import gw_table
from src.vertex.open_invariants import ALL_FIXED_POINTS, OpenInvariantQuery, open_gw

logger = logging.getLogger(__name__)


def _integers(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def _names(text: str) -> Tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def _read(path: str) -> FanDocument:
    return FanDocumentReader().read(path)


def _lattice(document: FanDocument, names: Sequence[str]) -> ClassLattice:
    """Basis from --basis names, else every document class, else the kernel basis."""
    fan = document.fan
    if names:
        unknown = [n for n in names if n not in document.classes]
        if unknown:
            raise QueryError(f"unknown class name(s) {unknown}; the document defines {list(document.classes)}")
        return named_basis(fan, {n: document.classes[n] for n in names})
    if document.classes:
        return named_basis(fan, document.classes)
    return kernel_basis(fan)


def _fixed_point(document: FanDocument, divisor: int, choice: str):
    if choice == ALL_FIXED_POINTS:
        return ALL_FIXED_POINTS
    points = enumerate_fixed_points(document.fan, divisor)
    try:
        return points[int(choice)]
    except (ValueError, IndexError):
        raise QueryError(f"fixed point must be '{ALL_FIXED_POINTS}' or an index below {len(points)}, got '{choice}'")


def _plural(count: int, word: str) -> str:
    return f"{count} {word}" if count == 1 else f"{count} {word}s"


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    """Validation report, CY vector, compact divisors and polygon; 0 iff a valid smooth CY fan."""
    document = _read(args.path)
    fan = document.fan
    report = validate_fan(fan)
    for line in report.lines():
        print(line, file=out)
    if not report.is_valid:
        print("invalid fan", file=out)
        return settings.EXIT_DOMAIN_ERROR
    try:
        cy = cy_vector(fan)
    except NotCalabiYauError:
        print("valid fan; not Calabi-Yau", file=out)
        return settings.EXIT_DOMAIN_ERROR

    compact = sorted(compact_divisor_rays(fan))
    print(f"CY vector: {list(cy.nu)}", file=out)
    print(f"compact divisors: {compact}", file=out)
    for line in height_one_polygon(fan, cy).lines():
        print(line, file=out)
    for name, vector in document.classes.items():
        print(f"class {name}: {list(vector)}", file=out)
    document.checked()
    if not report.is_smooth:
        print(f"valid; CY; not smooth; {_plural(len(compact), 'compact divisor')}", file=out)
        return settings.EXIT_DOMAIN_ERROR
    print(f"valid; CY; {_plural(len(compact), 'compact divisor')}", file=out)
    return settings.EXIT_OK


def cmd_gw(args: argparse.Namespace, out: TextIO) -> int:
    """Genus-zero table of a fan, as CSV (or JSON for a .json output path)."""
    document = _read(args.path).checked()
    lattice = _lattice(document, args.basis)
    table = gw_table(document.fan, lattice, args.cap, args.threads)
    if table.unreachable:
        logger.warning("[VERTEX] %d reached classes are incomplete at cap %d and were left out",
                       len(table.unreachable), args.cap)
    if args.out:
        ResultWriter().write_table(table, args.out)
    else:
        out.write(table.to_csv())
    return settings.EXIT_OK


def cmd_open(args: argparse.Namespace, out: TextIO) -> int:
    """Open invariant per fixed point, the Fano advisory and the audit trace."""
    document = _read(args.path).checked()
    lattice = _lattice(document, args.basis)
    alpha = lattice.expand(args.alpha)
    fixed_point = _fixed_point(document, args.divisor, args.fixed_point)
    query = OpenInvariantQuery(document.fan, args.divisor, alpha, fixed_point)
    result = open_gw(query, args.cap, args.threads)

    for r in result.results:
        print(f"fixed point {list(r.fixed_point)}: {r.invariant}", file=out)
    if result.fano:
        print(f"advisory: compact divisor {args.divisor} is a Fano surface", file=out)
    else:
        print(f"advisory: compact divisor {args.divisor} is not a Fano surface; "
              f"the open/closed identification assumes one", file=out)
    if args.trace:
        ResultWriter().write_document(result.to_document(), args.trace)
    return settings.EXIT_OK


def cmd_pipeline(args: argparse.Namespace, out: TextIO) -> int:
    """Surgery trace only, as a JSON document."""
    document = _read(args.path).checked()
    fixed_point = _fixed_point(document, args.divisor, args.fixed_point)
    if fixed_point == ALL_FIXED_POINTS:
        raise QueryError("the pipeline command needs a single fixed point index")
    _, trace = open_invariant_surgery(document.fan, args.divisor, fixed_point)
    if args.out:
        ResultWriter().write_document(trace.to_document(), args.out)
    else:
        out.write(dumps(trace.to_document()))
    return settings.EXIT_OK


COMMANDS = {"check": cmd_check, "gw": cmd_gw, "open": cmd_open, "pipeline": cmd_pipeline}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toric-gw", description="Genus-zero open and closed invariants of toric Calabi-Yau threefolds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debugging")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="validate a fan document")
    check.add_argument("path")

    gw = sub.add_parser("gw", help="genus-zero Gopakumar-Vafa table")
    gw.add_argument("path")
    gw.add_argument("--basis", type=_names, default=(), help="comma-separated class names from the document")
    gw.add_argument("--cap", type=int, default=settings.DEFAULT_CAP, help="total box degree")
    gw.add_argument("--out", default=None, help="output file (.csv or .json); stdout when omitted")
    gw.add_argument("--threads", type=int, default=settings.DEFAULT_WORKERS)

    open_ = sub.add_parser("open", help="open invariant of a disc class")
    open_.add_argument("path")
    open_.add_argument("--divisor", type=int, required=True, help="compact divisor ray index")
    open_.add_argument("--alpha", type=_integers, required=True, help="class coordinates in the basis")
    open_.add_argument("--basis", type=_names, default=(), help="comma-separated class names from the document")
    open_.add_argument("--fixed-point", default=ALL_FIXED_POINTS, help=f"'{ALL_FIXED_POINTS}' or an index")
    open_.add_argument("--cap", type=int, default=None, help="box cap on W_0 (automatic when omitted)")
    open_.add_argument("--trace", default=None, help="audit trace output file; none written when omitted")
    open_.add_argument("--threads", type=int, default=settings.DEFAULT_WORKERS)

    pipeline = sub.add_parser("pipeline", help="print the surgery trace for one fixed point")
    pipeline.add_argument("path")
    pipeline.add_argument("--divisor", type=int, required=True)
    pipeline.add_argument("--fixed-point", default="0")
    pipeline.add_argument("--out", default=None)
    return parser


def main(argv: Optional[List[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    """
    Run one command.

    Returns:
        Exit code: 0 success, 1 domain error, 2 parse or IO error
    """
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        configured = settings.log_level()
        level = {0: configured, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
        configure_logging(min(level, configured))
        return COMMANDS[args.command](args, out)
    except Exception as e:
        return ErrorHandler(err).handle_error(e, f"command '{args.command}' on {args.path}")
