"""Command-line entry point.

Usage:
    python -m reslat [global flags] <command> [options]

Examples:
    python -m reslat make cyclic --r 2 --s 2 --orient up | python -m reslat check -
    python -m reslat enumerate --x-size 1 --count-only
    python -m reslat variety exp "(1; p2:[2,1]; p3:[3,1,1]; p7:[2,1,1])"
"""
import argparse
import logging
import sys
from typing import List, Optional

import structlog
from pydantic import ValidationError

from reslat import __version__
from reslat.config import Settings
from reslat.exceptions import (
    BadPartition,
    FrlSyntaxError,
    InfiniteGroup,
    InvalidFactor,
    InvalidParameters,
    NoMaximum,
    NotALattice,
    NotAPoset,
    NotAssociative,
    NotIdentity,
    NotOrderPreserving,
    NotTopCancellative,
    ReslatError,
    SemanticError,
    SignatureSyntaxError,
    ZeroNotAbsorbing,
)
from reslat.models import ConjugateScheme, Orientation, OutputFormat, ZKind

from .commands import EXIT_FAILED, EXIT_MALFORMED, HANDLERS, CommandContext, identity_spec, int_list, monoid_rows

logger = logging.getLogger(__name__)

# Errors that describe the input rather than the mathematics.
_MALFORMED = (
    FrlSyntaxError,
    SemanticError,
    SignatureSyntaxError,
    InvalidParameters,
    InvalidFactor,
    BadPartition,
    InfiniteGroup,
    NotAPoset,
    NotALattice,
    NotAssociative,
    NotIdentity,
    NotOrderPreserving,
    NoMaximum,
    ZeroNotAbsorbing,
    NotTopCancellative,
)


def configure_logging(level: str) -> None:
    """Send key=value log lines to stderr; stdout carries results only."""
    formatter = structlog.stdlib.ProcessorFormatter(
        processor=structlog.processors.KeyValueRenderer(key_order=["timestamp", "level", "logger", "event"]),
        foreign_pre_chain=[
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
        ],
    )
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(level)


def _file_command(sub, name: str, help_text: str) -> argparse.ArgumentParser:
    parser = sub.add_parser(name, help=help_text)
    parser.add_argument("file", help='algebra file, or "-" for standard input')
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reslat",
        description="Finite residuated lattice workbench",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("Examples:", 1)[1],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.FRL.value)
    parser.add_argument("--out", help="write output to this file instead of standard output")
    parser.add_argument("--jobs", type=int, help="worker threads for enumeration")
    parser.add_argument("--cap", type=int, help="stop enumerating beyond this many algebras")
    parser.add_argument("--depth", type=int, help="conjugate depth for equation schemes")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING, ERROR or CRITICAL")
    parser.add_argument("-v", "--verbose", action="store_true", help="shortcut for --log-level DEBUG")

    sub = parser.add_subparsers(dest="command", required=True)

    _file_command(sub, "check", "validate an algebra file and print its law report")

    make = sub.add_parser("make", help="emit a constructed algebra")
    constructions = make.add_subparsers(dest="construction", required=True)
    mx = constructions.add_parser("mx", help="M_{Z_n} on the lattice M_X with |X| = n")
    mx.add_argument("--x-size", type=int, required=True)
    rab = constructions.add_parser("rab", help="R_{A,B} from a ⊤-cancellative monoid and a zero kind")
    rab.add_argument("--factors", type=int_list, help="A is this abelian group with ⊤ adjoined")
    rab.add_argument("--monoid", type=monoid_rows, help='explicit Cayley table of A, rows separated by ";"')
    rab.add_argument("--unit", type=int)
    rab.add_argument("--zero", type=int)
    rab.add_argument("--kind", type=int, choices=[k.value for k in ZKind], default=0)
    mg = constructions.add_parser("mg", help="M_G for an abelian group given by invariant factors")
    mg.add_argument("--factors", type=int_list, required=True)
    cyclic = constructions.add_parser("cyclic", help="compact URL on a cyclic monoid of index r and period s")
    cyclic.add_argument("--r", type=int, required=True)
    cyclic.add_argument("--s", type=int, required=True)
    cyclic.add_argument("--orient", choices=[o.value for o in Orientation], default=Orientation.UP.value)
    cocycle = constructions.add_parser("cocycle", help="trivial-data extension of a residuated chain by Z_n")
    cocycle.add_argument("--chain", required=True, help="residuated chain file")
    cocycle.add_argument("--k-order", type=int, required=True)

    _file_command(sub, "decompose", "split an algebra on M_X into A and B")
    _file_command(sub, "flags", "unilinearity, height, width and compactness predicates")
    _file_command(sub, "discriminator", "test the discriminator term")
    _file_command(sub, "quotient", "comparability classes of a compact URL")
    _file_command(sub, "reconstruct", "recover cocycle data from a compact URL")
    equations = _file_command(sub, "equations", "check a conjugate equation scheme up to --depth")
    equations.add_argument("--scheme", choices=[s.value for s in ConjugateScheme], default=ConjugateScheme.SRL.value)

    enum = sub.add_parser("enumerate", help="every residuated lattice on M_X, up to isomorphism")
    enum.add_argument("--x-size", type=int, required=True)
    enum.add_argument("--count-only", action="store_true")

    fep = sub.add_parser("fep", help="Galois algebra of a finite partial subalgebra and its embedding")
    fep.add_argument("--algebra", required=True, help="algebra file")
    fep.add_argument("--subset", required=True, help="comma-separated element names or indices of B")
    fep.add_argument(
        "--identity",
        type=identity_spec,
        action="append",
        default=[],
        help="knotted:m,n, weak:a0,a1,... or commutative; checked for preservation",
    )

    variety = sub.add_parser("variety", help="group signatures and downsets")
    actions = variety.add_subparsers(dest="action", required=True)
    for action, help_text in (
        ("exp", "largest exponent"),
        ("primes", "the primes p (not their indices) whose p-part is nontrivial"),
        ("leq", "pointwise order of two signatures"),
        ("join", "pointwise join"),
        ("meet", "pointwise meet"),
    ):
        actions.add_parser(action, help=help_text).add_argument("signatures", nargs="+")
    algebra = actions.add_parser("algebra", help="R_{A,B} for the finite group of a signature")
    algebra.add_argument("signatures", nargs=1)
    algebra.add_argument("--kind", type=int, choices=[k.value for k in ZKind], default=0)
    zclosed = actions.add_parser("zclosed", help="Z-closedness of a downset, or of the four fibres D0..D3")
    zclosed.add_argument("downsets", nargs="+")
    return parser


def _settings(args: argparse.Namespace) -> Settings:
    overrides = {
        "CONJUGATE_DEPTH": args.depth,
        "ENUMERATION_JOBS": args.jobs,
        "ENUMERATION_CAP": args.cap,
        "LOG_LEVEL": "DEBUG" if args.verbose else args.log_level,
    }
    return Settings(**{key: value for key, value in overrides.items() if value is not None})


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _settings(args)
    except ValidationError as e:
        parser.error(str(e.errors()[0]["msg"]))
    configure_logging(settings.LOG_LEVEL)
    logger.debug(f"Running {args.command} with {settings.model_dump()}")

    ctx = CommandContext(settings, fmt=OutputFormat(args.format), out=args.out)
    try:
        return HANDLERS[args.command](ctx, args)
    except _MALFORMED as e:
        logger.error(f"Malformed input: {e}")
        return EXIT_MALFORMED
    except ValidationError as e:
        logger.error(f"Malformed input: {e.errors()[0]['msg']}")
        return EXIT_MALFORMED
    except OSError as e:
        logger.error(f"Cannot read input: {e}")
        return EXIT_MALFORMED
    except ReslatError as e:
        detail = f" (law {e.law}, witness {e.witness})" if e.law else ""
        logger.error(f"{type(e).__name__}: {e}{detail}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
