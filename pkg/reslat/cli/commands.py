"""Subcommand handlers.

Each handler takes the command context and the parsed arguments and
returns the process exit code.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from reslat.config import Settings
from reslat.exceptions import InvalidParameters, SemanticError
from reslat.models import (
    COMMUTATIVITY,
    FinRL,
    FiniteMonoid,
    IdentitySpec,
    LawReport,
    Orientation,
    OutputFormat,
    PFDownset,
    ZKind,
    knotted,
    weak_commutativity,
)
from reslat.services import analyze, construct, downsets, enumerate as enumeration, finalg, frames, quotient
from reslat.services import identities, signatures
from reslat.services.cocycle import bounded_product, cyclic_group
from reslat.storage import STDIO, get_codec, load_algebra, render_record, render_value

from .syntax import format_signature, parse_downset, parse_signature

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MALFORMED = 2

Handler = Callable[["CommandContext", argparse.Namespace], int]


class CommandContext:
    """Settings and output channel shared by the handlers."""

    def __init__(self, settings: Settings, fmt: OutputFormat = OutputFormat.FRL, out: Optional[str] = None):
        self.settings = settings
        self.fmt = OutputFormat(fmt)
        self.out = out

    @property
    def codec(self):
        return get_codec(self.fmt)

    def write(self, text: str) -> None:
        if self.out is None or self.out == STDIO:
            sys.stdout.write(text)
            return
        target = Path(self.out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {target}")

    def emit_algebra(self, alg: FinRL) -> None:
        self.write(self.codec.render(alg))

    def emit_algebras(self, algebras: Sequence[FinRL]) -> None:
        if self.fmt is OutputFormat.JSON:
            body = ",\n".join(self.codec.render(alg).rstrip("\n") for alg in algebras)
            self.write("[\n" + body + "\n]\n" if algebras else "[]\n")
        else:
            self.write("".join(self.codec.render(alg) for alg in algebras))

    def emit_record(self, record: Dict[str, Any]) -> None:
        self.write(render_record(record, self.fmt))

    def emit_value(self, key: str, value: Any) -> None:
        self.write(render_value(key, value, self.fmt))


# Argument types

def int_list(text: str) -> List[int]:
    """Comma-separated integers, e.g. ``2,2``."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def monoid_rows(text: str) -> List[List[int]]:
    """Cayley table rows separated by ";" with space- or comma-separated entries."""
    try:
        return [[int(v) for v in row.replace(",", " ").split()] for row in text.split(";") if row.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed table {text!r}") from None


def identity_spec(text: str) -> IdentitySpec:
    """``knotted:m,n``, ``weak:a0,a1,…`` or ``commutative``."""
    name, _, params = text.partition(":")
    if name == "commutative":
        return COMMUTATIVITY
    values = int_list(params)
    if name == "knotted" and len(values) == 2:
        return knotted(*values)
    if name == "weak" and values:
        return weak_commutativity(values)
    raise argparse.ArgumentTypeError(f"unknown identity {text!r}")


def _law_record(report: LawReport) -> Dict[str, Any]:
    record: Dict[str, Any] = {"ok": report.ok}
    for check in report.checks:
        record[check.name] = "pass" if check.passed else list(check.witness or ())
    return record


# Handlers

def _handle_check(ctx: CommandContext, args: argparse.Namespace) -> int:
    try:
        alg = load_algebra(args.file)
    except SemanticError as e:
        logger.warning(f"{args.file}: {e}")
        ctx.emit_record({"ok": False, "law": e.law, "witness": list(e.witness) if e.witness else None})
        return EXIT_FAILED
    report = finalg.check_residuated_lattice(alg)
    ctx.emit_record(_law_record(report))
    return EXIT_OK if report.ok else EXIT_FAILED


def _make_mx(args: argparse.Namespace) -> FinRL:
    if args.x_size == 0:
        return construct.make_rab(construct.zero_cancellative_monoids(1)[0], ZKind.NONE)
    if args.x_size == 1:
        return construct.make_mg([])
    return construct.make_mg([args.x_size])


def _make_rab(args: argparse.Namespace) -> FinRL:
    if args.monoid is not None:
        if args.unit is None or args.zero is None:
            raise InvalidParameters("--monoid needs --unit and --zero")
        rows = args.monoid
        monoid = FiniteMonoid(size=len(rows), mul=tuple(map(tuple, rows)), unit=args.unit, zero=args.zero)
    else:
        monoid = construct.abelian_group_monoid(args.factors or [])
    return construct.make_rab(monoid, ZKind(args.kind))


def _make_cocycle(args: argparse.Namespace) -> FinRL:
    return bounded_product(load_algebra(args.chain), cyclic_group(args.k_order))


_CONSTRUCTIONS: Dict[str, Callable[[argparse.Namespace], FinRL]] = {
    "mx": _make_mx,
    "rab": _make_rab,
    "mg": lambda args: construct.make_mg(args.factors),
    "cyclic": lambda args: construct.make_cyclic_url(args.r, args.s, Orientation(args.orient)),
    "cocycle": _make_cocycle,
}


def _handle_make(ctx: CommandContext, args: argparse.Namespace) -> int:
    alg = _CONSTRUCTIONS[args.construction](args)
    ctx.emit_algebra(alg)
    return EXIT_OK


def _handle_decompose(ctx: CommandContext, args: argparse.Namespace) -> int:
    ctx.emit_record(analyze.decompose_mx(load_algebra(args.file)).to_dict())
    return EXIT_OK


def _handle_flags(ctx: CommandContext, args: argparse.Namespace) -> int:
    ctx.emit_record(analyze.url_flags(load_algebra(args.file)).to_dict())
    return EXIT_OK


def _handle_discriminator(ctx: CommandContext, args: argparse.Namespace) -> int:
    witness = analyze.discriminator_witness(load_algebra(args.file))
    ctx.emit_record({"discriminator": witness is None, "witness": list(witness) if witness else None})
    return EXIT_OK


def _handle_equations(ctx: CommandContext, args: argparse.Namespace) -> int:
    alg = load_algebra(args.file)
    result = identities.check_conjugate_equations(alg, args.scheme, depth=ctx.settings.CONJUGATE_DEPTH)
    ctx.emit_record(
        {"holds": result.holds, "equation": result.equation, "witness": list(result.witness or ()) or None}
    )
    return EXIT_OK if result.holds else EXIT_FAILED


def _handle_quotient(ctx: CommandContext, args: argparse.Namespace) -> int:
    ctx.emit_record(quotient.comparability_quotient(load_algebra(args.file)).to_dict())
    return EXIT_OK


def _handle_reconstruct(ctx: CommandContext, args: argparse.Namespace) -> int:
    result = quotient.reconstruct_cocycle(load_algebra(args.file))
    data = result.data
    ctx.emit_record(
        {
            "h_size": data.a.size,
            "k_size": data.k.size,
            "trivial": data.is_trivial,
            "phi": [list(row) for row in data.phi],
            "f": [list(row) for row in data.f],
            "mapping": list(result.mapping),
        }
    )
    return EXIT_OK


def _handle_enumerate(ctx: CommandContext, args: argparse.Namespace) -> int:
    found = enumeration.enumerate_mx(
        args.x_size, cap=ctx.settings.ENUMERATION_CAP, jobs=ctx.settings.ENUMERATION_JOBS
    )
    if args.count_only:
        ctx.emit_value("count", len(found))
    else:
        ctx.emit_algebras(found)
    return EXIT_OK


def _handle_fep(ctx: CommandContext, args: argparse.Namespace) -> int:
    alg = load_algebra(args.algebra)
    chosen = [finalg.element_index(alg, token.strip()) for token in args.subset.split(",") if token.strip()]
    b = frames.with_constants(alg, chosen)
    frame = frames.build_frame(alg, b)
    report = frames.check_fep_embedding(alg, b, strict=False)
    record: Dict[str, Any] = {"w_size": frame.width, "w_prime_size": len(frame.triples)}
    record.update(report.to_dict())
    failure = report.first_failure()
    if failure is not None:
        record["failure"] = [failure.operation.value, failure.x, failure.y]
    ok = report.ok
    if args.identity:
        preservation = frames.check_preservation(alg, b, args.identity)
        for i, entry in enumerate(preservation.entries, start=1):
            record[f"identity_{i}"] = entry.identity.describe()
            record[f"preserved_{i}"] = entry.preserved
        ok = ok and preservation.ok
    ctx.emit_record(record)
    return EXIT_OK if ok else EXIT_FAILED


def _variety_zclosed(ctx: CommandContext, args: argparse.Namespace) -> int:
    described = [parse_downset(text) for text in args.downsets]
    if len(described) == 4:
        d0, d1, d2, d3 = described
        ctx.emit_record({"closed": downsets.pf_is_z_closed(PFDownset(d0=d0, d1=d1, d2=d2, d3=d3))})
        return EXIT_OK
    if len(described) != 1:
        raise InvalidParameters("zclosed takes one downset or the four fibres D0 D1 D2 D3")
    result = downsets.is_z_closed(described[0])
    ctx.emit_record(
        {
            "closed": result.closed,
            "violating": format_signature(result.violating) if result.violating else None,
            "missing": format_signature(result.missing) if result.missing else None,
        }
    )
    return EXIT_OK


def _handle_variety(ctx: CommandContext, args: argparse.Namespace) -> int:
    action = args.action
    if action == "zclosed":
        return _variety_zclosed(ctx, args)
    sigs = [parse_signature(text) for text in args.signatures]
    expected = 1 if action in ("exp", "primes", "algebra") else 2
    if len(sigs) != expected:
        raise InvalidParameters(f"{action} takes {expected} signature(s), got {len(sigs)}")
    if action == "exp":
        ctx.emit_value("exp", signatures.exp_of(sigs[0]))
    elif action == "primes":
        ctx.emit_value("primes", [signatures.prime_at(n) for n in signatures.primes_of(sigs[0])])
    elif action == "leq":
        ctx.emit_value("leq", signatures.sig_leq(*sigs))
    elif action == "join":
        ctx.emit_value("join", format_signature(signatures.sig_join(*sigs)))
    elif action == "meet":
        ctx.emit_value("meet", format_signature(signatures.sig_meet(*sigs)))
    else:
        ctx.emit_algebra(signatures.sig_to_algebra(sigs[0], ZKind(args.kind)))
    return EXIT_OK


HANDLERS: Dict[str, Handler] = {
    "check": _handle_check,
    "make": _handle_make,
    "decompose": _handle_decompose,
    "flags": _handle_flags,
    "discriminator": _handle_discriminator,
    "equations": _handle_equations,
    "quotient": _handle_quotient,
    "reconstruct": _handle_reconstruct,
    "enumerate": _handle_enumerate,
    "fep": _handle_fep,
    "variety": _handle_variety,
}
