"""Residuated frames W_{A,B} and their Galois algebras.

W is the submonoid generated by B, W′ = W × B × W and x N (y, b, z) holds
when yxz ≤ b. Closed sets are intersections of the principal sets
{w′}^◁, which keeps the enumeration bounded by |W′|.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from reslat.exceptions import ClosureViolation, EmbeddingFailure
from reslat.models import (
    EmbeddingInstance,
    EmbeddingReport,
    FinRL,
    Frame,
    GaloisAlgebra,
    IdentitySpec,
    Operation,
    PreservationEntry,
    PreservationReport,
)
from reslat.services import finalg
from reslat.services.identities import check_identity

logger = logging.getLogger(__name__)


def generate_submonoid(alg: FinRL, generators: Iterable[int]) -> Tuple[int, ...]:
    """Least multiplicatively closed superset of the generators and 1."""
    found = set(generators) | {alg.unit}
    frontier = list(found)
    while frontier:
        fresh = []
        for x in list(found):
            for y in frontier:
                for value in (alg.mul[x][y], alg.mul[y][x]):
                    if value not in found:
                        found.add(value)
                        fresh.append(value)
        frontier = fresh
    return tuple(sorted(found))


def with_constants(alg: FinRL, subset: Iterable[int]) -> Tuple[int, ...]:
    """The subset together with ⊥, ⊤ and 1."""
    extra = {alg.unit} | {c for c in (alg.bot, alg.top) if c is not None}
    return tuple(sorted(set(subset) | extra))


def build_frame(alg: FinRL, generators: Sequence[int]) -> Frame:
    b = tuple(sorted(set(generators)))
    w = generate_submonoid(alg, b)
    triples = [(y, g, z) for y in w for g in b for z in w]
    relation = []
    for y, g, z in triples:
        bits = 0
        for i, x in enumerate(w):
            if alg.le(alg.mul[alg.mul[y][x]][z], g):
                bits |= 1 << i
        relation.append(bits)
    logger.debug(f"Frame: |B|={len(b)} |W|={len(w)} |W'|={len(triples)}")
    return Frame(algebra=alg, generators=b, carrier=w, triples=tuple(triples), relation=tuple(relation))


def galois_closure(frame: Frame, bits: int) -> int:
    """γ_N(X) = (X^▷)^◁."""
    closed = frame.full
    for rel in frame.relation:
        if bits & ~rel == 0:
            closed &= rel
    return closed


def _product(frame: Frame, x_bits: int, y_bits: int) -> int:
    mul = frame.algebra.mul
    bits = 0
    for x in frame.members(x_bits):
        for y in frame.members(y_bits):
            bits |= 1 << frame.position(mul[x][y])
    return bits


def _division(frame: Frame, x_bits: int, y_bits: int, left: bool) -> int:
    """X\\Y = {z : Xz ⊆ Y} when left, Y/X = {z : zX ⊆ Y} otherwise."""
    bits = 0
    for i, z in enumerate(frame.carrier):
        single = 1 << i
        image = _product(frame, x_bits, single) if left else _product(frame, single, x_bits)
        if image & ~y_bits == 0:
            bits |= single
    return bits


def _set_name(frame: Frame, bits: int) -> str:
    return "{" + ",".join(frame.algebra.label(x) for x in frame.members(bits)) + "}"


def build_galois_algebra(frame: Frame) -> GaloisAlgebra:
    """W⁺ with ∩, ∪_γ, ·_γ and the two divisions."""
    closed = {frame.full}
    for rel in frame.relation:
        closed |= {c & rel for c in closed}
    ordered = sorted(closed, key=lambda c: (bin(c).count("1"), frame.members(c)))
    index = {c: i for i, c in enumerate(ordered)}
    n = len(ordered)
    logger.info(f"Galois algebra has {n} closed sets")

    def lookup(bits: int, what: str) -> int:
        if bits not in index:
            raise ClosureViolation(f"{what} produced a set that is not closed", witness=frame.members(bits))
        return index[bits]

    leq = [[c & ~d == 0 for d in ordered] for c in ordered]
    mul = [[lookup(galois_closure(frame, _product(frame, c, d)), "product") for d in ordered] for c in ordered]
    ldiv = [[lookup(_division(frame, c, d, True), "left division") for d in ordered] for c in ordered]
    rdiv = [[lookup(_division(frame, c, d, False), "right division") for c in ordered] for d in ordered]
    unit = lookup(galois_closure(frame, 1 << frame.position(frame.algebra.unit)), "unit")
    alg = finalg.build_algebra(
        leq, mul, unit, names=[_set_name(frame, c) for c in ordered], ldiv=ldiv, rdiv=rdiv
    )
    for i, c in enumerate(ordered):
        for j, d in enumerate(ordered):
            if ordered[alg.join[i][j]] != galois_closure(frame, c | d):
                raise ClosureViolation("join is not the closure of the union", witness=(i, j))
    return GaloisAlgebra(frame=frame, closed_sets=tuple(ordered), algebra=alg)


def check_fep_embedding(alg: FinRL, subset: Iterable[int], strict: bool = True) -> EmbeddingReport:
    """Map the partial subalgebra on B into W⁺ by b ↦ γ({b}) and check every
    defined operation instance.

    ⊥, ⊤ and 1 are added to B. With ``strict`` a failed check raises
    EmbeddingFailure.
    """
    b = with_constants(alg, subset)
    frame = build_frame(alg, b)
    galois = build_galois_algebra(frame)
    mapping = {x: galois.index_of(galois_closure(frame, 1 << frame.position(x))) for x in b}
    partial = finalg.induced_partial(alg, b)

    instances: List[EmbeddingInstance] = []
    for op in Operation:
        table = galois.algebra.table(op)
        for x, y, v in partial.defined_instances(op):
            preserved = table[mapping[x]][mapping[y]] == mapping[v]
            instances.append(EmbeddingInstance(operation=op, x=x, y=y, value=v, preserved=preserved))
    injective = len(set(mapping.values())) == len(mapping)
    if mapping[alg.unit] != galois.algebra.unit:
        instances.append(
            EmbeddingInstance(operation=Operation.MUL, x=alg.unit, y=alg.unit, value=alg.unit, preserved=False)
        )
    report = EmbeddingReport(
        subset=b, mapping=mapping, injective=injective, instances=instances, galois_size=galois.algebra.size
    )
    if strict and not report.ok:
        failure = report.first_failure()
        witness: Optional[Tuple] = (failure.operation.value, failure.x, failure.y) if failure else None
        raise EmbeddingFailure("b ↦ γ({b}) is not an embedding", witness=witness)
    return report


def check_preservation(
    alg: FinRL, subset: Iterable[int], identities: Sequence[IdentitySpec]
) -> PreservationReport:
    """For each identity holding in the algebra, check it in W⁺."""
    entries: List[PreservationEntry] = []
    if not identities:
        return PreservationReport(entries=entries)
    galois = build_galois_algebra(build_frame(alg, with_constants(alg, subset)))
    for spec in identities:
        source = check_identity(alg, spec)
        if not source.holds:
            entries.append(PreservationEntry(identity=spec, holds_in_source=False, witness=source.witness))
            continue
        target = check_identity(galois.algebra, spec)
        entries.append(
            PreservationEntry(
                identity=spec, holds_in_source=True, holds_in_galois=target.holds, witness=target.witness
            )
        )
    return PreservationReport(entries=entries)
