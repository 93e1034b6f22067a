"""Comparability quotient of a compact URL and reconstruction of its cocycle data."""
import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

from reslat.exceptions import ClassificationViolation, CocycleInvalid, HypothesesFail, NotCompact
from reslat.models import ChainMonoid, CocycleData, FinRL, FiniteMonoid, QuotientResult, Reconstruction
from reslat.services.analyze import is_compact_url
from reslat.services.cocycle import cocycle_element_index, is_cancellative, make_cocycle_extension
from reslat.services.isomorphism import verify_mapping

logger = logging.getLogger(__name__)


def _classes(alg: FinRL) -> List[Tuple[int, ...]]:
    middle = [x for x in alg.elements if x not in (alg.bot, alg.top)]
    graph = nx.Graph()
    graph.add_nodes_from(middle)
    graph.add_edges_from((x, y) for x in middle for y in middle if x < y and (alg.le(x, y) or alg.le(y, x)))

    def chain_order(members) -> Tuple[int, ...]:
        return tuple(sorted(members, key=lambda x: sum(alg.le(y, x) for y in members)))

    components = [chain_order(c) for c in nx.connected_components(graph)]
    h = next(c for c in components if alg.unit in c)
    rest = sorted((c for c in components if c is not h), key=min)
    return [h] + rest


def _injective_on(alg: FinRL, r: int, h: Tuple[int, ...]) -> bool:
    left = {alg.mul[r][x] for x in h}
    right = {alg.mul[x][r] for x in h}
    return len(left) == len(h) and len(right) == len(h)


def comparability_quotient(alg: FinRL) -> QuotientResult:
    """Quotient of M = R ∖ {⊥, ⊤} by comparability.

    Classes are the maximal chains of M, listed in ascending order; class 0
    is H, the class of the unit. Each other class has as representative its
    least element (by index) whose left and right multiplications are
    injective on H.
    """
    if not is_compact_url(alg):
        raise NotCompact("algebra is not a compact unilinear residuated lattice")
    if alg.unit in (alg.bot, alg.top):
        raise NotCompact("the unit is a bound, so M has no class of 1", witness=(alg.unit,))

    classes = _classes(alg)
    index: Dict[int, int] = {x: i for i, members in enumerate(classes) for x in members}
    n = len(classes)
    table = [[index[alg.mul[classes[i][0]][classes[j][0]]] for j in range(n)] for i in range(n)]
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            for x in ci:
                for y in cj:
                    if index[alg.mul[x][y]] != table[i][j]:
                        raise ClassificationViolation(
                            "comparability is not a congruence", witness=(x, y), law="congruence"
                        )
    k = FiniteMonoid(
        size=n,
        mul=tuple(map(tuple, table)),
        unit=0,
        names=tuple(f"[{alg.label(c[0])}]" for c in classes),
    )

    h = classes[0]
    h_set = set(h)
    admissible = all(
        {alg.mul[x][y] for y in h} == set(classes[index[x]]) == {alg.mul[y][x] for y in h}
        for x in index
    )
    picks: List[Optional[int]] = [alg.unit]
    for members in classes[1:]:
        picks.append(next((r for r in sorted(members) if _injective_on(alg, r, h)), None))
    k_cancellative = all(r is not None for r in picks)
    representatives = tuple(picks) if k_cancellative else None
    span = k_cancellative and all(len(c) == len(h_set) for c in classes)
    logger.debug(f"Quotient: {n} classes, |H|={len(h)}, representatives={representatives}")
    return QuotientResult(
        classes=tuple(classes),
        k=k,
        cancellative=is_cancellative(k),
        admissible=admissible,
        k_cancellative=k_cancellative,
        representatives_span=span,
        representatives=representatives,
    )


def reconstruct_cocycle(alg: FinRL) -> Reconstruction:
    """Recover (H, K, φ, f) with R ≅ R_{φ,f}.

    With representatives k̄, every element of class k is h·k̄ for a unique
    h ∈ H; φ_k(h) is the h' with k̄·h = h'·k̄ and f(k1, k2) is the inverse of
    the g with k̄1·k̄2 = g·(k1k2)‾.
    """
    q = comparability_quotient(alg)
    if not q.cancellative:
        raise HypothesesFail("the quotient monoid is not cancellative", law="cancellative")
    if not q.k_cancellative:
        raise HypothesesFail("no K-cancellative selection of representatives", law="k_cancellative")
    if not q.representatives_span:
        raise HypothesesFail("classes are not translates of H", law="admissible")

    h = q.h
    pos = {x: i for i, x in enumerate(h)}
    reps = q.representatives
    a = ChainMonoid(
        size=len(h),
        rank=tuple(range(len(h))),
        mul=tuple(tuple(pos[alg.mul[x][y]] for y in h) for x in h),
        unit=pos[alg.unit],
        names=tuple(alg.label(x) for x in h),
    )

    # right_inverse[k][x] = position of the h with h·k̄ = x
    right_inverse = [{alg.mul[y][reps[k]]: pos[y] for y in h} for k in range(q.k.size)]
    phi = tuple(
        tuple(right_inverse[k][alg.mul[reps[k]][y]] for y in h) for k in range(q.k.size)
    )

    f = []
    for k1 in range(q.k.size):
        row = []
        for k2 in range(q.k.size):
            product = alg.mul[reps[k1]][reps[k2]]
            g = right_inverse[q.k.mul[k1][k2]][product]
            inverse = a.inverse(g)
            if inverse is None:
                raise HypothesesFail(
                    f"k̄1·k̄2 = g·(k1k2)‾ with g = {alg.label(h[g])} not invertible",
                    witness=(k1, k2),
                    law="cocycle",
                )
            row.append(inverse)
        f.append(tuple(row))

    data = CocycleData(k=q.k, a=a, phi=phi, f=tuple(f))
    try:
        rebuilt = make_cocycle_extension(data)
    except CocycleInvalid as e:
        raise ClassificationViolation(f"recovered data fails {e.law}", witness=e.witness, law=e.law) from e

    mapping = [0] * alg.size
    for x in alg.elements:
        if x == alg.bot:
            mapping[x] = rebuilt.bot
        elif x == alg.top:
            mapping[x] = rebuilt.top
        else:
            k = q.class_of(x)
            mapping[x] = cocycle_element_index(data, right_inverse[k][x], k)
    if not verify_mapping(alg, rebuilt, mapping):
        raise ClassificationViolation("ψ is not an isomorphism onto R_{φ,f}", law="isomorphism")
    logger.info(f"Reconstructed cocycle data with |H|={a.size}, |K|={q.k.size}")
    return Reconstruction(data=data, algebra=rebuilt, mapping=tuple(mapping))
