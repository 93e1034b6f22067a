"""Structure theory of residuated lattices on M_X and of unilinear algebras.

Covers the U/Z split of an algebra on M_X and its inverse, the order
predicates of unilinear residuated lattices, the discriminator term of
bounded M-algebras and the search over orders of cyclic monoids.
"""
import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from reslat.exceptions import ClassificationViolation, NotBounded, NotMxShaped, ReslatError
from reslat.models import (
    BOT,
    ONE,
    ABDecomposition,
    FinRL,
    FiniteMonoid,
    Orientation,
    Term,
    URLFlags,
    UZSplit,
    ZKind,
    var,
)
from reslat.services import finalg
from reslat.services.construct import check_zero_cancellative, cyclic_index, make_cyclic_url

logger = logging.getLogger(__name__)


def _middle(alg: FinRL) -> List[int]:
    return [x for x in alg.elements if x not in (alg.bot, alg.top)]


def _incomparable(alg: FinRL, x: int, y: int) -> bool:
    return not (alg.le(x, y) or alg.le(y, x))


def _incomparable_pairs(alg: FinRL) -> Iterator[Tuple[int, int]]:
    for x, y in itertools.combinations(alg.elements, 2):
        if _incomparable(alg, x, y):
            yield x, y


def is_mx_shaped(alg: FinRL) -> bool:
    """True when the lattice is ⊥ < X < ⊤ with X an antichain (|X| may be 0)."""
    if not alg.is_bounded or alg.bot == alg.top:
        return False
    middle = _middle(alg)
    return all(_incomparable(alg, x, y) for x, y in itertools.combinations(middle, 2))


def _require_mx(alg: FinRL) -> None:
    if not is_mx_shaped(alg):
        raise NotMxShaped("lattice reduct is not of the form ⊥ < X < ⊤")


def _zero_kind(alg: FinRL, z: Sequence[int]) -> ZKind:
    bot, mul = alg.bot, alg.mul
    if not z:
        return ZKind.NONE
    if len(z) == 1:
        b = z[0]
        if mul[b][b] == bot:
            return ZKind.NILPOTENT
        if mul[b][b] == b:
            return ZKind.IDEMPOTENT
    elif len(z) == 2:
        b1, b2 = z
        if mul[b1][b1] == b1 and mul[b2][b2] == b2 and mul[b1][b2] == bot and mul[b2][b1] == bot:
            return ZKind.BOOLEAN
    raise ClassificationViolation(f"Z ∪ {{⊥}} with Z = {list(z)} matches no zero kind", witness=tuple(z))


def compute_uz(alg: FinRL) -> UZSplit:
    """Split the middle of an algebra on M_X into U (x⊤ = ⊤) and Z (x⊤ = x)."""
    _require_mx(alg)
    top, mul = alg.top, alg.mul
    u, z = [], []
    for x in _middle(alg):
        if mul[x][top] == top:
            u.append(x)
        elif mul[x][top] == x:
            z.append(x)
        else:
            raise ClassificationViolation(f"x⊤ is neither x nor ⊤ for x = {x}", witness=(x,), law="uz")

    central = next((x for x in alg.elements if mul[x][top] != mul[top][x]), None)
    if central is not None:
        raise ClassificationViolation("⊤ is not central", witness=(central,), law="top_central")

    a_part = u + [top]
    for x, y in itertools.product(a_part, repeat=2):
        if mul[x][y] not in a_part:
            raise ClassificationViolation("U ∪ {⊤} is not a submonoid", witness=(x, y), law="u_submonoid")
    for a, b in itertools.product(u, z):
        if mul[a][b] != b or mul[b][a] != b:
            raise ClassificationViolation("U does not act trivially on Z", witness=(a, b), law="u_acts_on_z")
    kind = _zero_kind(alg, z)
    logger.debug(f"U/Z split: U={u} Z={z} kind={int(kind)}")
    return UZSplit(u=frozenset(u), z=frozenset(z), kind=kind)


def decompose_mx(alg: FinRL) -> ABDecomposition:
    """Recover (A, kind) with make_rab(A, kind) isomorphic to the algebra."""
    split = compute_uz(alg)
    a_witness = tuple(sorted(split.u)) + (alg.top,)
    position = {x: i for i, x in enumerate(a_witness)}
    if alg.unit not in position:
        raise ClassificationViolation("the unit lies in Z", witness=(alg.unit,), law="unit")
    mul = tuple(tuple(position[alg.mul[x][y]] for y in a_witness) for x in a_witness)
    a = FiniteMonoid(
        size=len(a_witness),
        mul=mul,
        unit=position[alg.unit],
        zero=position[alg.top],
        names=tuple(alg.label(x) for x in a_witness),
    )
    if not check_zero_cancellative(a):
        raise ClassificationViolation("U ∪ {⊤} is not ⊤-cancellative", law="zero_cancellative")
    return ABDecomposition(a=a, kind=split.kind, a_witness=a_witness, b_witness=tuple(sorted(split.z)))


def _strict_order(alg: FinRL) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(alg.elements)
    graph.add_edges_from((x, y) for x in alg.elements for y in alg.elements if x != y and alg.le(x, y))
    return graph


def height(alg: FinRL) -> int:
    """Number of elements of a longest chain."""
    return nx.dag_longest_path_length(_strict_order(alg)) + 1


def width(alg: FinRL) -> int:
    """Size of a largest antichain, via a minimum chain cover."""
    graph = nx.Graph()
    left = [("l", x) for x in alg.elements]
    graph.add_nodes_from(left)
    graph.add_nodes_from(("r", x) for x in alg.elements)
    graph.add_edges_from((("l", x), ("r", y)) for x, y in _strict_order(alg).edges)
    matching = nx.bipartite.maximum_matching(graph, top_nodes=left)
    return alg.size - len(matching) // 2


def url_flags(alg: FinRL) -> URLFlags:
    """Evaluate the unilinearity and compactness predicates by exhaustion."""
    mul = alg.mul
    pairs = list(_incomparable_pairs(alg))
    unilinear = alg.is_bounded and all(
        alg.meet[u][v] == alg.bot and alg.join[u][v] == alg.top for u, v in pairs
    )

    top_central = True
    top_unital = True
    for u, v in pairs:
        j, m = alg.join[u][v], alg.meet[u][v]
        for x in alg.elements:
            if mul[x][j] != mul[j][x]:
                top_central = False
            if x != m and not (mul[x][j] == j == mul[j][x]):
                top_unital = False

    rigorous = alg.is_bounded and all(
        mul[alg.top][x] == alg.top == mul[x][alg.top] for x in alg.elements if x != alg.bot
    )
    middle = _middle(alg) if alg.is_bounded else []
    closed = all(mul[x][y] not in (alg.bot, alg.top) for x in middle for y in middle)
    return URLFlags(
        is_unilinear=unilinear,
        is_linear=not pairs,
        top_central=top_central,
        top_unital=top_unital,
        rigorously_compact=rigorous,
        compact=unilinear and top_unital and closed,
        height=height(alg),
        width=width(alg),
    )


def is_compact_url(alg: FinRL) -> bool:
    return url_flags(alg).compact


_X, _Y, _Z = var("x"), var("y"), var("z")


def _r(t: Term) -> Term:
    inverse = ONE.over(t)
    return ((ONE | t) * (ONE & t)) & ((ONE | inverse) * (ONE & inverse))


_EQUIV = _X.under(_Y) & _Y.under(_X) & ONE
DISCRIMINATOR = (_r(_EQUIV) * _Z) | ((_r(_EQUIV).under(BOT) & ONE) * _X)


def eval_discriminator(alg: FinRL, x: int, y: int, z: int) -> int:
    """t(x, y, z) = r(x↔y)·z ∨ (r(x↔y)\\⊥ ∧ 1)·x."""
    if not alg.is_bounded:
        raise NotBounded("the discriminator term needs ⊥")
    return finalg.eval_term(alg, DISCRIMINATOR, {"x": x, "y": y, "z": z})


def discriminator_witness(alg: FinRL) -> Optional[Tuple[int, int, int]]:
    """First triple where t fails to be the ternary discriminator."""
    for x, y, z in itertools.product(alg.elements, repeat=3):
        expected = z if x == y else x
        if eval_discriminator(alg, x, y, z) != expected:
            return (x, y, z)
    return None


def is_discriminator(alg: FinRL) -> bool:
    return discriminator_witness(alg) is None


def _chain_partitions(items: Sequence[int]) -> Iterator[List[Tuple[int, ...]]]:
    """Every partition of ``items`` into blocks, each block linearly ordered."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _chain_partitions(rest):
        yield [(first,)] + partition
        for i, block in enumerate(partition):
            for pos in range(len(block) + 1):
                grown = block[:pos] + (first,) + block[pos:]
                yield partition[:i] + [grown] + partition[i + 1:]


def search_cyclic_orders(r: int, s: int) -> List[FinRL]:
    """Every unilinear order on ⊥ < M < ⊤ making the cyclic monoid of index r
    and period s a compact URL.

    Elements are indexed as in make_cyclic_url, so the result can be compared
    with the up and down orientations by their order matrices.
    """
    reference = make_cyclic_url(r, s, Orientation.UP)
    size = reference.size
    bot, top = 0, size - 1
    middle = list(range(1, top))
    found: List[FinRL] = []
    for partition in _chain_partitions(middle):
        leq = [[x == y or x == bot or y == top for y in range(size)] for x in range(size)]
        for block in partition:
            for i, x in enumerate(block):
                for y in block[i:]:
                    leq[x][y] = True
        try:
            alg = finalg.build_algebra(leq, reference.mul, reference.unit, names=reference.names)
        except ReslatError:
            continue
        if is_compact_url(alg):
            found.append(alg)
    logger.info(f"Cyclic monoid r={r} s={s}: {len(found)} compact orders")
    return found


def cyclic_power(r: int, s: int, n: int) -> int:
    """Carrier index of a^n in make_cyclic_url(r, s, ·)."""
    return 1 + cyclic_index(n, r, s)
