"""Extensions R_{φ,f} of a residuated chain by a cancellative monoid.

Elements of R_{φ,f} other than the bounds are pairs (a, k); the pair has
index 1 + k·|A| + rank(a), ⊥ is 0 and ⊤ is the last index.
"""
import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from reslat.exceptions import CocycleInvalid, InvalidParameters, NotAChain, NotCancellative, ReslatError
from reslat.models import ChainMonoid, CocycleData, FinRL, FiniteMonoid, LawReport
from reslat.services import finalg
from reslat.services.construct import assemble

logger = logging.getLogger(__name__)


def chain_monoid_of(alg: FinRL) -> ChainMonoid:
    """The chain monoid underlying a totally ordered FinRL."""
    for x in alg.elements:
        for y in alg.elements:
            if not (alg.le(x, y) or alg.le(y, x)):
                raise NotAChain(f"elements {x} and {y} are incomparable", witness=(x, y))
    rank = tuple(sum(alg.le(y, x) for y in alg.elements) - 1 for x in alg.elements)
    return ChainMonoid(size=alg.size, rank=rank, mul=alg.mul, unit=alg.unit, names=alg.names)


def cyclic_group(n: int) -> FiniteMonoid:
    """Z_n without an adjoined zero; element i is the i-th power of the generator."""
    if n < 1:
        raise InvalidParameters(f"group order must be positive, got {n}")
    names = tuple("1" if i == 0 else ("k" if i == 1 else f"k{i}") for i in range(n))
    return FiniteMonoid(
        size=n,
        mul=tuple(tuple((i + j) % n for j in range(n)) for i in range(n)),
        unit=0,
        names=names,
    )


def is_cancellative(k: FiniteMonoid) -> bool:
    n = k.size
    for x in range(n):
        if len({k.mul[x][y] for y in range(n)}) != n or len({k.mul[y][x] for y in range(n)}) != n:
            return False
    return True


def check_res_end(a: ChainMonoid, g: Sequence[int]) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Whether g is a residuated monoid endomorphism of the chain; returns g* when it is.

    g*(b) = max{c : g(c) ≤ b}, and residuation requires that set to be
    non-empty for every b.
    """
    n = a.size
    if len(g) != n or any(not 0 <= v < n for v in g):
        return False, None
    for x in range(n):
        for y in range(n):
            if a.le(x, y) and not a.le(g[x], g[y]):
                return False, None
            if g[a.mul[x][y]] != a.mul[g[x]][g[y]]:
                return False, None
    if g[a.unit] != a.unit:
        return False, None
    residual = []
    for b in range(n):
        below = [c for c in a.ascending() if a.le(g[c], b)]
        if not below:
            return False, None
        residual.append(below[-1])
    return True, tuple(residual)


def _inverses(data: CocycleData) -> Dict[int, Optional[int]]:
    return {v: data.a.inverse(v) for row in data.f for v in row}


def check_cocycle(data: CocycleData) -> LawReport:
    """Check the residuated-endomorphism, invertibility, normalization,
    twisted-composition and cocycle conditions of (K, A, φ, f)."""
    report = LawReport()
    k, a, phi, f = data.k, data.a, data.phi, data.f
    nk, na = k.size, a.size
    one = k.unit

    report.add("res_end", next(((x,) for x in range(nk) if not check_res_end(a, phi[x])[0]), None))

    inverses = _inverses(data)
    report.add(
        "invertible",
        next(((x, y) for x in range(nk) for y in range(nk) if inverses[f[x][y]] is None), None),
    )
    report.add(
        "normalization",
        next(((x,) for x in range(nk) if f[x][one] != a.unit or f[one][x] != a.unit), None),
    )
    report.add("phi_unit", next(((v,) for v in range(na) if phi[one][v] != v), None))

    witness = None
    for x, y in itertools.product(range(nk), repeat=2):
        inverse = inverses[f[x][y]]
        if inverse is None:
            continue
        for v in range(na):
            twisted = a.mul[a.mul[f[x][y]][phi[x][phi[y][v]]]][inverse]
            if phi[k.mul[x][y]][v] != twisted:
                witness = (x, y, v)
                break
        if witness is not None:
            break
    report.add("twisted_composition", witness)

    witness = None
    for x, y, z in itertools.product(range(nk), repeat=3):
        left = a.mul[f[x][k.mul[y][z]]][phi[x][f[y][z]]]
        right = a.mul[f[k.mul[x][y]][z]][f[x][y]]
        if left != right:
            witness = (x, y, z)
            break
    report.add("cocycle", witness)
    return report


def cocycle_element_index(data: CocycleData, a: int, k: int) -> int:
    return 1 + k * data.a.size + data.a.rank[a]


def make_cocycle_extension(data: CocycleData) -> FinRL:
    """R_{φ,f} with (a1,k1)(a2,k2) = (a1·φ_{k1}(a2)·f(k1,k2)⁻¹, k1k2).

    Chains (·, k) are pairwise incomparable; ⊥ absorbs everything and ⊤
    absorbs every element except ⊥.
    """
    k, a, phi, f = data.k, data.a, data.phi, data.f
    finalg.check_monoid(k.mul, k.unit)
    if not is_cancellative(k):
        raise NotCancellative("K is not cancellative", law="cancellative")
    report = check_cocycle(data)
    failure = report.first_failure()
    if failure is not None:
        raise CocycleInvalid(f"cocycle condition {failure.name} fails at {failure.witness}",
                             witness=failure.witness, law=failure.name)

    nk, na = k.size, a.size
    size = nk * na + 2
    bot, top = 0, size - 1
    ascending = a.ascending()
    inverses = _inverses(data)
    residuals = [check_res_end(a, phi[x])[1] for x in range(nk)]

    def pair(i: int) -> Tuple[int, int]:
        kk, pos = divmod(i - 1, na)
        return ascending[pos], kk

    def index(av: int, kv: int) -> int:
        return cocycle_element_index(data, av, kv)

    leq = [[False] * size for _ in range(size)]
    for x in range(size):
        for y in range(size):
            if x == y or x == bot or y == top:
                leq[x][y] = True
            elif x != top and y != bot:
                (a1, k1), (a2, k2) = pair(x), pair(y)
                leq[x][y] = k1 == k2 and a.le(a1, a2)
    lattice = finalg.validate_order(leq)

    def mul(x: int, y: int) -> int:
        if x == bot or y == bot:
            return bot
        if x == top or y == top:
            return top
        (a1, k1), (a2, k2) = pair(x), pair(y)
        value = a.mul[a.mul[a1][phi[k1][a2]]][inverses[f[k1][k2]]]
        return index(value, k.mul[k1][k2])

    def solve_left(k1: int, k2: int) -> Optional[int]:
        return next((kk for kk in range(nk) if k.mul[k1][kk] == k2), None)

    def solve_right(k1: int, k2: int) -> Optional[int]:
        return next((kk for kk in range(nk) if k.mul[kk][k1] == k2), None)

    def bounds_div(x: int, z: int) -> Optional[int]:
        if x == bot or z == top:
            return top
        if x == top or z == bot:
            return bot
        return None

    def ldiv(x: int, z: int) -> int:
        fixed = bounds_div(x, z)
        if fixed is not None:
            return fixed
        (a1, k1), (a2, k2) = pair(x), pair(z)
        kk = solve_left(k1, k2)
        if kk is None:
            return bot
        d = a.ldiv(a1, a.mul[a2][f[k1][kk]])
        c = None if d is None else residuals[k1][d]
        if c is None or not a.le(phi[k1][c], d):
            return bot
        return index(c, kk)

    def rdiv(z: int, x: int) -> int:
        fixed = bounds_div(x, z)
        if fixed is not None:
            return fixed
        (a1, k1), (a2, k2) = pair(x), pair(z)
        kk = solve_right(k1, k2)
        if kk is None:
            return bot
        c = a.rdiv(a.mul[a2][f[kk][k1]], phi[kk][a1])
        return bot if c is None else index(c, kk)

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    ldiv_t = [[ldiv(x, z) for z in range(size)] for x in range(size)]
    rdiv_t = [[rdiv(z, x) for x in range(size)] for z in range(size)]
    names = ["bot"] + [f"({a.label(pair(i)[0])},{k.label(pair(i)[1])})" for i in range(1, size - 1)] + ["top"]
    unit = index(a.unit, k.unit)
    return assemble(lattice, table, unit, ldiv_t, rdiv_t, names, f"cocycle extension {na}x{nk}")


def trivial_cocycle_data(a: ChainMonoid, k: FiniteMonoid) -> CocycleData:
    """φ constantly the identity and f constantly 1."""
    identity = tuple(range(a.size))
    return CocycleData(
        k=k,
        a=a,
        phi=tuple(identity for _ in range(k.size)),
        f=tuple(tuple(a.unit for _ in range(k.size)) for _ in range(k.size)),
    )


def bounded_product(a: FinRL, k: FiniteMonoid) -> FinRL:
    """A ×ᵇ K for a residuated chain A and a finite cancellative monoid K."""
    return make_cocycle_extension(trivial_cocycle_data(chain_monoid_of(a), k))


def residuated_chains(size: int) -> List[FinRL]:
    """Every bounded residuated chain on 0 < 1 < … < size-1.

    Two chains are isomorphic only when their tables coincide, so no
    deduplication is needed.
    """
    if size < 1:
        raise InvalidParameters(f"chain size must be positive, got {size}")
    leq = [[x <= y for y in range(size)] for x in range(size)]
    lattice = finalg.validate_order(leq)
    found: List[FinRL] = []
    for unit in ([0] if size == 1 else range(1, size)):
        cells = [(x, y) for x in range(1, size) for y in range(1, size) if unit not in (x, y)]
        for values in itertools.product(range(size), repeat=len(cells)):
            table = [[0] * size for _ in range(size)]
            for x in range(size):
                table[x][unit] = x
                table[unit][x] = x
            for (x, y), v in zip(cells, values):
                table[x][y] = v
            try:
                found.append(finalg.build_algebra(lattice.leq, table, unit))
            except ReslatError as e:
                logger.debug(f"Rejected chain table: {e}")
    logger.info(f"Found {len(found)} residuated chains of size {size}")
    return found


def search_cocycle_data(max_k: int = 3, max_a: int = 4) -> List[CocycleData]:
    """Exhaustive search for cocycle data over cyclic K and residuated chains A.

    Every φ_k must be a residuated endomorphism with φ_1 the identity, and
    f ranges over normalized tables of invertible elements.
    """
    hits: List[CocycleData] = []
    for order in range(1, max_k + 1):
        k = cyclic_group(order)
        for na in range(1, max_a + 1):
            for chain in residuated_chains(na):
                a = chain_monoid_of(chain)
                endos = [g for g in itertools.product(range(na), repeat=na) if check_res_end(a, g)[0]]
                units = a.invertibles()
                identity = tuple(range(na))
                free = [(x, y) for x in range(1, order) for y in range(1, order)]
                for maps in itertools.product(endos, repeat=order - 1):
                    phi = (identity,) + maps
                    for values in itertools.product(units, repeat=len(free)):
                        f = [[a.unit] * order for _ in range(order)]
                        for (x, y), v in zip(free, values):
                            f[x][y] = v
                        data = CocycleData(k=k, a=a, phi=phi, f=tuple(map(tuple, f)))
                        if check_cocycle(data).ok:
                            hits.append(data)
    logger.info(f"Cocycle search found {len(hits)} hits")
    return hits
