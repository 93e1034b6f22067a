"""Brute-force enumeration of residuated lattices on M_X.

The search space is split into prefixes: the unit and the products x⊤ and
⊤x of every middle element, each in {x, ⊤}. Products of two middle
elements are then bounded above by x⊤ and ⊤y. Prefix results are merged
in prefix order, so the output does not depend on the number of workers.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from reslat.config import get_settings
from reslat.exceptions import CapExceeded, InvalidParameters, ReslatError
from reslat.models import FinRL, ZKind
from reslat.services import finalg
from reslat.services.construct import make_mx_lattice, make_rab, zero_cancellative_monoids
from reslat.services.isomorphism import find_isomorphism

logger = logging.getLogger(__name__)

# (unit, x⊤ for each middle x, ⊤x for each middle x)
Prefix = Tuple[int, Tuple[int, ...], Tuple[int, ...]]


def _check_size(n_x: int) -> None:
    if n_x < 0:
        raise InvalidParameters(f"|X| must be non-negative, got {n_x}")
    limit = get_settings().ENUMERATION_MAX_X_SIZE
    if n_x > limit:
        logger.warning(f"Enumerating |X|={n_x} above the configured limit {limit}; this may take very long")


def mx_search_prefixes(n_x: int) -> List[Prefix]:
    """Search prefixes for M_X with |X| = n_x, in a fixed order."""
    if n_x < 0:
        raise InvalidParameters(f"|X| must be non-negative, got {n_x}")
    top = n_x + 1
    middle = list(range(1, top))
    prefixes: List[Prefix] = []
    for unit in middle + [top]:
        options = []
        for x in middle:
            if unit == top:
                options.append([(x, x)])
            elif x == unit:
                options.append([(top, top)])
            else:
                options.append(list(itertools.product((x, top), repeat=2)))
        for choice in itertools.product(*options):
            prefixes.append((unit, tuple(c[0] for c in choice), tuple(c[1] for c in choice)))
    return prefixes


def _dedup(found: List[FinRL], candidates: List[FinRL]) -> List[FinRL]:
    for alg in candidates:
        if all(find_isomorphism(alg, other) is None for other in found):
            found.append(alg)
    return found


def enumerate_mx_prefix(n_x: int, prefix: Prefix) -> List[FinRL]:
    """Residuated lattices on M_X extending one prefix, up to isomorphism."""
    lattice = make_mx_lattice(n_x)
    le = lattice.leq
    size = n_x + 2
    bot, top = 0, size - 1
    unit, row_top, col_top = prefix
    middle = list(range(1, top))

    table = [[bot] * size for _ in range(size)]
    table[top][top] = top
    for x, xt, tx in zip(middle, row_top, col_top):
        table[x][top] = xt
        table[top][x] = tx
    for x in range(size):
        if x != bot:
            table[x][unit] = x
            table[unit][x] = x

    free = [(x, y) for x in middle for y in middle if unit not in (x, y)]
    domains = [
        [v for v in range(size) if le[v][table[x][top]] and le[v][table[top][y]]] for x, y in free
    ]
    found: List[FinRL] = []
    for values in itertools.product(*domains):
        for (x, y), v in zip(free, values):
            table[x][y] = v
        try:
            alg = finalg.build_algebra(lattice.leq, table, unit)
        except ReslatError:
            continue
        if finalg.check_residuated_lattice(alg).ok:
            _dedup(found, [alg])
    logger.debug(f"Prefix {prefix}: {len(found)} algebras")
    return found


def enumerate_mx(n_x: int, cap: Optional[int] = None, jobs: Optional[int] = None) -> List[FinRL]:
    """Every residuated lattice on M_X with |X| = n_x, up to isomorphism."""
    settings = get_settings()
    cap = settings.ENUMERATION_CAP if cap is None else cap
    jobs = settings.ENUMERATION_JOBS if jobs is None else jobs
    _check_size(n_x)
    prefixes = mx_search_prefixes(n_x)
    logger.info(f"Enumerating M_X with |X|={n_x}: {len(prefixes)} prefixes, {jobs} workers")

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        per_prefix = list(executor.map(lambda p: enumerate_mx_prefix(n_x, p), prefixes))

    found: List[FinRL] = []
    for algebras in per_prefix:
        _dedup(found, algebras)
        if cap is not None and len(found) > cap:
            raise CapExceeded(f"more than {cap} algebras on M_X with |X|={n_x}", witness=(cap,))
    logger.info(f"Found {len(found)} algebras on M_X with |X|={n_x}")
    return found


def rab_catalog(n_x: int) -> List[FinRL]:
    """Every R_{A,B} on M_X with |X| = n_x, up to isomorphism.

    A ranges over ⊤-cancellative monoids with zero of size s ≤ n_x + 1 and
    the kind fills the remaining n_x - (s - 1) middle elements.
    """
    _check_size(n_x)
    found: List[FinRL] = []
    for s in range(1, n_x + 2):
        kinds = [kind for kind in ZKind if kind.size == n_x - (s - 1)]
        if not kinds:
            continue
        for a in zero_cancellative_monoids(s):
            _dedup(found, [make_rab(a, kind) for kind in kinds])
    logger.info(f"Catalog of R_(A,B) with |X|={n_x}: {len(found)} algebras")
    return found
