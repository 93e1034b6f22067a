"""Isomorphism search between finite algebras.

Backtracking over element assignments, pruned by per-element invariants
(order-ideal sizes, idempotency, the index and period of the element under
multiplication). Elements with the fewest candidate images are assigned
first.
"""
import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from reslat.models import FinRL, FiniteMonoid, Table

logger = logging.getLogger(__name__)

Mapping = Tuple[int, ...]


def power_shape(mul: Table, unit: int, x: int) -> Tuple[int, int]:
    """(index, period) of the cyclic submonoid generated by x."""
    seen: Dict[int, int] = {}
    current, step = unit, 0
    while current not in seen:
        seen[current] = step
        current = mul[current][x]
        step += 1
    return seen[current], step - seen[current]


def _algebra_invariant(alg: FinRL, x: int) -> Tuple:
    n = alg.size
    return (
        x == alg.unit,
        x == alg.bot,
        x == alg.top,
        sum(alg.leq[y][x] for y in range(n)),
        sum(alg.leq[x][y] for y in range(n)),
        alg.mul[x][x] == x,
        power_shape(alg.mul, alg.unit, x),
        sum(alg.mul[x][y] == x for y in range(n)),
        sum(alg.mul[y][x] == x for y in range(n)),
    )


def _monoid_invariant(mon: FiniteMonoid, x: int) -> Tuple:
    n = mon.size
    return (
        x == mon.unit,
        x == mon.zero,
        mon.mul[x][x] == x,
        power_shape(mon.mul, mon.unit, x),
        sum(mon.mul[x][y] == x for y in range(n)),
        sum(mon.mul[y][x] == x for y in range(n)),
    )


def _backtrack(
    n: int,
    candidates: List[List[int]],
    consistent: Callable[[int, int, Dict[int, int]], bool],
    accept: Optional[Callable[[Mapping], bool]] = None,
) -> Optional[Mapping]:
    order = sorted(range(n), key=lambda x: (len(candidates[x]), x))
    assignment: Dict[int, int] = {}
    used = set()

    def extend(depth: int) -> bool:
        if depth == n:
            return accept is None or accept(tuple(assignment[x] for x in range(n)))
        x = order[depth]
        for u in candidates[x]:
            if u in used or not consistent(x, u, assignment):
                continue
            assignment[x] = u
            used.add(u)
            if extend(depth + 1):
                return True
            del assignment[x]
            used.discard(u)
        return False

    if not extend(0):
        return None
    return tuple(assignment[x] for x in range(n))


def _candidates(n: int, inv_a: Sequence, inv_b: Sequence) -> Optional[List[List[int]]]:
    if sorted(map(repr, inv_a)) != sorted(map(repr, inv_b)):
        return None
    return [[u for u in range(n) if inv_b[u] == inv_a[x]] for x in range(n)]


def find_isomorphism(a: FinRL, b: FinRL) -> Optional[Mapping]:
    """A bijection preserving order, multiplication, unit and bounds, or None."""
    if a.size != b.size or a.is_bounded != b.is_bounded:
        return None
    n = a.size
    candidates = _candidates(
        n,
        [_algebra_invariant(a, x) for x in range(n)],
        [_algebra_invariant(b, x) for x in range(n)],
    )
    if candidates is None:
        return None

    def consistent(x: int, u: int, assignment: Dict[int, int]) -> bool:
        if a.leq[x][x] != b.leq[u][u]:
            return False
        for y, v in assignment.items():
            if a.leq[x][y] != b.leq[u][v] or a.leq[y][x] != b.leq[v][u]:
                return False
        images = dict(assignment)
        images[x] = u
        for p, ip in images.items():
            for q, iq in images.items():
                z = a.mul[p][q]
                if z in images and images[z] != b.mul[ip][iq]:
                    return False
        return True

    mapping = _backtrack(n, candidates, consistent, accept=lambda f: verify_mapping(a, b, f))
    logger.debug(f"Isomorphism search on {n} elements: {'found' if mapping is not None else 'none'}")
    return mapping


def verify_mapping(a: FinRL, b: FinRL, mapping: Sequence[int]) -> bool:
    """Table comparison of a candidate isomorphism a → b."""
    n = a.size
    if b.size != n or sorted(mapping) != list(range(n)):
        return False
    f = mapping
    if f[a.unit] != b.unit:
        return False
    for name in ("bot", "top"):
        value_a, value_b = getattr(a, name), getattr(b, name)
        if (value_a is None) != (value_b is None):
            return False
        if value_a is not None and f[value_a] != value_b:
            return False
    for x in range(n):
        for y in range(n):
            if a.leq[x][y] != b.leq[f[x]][f[y]]:
                return False
            for name in ("meet", "join", "mul", "ldiv", "rdiv"):
                if f[getattr(a, name)[x][y]] != getattr(b, name)[f[x]][f[y]]:
                    return False
    return True


def find_monoid_isomorphism(m: FiniteMonoid, k: FiniteMonoid) -> Optional[Mapping]:
    """A bijection preserving multiplication, unit and zero, or None."""
    if m.size != k.size or (m.zero is None) != (k.zero is None):
        return None
    n = m.size
    candidates = _candidates(
        n,
        [_monoid_invariant(m, x) for x in range(n)],
        [_monoid_invariant(k, x) for x in range(n)],
    )
    if candidates is None:
        return None

    def consistent(x: int, u: int, assignment: Dict[int, int]) -> bool:
        images = dict(assignment)
        images[x] = u
        for p, ip in images.items():
            for q, iq in images.items():
                z = m.mul[p][q]
                if z in images and images[z] != k.mul[ip][iq]:
                    return False
        return True

    def preserves(f: Mapping) -> bool:
        return all(f[m.mul[x][y]] == k.mul[f[x]][f[y]] for x in range(n) for y in range(n))

    return _backtrack(n, candidates, consistent, accept=preserves)
