"""Core validation of finite residuated lattices.

Order matrices and Cayley tables are checked with numpy; witnesses are the
first offending index tuples in lexicographic order so that reports are
deterministic.
"""
import logging
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from reslat.exceptions import (
    InvalidParameters,
    NoMaximum,
    NotALattice,
    NotAPoset,
    NotAssociative,
    NotIdentity,
    NotOrderPreserving,
    UnboundedConstant,
    UnboundVariable,
)
from reslat.models import FinRL, LatticeTables, LawReport, Operation, PartialAlgebra, Table, Term, TermOp

logger = logging.getLogger(__name__)

_OPERATIONS = (Operation.MEET, Operation.JOIN, Operation.MUL, Operation.LDIV, Operation.RDIV)


def _as_table(rows: Table) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    """First True position of a boolean array, in C order."""
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _order_matrix(leq) -> np.ndarray:
    le = np.array(leq, dtype=bool)
    if le.ndim != 2 or le.shape[0] != le.shape[1] or le.shape[0] == 0:
        raise InvalidParameters("order matrix must be square and non-empty")
    return le


def _mul_array(mul, n: int) -> np.ndarray:
    m = np.array(mul, dtype=np.int64)
    if m.shape != (n, n):
        raise InvalidParameters(f"multiplication table must be {n}x{n}")
    if m.min() < 0 or m.max() >= n:
        raise InvalidParameters(f"multiplication entries must lie in 0..{n - 1}")
    return m


def _order_witnesses(le: np.ndarray) -> Dict[str, Optional[Tuple[int, ...]]]:
    n = le.shape[0]
    reflexive = _first(~np.diag(le))
    antisym = _first(np.triu(le & le.T, k=1))
    witness = None
    through = (le.astype(np.int64) @ le.astype(np.int64)) > 0
    bad = _first(through & ~le)
    if bad is not None:
        x, z = bad
        y = next(y for y in range(n) if le[x, y] and le[y, z])
        witness = (x, y, z)
    return {"reflexivity": reflexive, "antisymmetry": antisym, "transitivity": witness}


def _bound(le: np.ndarray, x: int, y: int, lower: bool) -> Optional[int]:
    """Infimum (lower=True) or supremum of x and y, or None."""
    if lower:
        candidates = np.flatnonzero(le[:, x] & le[:, y])
    else:
        candidates = np.flatnonzero(le[x, :] & le[y, :])
    if len(candidates) == 0:
        return None
    sub = le[np.ix_(candidates, candidates)]
    best = np.flatnonzero(sub.all(axis=0) if lower else sub.all(axis=1))
    if len(best) == 0:
        return None
    return int(candidates[best[0]])


def validate_order(leq: Sequence[Sequence[bool]]) -> LatticeTables:
    """Check that ``leq`` is a lattice order and return its meet/join tables."""
    le = _order_matrix(leq)
    n = le.shape[0]
    for law, witness in _order_witnesses(le).items():
        if witness is not None:
            raise NotAPoset(f"{law} fails at {witness}", witness=witness, law=law)

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            low = _bound(le, x, y, lower=True)
            if low is None:
                raise NotALattice(f"elements {x} and {y} have no infimum", witness=(x, y), law="meet")
            high = _bound(le, x, y, lower=False)
            if high is None:
                raise NotALattice(f"elements {x} and {y} have no supremum", witness=(x, y), law="join")
            meet[x][y] = meet[y][x] = low
            join[x][y] = join[y][x] = high

    bots = np.flatnonzero(le.all(axis=1))
    tops = np.flatnonzero(le.all(axis=0))
    return LatticeTables(
        leq=tuple(tuple(bool(v) for v in row) for row in le),
        meet=_as_table(meet),
        join=_as_table(join),
        bot=int(bots[0]) if len(bots) else None,
        top=int(tops[0]) if len(tops) else None,
    )


def _associativity_witness(m: np.ndarray) -> Optional[Tuple[int, ...]]:
    # m[m][x, y, z] = (xy)z and m[:, m][x, y, z] = x(yz)
    return _first(m[m] != m[:, m])


def _identity_witness(m: np.ndarray, unit: int) -> Optional[Tuple[int, ...]]:
    ids = np.arange(m.shape[0])
    bad = (m[unit, :] != ids) | (m[:, unit] != ids)
    return _first(bad)


def check_monoid(mul: Table, unit: int) -> None:
    """Raise unless (mul, unit) is a monoid."""
    n = len(mul)
    m = _mul_array(mul, n)
    if not 0 <= unit < n:
        raise InvalidParameters(f"unit {unit} is outside the carrier")
    witness = _associativity_witness(m)
    if witness is not None:
        raise NotAssociative(f"(xy)z != x(yz) at {witness}", witness=witness, law="associativity")
    witness = _identity_witness(m, unit)
    if witness is not None:
        raise NotIdentity(f"{unit} is not an identity for {witness[0]}", witness=witness, law="identity")


def _monotonicity_witness(le: np.ndarray, m: np.ndarray) -> Optional[Tuple[int, ...]]:
    """First (x, y, z) with x ≤ y but xz ≰ yz or zx ≰ zy."""
    right = le[m[:, None, :], m[None, :, :]]
    left = le[m.T[:, None, :], m.T[None, :, :]]
    return _first(le[:, :, None] & ~(right & left))


def derive_residuals(lattice: LatticeTables, mul: Table, unit: int) -> Tuple[Table, Table]:
    """Compute x\\z = max{y : xy ≤ z} and z/x = max{y : yx ≤ z}.

    The maximum of a solution set, when it exists, is its join; the join
    is computed and then tested for membership.
    """
    le = np.array(lattice.leq, dtype=bool)
    n = le.shape[0]
    m = _mul_array(mul, n)
    witness = _monotonicity_witness(le, m)
    if witness is not None:
        raise NotOrderPreserving(f"multiplication is not monotone at {witness}", witness=witness, law="monotonicity")

    def solve(solutions: np.ndarray, x: int, z: int) -> int:
        members = np.flatnonzero(solutions)
        if len(members) == 0:
            raise NoMaximum(f"no solution for ({x}, {z})", witness=(x, z), law="residuation")
        best = int(members[0])
        for y in members[1:]:
            best = lattice.join[best][int(y)]
        if not solutions[best]:
            raise NoMaximum(f"solutions for ({x}, {z}) have no maximum", witness=(x, z), law="residuation")
        return best

    ldiv = [[solve(le[m[x, :], z], x, z) for z in range(n)] for x in range(n)]
    rdiv = [[solve(le[m[:, x], z], x, z) for x in range(n)] for z in range(n)]
    return _as_table(ldiv), _as_table(rdiv)


def check_residuated_lattice(alg: FinRL) -> LawReport:
    """Check every residuated-lattice law and report the first witness of each."""
    report = LawReport()
    n = alg.size
    le = np.array(alg.leq, dtype=bool)
    m = np.array(alg.mul, dtype=np.int64)
    ld = np.array(alg.ldiv, dtype=np.int64)
    rd = np.array(alg.rdiv, dtype=np.int64)
    ids = np.arange(n)

    for law, witness in _order_witnesses(le).items():
        report.add(law, witness)

    for law, table in (("meet", alg.meet), ("join", alg.join)):
        witness = None
        for x in range(n):
            for y in range(n):
                if _bound(le, x, y, lower=law == "meet") != table[x][y]:
                    witness = (x, y)
                    break
            if witness is not None:
                break
        report.add(law, witness)

    report.add("associativity", _associativity_witness(m))
    report.add("identity", _identity_witness(m, alg.unit))
    report.add("monotonicity", _monotonicity_witness(le, m))

    product_le = le[m[:, :, None], ids[None, None, :]]
    report.add("left_residuation", _first(product_le != le[ids[None, :, None], ld[:, None, :]]))
    report.add("right_residuation", _first(product_le != le[ids[:, None, None], rd.T[None, :, :]]))

    if alg.bot is not None:
        bot = alg.bot
        report.add("bottom_absorbing", _first((m[bot, :] != bot) | (m[:, bot] != bot)))
    else:
        report.add("bottom_absorbing", None, detail="no bottom")

    if alg.is_bounded:
        bot, top = alg.bot, alg.top
        bad = (ld[bot, :] != top) | (ld[:, top] != top) | (rd[:, bot] != top) | (rd[top, :] != top)
        report.add("bound_divisions", _first(bad))
    else:
        report.add("bound_divisions", None, detail="unbounded")

    witness = None
    for name, value, axis in (("bot", alg.bot, 1), ("top", alg.top, 0)):
        actual = np.flatnonzero(le.all(axis=axis))
        expected = int(actual[0]) if len(actual) == 1 else None
        if value != expected:
            witness = (name, value, expected)
            break
    report.add("bounds", witness)

    if not report.ok:
        logger.debug(f"Law failure: {report.first_failure().name} at {report.first_failure().witness}")
    return report


def eval_term(alg: FinRL, t: Term, assignment: Mapping[str, int]) -> int:
    """Evaluate a term under a total variable assignment."""
    if t.op is TermOp.VAR:
        if t.name not in assignment:
            raise UnboundVariable(f"variable {t.name} is not assigned", witness=(t.name,))
        return assignment[t.name]
    if t.op is TermOp.ONE:
        return alg.unit
    if t.op is TermOp.BOT:
        if alg.bot is None:
            raise UnboundedConstant("algebra has no bottom", witness=("bot",))
        return alg.bot
    if t.op is TermOp.TOP:
        if alg.top is None:
            raise UnboundedConstant("algebra has no top", witness=("top",))
        return alg.top
    left = eval_term(alg, t.args[0], assignment)
    right = eval_term(alg, t.args[1], assignment)
    return alg.table(Operation(t.op.value))[left][right]


def induced_partial(alg: FinRL, subset: Iterable[int]) -> PartialAlgebra:
    """Partial subalgebra induced by a subset of the carrier."""
    return PartialAlgebra(parent=alg, subset=frozenset(subset))


def build_algebra(
    leq: Sequence[Sequence[bool]],
    mul: Table,
    unit: int,
    names: Optional[Sequence[str]] = None,
    ldiv: Optional[Table] = None,
    rdiv: Optional[Table] = None,
) -> FinRL:
    """Validate order and monoid and assemble a FinRL.

    Division tables that are not supplied are derived.
    """
    lattice = validate_order(leq)
    check_monoid(mul, unit)
    if ldiv is None or rdiv is None:
        derived_l, derived_r = derive_residuals(lattice, mul, unit)
        ldiv = derived_l if ldiv is None else ldiv
        rdiv = derived_r if rdiv is None else rdiv
    return FinRL(
        size=lattice.size,
        leq=lattice.leq,
        meet=lattice.meet,
        join=lattice.join,
        mul=_as_table(mul),
        ldiv=_as_table(ldiv),
        rdiv=_as_table(rdiv),
        unit=unit,
        bot=lattice.bot,
        top=lattice.top,
        names=tuple(names) if names is not None else None,
    )


def relabel(alg: FinRL, perm: Sequence[int]) -> FinRL:
    """Rename element x to perm[x] in every table."""
    n = alg.size
    if sorted(perm) != list(range(n)):
        raise InvalidParameters("perm must be a permutation of the carrier")
    inverse = [0] * n
    for old, new in enumerate(perm):
        inverse[new] = old

    def move(table: Table) -> Table:
        return tuple(tuple(perm[table[inverse[x]][inverse[y]]] for y in range(n)) for x in range(n))

    return FinRL(
        size=n,
        leq=tuple(tuple(alg.leq[inverse[x]][inverse[y]] for y in range(n)) for x in range(n)),
        meet=move(alg.meet),
        join=move(alg.join),
        mul=move(alg.mul),
        ldiv=move(alg.ldiv),
        rdiv=move(alg.rdiv),
        unit=perm[alg.unit],
        bot=perm[alg.bot] if alg.bot is not None else None,
        top=perm[alg.top] if alg.top is not None else None,
        names=tuple(alg.names[inverse[x]] for x in range(n)) if alg.names is not None else None,
    )


def normalize_bounds(alg: FinRL) -> FinRL:
    """Relabel so that bot is 0 and top is size-1, keeping other elements in order."""
    if not alg.is_bounded or (alg.bot == 0 and alg.top == alg.size - 1):
        return alg
    middle = [x for x in alg.elements if x not in (alg.bot, alg.top)]
    order = [alg.bot] + middle + ([alg.top] if alg.top != alg.bot else [])
    perm = [0] * alg.size
    for new, old in enumerate(order):
        perm[old] = new
    return relabel(alg, perm)


def subalgebra_closure(alg: FinRL, subset: Iterable[int]) -> FrozenSet[int]:
    """Least superset closed under the five binary operations."""
    closed = set(subset)
    frontier = list(closed)
    while frontier:
        fresh: List[int] = []
        for x in list(closed):
            for y in frontier:
                for op in _OPERATIONS:
                    table = alg.table(op)
                    for value in (table[x][y], table[y][x]):
                        if value not in closed:
                            closed.add(value)
                            fresh.append(value)
        frontier = fresh
    return frozenset(closed)


def subalgebra_closed(alg: FinRL, subset: Iterable[int]) -> bool:
    """True when the subset is closed under the five binary operations."""
    subset = frozenset(subset)
    return subalgebra_closure(alg, subset) == subset


def element_index(alg: FinRL, token: str) -> int:
    """Resolve a display name or a decimal index to a carrier index."""
    if alg.names is not None and token in alg.names:
        return alg.names.index(token)
    try:
        value = int(token)
    except ValueError:
        raise InvalidParameters(f"unknown element {token!r}") from None
    if not 0 <= value < alg.size:
        raise InvalidParameters(f"element {value} is outside the carrier")
    return value
