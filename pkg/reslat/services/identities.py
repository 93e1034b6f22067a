"""Identity checks: knotted inequalities, weak commutativity and the
conjugate equation schemes, all by exhaustion over the carrier."""
import itertools
import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from reslat.config import get_settings
from reslat.exceptions import BadPartition, InvalidParameters
from reslat.models import ONE, ConjugateScheme, FinRL, IdentityCheck, IdentityKind, IdentitySpec, Term, var
from reslat.services import finalg

logger = logging.getLogger(__name__)


def _power(alg: FinRL, x: int, n: int) -> int:
    value = alg.unit
    for _ in range(n):
        value = alg.mul[value][x]
    return value


def _product(alg: FinRL, factors: Sequence[int]) -> int:
    value = alg.unit
    for x in factors:
        value = alg.mul[value][x]
    return value


def check_knotted(alg: FinRL, m: int, n: int) -> IdentityCheck:
    """x^m ≤ x^n for every x."""
    if m == n or m < 0 or n < 0:
        raise InvalidParameters(f"knotted exponents must be distinct and non-negative, got {m}, {n}")
    equation = f"x^{m} <= x^{n}"
    for x in alg.elements:
        if not alg.le(_power(alg, x, m), _power(alg, x, n)):
            return IdentityCheck(holds=False, equation=equation, witness=(x,))
    return IdentityCheck(holds=True, equation=equation)


def validate_partition(partition: Sequence[int]) -> Tuple[int, ...]:
    """Exponents (a_0, …, a_n) with Σ a_i = n + 1, not all equal to 1."""
    exponents = tuple(partition)
    if len(exponents) < 2:
        raise BadPartition("weak commutativity needs at least two exponents", witness=exponents)
    if any(a < 0 for a in exponents):
        raise BadPartition("exponents must be non-negative", witness=exponents)
    if sum(exponents) != len(exponents):
        raise BadPartition(f"exponents must sum to {len(exponents)}", witness=exponents)
    if all(a == 1 for a in exponents):
        raise BadPartition("the all-ones vector gives a trivial identity", witness=exponents)
    return exponents


def check_weak_commutativity(alg: FinRL, partition: Sequence[int]) -> IdentityCheck:
    """x y1 x y2 ⋯ yn x = x^{a0} y1 x^{a1} ⋯ yn x^{an} for all x, y1..yn."""
    exponents = validate_partition(partition)
    n = len(exponents) - 1
    equation = "weak commutativity " + ",".join(map(str, exponents))
    for values in itertools.product(alg.elements, repeat=n + 1):
        x, ys = values[0], values[1:]
        left_factors: List[int] = [x]
        right = _power(alg, x, exponents[0])
        for y, a in zip(ys, exponents[1:]):
            left_factors += [y, x]
            right = alg.mul[alg.mul[right][y]][_power(alg, x, a)]
        if _product(alg, left_factors) != right:
            return IdentityCheck(holds=False, equation=equation, witness=values)
    return IdentityCheck(holds=True, equation=equation)


def check_commutative(alg: FinRL) -> IdentityCheck:
    for x, y in itertools.combinations(alg.elements, 2):
        if alg.mul[x][y] != alg.mul[y][x]:
            return IdentityCheck(holds=False, equation="xy = yx", witness=(x, y))
    return IdentityCheck(holds=True, equation="xy = yx")


def check_identity(alg: FinRL, spec: IdentitySpec) -> IdentityCheck:
    """Dispatch an IdentitySpec to its checker."""
    if spec.kind is IdentityKind.KNOTTED:
        return check_knotted(alg, *spec.exponents)
    if spec.kind is IdentityKind.WEAK_COMMUTATIVITY:
        return check_weak_commutativity(alg, spec.exponents)
    return check_commutative(alg)


# Conjugate equation schemes. Each equation lists the terms t_i of
# 1 = γ1(t1) ∨ … ∨ γk(tk).

_X, _Y, _Z, _W = var("x"), var("y"), var("z"), var("w")
_U, _V = var("u"), var("v")
_X1, _X2, _X3, _X4 = var("x1"), var("x2"), var("x3"), var("x4")

_SRL = [
    ("srl-1", [_X.under(_Y), _Y.under(_X), (_X & _Y).under(_Z)]),
    ("srl-2", [_X.under(_Y), _Y.under(_X), _W.under(_X | _Y)]),
]

_SCHEMES: Dict[ConjugateScheme, List[Tuple[str, List[Term]]]] = {
    ConjugateScheme.SRL: _SRL,
    ConjugateScheme.M: _SRL + [
        (
            "m",
            [
                (_X1 | _X2).under(_X1),
                (_X1 | _X2 | _X3).under(_X1 | _X2),
                (_X1 | _X2 | _X3 | _X4).under(_X1 | _X2 | _X3),
            ],
        )
    ],
    ConjugateScheme.MG: _SRL + [
        (
            "mg",
            [_U.under(_V), _V.under(_U), _X.under(_U & _V), (_U | _V).under(_X), _X * _X.under(ONE)],
        )
    ],
    ConjugateScheme.COMPACT: _SRL + [
        (
            "compact-1",
            [_U.under(_V), _V.under(_U), _X.under(_U & _V), (_U | _V).under((_X * (_U | _V)) & ((_U | _V) * _X))],
        ),
        ("compact-2", [_U.under(_V), _V.under(_U), (_U | _V).under(_X), ((_X * _U) & (_X * _V)).under(_X * (_U & _V))]),
    ],
}


def scheme_equations(scheme: ConjugateScheme) -> List[Tuple[str, List[Term]]]:
    return _SCHEMES[ConjugateScheme(scheme)]


def conjugate_levels(alg: FinRL, p: int, depth: int) -> List[FrozenSet[int]]:
    """Values of the iterated conjugates of p, cumulatively by depth.

    Level 0 is {p ∧ 1}; each further level adds c\\(v·c) ∧ 1 and
    (c·v)/c ∧ 1 for every element c and every earlier value v.
    """
    one = alg.unit
    current = frozenset({alg.meet[p][one]})
    levels = [current]
    for _ in range(depth):
        grown = set(current)
        for v in current:
            for c in alg.elements:
                grown.add(alg.meet[alg.ldiv[c][alg.mul[v][c]]][one])
                grown.add(alg.meet[alg.rdiv[alg.mul[c][v]][c]][one])
        current = frozenset(grown)
        levels.append(current)
    return levels


def _equation_witness(
    alg: FinRL, terms: List[Term], depth: int, levels: Dict[int, List[FrozenSet[int]]], max_depth: int
) -> Optional[Tuple[int, ...]]:
    names = sorted(set().union(*(t.variables() for t in terms)))
    for values in itertools.product(alg.elements, repeat=len(names)):
        assignment = dict(zip(names, values))
        choices = []
        for t in terms:
            p = finalg.eval_term(alg, t, assignment)
            if p not in levels:
                levels[p] = conjugate_levels(alg, p, max_depth)
            choices.append(sorted(levels[p][depth]))
        for picked in itertools.product(*choices):
            joined = picked[0]
            for v in picked[1:]:
                joined = alg.join[joined][v]
            if joined != alg.unit:
                return tuple(values) + tuple(picked)
    return None


def check_conjugate_equations(
    alg: FinRL, scheme: ConjugateScheme, depth: Optional[int] = None
) -> IdentityCheck:
    """Check a scheme for every conjugate of depth ≤ depth and every assignment.

    A positive answer means the scheme holds up to that depth. The witness
    lists the variable values (alphabetically by name) followed by the
    chosen conjugate values; ``equation`` names the equation and the least
    depth at which it fails.
    """
    if depth is None:
        depth = get_settings().CONJUGATE_DEPTH
    if depth < 0:
        raise InvalidParameters(f"conjugate depth must be non-negative, got {depth}")
    scheme = ConjugateScheme(scheme)
    levels: Dict[int, List[FrozenSet[int]]] = {}
    for d in range(depth + 1):
        for name, terms in scheme_equations(scheme):
            witness = _equation_witness(alg, terms, d, levels, depth)
            if witness is not None:
                logger.debug(f"Equation {name} fails at depth {d}: {witness}")
                return IdentityCheck(holds=False, equation=f"{name} depth {d}", witness=witness)
    return IdentityCheck(holds=True, equation=f"{scheme.value} up to depth {depth}")
