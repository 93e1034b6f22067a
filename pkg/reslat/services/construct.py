"""Explicit constructions of residuated lattices.

Constructors emit the carrier convention bot = 0 and top = size-1. Division
tables come from closed forms and, when ``CROSS_CHECK_DIVISIONS`` is set,
are compared entrywise against ``finalg.derive_residuals``.
"""
import itertools
import logging
from typing import List, Optional, Sequence, Tuple

from reslat.config import get_settings
from reslat.exceptions import (
    ConstructionMismatch,
    InvalidFactor,
    InvalidParameters,
    NotTopCancellative,
    ReslatError,
    ZeroNotAbsorbing,
)
from reslat.models import FinRL, FiniteMonoid, LatticeTables, Orientation, Table, ZKind
from reslat.services import finalg
from reslat.services.isomorphism import find_monoid_isomorphism

logger = logging.getLogger(__name__)

_GENERATOR_LETTERS = "abcdefgh"


def assemble(
    lattice: LatticeTables,
    mul: Sequence[Sequence[int]],
    unit: int,
    ldiv: Sequence[Sequence[int]],
    rdiv: Sequence[Sequence[int]],
    names: Optional[Sequence[str]],
    label: str,
) -> FinRL:
    """Build a FinRL from closed-form tables, cross-checking the divisions."""
    if names is not None:
        duplicates = sorted({n for n in names if list(names).count(n) > 1})
        if duplicates:
            raise InvalidParameters(f"{label}: duplicate element names {duplicates}", witness=tuple(duplicates))
    mul_t = tuple(tuple(row) for row in mul)
    ldiv_t = tuple(tuple(row) for row in ldiv)
    rdiv_t = tuple(tuple(row) for row in rdiv)
    if get_settings().CROSS_CHECK_DIVISIONS:
        derived_l, derived_r = finalg.derive_residuals(lattice, mul_t, unit)
        for name, closed, derived in (("ldiv", ldiv_t, derived_l), ("rdiv", rdiv_t, derived_r)):
            if closed != derived:
                x, y = next(
                    (x, y)
                    for x in range(lattice.size)
                    for y in range(lattice.size)
                    if closed[x][y] != derived[x][y]
                )
                raise ConstructionMismatch(
                    f"{label}: closed-form {name} differs from derived residual at ({x}, {y})",
                    witness=(name, x, y, closed[x][y], derived[x][y]),
                    law=name,
                )
    logger.debug(f"Built {label} on {lattice.size} elements")
    return FinRL(
        size=lattice.size,
        leq=lattice.leq,
        meet=lattice.meet,
        join=lattice.join,
        mul=mul_t,
        ldiv=ldiv_t,
        rdiv=rdiv_t,
        unit=unit,
        bot=lattice.bot,
        top=lattice.top,
        names=tuple(names) if names is not None else None,
    )


def make_mx_lattice(n: int) -> LatticeTables:
    """The lattice ⊥ < X < ⊤ with X an antichain of n elements (⊥ = 0, ⊤ = n+1)."""
    if n < 0:
        raise InvalidParameters(f"|X| must be non-negative, got {n}")
    size = n + 2
    top = size - 1
    leq = [[x == y or x == 0 or y == top for y in range(size)] for x in range(size)]
    return finalg.validate_order(leq)


def check_zero_cancellative(mon: FiniteMonoid, zero: Optional[int] = None) -> bool:
    """True iff xy = xz ≠ 0 implies y = z and yx = zx ≠ 0 implies y = z."""
    zero = mon.zero if zero is None else zero
    if zero is None:
        raise InvalidParameters("monoid has no designated zero")
    n = mon.size
    for x in range(n):
        if mon.mul[zero][x] != zero or mon.mul[x][zero] != zero:
            raise ZeroNotAbsorbing(f"zero {zero} does not absorb {x}", witness=(x,))
    for x in range(n):
        left = [mon.mul[x][y] for y in range(n) if mon.mul[x][y] != zero]
        right = [mon.mul[y][x] for y in range(n) if mon.mul[y][x] != zero]
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            return False
    return True


def _kind_mul(kind: ZKind, i: int, j: int) -> Optional[int]:
    """Product of the i-th and j-th elements of Z, or None for ⊥."""
    if kind is ZKind.NILPOTENT:
        return None
    if kind is ZKind.IDEMPOTENT:
        return 0
    return i if i == j else None


def make_rab(a: FiniteMonoid, kind: ZKind) -> FinRL:
    """R_{A,B}: A's zero becomes ⊤ and B = Z ∪ {⊥} is the monoid of ``kind``.

    Carrier: ⊥, the nonzero elements of A in index order, the elements of Z,
    then ⊤. Elements of A act as identities on B.
    """
    kind = ZKind(kind)
    if a.zero is None:
        raise InvalidParameters("A must have a designated zero")
    finalg.check_monoid(a.mul, a.unit)
    if not check_zero_cancellative(a):
        raise NotTopCancellative("A is not ⊤-cancellative", law="zero_cancellative")

    nonzero = a.nonzero
    n_u, n_z = len(nonzero), kind.size
    size = n_u + n_z + 2
    bot, top = 0, size - 1
    index = {x: 1 + i for i, x in enumerate(nonzero)}
    index[a.zero] = top
    source = {v: k for k, v in index.items()}
    z_elems = [1 + n_u + i for i in range(n_z)]
    in_a = set(index.values())
    in_b = set(z_elems) | {bot}

    def mul(x: int, y: int) -> int:
        if x == bot or y == bot:
            return bot
        if x in in_a and y in in_a:
            return index[a.mul[source[x]][source[y]]]
        if x in in_a:
            return y
        if y in in_a:
            return x
        product = _kind_mul(kind, z_elems.index(x), z_elems.index(y))
        return bot if product is None else z_elems[product]

    lattice = make_mx_lattice(n_u + n_z)
    le = lattice.leq
    table = [[mul(x, y) for y in range(size)] for x in range(size)]

    def bimp(x: int, z: int) -> int:
        # Implication of the subalgebra B ∪ {⊤}
        if le[x][z]:
            return top
        if x == top:
            return z
        if kind is ZKind.BOOLEAN:
            return next(b for b in z_elems if b != x)
        return x if kind is ZKind.NILPOTENT else bot

    def solve(x: int, z: int, left: bool) -> int:
        for y in in_a:
            if (table[x][y] if left else table[y][x]) == z:
                return y
        return bot

    def div(x: int, z: int, left: bool) -> int:
        if x == bot or z == top:
            return top
        if z == bot:
            return bimp(x, bot) if x in in_b else bot
        if x in in_a:
            return solve(x, z, left) if z in in_a else z
        return bimp(x, bot) if z in in_a else bimp(x, z)

    ldiv = [[div(x, z, True) for z in range(size)] for x in range(size)]
    rdiv = [[div(x, z, False) for x in range(size)] for z in range(size)]

    names = ["bot"]
    names += [a.label(x) if a.names is not None else ("1" if x == a.unit else f"u{i}") for i, x in enumerate(nonzero)]
    names += list(kind.labels)
    names.append("top")
    return assemble(lattice, table, index[a.unit], ldiv, rdiv, names, f"R_(A,B) kind {int(kind)}")


def _element_name(exponents: Sequence[int]) -> str:
    parts = []
    for letter, e in zip(_GENERATOR_LETTERS, exponents):
        if e:
            parts.append(letter if e == 1 else f"{letter}{e}")
    return "".join(parts) or "1"


def abelian_group_monoid(orders: Sequence[int]) -> FiniteMonoid:
    """Z_{n1} × … × Z_{nk} with an adjoined absorbing zero (the last index)."""
    for n in orders:
        if n < 2:
            raise InvalidFactor(f"invariant factor {n} is smaller than 2", witness=(n,))
    if len(orders) > len(_GENERATOR_LETTERS):
        raise InvalidParameters(f"at most {len(_GENERATOR_LETTERS)} cyclic factors are supported")
    elements = list(itertools.product(*(range(n) for n in orders)))
    position = {e: i for i, e in enumerate(elements)}
    zero = len(elements)
    size = zero + 1

    def mul(i: int, j: int) -> int:
        if i == zero or j == zero:
            return zero
        total = tuple((x + y) % n for x, y, n in zip(elements[i], elements[j], orders))
        return position[total]

    return FiniteMonoid(
        size=size,
        mul=tuple(tuple(mul(i, j) for j in range(size)) for i in range(size)),
        unit=0,
        zero=zero,
        names=tuple(_element_name(e) for e in elements) + ("top",),
    )


def make_mg(invariant_factors: Sequence[int]) -> FinRL:
    """M_G for the finite abelian group with the given invariant factors."""
    return make_rab(abelian_group_monoid(invariant_factors), ZKind.NONE)


def cyclic_index(n: int, r: int, s: int) -> int:
    """[n]_r^s: n itself below r+s, otherwise reduced into r..r+s-1."""
    if n < r + s:
        return n
    return r + (n - r) % s


def _cyclic_ldiv_up(i: int, j: int, r: int, s: int) -> Optional[int]:
    if j < r:
        return j - i if i <= j else None
    return j - i + ((r + s - 1 + i - j) // s) * s


def _cyclic_ldiv_down(i: int, j: int, r: int, s: int) -> int:
    if i <= j:
        return j - i
    return j - i + -(-(i - j) // s) * s


def make_cyclic_url(r: int, s: int, orient: Orientation) -> FinRL:
    """Compact URL on ⊥ < {1, a, …, a^(r+s-1)} < ⊤ for the cyclic monoid of index r and period s.

    Up orientation orders a^i ≤ a^j when j = i + ns; down is the dual.
    """
    orient = Orientation(orient)
    if r < 0 or s < 1 or r + s < 2:
        raise InvalidParameters(f"need r >= 0, s >= 1 and r + s >= 2, got r={r}, s={s}")
    m = r + s
    size = m + 2
    bot, top = 0, size - 1

    def power_le(i: int, j: int) -> bool:
        if orient is Orientation.DOWN:
            i, j = j, i
        return j >= i and (j - i) % s == 0

    leq = [[False] * size for _ in range(size)]
    for x in range(size):
        for y in range(size):
            if x == y or x == bot or y == top:
                leq[x][y] = True
            elif x != top and y != bot:
                leq[x][y] = power_le(x - 1, y - 1)
    lattice = finalg.validate_order(leq)

    def mul(x: int, y: int) -> int:
        if x == bot or y == bot:
            return bot
        if x == top or y == top:
            return top
        return 1 + cyclic_index((x - 1) + (y - 1), r, s)

    def div(x: int, z: int) -> int:
        if x == bot or z == top:
            return top
        if x == top or z == bot:
            return bot
        i, j = x - 1, z - 1
        if orient is Orientation.UP:
            k = _cyclic_ldiv_up(i, j, r, s)
        else:
            k = _cyclic_ldiv_down(i, j, r, s)
        return bot if k is None else 1 + k

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    ldiv = [[div(x, z) for z in range(size)] for x in range(size)]
    rdiv = [[div(x, z) for x in range(size)] for z in range(size)]
    names = ["bot", "1", "a"] + [f"a{i}" for i in range(2, m)] + ["top"]
    return assemble(lattice, table, 1, ldiv, rdiv, names, f"cyclic URL r={r} s={s} {orient.value}")


def direct_product(a: FinRL, b: FinRL) -> FinRL:
    """Componentwise product; (x, y) has index x * |B| + y."""
    nb = b.size
    size = a.size * nb

    def split(i: int) -> Tuple[int, int]:
        return divmod(i, nb)

    def lift(table_a: Table, table_b: Table) -> Table:
        rows = []
        for i in range(size):
            x1, y1 = split(i)
            rows.append(
                tuple(table_a[x1][x2] * nb + table_b[y1][y2] for x2, y2 in map(split, range(size)))
            )
        return tuple(rows)

    leq = tuple(
        tuple(a.leq[split(i)[0]][split(j)[0]] and b.leq[split(i)[1]][split(j)[1]] for j in range(size))
        for i in range(size)
    )

    def constant(x: Optional[int], y: Optional[int]) -> Optional[int]:
        return None if x is None or y is None else x * nb + y

    return FinRL(
        size=size,
        leq=leq,
        meet=lift(a.meet, b.meet),
        join=lift(a.join, b.join),
        mul=lift(a.mul, b.mul),
        ldiv=lift(a.ldiv, b.ldiv),
        rdiv=lift(a.rdiv, b.rdiv),
        unit=a.unit * nb + b.unit,
        bot=constant(a.bot, b.bot),
        top=constant(a.top, b.top),
        names=tuple(f"({a.label(x)},{b.label(y)})" for x in a.elements for y in b.elements),
    )


def heyting_algebra(leq: Sequence[Sequence[bool]], names: Optional[Sequence[str]] = None) -> FinRL:
    """The Heyting algebra of a finite distributive lattice (product = meet)."""
    lattice = finalg.validate_order(leq)
    return finalg.build_algebra(lattice.leq, lattice.meet, lattice.top, names=names)


def godel_chain(n: int) -> FinRL:
    """The n-element Heyting chain 0 < 1 < … < n-1."""
    if n < 1:
        raise InvalidParameters(f"chain length must be positive, got {n}")
    leq = [[x <= y for y in range(n)] for x in range(n)]
    return heyting_algebra(leq)


def _monoid_tables(size: int):
    """Candidate tables with unit 0 and zero size-1 whose nonzero products are row/column injective."""
    zero = size - 1
    free = [(x, y) for x in range(1, zero) for y in range(1, zero)]
    table = [[0] * size for _ in range(size)]
    for x in range(size):
        for y in range(size):
            if x == zero or y == zero:
                table[x][y] = zero
            elif x == 0:
                table[x][y] = y
            elif y == 0:
                table[x][y] = x

    def injective(x: int, y: int) -> bool:
        value = table[x][y]
        if value == zero:
            return True
        # x·1 = x and 1·y = y already occupy these values
        if value in (x, y):
            return False
        return all(table[x][w] != value for w in range(1, y)) and all(
            table[w][y] != value for w in range(1, x)
        )

    def fill(k: int):
        if k == len(free):
            yield tuple(tuple(row) for row in table)
            return
        x, y = free[k]
        for value in range(size):
            table[x][y] = value
            if injective(x, y):
                yield from fill(k + 1)
        table[x][y] = 0

    yield from fill(0)


def zero_cancellative_monoids(size: int) -> List[FiniteMonoid]:
    """Every ⊤-cancellative monoid with zero on ``size`` elements, up to isomorphism.

    Index 0 is the unit and size-1 the zero; for size 1 they coincide.
    """
    if size < 1:
        raise InvalidParameters(f"monoid size must be positive, got {size}")
    if size == 1:
        return [FiniteMonoid(size=1, mul=((0,),), unit=0, zero=0, names=("top",))]
    found: List[FiniteMonoid] = []
    for table in _monoid_tables(size):
        try:
            finalg.check_monoid(table, 0)
        except ReslatError:
            continue
        mon = FiniteMonoid(size=size, mul=table, unit=0, zero=size - 1)
        if not check_zero_cancellative(mon):
            continue
        if any(find_monoid_isomorphism(mon, other) is not None for other in found):
            continue
        found.append(mon)
    logger.info(f"Found {len(found)} ⊤-cancellative monoids of size {size}")
    return found
