"""Signatures of finitely generated abelian groups.

A signature (m; λ_1; λ_2; …) records a torsion-free rank flag m ∈ {0, 1}
and, for the n-th prime p_n, the partition λ_n of exponents of the
p_n-primary part. Signatures are ordered pointwise, which on finite groups
is the "is isomorphic to a subgroup of" order.
"""
import itertools
import logging
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from sympy import factorint, prime, primepi

from reslat.exceptions import InfiniteGroup, InvalidFactor, InvalidParameters
from reslat.models import FinRL, GroupSig, ZKind
from reslat.models.signature import Partition, canonical_partition
from reslat.services.construct import abelian_group_monoid, make_rab

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def prime_at(n: int) -> int:
    """The n-th prime, 1-based."""
    if n < 1:
        raise InvalidParameters(f"prime index must be at least 1, got {n}")
    return int(prime(n))


@lru_cache(maxsize=None)
def prime_index(p: int) -> int:
    """Position of the prime p in 2, 3, 5, …"""
    if p < 2 or factorint(p) != {p: 1}:
        raise InvalidParameters(f"{p} is not a prime")
    return int(primepi(p))


def _padded(a: Partition, b: Partition) -> Tuple[Tuple[int, int], ...]:
    width = max(len(a), len(b))
    return tuple(zip(a + (0,) * (width - len(a)), b + (0,) * (width - len(b))))


def partition_leq(a: Partition, b: Partition) -> bool:
    return all(x <= y for x, y in _padded(a, b))


def exp_of(a: GroupSig) -> int:
    """Largest exponent in the torsion part, 0 when there is none."""
    return max((parts[0] for _, parts in a.torsion), default=0)


def primes_of(a: GroupSig) -> Tuple[int, ...]:
    """Prime indices with a nonzero partition."""
    return a.indices


def sig_leq(a: GroupSig, b: GroupSig) -> bool:
    if a.rank_flag > b.rank_flag:
        return False
    return all(partition_leq(parts, b.partition(n)) for n, parts in a.torsion)


def _combine(a: GroupSig, b: GroupSig, pick, rank: int) -> GroupSig:
    indices = sorted(set(a.indices) | set(b.indices))
    torsion = {
        n: canonical_partition(pick(x, y) for x, y in _padded(a.partition(n), b.partition(n)))
        for n in indices
    }
    return GroupSig(rank_flag=rank, torsion=torsion)


def sig_join(a: GroupSig, b: GroupSig) -> GroupSig:
    return _combine(a, b, max, max(a.rank_flag, b.rank_flag))


def sig_meet(a: GroupSig, b: GroupSig) -> GroupSig:
    return _combine(a, b, min, min(a.rank_flag, b.rank_flag))


def sig_of_invariant_factors(factors: Sequence[int], rank: int = 0) -> GroupSig:
    """Signature of Z^rank × Z_{n1} × … × Z_{nk}.

    Any positive rank collapses to the flag 1.
    """
    if rank < 0:
        raise InvalidParameters(f"rank must be non-negative, got {rank}")
    exponents = {}
    for n in factors:
        if n < 2:
            raise InvalidFactor(f"invariant factor {n} is smaller than 2", witness=(n,))
        for p, e in factorint(n).items():
            exponents.setdefault(prime_index(int(p)), []).append(int(e))
    if rank > 1:
        logger.debug(f"Rank {rank} collapsed to the flag 1")
    return GroupSig(rank_flag=min(rank, 1), torsion=exponents)


def cyclic_factors(a: GroupSig) -> List[int]:
    """Prime-power orders of the cyclic factors of the torsion part."""
    return [prime_at(n) ** e for n, parts in a.torsion for e in parts]


def invariant_factors(a: GroupSig) -> List[int]:
    """Invariant factors d_1 | d_2 | … of the torsion part."""
    length = max((len(parts) for _, parts in a.torsion), default=0)
    factors = []
    for j in range(length):
        d = 1
        for n, parts in a.torsion:
            if j < len(parts):
                d *= prime_at(n) ** parts[j]
        factors.append(d)
    return sorted(factors)


def group_order(a: GroupSig) -> int:
    """Order of the torsion part."""
    order = 1
    for q in cyclic_factors(a):
        order *= q
    return order


def partitions(n: int, largest: int = None) -> Iterator[Partition]:
    """Partitions of n as weakly decreasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def signatures_up_to(order: int) -> List[GroupSig]:
    """Every finite signature whose group has order at most ``order``."""
    found = []
    for n in range(1, order + 1):
        primes = sorted(factorint(n).items())
        choices = [[(prime_index(int(p)), parts) for parts in partitions(int(e))] for p, e in primes]
        for combo in itertools.product(*choices):
            found.append(GroupSig(torsion=dict(combo)))
    return found


def sig_to_algebra(a: GroupSig, kind: ZKind) -> FinRL:
    """make_rab(G ∪ {⊤}, kind) for the finite group G with signature a."""
    if a.rank_flag:
        raise InfiniteGroup("a group with a free part has no finite table", witness=(a.rank_flag,))
    return make_rab(abelian_group_monoid(invariant_factors(a)), ZKind(kind))
