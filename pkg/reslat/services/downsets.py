"""Representable downsets of signatures and their Z-closedness.

A downset is a finite union of three component kinds:

* ``Principal(g)``: ↓g.
* ``ExpTower(b, n)``: the union of ↓m_k over k ≥ 1, where m_k is b with the
  part k added at the n-th prime.
* ``PrimeFamily(s, n0, b)``: the union of ↓(b ∨ s@p) over prime indices
  p ≥ n0, where s@p is the signature with partition s at p only.

All decisions below reduce to finitely many signature comparisons. Past
the largest exponent L occurring in the inputs, towers behave uniformly in
k, and past the largest prime index occurring, families behave uniformly
in p.

Intersections of two components stay representable:

===========  ===========  =====================================================
left         right        result
===========  ===========  =====================================================
↓g           ↓h           ↓(g ∧ h)
↓g           tower        ↓(g ∧ m_K)
↓g           family       ↓(g ∧ (b ∨ s@p)) for p ∈ primes(g), and ↓(g ∧ b)
tower        tower        same prime: tower over b1 ∧ b2; otherwise ↓(m_K ∧ m′_K)
tower        family       ↓(m_K ∧ (b ∨ s@p)) for p ∈ primes(m_K), and ↓(m_K ∧ b)
family       family       family (b1 ∧ b2, s1 ∧ s2, max n0) plus principals for
                          the finitely many primes where the bases are nonzero
===========  ===========  =====================================================
"""
import logging
from typing import Iterable, List, Sequence

from reslat.exceptions import ContainmentViolation
from reslat.models import DownsetDesc, ExpTower, GroupSig, PFDownset, PrimeFamily, Principal, ZClosureResult
from reslat.models.signature import canonical_partition
from reslat.services.signatures import exp_of, primes_of, sig_join, sig_leq, sig_meet

logger = logging.getLogger(__name__)


def _at(shape, p: int) -> GroupSig:
    return GroupSig(torsion={p: shape})


def family_member(family: PrimeFamily, p: int) -> GroupSig:
    """b ∨ s@p."""
    return sig_join(family.base, _at(family.shape, p))


def _sigs(component) -> List[GroupSig]:
    if isinstance(component, Principal):
        return [component.sig]
    if isinstance(component, ExpTower):
        return [component.base, _at((1,), component.index)]
    return [component.base, _at(component.shape, component.start_index)]


def _exp_bound(components: Iterable) -> int:
    """1 + the largest exponent occurring in the components."""
    return 1 + max((exp_of(s) for c in components for s in _sigs(c)), default=0)


def _index_bound(components: Iterable) -> int:
    """1 + the largest prime index occurring in the components."""
    return 1 + max((n for c in components for s in _sigs(c) for n in primes_of(s)), default=0)


def component_contains(component, a: GroupSig) -> bool:
    if isinstance(component, Principal):
        return sig_leq(a, component.sig)
    if isinstance(component, ExpTower):
        return sig_leq(a, component.member(max(exp_of(a), 1)))
    fresh = max(component.start_index, 1 + max(primes_of(a) + primes_of(component.base), default=0))
    candidates = [p for p in primes_of(a) if p >= component.start_index] + [fresh]
    return any(sig_leq(a, family_member(component, p)) for p in candidates)


def downset_contains(d: DownsetDesc, a: GroupSig) -> bool:
    """Whether a lies below some member of some component."""
    return any(component_contains(c, a) for c in d.components)


def downset_union(d: DownsetDesc, e: DownsetDesc) -> DownsetDesc:
    return DownsetDesc(components=d.components + e.components)


def _principals(sigs: Iterable[GroupSig]) -> List[Principal]:
    return [Principal(sig=s) for s in sigs]


def _family_meet(f: PrimeFamily, g: GroupSig) -> List[Principal]:
    """↓g ∩ f for a single signature g."""
    hits = [sig_meet(g, family_member(f, p)) for p in primes_of(g) if p >= f.start_index]
    return _principals(hits + [sig_meet(g, f.base)])


def _intersect_components(c, d, bound: int) -> List:
    if isinstance(c, Principal) and isinstance(d, Principal):
        return [Principal(sig=sig_meet(c.sig, d.sig))]
    if isinstance(d, Principal):
        c, d = d, c
    if isinstance(c, Principal):
        if isinstance(d, ExpTower):
            return [Principal(sig=sig_meet(c.sig, d.member(bound)))]
        return _family_meet(d, c.sig)

    if isinstance(c, PrimeFamily) and isinstance(d, ExpTower):
        c, d = d, c
    if isinstance(c, ExpTower) and isinstance(d, ExpTower):
        if c.index == d.index:
            return [ExpTower(base=sig_meet(c.base, d.base), index=c.index)]
        return [Principal(sig=sig_meet(c.member(bound), d.member(bound)))]
    if isinstance(c, ExpTower):
        return _family_meet(d, c.member(bound))

    start = max(c.start_index, d.start_index)
    shape = canonical_partition(min(x, y) for x, y in zip(c.shape, d.shape))
    result: List = [PrimeFamily(shape=shape, start_index=start, base=sig_meet(c.base, d.base))]
    generic = sig_meet(c.base, d.base)
    base_primes = sorted(set(primes_of(c.base)) | set(primes_of(d.base)))
    left = [family_member(c, p) for p in primes_of(d.base) if p >= c.start_index]
    right = [family_member(d, q) for q in primes_of(c.base) if q >= d.start_index]
    sigs = [sig_meet(family_member(c, p), family_member(d, p)) for p in base_primes if p >= start]
    sigs.append(generic)
    sigs += [sig_meet(m, d.base) for m in left]
    sigs += [sig_meet(c.base, m) for m in right]
    sigs += [sig_meet(m, n) for m in left for n in right]
    return result + _principals(sigs)


def simplify(d: DownsetDesc) -> DownsetDesc:
    """Drop principal components already covered by the others."""
    kept: List = []
    components = list(d.components)
    for i, c in enumerate(components):
        rest = DownsetDesc(components=tuple(kept + components[i + 1:]))
        if isinstance(c, Principal) and downset_contains(rest, c.sig):
            continue
        kept.append(c)
    return DownsetDesc(components=tuple(kept))


def downset_intersect(d: DownsetDesc, e: DownsetDesc) -> DownsetDesc:
    bound = _exp_bound(d.components + e.components)
    parts: List = []
    for c in d.components:
        for f in e.components:
            parts += _intersect_components(c, f, bound)
    return simplify(DownsetDesc(components=tuple(parts)))


def component_subset(component, e: DownsetDesc, exp_bound: int, index_bound: int) -> bool:
    if isinstance(component, Principal):
        return downset_contains(e, component.sig)
    if isinstance(component, ExpTower):
        return downset_contains(e, component.member(exp_bound))
    last = max(index_bound, component.start_index)
    return all(
        downset_contains(e, family_member(component, p)) for p in range(component.start_index, last + 1)
    )


def downset_subset(d: DownsetDesc, e: DownsetDesc) -> bool:
    """Whether every member of d lies in e."""
    everything = d.components + e.components
    exp_bound, index_bound = _exp_bound(everything), _index_bound(everything)
    return all(component_subset(c, e, exp_bound, index_bound) for c in d.components)


def _z_candidates(component, bound: int) -> Sequence[GroupSig]:
    """Points a above which the component has unbounded exponents or primes."""
    if component.kind == "principal" or component.base.rank_flag:
        return []
    if isinstance(component, ExpTower):
        return [component.base] + [component.member(k) for k in range(1, bound + 1)]
    return [component.base]


def is_z_closed(d: DownsetDesc) -> ZClosureResult:
    """Check that a ∨ (1; 0; …) ∈ D whenever D ∩ ↑a has unbounded exponents or primes.

    Only the bases of towers and families and the tower members up to the
    exponent bound can violate the condition; any other such a lies below
    one of them.
    """
    bound = _exp_bound(d.components)
    for component in d.components:
        for a in _z_candidates(component, bound):
            missing = a.with_rank(1)
            if not downset_contains(d, missing):
                logger.debug(f"Z-closure fails at {a}: {missing} is missing")
                return ZClosureResult(closed=False, violating=a, missing=missing)
    return ZClosureResult(closed=True)


def pf_is_z_closed(d: PFDownset) -> bool:
    """All four fibres Z-closed, after checking D1, D2, D3 ⊆ D0."""
    for i, fibre in enumerate(d.fibres[1:], start=1):
        if not downset_subset(fibre, d.d0):
            raise ContainmentViolation(f"fibre D{i} is not contained in D0", witness=(i,))
    return all(is_z_closed(fibre).closed for fibre in d.fibres)
