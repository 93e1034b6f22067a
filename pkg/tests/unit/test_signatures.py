"""Tests for reslat.services.signatures module."""
import itertools

import pytest

from reslat.exceptions import InfiniteGroup, InvalidFactor, InvalidParameters
from reslat.models import GroupSig, ZKind
from reslat.services import finalg, signatures
from tests.oracles import abelian_embeds


class TestPrimes:
    """Tests for prime_at and prime_index."""

    def test_round_trip(self):
        """The 4th prime is 7."""
        assert signatures.prime_at(4) == 7
        assert signatures.prime_index(7) == 4

    @pytest.mark.parametrize("p", [1, 9, 15])
    def test_non_primes(self, p):
        """Composite numbers and 1 have no index."""
        with pytest.raises(InvalidParameters):
            signatures.prime_index(p)


class TestOrder:
    """Tests for sig_leq, sig_join and sig_meet."""

    def test_exp(self):
        """The largest exponent over all primes."""
        sig = GroupSig.of(rank_flag=1, p1=(2, 1), p2=(3, 1, 1), p4=(2, 1, 1))
        assert signatures.exp_of(sig) == 3
        assert signatures.primes_of(sig) == (1, 2, 4)

    def test_leq(self):
        """Z_2 ≤ Z_4 but Z_2 × Z_2 is not below Z_4."""
        assert signatures.sig_leq(GroupSig.of(p1=(1,)), GroupSig.of(p1=(2,)))
        assert not signatures.sig_leq(GroupSig.of(p1=(1, 1)), GroupSig.of(p1=(2,)))
        assert not signatures.sig_leq(GroupSig(rank_flag=1), GroupSig())

    def test_join_and_meet(self):
        """Pointwise on padded partitions."""
        a, b = GroupSig.of(p1=(1, 1)), GroupSig.of(p1=(2,), p2=(1,))
        assert signatures.sig_join(a, b) == GroupSig.of(p1=(2, 1), p2=(1,))
        assert signatures.sig_meet(a, b) == GroupSig.of(p1=(1,))

    def test_order_matches_subgroup_embedding(self):
        """Pointwise order agrees with brute-force embedding for groups of order ≤ 8."""
        sigs = signatures.signatures_up_to(8)
        assert len(sigs) == 11
        for a, b in itertools.product(sigs, repeat=2):
            expected = abelian_embeds(signatures.invariant_factors(a), signatures.invariant_factors(b))
            assert signatures.sig_leq(a, b) == expected, (a, b)


class TestInvariantFactors:
    """Tests for the conversions between signatures and invariant factors."""

    def test_from_factors(self):
        """Z_2 × Z_4 has 2-part (2, 1)."""
        assert signatures.sig_of_invariant_factors([2, 4]) == GroupSig.of(p1=(2, 1))

    def test_rank_collapses(self):
        """Any free rank becomes the flag 1."""
        assert signatures.sig_of_invariant_factors([3], rank=3).rank_flag == 1

    def test_rejects_small_factor(self):
        """Factors below 2 are rejected."""
        with pytest.raises(InvalidFactor):
            signatures.sig_of_invariant_factors([1])

    def test_to_factors(self):
        """(2,1) at 2 and (1) at 3 give Z_2 × Z_12."""
        sig = GroupSig.of(p1=(2, 1), p2=(1,))
        assert signatures.invariant_factors(sig) == [2, 12]
        assert signatures.group_order(sig) == 24
        assert sorted(signatures.cyclic_factors(sig)) == [2, 3, 4]

    def test_partitions(self):
        """Five partitions of 4."""
        assert list(signatures.partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


class TestSigToAlgebra:
    """Tests for sig_to_algebra."""

    def test_boolean_kind(self):
        """Z_2 with the Boolean zero part has six elements."""
        alg = signatures.sig_to_algebra(GroupSig.of(p1=(1,)), ZKind.BOOLEAN)
        assert alg.size == 6
        assert finalg.check_residuated_lattice(alg).ok

    def test_free_part_rejected(self):
        """A free factor has no finite table."""
        with pytest.raises(InfiniteGroup):
            signatures.sig_to_algebra(GroupSig(rank_flag=1), ZKind.NONE)
