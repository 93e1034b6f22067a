"""Tests for reslat.services.cocycle module."""
import pytest

from reslat.exceptions import CocycleInvalid, NotAChain, NotCancellative
from reslat.models import CocycleData
from reslat.services import cocycle, construct, finalg


class TestChainMonoid:
    """Tests for chain_monoid_of and check_res_end."""

    def test_ranks(self, godel3):
        """A chain on 0 < 1 < 2 keeps its ranks."""
        chain = cocycle.chain_monoid_of(godel3)
        assert chain.rank == (0, 1, 2)
        assert chain.ldiv(2, 1) == 1

    def test_rejects_non_chain(self, mz2):
        """1 and a are incomparable."""
        with pytest.raises(NotAChain):
            cocycle.chain_monoid_of(mz2)

    def test_identity_is_residuated(self, godel3):
        """The identity map is its own residual."""
        ok, residual = cocycle.check_res_end(cocycle.chain_monoid_of(godel3), (0, 1, 2))
        assert ok
        assert residual == (0, 1, 2)

    def test_constant_map_has_no_residual(self, godel3):
        """g ≡ 1 has no c with g(c) ≤ 0."""
        ok, residual = cocycle.check_res_end(cocycle.chain_monoid_of(godel3), (2, 2, 2))
        assert not ok
        assert residual is None


class TestCyclicGroup:
    """Tests for cyclic_group and is_cancellative."""

    def test_z3(self):
        """Z_3 is cancellative with named powers."""
        k = cocycle.cyclic_group(3)
        assert k.names == ("1", "k", "k2")
        assert k.mul[2][2] == 1
        assert cocycle.is_cancellative(k)

    def test_monoid_with_zero_is_not_cancellative(self):
        """An absorbing zero breaks cancellation."""
        assert not cocycle.is_cancellative(construct.abelian_group_monoid([2]))


class TestExtension:
    """Tests for make_cocycle_extension and bounded_product."""

    def test_bounded_product(self, boolean2):
        """2 ×ᵇ Z_2 has two chains of length 2 between the bounds."""
        alg = cocycle.bounded_product(boolean2, cocycle.cyclic_group(2))
        assert alg.size == 6
        assert alg.unit == 2
        assert finalg.check_residuated_lattice(alg).ok
        assert alg.le(1, 2) and not alg.le(2, 3)

    def test_non_invertible_cocycle(self, boolean2):
        """f(k, k) = ⊥ is not invertible in the chain."""
        a = cocycle.chain_monoid_of(boolean2)
        trivial = cocycle.trivial_cocycle_data(a, cocycle.cyclic_group(2))
        data = CocycleData(k=trivial.k, a=a, phi=trivial.phi, f=((1, 1), (1, 0)))
        report = cocycle.check_cocycle(data)
        assert report.first_failure().name == "invertible"
        assert report.first_failure().witness == (1, 1)
        with pytest.raises(CocycleInvalid) as exc:
            cocycle.make_cocycle_extension(data)
        assert exc.value.law == "invertible"

    def test_rejects_non_cancellative_k(self, boolean2):
        """K must be cancellative."""
        data = cocycle.trivial_cocycle_data(
            cocycle.chain_monoid_of(boolean2), construct.abelian_group_monoid([2])
        )
        with pytest.raises(NotCancellative):
            cocycle.make_cocycle_extension(data)


class TestSearch:
    """Tests for residuated_chains and search_cocycle_data."""

    def test_chain_counts(self):
        """One chain on two elements, three on three."""
        assert len(cocycle.residuated_chains(2)) == 1
        assert len(cocycle.residuated_chains(3)) == 3

    def test_small_search_is_trivial(self):
        """Over cyclic K of order ≤ 2 and chains of size ≤ 3 every hit is trivial."""
        hits = cocycle.search_cocycle_data(max_k=2, max_a=3)
        assert hits
        assert all(data.is_trivial for data in hits)
