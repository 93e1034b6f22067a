"""Tests for reslat.services.analyze module."""
import pytest

from reslat.exceptions import NotMxShaped
from reslat.models import Orientation, ZKind
from reslat.services import analyze, construct
from reslat.services.isomorphism import find_isomorphism, find_monoid_isomorphism


class TestDecompose:
    """Tests for compute_uz and decompose_mx."""

    @pytest.mark.parametrize("kind", list(ZKind))
    def test_recovers_rab(self, kind):
        """Decomposing R_{A,B} and rebuilding gives an isomorphic algebra."""
        a = construct.abelian_group_monoid([2])
        alg = construct.make_rab(a, kind)
        result = analyze.decompose_mx(alg)
        assert result.kind is kind
        assert find_monoid_isomorphism(result.a, a) is not None
        assert find_isomorphism(construct.make_rab(result.a, result.kind), alg) is not None

    def test_uz_split_of_mg(self, mz2):
        """Every middle element of M_G lies in U."""
        split = analyze.compute_uz(mz2)
        assert split.u == frozenset({1, 2})
        assert split.z == frozenset()

    def test_three_chain_is_idempotent_kind(self, godel3):
        """0 < m < 1 is M_X with X = {m} and m² = m."""
        result = analyze.decompose_mx(godel3)
        assert result.kind is ZKind.IDEMPOTENT
        assert result.a.size == 1
        assert result.b_witness == (1,)

    def test_rejects_other_lattices(self, heyting_square):
        """a < c means the middle is not an antichain."""
        assert not analyze.is_mx_shaped(heyting_square)
        with pytest.raises(NotMxShaped):
            analyze.decompose_mx(heyting_square)


class TestUrlFlags:
    """Tests for url_flags, height and width."""

    def test_cyclic_url(self, cyclic22):
        """Two incomparable chains 1 < a² and a < a³."""
        flags = analyze.url_flags(cyclic22)
        assert flags.is_unilinear
        assert flags.compact
        assert flags.top_unital
        assert not flags.is_linear
        assert (flags.height, flags.width) == (4, 2)

    def test_mg_dimensions(self):
        """M_{Z_5} has height 3 and width 5."""
        flags = analyze.url_flags(construct.make_mg([5]))
        assert (flags.height, flags.width) == (3, 5)
        assert flags.rigorously_compact

    def test_chain(self, godel3):
        """A chain is linear with width 1."""
        flags = analyze.url_flags(godel3)
        assert flags.is_linear
        assert flags.is_unilinear
        assert (flags.height, flags.width) == (3, 1)

    def test_not_unilinear(self, heyting_square):
        """a ∨ b = c is not ⊤."""
        flags = analyze.url_flags(heyting_square)
        assert not flags.is_unilinear
        assert not flags.compact


class TestDiscriminator:
    """Tests for the discriminator term."""

    def test_boolean_algebra(self, boolean2):
        """The term is the discriminator on the 2-element Boolean algebra."""
        assert analyze.is_discriminator(boolean2)

    def test_three_chain_fails(self, godel3):
        """The 3-element Heyting chain is not simple enough."""
        assert analyze.discriminator_witness(godel3) is not None


class TestCyclicOrders:
    """Tests for search_cyclic_orders and cyclic_power."""

    def test_up_orientation_found(self):
        """The up orientation is among the compact orders of index 2, period 2."""
        up = construct.make_cyclic_url(2, 2, Orientation.UP)
        found = analyze.search_cyclic_orders(2, 2)
        assert found
        assert any(alg.leq == up.leq for alg in found)
        assert all(analyze.is_compact_url(alg) for alg in found)

    def test_cyclic_power(self):
        """a⁵ = a³ sits at carrier index 4."""
        assert analyze.cyclic_power(2, 2, 5) == 4
