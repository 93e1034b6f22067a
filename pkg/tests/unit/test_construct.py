"""Tests for reslat.services.construct module."""
import pytest

from reslat.exceptions import InvalidFactor, InvalidParameters, NotTopCancellative
from reslat.models import FiniteMonoid, Orientation, ZKind
from reslat.services import construct, finalg
from reslat.services.isomorphism import find_isomorphism


class TestMakeRab:
    """Tests for make_rab."""

    @pytest.mark.parametrize("kind", list(ZKind))
    def test_every_kind_is_residuated(self, kind):
        """R_{A,B} over Z_2 with ⊤ passes every law for each zero kind."""
        alg = construct.make_rab(construct.abelian_group_monoid([2]), kind)
        assert alg.size == 2 + 2 + kind.size
        assert finalg.check_residuated_lattice(alg).ok

    def test_carrier_layout(self):
        """⊥ first, then A without its zero, then Z, then ⊤."""
        alg = construct.make_rab(construct.abelian_group_monoid([2]), ZKind.BOOLEAN)
        assert alg.names == ("bot", "1", "a", "z1", "z2", "top")
        assert alg.unit == 1
        assert (alg.bot, alg.top) == (0, 5)

    def test_zero_part_names_are_distinct_from_generators(self):
        """With generators a and b, the nilpotent element of Z is still reachable by name."""
        alg = construct.make_rab(construct.abelian_group_monoid([2, 2]), ZKind.NILPOTENT)
        assert alg.names == ("bot", "1", "b", "a", "ab", "z", "top")
        assert finalg.element_index(alg, "z") == 5
        assert finalg.element_index(alg, "b") == 2

    def test_assemble_rejects_duplicate_names(self, boolean2):
        """Two elements may not share a label."""
        lattice = finalg.validate_order(boolean2.leq)
        with pytest.raises(InvalidParameters):
            construct.assemble(lattice, boolean2.mul, boolean2.unit, boolean2.ldiv, boolean2.rdiv, ["x", "x"], "dup")

    def test_zero_acts_as_top(self):
        """The zero of A becomes ⊤ and absorbs A."""
        alg = construct.make_mg([3])
        assert all(alg.mul[x][alg.top] == alg.top for x in range(1, alg.top))

    def test_rejects_non_cancellative(self):
        """{1, e, 0} with e² = e is not ⊤-cancellative."""
        monoid = FiniteMonoid(size=3, mul=((0, 1, 2), (1, 1, 2), (2, 2, 2)), unit=0, zero=2)
        with pytest.raises(NotTopCancellative):
            construct.make_rab(monoid, ZKind.NONE)


class TestCatalog:
    """Tests for the monoid catalog."""

    def test_zero_cancellative_monoids_small(self):
        """Sizes 1, 2 and 3 give 1, 1 and 2 monoids."""
        assert [len(construct.zero_cancellative_monoids(n)) for n in (1, 2, 3)] == [1, 1, 2]

    def test_abelian_group_monoid_rejects_small_factor(self):
        """Invariant factors start at 2."""
        with pytest.raises(InvalidFactor):
            construct.abelian_group_monoid([1])

    def test_make_mg_product(self):
        """M_{Z_2 × Z_2} has the group, ⊥ and ⊤."""
        alg = construct.make_mg([2, 2])
        assert alg.size == 6
        assert finalg.check_residuated_lattice(alg).ok


class TestCyclicUrl:
    """Tests for make_cyclic_url and cyclic_index."""

    def test_cyclic_index(self):
        """a⁴ = a² and a⁵ = a³ for index 2 and period 2."""
        assert [construct.cyclic_index(n, 2, 2) for n in range(6)] == [0, 1, 2, 3, 2, 3]

    def test_up_order(self, cyclic22):
        """1 ≤ a² and a ≤ a³, with 1 and a incomparable."""
        assert cyclic22.le(1, 3) and cyclic22.le(2, 4)
        assert not cyclic22.le(1, 2) and not cyclic22.le(2, 1)

    def test_down_is_dual_on_middle(self):
        """The down orientation reverses the middle order."""
        up = construct.make_cyclic_url(2, 2, Orientation.UP)
        down = construct.make_cyclic_url(2, 2, Orientation.DOWN)
        for x in range(1, 5):
            for y in range(1, 5):
                assert up.le(x, y) == down.le(y, x)

    def test_group_case_matches_mg(self):
        """Index 0 gives the cyclic group, so the algebra is M_{Z_n}."""
        for n in (2, 3, 4):
            for orient in Orientation:
                assert find_isomorphism(construct.make_cyclic_url(0, n, orient), construct.make_mg([n])) is not None

    @pytest.mark.parametrize("r,s", [(1, 0), (0, 1), (-1, 2)])
    def test_rejects_degenerate_parameters(self, r, s):
        """The trivial monoid and negative parameters are rejected."""
        with pytest.raises(InvalidParameters):
            construct.make_cyclic_url(r, s, Orientation.UP)


class TestProducts:
    """Tests for direct_product, heyting_algebra and godel_chain."""

    def test_direct_product_of_chains(self, boolean2):
        """2 × 2 is the 4-element Boolean algebra."""
        alg = construct.direct_product(boolean2, boolean2)
        assert alg.size == 4
        assert not alg.le(1, 2) and not alg.le(2, 1)
        assert finalg.check_residuated_lattice(alg).ok

    def test_heyting_implication(self, heyting_square):
        """a → b is b in the Boolean square with a new top."""
        assert heyting_square.ldiv[1][2] == 2

    def test_godel_chain_rejects_empty(self):
        """A chain needs at least one element."""
        with pytest.raises(InvalidParameters):
            construct.godel_chain(0)
