"""Tests for reslat.services.identities module."""
import pytest

from reslat.exceptions import BadPartition, InvalidParameters
from reslat.models import COMMUTATIVITY, ConjugateScheme, knotted, weak_commutativity
from reslat.services import identities


class TestKnotted:
    """Tests for check_knotted."""

    def test_fails_on_involution(self, mz2):
        """a² = 1 is not below a³ = a."""
        result = identities.check_knotted(mz2, 2, 3)
        assert not result.holds
        assert result.witness == (2,)
        assert result.equation == "x^2 <= x^3"

    def test_holds(self, mz2):
        """x ≤ x³ holds in M_{Z_2}."""
        assert identities.check_knotted(mz2, 1, 3)

    def test_equal_exponents_rejected(self, mz2):
        """m = n gives a trivial identity."""
        with pytest.raises(InvalidParameters):
            identities.check_knotted(mz2, 2, 2)


class TestWeakCommutativity:
    """Tests for validate_partition and check_weak_commutativity."""

    @pytest.mark.parametrize("partition", [[1, 1], [1, 2], [3], [2, -1, 2]])
    def test_bad_partitions(self, partition):
        """Exponent vectors must sum to their length and not be all ones."""
        with pytest.raises(BadPartition):
            identities.validate_partition(partition)

    def test_commutative_algebra(self, mz2):
        """xyx = x²y in a commutative algebra."""
        assert identities.check_weak_commutativity(mz2, [2, 0]).holds

    def test_dispatch(self, mz2):
        """check_identity routes each spec to its checker."""
        assert identities.check_identity(mz2, weak_commutativity([0, 2])).holds
        assert identities.check_identity(mz2, COMMUTATIVITY).holds
        assert not identities.check_identity(mz2, knotted(2, 3)).holds


class TestConjugateEquations:
    """Tests for check_conjugate_equations."""

    def test_heyting_square_not_semilinear(self, heyting_square):
        """a\\b ∨ b\\a ∨ ⊤\\c = c fails the second equation at depth 0."""
        result = identities.check_conjugate_equations(heyting_square, ConjugateScheme.SRL, depth=0)
        assert not result.holds
        assert result.equation == "srl-2 depth 0"

    @pytest.mark.parametrize("scheme", [ConjugateScheme.SRL, ConjugateScheme.MG])
    def test_mg_satisfies(self, mz2, scheme):
        """M_{Z_2} satisfies the semilinear and M_G schemes."""
        assert identities.check_conjugate_equations(mz2, scheme, depth=1).holds

    def test_url_is_semilinear(self, cyclic22):
        """Unilinear algebras satisfy the semilinear scheme."""
        assert identities.check_conjugate_equations(cyclic22, "srl", depth=1).holds

    def test_negative_depth(self, mz2):
        """Depth must be non-negative."""
        with pytest.raises(InvalidParameters):
            identities.check_conjugate_equations(mz2, ConjugateScheme.SRL, depth=-1)

    def test_levels_grow(self, cyclic22):
        """Conjugate levels are cumulative."""
        levels = identities.conjugate_levels(cyclic22, 2, 2)
        assert len(levels) == 3
        assert levels[0] <= levels[1] <= levels[2]
