"""Tests for reslat.services.enumerate module."""
import pytest

from reslat.exceptions import CapExceeded, InvalidParameters
from reslat.services import enumerate as enumeration
from reslat.services import finalg
from reslat.services.isomorphism import find_isomorphism


class TestPrefixes:
    """Tests for mx_search_prefixes."""

    def test_empty_antichain(self):
        """With X empty the only unit is ⊤."""
        assert enumeration.mx_search_prefixes(0) == [(1, (), ())]

    def test_one_element(self):
        """The unit is the middle element or ⊤."""
        prefixes = enumeration.mx_search_prefixes(1)
        assert prefixes == [(1, (2,), (2,)), (2, (1,), (1,))]

    def test_negative_size(self):
        """|X| must be non-negative."""
        with pytest.raises(InvalidParameters):
            enumeration.mx_search_prefixes(-1)


class TestEnumerateMx:
    """Tests for enumerate_mx."""

    @pytest.mark.parametrize("n_x,expected", [(0, 1), (1, 3)])
    def test_small_counts(self, n_x, expected):
        """Counts up to isomorphism on M_0 and M_1."""
        assert len(enumeration.enumerate_mx(n_x, jobs=1)) == expected

    def test_results_are_residuated_and_distinct(self):
        """Every result passes the law check and no two are isomorphic."""
        found = enumeration.enumerate_mx(1, jobs=1)
        assert all(finalg.check_residuated_lattice(alg).ok for alg in found)
        for i, a in enumerate(found):
            for b in found[i + 1:]:
                assert find_isomorphism(a, b) is None

    def test_worker_count_does_not_change_output(self):
        """Results are merged in prefix order."""
        assert enumeration.enumerate_mx(1, jobs=1) == enumeration.enumerate_mx(1, jobs=3)

    def test_cap(self):
        """Exceeding the cap raises."""
        with pytest.raises(CapExceeded):
            enumeration.enumerate_mx(1, cap=1, jobs=1)


class TestRabCatalog:
    """Tests for rab_catalog."""

    @pytest.mark.parametrize("n_x,expected", [(1, 3), (2, 5)])
    def test_counts(self, n_x, expected):
        """Catalog sizes for |X| = 1 and 2."""
        assert len(enumeration.rab_catalog(n_x)) == expected

    def test_catalog_within_enumeration(self):
        """Each catalog entry appears among the enumerated algebras."""
        found = enumeration.enumerate_mx(1, jobs=1)
        for alg in enumeration.rab_catalog(1):
            assert any(find_isomorphism(alg, other) is not None for other in found)
