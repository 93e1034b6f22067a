"""Tests for reslat.services.isomorphism module."""
from reslat.services import construct
from reslat.services.isomorphism import find_isomorphism, find_monoid_isomorphism, verify_mapping

SWAP = (0, 2, 1, 3)


def _with_ldiv_entry(alg, x, z, value):
    rows = [list(row) for row in alg.ldiv]
    rows[x][z] = value
    return alg.model_copy(update={"ldiv": tuple(tuple(row) for row in rows)})


class TestFindIsomorphism:
    """Tests for find_isomorphism."""

    def test_automorphism_of_square(self):
        """2 × 2 maps onto itself."""
        square = construct.direct_product(construct.godel_chain(2), construct.godel_chain(2))
        assert verify_mapping(square, square, find_isomorphism(square, square))

    def test_search_continues_past_failed_leaf(self):
        """Only the atom swap matches the division tables; the identity is tried first and rejected."""
        square = construct.direct_product(construct.godel_chain(2), construct.godel_chain(2))
        a = _with_ldiv_entry(square, 2, 2, 2)
        b = _with_ldiv_entry(square, 1, 1, 1)
        assert not verify_mapping(a, b, (0, 1, 2, 3))
        assert find_isomorphism(a, b) == SWAP

    def test_different_sizes(self, boolean2, godel3):
        """Sizes must agree."""
        assert find_isomorphism(boolean2, godel3) is None


class TestFindMonoidIsomorphism:
    """Tests for find_monoid_isomorphism."""

    def test_groups_with_zero(self):
        """Z_4 and Z_2 × Z_2 are not isomorphic; Z_4 is isomorphic to itself."""
        z4 = construct.abelian_group_monoid([4])
        assert find_monoid_isomorphism(z4, construct.abelian_group_monoid([2, 2])) is None
        assert find_monoid_isomorphism(z4, z4) is not None
