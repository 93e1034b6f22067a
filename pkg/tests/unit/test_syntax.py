"""Tests for reslat.cli.syntax module."""
import pytest

from reslat.cli.syntax import format_signature, parse_downset, parse_signature
from reslat.exceptions import SignatureSyntaxError
from reslat.models import ExpTower, GroupSig, PrimeFamily, Principal


class TestParseSignature:
    """Tests for parse_signature and format_signature."""

    def test_parse(self):
        """Partitions are tagged by the actual prime."""
        sig = parse_signature("(1; p2:[2,1]; p3:[3,1,1])")
        assert sig == GroupSig.of(rank_flag=1, p1=(2, 1), p2=(3, 1, 1))

    def test_format(self):
        """Formatting writes primes, not indices."""
        assert format_signature(GroupSig.of(p1=(2, 1), p4=(1,))) == "(0; p2:[2,1]; p7:[1])"
        assert format_signature(GroupSig()) == "(0)"

    def test_unsorted_parts_are_canonicalised(self):
        """[1,2] is the partition (2, 1)."""
        assert parse_signature("(0; p2:[1,2])") == GroupSig.of(p1=(2, 1))

    @pytest.mark.parametrize(
        "text",
        ["(2)", "(0; p4:[1])", "(0; p2:[1]; p2:[2])", "(0; p2:[0])", "(0; p2:[1]", "(0) extra", "(0; p2 [1])"],
    )
    def test_rejects(self, text):
        """Bad flags, non-primes, duplicates, zero parts and broken brackets."""
        with pytest.raises(SignatureSyntaxError):
            parse_signature(text)

    def test_error_column(self):
        """The column points at the offending prime."""
        with pytest.raises(SignatureSyntaxError) as exc:
            parse_signature("(0; p4:[1])")
        assert exc.value.witness == (5,)


class TestParseDownset:
    """Tests for parse_downset."""

    def test_union(self):
        """A union of the three component kinds."""
        d = parse_downset("(union (principal (0; p2:[1])) (tower (0) p2) (family [1] p3))")
        principal, tower, family = d.components
        assert principal == Principal(sig=GroupSig.of(p1=(1,)))
        assert tower == ExpTower(base=GroupSig(), index=1)
        assert family == PrimeFamily(shape=(1,), start_index=2)

    def test_single_component(self):
        """A bare component is a one-element union."""
        d = parse_downset("(family [2,1] p5 (1))")
        assert d.components == (PrimeFamily(shape=(2, 1), start_index=3, base=GroupSig(rank_flag=1)),)

    def test_unknown_component(self):
        """Only principal, tower and family are understood."""
        with pytest.raises(SignatureSyntaxError):
            parse_downset("(cone (0))")
