"""Tests for reslat.storage package."""
import io
import json

import pytest

from reslat.exceptions import FrlSyntaxError, SemanticError
from reslat.models import OutputFormat
from reslat.storage import FrlCodec, JsonCodec, get_codec, load_algebra, render_record, render_value

CHAIN4 = """frl 1
size 4
unit 3
bot 0
top 3
le
1111
0111
0011
0001
mul
{mul}
end
"""

NON_ASSOCIATIVE = "0 0 0 0\n0 1 2 1\n0 1 1 2\n0 1 2 3"


class TestFrlCodec:
    """Tests for FrlCodec."""

    def test_round_trip(self, mz2, cyclic22):
        """Parsing a rendered algebra gives it back."""
        codec = FrlCodec()
        for alg in (mz2, cyclic22):
            assert codec.parse(codec.render(alg)) == alg

    def test_derives_divisions(self, godel3):
        """ldiv and rdiv may be omitted."""
        text = FrlCodec().render(godel3).split("ldiv")[0] + "end\n"
        assert FrlCodec().parse(text) == godel3

    def test_render_layout(self, boolean2):
        """Sections appear in a fixed order."""
        lines = FrlCodec().render(boolean2).splitlines()
        assert lines[:5] == ["frl 1", "size 2", "unit 1", "bot 0", "top 1"]
        assert lines[-1] == "end"
        assert lines.index("le") < lines.index("mul") < lines.index("ldiv") < lines.index("rdiv")

    def test_bad_header(self):
        """The first line must be the format tag."""
        with pytest.raises(FrlSyntaxError) as exc:
            FrlCodec().parse("frl 2\n")
        assert exc.value.line == 1

    def test_short_order_row(self, boolean2):
        """An le row of the wrong length is a syntax error."""
        text = FrlCodec().render(boolean2).replace("\n11\n", "\n111\n", 1)
        with pytest.raises(FrlSyntaxError) as exc:
            FrlCodec().parse(text)
        assert exc.value.expected == "2 characters"

    def test_content_after_end(self, boolean2):
        """Nothing may follow end."""
        with pytest.raises(FrlSyntaxError):
            FrlCodec().parse(FrlCodec().render(boolean2) + "size 3\n")

    def test_non_associative(self):
        """A well-formed document that breaks a law is a semantic error."""
        with pytest.raises(SemanticError) as exc:
            FrlCodec().parse(CHAIN4.format(mul=NON_ASSOCIATIVE))
        assert exc.value.law == "associativity"


class TestJsonCodec:
    """Tests for JsonCodec."""

    def test_round_trip(self, heyting_square):
        """JSON mirrors the text format."""
        codec = JsonCodec()
        assert codec.parse(codec.render(heyting_square)) == heyting_square

    def test_missing_keys(self):
        """Required keys are listed."""
        with pytest.raises(FrlSyntaxError) as exc:
            JsonCodec().parse(json.dumps({"size": 1}))
        assert "unit" in exc.value.expected

    def test_invalid_json(self):
        """Decoder errors keep their position."""
        with pytest.raises(FrlSyntaxError) as exc:
            JsonCodec().parse("{\n  oops")
        assert exc.value.line == 2


class TestLoading:
    """Tests for load_algebra and get_codec."""

    def test_detects_json(self, tmp_path, mz2):
        """Documents starting with "{" are JSON."""
        path = tmp_path / "mz2.json"
        path.write_text(JsonCodec().render(mz2))
        assert load_algebra(str(path)) == mz2

    def test_reads_stdin(self, monkeypatch, mz2):
        """"-" reads standard input."""
        monkeypatch.setattr("sys.stdin", io.StringIO(FrlCodec().render(mz2)))
        assert load_algebra("-") == mz2

    def test_save(self, tmp_path, godel3):
        """save creates parent directories."""
        path = tmp_path / "nested" / "chain.frl"
        FrlCodec().save(godel3, str(path))
        assert FrlCodec().load(str(path)) == godel3

    def test_get_codec(self):
        """One codec per output format."""
        assert isinstance(get_codec(OutputFormat.JSON), JsonCodec)
        assert isinstance(get_codec("frl"), FrlCodec)


class TestRecords:
    """Tests for render_record and render_value."""

    def test_key_value_lines(self):
        """Tables use ";" between rows and "," within."""
        text = render_record({"ok": True, "classes": [[1, 3], [2, 4]], "witness": None})
        assert text == "ok=true\nclasses=1,3;2,4\nwitness=none\n"

    def test_json_record(self):
        """JSON records are one object."""
        assert json.loads(render_record({"ok": False}, OutputFormat.JSON)) == {"ok": False}

    def test_value(self):
        """Bare values print alone."""
        assert render_value("exp", 3) == "3\n"
        assert json.loads(render_value("primes", [2, 3], "json")) == {"primes": [2, 3]}
