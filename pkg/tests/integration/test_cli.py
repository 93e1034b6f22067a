"""Tests for the reslat command line."""
import io
import json

import pytest

from reslat.cli import main
from reslat.models import ZKind
from reslat.services import construct
from reslat.storage import FrlCodec, JsonCodec

NON_ASSOCIATIVE = """frl 1
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
0 0 0 0
0 1 2 1
0 1 1 2
0 1 2 3
end
"""


@pytest.fixture
def algebra_file(tmp_path):
    """Write an algebra and return its path."""

    def write(alg, name="alg.frl"):
        path = tmp_path / name
        path.write_text(FrlCodec().render(alg))
        return str(path)

    return write


class TestMake:
    """Tests for the make command."""

    def test_cyclic_then_check(self, tmp_path, capsys):
        """A constructed algebra passes check."""
        path = tmp_path / "out" / "cyclic.frl"
        assert main(["--out", str(path), "make", "cyclic", "--r", "2", "--s", "2"]) == 0
        assert main(["check", str(path)]) == 0
        assert capsys.readouterr().out.startswith("ok=true\n")

    def test_json_output(self, capsys):
        """--format json emits the JSON document."""
        assert main(["--format", "json", "make", "mg", "--factors", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["size"] == 4
        assert doc["names"] == ["bot", "1", "a", "top"]

    def test_rab_from_table(self, capsys):
        """An explicit Cayley table with unit and zero."""
        assert main(["make", "rab", "--monoid", "0 1 2;1 0 2;2 2 2", "--unit", "0", "--zero", "2", "--kind", "1"]) == 0
        assert FrlCodec().parse(capsys.readouterr().out).size == 5

    def test_rab_needs_unit_and_zero(self):
        """--monoid without --unit is malformed."""
        assert main(["make", "rab", "--monoid", "0 1;1 1"]) == 2

    def test_mx_sizes(self, capsys):
        """M_X with |X| = 0 has two elements."""
        assert main(["make", "mx", "--x-size", "0"]) == 0
        assert FrlCodec().parse(capsys.readouterr().out).size == 2

    def test_bad_cyclic_parameters(self):
        """r + s < 2 is malformed input."""
        assert main(["make", "cyclic", "--r", "0", "--s", "1"]) == 2


class TestCheck:
    """Tests for the check command."""

    def test_semantic_failure(self, tmp_path, capsys):
        """A law failure is reported with exit code 1."""
        path = tmp_path / "bad.frl"
        path.write_text(NON_ASSOCIATIVE)
        assert main(["check", str(path)]) == 1
        out = capsys.readouterr().out
        assert "ok=false\n" in out
        assert "law=associativity\n" in out

    def test_syntax_error(self, tmp_path):
        """A malformed document exits with 2."""
        path = tmp_path / "bad.frl"
        path.write_text("frl 9\n")
        assert main(["check", str(path)]) == 2

    def test_missing_file(self, tmp_path):
        """An unreadable file exits with 2."""
        assert main(["check", str(tmp_path / "missing.frl")]) == 2

    def test_stdin(self, monkeypatch, capsys, mz2):
        """"-" reads standard input, in either format."""
        monkeypatch.setattr("sys.stdin", io.StringIO(JsonCodec().render(mz2)))
        assert main(["check", "-"]) == 0
        assert capsys.readouterr().out.startswith("ok=true\n")


class TestAnalysisCommands:
    """Tests for decompose, flags, quotient, reconstruct and equations."""

    def test_flags(self, algebra_file, cyclic22, capsys):
        """Flags are printed as key=value lines."""
        assert main(["flags", algebra_file(cyclic22)]) == 0
        out = capsys.readouterr().out
        assert "compact=true\n" in out
        assert "height=4\n" in out

    def test_decompose(self, algebra_file, mz2, capsys):
        """M_{Z_2} has kind 0."""
        assert main(["--format", "json", "decompose", algebra_file(mz2)]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["kind"] == 0
        assert record["a_size"] == 3

    def test_quotient(self, algebra_file, cyclic22, capsys):
        """Comparability classes as rows."""
        assert main(["quotient", algebra_file(cyclic22)]) == 0
        assert "classes=1,3;2,4\n" in capsys.readouterr().out

    def test_reconstruct_failure(self, algebra_file, cyclic22):
        """Unmet hypotheses exit with 1."""
        assert main(["reconstruct", algebra_file(cyclic22)]) == 1

    def test_reconstruct_product(self, tmp_path, algebra_file, boolean2, capsys):
        """A bounded product reconstructs to trivial data."""
        chain = algebra_file(boolean2, "chain.frl")
        product = tmp_path / "product.frl"
        assert main(["--out", str(product), "make", "cocycle", "--chain", chain, "--k-order", "2"]) == 0
        assert main(["reconstruct", str(product)]) == 0
        assert "trivial=true\n" in capsys.readouterr().out

    def test_equations(self, algebra_file, heyting_square, mz2, capsys):
        """Failing schemes exit with 1."""
        assert main(["--depth", "0", "equations", algebra_file(heyting_square)]) == 1
        assert "equation=srl-2 depth 0\n" in capsys.readouterr().out
        assert main(["--depth", "0", "equations", "--scheme", "mg", algebra_file(mz2, "mz2.frl")]) == 0

    def test_discriminator(self, algebra_file, boolean2, capsys):
        """The Boolean algebra has a discriminator."""
        assert main(["discriminator", algebra_file(boolean2)]) == 0
        assert "discriminator=true\n" in capsys.readouterr().out


class TestEnumerate:
    """Tests for the enumerate command."""

    def test_count_only(self, capsys):
        """Three algebras on M_1."""
        assert main(["enumerate", "--x-size", "1", "--count-only"]) == 0
        assert capsys.readouterr().out == "3\n"

    def test_jobs_do_not_change_output(self, capsys):
        """Output is independent of the worker count."""
        main(["--jobs", "1", "enumerate", "--x-size", "1"])
        single = capsys.readouterr().out
        main(["--jobs", "4", "enumerate", "--x-size", "1"])
        assert capsys.readouterr().out == single

    def test_cap_exceeded(self):
        """More algebras than the cap exits with 1."""
        assert main(["--cap", "1", "enumerate", "--x-size", "1"]) == 1


class TestFep:
    """Tests for the fep command."""

    def test_embedding(self, algebra_file, mz2, capsys):
        """M_{Z_2} with B = {a} embeds and preserves commutativity."""
        path = algebra_file(mz2)
        assert main(["fep", "--algebra", path, "--subset", "2", "--identity", "commutative"]) == 0
        out = capsys.readouterr().out
        assert "ok=true\n" in out
        assert "w_size=4\n" in out
        assert "preserved_1=true\n" in out

    def test_subset_by_name(self, algebra_file, capsys):
        """B may name elements; z is the nilpotent element, not the generator b."""
        alg = construct.make_rab(construct.abelian_group_monoid([2, 2]), ZKind.NILPOTENT)
        main(["fep", "--algebra", algebra_file(alg), "--subset", "z"])
        assert "subset=0,1,5,6\n" in capsys.readouterr().out

    def test_unknown_name(self, algebra_file, mz2):
        """Unknown element names are malformed input."""
        assert main(["fep", "--algebra", algebra_file(mz2), "--subset", "q"]) == 2

    def test_bad_identity(self, algebra_file, mz2):
        """Unknown identities are rejected by the parser."""
        with pytest.raises(SystemExit):
            main(["fep", "--algebra", algebra_file(mz2), "--subset", "2", "--identity", "associative"])


class TestVariety:
    """Tests for the variety command."""

    def test_exp(self, capsys):
        """Largest exponent of the worked example."""
        assert main(["variety", "exp", "(1; p2:[2,1]; p3:[3,1,1]; p7:[2,1,1])"]) == 0
        assert capsys.readouterr().out == "3\n"

    def test_primes(self, capsys):
        """Primes are printed as primes."""
        assert main(["variety", "primes", "(0; p2:[1,1,1]; p3:[4,1]; p5:[3,2])"]) == 0
        assert capsys.readouterr().out == "2,3,5\n"

    def test_primes_help_says_primes(self, capsys):
        """The help text states that primes, not indices, are printed."""
        with pytest.raises(SystemExit):
            main(["variety", "--help"])
        assert "not their indices" in " ".join(capsys.readouterr().out.split())

    def test_leq_and_join(self, capsys):
        """Z_2 ≤ Z_4; Z_4 ∨ Z_2² = Z_4 × Z_2."""
        assert main(["variety", "leq", "(0; p2:[1])", "(0; p2:[2])"]) == 0
        assert capsys.readouterr().out == "true\n"
        assert main(["variety", "join", "(0; p2:[2])", "(0; p2:[1,1])"]) == 0
        assert capsys.readouterr().out == "(0; p2:[2,1])\n"

    def test_zclosed(self, capsys):
        """The prime family alone is not Z-closed."""
        assert main(["variety", "zclosed", "(family [1] p2)"]) == 0
        out = capsys.readouterr().out
        assert "closed=false\n" in out
        assert "missing=(1)\n" in out

    def test_algebra(self, capsys):
        """R_{A,B} for Z_3 with kind 0 is M_{Z_3}."""
        assert main(["variety", "algebra", "(0; p3:[1])"]) == 0
        assert FrlCodec().parse(capsys.readouterr().out) == construct.make_mg([3])

    def test_bad_signature(self):
        """A non-prime tag is malformed."""
        assert main(["variety", "exp", "(0; p4:[1])"]) == 2

    def test_wrong_arity(self):
        """leq takes two signatures."""
        assert main(["variety", "leq", "(0)"]) == 2
