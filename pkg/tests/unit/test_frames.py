"""Tests for reslat.services.frames module."""
from reslat.models import COMMUTATIVITY, knotted
from reslat.services import finalg, frames


class TestFrame:
    """Tests for generate_submonoid, with_constants and build_frame."""

    def test_submonoid(self, mz2):
        """a generates {1, a}."""
        assert frames.generate_submonoid(mz2, [2]) == (1, 2)

    def test_constants_added(self, mz2):
        """⊥, ⊤ and 1 join the subset."""
        assert frames.with_constants(mz2, [2]) == (0, 1, 2, 3)

    def test_frame_sizes(self, mz2):
        """W is the whole carrier and W′ = W × B × W."""
        frame = frames.build_frame(mz2, frames.with_constants(mz2, [2]))
        assert frame.width == 4
        assert len(frame.triples) == 64
        assert len(frame.relation) == 64

    def test_closure_is_idempotent(self, mz2):
        """γ(γ(X)) = γ(X)."""
        frame = frames.build_frame(mz2, frames.with_constants(mz2, [2]))
        for bits in range(frame.full + 1):
            closed = frames.galois_closure(frame, bits)
            assert closed & bits == bits
            assert frames.galois_closure(frame, closed) == closed


class TestGaloisAlgebra:
    """Tests for build_galois_algebra."""

    def test_boolean_algebra(self, boolean2):
        """The frame of the 2-element Boolean algebra gives two closed sets."""
        galois = frames.build_galois_algebra(frames.build_frame(boolean2, [0, 1]))
        assert galois.algebra.size == 2
        assert finalg.check_residuated_lattice(galois.algebra).ok

    def test_residuated(self, mz2):
        """W⁺ is a residuated lattice."""
        galois = frames.build_galois_algebra(frames.build_frame(mz2, frames.with_constants(mz2, [2])))
        assert finalg.check_residuated_lattice(galois.algebra).ok


class TestEmbedding:
    """Tests for check_fep_embedding and check_preservation."""

    def test_boolean_embedding(self, boolean2):
        """b ↦ γ({b}) embeds the whole algebra."""
        report = frames.check_fep_embedding(boolean2, [0, 1])
        assert report.ok
        assert report.injective
        assert report.galois_size == 2

    def test_mg_embedding(self, mz2):
        """The partial subalgebra on {⊥, 1, a, ⊤} embeds."""
        report = frames.check_fep_embedding(mz2, [2], strict=False)
        assert report.ok
        assert report.first_failure() is None
        assert report.to_dict()["instances_checked"] == len(report.instances)

    def test_preservation(self, mz2):
        """Commutativity carries over; a failing identity is vacuously preserved."""
        result = frames.check_preservation(mz2, [2], [COMMUTATIVITY, knotted(2, 3)])
        commutative, knot = result.entries
        assert commutative.holds_in_source and commutative.holds_in_galois
        assert not knot.holds_in_source
        assert knot.preserved
        assert result.ok

    def test_no_identities(self, mz2):
        """An empty list is trivially preserved."""
        assert frames.check_preservation(mz2, [2], []).ok
