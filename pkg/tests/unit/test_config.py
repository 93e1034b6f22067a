"""Tests for reslat.config module."""
import pytest
from pydantic import ValidationError

from reslat.config import Settings


class TestSettings:
    """Tests for Settings."""

    def test_defaults(self):
        """Defaults describe a quiet single-threaded run."""
        settings = Settings()
        assert settings.CONJUGATE_DEPTH == 2
        assert settings.ENUMERATION_JOBS == 1
        assert settings.ENUMERATION_CAP is None
        assert settings.LOG_LEVEL == "WARNING"

    def test_log_level_is_normalised(self):
        """Level names are case-insensitive."""
        assert Settings(LOG_LEVEL="debug").LOG_LEVEL == "DEBUG"

    @pytest.mark.parametrize("overrides", [{"LOG_LEVEL": "loud"}, {"ENUMERATION_JOBS": 0}, {"CONJUGATE_DEPTH": -1}])
    def test_rejects(self, overrides):
        """Out-of-range values fail validation."""
        with pytest.raises(ValidationError):
            Settings(**overrides)

    def test_environment_is_ignored(self, monkeypatch):
        """Only keyword arguments configure a run."""
        monkeypatch.setenv("CONJUGATE_DEPTH", "5")
        assert Settings().CONJUGATE_DEPTH == 2
