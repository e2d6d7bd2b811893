"""Tests for gjlogic configuration helpers."""

from __future__ import annotations

import pytest

from gjlogic.config import GJLogicSettings, _get_int, load_settings

_KEYS = (
    "GJLOGIC_SEED",
    "GJLOGIC_UNIVERSE_SIZE",
    "GJLOGIC_CS_SAMPLE_SIZE",
    "GJLOGIC_PROVER_DEPTH",
    "GJLOGIC_LOG_LEVEL",
)


class TestLoadSettings:
    """Behavioural checks for the load_settings helper."""

    def test_load_defaults_when_env_empty(self, monkeypatch: pytest.MonkeyPatch) -> None:
        for key in _KEYS:
            monkeypatch.delenv(key, raising=False)

        settings = load_settings()

        assert settings == GJLogicSettings(
            seed=20190801,
            universe_size=200,
            cs_sample_size=20,
            prover_depth=3,
            log_level="WARNING",
        )

    def test_load_values_from_env(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("GJLOGIC_SEED", "7")
        monkeypatch.setenv("GJLOGIC_UNIVERSE_SIZE", "50")
        monkeypatch.setenv("GJLOGIC_CS_SAMPLE_SIZE", "5")
        monkeypatch.setenv("GJLOGIC_PROVER_DEPTH", "2")
        monkeypatch.setenv("GJLOGIC_LOG_LEVEL", "debug")

        settings = load_settings()

        assert settings.seed == 7
        assert settings.universe_size == 50
        assert settings.cs_sample_size == 5
        assert settings.prover_depth == 2
        assert settings.log_level == "DEBUG"


class TestGetIntHelper:
    """Validation coverage for the internal _get_int helper."""

    def test_get_int_rejects_non_numeric(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("GJLOGIC_SEED", "not-a-number")

        with pytest.raises(ValueError) as excinfo:
            _get_int("GJLOGIC_SEED", default=1)

        assert "GJLOGIC_SEED must be an integer" in str(excinfo.value)

    def test_get_int_falls_back_to_default(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv("GJLOGIC_SEED", raising=False)

        assert _get_int("GJLOGIC_SEED", default=11) == 11
