"""
Tests for settings and the parsing helpers
"""

import pytest
from pydantic import ValidationError

from app.core.config import Settings, get_settings
from app.utils.parsing import parse_divisor, parse_point_map
from app.utils.validators import is_prime, validate_point_token


class TestSettings:
    def test_defaults(self, clean_env):
        settings = Settings(_env_file=None)
        assert settings.NODE_CAP == 10_000_000
        assert settings.ENUMERATION_WORKERS == 1
        assert settings.GRID_P == [2, 3, 5]

    def test_environment_override(self, clean_env):
        clean_env.setenv("FROBSTRAT_NODE_CAP", "500")
        clean_env.setenv("FROBSTRAT_GRID_G", "[2, 4]")
        settings = get_settings()
        assert settings.NODE_CAP == 500
        assert settings.GRID_G == [2, 4]

    @pytest.mark.parametrize(
        "overrides",
        [
            {"NODE_CAP": 0},
            {"ENUMERATION_WORKERS": 0},
            {"GRID_P": []},
            {"GRID_D_MIN": 2, "GRID_D_MAX": 1},
            {"GRID_R_MAX": 0},
        ],
    )
    def test_limits(self, clean_env, overrides):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, **overrides)


class TestParsing:
    def test_divisor(self):
        assert parse_divisor("2*P1-1*P2") == [("P1", 2), ("P2", -1)]
        assert parse_divisor(" -3*A + 1*B ") == [("A", -3), ("B", 1)]
        assert parse_divisor("1*P+1*P") == [("P", 1), ("P", 1)]
        assert parse_divisor("") == []

    @pytest.mark.parametrize("text", ["2P1", "2*P1 1*P2", "*P1", "2*1P"])
    def test_bad_divisor(self, text):
        with pytest.raises(ValueError):
            parse_divisor(text)

    def test_point_map(self):
        assert parse_point_map("P1:Q1, P2:Q2") == {"P1": "Q1", "P2": "Q2"}
        assert parse_point_map("") == {}

    @pytest.mark.parametrize("text", ["P1", "P1:", "P1:Q1,P1:Q2", "1P:Q"])
    def test_bad_point_map(self, text):
        with pytest.raises(ValueError):
            parse_point_map(text)


class TestValidators:
    def test_is_prime(self):
        assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_point_token(self):
        assert validate_point_token("Q_2'")
        assert not validate_point_token("2Q")
