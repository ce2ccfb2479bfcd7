import pytest

from kpuzzle.config import (
    OracleSettings,
    RenderStyle,
    Settings,
    load_settings,
    settings_from_dict,
)


class TestSettings:
    def test_defaults(self):
        settings = settings_from_dict(None)
        assert settings == Settings()
        assert settings.oracle.seed == 1729
        assert settings.lattice.max_sites == 16

    def test_sections(self):
        settings = settings_from_dict(
            {"render": {"scale": 20, "red": "#000000"}, "oracle": {"trials": 3}}
        )
        assert settings.render == RenderStyle(scale=20.0, red="#000000")
        assert settings.oracle == OracleSettings(trials=3)

    def test_unknown_section(self):
        with pytest.raises(ValueError) as excinfo:
            settings_from_dict({"colours": {}})
        assert "Invalid key colours" in str(excinfo.value)

    def test_unknown_key(self):
        with pytest.raises(ValueError) as excinfo:
            settings_from_dict({"render": {"foo": 1}})
        assert "Invalid key render.foo" in str(excinfo.value)

    def test_wrong_type(self):
        with pytest.raises(ValueError) as excinfo:
            settings_from_dict({"oracle": {"seed": "seven"}})
        assert "expected int" in str(excinfo.value)

    def test_not_a_mapping(self):
        with pytest.raises(ValueError):
            settings_from_dict(["render"])


class TestLoad:
    def test_file(self, tmp_path):
        path = tmp_path / "kpuzzle.yaml"
        path.write_text("lattice:\n  max_sites: 12\n", encoding="utf-8")
        assert load_settings(path).lattice.max_sites == 12

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")
        assert load_settings(path) == Settings()

    def test_broken_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("render: [unclosed\n", encoding="utf-8")
        with pytest.raises(ValueError) as excinfo:
            load_settings(path)
        assert "Invalid configuration file" in str(excinfo.value)
