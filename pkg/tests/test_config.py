from __future__ import annotations

import pytest

from quadloco.errors import ConfigError, InvalidC
from quadloco.mapper.config import MapperConfig, config_keys, parse_config, render_config


def test_defaults_match_documented_values():
    cfg = MapperConfig()
    assert cfg.c == 0.25
    assert cfg.coyote == 0.200
    assert cfg.b_xz == 1.6
    assert cfg.b_y == 1.5
    assert cfg.b_z == 0.6
    assert cfg.v_y_max == 4.0
    assert cfg.v_z_max == 6.0
    assert cfg.speed_threshold == 0.15
    assert cfg.jump_trigger == 1.0


def test_every_constant_is_a_key():
    assert set(config_keys()) == {
        "c", "b_xz", "b_y", "b_z", "v_y_max", "v_z_max",
        "speed_threshold", "jump_trigger", "coyote",
    }


def test_render_parse_roundtrip():
    cfg = MapperConfig(b_xz=2.345, coyote=0.1)
    assert parse_config(render_config(cfg)) == cfg


def test_parse_partial_file_keeps_defaults():
    cfg = parse_config("b_xz = 3.2\n# comment\n\ncoyote=0.1\n")
    assert cfg.b_xz == 3.2
    assert cfg.coyote == 0.1
    assert cfg.c == 0.25


def test_unknown_key_is_error():
    with pytest.raises(ConfigError, match="unknown key"):
        parse_config("bounciness = 3\n")


def test_duplicate_key_is_error():
    with pytest.raises(ConfigError, match="duplicate"):
        parse_config("c = 0.25\nc = 0.3\n")


def test_non_numeric_value_is_error():
    with pytest.raises(ConfigError, match="non-numeric"):
        parse_config("c = high\n")


def test_invalid_c_raises_specific_error():
    with pytest.raises(InvalidC):
        MapperConfig(c=0.0)
    with pytest.raises(InvalidC):
        parse_config("c = -1\n")


@pytest.mark.parametrize("field, value", [
    ("b_xz", 0.0), ("b_y", -1.0), ("v_y_max", 0.0),
    ("speed_threshold", -0.1), ("coyote", -0.2),
])
def test_other_invariants(field, value):
    with pytest.raises(ConfigError):
        MapperConfig(**{field: value})


def test_replace_validates_keys():
    cfg = MapperConfig()
    assert cfg.replace(b_xz=3.2).b_xz == 3.2
    with pytest.raises(ConfigError):
        cfg.replace(warp_drive=1.0)
    with pytest.raises(InvalidC):
        cfg.replace(c=0.0)
