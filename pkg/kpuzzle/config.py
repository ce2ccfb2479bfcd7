"""
Settings of the command line tool, optionally read from a YAML document::

    render:
      scale: 40
      k_tile_fill: "#f4d35e"
    oracle:
      seed: 7
    lattice:
      max_sites: 14
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields, replace
from os import PathLike
from typing import Any, Dict, Mapping, Type, TypeVar, Union

import yaml

log = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class RenderStyle:
    red: str = "#d62828"
    green: str = "#2a9d3f"
    #: outline of every triangle
    outline: str = "#9a9a9a"
    k_tile_fill: str = "#f4d35e"
    equivariant_fill: str = "#a8dadc"
    #: pixels per unit edge
    scale: float = 40.0
    stroke_width: float = 3.0


@dataclass(frozen=True)
class OracleSettings:
    seed: int = 1729
    #: numerators and denominators of random points are drawn from [1, max_value]
    max_value: int = 97
    trials: int = 8
    max_retries: int = 16


@dataclass(frozen=True)
class LatticeSettings:
    max_sites: int = 16


@dataclass(frozen=True)
class Settings:
    render: RenderStyle = field(default_factory=RenderStyle)
    oracle: OracleSettings = field(default_factory=OracleSettings)
    lattice: LatticeSettings = field(default_factory=LatticeSettings)


def _section(cls: Type[T], values: Any, name: str) -> T:
    if values is None:
        return cls()
    if not isinstance(values, Mapping):
        raise ValueError(f"Invalid section {name}, expected a mapping")
    known = {f.name for f in fields(cls)}  # type: ignore[arg-type]
    kwargs: Dict[str, Any] = {}
    for key, value in values.items():
        if key not in known:
            raise ValueError(f"Invalid key {name}.{key}")
        default = getattr(cls(), key)
        if isinstance(default, float) and isinstance(value, int):
            value = float(value)
        if type(value) is not type(default):
            raise ValueError(
                f"Invalid value {value!r} for {name}.{key}, "
                f"expected {type(default).__name__}"
            )
        kwargs[key] = value
    return replace(cls(), **kwargs)


def settings_from_dict(document: Any) -> Settings:
    if document is None:
        return Settings()
    if not isinstance(document, Mapping):
        raise ValueError("Invalid configuration, expected a mapping at the top level")
    sections = {f.name for f in fields(Settings)}
    for key in document:
        if key not in sections:
            raise ValueError(f"Invalid key {key}")
    return Settings(
        render=_section(RenderStyle, document.get("render"), "render"),
        oracle=_section(OracleSettings, document.get("oracle"), "oracle"),
        lattice=_section(LatticeSettings, document.get("lattice"), "lattice"),
    )


def load_settings(path: Union[str, PathLike]) -> Settings:
    """Read :class:`Settings` from the YAML file at ``path``."""
    with open(path, encoding="utf-8") as stream:
        try:
            document = yaml.safe_load(stream)
        except yaml.YAMLError as err:
            raise ValueError(f"Invalid configuration file {path}: {err}") from err
    log.debug("loaded settings from %s", path)
    return settings_from_dict(document)
