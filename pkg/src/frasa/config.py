"""INI-style configuration trees with nested sections and dotted overrides.

All on-disk configuration (run configs, robot models, animations, reports)
uses one format: ``[section.subsection]`` headers followed by ``key = value``
lines.  Values stay strings until a consumer coerces them.
"""
from __future__ import annotations

import configparser
import importlib.resources
import os
from pathlib import Path


class ConfigError(ValueError):
    """Malformed configuration file, key, or override."""


def _coerce_bool(raw: str) -> bool:
    low = raw.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"not a boolean: {raw!r}")


class Config:
    """Nested key-value configuration.

    Sections are flat dotted names ("env.randomization"); nesting is a
    naming convention, which keeps files trivially diffable and lets
    overrides address any leaf as ``section.key=value``.
    """

    def __init__(self, data: dict[str, dict[str, str]] | None = None):
        self._data: dict[str, dict[str, str]] = {}
        if data:
            for section, entries in data.items():
                self._data[section] = dict(entries)

    @classmethod
    def loads(cls, text: str) -> "Config":
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str  # keep key case
        try:
            parser.read_string(text)
        except configparser.Error as exc:
            raise ConfigError(str(exc)) from exc
        return cls({s: dict(parser[s]) for s in parser.sections()})

    @classmethod
    def load(cls, path: str | Path) -> "Config":
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")
        return cls.loads(path.read_text())

    def copy(self) -> "Config":
        return Config(self._data)

    def merge(self, other: "Config") -> "Config":
        """Overlay ``other`` on top of self; other's values win."""
        merged = self.copy()
        for section, entries in other._data.items():
            merged._data.setdefault(section, {}).update(entries)
        return merged

    def set(self, dotted: str, value: str) -> None:
        """Apply one ``section.key=value`` override; value given separately."""
        if "." not in dotted:
            raise ConfigError(f"override key must be section.key, got {dotted!r}")
        section, key = dotted.rsplit(".", 1)
        self._data.setdefault(section, {})[key] = str(value)

    def has(self, section: str, key: str | None = None) -> bool:
        if key is None:
            return section in self._data
        return section in self._data and key in self._data[section]

    def sections(self) -> list[str]:
        return sorted(self._data)

    def subsections(self, prefix: str) -> list[str]:
        """Sections that extend ``prefix.`` (e.g. link.* of a robot model)."""
        head = prefix + "."
        return sorted(s for s in self._data if s.startswith(head))

    def raw(self, section: str, key: str) -> str:
        try:
            return self._data[section][key]
        except KeyError:
            raise ConfigError(f"missing config key [{section}] {key}") from None

    def get(self, section: str, key: str, default=None):
        if not self.has(section, key):
            return default
        return self._data[section][key]

    def get_float(self, section: str, key: str, default: float | None = None) -> float:
        if not self.has(section, key):
            if default is None:
                raise ConfigError(f"missing config key [{section}] {key}")
            return default
        raw = self.raw(section, key)
        try:
            return float(raw)
        except ValueError:
            raise ConfigError(f"[{section}] {key}: not a number: {raw!r}") from None

    def get_int(self, section: str, key: str, default: int | None = None) -> int:
        if not self.has(section, key):
            if default is None:
                raise ConfigError(f"missing config key [{section}] {key}")
            return default
        raw = self.raw(section, key)
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"[{section}] {key}: not an integer: {raw!r}") from None

    def get_bool(self, section: str, key: str, default: bool | None = None) -> bool:
        if not self.has(section, key):
            if default is None:
                raise ConfigError(f"missing config key [{section}] {key}")
            return default
        return _coerce_bool(self.raw(section, key))

    def get_floats(self, section: str, key: str, default=None) -> list[float]:
        """Comma-separated list of numbers."""
        if not self.has(section, key):
            if default is None:
                raise ConfigError(f"missing config key [{section}] {key}")
            return list(default)
        raw = self.raw(section, key)
        try:
            return [float(tok) for tok in raw.split(",") if tok.strip()]
        except ValueError:
            raise ConfigError(f"[{section}] {key}: not a number list: {raw!r}") from None

    def dump(self) -> str:
        lines = []
        for section in sorted(self._data):
            lines.append(f"[{section}]")
            for key in sorted(self._data[section]):
                lines.append(f"{key} = {self._data[section][key]}")
            lines.append("")
        return "\n".join(lines)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dump())


def packaged_path(name: str) -> Path:
    """Path of a data file shipped inside the package (configs, models)."""
    root = importlib.resources.files("frasa").joinpath("data")
    return Path(str(root.joinpath(name)))


def resolve_config_path(name: str | os.PathLike) -> Path:
    """Resolve a config reference: explicit path first, then packaged data."""
    path = Path(name)
    if path.is_file():
        return path
    candidate = packaged_path(str(name))
    if candidate.is_file():
        return candidate
    raise ConfigError(f"config not found: {name} (no such file, not packaged)")
