"""Scenario/cipher configuration files.

INI layout, one section per entry, keys named after the dataclass fields::

    [defaults]
    scenario = lab
    cipher = aes128-d57894

    [scenario lab]
    gate_speed_hz = 1e6
    ccy_cost_usd = 1e6

    [cipher toy]
    key_bits = 64
    depth = 1000
    width = 100

Entries are merged over the built-in presets; a user entry with a preset's
name replaces it (with a warning).
"""

from __future__ import annotations

import configparser
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from . import presets
from .core import CipherSpec, QuantumScenario


class ConfigError(ValueError):
    pass


@dataclass
class ScenarioConfig:
    scenarios: dict[str, QuantumScenario] = field(default_factory=lambda: dict(presets.SCENARIOS))
    ciphers: dict[str, CipherSpec] = field(default_factory=lambda: dict(presets.CIPHERS))
    default_scenario: str = presets.DEFAULT_SCENARIO
    default_cipher: str = presets.DEFAULT_CIPHER

    def scenario(self, name: str | None = None) -> QuantumScenario:
        name = name or self.default_scenario
        try:
            return self.scenarios[name]
        except KeyError:
            raise ConfigError(f"unknown scenario {name!r}; known: {sorted(self.scenarios)}") from None

    def cipher(self, name: str | None = None) -> CipherSpec:
        name = name or self.default_cipher
        try:
            return self.ciphers[name]
        except KeyError:
            raise ConfigError(f"unknown cipher {name!r}; known: {sorted(self.ciphers)}") from None


_FIELDS = {
    "scenario": {"gate_speed_hz": float, "ccy_cost_usd": float},
    "cipher": {"key_bits": int, "depth": int, "width": int},
}


def _section_lines(text: str) -> dict[str, int]:
    lines = {}
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s.startswith("[") and s.endswith("]"):
            lines.setdefault(s[1:-1].strip(), no)
    return lines


def _build(kind: str, name: str, section: configparser.SectionProxy, where: str):
    spec = _FIELDS[kind]
    unknown = set(section) - set(spec)
    if unknown:
        raise ConfigError(f"{where}: unknown field(s) {sorted(unknown)} in {kind} {name!r}")
    missing = set(spec) - set(section)
    if missing:
        raise ConfigError(f"{where}: {kind} {name!r} missing field(s) {sorted(missing)}")
    values = {}
    for key, conv in spec.items():
        raw = section[key]
        try:
            values[key] = conv(float(raw)) if conv is int and "e" in raw.lower() else conv(raw)
        except ValueError:
            raise ConfigError(f"{where}: field {key!r} of {kind} {name!r} is not a number: {raw!r}") from None
    try:
        if kind == "scenario":
            return QuantumScenario(name, **values)
        return CipherSpec(name, **values)
    except ValueError as exc:
        raise ConfigError(f"{where}: {kind} {name!r}: {exc}") from None


def parse_config(text: str, source: str = "<config>") -> ScenarioConfig:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=source)
    except configparser.MissingSectionHeaderError as exc:
        raise ConfigError(f"{source}:{exc.lineno}: expected a [section] header") from None
    except configparser.ParsingError as exc:
        lineno = exc.errors[0][0] if exc.errors else "?"
        raise ConfigError(f"{source}:{lineno}: cannot parse line") from None
    except (configparser.DuplicateSectionError, configparser.DuplicateOptionError) as exc:
        raise ConfigError(f"{source}:{exc.lineno}: {exc.message}") from None

    lines = _section_lines(text)
    cfg = ScenarioConfig()
    for sec in parser.sections():
        where = f"{source}:{lines.get(sec, '?')}"
        if sec == "defaults":
            continue
        kind, _, name = sec.partition(" ")
        name = name.strip()
        if kind not in _FIELDS or not name:
            raise ConfigError(f"{where}: unknown section [{sec}]; use [scenario NAME], [cipher NAME] or [defaults]")
        obj = _build(kind, name, parser[sec], where)
        table = cfg.scenarios if kind == "scenario" else cfg.ciphers
        if name in table:
            warnings.warn(f"{where}: {kind} {name!r} shadows the built-in preset", stacklevel=2)
        table[name] = obj

    if parser.has_section("defaults"):
        d = parser["defaults"]
        where = f"{source}:{lines.get('defaults', '?')}"
        unknown = set(d) - {"scenario", "cipher"}
        if unknown:
            raise ConfigError(f"{where}: unknown field(s) {sorted(unknown)} in [defaults]")
        if "scenario" in d:
            if d["scenario"] not in cfg.scenarios:
                raise ConfigError(f"{where}: default scenario {d['scenario']!r} is not defined")
            cfg.default_scenario = d["scenario"]
        if "cipher" in d:
            if d["cipher"] not in cfg.ciphers:
                raise ConfigError(f"{where}: default cipher {d['cipher']!r} is not defined")
            cfg.default_cipher = d["cipher"]
    return cfg


def load_config(path: str | Path | None) -> ScenarioConfig:
    if path is None:
        return ScenarioConfig()
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    return parse_config(text, source=str(path))
