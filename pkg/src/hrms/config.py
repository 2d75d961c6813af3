"""Service configuration.

A flat ``key=value`` file (``hrms.conf`` in the data directory) holds the
operational knobs; environment variables named ``HRMS_<KEY>`` override the
file, and CLI flags override both. ``#`` starts a comment line.

Keys:
    vacation_days, sick_days, holiday_days  -- leave allocations (whole days)
    full_day_hours                          -- attendance hours per payable day
    training_pay_factor                     -- basic-pay multiplier while in training,
                                               rational in (0, 1], e.g. 1 or 1/2 or 0.75
    session_ttl_hours                       -- login session lifetime
    listen                                  -- host:port for the HTTP service
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from hrms.errors import HrmsError

CONFIG_FILENAME = "hrms.conf"
ENV_PREFIX = "HRMS_"


class ConfigError(HrmsError):
    code = "config_error"


@dataclass
class HrmsConfig:
    vacation_days: int = 20
    sick_days: int = 10
    holiday_days: int = 8
    full_day_hours: Fraction = Fraction(8)
    training_pay_factor: Fraction = Fraction(1)
    session_ttl_hours: int = 8
    listen: str = "127.0.0.1:8080"

    @property
    def listen_host(self) -> str:
        host, _, _ = self.listen.rpartition(":")
        return host

    @property
    def listen_port(self) -> int:
        _, _, port = self.listen.rpartition(":")
        try:
            return int(port)
        except ValueError:
            raise ConfigError(f"bad listen address {self.listen!r} (want host:port)")


def _parse_value(key: str, text: str):
    kind = {f.name: f.type for f in fields(HrmsConfig)}[key]
    try:
        if kind == "int":
            return int(text)
        if kind == "Fraction":
            value = Fraction(text)
            if value <= 0:
                raise ValueError("must be positive")
            return value
        return text
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad value for {key}: {text!r} ({exc})") from exc


def parse_config_text(text: str, source: str = "<config>") -> dict:
    known = {f.name for f in fields(HrmsConfig)}
    values: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not key:
            raise ConfigError(f"{source}:{lineno}: expected key=value, got {line!r}")
        if key not in known:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        values[key] = _parse_value(key, raw)
    return values


def config_file_text(config: HrmsConfig) -> str:
    lines = ["# hrms service configuration"]
    for f in fields(HrmsConfig):
        lines.append(f"{f.name}={getattr(config, f.name)}")
    return "\n".join(lines) + "\n"


def write_config(data_dir: str | Path, config: HrmsConfig | None = None) -> Path:
    path = Path(data_dir) / CONFIG_FILENAME
    path.write_text(config_file_text(config or HrmsConfig()), encoding="utf-8")
    return path


def load_config(
    data_dir: str | Path, env: Mapping[str, str] | None = None
) -> HrmsConfig:
    """Build the effective config: defaults, then file, then environment."""
    env = os.environ if env is None else env
    values: dict = {}
    path = Path(data_dir) / CONFIG_FILENAME
    if path.exists():
        values.update(parse_config_text(path.read_text(encoding="utf-8"), str(path)))
    for f in fields(HrmsConfig):
        env_key = ENV_PREFIX + f.name.upper()
        if env_key in env:
            values[f.name] = _parse_value(f.name, env[env_key])
    return HrmsConfig(**values)
