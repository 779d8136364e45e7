"""Run settings: built-in defaults, then a ``key=value`` file, then command-line flags."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import DomainError
from .wtest import CertaintyThresholds, WTestConfig

CONFIG_ENV = "WEIGHTSPACE_CONFIG"


@dataclass(frozen=True)
class Settings:
    ci_multiplier: float = 1.96
    ci_mode: str = "normal"
    skew: str = "adjusted"
    thresholds: tuple[float, float] = (-1.28, -3.00)
    precision: int = 6
    transforms: tuple[str, ...] = ("identity", "ln", "exp")
    sd_convention: str = "upper"
    welch: bool = False

    def wtest_config(self) -> WTestConfig:
        hi, lo = self.thresholds
        return WTestConfig(
            ci_multiplier=self.ci_multiplier,
            ci_mode=self.ci_mode,
            thresholds=CertaintyThresholds(indeterminate_above=hi, different_below=lo),
            equal_var=not self.welch,
        )

    def as_dict(self) -> dict:
        return {f.name: (list(v) if isinstance(v := getattr(self, f.name), tuple) else v)
                for f in fields(self)}


def parse_thresholds(text: str) -> tuple[float, float]:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 2:
        raise DomainError(f"thresholds take two comma-separated certainties C1,C2 (got {text!r})")
    try:
        hi, lo = float(parts[0]), float(parts[1])
    except ValueError:
        raise DomainError(f"thresholds must be numbers (got {text!r})") from None
    CertaintyThresholds(indeterminate_above=hi, different_below=lo)
    return hi, lo


def parse_transforms(text: str) -> tuple[str, ...]:
    names = tuple(p.strip() for p in text.split(",") if p.strip())
    if not names:
        raise DomainError("at least one transform is required")
    return names


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise DomainError(f"expected a boolean (got {text!r})")


_PARSERS = {
    "ci_multiplier": float,
    "ci_mode": str.strip,
    "skew": str.strip,
    "thresholds": parse_thresholds,
    "precision": int,
    "transforms": parse_transforms,
    "sd_convention": str.strip,
    "welch": _parse_bool,
}


def parse_config(text: str, source: str = "<config>") -> dict:
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DomainError(f"{source}: line {lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _PARSERS:
            raise DomainError(f"{source}: line {lineno}: unknown setting {key!r}")
        try:
            out[key] = _PARSERS[key](value)
        except ValueError as exc:
            raise DomainError(f"{source}: line {lineno}: bad value for {key}: {exc}") from None
    return out


def load_settings(overrides: dict | None = None, environ=None) -> Settings:
    environ = os.environ if environ is None else environ
    settings = Settings()
    path = environ.get(CONFIG_ENV)
    if path:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise DomainError(f"{CONFIG_ENV}={path}: cannot read ({exc.strerror})") from None
        settings = replace(settings, **parse_config(text, path))
    if overrides:
        settings = replace(settings, **{k: v for k, v in overrides.items() if v is not None})
    if settings.precision < 1 or settings.precision > 17:
        raise DomainError(f"precision must be between 1 and 17 (got {settings.precision})")
    return settings
