"""Run configuration: defaults, JSON parsing, validation."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

NETWORK_KINDS = ("giant", "communities")
CONFIDENCE_MODES = ("random", "polarized")


class ConfigError(ValueError):
    """Invalid configuration; `field` names the offending entry when known."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


@dataclass
class SimConfig:
    """Every model and experiment parameter plus the master seed.

    Round-trips losslessly through `serialize_config` / `parse_config`.
    """

    n: int = 400
    m: int = 5
    k: float = 10.0              # target mean degree, giant-component network
    k_in: float = 10.0           # intra-community mean degree, two-community network
    k_out: float = 0.5           # expected bridges scale, two-community network
    network_kind: str = "giant"
    polarization_index: float = 0.5
    confidence_mode: str = "random"
    a: float = 0.8               # polarized confidence level
    c: float = 0.5               # self-confidence
    steps: int = 40
    seed: int = 0
    add_self_loops: bool = True
    sinkhorn_tol: float = 1e-9
    sinkhorn_max_iter: int = 1000
    record_confidence: bool = False

    def validate(self) -> "SimConfig":
        _require_int(self.n, "n", minimum=1)
        _require_int(self.m, "m", minimum=1)
        _require_int(self.steps, "steps", minimum=1)
        _require_int(self.seed, "seed")
        _require_int(self.sinkhorn_max_iter, "sinkhorn_max_iter", minimum=1)
        _require_real(self.k, "k")
        _require_real(self.k_in, "k_in")
        _require_real(self.k_out, "k_out")
        _require_real(self.polarization_index, "polarization_index")
        _require_real(self.a, "a")
        _require_real(self.c, "c")
        _require_real(self.sinkhorn_tol, "sinkhorn_tol")
        _require_bool(self.add_self_loops, "add_self_loops")
        _require_bool(self.record_confidence, "record_confidence")

        if not 0 <= self.k < self.n:
            raise ConfigError(f"k must satisfy 0 <= k < n, got k={self.k}", "k")
        if self.network_kind not in NETWORK_KINDS:
            raise ConfigError(
                f"network_kind must be one of {NETWORK_KINDS}, got {self.network_kind!r}",
                "network_kind",
            )
        if self.confidence_mode not in CONFIDENCE_MODES:
            raise ConfigError(
                f"confidence_mode must be one of {CONFIDENCE_MODES}, got {self.confidence_mode!r}",
                "confidence_mode",
            )
        if self.network_kind == "communities":
            if self.n % 2 != 0:
                raise ConfigError(f"n must be even for a two-community network, got {self.n}", "n")
            if not 0 < self.k_in < self.n / 2:
                raise ConfigError(
                    f"k_in must satisfy 0 < k_in < n/2, got k_in={self.k_in}", "k_in"
                )
            if not 0 <= self.k_out < self.n:
                raise ConfigError(
                    f"k_out must satisfy 0 <= k_out < n, got k_out={self.k_out}", "k_out"
                )
        if not 0.0 <= self.polarization_index <= 1.0:
            raise ConfigError(
                f"polarization_index must lie in [0, 1], got {self.polarization_index}",
                "polarization_index",
            )
        if not 0.0 <= self.a <= 1.0:
            raise ConfigError(f"a must lie in [0, 1], got {self.a}", "a")
        if not 0.0 <= self.c <= 1.0:
            raise ConfigError(f"c must lie in [0, 1], got {self.c}", "c")
        if not self.sinkhorn_tol > 0:
            raise ConfigError(f"sinkhorn_tol must be positive, got {self.sinkhorn_tol}", "sinkhorn_tol")
        return self

    def replace(self, **overrides) -> "SimConfig":
        """New config with the given fields overridden, re-validated."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ConfigError(f"unknown config field(s): {sorted(unknown)}")
        data = asdict(self)
        data.update(overrides)
        return SimConfig(**data).validate()

    def to_dict(self) -> dict:
        return asdict(self)


def _require_int(value, name: str, minimum: int | None = None) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{name} must be an integer, got {value!r}", name)
    if minimum is not None and value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}", name)


def _require_real(value, name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{name} must be a number, got {value!r}", name)


def _require_bool(value, name: str) -> None:
    if not isinstance(value, bool):
        raise ConfigError(f"{name} must be a boolean, got {value!r}", name)


def parse_config(text: str) -> SimConfig:
    """Parse a JSON config document, filling defaults and rejecting unknown keys."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"config parse error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise ConfigError("config document must be a JSON object")
    known = {f.name for f in fields(SimConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config field(s): {sorted(unknown)}")
    # floats that arrive as ints are fine; validate() rejects the rest
    for name in ("k", "k_in", "k_out", "polarization_index", "a", "c", "sinkhorn_tol"):
        if name in data and isinstance(data[name], int) and not isinstance(data[name], bool):
            data[name] = float(data[name])
    return SimConfig(**data).validate()


def serialize_config(cfg: SimConfig) -> str:
    """Stable JSON rendering; parse_config(serialize_config(cfg)) == cfg."""
    return json.dumps(cfg.to_dict(), indent=2) + "\n"
