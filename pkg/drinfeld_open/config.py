"""
Run configuration: YAML defaults from configs/default.yaml merged with overrides.
"""
import copy
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import yaml

from .errors import ConfigError

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), "configs", "default.yaml")

SECTIONS = ("run", "charpoly", "closure", "sweep", "rootsys", "eigenrel")
MODES = ("full", "squares")


@dataclass
class RunConfig:
    """
    Everything one command needs to run deterministically.

    Args:
        command: subcommand name
        input_path: module definition file
        place_deg: place degree bound B of the sweep
        prime_deg: degree bound for the primes p
        cap: BFS element cap
        seed: seed of every randomized internal
        out_path: report destination
        mode: depth-2 criterion, "full" or "squares"
        sections: the nested YAML sections after merging
    """
    command: str = ""
    input_path: Optional[str] = None
    place_deg: int = 4
    prime_deg: int = 3
    cap: int = 2_000_000
    seed: int = 0
    out_path: Optional[str] = None
    mode: str = "full"
    sections: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def section(self, name: str) -> Dict[str, Any]:
        return self.sections.get(name, {})

    def validate(self) -> "RunConfig":
        if self.place_deg < 1 or self.prime_deg < 1:
            raise ConfigError(f"degree bounds must be >= 1, got place {self.place_deg}, prime {self.prime_deg}")
        if self.cap < 1:
            raise ConfigError(f"cap must be >= 1, got {self.cap}")
        torsion_cap = self.section("charpoly").get("torsion_cap")
        if torsion_cap is not None and int(torsion_cap) < 1:
            raise ConfigError(f"charpoly.torsion_cap must be null or >= 1, got {torsion_cap}")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "input": self.input_path,
            "place_deg": self.place_deg,
            "prime_deg": self.prime_deg,
            "cap": self.cap,
            "seed": self.seed,
            "mode": self.mode,
        }


def _deep_merge(base: Dict[str, Any], over: Dict[str, Any]) -> Dict[str, Any]:
    out = copy.deepcopy(base)
    for key, value in over.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _deep_merge(out[key], value)
        elif value is not None:
            out[key] = value
    return out


def _read_yaml(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"invalid YAML in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must be a mapping")
    unknown = set(data) - set(SECTIONS)
    if unknown:
        raise ConfigError(f"unknown config sections: {sorted(unknown)}")
    return data


def load_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """
    Load the defaults, then ``path`` on top, then ``overrides``.

    Overrides are either flat RunConfig fields (``cap``, ``seed``, ...) or
    nested section dicts. ``None`` values leave the loaded value alone.

    Raises:
        ConfigError: unreadable file, unknown section, or a violated bound
    """
    data = _read_yaml(DEFAULT_CONFIG_PATH)
    if path is not None:
        data = _deep_merge(data, _read_yaml(path))
    overrides = dict(overrides or {})
    nested = {k: overrides.pop(k) for k in list(overrides) if k in SECTIONS}
    data = _deep_merge(data, nested)

    run, sweep = data.get("run", {}), data.get("sweep", {})
    cfg = RunConfig(
        place_deg=int(sweep.get("place_degree", 4)),
        prime_deg=int(sweep.get("prime_degree", 3)),
        cap=int(data.get("closure", {}).get("cap", 2_000_000)),
        seed=int(run.get("seed", 0)),
        mode=str(sweep.get("mode", "full")),
        sections=data,
    )
    for key, value in overrides.items():
        if not hasattr(cfg, key) or key == "sections":
            raise ConfigError(f"unknown override {key!r}")
        if value is not None:
            setattr(cfg, key, value)
    return cfg.validate()
