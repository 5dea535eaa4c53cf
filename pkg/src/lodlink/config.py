"""Service configuration: ``key=value`` file, overridable by CLI flags."""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from .errors import ConfigError
from .repository import DEFAULT_ABSTRACT_PROPERTY
from .endpoint import DEFAULT_DISAMBIGUATES_PROPERTY, DEFAULT_REDIRECT_PROPERTY


@dataclass
class ServiceConfig:
    data_dir: str = "lodlink-data"
    local_repo_path: str | None = None
    target_repo_path: str | None = None
    anchor_table_path: str | None = None
    prefix_table_path: str | None = None
    disjointness_declarations_path: str | None = None
    link_types_path: str | None = None
    label_properties: list[str] = field(default_factory=list)  # empty = shipped defaults
    abstract_property: str = DEFAULT_ABSTRACT_PROPERTY.value
    redirect_property: str = DEFAULT_REDIRECT_PROPERTY.value
    disambiguates_property: str = DEFAULT_DISAMBIGUATES_PROPERTY.value
    default_algorithm: str = "endpoint-al"
    k: int = 10
    context_k: int = 5
    context_types_k: int = 3
    max_redirect_depth: int = 5
    filter_kinds: list[str] = field(default_factory=lambda: ["concept"])
    listen_address: str = "127.0.0.1:8000"

    def validate(self) -> None:
        if self.k < 1:
            raise ConfigError("k must be >= 1")
        if self.context_k < 0 or self.context_types_k < 0:
            raise ConfigError("context sizes must be >= 0")
        if self.max_redirect_depth < 1:
            raise ConfigError("max_redirect_depth must be >= 1")
        for name in (
            "local_repo_path",
            "target_repo_path",
            "anchor_table_path",
            "prefix_table_path",
            "disjointness_declarations_path",
            "link_types_path",
        ):
            value = getattr(self, name)
            if value is not None and not Path(value).is_file():
                raise ConfigError(f"{name} does not point to a readable file: {value}")


_LIST_KEYS = {"label_properties", "filter_kinds"}
_INT_KEYS = {"k", "context_k", "context_types_k", "max_redirect_depth"}


def load_config(path: str | Path | None = None, overrides: dict | None = None) -> ServiceConfig:
    """Build a config from an optional file plus programmatic overrides."""
    cfg = ServiceConfig()
    known = {f.name for f in fields(ServiceConfig)}
    if path is not None:
        for number, raw in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), start=1
        ):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"line {number}: expected key=value, got {raw!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in known:
                raise ConfigError(f"line {number}: unknown key {key!r}")
            if key in _LIST_KEYS:
                parsed: object = [v.strip() for v in value.split(",") if v.strip()]
            elif key in _INT_KEYS:
                try:
                    parsed = int(value)
                except ValueError:
                    raise ConfigError(f"line {number}: {key} must be an integer") from None
            elif key.endswith("_path"):
                parsed = value or None
            else:
                if not value:
                    raise ConfigError(f"line {number}: {key} must not be empty")
                parsed = value
            cfg = replace(cfg, **{key: parsed})
    if overrides:
        unknown = set(overrides) - known
        if unknown:
            raise ConfigError(f"unknown config overrides: {sorted(unknown)}")
        cfg = replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    cfg.validate()
    return cfg
