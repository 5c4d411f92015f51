"""Warehouse and workload parameter sets, config loading, and low-level derivation."""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from .randomness import DEFAULT_SEED, GENERATORS, RandomStream, round_half_up

DENSITY_FLOOR = 1e-6
DEFAULT_MAX_ROWS = 10_000_000


class ConfigError(ValueError):
    """Malformed or invalid configuration."""

    def __init__(self, message, line=None, key=None):
        self.line = line
        self.key = key
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(key)
        super().__init__(": ".join(where + [message]))


@dataclass(frozen=True)
class HighLevelParams:
    avg_nb_ft: float = 1
    avg_nb_dim: float = 5
    avg_tot_nb_dim: float = 5
    avg_nb_meas: float = 5
    avg_density: float = 0.6
    avg_nb_levels: float = 3
    avg_nb_att: float = 5
    avg_hhlevel_size: float = 10
    dim_sfactor: float = 10
    sigma_fraction: float = 0.2

    def violations(self) -> list[str]:
        out = []
        for name in ("avg_nb_ft", "avg_nb_dim", "avg_tot_nb_dim", "avg_nb_meas",
                     "avg_nb_levels", "avg_nb_att", "avg_hhlevel_size"):
            if not getattr(self, name) >= 1:
                out.append(f"{name}: count must be >= 1")
        if not 0 < self.avg_density <= 1:
            out.append("avg_density: density out of (0,1]")
        if not self.dim_sfactor >= 1:
            out.append("dim_sfactor: scale factor must be >= 1")
        if not self.sigma_fraction >= 0:
            out.append("sigma_fraction: must be >= 0")
        return out


@dataclass(frozen=True)
class LowLevelParams:
    """Per-object warehouse parameters.

    Sequences are indexed by fact table (``nb_dim``, ``nb_meas``, ``density``)
    or by dimension (``nb_levels``, ``hhlevel_size``, ``dim_sfactor``).
    ``nb_att[d][h]`` lists descriptor counts for dimension ``d`` from the
    coarsest level down.
    """

    nb_ft: int
    nb_dim: tuple
    tot_nb_dim: int
    nb_meas: tuple
    density: tuple
    nb_levels: tuple
    nb_att: tuple
    hhlevel_size: tuple
    dim_sfactor: tuple

    def level_sizes(self, d: int) -> list[int]:
        """Cardinalities of dimension ``d``'s levels, coarsest first."""
        return [self.hhlevel_size[d] * self.dim_sfactor[d] ** k for k in range(self.nb_levels[d])]

    def to_text(self) -> str:
        lines = [
            f"nb_ft = {self.nb_ft}",
            f"nb_dim = {_join(self.nb_dim)}",
            f"tot_nb_dim = {self.tot_nb_dim}",
            f"nb_meas = {_join(self.nb_meas)}",
            f"density = {_join(self.density)}",
            f"nb_levels = {_join(self.nb_levels)}",
            "nb_att = " + "; ".join(_join(row) for row in self.nb_att),
            f"hhlevel_size = {_join(self.hhlevel_size)}",
            f"dim_sfactor = {_join(self.dim_sfactor)}",
        ]
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()


@dataclass(frozen=True)
class WorkloadParams:
    nb_q: int = 100
    avg_nb_att_q: float = 5
    avg_nb_restr: float = 3
    prob_olap: float = 0.9
    avg_nb_aggreg: float = 3
    prob_cube: float = 0.3
    prob_having: float = 0.2
    avg_nb_dd: float = 3

    @property
    def prob_extract(self) -> float:
        return 1 - self.prob_olap

    @property
    def prob_rollup(self) -> float:
        return 1 - self.prob_cube

    def violations(self) -> list[str]:
        out = []
        if self.nb_q < 0 or int(self.nb_q) != self.nb_q:
            out.append("nb_q: must be a non-negative integer")
        for name in ("avg_nb_att_q", "avg_nb_aggreg"):
            if not getattr(self, name) >= 1:
                out.append(f"{name}: count must be >= 1")
        for name in ("avg_nb_restr", "avg_nb_dd"):
            if not getattr(self, name) >= 0:
                out.append(f"{name}: count must be >= 0")
        for name in ("prob_olap", "prob_cube", "prob_having"):
            if not 0 <= getattr(self, name) <= 1:
                out.append(f"{name}: probability out of [0,1]")
        return out


@dataclass(frozen=True)
class Config:
    params: HighLevelParams | LowLevelParams = field(default_factory=HighLevelParams)
    workload: WorkloadParams = field(default_factory=WorkloadParams)
    seed: int = DEFAULT_SEED
    generator: str = "splitmix64"
    max_rows: int = DEFAULT_MAX_ROWS
    sigma_fraction: float = 0.2

    def stream(self) -> RandomStream:
        return RandomStream(self.seed, self.generator, self.sigma_fraction)


def _join(values) -> str:
    return ", ".join(_fmt(v) for v in values)


def _fmt(v) -> str:
    if isinstance(v, float) and not v.is_integer():
        return repr(v)
    return str(int(v))


_HIGH_KEYS = {f.name for f in fields(HighLevelParams)} - {"sigma_fraction"}
_LOW_KEYS = {f.name for f in fields(LowLevelParams)}
_WORKLOAD_KEYS = {f.name for f in fields(WorkloadParams)}
_OTHER_KEYS = {"seed", "generator", "max_rows", "sigma_fraction"}
_LIST_KEYS = {"nb_dim", "nb_meas", "density", "nb_levels", "hhlevel_size", "dim_sfactor"}


def _number(text: str, line, key):
    try:
        value = float(text) if any(c in text for c in ".eE") else int(text)
    except ValueError:
        raise ConfigError(f"not a number: {text!r}", line, key) from None
    if isinstance(value, float) and not math.isfinite(value):
        raise ConfigError(f"not finite: {text!r}", line, key)
    return value


def _parse_value(key: str, text: str, line):
    if key == "generator":
        if text not in GENERATORS:
            raise ConfigError(f"unknown generator {text!r}", line, key)
        return text
    if key == "nb_att":
        return tuple(tuple(_number(x.strip(), line, key) for x in row.split(","))
                     for row in text.split(";"))
    if key in _LIST_KEYS:
        return tuple(_number(x.strip(), line, key) for x in text.split(","))
    return _number(text, line, key)


def parse_config_text(text: str) -> dict:
    """Parse flat ``key = value`` text into a dict; ``#`` starts a comment."""
    values = {}
    known = _HIGH_KEYS | _LOW_KEYS | _WORKLOAD_KEYS | _OTHER_KEYS
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected key = value", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in known:
            raise ConfigError("unknown key", lineno, key)
        if key in values:
            raise ConfigError("duplicate key", lineno, key)
        if not value:
            raise ConfigError("missing value", lineno, key)
        values[key] = _parse_value(key, value, lineno)
    return values


def load_config(source: str | Path | None = None, overrides: dict | None = None) -> Config:
    """Build a validated ``Config`` from config text (or a path) plus overrides.

    Absent keys take the defaults of ``HighLevelParams``/``WorkloadParams``.
    Supplying any low-level key switches to low-level mode, which then needs
    every low-level key and forbids high-level ones.
    """
    if isinstance(source, Path):
        text = source.read_text()
    else:
        text = source or ""
    values = parse_config_text(text)
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value

    # dim_sfactor names both a high-level average and a low-level per-dimension list
    low_mode = any(k in _LOW_KEYS - {"dim_sfactor"} for k in values)
    if not low_mode and "dim_sfactor" in values:
        value = values["dim_sfactor"]
        if isinstance(value, tuple):
            if len(value) != 1:
                raise ConfigError("a list is only valid with the other low-level keys",
                                  key="dim_sfactor")
            values["dim_sfactor"] = value[0]
    low = {k: v for k, v in values.items() if k in _LOW_KEYS} if low_mode else {}
    high = {k: v for k, v in values.items()
            if k in _HIGH_KEYS and not (low_mode and k == "dim_sfactor")}
    sigma = values.get("sigma_fraction", HighLevelParams.sigma_fraction)
    if low:
        if high:
            raise ConfigError("cannot mix high-level keys " + ", ".join(sorted(high))
                              + " with low-level keys")
        missing = _LOW_KEYS - low.keys()
        if missing:
            raise ConfigError("low-level mode needs " + ", ".join(sorted(missing)))
        params = LowLevelParams(**low)
        problems = validate(params)
    else:
        params = HighLevelParams(sigma_fraction=sigma, **high)
        problems = params.violations()
    if problems:
        raise ConfigError("; ".join(problems))

    workload = WorkloadParams(**{k: v for k, v in values.items() if k in _WORKLOAD_KEYS})
    if workload.violations():
        raise ConfigError("; ".join(workload.violations()))
    if not sigma >= 0:
        raise ConfigError("must be >= 0", key="sigma_fraction")
    seed = values.get("seed", DEFAULT_SEED)
    if not isinstance(seed, int):
        raise ConfigError("seed must be an integer", key="seed")
    max_rows = values.get("max_rows", DEFAULT_MAX_ROWS)
    if not max_rows > 0:
        raise ConfigError("must be > 0", key="max_rows")
    return Config(params=params, workload=workload, seed=seed,
                  generator=values.get("generator", "splitmix64"),
                  max_rows=max_rows, sigma_fraction=float(sigma))


def validate(p: LowLevelParams) -> list[str]:
    """Every violated low-level invariant; an empty list means valid."""
    out = []

    def counts(name, seq):
        for i, v in enumerate(seq):
            if int(v) != v or v < 1:
                out.append(f"{name}[{i + 1}] = {v}: count must be an integer >= 1")

    if p.nb_ft < 1:
        out.append("nb_ft must be >= 1")
    for name in ("nb_dim", "nb_meas", "density"):
        if len(getattr(p, name)) != p.nb_ft:
            out.append(f"{name} must have nb_ft = {p.nb_ft} entries")
    for name in ("nb_levels", "nb_att", "hhlevel_size", "dim_sfactor"):
        if len(getattr(p, name)) != p.tot_nb_dim:
            out.append(f"{name} must have tot_nb_dim = {p.tot_nb_dim} entries")
    if p.tot_nb_dim < 1:
        out.append("tot_nb_dim must be >= 1")
    counts("nb_dim", p.nb_dim)
    counts("nb_meas", p.nb_meas)
    counts("nb_levels", p.nb_levels)
    counts("hhlevel_size", p.hhlevel_size)
    counts("dim_sfactor", p.dim_sfactor)
    for f, d in enumerate(p.density):
        if not 0 < d <= 1:
            out.append(f"density[{f + 1}] = {d}: density out of (0,1]")
    if p.tot_nb_dim > sum(p.nb_dim):
        out.append(f"tot_nb_dim = {p.tot_nb_dim} exceeds sum of nb_dim = {sum(p.nb_dim)}")
    for f, n in enumerate(p.nb_dim):
        if n > p.tot_nb_dim:
            out.append(f"nb_dim[{f + 1}] = {n} exceeds tot_nb_dim = {p.tot_nb_dim}")
    for d, row in enumerate(p.nb_att):
        if d < len(p.nb_levels) and len(row) != p.nb_levels[d]:
            out.append(f"nb_att[{d + 1}] must have nb_levels[{d + 1}] = {p.nb_levels[d]} entries")
        counts(f"nb_att[{d + 1}]", row)
    return out


def derive_low_level(h: HighLevelParams, rng: RandomStream) -> LowLevelParams:
    """Expand high-level averages into per-object values.

    Each value is ``round_half_up(N(mean, sigma_fraction * mean))`` clamped to
    >= 1; densities are clamped to ``[1e-6, 1]`` instead of rounded.  Every
    value consumes one Gaussian (two uniforms) even when sigma is zero.
    Draw order: nb_ft, tot_nb_dim, then per fact table (nb_dim, nb_meas,
    density), then per dimension (nb_levels, hhlevel_size, dim_sfactor, and
    nb_att for each level from the top down).
    """
    sf = h.sigma_fraction

    def count(mean):
        return max(1, round_half_up(rng.gaussian(mean, sf * mean)))

    nb_ft = count(h.avg_nb_ft)
    tot = count(h.avg_tot_nb_dim)
    nb_dim, nb_meas, density = [], [], []
    for _ in range(nb_ft):
        nb_dim.append(count(h.avg_nb_dim))
        nb_meas.append(count(h.avg_nb_meas))
        dens = rng.gaussian(h.avg_density, sf * h.avg_density)
        density.append(min(1.0, max(DENSITY_FLOOR, dens)))
    tot = min(max(tot, max(nb_dim)), sum(nb_dim))

    nb_levels, hhlevel, sfactor, nb_att = [], [], [], []
    for _ in range(tot):
        levels = count(h.avg_nb_levels)
        nb_levels.append(levels)
        hhlevel.append(count(h.avg_hhlevel_size))
        sfactor.append(count(h.dim_sfactor))
        nb_att.append(tuple(count(h.avg_nb_att) for _ in range(levels)))
    return LowLevelParams(
        nb_ft=nb_ft, nb_dim=tuple(nb_dim), tot_nb_dim=tot, nb_meas=tuple(nb_meas),
        density=tuple(density), nb_levels=tuple(nb_levels), nb_att=tuple(nb_att),
        hhlevel_size=tuple(hhlevel), dim_sfactor=tuple(sfactor),
    )


def nominal_low_level(h: HighLevelParams) -> LowLevelParams:
    """Low-level values sitting exactly on the high-level means."""
    return derive_low_level(replace(h, sigma_fraction=0.0), RandomStream(0))


def resolve_low_level(config: Config, rng: RandomStream) -> LowLevelParams:
    if isinstance(config.params, LowLevelParams):
        return config.params
    return derive_low_level(config.params, rng)
