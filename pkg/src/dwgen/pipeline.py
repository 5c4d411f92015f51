"""Config -> estimate -> warehouse -> workload, sharing one random stream."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .emit import SizeEstimate, estimate_size, write_artifacts
from .params import Config, HighLevelParams, LowLevelParams, resolve_low_level
from .randomness import RandomStream
from .schema import WarehouseSchema, generate_warehouse, link_fact_dimensions
from .workload import Workload, generate_workload


@dataclass
class Plan:
    config: Config
    rng: RandomStream
    params: LowLevelParams
    assignment: list
    estimate: SizeEstimate
    nominal: SizeEstimate | None = None

    def too_large(self) -> bool:
        return self.estimate.exceeds(self.config.max_rows)


def plan(config: Config) -> Plan:
    """Draw the low-level parameters and fact/dimension links, then estimate.

    No table data is generated; the stream is left positioned for ``build``.
    """
    rng = config.stream()
    params = resolve_low_level(config, rng)
    assignment = link_fact_dimensions(params, rng)
    nominal = estimate_size(config.params) if isinstance(config.params, HighLevelParams) else None
    return Plan(config, rng, params, assignment, estimate_size(params, assignment), nominal)


def build(p: Plan) -> tuple[WarehouseSchema, Workload]:
    schema = generate_warehouse(p.params, p.rng, assignment=p.assignment)
    workload = generate_workload(p.config.workload, schema, p.rng)
    return schema, workload


def generate_all(config: Config) -> tuple[WarehouseSchema, Workload]:
    return build(plan(config))


def write_all(p: Plan, out: str | Path) -> dict:
    schema, workload = build(p)
    extra = {"sigma_fraction": p.config.sigma_fraction,
             "workload_params": {k: getattr(p.config.workload, k)
                                 for k in p.config.workload.__dataclass_fields__}}
    return write_artifacts(schema, workload, out, p.estimate, extra)
