"""Synthetic data warehouse and decision-support workload generator."""
from .emit import estimate_size, write_artifacts
from .params import Config, ConfigError, HighLevelParams, LowLevelParams, WorkloadParams, load_config
from .pipeline import generate_all, plan
from .randomness import RandomStream
from .schema import WarehouseSchema, generate_warehouse
from .workload import Workload, generate_workload

__version__ = "0.1.0"

__all__ = ["Config", "ConfigError", "HighLevelParams", "LowLevelParams", "RandomStream",
           "WarehouseSchema", "Workload", "WorkloadParams", "estimate_size", "generate_all",
           "generate_warehouse", "generate_workload", "load_config", "plan", "write_artifacts"]
