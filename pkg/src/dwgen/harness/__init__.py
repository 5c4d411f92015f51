"""Database loading, workload execution and the command-line front end."""
from .connectors import CONNECTORS, ConnectionLost, Connector, ConnectorError, connect
from .runner import QueryRun, RunReport, TableLoad, load_warehouse, run_workload

__all__ = ["CONNECTORS", "ConnectionLost", "Connector", "ConnectorError", "connect",
           "QueryRun", "RunReport", "TableLoad", "load_warehouse", "run_workload"]
