"""Load a generated warehouse into a database and time its workload."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from ..emit import parse_workload_sql
from .connectors import ConnectionLost, Connector, ConnectorError

REPORT_FORMAT = "dwgen-run-report/1"


@dataclass
class TableLoad:
    table: str
    rows_loaded: int
    rows_expected: int
    seconds: float


@dataclass
class QueryRun:
    id: str
    kind: str
    repetition: int
    seconds: float
    rows: int | None
    status: str
    error: str | None = None


@dataclass
class RunReport:
    environment: dict
    queries: list = field(default_factory=list)
    load: list | None = None

    def totals(self) -> dict:
        failed = sum(1 for q in self.queries if q.status != "ok")
        out = {
            "queries_executed": len(self.queries),
            "queries_failed": failed,
            "query_seconds": sum(q.seconds for q in self.queries),
        }
        if self.load is not None:
            out["tables_loaded"] = len(self.load)
            out["rows_loaded"] = sum(t.rows_loaded for t in self.load)
            out["load_seconds"] = sum(t.seconds for t in self.load)
        return out

    def to_dict(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "environment": self.environment,
            "load": None if self.load is None else [asdict(t) for t in self.load],
            "queries": [asdict(q) for q in self.queries],
            "totals": self.totals(),
        }

    def write(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")


def read_manifest(artifacts: str | Path) -> dict:
    path = Path(artifacts) / "manifest.json"
    if not path.exists():
        raise FileNotFoundError(f"{path} not found; run `dwgen generate` first")
    return json.loads(path.read_text(encoding="utf-8"))


def load_warehouse(conn: Connector, artifacts: str | Path) -> list:
    """Create tables from schema.sql, then bulk-load each .dat file in manifest order.

    Any existing tables with the same names are dropped first.
    """
    artifacts = Path(artifacts)
    manifest = read_manifest(artifacts)
    tables = manifest["tables"]
    conn.drop_tables(t["table"] for t in tables)
    conn.execute_script((artifacts / "schema.sql").read_text(encoding="utf-8"))
    out = []
    for entry in tables:
        start = time.perf_counter()
        conn.bulk_load(entry["table"], artifacts / entry["file"])
        seconds = time.perf_counter() - start
        out.append(TableLoad(entry["table"], conn.count(entry["table"]), entry["rows"], seconds))
    return out


def environment(manifest: dict, connector: str, repetitions: int) -> dict:
    return {
        "seed": manifest.get("seed"),
        "generator": manifest.get("generator"),
        "params_digest": manifest.get("params_digest"),
        "connector": connector,
        "repetitions": repetitions,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def run_workload(conn: Connector, statements: list, repetitions: int = 1,
                 report: RunReport | None = None) -> RunReport:
    """Execute ``(id, kind, parent, sql)`` statements in order, ``repetitions`` times.

    Statements run exactly as given. A failing query is recorded and the run
    continues; a lost connection aborts.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    report = report or RunReport(environment={})
    for rep in range(1, repetitions + 1):
        for qid, kind, _parent, sql in statements:
            start = time.perf_counter()
            try:
                rows = conn.query(sql)
            except ConnectionLost:
                raise
            except ConnectorError as exc:
                report.queries.append(QueryRun(qid, kind, rep, time.perf_counter() - start,
                                               None, "error", str(exc)))
                continue
            report.queries.append(QueryRun(qid, kind, rep, time.perf_counter() - start,
                                           rows, "ok"))
    return report


def read_statements(artifacts: str | Path) -> list:
    path = Path(artifacts) / "workload.sql"
    return parse_workload_sql(path.read_text(encoding="utf-8"))
