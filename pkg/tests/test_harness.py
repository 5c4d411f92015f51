import json

import pytest

from dwgen.emit import render_query_sql
from dwgen.harness.connectors import CONNECTORS, ConnectionLost, ConnectorError, connect
from dwgen.harness.runner import (
    RunReport,
    load_warehouse,
    read_manifest,
    read_statements,
    run_workload,
)
from dwgen.params import load_config
from dwgen.pipeline import build, plan, write_all
from dwgen.presets import PRESETS
from dwgen.workload import EXTRACTION

ENGINES = ["sqlite", "duckdb"]


def _connector(name, tmp_path):
    if name == "duckdb":
        pytest.importorskip("duckdb")
    return connect(name, str(tmp_path / f"wh{CONNECTORS[name].extension}"))


@pytest.fixture
def artifacts(tmp_path):
    out = tmp_path / "art"
    write_all(plan(load_config(PRESETS["desk"])), out)
    return out


@pytest.mark.parametrize("engine", ENGINES)
def test_loaded_counts_match_manifest(engine, artifacts, tmp_path):
    with _connector(engine, tmp_path) as conn:
        loads = load_warehouse(conn, artifacts)
        again = load_warehouse(conn, artifacts)  # reload replaces tables
    manifest = read_manifest(artifacts)
    assert [t.table for t in loads] == [t["table"] for t in manifest["tables"]]
    assert all(t.rows_loaded == t.rows_expected for t in loads + again)
    assert all(t.seconds >= 0 for t in loads)


@pytest.mark.parametrize("engine", ENGINES)
def test_empty_fact_file_loads_zero_rows(engine, artifacts, tmp_path):
    fact = artifacts / "FT1.dat"
    fact.write_text(fact.read_text().splitlines()[0] + "\n")
    manifest = json.loads((artifacts / "manifest.json").read_text())
    for t in manifest["tables"]:
        if t["table"] == "FT1":
            t["rows"] = 0
    (artifacts / "manifest.json").write_text(json.dumps(manifest))
    with _connector(engine, tmp_path) as conn:
        loads = load_warehouse(conn, artifacts)
    ft = next(t for t in loads if t.table == "FT1")
    assert ft.rows_loaded == 0 and ft.seconds >= 0


@pytest.mark.parametrize("engine", ENGINES)
def test_foreign_key_violation_aborts_naming_table(engine, artifacts, tmp_path):
    path = artifacts / "DIM1_2.dat"
    lines = path.read_text().splitlines()
    cells = lines[1].split("|")
    cells[-1] = "999"
    lines[1] = "|".join(cells)
    path.write_text("\n".join(lines) + "\n")
    with _connector(engine, tmp_path) as conn:
        with pytest.raises(ConnectorError) as err:
            load_warehouse(conn, artifacts)
    assert err.value.table == "DIM1_2" and "DIM1_2" in str(err.value)


def test_repetitions_and_byte_identical_statements(artifacts, tmp_path):
    pytest.importorskip("duckdb")
    statements = read_statements(artifacts)
    executed = []
    with _connector("duckdb", tmp_path) as conn:
        load_warehouse(conn, artifacts)
        inner = conn.query

        def spy(sql):
            executed.append(sql)
            return inner(sql)

        conn.query = spy
        report = run_workload(conn, statements, repetitions=2)
    assert executed == [s for *_, s in statements] * 2
    ids = [q.id for q in report.queries]
    for qid, *_ in statements:
        assert ids.count(qid) == 2
    assert [q.repetition for q in report.queries] == [1] * len(statements) + [2] * len(statements)
    assert all(q.status == "ok" and q.seconds >= 0 for q in report.queries)


def test_empty_workload_gives_valid_report(tmp_path):
    with connect("sqlite", ":memory:") as conn:
        report = run_workload(conn, [], repetitions=3, report=RunReport({"seed": 1}))
    d = report.to_dict()
    assert d["queries"] == [] and d["totals"]["queries_executed"] == 0
    report.write(tmp_path / "r.json")
    assert json.loads((tmp_path / "r.json").read_text())["format"] == "dwgen-run-report/1"


def test_failing_query_recorded_and_run_continues(artifacts, tmp_path):
    statements = read_statements(artifacts)
    with _connector("sqlite", tmp_path) as conn:
        load_warehouse(conn, artifacts)
        report = run_workload(conn, statements)
    kinds = {q.kind: q.status for q in report.queries}
    assert len(report.queries) == len(statements)
    assert kinds["extraction"] == "ok"
    failed = [q for q in report.queries if q.status == "error"]
    assert failed and all(q.rows is None and q.error for q in failed)


def test_connection_loss_aborts(artifacts, tmp_path):
    conn = _connector("sqlite", tmp_path)
    load_warehouse(conn, artifacts)
    conn.close()
    with pytest.raises(ConnectionLost):
        run_workload(conn, read_statements(artifacts))


def test_repetitions_must_be_positive():
    with pytest.raises(ValueError):
        run_workload(connect("sqlite", ":memory:"), [], repetitions=0)


def _probe_sql(q):
    where = [f"{a} = {b}" for a, b in q.joins]
    where += [f"{r.column} = '{r.operand}'" for r in q.restrictions]
    sql = f"SELECT COUNT(*) FROM {', '.join(q.tables)}"
    return sql + (" WHERE " + " AND ".join(where) if where else "")


def _python_count(schema, q):
    """Row count of an extraction query evaluated over the in-memory tables."""
    def rows_of(name):
        rel = schema.relation(name)
        cols = rel.rendered_columns()
        return [{f"{name}.{a.name}": v for a, v in zip(rel.intention, row)}
                for row in zip(*cols)]

    rows = rows_of(q.fact)
    for left, right in q.joins:
        index = {}
        for r in rows_of(right.table):
            index.setdefault(r[str(right)], []).append(r)
        rows = [{**r, **m} for r in rows for m in index.get(r[str(left)], [])]
    for r in q.restrictions:
        rows = [x for x in rows if x[str(r.column)] == r.operand]
    return len(rows)


@pytest.mark.parametrize("engine", ENGINES)
@pytest.mark.parametrize("restrictions", [0, 3])
def test_extraction_counts_match_probes(engine, restrictions, tmp_path):
    text = PRESETS["desk"] + f"avg_nb_restr = {restrictions}\nprob_olap = 0.5\n"
    p = plan(load_config(text))
    out = tmp_path / "art"
    write_all(p, out)
    schema, workload = build(plan(load_config(text)))
    with _connector(engine, tmp_path) as conn:
        load_warehouse(conn, out)
        report = run_workload(conn, read_statements(out))
        nonzero = 0
        for q, run in zip(workload.queries, report.queries):
            assert run.id == q.qid
            if q.kind != EXTRACTION:
                continue
            assert run.rows == conn._scalar(_probe_sql(q)) == _python_count(schema, q)
            nonzero += run.rows > 0
    if restrictions == 0:
        assert nonzero > 0
