import dataclasses

import pytest

import oracle
from conftest import low
from dwgen.emit import render_query_sql
from dwgen.params import LowLevelParams, WorkloadParams, load_config
from dwgen.pipeline import generate_all, plan
from dwgen.presets import PRESETS
from dwgen.randomness import DEFAULT_REFERENTIAL, RandomStream
from dwgen.schema import generate_warehouse
from dwgen.workload import (
    CUBE,
    DRILL_DOWN,
    EXTRACTION,
    OLAP,
    Aggregate,
    Column,
    Having,
    Query,
    _walk,
    attach_olap_clauses,
    build_initial_query,
    check_grammar,
    drill_down,
    generate_workload,
)


def _schema(p, seed=1, sigma=0.2):
    return generate_warehouse(p, RandomStream(seed, sigma_fraction=sigma))


def _workload(p, w, seed=1, sigma=0.2):
    s = _schema(p, seed, sigma)
    return s, generate_workload(w, s, RandomStream(seed + 1000, sigma_fraction=sigma))


def test_no_olap_gives_exactly_nb_q_extractions():
    _, wl = _workload(low(nb_dim=(3,), nb_levels=(3, 2, 1)), WorkloadParams(nb_q=57, prob_olap=0))
    assert len(wl) == 57
    assert {q.kind for q in wl.queries} == {EXTRACTION}


def test_drill_down_count_hand_check():
    # sigma 0: every OLAP query asks for exactly 3 drill-downs; enough descriptors
    # per level that a fresh one always exists, so only the hierarchy limits the count
    p = low(nb_dim=(2,), nb_levels=(5, 5), nb_att=((9,) * 5, (9,) * 5))
    w = WorkloadParams(nb_q=300, prob_olap=1.0, avg_nb_dd=3, avg_nb_att_q=2)
    _, wl = _workload(p, w, sigma=0.0)
    qs = wl.queries
    i = 0
    while i < len(qs):
        q = qs[i]
        assert q.kind == OLAP
        level = int(q.select_attrs[-1].table.split("_")[1])
        expected = min(3, 5 - level)
        burst = [x for x in qs[i + 1:i + 1 + expected]]
        assert [x.kind for x in burst] == [DRILL_DOWN] * expected
        assert i + 1 + expected == len(qs) or qs[i + 1 + expected].kind == OLAP
        i += 1 + expected
    assert len(qs) >= 300


def test_single_level_dimension_joins():
    p = low(nb_dim=(1,), nb_levels=(1,))
    s = _schema(p)
    q = build_initial_query(WorkloadParams(), s, RandomStream(5))
    assert q.tables == ["FT1", "DIM1_1"]
    assert q.joins == [(Column("FT1", "DIM1_1_PK"), Column("DIM1_1", "DIM1_1_PK"))]


def test_three_level_walk_chains_three_joins():
    s = _schema(low(nb_dim=(1,), nb_levels=(3,)))
    hl, tables, joins = _walk(s.fact_tables[0], 0, 3)
    assert hl.name == "DIM1_1" and tables == ["DIM1_3", "DIM1_2", "DIM1_1"]
    assert [(str(a), str(b)) for a, b in joins] == [
        ("FT1.DIM1_3_PK", "DIM1_3.DIM1_3_PK"),
        ("DIM1_3.DIM1_2_PK", "DIM1_2.DIM1_2_PK"),
        ("DIM1_2.DIM1_1_PK", "DIM1_1.DIM1_1_PK"),
    ]


def test_restriction_count_with_zero_sigma():
    s = _schema(low(nb_dim=(2,), nb_levels=(2, 2)), sigma=0.0)
    rng = RandomStream(3, sigma_fraction=0.0)
    for _ in range(30):
        q = build_initial_query(WorkloadParams(avg_nb_restr=3), s, rng)
        assert len(q.restrictions) == 3
        assert all(r.op == "=" for r in q.restrictions)


def test_forced_cube_and_no_having():
    _, wl = _workload(low(nb_dim=(2,), nb_levels=(2, 2)),
                      WorkloadParams(nb_q=200, prob_olap=1, prob_cube=1, prob_having=0))
    olap = [q for q in wl.queries if q.kind != EXTRACTION]
    assert olap and all(q.group_by_operator == CUBE and q.having is None for q in olap)


def test_olap_clauses():
    s = _schema(low(nb_dim=(2,), nb_meas=(6,)))
    q = build_initial_query(WorkloadParams(prob_olap=0), s, RandomStream(9))
    attach_olap_clauses(q, WorkloadParams(prob_having=1), s, RandomStream(10))
    assert q.aggregates and all(a.function == "SUM" for a in q.aggregates)
    assert [a.alias for a in q.aggregates] == [f"AGG{i}" for i in range(1, len(q.aggregates) + 1)]
    assert len({a.column for a in q.aggregates}) == len(q.aggregates)
    assert q.group_by == q.select_attrs
    assert q.having.op == ">=" and 0 <= q.having.value < 10_000
    assert q.having.aggregate in q.aggregates


def test_drill_down_at_finest_level_stops():
    s = _schema(low(nb_dim=(1,), nb_levels=(3,)))
    fact = s.fact_tables[0]
    hl, tables, joins = _walk(fact, 0, 1)
    q = Query(qid="Q1", kind=OLAP, fact="FT1", tables=["FT1"] + tables, joins=joins,
              select_attrs=[Column(hl.name, hl.descriptors[0].name)], cursor=hl)
    assert drill_down(q, RandomStream(1)) is None


def test_drill_down_from_top_at_most_two_steps():
    s = _schema(low(nb_dim=(1,), nb_levels=(3,), nb_att=((5, 5, 5),)))
    fact = s.fact_tables[0]
    hl, tables, joins = _walk(fact, 0, 3)
    col = Column(hl.name, hl.descriptors[0].name)
    q = Query(qid="Q1", kind=OLAP, fact="FT1", tables=["FT1"] + tables, joins=joins,
              select_attrs=[col], group_by=[col],
              aggregates=[Aggregate("SUM", Column("FT1", "FT1_MEAS1"), "AGG1")], cursor=hl)
    rng = RandomStream(2)
    chain = []
    while (nxt := drill_down(q, rng)) is not None:
        assert len(nxt.select_attrs) == len(q.select_attrs) + 1
        assert len(nxt.group_by) == len(q.group_by) + 1
        assert nxt.clauses()[1:5] == q.clauses()[1:5]
        assert nxt.parent == q.qid and check_grammar(nxt) == []
        chain.append(nxt)
        q = dataclasses.replace(nxt, qid=f"Q{len(chain) + 1}")
    assert len(chain) == 2


def test_check_grammar_violations():
    assert "select list is empty" in check_grammar(Query(tables=["FT1"]))
    agg = Aggregate("SUM", Column("FT1", "FT1_MEAS1"), "AGG1")
    q = Query(kind=OLAP, fact="FT1", tables=["FT1"], aggregates=[agg],
              having=Having(agg, ">=", 1.0))
    assert "HAVING without GROUP BY" in check_grammar(q)
    q = Query(kind=EXTRACTION, fact="FT1", tables=["FT1", "DIM1_1"],
              select_attrs=[Column("DIM1_1", "X")])
    assert any("not a tree" in x for x in check_grammar(q))


def _all_queries():
    out = []
    for name in ("desk", "star", "constellation"):
        c = load_config(PRESETS[name])
        out.append(generate_all(c))
    p = low(nb_dim=(3, 2), tot_nb_dim=4, nb_levels=(3, 1, 2, 4))
    out.append(_workload(p, WorkloadParams(nb_q=500)))
    return out


def test_every_generated_query_conforms():
    for s, wl in _all_queries():
        for q in wl.queries:
            assert check_grammar(q) == [], q.qid
            assert all(a.function == "SUM" for a in q.aggregates)
            assert len(q.joins) == len(q.tables) - 1
            for r in q.restrictions:
                prefix = r.column.name + "_"
                assert r.operand.startswith(prefix)
                assert r.operand[len(prefix):] in DEFAULT_REFERENTIAL.pool


def test_drill_downs_follow_their_parent():
    for _, wl in _all_queries():
        for prev, q in zip(wl.queries, wl.queries[1:]):
            if q.kind == DRILL_DOWN:
                assert q.parent == prev.qid and prev.kind in (OLAP, DRILL_DOWN)
        assert [q.qid for q in wl.queries] == [f"Q{i}" for i in range(1, len(wl) + 1)]


def test_size_bounds():
    for _, wl in _all_queries():
        n = wl.params.nb_q
        last_initial = max(i for i, q in enumerate(wl.queries) if q.kind != DRILL_DOWN)
        assert last_initial < n <= len(wl)
        # overshoot comes only from the final drill-down burst
        assert all(q.kind == DRILL_DOWN for q in wl.queries[last_initial + 1:])


def _oracle_dict(p):
    d = dataclasses.asdict(p)
    return {k: [list(r) for r in v] if k == "nb_att" else (list(v) if isinstance(v, tuple) else v)
            for k, v in d.items()}


@pytest.mark.parametrize("preset", ["desk", "constellation", "snowflake-small"])
def test_workload_matches_oracle_replay(preset):
    text = PRESETS.get(preset) or "avg_hhlevel_size = 3\ndim_sfactor = 2\navg_nb_dim = 3\n" \
                                  "avg_tot_nb_dim = 4\navg_nb_ft = 2\nnb_q = 300\nseed = 5"
    c = load_config(text)
    pl = plan(c)
    s, wl = generate_all(c)
    g = oracle.SplitMix64(c.seed, c.sigma_fraction)
    if isinstance(c.params, LowLevelParams):
        p = _oracle_dict(c.params)
    else:
        p = oracle.derive_low_level(dataclasses.asdict(c.params), g)
        assert p == _oracle_dict(pl.params)
    _, assignment = oracle.warehouse(p, g, oracle.build_pool())
    expected = oracle.workload(p, assignment, dataclasses.asdict(c.workload), g,
                               oracle.build_pool())
    assert len(expected) == len(wl)
    for e, q in zip(expected, wl.queries):
        sql = render_query_sql(q)
        assert (q.qid, q.kind, q.parent, q.fact) == (e["id"], e["kind"], e["parent"], e["fact"])
        assert [str(c) for c in q.select_attrs] == e["select"]
        assert q.tables == e["tables"]
        assert [f"{a} = {b}" for a, b in q.joins] == e["joins"]
        for clause in e["restrictions"] + e["aggregates"]:
            assert clause in sql
        assert [f"SUM({a.column})" for a in q.aggregates] == e["aggregates"]
        assert q.group_by_operator == e["operator"]
        if e["having"] is None:
            assert q.having is None
        else:
            assert (f"SUM({q.having.aggregate.column})", q.having.value) == e["having"]


def test_manifest_fields(desk_config):
    _, wl = generate_all(desk_config)
    m = wl.manifest()
    assert len(m["queries"]) == len(wl)
    first = m["queries"][0]
    assert set(first) == {"id", "kind", "parent", "fact_table", "dimensions", "operator"}
