"""Decision-support workload generation over a generated warehouse.

Each initial query picks a fact table, walks dimension hierarchies to build
its select/from/where clauses, adds equality restrictions, and is then made
either an OLAP query (SUM aggregates, CUBE or ROLLUP grouping, optional
HAVING) or a plain extraction query. OLAP queries are followed by drill-downs
that each add one attribute from the next finer level.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional

from .params import WorkloadParams
from .randomness import (
    DEFAULT_REFERENTIAL,
    RandomStream,
    StringReferential,
    gaussian_index,
    random_float,
    random_int,
    random_string,
)
from .schema import MEASURE_SCALE, FactTable, HierarchyLevel, WarehouseSchema

OLAP = "olap"
EXTRACTION = "extraction"
DRILL_DOWN = "drill_down"
KINDS = (OLAP, EXTRACTION, DRILL_DOWN)

CUBE = "CUBE"
ROLLUP = "ROLLUP"
COMPARISONS = ("=", "<>", "<", "<=", ">", ">=")
AGGREGATE_FUNCTIONS = ("SUM", "COUNT", "AVG", "MIN", "MAX")

_RETRY_FACTOR = 10


class Column(NamedTuple):
    table: str
    name: str

    def __str__(self):
        return f"{self.table}.{self.name}"


class Aggregate(NamedTuple):
    function: str
    column: Column
    alias: str


class Restriction(NamedTuple):
    column: Column
    op: str
    operand: object


class Having(NamedTuple):
    aggregate: Aggregate
    op: str
    value: float


@dataclass
class Query:
    qid: str = ""
    kind: str = EXTRACTION
    parent: Optional[str] = None
    fact: str = ""
    select_attrs: list = field(default_factory=list)
    aggregates: list = field(default_factory=list)
    tables: list = field(default_factory=list)
    joins: list = field(default_factory=list)
    restrictions: list = field(default_factory=list)
    group_by: list = field(default_factory=list)
    group_by_operator: Optional[str] = None
    having: Optional[Having] = None
    # hierarchy level of the last walked attribute; drill-downs move finer from here
    cursor: Optional[HierarchyLevel] = field(default=None, repr=False, compare=False)

    def clauses(self) -> tuple:
        """Everything that reaches the rendered SQL."""
        return (tuple(self.select_attrs), tuple(self.aggregates), tuple(self.tables),
                tuple(self.joins), tuple(self.restrictions), tuple(self.group_by),
                self.group_by_operator, self.having)

    def dimensions_touched(self) -> list:
        return sorted({t for t in self.tables if t != self.fact})


@dataclass
class Workload:
    queries: list
    params: WorkloadParams
    seed: int = 0

    def __len__(self):
        return len(self.queries)

    def initial_queries(self) -> list:
        return [q for q in self.queries if q.kind != DRILL_DOWN]

    def manifest(self) -> dict:
        return {
            "seed": self.seed,
            "nb_q": self.params.nb_q,
            "queries": [
                {"id": q.qid, "kind": q.kind, "parent": q.parent, "fact_table": q.fact,
                 "dimensions": q.dimensions_touched(), "operator": q.group_by_operator}
                for q in self.queries
            ],
        }


def _pick(rng: RandomStream, items: list):
    return items[gaussian_index(rng, len(items))]


def _walk(fact: FactTable, dim_pos: int, depth: int):
    """Tables and join pairs from ``fact`` up to ``depth`` levels of one dimension."""
    dim = fact.dimensions[dim_pos]
    hl = dim.finest_level
    fk = Column(fact.name, fact.relation.intention[dim_pos].name)
    tables, joins = [], []
    for step in range(depth):
        if step:
            fk = Column(hl.name, hl.foreign_key.name)
            hl = hl.coarser
        tables.append(hl.name)
        joins.append((fk, Column(hl.name, hl.relation.primary_key.name)))
    return hl, tables, joins


def build_initial_query(w: WorkloadParams, s: WarehouseSchema, rng: RandomStream,
                        referential: StringReferential = DEFAULT_REFERENTIAL) -> Query:
    """Draw an initial query (OLAP or extraction) against ``s``.

    Select attributes are redrawn when they repeat, up to ten attempts per
    requested attribute; a query may end up with fewer attributes than drawn.
    """
    fact = _pick(rng, s.fact_tables)
    q = Query(fact=fact.name, tables=[fact.name])
    wanted = random_int(rng, mean=w.avg_nb_att_q, minimum=1)
    attempts = 0
    while len(q.select_attrs) < wanted and attempts < _RETRY_FACTOR * wanted:
        attempts += 1
        dim_pos = gaussian_index(rng, len(fact.dimensions))
        depth = random_int(rng, 1, fact.dimensions[dim_pos].nb_levels)
        hl, tables, joins = _walk(fact, dim_pos, depth)
        attr = _pick(rng, hl.descriptors)
        column = Column(hl.name, attr.name)
        if column in q.select_attrs:
            continue
        for table, join in zip(tables, joins):
            if table not in q.tables:
                q.tables.append(table)
                q.joins.append(join)
        q.select_attrs.append(column)
        q.cursor = hl

    for _ in range(random_int(rng, mean=w.avg_nb_restr, minimum=0)):
        column = _pick(rng, q.select_attrs)
        q.restrictions.append(Restriction(column, "=", random_string(rng, column.name, referential)))

    if rng.uniform() < w.prob_olap:
        q.kind = OLAP
        attach_olap_clauses(q, w, s, rng)
    else:
        q.kind = EXTRACTION
    return q


def attach_olap_clauses(q: Query, w: WorkloadParams, s: WarehouseSchema,
                        rng: RandomStream) -> Query:
    """Turn ``q`` into an OLAP query in place.

    Aggregates are SUMs over distinct measures, redrawn on repeats like the
    select attributes.
    """
    fact = next(f for f in s.fact_tables if f.name == q.fact)
    q.aggregates = []
    wanted = random_int(rng, mean=w.avg_nb_aggreg, minimum=1)
    seen = set()
    attempts = 0
    while len(q.aggregates) < wanted and attempts < _RETRY_FACTOR * wanted:
        attempts += 1
        column = Column(fact.name, _pick(rng, fact.measures).name)
        if column in seen:
            continue
        seen.add(column)
        q.aggregates.append(Aggregate("SUM", column, f"AGG{len(q.aggregates) + 1}"))
    q.group_by = list(q.select_attrs)
    q.group_by_operator = CUBE if rng.uniform() < w.prob_cube else ROLLUP
    if rng.uniform() < w.prob_having:
        aggregate = _pick(rng, q.aggregates)
        threshold = int(random_float(rng, 0.0, MEASURE_SCALE) * 100) / 100
        q.having = Having(aggregate, ">=", threshold)
    else:
        q.having = None
    return q


def drill_down(q: Query, rng: RandomStream) -> Optional[Query]:
    """Refine ``q`` by one finer hierarchy level, or None if there is none.

    Also None when every descriptor of the finer level is already selected.
    """
    hl = q.cursor.finer if q.cursor is not None else None
    if hl is None:
        return None
    fresh = [a for a in hl.descriptors if Column(hl.name, a.name) not in q.select_attrs]
    if not fresh:
        return None
    column = Column(hl.name, _pick(rng, fresh).name)
    return replace(q, qid="", kind=DRILL_DOWN, parent=q.qid,
                   select_attrs=q.select_attrs + [column],
                   group_by=q.group_by + [column], cursor=hl)


def generate_workload(w: WorkloadParams, s: WarehouseSchema, rng: RandomStream,
                      referential: StringReferential = DEFAULT_REFERENTIAL) -> Workload:
    """Emit at least ``w.nb_q`` queries; drill-downs count toward the total.

    The number of drill-downs after an OLAP query is drawn once, then capped by
    the finer levels available.
    """
    queries = []

    def emit(q):
        q.qid = f"Q{len(queries) + 1}"
        queries.append(q)
        return q

    while len(queries) < w.nb_q:
        q = emit(build_initial_query(w, s, rng, referential))
        if q.kind != OLAP:
            continue
        budget = random_int(rng, mean=w.avg_nb_dd, minimum=0)
        for _ in range(budget):
            q = drill_down(q, rng)
            if q is None:
                break
            emit(q)
    return Workload(queries, w, seed=rng.seed)


def check_grammar(q: Query) -> list:
    """Every way ``q`` breaks the query model; empty when it conforms."""
    problems = []
    tables = set(q.tables)
    if not q.select_attrs and not q.aggregates:
        problems.append("select list is empty")
    if not q.tables:
        problems.append("table list is empty")
    if len(tables) != len(q.tables):
        problems.append("table listed twice")
    if q.kind not in KINDS:
        problems.append(f"unknown kind {q.kind!r}")

    def known(col, where):
        if col.table not in tables:
            problems.append(f"{where} {col} references a table outside FROM")

    for col in q.select_attrs:
        known(col, "select attribute")
    if len(set(q.select_attrs)) != len(q.select_attrs):
        problems.append("duplicate select attribute")
    aliases = [a.alias for a in q.aggregates]
    if len(set(aliases)) != len(aliases):
        problems.append("duplicate aggregate alias")
    for a in q.aggregates:
        if a.function not in AGGREGATE_FUNCTIONS:
            problems.append(f"unknown aggregate function {a.function}")
        known(a.column, "aggregate")
    for left, right in q.joins:
        known(left, "join")
        known(right, "join")
    for r in q.restrictions:
        known(r.column, "restriction")
        if r.op not in COMPARISONS:
            problems.append(f"unknown comparison operator {r.op}")

    # join graph must be a tree spanning every listed table
    if q.tables and len(q.joins) != len(q.tables) - 1:
        problems.append(f"{len(q.joins)} joins for {len(q.tables)} tables is not a tree")
    elif q.tables:
        reached = {q.tables[0]}
        grew = True
        while grew:
            grew = False
            for left, right in q.joins:
                if (left.table in reached) != (right.table in reached):
                    reached |= {left.table, right.table}
                    grew = True
        if reached != tables:
            problems.append("join graph is not connected")

    if q.group_by_operator not in (None, CUBE, ROLLUP):
        problems.append(f"unknown group-by operator {q.group_by_operator}")
    if q.group_by_operator is not None and not q.group_by:
        problems.append("CUBE/ROLLUP without group-by attributes")
    if q.having is not None:
        if not q.group_by:
            problems.append("HAVING without GROUP BY")
        if q.having.op not in COMPARISONS:
            problems.append(f"unknown comparison operator {q.having.op}")
        if q.having.aggregate not in q.aggregates:
            problems.append("HAVING aggregate is not in the select list")
    for col in q.group_by:
        known(col, "group-by")

    if q.kind == EXTRACTION and (q.aggregates or q.group_by or q.having is not None
                                 or q.group_by_operator is not None):
        problems.append("extraction query carries OLAP clauses")
    if q.kind in (OLAP, DRILL_DOWN):
        if not q.aggregates:
            problems.append("OLAP query without aggregates")
        if not set(q.select_attrs) <= set(q.group_by):
            problems.append("select attribute missing from GROUP BY")
    return problems
