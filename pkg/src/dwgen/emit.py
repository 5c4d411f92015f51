"""Size estimation and rendering of the warehouse and workload to files."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .params import HighLevelParams, LowLevelParams, nominal_low_level
from .randomness import (
    WORD_LENGTH,
    fact_table_name,
    float_measure_name,
    level_table_name,
    primary_key_name,
    string_descriptor_name,
)
from .schema import (
    DESCRIPTOR,
    FOREIGN_KEY,
    MEASURE,
    PRIMARY_KEY,
    WarehouseSchema,
    schema_manifest,
)
from .workload import EXTRACTION, Query, Workload, check_grammar

KEY_BYTES = 8
MEASURE_BYTES = 8
FIELD_SEPARATOR = "|"


class RenderError(ValueError):
    pass


@dataclass(frozen=True)
class TableEstimate:
    """``bytes`` follows the fixed row-width model; ``text_bytes`` predicts the
    size of the exported ``.dat`` file including its header line."""

    name: str
    rows: float
    bytes: float
    fact: bool = False
    text_bytes: float = 0.0


@dataclass(frozen=True)
class SizeEstimate:
    per_table: tuple = field(default_factory=tuple)

    @property
    def total_rows(self) -> float:
        return sum(t.rows for t in self.per_table)

    @property
    def total_bytes(self) -> float:
        return sum(t.bytes for t in self.per_table)

    @property
    def total_text_bytes(self) -> float:
        return sum(t.text_bytes for t in self.per_table)

    @property
    def fact_rows(self) -> float:
        return sum(t.rows for t in self.per_table if t.fact)

    def exceeds(self, max_rows: float) -> bool:
        return self.total_rows > max_rows

    def as_dict(self) -> dict:
        return {
            "tables": [{"name": t.name, "rows": round(t.rows, 2), "bytes": round(t.bytes, 2),
                        "text_bytes": round(t.text_bytes, 2)} for t in self.per_table],
            "total_rows": round(self.total_rows, 2),
            "fact_rows": round(self.fact_rows, 2),
            "total_bytes": round(self.total_bytes, 2),
            "total_text_bytes": round(self.total_text_bytes, 2),
        }

    def report(self) -> str:
        width = max([len(t.name) for t in self.per_table] + [5])
        lines = [f"{'table':<{width}}  {'rows':>22}  {'bytes':>22}"]
        for t in self.per_table:
            lines.append(f"{t.name:<{width}}  {t.rows:>22,.2f}  {t.bytes:>22,.0f}")
        lines.append(f"{'total':<{width}}  {self.total_rows:>22,.2f}  {self.total_bytes:>22,.0f}")
        lines.append(f"expected fact rows: {self.fact_rows:.6g}")
        lines.append(f"expected flat-file bytes: {self.total_text_bytes:.6g}")
        return "\n".join(lines)


def _descriptor_bytes(name: str) -> int:
    return len(name) + WORD_LENGTH + 1


def _mean_digits(n: int) -> float:
    """Mean decimal length of the integers 1..n."""
    if n < 1:
        return 0.0
    total, low, width = 0, 1, 1
    while low <= n:
        high = min(n, low * 10 - 1)
        total += (high - low + 1) * width
        low, width = low * 10, width + 1
    return total / n


# "%.2f" of a uniform value on [0, 10000): 4 to 7 characters
_MEASURE_CHARS = 0.001 * 4 + 0.009 * 5 + 0.09 * 6 + 0.9 * 7


def _text_bytes(rows: float, header: list, field_chars: list) -> float:
    header_line = sum(len(h) for h in header) + len(header)
    row_line = sum(field_chars) + len(field_chars)  # separators plus newline
    return header_line + rows * row_line


def estimate_size(p: LowLevelParams | HighLevelParams, assignment: list | None = None) -> SizeEstimate:
    """Expected rows and flat-file bytes per table, without generating data.

    High-level parameters are estimated at their means.  Fact rows are
    ``density * product of linked finest-level sizes``; ``assignment`` gives
    the linked dimension indices per fact table and may be omitted only when
    the product does not depend on which dimensions get linked.
    """
    if isinstance(p, HighLevelParams):
        p = nominal_low_level(p)
    tables = []
    finest = []
    for d in range(p.tot_nb_dim):
        sizes = p.level_sizes(d)
        for j, rows in enumerate(sizes, start=1):
            name = level_table_name(d + 1, j)
            descriptors = [string_descriptor_name(name, k) for k in range(1, p.nb_att[d][j - 1] + 1)]
            width = KEY_BYTES * (1 if j == 1 else 2)
            width += sum(_descriptor_bytes(a) for a in descriptors)
            header = [primary_key_name(name)] + descriptors
            chars = [_mean_digits(rows)] + [_descriptor_bytes(a) - 1 for a in descriptors]
            if j > 1:
                coarser = level_table_name(d + 1, j - 1)
                header.append(primary_key_name(coarser))
                chars.append(_mean_digits(sizes[j - 2]))
            tables.append(TableEstimate(name, rows, rows * width,
                                        text_bytes=_text_bytes(rows, header, chars)))
        finest.append(sizes[-1])
    if assignment is None:
        for f in range(p.nb_ft):
            if p.nb_dim[f] != p.tot_nb_dim and len(set(finest)) > 1:
                raise ValueError(f"{fact_table_name(f + 1)} cardinality depends on which "
                                 "dimensions it links; pass an assignment")
        assignment = [list(range(p.nb_dim[f])) for f in range(p.nb_ft)]
    for f, linked in enumerate(assignment):
        combos = 1
        for d in linked:
            combos *= finest[d]
        rows = p.density[f] * combos
        width = KEY_BYTES * len(linked) + MEASURE_BYTES * p.nb_meas[f]
        name = fact_table_name(f + 1)
        header = [primary_key_name(level_table_name(d + 1, p.nb_levels[d])) for d in linked]
        header += [float_measure_name(name, k) for k in range(1, p.nb_meas[f] + 1)]
        chars = [_mean_digits(finest[d]) for d in linked] + [_MEASURE_CHARS] * p.nb_meas[f]
        tables.append(TableEstimate(name, rows, rows * width, fact=True,
                                    text_bytes=_text_bytes(rows, header, chars)))
    return SizeEstimate(tuple(tables))


_SQL_TYPES = {
    PRIMARY_KEY: "INTEGER NOT NULL",
    FOREIGN_KEY: "INTEGER NOT NULL",
    MEASURE: "DOUBLE PRECISION",
}


def render_ddl(s: WarehouseSchema) -> str:
    """CREATE TABLE statements, referenced tables always first."""
    blocks = []
    for rel in s.relations():
        lines = []
        for a in rel.intention:
            if a.kind == DESCRIPTOR:
                lines.append(f"  {a.name} CHAR({_descriptor_bytes(a.name)})")
            else:
                lines.append(f"  {a.name} {_SQL_TYPES[a.kind]}")
        pk = rel.primary_key
        if pk is not None:
            lines.append(f"  PRIMARY KEY ({pk.name})")
        else:
            fks = ", ".join(a.name for a in rel.of_kind(FOREIGN_KEY))
            lines.append(f"  PRIMARY KEY ({fks})")
        for a in rel.of_kind(FOREIGN_KEY):
            target_pk = a.target.primary_key.name
            lines.append(f"  FOREIGN KEY ({a.name}) REFERENCES {a.target.name} ({target_pk})")
        blocks.append(f"CREATE TABLE {rel.name} (\n" + ",\n".join(lines) + "\n);\n")
    return "\n".join(blocks)


def _format_column(attr, col, referential) -> list:
    if attr.kind == DESCRIPTOR:
        words = [f"{attr.name}_{w}" for w in referential.pool]
        return [words[i] for i in col.tolist()]
    if attr.kind == MEASURE:
        return [f"{v:.2f}" for v in col.tolist()]
    return [str(v) for v in col.tolist()]


def render_table(rel) -> str:
    header = FIELD_SEPARATOR.join(a.name for a in rel.intention)
    cols = [_format_column(a, c, rel.referential) for a, c in zip(rel.intention, rel.columns)]
    rows = [FIELD_SEPARATOR.join(r) for r in zip(*cols)] if cols else []
    return "\n".join([header] + rows) + "\n"


def sha256_file(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def export_data(s: WarehouseSchema, directory: str | Path) -> list:
    """Write one ``<TABLE>.dat`` per relation; return per-file manifest entries."""
    directory = Path(directory)
    entries = []
    for rel in s.relations():
        path = directory / f"{rel.name}.dat"
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(render_table(rel))
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror}") from exc
        entries.append({"table": rel.name, "file": path.name, "rows": len(rel),
                        "bytes": path.stat().st_size, "sha256": sha256_file(path)})
    return entries


def _literal(value) -> str:
    if isinstance(value, str):
        return "'" + value.replace("'", "''") + "'"
    if isinstance(value, float):
        return f"{value:.2f}"
    return str(value)


def render_query_sql(q: Query) -> str:
    problems = check_grammar(q)
    if problems:
        raise RenderError(f"{q.qid or 'query'}: " + "; ".join(problems))
    select = [str(c) for c in q.select_attrs]
    select += [f"{a.function}({a.column}) AS {a.alias}" for a in q.aggregates]
    lines = ["SELECT " + ", ".join(select), "FROM " + ", ".join(q.tables)]
    where = [f"{left} = {right}" for left, right in q.joins]
    where += [f"{r.column} {r.op} {_literal(r.operand)}" for r in q.restrictions]
    if where:
        lines.append("WHERE " + " AND ".join(where))
    if q.group_by:
        cols = ", ".join(str(c) for c in q.group_by)
        if q.group_by_operator:
            lines.append(f"GROUP BY {q.group_by_operator}({cols})")
        else:
            lines.append(f"GROUP BY {cols}")
    if q.having is not None:
        a = q.having.aggregate
        lines.append(f"HAVING {a.function}({a.column}) {q.having.op} {_literal(q.having.value)}")
    return "\n".join(lines) + ";"


def query_header(q: Query) -> str:
    return f"-- {q.qid} kind={q.kind} parent={q.parent or '-'} fact={q.fact}"


def render_workload_sql(w: Workload) -> str:
    return "".join(f"{query_header(q)}\n{render_query_sql(q)}\n\n" for q in w.queries)


def parse_workload_sql(text: str) -> list:
    """Split workload.sql back into ``(id, kind, parent, statement)`` tuples."""
    out = []
    current = None
    body = []
    for line in text.splitlines():
        if line.startswith("-- Q"):
            if current is not None:
                out.append((*current, "\n".join(body).strip("\n")))
            fields = dict(part.split("=", 1) for part in line[3:].split()[1:])
            parent = fields.get("parent", "-")
            current = (line[3:].split()[0], fields.get("kind", EXTRACTION),
                       None if parent == "-" else parent)
            body = []
        elif current is not None:
            body.append(line)
    if current is not None:
        out.append((*current, "\n".join(body).strip("\n")))
    return out


def _dump(obj, path: Path):
    path.write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")


def write_artifacts(s: WarehouseSchema, w: Workload, directory: str | Path,
                    estimate: SizeEstimate | None = None, extra: dict | None = None) -> dict:
    """Write schema.sql, the .dat files, workload.sql, the JSON manifests, and
    finally manifest.json. Returns the manifest."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "schema.sql").write_text(render_ddl(s), encoding="utf-8")
    tables = export_data(s, directory)
    (directory / "workload.sql").write_text(render_workload_sql(w), encoding="utf-8")
    _dump(schema_manifest(s), directory / "schema.json")
    _dump(w.manifest(), directory / "workload.json")
    files = {name: sha256_file(directory / name)
             for name in ("schema.sql", "workload.sql", "schema.json", "workload.json")}
    manifest = {
        "seed": s.seed,
        "generator": s.generator,
        **(extra or {}),
        "params_digest": s.params.digest(),
        "low_level_params": s.params.to_text().splitlines(),
        "shape": s.shape(),
        "queries": len(w),
        "tables": tables,
        "files": files,
    }
    if estimate is not None:
        manifest["estimate"] = estimate.as_dict()
    _dump(manifest, directory / "manifest.json")
    return manifest
