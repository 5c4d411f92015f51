"""Parser for the SQL subset that ``render_query_sql`` produces.

Used to check that rendered queries read back into the same clauses.
"""
from __future__ import annotations

import re

from .workload import (
    AGGREGATE_FUNCTIONS,
    COMPARISONS,
    CUBE,
    EXTRACTION,
    OLAP,
    ROLLUP,
    Aggregate,
    Column,
    Having,
    Query,
    Restriction,
)


class SqlSyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"""
    \s*(?:
      (?P<string>'(?:[^']|'')*')
    | (?P<number>-?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?)
    | (?P<op><>|<=|>=|=|<|>)
    | (?P<punct>[(),;])
    | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)?)
    )""", re.VERBOSE)

_KEYWORDS = {"SELECT", "FROM", "WHERE", "AND", "GROUP", "BY", "HAVING", "AS", "CUBE", "ROLLUP"}


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SqlSyntaxError(f"unexpected character at offset {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "name" and value.upper() in _KEYWORDS:
            kind, value = "kw", value.upper()
        tokens.append((kind, value))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self, offset=0):
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else ("eof", None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise SqlSyntaxError(f"expected {want}, got {tok[1]!r}")
        self.i += 1
        return tok[1]

    def accept(self, kind, value=None):
        tok = self.peek()
        if tok[0] == kind and (value is None or tok[1] == value):
            self.i += 1
            return True
        return False

    def column(self) -> Column:
        name = self.take("name")
        if "." not in name:
            raise SqlSyntaxError(f"column {name} must be table-qualified")
        table, col = name.split(".", 1)
        return Column(table, col)

    def literal(self):
        kind, value = self.peek()
        if kind == "string":
            self.i += 1
            return value[1:-1].replace("''", "'")
        if kind == "number":
            self.i += 1
            return float(value) if any(c in value for c in ".eE") else int(value)
        raise SqlSyntaxError(f"expected a literal, got {value!r}")

    def aggregate_call(self):
        func = self.take("name").upper()
        if func not in AGGREGATE_FUNCTIONS:
            raise SqlSyntaxError(f"unknown aggregate function {func}")
        self.take("punct", "(")
        col = self.column()
        self.take("punct", ")")
        return func, col

    def column_list(self) -> list:
        cols = [self.column()]
        while self.accept("punct", ","):
            cols.append(self.column())
        return cols


def parse_query_sql(text: str) -> Query:
    """Read one rendered statement back into a ``Query``.

    The kind comes back as ``olap`` when aggregates are present, else
    ``extraction``; ids and parents are not part of the statement.
    """
    p = _Parser(tokenize(text))
    q = Query()
    p.take("kw", "SELECT")
    while True:
        if p.peek(1) == ("punct", "("):
            func, col = p.aggregate_call()
            p.take("kw", "AS")
            q.aggregates.append(Aggregate(func, col, p.take("name")))
        else:
            if q.aggregates:
                raise SqlSyntaxError("attributes must precede aggregates")
            q.select_attrs.append(p.column())
        if not p.accept("punct", ","):
            break
    p.take("kw", "FROM")
    q.tables.append(p.take("name"))
    while p.accept("punct", ","):
        q.tables.append(p.take("name"))
    if p.accept("kw", "WHERE"):
        while True:
            left = p.column()
            op = p.take("op")
            if p.peek()[0] == "name":
                if op != "=":
                    raise SqlSyntaxError("joins must be equalities")
                q.joins.append((left, p.column()))
            else:
                if op not in COMPARISONS:
                    raise SqlSyntaxError(f"unknown comparison {op}")
                q.restrictions.append(Restriction(left, op, p.literal()))
            if not p.accept("kw", "AND"):
                break
    if p.accept("kw", "GROUP"):
        p.take("kw", "BY")
        if p.peek()[0] == "kw" and p.peek()[1] in (CUBE, ROLLUP):
            q.group_by_operator = p.take("kw")
            p.take("punct", "(")
            q.group_by = p.column_list()
            p.take("punct", ")")
        else:
            q.group_by = p.column_list()
    if p.accept("kw", "HAVING"):
        func, col = p.aggregate_call()
        op = p.take("op")
        value = p.literal()
        match = [a for a in q.aggregates if a.function == func and a.column == col]
        if not match:
            raise SqlSyntaxError(f"HAVING {func}({col}) matches no selected aggregate")
        q.having = Having(match[0], op, float(value))
    p.accept("punct", ";")
    if p.peek()[0] != "eof":
        raise SqlSyntaxError(f"trailing input at {p.peek()[1]!r}")
    q.kind = OLAP if q.aggregates else EXTRACTION
    q.fact = q.tables[0]
    return q
