"""Minimal database connectors: execute a statement, bulk-load a file, count rows."""
from __future__ import annotations

import csv
import sqlite3
from pathlib import Path


class ConnectorError(RuntimeError):
    def __init__(self, message, table=None):
        self.table = table
        super().__init__(f"{table}: {message}" if table else message)


class ConnectionLost(ConnectorError):
    pass


def _mask(message: str, locator: str) -> str:
    """Locators may embed credentials; keep them out of error text."""
    return message.replace(locator, "<locator>") if locator else message


class Connector:
    name = "base"
    extension = ".db"

    def execute_script(self, sql: str) -> None:
        raise NotImplementedError

    def query(self, sql: str) -> int:
        """Run ``sql`` and return the number of result rows."""
        raise NotImplementedError

    def bulk_load(self, table: str, path: Path) -> None:
        raise NotImplementedError

    def count(self, table: str) -> int:
        return int(self._scalar(f"SELECT COUNT(*) FROM {table}"))

    def drop_tables(self, tables) -> None:
        for table in reversed(list(tables)):
            self.execute_script(f"DROP TABLE IF EXISTS {table};")

    def _scalar(self, sql):
        raise NotImplementedError

    def close(self) -> None:
        pass

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


class SQLiteConnector(Connector):
    """stdlib sqlite3. Enforces foreign keys; has no CUBE/ROLLUP, so OLAP
    queries fail individually and are reported as such."""

    name = "sqlite"
    extension = ".sqlite"

    def __init__(self, locator: str):
        try:
            self.conn = sqlite3.connect(locator, isolation_level=None)
            self.conn.execute("PRAGMA foreign_keys = ON")
        except sqlite3.Error as exc:
            raise ConnectionLost("cannot open sqlite database: "
                                 + _mask(str(exc), locator)) from None

    def _guard(self, exc, table=None):
        if isinstance(exc, sqlite3.ProgrammingError) and "closed" in str(exc):
            raise ConnectionLost(str(exc), table) from None
        raise ConnectorError(str(exc), table) from None

    def execute_script(self, sql):
        try:
            self.conn.executescript(sql)
        except sqlite3.Error as exc:
            self._guard(exc)

    def query(self, sql):
        try:
            return len(self.conn.execute(sql).fetchall())
        except sqlite3.Error as exc:
            self._guard(exc)

    def _scalar(self, sql):
        try:
            return self.conn.execute(sql).fetchone()[0]
        except sqlite3.Error as exc:
            self._guard(exc)

    def bulk_load(self, table, path):
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh, delimiter="|", quoting=csv.QUOTE_NONE)
            header = next(reader)
            marks = ", ".join("?" for _ in header)
            sql = f"INSERT INTO {table} ({', '.join(header)}) VALUES ({marks})"
            try:
                self.conn.execute("BEGIN")
                self.conn.executemany(sql, reader)
                self.conn.execute("COMMIT")
            except sqlite3.Error as exc:
                if self.conn.in_transaction:
                    self.conn.execute("ROLLBACK")
                self._guard(exc, table)

    def close(self):
        self.conn.close()


class DuckDBConnector(Connector):
    """DuckDB: CUBE/ROLLUP support, enforced foreign keys, native COPY."""

    name = "duckdb"
    extension = ".duckdb"

    def __init__(self, locator: str):
        try:
            import duckdb
        except ImportError:
            raise ConnectionLost("duckdb is not installed (pip install duckdb)") from None
        self._duckdb = duckdb
        try:
            self.conn = duckdb.connect(locator)
        except duckdb.Error as exc:
            raise ConnectionLost("cannot open duckdb database: "
                                 + _mask(str(exc), locator)) from None

    def _guard(self, exc, table=None):
        if isinstance(exc, self._duckdb.ConnectionException):
            raise ConnectionLost(str(exc), table) from None
        raise ConnectorError(str(exc), table) from None

    def execute_script(self, sql):
        try:
            self.conn.execute(sql)
        except self._duckdb.Error as exc:
            self._guard(exc)

    def query(self, sql):
        try:
            return len(self.conn.execute(sql).fetchall())
        except self._duckdb.Error as exc:
            self._guard(exc)

    def _scalar(self, sql):
        try:
            return self.conn.execute(sql).fetchone()[0]
        except self._duckdb.Error as exc:
            self._guard(exc)

    def bulk_load(self, table, path):
        location = str(path).replace("'", "''")
        try:
            self.conn.execute(f"COPY {table} FROM '{location}' "
                              "(DELIMITER '|', HEADER, QUOTE '', ESCAPE '')")
        except self._duckdb.Error as exc:
            self._guard(exc, table)

    def close(self):
        self.conn.close()


CONNECTORS = {"duckdb": DuckDBConnector, "sqlite": SQLiteConnector}


def connect(name: str, locator: str) -> Connector:
    try:
        cls = CONNECTORS[name]
    except KeyError:
        raise ConnectorError(f"unknown connector {name!r}; choose from {sorted(CONNECTORS)}") from None
    return cls(locator)
