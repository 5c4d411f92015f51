"""Command-line front end: estimate, generate, load, run, or all of them."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from ..params import ConfigError, load_config
from ..pipeline import plan, write_all
from ..presets import PRESETS
from ..schema import SchemaError
from .connectors import CONNECTORS, ConnectorError, connect
from .runner import (
    RunReport,
    environment,
    load_warehouse,
    read_manifest,
    read_statements,
    run_workload,
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_CAP = 2
EXIT_CONNECTOR = 3

DEFAULT_DSN_ENV = "DWGEN_DSN"

log = logging.getLogger("dwgen")


class CapExceeded(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="parameter file (key = value lines)")
    common.add_argument("--preset", choices=sorted(PRESETS), help="built-in parameter set")
    common.add_argument("--seed", type=int, help="overrides the config seed")
    common.add_argument("--out", type=Path, default=Path("dwgen-out"),
                        help="artifact directory (default: %(default)s)")
    common.add_argument("--estimate-only", action="store_true",
                        help="print the size estimate and stop")
    common.add_argument("--force", action="store_true",
                        help="generate even when the estimate exceeds max_rows")
    common.add_argument("--max-rows", type=int, help="safety cap on estimated total rows")
    common.add_argument("--repetitions", type=int, default=1,
                        help="times the workload is executed (default: %(default)s)")
    common.add_argument("--connector", choices=sorted(CONNECTORS), default="duckdb")
    common.add_argument("--dsn-env", default=DEFAULT_DSN_ENV, metavar="VAR",
                        help="environment variable holding the database locator "
                             "(default: %(default)s; unset means a file in --out)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="dwgen", description="Synthetic data warehouse and OLAP workload generator.")
    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("estimate", parents=[common], help="print the expected warehouse size")
    sub.add_parser("generate", parents=[common], help="write schema, data and workload files")
    sub.add_parser("load", parents=[common], help="create and bulk-load the warehouse")
    sub.add_parser("run", parents=[common], help="execute the workload and write a run report")
    sub.add_parser("all", parents=[common], help="generate, load and run")
    return parser


def _config(args):
    if args.config is not None and args.preset is not None:
        raise ConfigError("--config and --preset are mutually exclusive")
    if args.config is not None:
        try:
            source = args.config.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read {args.config}: {exc.strerror}") from None
    else:
        source = PRESETS[args.preset] if args.preset else None
    return load_config(source, {"seed": args.seed, "max_rows": args.max_rows})


def cmd_estimate(args, out=None):
    out = out or sys.stdout
    config = _config(args)
    p = plan(config)
    if p.nominal is not None:
        print("estimate at parameter means:", file=out)
        print(p.nominal.report(), file=out)
        print(f"\nestimate for seed {config.seed}:", file=out)
    print(p.estimate.report(), file=out)
    if p.estimate.fact_rows == 0:
        print("warning: no fact rows expected", file=out)
    if p.too_large():
        print(f"estimated {p.estimate.total_rows:.6g} rows exceeds max_rows={config.max_rows}",
              file=out)
    return p


def cmd_generate(args, out=None):
    out = out or sys.stdout
    p = cmd_estimate(args, out)
    if args.estimate_only:
        return None
    if p.too_large() and not args.force:
        raise CapExceeded(f"estimated {p.estimate.total_rows:.6g} rows exceeds "
                          f"max_rows={p.config.max_rows}; pass --force to generate anyway")
    manifest = write_all(p, args.out)
    rows = sum(t["rows"] for t in manifest["tables"])
    print(f"wrote {len(manifest['tables'])} tables ({rows} rows) and "
          f"{manifest['queries']} queries to {args.out}", file=out)
    return manifest


def _locator(args, ext: str) -> str:
    value = os.environ.get(args.dsn_env)
    if value:
        return value
    return str(args.out / f"warehouse{ext}")


def _connect(args):
    cls = CONNECTORS[args.connector]
    return connect(args.connector, _locator(args, cls.extension))


def cmd_load(args, out=None):
    out = out or sys.stdout
    manifest = read_manifest(args.out)
    with _connect(args) as conn:
        loads = load_warehouse(conn, args.out)
    report = RunReport(environment(manifest, args.connector, 0), load=loads)
    report.write(args.out / "load_report.json")
    for t in loads:
        print(f"{t.table:<12} {t.rows_loaded:>10} rows  {t.seconds:.3f}s", file=out)
    return report


def cmd_run(args, out=None, loads=None):
    out = out or sys.stdout
    manifest = read_manifest(args.out)
    statements = read_statements(args.out)
    report = RunReport(environment(manifest, args.connector, args.repetitions), load=loads)
    with _connect(args) as conn:
        run_workload(conn, statements, args.repetitions, report)
    report.write(args.out / "run_report.json")
    totals = report.totals()
    print(f"executed {totals['queries_executed']} queries "
          f"({totals['queries_failed']} failed) in {totals['query_seconds']:.3f}s", file=out)
    return report


def cmd_all(args, out=None):
    out = out or sys.stdout
    if cmd_generate(args, out) is None:
        return None
    loads = cmd_load(args, out).load
    return cmd_run(args, out, loads)


COMMANDS = {"estimate": cmd_estimate, "generate": cmd_generate, "load": cmd_load,
            "run": cmd_run, "all": cmd_all}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if args.verb == "estimate":
        args.estimate_only = True
    if args.repetitions < 1:
        log.error("--repetitions must be >= 1")
        return EXIT_CONFIG
    try:
        COMMANDS[args.verb](args)
    except (ConfigError, SchemaError) as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG
    except FileNotFoundError as exc:
        log.error("%s", exc)
        return EXIT_CONFIG
    except CapExceeded as exc:
        log.error("%s", exc)
        return EXIT_CAP
    except ConnectorError as exc:
        log.error("connector error: %s", exc)
        return EXIT_CONNECTOR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
