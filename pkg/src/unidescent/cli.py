"""Command-line frontend.

Subcommands print one JSON ResultRecord by default; flat tables (chartable,
nu-sweeps of ``mult``) can also be written as CSV.  Character tables are
loaded from and saved to a JSON cache so repeated runs skip the rebuild.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .cache import ENV_VAR, default_cache_path, load_cache, save_cache
from .errors import (
    CacheError,
    ContainmentError,
    ParityError,
    PartitionParseError,
    SizeMismatchError,
    VerificationError,
)
from .ggp import Model, bessel_multiplicity, descend, fj_multiplicity, theta_lift
from .partitions import Partition, parse_partition, partitions_of
from .symchar import character_table, registered_tables
from .verify import SUITES, run_suites

log = logging.getLogger("unidescent")

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_PARITY = 3
EXIT_CACHE = 4


class UsageError(ValueError):
    """Bad command-line input not caught by argparse (exit 2)."""


@dataclass
class ResultRecord:
    command: str
    inputs: dict[str, Any]
    outputs: dict[str, Any]
    engine: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "outputs": self.outputs, "engine": self.engine}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "ResultRecord":
        data = json.loads(text)
        return cls(data["command"], data["inputs"], data["outputs"], data.get("engine", {}))


def _partition_arg(text: str) -> Partition:
    # raised as PartitionParseError so the exit code is ours, not argparse's
    return parse_partition(text)


def _engine(start: float, **extra: Any) -> dict[str, Any]:
    meta = dict(extra)
    meta["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    meta["version"] = __version__
    return meta


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def cmd_descend(args: argparse.Namespace) -> tuple[ResultRecord, None]:
    start = time.perf_counter()
    lam = _partition_arg(args.partition)
    if not lam:
        raise UsageError("descend needs a nonempty partition")
    res = descend(lam, Model(args.model), verify=False if args.no_verify_descent else None)
    out = res.to_json()
    inputs = {"partition": out.pop("partition"), "model": out.pop("model")}
    return ResultRecord("descend", inputs, out, _engine(start, covered=res.determined)), None


def _mult_one(model: Model, lam: Partition, nu: Partition, mode: str, mu0: int | None):
    if model is Model.BESSEL:
        if mode != "declarative" or mu0 is not None:
            raise UsageError("--mode/--mu0 apply to the fj model only")
        return bessel_multiplicity(lam, nu)
    return fj_multiplicity(lam, nu, mode=mode, mu0=mu0)


def cmd_mult(args: argparse.Namespace) -> tuple[ResultRecord, str | None]:
    start = time.perf_counter()
    lam = _partition_arg(args.lam)
    model = Model(args.model)
    inputs: dict[str, Any] = {"lambda": str(lam), "model": model.value, "mode": args.mode}
    if args.mu0 is not None:
        inputs["mu0"] = args.mu0
    if (args.nu is None) == (args.m is None):
        raise UsageError("give exactly one of --nu or --m")
    if args.nu is not None:
        nu = _partition_arg(args.nu)
        inputs["nu"] = str(nu)
        res = _mult_one(model, lam, nu, args.mode, args.mu0)
        outputs = {"raw": res.raw, "value": res.value}
        record = ResultRecord("mult", inputs, outputs, _engine(start, covered=res.covered, case=res.case_tag.value))
        if args.format == "csv":
            raise UsageError("CSV output is for flat tables; use --m for a nu-sweep")
        return record, None
    if args.m < 0:
        raise UsageError("--m must be nonnegative")
    inputs["m"] = args.m
    rows = []
    for nu in partitions_of(args.m):
        res = _mult_one(model, lam, nu, args.mode, args.mu0)
        rows.append({"nu": str(nu), **res.to_json()})
    record = ResultRecord("mult", inputs, {"rows": rows}, _engine(start))
    text = None
    if args.format == "csv":
        text = _csv(["nu", "raw", "value", "covered", "case"], [list(r.values()) for r in rows])
    return record, text


def cmd_theta(args: argparse.Namespace) -> tuple[ResultRecord, None]:
    start = time.perf_counter()
    lam = _partition_arg(args.lam)
    if args.target < 0:
        raise UsageError("--target must be nonnegative")
    if args.format == "csv":
        raise UsageError("theta output is JSON only")
    lift = theta_lift(lam, args.target)
    inputs = {"lambda": str(lam), "target": args.target}
    return ResultRecord("theta", inputs, {"components": [str(p) for p in lift.components]}, _engine(start)), None


def cmd_chartable(args: argparse.Namespace) -> tuple[ResultRecord, str | None]:
    start = time.perf_counter()
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    table = character_table(args.n)
    record = ResultRecord("chartable", {"n": args.n}, table.to_json(), _engine(start))
    text = None
    if args.format == "csv":
        labels = [str(p) for p in table.partitions]
        text = _csv(["lambda\\mu", *labels], [[lab, *row] for lab, row in zip(labels, table.values)])
    return record, text


def cmd_verify(args: argparse.Namespace) -> int:
    names = args.suite or None
    results = run_suites(args.max_n, names)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        record = ResultRecord(
            "verify",
            {"max_n": args.max_n, "suites": [r.name for r in results]},
            {
                "passed": not failed,
                "suites": [
                    {"name": r.name, "passed": r.passed, "checked": r.checked, "counterexample": r.counterexample}
                    for r in results
                ],
            },
            {"elapsed_ms": round(sum(r.seconds for r in results) * 1000, 3), "version": __version__},
        )
        print(record.dumps())
    else:
        for r in results:
            print(r.line())
    return EXIT_VERIFY if failed else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None, help="output format (default json)")
    common.add_argument("--cache", type=Path, default=None, help=f"cache file (default ${ENV_VAR} or user config dir)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the table cache")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="unidescent", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("descend", parents=[common], help="first occurrence index and first descent")
    p.add_argument("--partition", required=True)
    p.add_argument("--model", choices=[m.value for m in Model], required=True)
    p.add_argument("--no-verify-descent", action="store_true", help="skip the multiplicity sweep check")
    p.set_defaults(func=cmd_descend)

    p = sub.add_parser("mult", parents=[common], help="Bessel or Fourier-Jacobi multiplicity")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--nu")
    p.add_argument("--m", type=int, help="sweep every nu of this size instead of a single --nu")
    p.add_argument("--model", choices=[m.value for m in Model], required=True)
    p.add_argument("--mode", choices=("declarative", "seesaw"), default="declarative")
    p.add_argument("--mu0", type=int)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("theta", parents=[common], help="theta lift of a unipotent representation")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--target", type=int, required=True)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("chartable", parents=[common], help="character table of S_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--suite", action="append", choices=list(SUITES), help="repeatable; default all")
    p.set_defaults(func=cmd_verify)
    return parser


def _run(args: argparse.Namespace) -> int:
    if args.command == "verify":
        if args.format == "csv":
            raise UsageError("verify output is text or JSON")
        return cmd_verify(args)
    if args.format is None:
        args.format = "json"
    record, text = args.func(args)
    sys.stdout.write(text if text is not None else record.dumps() + "\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        cache_path = None if args.no_cache else (args.cache or default_cache_path())
        loaded = load_cache(cache_path) if cache_path else 0
        status = _run(args)
        if cache_path and len(registered_tables()) > loaded:
            save_cache(cache_path)
        return status
    except (PartitionParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParityError, SizeMismatchError, ContainmentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARITY
    except CacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
