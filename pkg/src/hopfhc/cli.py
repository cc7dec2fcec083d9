"""Command-line front end: ``hopfhc <config> [--output PATH] [--max-degree N]``.

Exit codes: 0 all fatal ledger entries pass, 1 assertion failure (report
written, witnesses included), 2 usage/config error (no report).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from .algebras import make_preset
from .checks import run_checks
from .coefficients import make_coefficient
from .config import RunConfig, parse_config
from .errors import HopfHCError, ParseError, ValidationError
from .homology import cyclic_cohomology_bicomplex, hochschild_cohomology
from .quotients import build_cm_complex
from .vanishing import uq_vanishing_check

SCHEMA = 1
log = logging.getLogger("hopfhc")


def _threads() -> int:
    raw = os.environ.get("HOPFHC_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValidationError("HOPFHC_THREADS", f"not an integer: {raw!r}") from None
    if n < 1:
        raise ValidationError("HOPFHC_THREADS", "must be >= 1")
    # all computations are exact and single-threaded; the cap is accepted for
    # forward compatibility and never exceeded
    return n


def _clean(entry: dict) -> dict:
    out = {"name": entry["name"], "degrees": list(entry.get("degrees", [])), "pass": bool(entry["pass"])}
    for k in ("fatal", "checked", "failed", "skipped", "witness", "note", "dims"):
        if k in entry:
            out[k] = entry[k]
    out.setdefault("fatal", True)
    return out


def execute(cfg: RunConfig) -> dict:
    """Run a validated config; returns the report dict (without timing)."""
    report: dict = {"schema": SCHEMA, "config_echo": cfg.echo()}
    ledger: list = []
    try:
        if cfg.theory == "uq_vanishing":
            ledger = uq_vanishing_check(
                cfg.algebra_params.get("q", "2"), int(cfg.algebra_params.get("cap", 3)), cfg.max_degree
            )
        else:
            H = make_preset(cfg.algebra, **cfg.algebra_params)
            Y = make_coefficient(H, cfg.coefficient, **cfg.coefficient_params)
            if cfg.theory == "check":
                ledger = run_checks(H, Y, cfg.max_degree, cfg.route)
            else:
                data = build_cm_complex(H, Y, cfg.max_degree + 1, cfg.route)
                ledger = list(data.ledger)
                fn = hochschild_cohomology if cfg.theory == "hochschild" else cyclic_cohomology_bicomplex
                rep = fn(data, cfg.max_degree)
                ledger += rep.ledger
                report["ranks"] = rep.rank_list()
                report["convention"] = "cohomology of the cochain (total) complex"
    except (ParseError, ValidationError):
        raise
    except HopfHCError as exc:
        ledger.append({"name": "run", "degrees": [], "pass": False, "fatal": True,
                       "witness": {"error": type(exc).__name__, "message": str(exc),
                                   **({"detail": exc.witness} if getattr(exc, "witness", None) else {})}})
    report["ledger"] = [_clean(e) for e in ledger]
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=str, ensure_ascii=False) + "\n"


def exit_code(report: dict) -> int:
    return 1 if any(e["fatal"] and not e["pass"] for e in report["ledger"]) else 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="hopfhc", description="Exact Hopf-cyclic identity checks and cohomology ranks.")
    ap.add_argument("config", help="path to a key = value run configuration")
    ap.add_argument("--output", help="report path (overrides 'output' in the config; default stdout)")
    ap.add_argument("--max-degree", type=int, help="overrides 'max_degree' in the config")
    ap.add_argument("-v", "--verbose", action="store_true")
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        _threads()
        with open(args.config, encoding="utf-8") as fh:
            cfg = parse_config(fh.read())
        if args.max_degree is not None:
            if args.max_degree < 0:
                raise ValidationError("max_degree", "must be >= 0")
            cfg.max_degree = args.max_degree
        if args.output:
            cfg.output = args.output
    except (OSError, UnicodeDecodeError, ParseError, ValidationError) as exc:
        print(f"hopfhc: error: {exc}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        report = execute(cfg)
    except (ParseError, ValidationError) as exc:
        print(f"hopfhc: error: {exc}", file=sys.stderr)
        return 2
    report["wall_time_ms"] = int((time.perf_counter() - start) * 1000)
    text = dumps(report)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    code = exit_code(report)
    log.info("%d ledger entries, exit %d", len(report["ledger"]), code)
    return code


if __name__ == "__main__":
    sys.exit(main())
