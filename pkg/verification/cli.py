"""
Command-line front end.

Subcommands:
    verify    run identity checks over parameter grids
    hunt      adjudicate the table 129 entries
    eval      evaluate one special function
    sum       sum one registered series
    registry  dump the identity catalog

Exit codes: 0 when no verdict is fail, 2 when any verdict is fail, 1 on a
usage or configuration error.

Usage:
    python run.py verify --ids main-01..main-19 --a 0.5,1,pi --tol 1e-9 --format json
    python run.py hunt --convention both
    python run.py eval --fn Ci --x pi
    python run.py sum --series si_kpi --mode cesaro_c1 --terms 100000
"""

import argparse
import math
import re
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence, get_args

from logkernel import specfun
from logkernel.catalog import registry_document
from logkernel.exceptions import LogKernelError, UsageError
from logkernel.logging_config import get_logger, setup_logging
from logkernel.models.series import SeriesSpec, SumMode
from logkernel.models.verification import HuntReport, VerificationResult
from logkernel.series import list_series, sum_series, term_registry
from verification.config import VerifyConfig
from verification.harness import run_suite, select_ids
from verification.hunt import hunt_table129
from verification.report_generator import ReportGenerator


logger = get_logger("cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAIL = 2

_PI_NUMBER = re.compile(r"^([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\*?pi(?:/(\d+(?:\.\d*)?))?$")


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# ===========================================
# Argument parsing helpers
# ===========================================


def parse_number(text: str) -> float:
    """Float literal or a multiple of pi: ``pi``, ``2pi``, ``-pi/2``, ``0.5*pi/4``."""
    text = text.strip().lower()
    match = _PI_NUMBER.match(text)
    if match:
        coeff, divisor = match.groups()
        factor = -1.0 if coeff == "-" else 1.0 if coeff in ("", "+") else float(coeff)
        return factor * math.pi / (float(divisor) if divisor else 1.0)
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"not a finite number: {text!r}")
    return value


def parse_number_list(text: str) -> tuple[float, ...]:
    return tuple(parse_number(part) for part in text.split(",") if part.strip())


def parse_param(text: str) -> tuple[str, float]:
    """``name=value`` for series parameters."""
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise UsageError(f"expected name=value, got {text!r}")
    number = parse_number(value)
    return name.strip(), int(number) if number.is_integer() and "." not in value else number


def build_parser() -> CliParser:
    parser = CliParser(prog="logkernel", description="Numerical verification of log-kernel integral identities")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Check identities over parameter grids")
    verify.add_argument("--ids", help="Comma list of ids, prefixes or first..last ranges (default: all)")
    verify.add_argument("--a", dest="a_grid", help="Comma list of a values (pi, 2pi, pi/2 accepted)")
    verify.add_argument("--tol", type=float, default=VerifyConfig.tol, help="Verdict tolerance")
    verify.add_argument("--quad-tol", type=float, help="Quadrature abs/rel tolerance")
    verify.add_argument("--series-tol", type=float, help="Override every series tolerance")
    verify.add_argument("--max-terms", type=int, help="Cap every series term budget")
    verify.add_argument("--workers", type=int, help="Thread pool size")
    verify.add_argument("--timing", action="store_true", help="Record elapsed_ms")
    _add_output(verify)

    hunt = sub.add_parser("hunt", help="Adjudicate the table 129 entries")
    hunt.add_argument("--convention", choices=("modern", "archaic", "both"), default="both")
    hunt.add_argument("--tol", type=float, default=VerifyConfig.tol)
    _add_output(hunt)

    evaluate = sub.add_parser("eval", help="Evaluate one special function")
    evaluate.add_argument("--fn", required=True, help=f"One of: {', '.join(FUNCTIONS)}")
    evaluate.add_argument("--x", help="Argument")
    evaluate.add_argument("--order", type=int, help="Polygamma order")
    evaluate.add_argument("--k", type=int, help="Bernoulli index")
    evaluate.add_argument("--convention", choices=("modern", "archaic"), default="modern")
    _add_output(evaluate)

    summing = sub.add_parser("sum", help="Sum one registered series")
    summing.add_argument("--series", required=True, help="Term generator id")
    summing.add_argument("--mode", choices=get_args(SumMode), help="Engine (default: first admissible)")
    summing.add_argument("--terms", type=int, help="Term budget")
    summing.add_argument("--tol", type=float, default=1e-11)
    summing.add_argument("--param", action="append", default=[], help="Series parameter name=value")
    _add_output(summing)

    registry = sub.add_parser("registry", help="Dump the identity catalog")
    _add_output(registry)
    return parser


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--out", type=Path, help="Write to FILE instead of stdout")


# ===========================================
# Special functions for `eval`
# ===========================================


def _need(value: Optional[Any], flag: str) -> Any:
    if value is None:
        raise UsageError(f"--{flag} is required for this function")
    return value


def _ei_imag(args) -> dict[str, Any]:
    pair = specfun.ei_imag(parse_number(_need(args.x, "x")))
    return {"re": pair.re, "im": pair.im}


def _of_x(fn: Callable[[float], float]) -> Callable[[Any], dict[str, Any]]:
    return lambda args: {"value": fn(parse_number(_need(args.x, "x")))}


FUNCTIONS: dict[str, Callable[[Any], dict[str, Any]]] = {
    "Si": _of_x(specfun.si_upper),
    "si": _of_x(specfun.si_lower),
    "Ci": _of_x(specfun.ci),
    "digamma": _of_x(specfun.digamma),
    "polygamma": lambda args: {
        "value": specfun.polygamma(_need(args.order, "order"), parse_number(_need(args.x, "x")))
    },
    "gamma_ln": _of_x(specfun.gamma_ln),
    "zeta": _of_x(specfun.zeta),
    "dilog": _of_x(specfun.dilog),
    "bernoulli": lambda args: {"value": specfun.bernoulli_even(_need(args.k, "k"), args.convention)},
    "ei_imag": _ei_imag,
    "aux_f": _of_x(specfun.aux_f),
    "aux_g": _of_x(specfun.aux_g),
    "tanh_saalschuetz": _of_x(specfun.tanh_saalschuetz),
    "kummer_ln_gamma": _of_x(specfun.kummer_ln_gamma),
}


# ===========================================
# Subcommands
# ===========================================


def _exit_code(verdicts: Sequence[str]) -> int:
    return EXIT_FAIL if "fail" in verdicts else EXIT_OK


def cmd_verify(args) -> int:
    try:
        config = VerifyConfig(
            ids=[part for part in (args.ids or "").split(",") if part.strip()],
            tol=args.tol,
            timing=args.timing,
            max_workers=args.workers,
            series_tol=args.series_tol,
            series_max_terms=args.max_terms,
        )
        if args.a_grid:
            config.a_grid = parse_number_list(args.a_grid)
        if args.quad_tol:
            config.quad_abs_tol = config.quad_rel_tol = args.quad_tol
        qcfg = config.quad_config()
        scfg = config.sum_config()
    except ValueError as e:
        raise UsageError(str(e)) from None

    ids = select_ids(config.ids) if args.ids is not None else None
    logger.info(f"verify {config.to_dict()}", extra={"component": "cli", "event": "verify_started"})
    results: list[VerificationResult] = run_suite(
        ids, config.a_grid, config.tol, qcfg, scfg, config.timing, config.max_workers
    )
    generator = ReportGenerator(args.format)
    generator.write(generator.render_results(results), args.out)
    return _exit_code([r.verdict for r in results])


def cmd_hunt(args) -> int:
    report: HuntReport = hunt_table129(args.convention, args.tol)
    generator = ReportGenerator(args.format)
    generator.write(generator.render_hunt(report), args.out)
    return _exit_code(report.verdicts())


def cmd_eval(args) -> int:
    fn = FUNCTIONS.get(args.fn)
    if fn is None:
        raise UsageError(f"Unknown function '{args.fn}'. Valid names: {', '.join(FUNCTIONS)}")
    record: dict[str, Any] = {"fn": args.fn}
    if args.x is not None:
        record["x"] = parse_number(args.x)
    if args.order is not None:
        record["order"] = args.order
    if args.k is not None:
        record["k"] = args.k
        record["convention"] = args.convention
    record.update(fn(args))
    generator = ReportGenerator(args.format)
    generator.write(generator.render_record(record), args.out)
    return EXIT_OK


def cmd_sum(args) -> int:
    if args.series not in term_registry:
        raise UsageError(f"Unknown series '{args.series}'. Valid names: {', '.join(list_series())}")
    term = term_registry.get(args.series)
    mode = args.mode or term.modes[0]
    spec_fields: dict[str, Any] = {
        "term_id": args.series,
        "params": dict(parse_param(p) for p in args.param),
        "mode": mode,
        "tol": args.tol,
    }
    if args.terms is not None:
        spec_fields["max_terms"] = args.terms
    try:
        spec = SeriesSpec(**spec_fields)
    except ValueError as e:
        raise UsageError(str(e)) from None
    result = sum_series(spec)
    record = {
        "series": spec.term_id,
        "mode": result.mode_used,
        "value": result.value,
        "error_estimate": result.error_estimate,
        "terms_used": result.terms_used,
        "converged": result.converged,
        "notes": "; ".join(result.notes),
    }
    generator = ReportGenerator(args.format)
    generator.write(generator.render_record(record), args.out)
    return EXIT_OK


def cmd_registry(args) -> int:
    generator = ReportGenerator(args.format)
    generator.write(generator.render_registry(registry_document()), args.out)
    return EXIT_OK


COMMANDS: dict[str, Callable[[Any], int]] = {
    "verify": cmd_verify,
    "hunt": cmd_hunt,
    "eval": cmd_eval,
    "sum": cmd_sum,
    "registry": cmd_registry,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        setup_logging()
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except LogKernelError as e:
        # Domain, registry and usage errors all surface as exit 1
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
