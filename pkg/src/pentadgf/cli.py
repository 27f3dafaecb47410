"""Command-line front end.

Every evaluation route is exposed as a subcommand emitting one JSON object
(default) or CSV rows on stdout; diagnostics go to stderr.  Exit codes:
0 success, 2 argument or domain error, 3 convergence/conditioning failure
(the best value is still printed, with ``"flagged": true``).

Complex arguments are written RE,IM with the imaginary part defaulting to 0,
e.g. ``pentadgf eval --s 0.5,6.0``.  All numeric configuration is by flags;
no environment variables are consulted (the PENTADGF_BACKEND switch only
selects the acceleration backend and does not change any result).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import __version__
from .contour import EvalResult
from .dgf import (
    asymptotic_approx,
    d_explicit,
    evaluate,
)
from .errors import ConvergenceError, DomainError, EvaluationError
from .perron import partial_sum
from .qfunc import eta_hankel, eta_series, phi_hankel, phi_product_oracle, phi_series
from .sequences import bernoulli, coeff_a, glaisher_gstar
from .zeros import find_zeros

__all__ = ["main", "run", "build_parser"]


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "csv"),
        default="json",
        help="output format (default json)",
    )
    parser = argparse.ArgumentParser(
        prog="pentadgf",
        description="Evaluate the pentagonal-coefficient Dirichlet series and friends",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate D*(s)")
    p.add_argument("--s", type=_parse_complex, required=True, metavar="RE[,IM]")
    p.add_argument(
        "--method",
        choices=("integral", "series", "mellin", "explicit", "auto"),
        default="auto",
    )
    p.add_argument("--tol", type=float, default=1e-11)

    p = sub.add_parser("dk", parents=[common], help="exact D(k) at integer k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="include exact pi-coefficients")

    p = sub.add_parser("zeros", parents=[common], help="zeros in the strip")
    p.add_argument("--imag-max", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("partial-sum", parents=[common], help="coefficient partial sum")
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("phi", parents=[common], help="Euler function phi(q)")
    p.add_argument("--q", type=_parse_complex, required=True, metavar="RE[,IM]")
    p.add_argument("--method", choices=("series", "hankel", "product"), default="series")
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("eta", parents=[common], help="Dedekind eta(tau)")
    p.add_argument("--tau", type=_parse_complex, required=True, metavar="RE,IM")
    p.add_argument("--method", choices=("series", "hankel"), default="series")
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("table", parents=[common], help="sequence tables")
    p.add_argument("--what", choices=("a", "bernoulli", "gstar"), required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("asymptotic", parents=[common], help="s -> -inf approximations")
    p.add_argument("--s", type=float, required=True)
    return parser


def _complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _emit(record: dict, fmt: str, rows: list[dict] | None = None) -> None:
    if fmt == "json":
        print(json.dumps(record))
        return
    out = csv.writer(sys.stdout)
    out.writerow(["command", "input", "value_re", "value_im", "err", "method"])
    if rows is None:
        value = record.get("value") or {"re": "", "im": ""}
        rows = [
            {
                "input": json.dumps(record["inputs"], sort_keys=True),
                "value_re": value["re"],
                "value_im": value["im"],
                "err": record.get("err_estimate", ""),
                "method": record.get("method", ""),
            }
        ]
    for row in rows:
        out.writerow(
            [
                record["command"],
                row["input"],
                row["value_re"],
                row["value_im"],
                row["err"],
                row["method"],
            ]
        )


def _result_record(command: str, inputs: dict, res: EvalResult, elapsed: float) -> dict:
    rec = {
        "command": command,
        "inputs": inputs,
        "value": _complex_json(complex(res.value)),
        "err_estimate": res.err_estimate,
        "method": str(res.method),
        "elapsed_ms": elapsed * 1e3,
    }
    if res.ill_conditioned:
        rec["flagged"] = True
    return rec


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "json")
    started = time.perf_counter()
    try:
        return _dispatch(args, fmt, started)
    except ConvergenceError as exc:
        if exc.best is not None:
            rec = _result_record(
                args.command, {}, exc.best, time.perf_counter() - started
            )
            rec["flagged"] = True
            rec["diagnostic"] = str(exc)
            _emit(rec, fmt)
        print(f"pentadgf: convergence failure: {exc}", file=sys.stderr)
        return 3
    except (DomainError, EvaluationError, ValueError) as exc:
        print(f"pentadgf: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, fmt: str, started: float) -> int:
    command = args.command

    if command == "eval":
        res = evaluate(args.s, method=args.method, tol=args.tol)
        inputs = {"s": _complex_json(args.s), "method": args.method, "tol": args.tol}
        rec = _result_record(command, inputs, res, time.perf_counter() - started)
        _emit(rec, fmt)
        return 3 if res.ill_conditioned else 0

    if command == "dk":
        exact = d_explicit(args.k)
        rec = {
            "command": command,
            "inputs": {"k": args.k, "exact": bool(args.exact)},
            "value": _complex_json(complex(exact.decimal)),
            "err_estimate": 1e-14 * max(1.0, abs(exact.decimal)),
            "method": "explicit",
            "elapsed_ms": (time.perf_counter() - started) * 1e3,
        }
        if args.exact:
            rec["pi_coeffs"] = [
                {"power": j, "rational": str(c.rat), "root3": str(c.root3coeff)}
                for j, c in enumerate(exact.pi_coeffs)
            ]
            rec["expression"] = str(exact)
        _emit(rec, fmt)
        return 0

    if command == "zeros":
        records = find_zeros(args.imag_max, tol=args.tol)
        elapsed = (time.perf_counter() - started) * 1e3
        rec = {
            "command": command,
            "inputs": {"imag_max": args.imag_max, "tol": args.tol},
            "count": len(records),
            "zeros": [
                {
                    "re": r.location.real,
                    "im": r.location.imag,
                    "residual": r.residual,
                    "winding_verified": r.winding_verified,
                    "converged": r.converged,
                    "in_strip": r.in_strip,
                    "method": r.method,
                }
                for r in records
            ],
            "method": "mellin",
            "elapsed_ms": elapsed,
        }
        rows = [
            {
                "input": json.dumps({"imag_max": args.imag_max}),
                "value_re": r.location.real,
                "value_im": r.location.imag,
                "err": r.residual,
                "method": r.method,
            }
            for r in records
        ]
        _emit(rec, fmt, rows=rows)
        return 0

    if command == "partial-sum":
        res = partial_sum(args.x)
        rec = {
            "command": command,
            "inputs": {"x": args.x},
            "value": {"re": float(res.value), "im": 0.0},
            "sum": res.value,
            "k_min": res.k_min,
            "z_minus": res.z_minus,
            "err_estimate": 0.0,
            "method": "residue_count",
            "elapsed_ms": (time.perf_counter() - started) * 1e3,
        }
        _emit(rec, fmt)
        return 0

    if command == "phi":
        if args.method == "series":
            res = phi_series(args.q, tol=args.tol)
        elif args.method == "hankel":
            res = phi_hankel(args.q, tol=max(args.tol, 1e-11))
        else:
            res = EvalResult(phi_product_oracle(args.q), 1e-15, "product", 0)
        inputs = {"q": _complex_json(args.q), "method": args.method}
        rec = _result_record(command, inputs, res, time.perf_counter() - started)
        _emit(rec, fmt)
        return 0

    if command == "eta":
        if args.method == "series":
            res = eta_series(args.tau, tol=args.tol)
        else:
            res = eta_hankel(args.tau, tol=max(args.tol, 1e-11))
        inputs = {"tau": _complex_json(args.tau), "method": args.method}
        rec = _result_record(command, inputs, res, time.perf_counter() - started)
        _emit(rec, fmt)
        return 0

    if command == "table":
        if args.n < 0:
            raise DomainError("--n must be nonnegative")
        if args.what == "a":
            values = [(n, coeff_a(n)) for n in range(args.n + 1)]
        elif args.what == "bernoulli":
            values = [(n, str(bernoulli(n))) for n in range(args.n + 1)]
        else:
            values = [(n, str(glaisher_gstar(n))) for n in range(args.n + 1)]
        rec = {
            "command": command,
            "inputs": {"what": args.what, "n": args.n},
            "rows": [{"n": n, "value": v} for n, v in values],
            "method": "exact",
            "elapsed_ms": (time.perf_counter() - started) * 1e3,
        }
        rows = [
            {
                "input": json.dumps({"what": args.what, "n": n}),
                "value_re": v,
                "value_im": "",
                "err": 0,
                "method": "exact",
            }
            for n, v in values
        ]
        _emit(rec, fmt, rows=rows)
        return 0

    if command == "asymptotic":
        forms = asymptotic_approx(args.s)
        rec = {
            "command": command,
            "inputs": {"s": args.s},
            "value": {"re": forms.zeta_form, "im": 0.0},
            "zeta_form": forms.zeta_form,
            "gamma_form": forms.gamma_form,
            "err_estimate": 0.0,
            "method": "asymptotic",
            "elapsed_ms": (time.perf_counter() - started) * 1e3,
        }
        _emit(rec, fmt)
        return 0

    raise DomainError(f"unknown command {command!r}")  # pragma: no cover


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
