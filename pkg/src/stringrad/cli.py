"""Command-line surface: coefficient tables, single-integral evaluation,
spectrum scans, cross-method comparison, and the stability report.

Output is columnar CSV (default) or a single JSON object with `meta` and
`rows`; floats are emitted with their shortest round-trip representation so
identical inputs produce byte-identical output.
"""
import argparse
import json
import math
import sys

from . import __version__
from .errors import (
    ConvergenceError,
    DomainError,
    NotSPDError,
    ParityError,
    UsageError,
)
from .monomial import default_k_max, monomial_integral, monomial_to_legendre
from .oracle import ORACLE_N_CAP, sphere_integral_oracle
from .spectrum import (
    DEFAULT_TOL,
    METHODS,
    SPECTRAL_METHODS,
    LoopParams,
    build_spectrum,
    choose_jmax,
    funk_hecke_terms,
    spectrum_scan,
)

CANCELLATION_WARN = 1e8

DEFAULTS = {
    "alpha": math.pi / 2.0,
    "method": "gegenbauer",
    "tol": DEFAULT_TOL,
    "format": "csv",
    "gmu2": 1.0,
    "nmin": 1,
}


class CommandSpec:
    """Parsed command with fully resolved parameters."""

    def __init__(self, command: str, params: dict):
        self.command = command
        self.params = params


class RunReport:
    """Outcome of one execution: exit code, emission target, row count."""

    def __init__(self, exit_code: int, emitted_path, row_count: int, warnings):
        self.exit_code = exit_code
        self.emitted_path = emitted_path
        self.row_count = row_count
        self.warnings = list(warnings)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="stringrad", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--format", choices=["csv", "json"], default=None)
        p.add_argument("--out", default=None, metavar="PATH")
        p.add_argument("--config", default=None, metavar="PATH")

    p = sub.add_parser("coeffs", help="Legendre coefficients C_2j of f_N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--method", choices=list(METHODS), default=None)
    p.add_argument("--jmax", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    common(p)

    p = sub.add_parser("integral", help="single I(N, alpha) evaluation")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--method", choices=list(METHODS), default=None)
    p.add_argument("--jmax", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    common(p)

    p = sub.add_parser("spectrum", help="P_N table over a harmonic range")
    p.add_argument("--nmin", type=int, default=None)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--gmu2", type=float, default=None)
    p.add_argument("--loop-length", type=float, default=None, dest="loop_length")
    p.add_argument("--method", choices=list(METHODS), default=None)
    p.add_argument("--tol", type=float, default=None)
    common(p)

    p = sub.add_parser("compare", help="per-method I values and deviations")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--tol", type=float, default=None)
    common(p)

    p = sub.add_parser("stability", help="monomial instability sweep")
    p.add_argument("--nmin", type=int, default=None)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--tol", type=float, default=None)
    common(p)

    return parser


def parse(args) -> CommandSpec:
    """Deterministic parse with config-file defaults and validation."""
    parser = _build_parser()
    ns = parser.parse_args(list(args))
    if ns.command is None:
        raise UsageError("a command is required (coeffs, integral, spectrum, compare, stability)")

    params = {k: v for k, v in vars(ns).items() if k != "command"}

    config = {}
    if params.get("config"):
        try:
            with open(params["config"], "r", encoding="utf-8") as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
        if not isinstance(config, dict):
            raise UsageError("config file must hold a JSON object")

    for key, value in list(params.items()):
        if value is None:
            if key in config:
                params[key] = config[key]
            elif key in DEFAULTS:
                params[key] = DEFAULTS[key]

    # Validation against the preconditions the values feed.
    if "N" in params and params["N"] is not None and params["N"] < 1:
        raise UsageError(f"--N must be >= 1, got {params['N']}")
    alpha = params.get("alpha")
    if alpha is not None and not 0.0 < alpha < math.pi:
        raise UsageError(f"--alpha must lie in the open interval (0, pi), got {alpha}")
    tol = params.get("tol")
    if tol is not None and tol <= 0:
        raise UsageError(f"--tol must be positive, got {tol}")
    if params.get("gmu2") is not None and params["gmu2"] <= 0:
        raise UsageError(f"--gmu2 must be positive, got {params['gmu2']}")
    if params.get("loop_length") is not None and params["loop_length"] <= 0:
        raise UsageError(f"--loop-length must be positive, got {params['loop_length']}")
    if "nmax" in params:
        nmin = params.get("nmin")
        if nmin is None:
            nmin = 1
            params["nmin"] = 1
        if not 1 <= nmin <= params["nmax"]:
            raise UsageError(f"need 1 <= nmin <= nmax, got {nmin}..{params['nmax']}")
    method = params.get("method")
    if method is not None and method not in METHODS:
        raise UsageError(f"unknown method {method!r}")
    if params.get("format") not in (None, "csv", "json"):
        raise UsageError(f"unknown format {params.get('format')!r}")
    return CommandSpec(ns.command, params)


def _fmt(value) -> str:
    if value is None:
        return "nan"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(command: str, params: dict, header, rows, warnings) -> str:
    fmt = params.get("format", "csv")
    if fmt == "json":
        meta = {
            "command": command,
            "version": __version__,
            "params": {
                k: v
                for k, v in sorted(params.items())
                if k not in ("format", "out", "config")
            },
        }
        payload = {"meta": meta, "rows": [dict(zip(header, r)) for r in rows]}
        if warnings:
            payload["meta"]["warnings"] = list(warnings)
        return json.dumps(payload) + "\n"
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in r) for r in rows)
    return "\n".join(lines) + "\n"


def _spectrum_for(params: dict, n: int):
    tol = params["tol"]
    j_max = params.get("jmax") or choose_jmax(n, tol)
    return build_spectrum(params["method"], n, j_max), j_max


def _run_coeffs(params):
    n = params["N"]
    method = params["method"]
    if method == "monomial":
        k_max = default_k_max(n)
        j_max = params.get("jmax") or min(k_max, choose_jmax(n, params["tol"]))
        spec = monomial_to_legendre(n, k_max, j_max)
    else:
        spec, _ = _spectrum_for(params, n)
    header = ["j", "c2j"]
    rows = [(j, float(c)) for j, c in enumerate(spec.C)]
    return header, rows, []


def _run_integral(params):
    n = params["N"]
    alpha = params["alpha"]
    warnings = []
    if params["method"] == "monomial":
        k_max = params.get("jmax") or default_k_max(n)
        i_value, diag = monomial_integral(n, alpha, k_max)
        j_max, tail = k_max, 0.0
        if diag.cancellation_metric > CANCELLATION_WARN:
            warnings.append(
                f"monomial cancellation_metric {diag.cancellation_metric:.3e} exceeds {CANCELLATION_WARN:.0e}"
            )
    else:
        spec, j_max = _spectrum_for(params, n)
        terms = funk_hecke_terms(spec, math.cos(alpha))
        i_value = float(terms.sum())
        tail = abs(float(terms[-1]))
    header = ["n", "alpha", "i_value", "j_max", "tail_estimate"]
    return header, [(n, float(alpha), i_value, j_max, tail)], warnings


def _run_spectrum(params):
    table = spectrum_scan(
        params["nmin"],
        params["nmax"],
        params["alpha"],
        params["gmu2"],
        params["method"],
        tol=params["tol"],
        loop_length=params.get("loop_length"),
    )
    with_omega = params.get("loop_length") is not None
    header = ["n", "i_value", "p_value"]
    if with_omega:
        header.append("omega")
    header += ["j_max", "tail_estimate", "error"]
    rows = []
    warnings = []
    for r in table.rows:
        row = [r.n, r.i_value, r.p_value]
        if with_omega:
            row.append(r.omega)
        row += [r.j_max, r.tail_estimate, 1 if r.error else 0]
        rows.append(tuple(row))
        if r.error:
            warnings.append(f"N={r.n}: {r.error}")
    return header, rows, warnings


def _run_compare(params):
    n = params["N"]
    alpha = params["alpha"]
    cos_a = math.cos(alpha)
    values = {}
    warnings = []
    for method in SPECTRAL_METHODS:
        spec, _ = _spectrum_for({**params, "method": method, "jmax": None}, n)
        values[method] = float(funk_hecke_terms(spec, cos_a).sum())
    try:
        i_mono, diag = monomial_integral(n, alpha, default_k_max(n))
        values["monomial"] = i_mono
        if diag.cancellation_metric > CANCELLATION_WARN:
            warnings.append(
                f"monomial cancellation_metric {diag.cancellation_metric:.3e} exceeds {CANCELLATION_WARN:.0e}"
            )
    except OverflowError as exc:
        values["monomial"] = math.nan
        warnings.append(f"monomial: {exc}")
    if n <= ORACLE_N_CAP:
        values["oracle"] = sphere_integral_oracle(n, alpha).value
    names = list(values)
    header = ["method", "i_value"] + [f"dev_{m}" for m in names]
    rows = []
    for a in names:
        devs = []
        for b in names:
            ref = abs(values[b])
            devs.append(float(abs(values[a] - values[b]) / ref) if ref > 0 else math.nan)
        rows.append((a, float(values[a]), *devs))
    return header, rows, warnings


def _run_stability(params):
    alpha = params["alpha"]
    cos_a = math.cos(alpha)
    header = ["n", "i_monomial", "i_spectral", "rel_error", "cancellation_metric", "error"]
    rows = []
    warnings = []
    for n in range(params["nmin"], params["nmax"] + 1):
        j_max = choose_jmax(n, params["tol"])
        spec = build_spectrum("gegenbauer", n, j_max)
        i_spec = float(funk_hecke_terms(spec, cos_a).sum())
        try:
            i_mono, diag = monomial_integral(n, alpha, default_k_max(n))
            metric = diag.cancellation_metric
            rel = abs(i_mono - i_spec) / abs(i_spec)
            rows.append((n, i_mono, i_spec, rel, metric, 0))
            if metric > CANCELLATION_WARN:
                warnings.append(
                    f"N={n}: cancellation_metric {metric:.3e} exceeds {CANCELLATION_WARN:.0e}"
                )
        except OverflowError as exc:
            rows.append((n, math.nan, i_spec, math.nan, math.nan, 1))
            warnings.append(f"N={n}: {exc}")
    return header, rows, warnings


_RUNNERS = {
    "coeffs": _run_coeffs,
    "integral": _run_integral,
    "spectrum": _run_spectrum,
    "compare": _run_compare,
    "stability": _run_stability,
}


def execute(spec: CommandSpec) -> RunReport:
    try:
        header, rows, warnings = _RUNNERS[spec.command](spec.params)
    except (OverflowError, ConvergenceError, NotSPDError, ParityError, DomainError) as exc:
        print(f"stringrad: numerical failure: {exc}", file=sys.stderr)
        return RunReport(2, None, 0, [str(exc)])
    if rows and all(len(r) > 0 and isinstance(r[-1], int) and r[-1] == 1 for r in rows) and spec.command in ("spectrum", "stability"):
        # every row failed: treat the run as a numerical failure
        text = _emit(spec.command, spec.params, header, rows, warnings)
        _write(spec.params, text)
        return RunReport(2, spec.params.get("out"), len(rows), warnings)
    text = _emit(spec.command, spec.params, header, rows, warnings)
    _write(spec.params, text)
    for w in warnings:
        print(f"stringrad: warning: {w}", file=sys.stderr)
    return RunReport(0, spec.params.get("out"), len(rows), warnings)


def _write(params, text: str):
    out = params.get("out")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = sys.argv[1:] if argv is None else list(argv)
    try:
        spec = parse(args)
    except UsageError as exc:
        print(f"stringrad: usage error: {exc}", file=sys.stderr)
        return 1
    report = execute(spec)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
