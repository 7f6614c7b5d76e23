"""Command-line front end: ``eval``, ``compare`` and ``suite``.

Exit codes: 0 pass, 2 tolerance or convergence failure, 3 domain error,
4 parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import re
import sys
from dataclasses import dataclass, field
from typing import Callable

from . import double_sums as ds
from . import integrals as ig
from . import moments as mo
from . import quadrature as qd
from .acceptance import MODULES, run_suite
from .errors import ConvergenceError, DegenerateParameterError, ZetaprodError
from .hurwitz import hurwitz_zeta, zeta1
from .series import (DEFAULT_TOL, MAX_TERMS, SeriesValue, is_nonpositive_integer, near_integer,
                     nearest_int)
from .special import riemann_zeta

EXIT_OK, EXIT_TOL, EXIT_DOMAIN, EXIT_PARSE = 0, 2, 3, 4
QUANTITIES = ("I", "J", "H", "S1", "S2", "zeta", "hurwitz", "zeta1")
DEFAULT_COMPARE_TOL = 1e-8

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_IMAG_RE = re.compile(rf"^(?P<im>[+-]?(?:{_NUM})?)[ij]$")
_COMPLEX_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})(?:(?P<im>[+-](?:{_NUM})?)[ij])?$")


class ParseError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``RE``, ``RE+IMi``, ``IMi`` (``j`` also accepted).

    >>> parse_complex("0.5+1i")
    (0.5+1j)
    >>> parse_complex("-2i")
    -2j
    """
    s = text.strip().replace(" ", "")
    m = _IMAG_RE.match(s) or _COMPLEX_RE.match(s)
    if not m:
        raise ParseError(f"cannot parse {text!r} as a complex number (expected RE+IMi)")
    re_part = float(m.groupdict().get("re") or 0.0)
    im = m.group("im")
    if im is None:
        return complex(re_part, 0.0)
    im_part = float(im + "1") if im in ("", "+", "-") else float(im)
    return complex(re_part, im_part)


def _clean(z) -> complex:
    z = complex(z)
    return complex(z.real + 0.0, z.imag + 0.0)       # folds -0.0 into 0.0


def format_complex(z: complex) -> str:
    """Shortest text that parses back to exactly ``z``."""
    z = _clean(z)
    if z.imag == 0:
        return repr(z.real)
    sign = "+" if z.imag >= 0 else ""
    return f"{z.real!r}{sign}{z.imag!r}i"


# ---------------------------------------------------------------- reports

@dataclass
class RepResult:
    representation: str
    value: complex
    err: float
    terms: int
    converged: bool = True


@dataclass
class EvaluationReport:
    quantity: str
    parameters: dict[str, complex]
    results: list[RepResult] = field(default_factory=list)
    oracle: qd.QuadratureResult | None = None
    max_pairwise_disagreement: float = 0.0
    status: str = "ok"
    notes: list[str] = field(default_factory=list)

    def rows(self) -> list[RepResult]:
        rows = list(self.results)
        if self.oracle is not None:
            rows.append(RepResult("oracle", self.oracle.value, self.oracle.abs_error_estimate,
                                  self.oracle.evaluations))
        return rows

    def disagreement(self) -> float:
        vals = [r.value for r in self.rows()]
        worst = 0.0
        for x, y in itertools.combinations(vals, 2):
            worst = max(worst, abs(x - y) / max(1.0, abs(y)))
        return worst


def _from_series(name: str, sv: SeriesValue) -> RepResult:
    return RepResult(name, sv.value, sv.abs_error_estimate, sv.terms_used, sv.converged)


def _exact(name: str, value) -> RepResult:
    return RepResult(name, complex(value), 0.0, 0)


# ---------------------------------------------------------------- routing

@dataclass(frozen=True)
class Options:
    tol: float = DEFAULT_TOL            # series truncation
    terms_max: int = MAX_TERMS
    compare_tol: float = DEFAULT_COMPARE_TOL


def _need(params: dict, *names: str) -> list:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise ParseError(f"missing parameter(s): {', '.join('--' + n for n in missing)}")
    return [params[n] for n in names]


def _int_param(z: complex, name: str) -> int:
    if z.imag != 0 or z.real != round(z.real):
        raise ParseError(f"--{name} must be an integer")
    return int(round(z.real))


def _moment_args(params: dict) -> tuple[int, complex]:
    n = _int_param(_need(params, "n")[0], "n")
    if params.get("m") is not None:
        return n, complex(_int_param(params["m"], "m"))
    return n, _need(params, "a")[0]


def _critical(params: dict):
    return params.get("t") is not None


def _route(quantity: str, params: dict, opt: Options) -> tuple[list[RepResult], bool]:
    """Preferred representation; the flag says a degenerate route was taken."""
    tol = opt.tol
    if quantity in ("I", "J"):
        if _critical(params):
            t = params["t"].real
            f = ig.I_critical_line if quantity == "I" else ig.J_critical_line
            return [_from_series(f"{quantity}_CRITICAL", f(t, tol))], False
        a, b = _need(params, "a", "b")
        p = ig.ParameterPair(a, b)
        rep = ig.RepresentationId.I_ZETA if quantity == "I" else ig.RepresentationId.J_ZETA
        try:
            return [_from_series(rep.value, ig.EVALUATORS[rep](p, tol))], False
        except DegenerateParameterError:
            pass
        if quantity == "I" and a.real > 1 and b.real > 1:
            return [_from_series("I_2F1", ig.I_via_2f1(p, tol))], True
        limit = ig.integer_limit(ig.EVALUATORS[rep], p, tol)
        return [_from_series(f"{rep.value}_LIMIT", limit)], True
    if quantity == "H":
        n, a = _moment_args(params)
        if near_integer(a) and 2 <= nearest_int(a) <= n:
            return [_exact("H_INTEGER", mo.H_integer(n, nearest_int(a)))], True
        if n >= 1:
            try:
                return [_exact("H_FINITE", mo.H_finite(n, a, tol))], False
            except DegenerateParameterError:
                pass
        return [_from_series("H_SERIES", mo.H_series(n, a, tol, opt.terms_max))], n >= 1
    if quantity == "S1":
        a, b = _need(params, "a", "b")
        if is_nonpositive_integer(a) and is_nonpositive_integer(b):
            return [_exact("S1_FINITE", ds.S1_finite(-nearest_int(a), -nearest_int(b)))], True
        return [_exact("S1_CLOSED", ds.S1_closed(a, b))], False
    if quantity == "S2":
        a, b = _need(params, "a", "b")
        if near_integer(a + b):
            return [_exact("S2_INTEGER_SUM", ds.S2_integer_sum(a, nearest_int(a + b)))], True
        return [_exact("S2_CLOSED", ds.S2_closed(a, b))], False
    return [_special(quantity, params)], False


def _special(quantity: str, params: dict) -> RepResult:
    if quantity == "zeta":
        (s,) = _need(params, "a")
        return _exact("RIEMANN_ZETA", riemann_zeta(s))
    a, x = _need(params, "a", "x")
    if x.imag != 0:
        raise ParseError("--x must be real")
    if quantity == "hurwitz":
        return _exact("HURWITZ_ZETA", hurwitz_zeta(a, x.real))
    return _exact("ZETA1", zeta1(a, x.real))


def _attempt(out: list, notes: list, name: str, fn: Callable[[], RepResult]) -> None:
    try:
        out.append(fn())
    except ZetaprodError as exc:
        notes.append(f"{name} not applicable: {exc}")


def _compare_reps(quantity: str, params: dict, opt: Options
                  ) -> tuple[list[RepResult], qd.QuadratureResult | None, list[str], bool]:
    tol, out, notes, routed = opt.tol, [], [], False
    oracle = None
    if quantity in ("I", "J"):
        if _critical(params):
            t = params["t"].real
            s = complex(0.5, t)
            f = ig.I_critical_line if quantity == "I" else ig.J_critical_line
            out.append(_from_series(f"{quantity}_CRITICAL", f(t, tol)))
            oracle = (qd.oracle_I if quantity == "I" else qd.oracle_J)(s, s.conjugate())
            return out, oracle, notes, False
        a, b = _need(params, "a", "b")
        p = ig.ParameterPair(a, b)
        reps = ([ig.RepresentationId.I_2F1, ig.RepresentationId.I_ZETA] if quantity == "I" else
                [ig.RepresentationId.J_2F1, ig.RepresentationId.J_ZETA, ig.RepresentationId.J_ALT])
        for rep in reps:
            fn = ig.EVALUATORS[rep]
            _attempt(out, notes, rep.value,
                     lambda fn=fn, rep=rep: _from_series(rep.value, fn(p, tol)))
        if not out:
            rep = reps[-1]
            limit = ig.integer_limit(ig.EVALUATORS[rep], p, tol)
            out.append(_from_series(f"{rep.value}_LIMIT", limit))
            routed = True
        oracle = (qd.oracle_I if quantity == "I" else qd.oracle_J)(a, b)
    elif quantity == "H":
        n, a = _moment_args(params)
        if near_integer(a) and 2 <= nearest_int(a) <= n:
            _attempt(out, notes, "H_INTEGER",
                     lambda: _exact("H_INTEGER", mo.H_integer(n, nearest_int(a))))
        if is_nonpositive_integer(a) and n >= 1:
            m = -nearest_int(a)
            _attempt(out, notes, "H_NEGATIVE_INTEGER",
                     lambda: _exact("H_NEGATIVE_INTEGER", mo.H_negative_integer(n, m)))
        _attempt(out, notes, "H_FINITE", lambda: _exact("H_FINITE", mo.H_finite(n, a, tol)))
        out.append(_from_series("H_SERIES", mo.H_series(n, a, tol, opt.terms_max)))
        oracle = qd.oracle_moment(n, a)
    elif quantity in ("S1", "S2"):
        a, b = _need(params, "a", "b")
        box = min(opt.terms_max, ds.DEFAULT_BOX)
        if quantity == "S1":
            _attempt(out, notes, "S1_CLOSED", lambda: _exact("S1_CLOSED", ds.S1_closed(a, b)))
            if is_nonpositive_integer(a) and is_nonpositive_integer(b):
                out.append(_exact("S1_FINITE", ds.S1_finite(-nearest_int(a), -nearest_int(b))))
                routed = True
            out.append(_from_series("S1_DIRECT", ds.S1_direct(a, b, box, box)))
            oracle_fn = qd.oracle_Jstar
        else:
            if near_integer(a + b):
                out.append(_exact("S2_INTEGER_SUM", ds.S2_integer_sum(a, nearest_int(a + b))))
                routed = True
            else:
                out.append(_exact("S2_CLOSED", ds.S2_closed(a, b)))
            out.append(_from_series("S2_DIRECT", ds.S2_direct(a, b, box, box)))
            oracle_fn = qd.oracle_Istar
        try:
            oracle = oracle_fn(a, b)
        except ZetaprodError as exc:
            notes.append(f"oracle not applicable: {exc}")
    else:
        out.append(_special(quantity, params))
        if quantity == "zeta":
            out.append(_exact("HURWITZ_AT_1", hurwitz_zeta(params["a"], 1.0)))
        elif quantity == "hurwitz":
            a, x = params["a"], params["x"].real
            out.append(_exact("SHIFTED", hurwitz_zeta(a, x + 1.0) + x ** (-a)))
        else:
            a, x = params["a"], params["x"].real
            out.append(_exact("HURWITZ_SHIFTED", hurwitz_zeta(a, x + 1.0)))
    return out, oracle, notes, routed


def cmd_eval(quantity: str, params: dict, opt: Options) -> EvaluationReport:
    results, routed = _route(quantity, params, opt)
    rep = EvaluationReport(quantity, params, results)
    rep.status = "degenerate_routed" if routed else "ok"
    if not all(r.converged for r in results):
        rep.status = "failed"
        rep.notes.append("series did not converge")
    return rep


def cmd_compare(quantity: str, params: dict, opt: Options) -> EvaluationReport:
    results, oracle, notes, routed = _compare_reps(quantity, params, opt)
    rep = EvaluationReport(quantity, params, results, oracle, notes=notes)
    rep.max_pairwise_disagreement = rep.disagreement()
    if rep.max_pairwise_disagreement > opt.compare_tol or not all(r.converged for r in results):
        rep.status = "failed"
    else:
        rep.status = "degenerate_routed" if routed else "ok"
    return rep


# ---------------------------------------------------------------- rendering

def _param_text(params: dict) -> str:
    return " ".join(f"{k}={format_complex(v)}" for k, v in params.items() if v is not None)


def _render_text(rep: EvaluationReport, with_disagreement: bool) -> str:
    lines = [f"quantity: {rep.quantity}", f"params: {_param_text(rep.parameters)}",
             f"status: {rep.status}"]
    for r in rep.rows():
        z = _clean(r.value)
        lines.append(f"representation={r.representation} value_re={z.real:.17g} "
                     f"value_im={z.imag:.17g} err={r.err:.3g} terms={r.terms}")
    if with_disagreement:
        lines.append(f"max_pairwise_disagreement: {rep.max_pairwise_disagreement:.3g}")
    lines += [f"note: {n}" for n in rep.notes]
    return "\n".join(lines) + "\n"


_CSV_FIELDS = ["quantity", "params", "representation", "value_re", "value_im", "err", "terms",
               "status"]


def _render_csv(rep: EvaluationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_CSV_FIELDS)
    for r in rep.rows():
        z = _clean(r.value)
        w.writerow([rep.quantity, _param_text(rep.parameters), r.representation,
                    f"{z.real:.17g}", f"{z.imag:.17g}", f"{r.err:.3g}", r.terms, rep.status])
    return buf.getvalue()


def _render_json(rep: EvaluationReport) -> str:
    doc = {
        "quantity": rep.quantity,
        "params": {k: format_complex(v) for k, v in rep.parameters.items() if v is not None},
        "status": rep.status,
        "results": [{"representation": r.representation, "value_re": complex(r.value).real,
                     "value_im": complex(r.value).imag, "err": r.err, "terms": r.terms,
                     "converged": r.converged} for r in rep.rows()],
        "max_pairwise_disagreement": rep.max_pairwise_disagreement,
        "notes": rep.notes,
    }
    return json.dumps(doc, indent=2, allow_nan=True) + "\n"


def render(rep: EvaluationReport, fmt: str, with_disagreement: bool = True) -> str:
    if fmt == "csv":
        return _render_csv(rep)
    if fmt == "json":
        return _render_json(rep)
    return _render_text(rep, with_disagreement)


def render_suite(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.as_dict(), indent=2, allow_nan=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["criterion", "name", "module", "passed", "max_error", "threshold", "detail"])
        for r in report.results:
            w.writerow([r.number, r.name, r.module, r.passed, f"{r.max_error:.3e}",
                        f"{r.threshold:.1e}", r.detail])
        return buf.getvalue()
    lines = [r.line() for r in report.results]
    if report.tol_override is not None:
        lines.append(f"thresholds loosened to at least {report.tol_override:g}")
    passed = sum(r.passed for r in report.results)
    lines.append(f"{passed}/{len(report.results)} criteria passed")
    if report.failed:
        lines.append("failed criteria: " + ",".join(str(n) for n in report.failed))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- entry point

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zetaprod", description="Integrals and sums of Hurwitz zeta products.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--out", default=None, help="report path (default: stdout)")

    for name in ("eval", "compare"):
        p = sub.add_parser(name)
        p.add_argument("quantity", choices=QUANTITIES)
        for flag in ("a", "b", "n", "m", "t", "x"):
            p.add_argument(f"--{flag}", type=_complex_arg, default=None)
        p.add_argument("--terms-max", type=int, default=MAX_TERMS)
        common(p)
    p = sub.add_parser("suite")
    p.add_argument("--only", choices=MODULES, default=None)
    common(p)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.command == "suite":
        report = run_suite(only=args.only, tol=args.tol)
        _emit(render_suite(report, args.format), args.out)
        return EXIT_OK if report.all_passed else EXIT_TOL

    params = {k: getattr(args, k) for k in ("a", "b", "n", "m", "t", "x")}
    params = {k: v for k, v in params.items() if v is not None}
    if args.terms_max < 1:
        print("zetaprod: error: --terms-max must be positive", file=sys.stderr)
        return EXIT_PARSE
    compare = args.command == "compare"
    if compare:
        opt = Options(DEFAULT_TOL, args.terms_max,
                      args.tol if args.tol is not None else DEFAULT_COMPARE_TOL)
    else:
        opt = Options(args.tol if args.tol is not None else DEFAULT_TOL, args.terms_max)
    try:
        rep = (cmd_compare if compare else cmd_eval)(args.quantity, params, opt)
    except ParseError as exc:
        print(f"zetaprod: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConvergenceError as exc:
        print(f"zetaprod: convergence failure: {exc}", file=sys.stderr)
        return EXIT_TOL
    except ZetaprodError as exc:
        print(f"zetaprod: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(render(rep, args.format, with_disagreement=compare), args.out)
    return EXIT_TOL if rep.status == "failed" else EXIT_OK
