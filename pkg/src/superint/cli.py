"""Command-line entry point: ``superint <subcommand> [options]``.

Exit codes: 0 success, 1 usage or input error, 2 a verification that ran and failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .diffop import DifferentialOperator, classify_pair, verify_pha
from .exactmath import X, ExpressionError, as_fraction, fraction_to_str, parse_rational_function
from .potentials import (
    ExtensionSpec,
    NotAP4Solution,
    Potential1D,
    Q18Params,
    SingularExtensionError,
    deleting_equivalent,
    extend_oscillator,
    extension_ladders,
    is_regular,
    painleve_residual,
    q18_potential,
)
from .repalg import (
    SpectrumReport,
    algebraic_spectrum,
    compare_reports,
    degeneracy_bruteforce,
    enumerate_unirreps,
    formula_report,
    kstep_to_q18,
    ladder_spectrum,
    multiplet_table,
    q18_families,
    q_ko,
    restrict,
)
from .spectral import GridConfig, eigenvalues

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    """Bad option value; the message names the option."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- option parsing helpers ---------------------------------------------------

def _ms(text: str, option: str = "--ms") -> ExtensionSpec:
    try:
        ms = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
        spec = ExtensionSpec(ms)
    except ValueError as exc:
        raise UsageError(f"{option}: {exc}") from None
    if not is_regular(spec):
        raise UsageError(f"{option}: singular extension {list(spec.ms)} (parity rule violated)")
    return spec


def _frac(text: str, option: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{option}: not an exact rational: {text!r}") from None


def _sample_grid(text: str) -> np.ndarray:
    try:
        a, b, n = text.split(":")
        xs = np.linspace(float(a), float(b), int(n))
    except ValueError:
        raise UsageError(f"--sample: expected START:STOP:COUNT, got {text!r}") from None
    if len(xs) < 1:
        raise UsageError("--sample: COUNT must be positive")
    return xs


def _load_json(ref: str, option: str):
    """Read ``path`` or ``path#key`` (key selects one entry of a JSON object)."""
    path, _, key = ref.partition("#")
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{option}: cannot read {path}: {exc}") from None
    if key:
        if not isinstance(data, dict) or key not in data:
            raise UsageError(f"{option}: no entry {key!r} in {path}")
        data = data[key]
    return data


def _load_potential(ref: str, option: str = "--potential") -> Potential1D:
    data = _load_json(ref, option)
    if isinstance(data, dict) and data.get("type") != "Potential1D" and "x_part" in data:
        data = data["x_part"]
    try:
        return Potential1D.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{option}: not a potential: {exc}") from None


def _load_operator(ref: str, option: str) -> DifferentialOperator:
    data = _load_json(ref, option)
    if isinstance(data, dict) and data.get("type") == "Potential1D":
        return Potential1D.from_json(data).hamiltonian()
    try:
        return DifferentialOperator.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{option}: not an operator: {exc}") from None


def _load_report(ref: str, option: str) -> SpectrumReport:
    data = _load_json(ref, option)
    try:
        return SpectrumReport.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{option}: not a spectrum report: {exc}") from None


# -- output -------------------------------------------------------------------

def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(args, payload: str) -> None:
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _rows_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _potential_samples(pot, xs: np.ndarray) -> str:
    with np.errstate(divide="ignore", invalid="ignore"):
        vs = np.asarray(pot(xs), dtype=float)
    return _rows_csv(["x", "V"], [(repr(float(x)), repr(float(v))) for x, v in zip(xs, vs)])


# -- subcommands --------------------------------------------------------------

def cmd_extend(args) -> int:
    pot = extend_oscillator(_ms(args.ms))
    if args.sample or args.format == "csv":
        _emit(args, _potential_samples(pot, _sample_grid(args.sample or "-6:6:241")))
    else:
        _emit(args, _dumps(pot.to_json()))
    return EXIT_OK


def cmd_equivalence(args) -> int:
    spec = _ms(args.ms)
    try:
        bar = deleting_equivalent(spec)
    except ValueError as exc:
        raise UsageError(f"--ms: {exc}") from None
    diff = bar.minus(extend_oscillator(spec))
    expected = 2 * spec.mk + 2
    ok = diff.is_constant() and diff.constant_value() == expected
    out = {
        "ms": list(spec.ms),
        "deleted_indices": spec.deleted_indices(),
        "adding": extend_oscillator(spec).format(),
        "deleting": bar.format(),
        "difference": diff.format(),
        "expected_shift": expected,
        "ok": ok,
    }
    _emit(args, _dumps(out))
    return EXIT_OK if ok else EXIT_FAILED


def _spectrum_target(args):
    chosen = [v for v in (args.ms, args.potential, args.q18) if v]
    if len(chosen) != 1:
        raise UsageError("spectrum: give exactly one of --ms, --potential, --q18")
    if args.ms:
        return extend_oscillator(_ms(args.ms))
    if args.potential:
        return _load_potential(args.potential)
    x_part, y_part = q18_potential(Q18Params(_frac(args.hbar, "--hbar"), _frac(args.omega, "--omega")))
    return x_part if args.q18 == "x" else y_part


def cmd_spectrum(args) -> int:
    pot = _spectrum_target(args)
    try:
        cfg = GridConfig.from_env(half_width=args.half_width, **({"n": args.points} if args.points else {}))
    except ValueError as exc:
        raise UsageError(f"--points: {exc}") from None
    if args.count < 1:
        raise UsageError("--count: must be >= 1")
    spec = eigenvalues(pot, cfg, args.count)
    if args.format == "csv":
        _emit(args, spec.to_csv())
    else:
        _emit(args, _dumps({"potential": getattr(pot, "label", ""), **spec.to_json()}))
    return EXIT_OK


def cmd_unirreps(args) -> int:
    fams = q18_families()
    names = sorted(fams) if args.family == "all" else [args.family]
    rows = [r for n in names for r in enumerate_unirreps(fams[n], args.p_max, args.positivity)]
    if args.format == "csv":
        _emit(args, _rows_csv(
            ["family", "p", "energy", "dimension", "positive", "quoted", "admissible", "min_phi"],
            [(r.family, r.p, fraction_to_str(r.energy), r.dimension, int(r.positive), int(r.quoted),
              int(r.admissible), "" if r.min_phi is None else fraction_to_str(r.min_phi)) for r in rows]))
    else:
        _emit(args, _dumps({"families": {n: fams[n].format() for n in names},
                            "rows": [r.to_json() for r in rows]}))
    return EXIT_OK


def _named_report(name: str, nmax: int, reading: str) -> SpectrumReport:
    if name == "deg1":
        return algebraic_spectrum(nmax, reading)
    if name == "deg2":
        return ladder_spectrum(2, nmax)
    if name == "kstep":
        return restrict(kstep_to_q18(degeneracy_bruteforce((2,), N_max=nmax)), range(nmax + 1))
    raise KeyError(name)


def cmd_degeneracy(args) -> int:
    if args.route in ("bruteforce", "formula"):
        spec = _ms(args.ms or "2")
        lo = args.nmin if args.nmin is not None else -spec.mk
        try:
            if args.route == "bruteforce":
                report = degeneracy_bruteforce(spec, lo, args.nmax)
            else:
                report = formula_report(spec, lo, args.nmax)
        except ValueError as exc:
            raise UsageError(f"--nmin: {exc}") from None
        if args.shift is not None:
            report = kstep_to_q18(report, args.shift)
    elif args.route == "algebraic":
        report = algebraic_spectrum(args.nmax, args.reading)
    else:
        report = ladder_spectrum(args.mk, args.nmax)
    _emit(args, report.to_csv() if args.format == "csv" else _dumps(report.to_json()))
    return EXIT_OK


def cmd_multiplets(args) -> int:
    try:
        table = multiplet_table(args.m1, args.nmin, args.nmax)
    except ValueError as exc:
        raise UsageError(f"--m1: {exc}") from None
    if args.format == "csv":
        rows = []
        for r in table:
            content = " + ".join(f"{m.copies}x(s={m.s})" for m in r.multiplets)
            rows.append((r.N, r.lam, r.mu, r.count, r.degeneracy, content))
        _emit(args, _rows_csv(["N", "lambda", "mu", "multiplets", "degeneracy", "content"], rows))
    else:
        _emit(args, _dumps({"m1": args.m1, "rows": [r.to_json() for r in table]}))
    return EXIT_OK


_PARAM_NAMES = {1: (), 2: ("alpha",), 3: ("alpha", "beta", "gamma", "delta"), 4: ("alpha", "beta"),
                5: ("alpha", "beta", "gamma", "delta"), 6: ("alpha", "beta", "gamma", "delta")}


def cmd_painleve(args) -> int:
    try:
        f = parse_rational_function(args.rational, variable="z")
    except ExpressionError as exc:
        raise UsageError(f"--rational: {exc}") from None
    if args.params is not None:
        params = [_frac(t, "--params") for t in args.params.split(",") if t.strip()]
    else:
        params = []
        for name in _PARAM_NAMES[args.eq]:
            value = getattr(args, name)
            if value is None:
                raise UsageError(f"--{name}: required for P{args.eq}")
            params.append(_frac(value, f"--{name}"))
    try:
        res = painleve_residual(args.eq, f, params)
    except ValueError as exc:
        raise UsageError(f"--rational: {exc}") from None
    zero = res.is_zero()
    line = "residual: 0 (exact)" if zero else f"residual: {res.format('z')}"
    print(line)
    if args.out:
        Path(args.out).write_text(_dumps({
            "equation": args.eq, "params": [fraction_to_str(p) for p in params],
            "solution": f.format("z"), "residual": res.to_json(), "zero": zero}), encoding="utf-8")
    return EXIT_OK if zero else EXIT_FAILED


def cmd_pha_check(args) -> int:
    spec = _ms(args.ms)
    try:
        H, c, c_dag = extension_ladders(spec)
    except ValueError as exc:
        raise UsageError(f"--ms: {exc}") from None
    if args.perturb:
        c = c + DifferentialOperator({0: X * _frac(args.perturb, "--perturb")})
    report = verify_pha(H, c, c_dag, spec.mk)
    out = {"ms": list(spec.ms), "order": c.order(), "q_ko": q_ko(spec).to_json(), **report.to_json()}
    _emit(args, _dumps(out))
    if args.operators:
        Path(args.operators).write_text(_dumps({"H": H.to_json(), "c": c.to_json(),
                                                "c_dag": c_dag.to_json()}), encoding="utf-8")
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_classify(args) -> int:
    H = _load_operator(args.H, "--H")
    K = _load_operator(args.K, "--K")
    try:
        kind = classify_pair(H, K)
    except ValueError as exc:
        raise UsageError(f"--H: {exc}") from None
    out = {"kind": kind.kind.value, "alpha1": None if kind.alpha1 is None else fraction_to_str(kind.alpha1)}
    _emit(args, _dumps(out))
    return EXIT_OK


def cmd_q18(args) -> int:
    hbar, omega = _frac(args.hbar, "--hbar"), _frac(args.omega, "--omega")
    if hbar <= 0 or omega <= 0:
        raise UsageError("--hbar/--omega: must be positive")
    kw = {}
    if args.rational:
        try:
            kw["p4_solution"] = parse_rational_function(args.rational, variable="z")
        except ExpressionError as exc:
            raise UsageError(f"--rational: {exc}") from None
    for name in ("alpha", "beta", "epsilon", "offset"):
        value = getattr(args, name)
        if value is not None:
            kw[name] = _frac(value, f"--{name}")
    try:
        x_part, y_part = q18_potential(Q18Params(hbar, omega, **kw))
    except NotAP4Solution as exc:
        raise UsageError(f"--rational: {exc}") from None
    if args.sample or args.format == "csv":
        _emit(args, _potential_samples(x_part, _sample_grid(args.sample or "-6:6:241")))
    else:
        _emit(args, _dumps({"x_part": x_part.to_json(), "y_part": y_part.to_json()}))
    return EXIT_OK


def cmd_compare(args) -> int:
    def side(ref: str, option: str) -> SpectrumReport:
        try:
            return _named_report(ref, args.nmax, args.reading)
        except KeyError:
            return _load_report(ref, option)

    left, right = side(args.left, "--left"), side(args.right, "--right")
    try:
        diff = compare_reports(left, right)
    except ValueError as exc:
        raise UsageError(f"--right: {exc}") from None
    _emit(args, diff.to_csv() if args.format == "csv" else _dumps(diff.to_json()))
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superint", description="Exact constructions and checks for superintegrable models.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func, default_format: str = "json", help: str = ""):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--format", choices=("json", "csv"), default=default_format)
        sp.set_defaults(func=func)
        return sp

    sp = add("extend", cmd_extend, help="k-step rational extension of the oscillator")
    sp.add_argument("--ms", required=True, help="comma-separated m_1 < ... < m_k")
    sp.add_argument("--sample", help="emit CSV samples on START:STOP:COUNT")

    sp = add("equivalence", cmd_equivalence, help="state-deleting vs state-adding shift identity")
    sp.add_argument("--ms", required=True)

    sp = add("spectrum", cmd_spectrum, help="finite-difference bound-state energies")
    sp.add_argument("--ms")
    sp.add_argument("--potential", help="potential JSON file (path or path#key)")
    sp.add_argument("--q18", choices=("x", "y"), help="part of the rational Q18 instance")
    sp.add_argument("--hbar", default="1")
    sp.add_argument("--omega", default="1")
    sp.add_argument("--count", type=int, default=5)
    sp.add_argument("--half-width", type=float, default=12.0)
    sp.add_argument("--points", type=int)

    sp = add("unirreps", cmd_unirreps, "csv", help="finite unitary representations of the Q18 families")
    sp.add_argument("--family", choices=("a", "b", "c", "all"), default="all")
    sp.add_argument("--p-max", type=int, default=10)
    sp.add_argument("--positivity", choices=("strict", "report_only"), default="strict")

    sp = add("degeneracy", cmd_degeneracy, "csv", help="level degeneracies by route")
    sp.add_argument("--route", choices=("algebraic", "ladder", "bruteforce", "formula"), default="bruteforce")
    sp.add_argument("--ms")
    sp.add_argument("--mk", type=int, default=2)
    sp.add_argument("--nmin", type=int)
    sp.add_argument("--nmax", type=int, default=20)
    sp.add_argument("--reading", choices=("quoted", "dimension"), default="quoted")
    sp.add_argument("--shift", type=int, help="relabel k-step levels onto the Q18 ladder")

    sp = add("multiplets", cmd_multiplets, "csv", help="one-step multiplet decomposition")
    sp.add_argument("--m1", type=int, default=2)
    sp.add_argument("--nmin", type=int)
    sp.add_argument("--nmax", type=int, default=20)

    sp = add("painleve-check", cmd_painleve, help="exact residual of a rational Painleve solution")
    sp.add_argument("--eq", type=int, choices=range(1, 7), required=True)
    sp.add_argument("--rational", required=True, help="expression in z, e.g. '1/z'")
    for name in ("alpha", "beta", "gamma", "delta"):
        sp.add_argument(f"--{name}")
    sp.add_argument("--params", help="comma-separated parameters (overrides --alpha...)")

    sp = add("pha-check", cmd_pha_check, help="polynomial Heisenberg algebra of an extension")
    sp.add_argument("--ms", required=True)
    sp.add_argument("--perturb", help="add this multiple of x to c (negative control)")
    sp.add_argument("--operators", help="also write H, c, c_dag as JSON here")

    sp = add("classify", cmd_classify, help="type of the pair (H, K)")
    sp.add_argument("--H", required=True, help="operator or potential JSON (path or path#key)")
    sp.add_argument("--K", required=True, help="operator JSON (path or path#key)")

    sp = add("q18", cmd_q18, help="Q18 potential for a rational P4 solution")
    sp.add_argument("--hbar", default="1")
    sp.add_argument("--omega", default="1")
    sp.add_argument("--rational", help="P4 solution in z (default: the built-in rational instance)")
    for name in ("alpha", "beta", "epsilon", "offset"):
        sp.add_argument(f"--{name}")
    sp.add_argument("--sample", help="emit CSV samples of the x-part on START:STOP:COUNT")

    sp = add("compare", cmd_compare, "csv", help="level-by-level degeneracy differences")
    sp.add_argument("--left", required=True, help="deg1, deg2, kstep, or a report JSON file")
    sp.add_argument("--right", required=True)
    sp.add_argument("--nmax", type=int, default=20)
    sp.add_argument("--reading", choices=("quoted", "dimension"), default="quoted")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"superint {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SingularExtensionError as exc:
        print(f"superint {args.command}: error: --ms: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"superint {args.command}: error: --out: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
