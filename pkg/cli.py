# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: Command-line front end: Plücker degrees f^λ by four methods, degree tables, the identities built on them,
#          the σ_i ∩ Ω^λ / Giambelli / Schubert derivation sweeps and Schur-basis expansion of polynomials
# Commandline arguments:
#   --format: Output format as string, one of plain, json, csv (default plain)
#   --verbose: Show progress on stderr and every detail line of passing checks
#   --workers: Number of worker processes for sweeps as int (default PLUCKER_WORKERS or 1)
#   --syt-cutoff: Largest weight for the standard Young tableau brute force as int (default PLUCKER_SYT_CUTOFF or 12)
#   --formula-cutoff: Largest weight for the formula methods as int (default PLUCKER_FORMULA_CUTOFF or 20)
#   --output: A path to write the output to instead of stdout as string
# Subcommands:
#   degree <λ> [--method hook|det|deriv|cap|all]
#   table <d>
#   identity square <n> | identity powersum <r> <d> | identity integrals <μ> | identity lasf <μ>
#   verify theorem13 <r> <n> | verify giambelli <r> <n> | verify fock <r> <n> <cut> | verify all
#   expand <polynomial>
# Exit status: 0 every check passed, 1 some check failed, 2 bad arguments, 3 refused (cutoff or precondition)

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial

import pandas as pd
from tqdm import tqdm

import config
from fock import boson_fermion_check, schubert_derivation_check
from grasshom import degree_cap, giambelli_check, theorem13_check
from partitions import (
    Partition,
    degree_hook,
    format_partition,
    hook_product,
    parse_partition,
    partitions_in_rectangle,
    partitions_of,
    syt_count_bruteforce,
)
from report import CheckReport, InvariantViolation, format_rational
from ringb import (
    degree_derivative,
    expand_in_schur,
    integral_generating_coefficient,
    integral_h_mu,
    lasf_check,
    multinomial_closed_form,
    parse_polynomial,
    square_identity_check,
)
from schurdet import degree_determinant, exp_series, required_order, schur_determinant
from symz import comp_identity_check, exponential_series_check, power_expansion_check

METHODS = ("hook", "det", "deriv", "cap")
EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3

THEOREM13_AMBIENTS = ((2, 5), (2, 6), (3, 6), (3, 7))
GIAMBELLI_AMBIENTS = ((2, 4), (2, 5), (3, 6))
BOSON_FERMION_CASES = ((1, 5, 4), (2, 4, 4), (2, 5, 4), (3, 6, 3))


@dataclass
class RunConfig:
    command: str
    action: str = None
    partition: tuple = None
    r: int = None
    n: int = None
    d: int = None
    cut: int = None
    polynomial: str = None
    method: str = "all"
    output_format: str = "plain"
    verbose: bool = False
    workers: int = 1
    syt_cutoff: int = 12
    formula_cutoff: int = 20
    output: str = None


@dataclass
class Result:
    head: list = field(default_factory=list)
    reports: list = field(default_factory=list)
    tail: list = field(default_factory=list)
    payload: dict = field(default_factory=dict)
    rows: list = None

    @property
    def passed(self):
        return all(report.passed for report in self.reports)


def _progress(run_config, message):
    if run_config.verbose:
        print(message, file=sys.stderr)


def _sweep(run_config, task, items, desc):
    """task over items in input order, optionally fanned out to worker processes."""
    items = list(items)
    bar = dict(total=len(items), desc=desc, disable=not run_config.verbose, file=sys.stderr)
    if run_config.workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=run_config.workers) as executor:
            return list(tqdm(executor.map(task, items), **bar))
    return list(tqdm(map(task, items), **bar))


def _check_weight(weight, cutoff, what):
    if weight > cutoff:
        raise ValueError("{} has weight {} above the formula cutoff {}".format(what, weight, cutoff))


def degree_values(partition, methods=METHODS):
    partition = Partition(partition)
    values = {}
    for method in methods:
        if method == "hook":
            values[method] = degree_hook(partition)
        elif method == "det":
            values[method] = degree_determinant(partition)
        elif method == "deriv":
            values[method] = degree_derivative(partition)
        elif method == "cap":
            r = max(1, len(partition))
            values[method] = degree_cap(partition, r, r + partition.first)
        else:
            raise ValueError("unknown degree method {!r}".format(method))
    return values


def _run_degree(run_config):
    partition = run_config.partition
    _check_weight(partition.weight, run_config.formula_cutoff, format_partition(partition))
    methods = METHODS if run_config.method == "all" else (run_config.method,)
    values = degree_values(partition, methods)
    if run_config.method == "all":
        if partition.weight <= run_config.syt_cutoff:
            values["syt"] = syt_count_bruteforce(partition, run_config.syt_cutoff)
    report = CheckReport("degree {}".format(format_partition(partition)))
    for method, value in values.items():
        report.note("{}: {}".format(method, value))
    distinct = sorted(set(values.values()))
    if len(distinct) > 1:
        report.fail("methods disagree: {}".format(", ".join("{}={}".format(m, v) for m, v in values.items())),
                    values=dict(values))
    result = Result(reports=[report])
    result.head.append("f^λ for λ = {}".format(format_partition(partition)))
    result.head.extend("  {}: {}".format(method, value) for method, value in values.items())
    if partition.weight > run_config.syt_cutoff and run_config.method == "all":
        result.head.append("  syt: skipped, |λ| = {} exceeds the cutoff {}".format(
            partition.weight, run_config.syt_cutoff))
    result.payload = {"partition": format_partition(partition), "weight": partition.weight, "values": values}
    row = {"partition": format_partition(partition), "weight": partition.weight}
    row.update({"f_{}".format(m): values.get(m) for m in METHODS})
    row["agree"] = report.passed
    result.rows = [row]
    return result


def _table_row(partition):
    values = degree_values(partition)
    delta = schur_determinant(exp_series(required_order(partition)), partition)
    return {
        "partition": format_partition(partition),
        "weight": partition.weight,
        "f_hook": values["hook"],
        "f_det": values["det"],
        "f_deriv": values["deriv"],
        "f_cap": values["cap"],
        "agree": len(set(values.values())) == 1,
        "hook_product": hook_product(partition),
        "delta": format_rational(delta),
    }


def _run_table(run_config):
    d = run_config.d
    if d < 0:
        raise ValueError("weight must be non-negative, got {}".format(d))
    _check_weight(d, run_config.formula_cutoff, "table")
    _progress(run_config, "computing degrees of all partitions of {}.....".format(d))
    rows = _sweep(run_config, _table_row, partitions_of(d), "table {}".format(d))
    report = CheckReport("table {}".format(d))
    for row in rows:
        report.expect(row["agree"], "{}: f = {}, Π h = {}, Δ(exp t) = {}".format(
            row["partition"], row["f_hook"], row["hook_product"], row["delta"]), partition=row["partition"])
    total = sum(row["f_hook"] ** 2 for row in rows)
    report.expect(total == factorial(d), "Σ f² = {} = {}!".format(total, d), expected=factorial(d), actual=total)
    result = Result(reports=[report])
    result.head.extend("{:>12}  f={}  Πh={}  Δ={}".format(row["partition"], row["f_hook"], row["hook_product"],
                                                         row["delta"]) for row in rows)
    result.payload = {"weight": d, "rows": rows}
    result.rows = [{k: row[k] for k in ("partition", "weight", "f_hook", "f_det", "f_deriv", "f_cap", "agree")}
                   for row in rows]
    return result


def _run_identity(run_config):
    action = run_config.action
    result = Result()
    if action == "square":
        _check_weight(run_config.d, run_config.formula_cutoff, "square identity")
        report = square_identity_check(run_config.d)
        result.reports.append(report)
        result.tail.append("{} {}".format(report.lines[-1], report.verdict))
    elif action == "powersum":
        r, d = run_config.r, run_config.d
        if r < 1:
            raise ValueError("need at least one variable, got r={}".format(r))
        _check_weight(d, run_config.formula_cutoff, "powersum identity")
        result.reports.extend([power_expansion_check(d, r), comp_identity_check(r, d), exponential_series_check(d, r)])
        result.tail.append("{}^{} = Σ s_λ(1^{}) f^λ".format(r, d, r))
    elif action == "integrals":
        mu = run_config.partition
        _check_weight(mu.weight, run_config.formula_cutoff, format_partition(mu))
        report = CheckReport("integrals {}".format(format_partition(mu)))
        value = integral_h_mu(mu, run_config.formula_cutoff)
        closed = multinomial_closed_form(mu)
        generated = integral_generating_coefficient(mu)
        report.expect(value == closed, "∂^{}h_{} = {}, closed form {}".format(
            mu.weight, format_partition(mu), format_rational(value), format_rational(closed)))
        report.expect(generated == closed, "F(u,t) coefficient = {}".format(format_rational(generated)),
                      expected=closed, actual=generated)
        result.reports.append(report)
        result.payload = {"partition": format_partition(mu), "integral": format_rational(value)}
        result.tail.append("∫ h_{} = {}".format(format_partition(mu), format_rational(value)))
    elif action == "lasf":
        mu = run_config.partition
        _check_weight(mu.weight, run_config.formula_cutoff, format_partition(mu))
        result.reports.append(lasf_check(mu))
    else:
        raise ValueError("unknown identity {!r}".format(action))
    return result


def _theorem13_task(args):
    return theorem13_check(*args)


def _giambelli_task(args):
    return giambelli_check(*args)


def _sweep_report(name, reports):
    merged = CheckReport(name)
    for report in reports:
        merged.merge(report)
    merged.note("{} cases".format(len(reports)))
    return merged


def _rectangle(r, n):
    if r < 1 or n < r:
        raise ValueError("G(r,n) needs 1 <= r <= n, got r={} n={}".format(r, n))
    return partitions_in_rectangle(r, n - r)


def verify_theorem13(run_config, r, n):
    shapes = _rectangle(r, n)
    _check_weight(r * (n - r), run_config.formula_cutoff, "G({},{})".format(r, n))
    _progress(run_config, "verifying theorem13 on G({},{}).....".format(r, n))
    reports = _sweep(run_config, _theorem13_task, [(p, r, n) for p in shapes], "theorem13 G({},{})".format(r, n))
    return _sweep_report("theorem13 G({},{})".format(r, n), reports)


def verify_giambelli(run_config, r, n):
    shapes = _rectangle(r, n)
    _progress(run_config, "verifying giambelli on G({},{}).....".format(r, n))
    reports = _sweep(run_config, _giambelli_task, [(p, r, n) for p in shapes], "giambelli G({},{})".format(r, n))
    return _sweep_report("giambelli G({},{})".format(r, n), reports)


def verify_fock(run_config, r, n, cut):
    _rectangle(r, n)
    _progress(run_config, "verifying Schubert derivations on ⋀^{} V_{}.....".format(r, n))
    return [schubert_derivation_check(r, n, cut), boson_fermion_check(r, n, min(cut, r * (n - r)))]


def _degree_agreement(run_config, d):
    report = CheckReport("degrees |λ| = {}".format(d))
    for partition in partitions_of(d):
        values = degree_values(partition)
        if d <= run_config.syt_cutoff:
            values["syt"] = syt_count_bruteforce(partition, run_config.syt_cutoff)
        report.expect(len(set(values.values())) == 1, "{}: {}".format(
            format_partition(partition), ", ".join("{}={}".format(m, v) for m, v in values.items())),
            partition=format_partition(partition), values=values)
    return report


def _run_verify(run_config):
    action = run_config.action
    result = Result()
    if action == "theorem13":
        result.reports.append(verify_theorem13(run_config, run_config.r, run_config.n))
    elif action == "giambelli":
        result.reports.append(verify_giambelli(run_config, run_config.r, run_config.n))
    elif action == "fock":
        result.reports.extend(verify_fock(run_config, run_config.r, run_config.n, run_config.cut))
    elif action == "all":
        _progress(run_config, "checking degree agreement up to weight 10.....")
        result.reports.extend(_degree_agreement(run_config, d) for d in range(11))
        result.reports.extend(square_identity_check(n) for n in range(11))
        result.reports.extend(comp_identity_check(r, d) for r in range(1, 5) for d in range(9))
        result.reports.extend(power_expansion_check(d, r) for r in range(1, 4) for d in range(7))
        result.reports.extend(lasf_check(mu) for d in range(7) for mu in partitions_of(d))
        for r, n in THEOREM13_AMBIENTS:
            result.reports.append(verify_theorem13(run_config, r, n))
        for r, n in GIAMBELLI_AMBIENTS:
            result.reports.append(verify_giambelli(run_config, r, n))
        for r in range(1, 4):
            for n in range(r, 8):
                result.reports.append(schubert_derivation_check(r, n, 4))
        result.reports.extend(boson_fermion_check(r, n, cut) for r, n, cut in BOSON_FERMION_CASES)
    else:
        raise ValueError("unknown sweep {!r}".format(action))
    passed = sum(1 for report in result.reports if report.passed)
    result.tail.append("{} of {} checks passed".format(passed, len(result.reports)))
    return result


def _run_expand(run_config):
    polynomial = parse_polynomial(run_config.polynomial)
    _check_weight(polynomial.weighted_degree(), run_config.formula_cutoff, "polynomial")
    expansion = expand_in_schur(polynomial)
    result = Result()
    result.head.append(expansion.render())
    result.payload = {"polynomial": polynomial.to_json(), "expansion": expansion.to_json()}
    result.rows = [{"partition": p["partition"], "coef": p["coef"]} for p in expansion.to_json()]
    return result


COMMANDS = {
    "degree": _run_degree,
    "table": _run_table,
    "identity": _run_identity,
    "verify": _run_verify,
    "expand": _run_expand,
}


def render(run_config, result):
    if run_config.output_format == "json":
        document = {"command": run_config.command}
        if run_config.action:
            document["action"] = run_config.action
        document["verdict"] = "PASS" if result.passed else "FAIL"
        document.update(result.payload)
        document["checks"] = [report.to_dict() for report in result.reports]
        return json.dumps(document, indent=2, ensure_ascii=False)
    if run_config.output_format == "csv":
        rows = result.rows
        if rows is None:
            rows = [{"check": r.name, "verdict": r.verdict, "details": "; ".join(r.lines)} for r in result.reports]
        return pd.DataFrame(rows).to_csv(index=False).rstrip("\n")
    lines = list(result.head)
    for report in result.reports:
        if report.passed and not run_config.verbose:
            lines.append("{}: {}".format(report.name, report.verdict))
        else:
            lines.append(report.render())
    lines.extend(result.tail)
    return "\n".join(lines)


def run(run_config):
    """Execute one command; returns (exit status, rendered output)."""
    try:
        config.check_cutoff("syt", run_config.syt_cutoff)
        config.check_cutoff("formula", run_config.formula_cutoff)
        result = COMMANDS[run_config.command](run_config)
    except InvariantViolation as exc:
        return EXIT_FAIL, "invariant violated: {}".format(exc)
    except ValueError as exc:
        return EXIT_REFUSED, "refused: {}".format(exc)
    return (EXIT_PASS if result.passed else EXIT_FAIL), render(run_config, result)


def build_parser():
    parser = argparse.ArgumentParser(description="Plücker degrees of Schubert varieties and the identities around them")
    parser.add_argument('--format', dest='output_format', choices=["plain", "json", "csv"], default="plain")
    parser.add_argument('--verbose', action='store_true')
    parser.add_argument('--workers', type=int, default=None)
    parser.add_argument('--syt-cutoff', type=int, default=None)
    parser.add_argument('--formula-cutoff', type=int, default=None)
    parser.add_argument('--output', type=str, default=None)
    commands = parser.add_subparsers(dest='command', required=True)

    degree = commands.add_parser('degree', help="f^λ by the hook, determinant, derivative and cap methods")
    degree.add_argument('partition', type=parse_partition)
    degree.add_argument('--method', choices=list(METHODS) + ["all"], default="all")

    table = commands.add_parser('table', help="every λ ⊢ d with f^λ, hook product and Δ_λ(exp t)")
    table.add_argument('d', type=int)

    identity = commands.add_parser('identity', help="the square, power sum and integral identities")
    identities = identity.add_subparsers(dest='action', required=True)
    square = identities.add_parser('square')
    square.add_argument('d', type=int)
    powersum = identities.add_parser('powersum')
    powersum.add_argument('r', type=int)
    powersum.add_argument('d', type=int)
    for name in ('integrals', 'lasf'):
        sub = identities.add_parser(name)
        sub.add_argument('partition', type=parse_partition)

    verify = commands.add_parser('verify', help="exhaustive sweeps over G(r,n) and ⋀^r V_n")
    sweeps = verify.add_subparsers(dest='action', required=True)
    for name in ('theorem13', 'giambelli'):
        sub = sweeps.add_parser(name)
        sub.add_argument('r', type=int)
        sub.add_argument('n', type=int)
    fock = sweeps.add_parser('fock')
    fock.add_argument('r', type=int)
    fock.add_argument('n', type=int)
    fock.add_argument('cut', type=int)
    sweeps.add_parser('all')

    expand = commands.add_parser('expand', help="Schur-basis expansion of a polynomial in x1, x2, ...")
    expand.add_argument('polynomial', type=str)
    return parser


def config_from_args(args):
    return RunConfig(
        command=args.command,
        action=getattr(args, 'action', None),
        partition=getattr(args, 'partition', None),
        r=getattr(args, 'r', None),
        n=getattr(args, 'n', None),
        d=getattr(args, 'd', None),
        cut=getattr(args, 'cut', None),
        polynomial=getattr(args, 'polynomial', None),
        method=getattr(args, 'method', "all"),
        output_format=args.output_format,
        verbose=args.verbose,
        workers=args.workers if args.workers is not None else config.workers(),
        syt_cutoff=args.syt_cutoff if args.syt_cutoff is not None else config.syt_cutoff(),
        formula_cutoff=args.formula_cutoff if args.formula_cutoff is not None else config.formula_cutoff(),
        output=args.output,
    )


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        run_config = config_from_args(args)
    except ValueError as exc:
        print("refused: {}".format(exc), file=sys.stderr)
        return EXIT_REFUSED
    status, text = run(run_config)
    if run_config.output:
        with open(run_config.output, 'w', encoding='utf-8') as f:
            f.write(text + "\n")
        _progress(run_config, "Saved output to {}.....".format(run_config.output))
    else:
        print(text)
    return status


if __name__ == '__main__':
    sys.exit(main())
