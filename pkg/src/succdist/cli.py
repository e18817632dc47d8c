"""Command-line interface: distribution tables, moment reports, and the
cross-validation check suites."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import dist as dist_mod
from . import matrixform, moments, oracle
from .dist import A000255_KNOWN, Specification, SuccessionDistribution, multinomial
from .genfun import build_gh_recursive, succession_polynomial, unrestricted_input
from .series import TruncSeries
from .wpoly import WPoly

DIST_METHODS = ("explicit", "recursive", "matrix", "closed-form", "oracle", "all")
FORMATS = ("plain", "csv", "json")
SUITES = ("all", "a000255", "oracle", "recurrence", "determinant", "closedform", "moments")
MATRIX_K_LIMIT = 8
MMAX_LIMIT = 6


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    spec: Specification | None = None
    method: str = "explicit"
    mmax: int = 2
    fmt: str = "plain"
    output: str | None = None
    budget: int = oracle.DEFAULT_BUDGET
    suite: str = "all"
    direction: int | None = None  # 0-based
    steps: int | None = None
    kmax: int | None = None
    nmax: int | None = None
    families: int = 10
    seed: int = 0


def _fraction_decimal(value: Fraction) -> str:
    return f"{value.numerator / value.denominator:.12g}"


def _round12(value: Fraction) -> float:
    return float(_fraction_decimal(value))


def _spec_of(args) -> Specification:
    if args.spec is None:
        raise UsageError("--spec is required")
    return Specification.parse(args.spec)


def _budget_of(args) -> int:
    if getattr(args, "budget", None) is not None:
        if args.budget < 1:
            raise UsageError("--budget must be positive")
        return args.budget
    return oracle.budget_from_env()


def build_config(args) -> RunConfig:
    if args.command == "dist":
        spec = _spec_of(args)
        if args.method in ("closed-form",) and spec.k > 3:
            raise UsageError("closed-form method supports k <= 3 only")
        if args.method == "matrix" and spec.k > MATRIX_K_LIMIT:
            raise UsageError(f"matrix method is limited to k <= {MATRIX_K_LIMIT}")
        return RunConfig(
            command="dist",
            spec=spec,
            method=args.method,
            fmt=args.format,
            output=args.output,
            budget=_budget_of(args),
        )
    if args.command == "moments":
        spec = _spec_of(args)
        if not 1 <= args.mmax <= MMAX_LIMIT:
            raise UsageError(f"--mmax must lie in 1..{MMAX_LIMIT}")
        return RunConfig(
            command="moments",
            spec=spec,
            mmax=args.mmax,
            fmt=args.format,
            output=args.output,
        )
    if args.command == "check":
        spec = Specification.parse(args.spec) if args.spec is not None else None
        direction = None
        if args.dir is not None:
            if spec is None:
                raise UsageError("--dir needs --spec")
            if not 1 <= args.dir <= spec.k:
                raise UsageError(f"--dir must lie in 1..{spec.k}")
            if spec.n[args.dir - 1] < 1:
                raise UsageError("--dir must point at a positive multiplicity")
            direction = args.dir - 1
        if args.suite == "a000255":
            kmax = args.kmax if args.kmax is not None else 8
            if not 1 <= kmax <= len(A000255_KNOWN):
                raise UsageError(f"--kmax must lie in 1..{len(A000255_KNOWN)} for a000255")
        return RunConfig(
            command="check",
            spec=spec,
            suite=args.suite,
            direction=direction,
            steps=args.steps,
            kmax=args.kmax,
            nmax=args.nmax,
            families=args.families,
            seed=args.seed,
            budget=_budget_of(args),
            fmt=args.format,
            output=args.output,
        )
    raise UsageError(f"unknown command {args.command!r}")


# ---------------------------------------------------------------- dist


def _polynomial_by_method(spec: Specification, method: str, budget: int) -> WPoly:
    if method == "explicit":
        return succession_polynomial(spec.n)
    if method == "recursive":
        pair = build_gh_recursive(unrestricted_input(spec.n))
        return pair.G.coeff(spec.n)
    if method == "matrix":
        pair = matrixform.gh_via_solve(unrestricted_input(spec.n).g)
        return pair.G.coeff(spec.n)
    if method == "closed-form":
        if spec.k == 1:
            return dist_mod.closed_form_k2(spec.n[0], 0)
        if spec.k == 2:
            return dist_mod.closed_form_k2(*spec.n)
        return dist_mod.closed_form_k3(*spec.n)
    if method == "oracle":
        return oracle.enumerate_distribution(spec, budget).polynomial()
    raise UsageError(f"unknown method {method!r}")


def _applicable_methods(spec: Specification, budget: int) -> list[str]:
    methods = ["explicit", "recursive"]
    if spec.k <= MATRIX_K_LIMIT:
        methods.append("matrix")
    if spec.k <= 3:
        methods.append("closed-form")
    if multinomial(spec.n) <= budget:
        methods.append("oracle")
    return methods


def cmd_dist(config: RunConfig) -> tuple[str, int]:
    spec = config.spec
    methods_used: list[str] = []
    agreement = None
    if config.method == "all":
        methods_used = _applicable_methods(spec, config.budget)
        polys = [_polynomial_by_method(spec, m, config.budget) for m in methods_used]
        agreement = "OK" if all(p == polys[0] for p in polys) else "MISMATCH"
        table = SuccessionDistribution.from_polynomial(spec, polys[0])
    else:
        p = _polynomial_by_method(spec, config.method, config.budget)
        table = SuccessionDistribution.from_polynomial(spec, p)

    if config.fmt == "csv":
        lines = ["r,count,probability_exact,probability_decimal"]
        for r, count in enumerate(table.counts):
            prob = table.probability(r)
            lines.append(f"{r},{count},{prob},{_fraction_decimal(prob)}")
        text = "\n".join(lines) + "\n"
    elif config.fmt == "json":
        payload = {
            "spec": list(spec.n),
            "counts": [str(c) for c in table.counts],
            "total": str(table.total),
        }
        if agreement is not None:
            payload["methods"] = methods_used
            payload["agreement"] = agreement
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [
            f"spec: {list(spec.n)}  (k={spec.k}, n={spec.size})",
            f"total arrangements: {table.total}",
            " r  count  probability",
        ]
        width = max(len(str(c)) for c in table.counts)
        for r, count in enumerate(table.counts):
            prob = table.probability(r)
            lines.append(f"{r:>2}  {count:>{width}}  {prob} ({_fraction_decimal(prob)})")
        if agreement is not None:
            lines.append(f"methods: {', '.join(methods_used)}")
            lines.append(f"agreement: {agreement}")
        text = "\n".join(lines) + "\n"
    return text, (0 if agreement in (None, "OK") else 1)


# ---------------------------------------------------------------- moments


def cmd_moments(config: RunConfig) -> tuple[str, int]:
    spec = config.spec
    report = moments.moment_report(spec, config.mmax)
    if config.fmt == "csv":
        lines = ["quantity,exact,decimal"]
        lines.append(f"mean,{report.mean},{_fraction_decimal(report.mean)}")
        lines.append(f"variance,{report.variance},{_fraction_decimal(report.variance)}")
        lines.append(
            f"second_factorial,{report.second_factorial},"
            f"{_fraction_decimal(report.second_factorial)}"
        )
        for m, value in enumerate(report.factorial_moments, start=1):
            lines.append(f"factorial_moment_{m},{value},{_fraction_decimal(value)}")
        text = "\n".join(lines) + "\n"
    elif config.fmt == "json":
        payload = {
            "spec": list(spec.n),
            "total": str(report.total),
            "moments": {
                "mean": str(report.mean),
                "variance": str(report.variance),
                "second_factorial": str(report.second_factorial),
                "factorial": [str(v) for v in report.factorial_moments],
            },
            "normal_approx": {
                "mean": _round12(report.mean),
                "variance": _round12(report.variance),
            },
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [
            f"spec: {list(spec.n)}  (k={spec.k}, n={spec.size})",
            f"total arrangements: {report.total}",
            f"mean: {report.mean} ({_fraction_decimal(report.mean)})",
            f"variance: {report.variance} ({_fraction_decimal(report.variance)})",
            f"E[R(R-1)]: {report.second_factorial} ({_fraction_decimal(report.second_factorial)})",
        ]
        for m, value in enumerate(report.factorial_moments, start=1):
            lines.append(f"E[R^({m})]: {value} ({_fraction_decimal(value)})")
        lines.append(
            "normal approximation: "
            f"N(mean={_fraction_decimal(report.mean)}, variance={_fraction_decimal(report.variance)})"
        )
        text = "\n".join(lines) + "\n"
    return text, 0


# ---------------------------------------------------------------- check


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, label: str, ok: bool):
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def _specs_up_to(nmax: int, kmax: int, positive: bool = False):
    low = 1 if positive else 0
    for k in range(1, kmax + 1):
        for vec in product(range(low, nmax + 1), repeat=k):
            if 1 <= sum(vec) <= nmax:
                yield Specification(vec)


def _suite_a000255(config: RunConfig) -> SuiteResult:
    result = SuiteResult("a000255")
    kmax = config.kmax if config.kmax is not None else 8
    computed = dist_mod.no_succession_counts(kmax)
    for k in range(1, kmax + 1):
        result.record(
            f"k={k}: got {computed[k - 1]}, want {A000255_KNOWN[k - 1]}",
            computed[k - 1] == A000255_KNOWN[k - 1],
        )
    return result


def _suite_oracle(config: RunConfig) -> SuiteResult:
    result = SuiteResult("oracle")
    nmax = config.nmax if config.nmax is not None else 6
    kmax = config.kmax if config.kmax is not None else 4
    for spec in _specs_up_to(nmax, kmax):
        expected = oracle.enumerate_distribution(spec, config.budget)
        actual = dist_mod.distribution(spec)
        result.record(f"spec {list(spec.n)}", actual.counts == expected.counts)
    return result


def _random_positive_spec(rng: random.Random, kmax: int, nmax: int) -> Specification:
    while True:
        k = rng.randint(1, kmax)
        n = tuple(rng.randint(0, 3) for _ in range(k))
        if 1 <= sum(n) <= nmax:
            return Specification(n)


def _suite_recurrence(config: RunConfig) -> SuiteResult:
    result = SuiteResult("recurrence")
    if config.spec is not None:
        if config.direction is None:
            raise UsageError("recurrence suite with --spec needs --dir")
        base = config.spec
        d = dist_mod.recurrence_order(base, config.direction)
        steps = config.steps if config.steps is not None else d + 1
        if steps < d + 1:
            raise UsageError(f"--steps must be >= {d + 1} for this family (order {d})")
        polys = dist_mod.family_polynomials(base, config.direction, steps)
        for anchor in range(steps - d):
            anchor_spec = base.replace_count(
                config.direction, base.n[config.direction] + anchor
            )
            ok = dist_mod.verify_p_recurrence(
                anchor_spec, config.direction, polys[anchor : anchor + d + 1]
            )
            result.record(f"P-recurrence at {list(anchor_spec.n)}", ok)
        result.record(
            f"s-recurrence at {list(base.n)}",
            dist_mod.verify_s_recurrence(base, config.direction),
        )
        return result
    rng = random.Random(config.seed)
    kmax = config.kmax if config.kmax is not None else 4
    nmax = config.nmax if config.nmax is not None else 12
    for _ in range(config.families):
        spec = _random_positive_spec(rng, kmax, nmax)
        direction = rng.choice([i for i in range(spec.k) if spec.n[i] >= 1])
        ok_p = dist_mod.verify_p_recurrence(spec, direction)
        ok_s = dist_mod.verify_s_recurrence(spec, direction)
        result.record(f"family {list(spec.n)} dir {direction + 1}", ok_p and ok_s)
    return result


def _random_g(rng: random.Random, caps: Sequence[int]) -> list[TruncSeries]:
    k = len(caps)
    out = []
    for i in range(k):
        terms = {}
        for d in range(1, caps[i] + 1):
            c = rng.randint(-2, 3)
            if c:
                terms[tuple(d if j == i else 0 for j in range(k))] = WPoly((c,))
        out.append(TruncSeries(caps, terms))
    return out


def _suite_determinant(config: RunConfig) -> SuiteResult:
    result = SuiteResult("determinant")
    rng = random.Random(config.seed)
    kmax = config.kmax if config.kmax is not None else 5
    for k in range(1, kmax + 1):
        for draw in range(2):
            caps = tuple(rng.randint(1, 2) for _ in range(k))
            g = _random_g(rng, caps)
            ok = matrixform.det_m(g) == matrixform.det_m_closed(g)
            result.record(f"k={k} draw {draw} caps {list(caps)}", ok)
    return result


def _suite_closedform(config: RunConfig) -> SuiteResult:
    result = SuiteResult("closedform")
    for n1 in range(7):
        for n2 in range(7):
            if n1 + n2 < 1:
                continue
            ok = dist_mod.closed_form_k2(n1, n2) == succession_polynomial((n1, n2))
            result.record(f"k2 ({n1},{n2})", ok)
    for n1 in range(5):
        for n2 in range(5):
            for n3 in range(5):
                if n1 + n2 + n3 < 1:
                    continue
                ok = dist_mod.closed_form_k3(n1, n2, n3) == succession_polynomial(
                    (n1, n2, n3)
                )
                result.record(f"k3 ({n1},{n2},{n3})", ok)
    return result


def _suite_moments(config: RunConfig) -> SuiteResult:
    result = SuiteResult("moments")
    nmax = config.nmax if config.nmax is not None else 7
    for spec in _specs_up_to(nmax, nmax, positive=True):
        report = moments.moments_from_polynomial(succession_polynomial(spec.n))
        ok = (
            moments.mean_closed(spec) == report.mean
            and moments.variance_closed(spec) == report.variance
            and moments.second_factorial_closed(spec) == report.second_factorial
        )
        result.record(f"closed vs polynomial {list(spec.n)}", ok)
    for k in range(2, 9):
        spec = Specification((1,) * k)
        ok = (
            moments.mean_closed(spec) == Fraction(k - 1, k)
            and moments.second_factorial_closed(spec) == Fraction(k - 2, k)
            and moments.variance_closed(spec) == Fraction(k * k - k - 1, k * k)
        )
        result.record(f"all-distinct k={k}", ok)
    return result


SUITE_RUNNERS = {
    "a000255": _suite_a000255,
    "oracle": _suite_oracle,
    "recurrence": _suite_recurrence,
    "determinant": _suite_determinant,
    "closedform": _suite_closedform,
    "moments": _suite_moments,
}


def cmd_check(config: RunConfig) -> tuple[str, int]:
    names = list(SUITE_RUNNERS) if config.suite == "all" else [config.suite]
    results = [SUITE_RUNNERS[name](config) for name in names]
    all_ok = all(r.ok for r in results)
    if config.fmt == "json":
        payload = {
            "suites": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "total": r.total,
                    "failures": r.failures,
                }
                for r in results
            ],
            "ok": all_ok,
        }
        text = json.dumps(payload, indent=2) + "\n"
    elif config.fmt == "csv":
        lines = ["suite,passed,total"]
        lines.extend(f"{r.name},{r.passed},{r.total}" for r in results)
        text = "\n".join(lines) + "\n"
    else:
        lines = []
        for r in results:
            status = "OK" if r.ok else "FAIL"
            lines.append(f"suite {r.name}: {r.passed}/{r.total} {status}")
            lines.extend(f"  FAIL {label}" for label in r.failures)
        lines.append("all checks passed" if all_ok else "CHECK FAILURES PRESENT")
        text = "\n".join(lines) + "\n"
    return text, (0 if all_ok else 1)


# ---------------------------------------------------------------- entry


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="succdist",
        description="Exact succession distributions of random multiset permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dist = sub.add_parser("dist", help="distribution table for one specification")
    p_dist.add_argument("--spec", help="comma-separated multiplicities, e.g. 1,2,2")
    p_dist.add_argument("--method", choices=DIST_METHODS, default="explicit")
    p_dist.add_argument("--format", choices=FORMATS, default="plain")
    p_dist.add_argument("--output", help="write to this path instead of stdout")
    p_dist.add_argument("--budget", type=int, help="enumeration budget for the oracle")

    p_mom = sub.add_parser("moments", help="exact moments for one specification")
    p_mom.add_argument("--spec")
    p_mom.add_argument("--mmax", type=int, default=2, help="highest factorial moment order")
    p_mom.add_argument("--format", choices=FORMATS, default="plain")
    p_mom.add_argument("--output")

    p_check = sub.add_parser("check", help="run cross-validation suites")
    p_check.add_argument("--suite", choices=SUITES, default="all")
    p_check.add_argument("--spec", help="base specification for the recurrence suite")
    p_check.add_argument("--dir", type=int, help="1-based varying index for the recurrence")
    p_check.add_argument("--steps", type=int, help="family length for the recurrence suite")
    p_check.add_argument("--kmax", type=int)
    p_check.add_argument("--nmax", type=int)
    p_check.add_argument("--families", type=int, default=10)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--budget", type=int)
    p_check.add_argument("--format", choices=FORMATS, default="plain")
    p_check.add_argument("--output")
    return parser


COMMANDS = {"dist": cmd_dist, "moments": cmd_moments, "check": cmd_check}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        config = build_config(args)
        text, code = COMMANDS[config.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
