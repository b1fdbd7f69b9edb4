"""Command-line surface: compute commands, verification suites, and
machine-readable output.

Output is line-oriented JSON by default (one record per line, keys sorted) so
repeated runs under the same configuration are byte-identical and fixtures
diff cleanly; CSV and an aligned pretty format are available for tables.
Every run starts with a config-echo record and every numeric record names the
identity it instantiates.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from . import hodge, hurwitz
from .characters import (
    character_table,
    central_character_transposition,
    dimension,
    dimension_hook,
    character,
    principal_specialization_check,
)
from .exact import GaussianRational, TauPolynomial, fraction_str
from .genfun import (
    PartitionSeries,
    character_cutjoin_identity,
    cut_join_linear,
    cut_join_nonlinear,
    ps_exp,
    ps_log,
)
from .hurwitz import BudgetExceededError, branch_count
from .partitions import Partition, enumerate_partitions

BUDGET_ENV_VAR = "CUTJOIN_BUDGET"
MAX_TABLE_DEGREE = 12


@dataclass(frozen=True)
class RunConfig:
    max_weight: int = 6
    lambda_order: int = 12
    output_format: str = "json"
    seed: int = 0
    budget: int = hurwitz.DEFAULT_BUDGET
    budget_from_env: bool = False


class CheckResult(NamedTuple):
    check_id: str
    identity: str
    passed: bool
    detail: str


def _config_record(config: RunConfig, command: str, **extra) -> dict:
    rec = {"record": "config", "command": command}
    rec.update(asdict(config))
    rec.update(extra)
    return rec


def _emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    elif fmt == "csv":
        keys = sorted({k for rec in records for k in rec})
        out.write(",".join(keys) + "\n")
        for rec in records:
            out.write(",".join(_csv_cell(rec.get(k, "")) for k in keys) + "\n")
    else:
        for rec in records:
            bits = [f"{k}={rec[k]}" for k in sorted(rec)]
            out.write("  ".join(bits) + "\n")


def _csv_cell(value) -> str:
    text = json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else str(value)
    if any(ch in text for ch in ',"\n'):
        text = '"' + text.replace('"', '""') + '"'
    return text


# -- compute commands ---------------------------------------------------------


def cmd_char(config: RunConfig, degree: int, out) -> int:
    parts = enumerate_partitions(degree)
    table = character_table(degree)
    records = [_config_record(config, "char", degree=degree)]
    for nu, row in zip(parts, table):
        records.append(
            {
                "record": "char-row",
                "identity": "murnaghan-nakayama-character-table",
                "irrep": nu.to_json(),
                "values": {str(mu): v for mu, v in zip(parts, row)},
            }
        )
    if config.output_format == "csv":
        out.write("irrep," + ",".join(str(mu) for mu in parts) + "\n")
        for nu, row in zip(parts, table):
            out.write('"' + str(nu) + '",' + ",".join(str(v) for v in row) + "\n")
        return 0
    _emit(records, config.output_format, out)
    return 0


def cmd_hurwitz(config: RunConfig, genus: int, mu: Partition, method: str, out) -> int:
    r = branch_count(genus, mu)
    if method == "char":
        kind = "disconnected"
        value = hurwitz.hurwitz_disconnected(r, mu) if r >= 0 else Fraction(0)
        identity = "transposition-factorization-character-sum"
    elif method == "brute":
        kind = "connected"
        value = (
            hurwitz.hurwitz_bruteforce(r, mu, transitive_only=True, budget=config.budget)
            if r >= 0
            else Fraction(0)
        )
        identity = "transitive-factorization-enumeration"
    else:
        kind = "connected"
        value = hurwitz.hurwitz_connected(genus, mu)
        identity = "connected-cover-count-exponential-formula"
    number = hurwitz.HurwitzNumber(genus, r, mu, value)
    records = [
        _config_record(config, "hurwitz", genus=genus, partition=mu.to_json(), method=method),
        {
            "record": "hurwitz",
            "identity": identity,
            "genus": number.g,
            "branch_points": number.r,
            "partition": number.mu.to_json(),
            "kind": kind,
            "method": method,
            "value": fraction_str(number.value),
        },
    ]
    _emit(records, config.output_format, out)
    return 0


def cmd_hodge(config: RunConfig, genus: int, mu: Partition, out) -> int:
    _, conn = hodge.build_series_pair(config.max_weight, config.lambda_order)
    poly = hodge.hodge_polynomial(genus, mu, conn)
    records = [
        _config_record(config, "hodge", genus=genus, partition=mu.to_json()),
        {
            "record": "hodge-polynomial",
            "identity": "prefactor-isolated-hodge-polynomial",
            "genus": genus,
            "partition": mu.to_json(),
            "prefactor": hodge.prefactor_polynomial(mu).to_json(),
            "polynomial": poly.to_json(),
        },
    ]
    _emit(records, config.output_format, out)
    return 0


def cmd_mv_series(config: RunConfig, out) -> int:
    star, conn = hodge.build_series_pair(config.max_weight, config.lambda_order)
    records = [_config_record(config, "mv-series")]
    for name, series in (("disconnected", star), ("connected", conn)):
        for mu in series.body.support():
            coeff = (
                series.coefficient(mu)
                .truncate(config.lambda_order)
                .map_coefficients(TauPolynomial.coerce)
            )
            records.append(
                {
                    "record": "series-term",
                    "identity": "character-sine-generating-series",
                    "series": name,
                    "partition": mu.to_json(),
                    "coefficient": coeff.to_json(),
                }
            )
    _emit(records, config.output_format, out)
    return 0


# -- verification suites ------------------------------------------------------


def _suite_hooks(config: RunConfig) -> list[CheckResult]:
    out = []
    for d in range(1, 13):
        ok_sum = ok_inv = ok_kappa = ok_rel = True
        for nu in enumerate_partitions(d):
            tr = nu.transpose()
            ok_sum &= sum(nu.hooks()) == nu.n_weight() + tr.n_weight() + nu.size
            ok_inv &= tr.transpose() == nu
            ok_kappa &= nu.kappa() + tr.kappa() == 0
            ok_rel &= nu.kappa() == 2 * (tr.n_weight() - nu.n_weight())
        n = len(enumerate_partitions(d))
        out.append(CheckResult(f"hooks/sum/d={d:02d}", "hook-sum-identity", ok_sum, f"{n} shapes"))
        out.append(CheckResult(f"hooks/transpose/d={d:02d}", "transpose-involution", ok_inv, f"{n} shapes"))
        out.append(CheckResult(f"hooks/kappa/d={d:02d}", "kappa-antisymmetry", ok_kappa, f"{n} shapes"))
        out.append(
            CheckResult(
                f"hooks/kappa-rows/d={d:02d}",
                "kappa-equals-twice-row-imbalance",
                ok_rel,
                f"{n} shapes",
            )
        )
    return out


def _suite_prop_v(config: RunConfig) -> list[CheckResult]:
    out = []
    for d in range(1, 11):
        ok = all(hodge.v_forms_agree(nu) for nu in enumerate_partitions(d))
        out.append(
            CheckResult(
                f"prop-v/d={d:02d}",
                "sine-product-equals-hook-product",
                ok,
                f"{len(enumerate_partitions(d))} shapes, cross-multiplied",
            )
        )
    return out


def _suite_characters(config: RunConfig) -> list[CheckResult]:
    out = []
    for d in range(1, 9):
        parts = enumerate_partitions(d)
        first = all(
            sum(
                Fraction(character(nu, mu) * character(rho, mu), mu.z())
                for mu in parts
            )
            == (1 if nu == rho else 0)
            for nu in parts
            for rho in parts
        )
        second = all(
            sum(character(nu, mu) * character(nu, rho) for nu in parts)
            == (mu.z() if mu == rho else 0)
            for mu in parts
            for rho in parts
        )
        sign = Partition([1] * d)
        twist = all(
            character(nu.transpose(), mu)
            == (-1) ** (d - mu.length) * character(nu, mu)
            for nu in parts
            for mu in parts
        )
        out.append(CheckResult(f"characters/orthogonality-first/d={d}", "first-orthogonality", first, f"{len(parts)}^2 pairs"))
        out.append(CheckResult(f"characters/orthogonality-second/d={d}", "second-orthogonality", second, f"{len(parts)}^2 pairs"))
        out.append(CheckResult(f"characters/transpose-sign/d={d}", "sign-twist-transpose", twist, f"{len(parts)}^2 pairs"))
    for d in range(1, 11):
        parts = enumerate_partitions(d)
        dims = all(dimension(nu) == dimension_hook(nu) for nu in parts)
        central = all(
            central_character_transposition(nu) == Fraction(nu.kappa(), 2)
            for nu in parts
        )
        out.append(CheckResult(f"characters/dimension/d={d:02d}", "dimension-hook-formula", dims, f"{len(parts)} irreps"))
        out.append(CheckResult(f"characters/central/d={d:02d}", "central-character-equals-half-kappa", central, f"{len(parts)} irreps"))
    spec_ok = all(
        principal_specialization_check(nu, 10)
        for d in range(1, 5)
        for nu in enumerate_partitions(d)
    )
    out.append(
        CheckResult(
            "characters/principal-specialization",
            "principal-specialization",
            spec_ok,
            "|shape| <= 4, q-order 10",
        )
    )
    return out


def _random_series(rng: random.Random, max_weight: int) -> PartitionSeries:
    terms = {}
    pool = [mu for d in range(1, max_weight + 1) for mu in enumerate_partitions(d)]
    for mu in rng.sample(pool, k=min(5, len(pool))):
        terms[mu] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return PartitionSeries(terms, max_weight)


def _suite_cutjoin_id(config: RunConfig) -> list[CheckResult]:
    out = []
    for d in range(1, 9):
        ok = all(character_cutjoin_identity(nu) for nu in enumerate_partitions(d))
        out.append(
            CheckResult(
                f"cutjoin-id/d={d}",
                "schur-eigenvector-identity",
                ok,
                f"{len(enumerate_partitions(d))} irreps",
            )
        )
    rng = random.Random(config.seed)
    roundtrip = all(
        ps_log(ps_exp(F)) == F
        for F in (_random_series(rng, 5) for _ in range(10))
    )
    out.append(
        CheckResult(
            "cutjoin-id/random-exp-log",
            "exp-log-roundtrip",
            roundtrip,
            f"10 seeded series, seed={config.seed}",
        )
    )
    conjugation = True
    for _ in range(5):
        F = _random_series(rng, 5)
        conjugation &= cut_join_linear(ps_exp(F)) == ps_exp(F) * cut_join_nonlinear(F)
    out.append(
        CheckResult(
            "cutjoin-id/random-conjugation",
            "operator-exp-conjugation",
            conjugation,
            f"5 seeded series, seed={config.seed}",
        )
    )
    return out


def _suite_theorem1(config: RunConfig) -> list[CheckResult]:
    star, conn = hodge.build_series_pair(config.max_weight, config.lambda_order)
    lhs = star.tau_derivative()
    rhs = hodge._half_i_lambda(cut_join_linear(star.body))
    linear = hodge._evolution_holds(lhs, rhs, config.lambda_order)
    lhs_c = conn.tau_derivative()
    rhs_c = hodge._half_i_lambda(cut_join_nonlinear(conn.body))
    nonlinear = hodge._evolution_holds(lhs_c, rhs_c, config.lambda_order)
    parity = hodge.parity_pole_check(conn)
    scope = f"weight<={config.max_weight}, order<={config.lambda_order}"
    return [
        CheckResult("theorem1/linear", "tau-evolution-linear-form", linear, scope),
        CheckResult("theorem1/nonlinear", "tau-evolution-nonlinear-form", nonlinear, scope),
        CheckResult("theorem1/parity", "parity-pole-structure", parity, scope),
    ]


def _suite_initial(config: RunConfig) -> list[CheckResult]:
    ok = hodge.initial_condition_check(config.max_weight, config.lambda_order)
    return [
        CheckResult(
            "initial/sine-closed-form",
            "tau-zero-sine-closed-form",
            ok,
            f"rows d<={config.max_weight}, order<={config.lambda_order}",
        )
    ]


def _suite_extraction(config: RunConfig) -> list[CheckResult]:
    out = []
    _, conn = hodge.build_series_pair(config.max_weight, config.lambda_order)
    anchor = all(
        hodge.extract_C_gmu(conn, 0, mu).poly == hodge.genus0_closed_form(mu)
        for d in range(1, min(5, config.max_weight + 1))
        for mu in enumerate_partitions(d)
    )
    out.append(
        CheckResult(
            "extraction/genus0-closed-form",
            "genus0-definition-vs-extraction",
            anchor,
            "all |mu| <= 4",
        )
    )
    for g in range(4):
        degree_ok = symmetry_ok = True
        for d in range(1, min(5, config.max_weight + 1)):
            for mu in enumerate_partitions(d):
                c = hodge.extract_C_gmu(conn, g, mu)
                degree_ok &= c.degree_ok()
                symmetry_ok &= c.symmetry_ok()
        out.append(CheckResult(f"extraction/degree/g={g}", "degree-bound", degree_ok, "|mu| <= 4"))
        out.append(
            CheckResult(
                f"extraction/symmetry/g={g}", "tau-reflection-symmetry", symmetry_ok, "|mu| <= 4"
            )
        )
    division_ok = True
    for d in range(1, min(5, config.max_weight + 1)):
        for mu in enumerate_partitions(d):
            q = hodge.hodge_polynomial(0, mu, conn)
            division_ok &= q == TauPolynomial.constant(
                Fraction(mu.size) ** (mu.length - 3)
            )
    out.append(
        CheckResult(
            "extraction/hodge-division-genus0",
            "hodge-prefactor-division",
            division_ok,
            "quotient is |mu|^(l-3), remainder zero",
        )
    )
    one_point = hodge.hodge_polynomial(1, Partition([1]), conn) == TauPolynomial.constant(
        Fraction(1, 24)
    )
    out.append(
        CheckResult(
            "extraction/one-point-genus1",
            "one-point-genus1-value",
            one_point,
            "constant 1/24",
        )
    )
    lam = hodge.lambda_g_coefficients(4)
    out.append(
        CheckResult(
            "extraction/sine-reciprocal",
            "sine-reciprocal-coefficients",
            lam[:3] == [Fraction(1), Fraction(1, 24), Fraction(7, 5760)],
            "1, 1/24, 7/5760",
        )
    )
    for g in range(3):
        rec_ok = all(
            hodge.cutjoin_derivative_check(conn, g, mu)
            for d in range(1, min(5, config.max_weight + 1))
            for mu in enumerate_partitions(d)
        )
        out.append(
            CheckResult(
                f"extraction/derivative-recursion/g={g}",
                "derivative-recursion",
                rec_ok,
                "|mu| <= 4",
            )
        )
    return out


def _suite_hurwitz(config: RunConfig) -> list[CheckResult]:
    out = []
    for d in range(1, 5):
        disc = all(
            hurwitz.hurwitz_disconnected(r, mu)
            == hurwitz.hurwitz_bruteforce(r, mu, budget=config.budget)
            for mu in enumerate_partitions(d)
            for r in range(7)
        )
        out.append(
            CheckResult(
                f"hurwitz/character-vs-brute/d={d}",
                "character-vs-bruteforce",
                disc,
                "r <= 6",
            )
        )
    for d in range(1, 5):
        conn_ok = True
        for mu in enumerate_partitions(d):
            for g in range(0, 4):
                r = branch_count(g, mu)
                if 0 <= r <= 6:
                    conn_ok &= hurwitz.hurwitz_connected(g, mu) == hurwitz.hurwitz_bruteforce(
                        r, mu, transitive_only=True, budget=config.budget
                    )
        out.append(
            CheckResult(
                f"hurwitz/connected-vs-transitive/d={d}",
                "connected-vs-transitive",
                conn_ok,
                "r <= 6",
            )
        )
    anchors = (
        hurwitz.hurwitz_connected(0, Partition([2])) == Fraction(1, 2)
        and hurwitz.hurwitz_connected(0, Partition([3])) == Fraction(1)
        and hurwitz.hurwitz_connected(1, Partition([2])) == Fraction(1, 2)
    )
    out.append(CheckResult("hurwitz/anchors", "anchor-values", anchors, "three fixed counts"))
    parity = all(
        hurwitz.hurwitz_disconnected(r, mu) == 0
        for d in range(1, 5)
        for mu in enumerate_partitions(d)
        for r in range(7)
        if (r - d - mu.length) % 2 != 0
    )
    out.append(
        CheckResult(
            "hurwitz/parity", "parity-vanishing", parity, "odd-mismatch counts vanish"
        )
    )
    return out


def _suite_elsv(config: RunConfig) -> list[CheckResult]:
    out = []
    for d in range(1, 6):
        ok = all(hurwitz.elsv_check(0, mu) for mu in enumerate_partitions(d))
        out.append(
            CheckResult(
                f"elsv/genus0/d={d}",
                "cover-count-hodge-closed-form",
                ok,
                f"{len(enumerate_partitions(d))} partitions",
            )
        )
    g1 = all(
        hurwitz.elsv_check(1, mu)
        for mu in (Partition([2]), Partition([3]), Partition([4]), Partition([1, 1]))
    )
    out.append(CheckResult("elsv/genus1", "cover-count-hodge-closed-form", g1, "(2),(3),(4),(1,1)"))
    sol = hurwitz.solve_hodge_from_hurwitz(1, [2, 3])
    sol_over = hurwitz.solve_hodge_from_hurwitz(1, [2, 3, 4])
    solved = (
        sol == {"psi": Fraction(1, 24), "lambda": Fraction(1, 24)}
        and sol_over == sol
    )
    out.append(
        CheckResult(
            "elsv/reverse-solve",
            "reverse-solve-one-point-integrals",
            solved,
            "psi=lambda=1/24 from degrees 2,3 and 2,3,4",
        )
    )
    return out


def _suite_transfer(config: RunConfig) -> list[CheckResult]:
    out = []
    from math import comb

    for l in range(1, 11):
        kernel = hodge.transfer_system_kernel(l)
        expected = [Fraction((-1) ** k * comb(l, k)) for k in range(l + 1)]
        out.append(
            CheckResult(
                f"transfer/l={l:02d}",
                "falling-factorial-kernel",
                kernel == expected,
                "alternating binomials",
            )
        )
    return out


SUITES: dict[str, Callable[[RunConfig], list[CheckResult]]] = {
    "hooks": _suite_hooks,
    "prop-v": _suite_prop_v,
    "characters": _suite_characters,
    "cutjoin-id": _suite_cutjoin_id,
    "theorem1": _suite_theorem1,
    "initial": _suite_initial,
    "extraction": _suite_extraction,
    "hurwitz": _suite_hurwitz,
    "elsv": _suite_elsv,
    "transfer": _suite_transfer,
}


def cmd_verify(config: RunConfig, suite: str, out) -> int:
    names = list(SUITES) if suite == "all" else [suite]
    results: list[CheckResult] = []
    for name in names:
        results.extend(SUITES[name](config))
    results.sort(key=lambda r: r.check_id)
    records = [_config_record(config, "verify", suite=suite)]
    for r in results:
        records.append(
            {
                "record": "check",
                "check": r.check_id,
                "identity": r.identity,
                "pass": r.passed,
                "detail": r.detail,
            }
        )
    failed = [r for r in results if not r.passed]
    records.append(
        {
            "record": "summary",
            "suite": suite,
            "checks": len(results),
            "failed": len(failed),
        }
    )
    _emit(records, config.output_format, out)
    return 1 if failed else 0


# -- argument parsing ---------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutjoin",
        description="Exact combinatorics of cut-and-join identities: characters, "
        "sine generating series, Hodge polynomials and branched-cover counts.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-weight", type=int, default=6, metavar="W")
    common.add_argument("--lambda-order", type=int, default=12, metavar="L")
    common.add_argument(
        "--format", choices=("json", "csv", "pretty"), default="json"
    )
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, metavar="N")

    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("char", parents=[common], help="character table of a symmetric group")
    p_char.add_argument("--degree", type=int, required=True, metavar="D")

    p_hur = sub.add_parser("hurwitz", parents=[common], help="branched-cover counts")
    p_hur.add_argument("--genus", type=int, required=True)
    p_hur.add_argument("--partition", type=str, required=True)
    p_hur.add_argument(
        "--method", choices=("char", "brute", "connected"), default="connected"
    )

    p_hodge = sub.add_parser("hodge", parents=[common], help="isolated Hodge polynomial")
    p_hodge.add_argument("--genus", type=int, required=True)
    p_hodge.add_argument("--partition", type=str, required=True)

    sub.add_parser("mv-series", parents=[common], help="dump the generating series")

    p_verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    p_verify.add_argument(
        "--suite", choices=tuple(SUITES) + ("all",), default="all"
    )
    return parser


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    budget_from_env = False
    budget = args.budget
    if budget is None:
        env = os.environ.get(BUDGET_ENV_VAR)
        if env is not None:
            budget = int(env)
            budget_from_env = True
        else:
            budget = hurwitz.DEFAULT_BUDGET
    return RunConfig(
        max_weight=args.max_weight,
        lambda_order=args.lambda_order,
        output_format=args.format,
        seed=args.seed,
        budget=budget,
        budget_from_env=budget_from_env,
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = _resolve_config(args)
    out = sys.stdout
    try:
        if args.command == "char":
            if not 1 <= args.degree <= MAX_TABLE_DEGREE:
                parser.error(f"--degree must be in 1..{MAX_TABLE_DEGREE}")
            return cmd_char(config, args.degree, out)
        if args.command == "hurwitz":
            mu = _parse_partition(parser, args.partition)
            if args.genus < 0:
                parser.error("--genus must be nonnegative")
            return cmd_hurwitz(config, args.genus, mu, args.method, out)
        if args.command == "hodge":
            mu = _parse_partition(parser, args.partition)
            return cmd_hodge(config, args.genus, mu, out)
        if args.command == "mv-series":
            return cmd_mv_series(config, out)
        if args.command == "verify":
            return cmd_verify(config, args.suite, out)
        parser.error(f"unknown command {args.command}")
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        parser.error(str(exc))
    return 2


def _parse_partition(parser: argparse.ArgumentParser, text: str) -> Partition:
    try:
        mu = Partition.parse(text)
    except ValueError as exc:
        parser.error(f"bad partition {text!r}: {exc}")
    if mu.size < 1:
        parser.error("partition must be nonempty")
    return mu


if __name__ == "__main__":
    sys.exit(main())
