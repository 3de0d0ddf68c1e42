"""Command line front end: analyze one action, scan a range, or run the
verification families.  Output is deterministic; rerunning a command
reproduces it byte for byte."""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from . import __version__
from .abelian import (
    AbelianParams,
    CharacterPair,
    abelian_dims,
    abelian_dims_projector,
    abelian_fixed_count,
    abelian_fixed_count_bruteforce,
    abelian_orbits_bruteforce,
    abelian_udr,
)
from .cohomology import d1_oracle_cocycles, dims
from .deformation import (
    check_center_constraint,
    check_determinability_rule,
    check_gcd_pair_identity,
    check_kernel_sets_detect_fusion,
    check_maximality_matches_doubling_fibers,
    fusion_determinability,
    udr_class,
    udr_signature,
    VerificationReport,
)
from .dihedral import DihedralParams, RepLabel, omega_set, t_map
from .ffield import LimitExceeded, find_primes
from .fusion import (
    FusionNumbers,
    fusion_numbers,
    fusion_orbits_bruteforce,
    fusion_orbits_closed_form,
)

_VERIFY_DEFAULT_NMAX = {
    "thm42": 12,
    "thm43": 12,
    "thm11": 30,
    "lemma410": 40,
    "cor34": 12,
    "prop48": 12,
    "cor49": 12,
    "oracle-h1": 12,
}
_VERIFY_ORDER = ["thm42", "thm43", "thm11", "lemma410", "cor34", "prop48", "cor49", "oracle-h1"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udrfusion",
        description="Orbit structure, cohomology dimensions and deformation "
        "ring classes for rank-2 group actions on a prime-field plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze a single action")
    analyze_sub = analyze.add_subparsers(dest="family", required=True)

    dih = analyze_sub.add_parser("dihedral", help="dihedral group action")
    dih.add_argument("--n", type=int, required=True, help="dihedral rank (order 2n)")
    dih.add_argument("--p", type=int, default=None, help="prime, default smallest valid")
    dih.add_argument("--i0", type=int, required=True, help="acting representation index")
    dih.add_argument("--format", choices=("json", "csv"), default="json")
    dih.add_argument("--out", default=None, help="write output to this file as well")

    abl = analyze_sub.add_parser("abelian", help="abelian group action")
    abl.add_argument("--orders", required=True, help="comma-separated cyclic orders")
    abl.add_argument("--p", type=int, default=None, help="prime, default smallest valid")
    abl.add_argument(
        "--theta1",
        required=True,
        help="comma-separated exponents: generator i maps to the smallest "
        "primitive m_i-th root raised to this exponent",
    )
    abl.add_argument("--theta2", required=True, help="same encoding for the second character")
    abl.add_argument("--format", choices=("json", "csv"), default="json")
    abl.add_argument("--out", default=None)

    scan = sub.add_parser("scan", help="tabulate a range of ranks")
    scan_sub = scan.add_subparsers(dest="family", required=True)
    sdih = scan_sub.add_parser("dihedral")
    sdih.add_argument("--n-min", type=int, required=True)
    sdih.add_argument("--n-max", type=int, required=True)
    sdih.add_argument("--primes-per-n", type=int, default=1)
    sdih.add_argument("--format", choices=("json", "csv"), default="csv")
    sdih.add_argument("--out", default=None)

    verify = sub.add_parser("verify", help="run a verification family")
    verify.add_argument(
        "--check",
        choices=_VERIFY_ORDER + ["all"],
        default="all",
        help="which family to run (see README for what each token covers)",
    )
    verify.add_argument("--n-max", type=int, default=None, help="override the grid ceiling")
    return parser


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"{flag} must be a comma-separated integer list, got {text!r}")


def _emit(text: str, out_path: str | None) -> None:
    sys.stdout.write(text)
    if out_path is not None:
        with open(out_path, "w") as fh:
            fh.write(text)


def _check_entry(report: VerificationReport) -> dict:
    return {
        "name": report.check_name,
        "params": list(report.parameters),
        "passed": report.passed,
        "witness": _jsonable(report.witness),
    }


def _jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(_jsonable(v) for v in value)
    return repr(value)


def _dihedral_report(params: DihedralParams, i0: int) -> dict:
    n, p = params.n, params.p
    closed = fusion_orbits_closed_form(params, i0)
    census = fusion_numbers(closed)
    k = n // gcd(i0, n)
    checks = []

    try:
        brute = fusion_orbits_bruteforce(params, i0)
        partition_ok = brute.partition() == closed.partition() and all(
            a.stabilizer_order == b.stabilizer_order
            for a, b in zip(brute.orbits, closed.orbits)
        )
        checks.append(
            VerificationReport("orbit_closed_form_matches_bruteforce", (n, p, i0), partition_ok)
        )
        census_ok = fusion_numbers(brute).counts == FusionNumbers.dihedral_closed_form(p, k).counts
        checks.append(VerificationReport("orbit_census_closed_form", (n, p, i0), census_ok))
    except LimitExceeded:
        pass

    om = omega_set(params)
    reps = []
    for j in params.irr2_indices():
        dd = dims(params, i0, j)
        structural = dd.d2 == dd.d1 + 1 and dd.d1 == (
            1 if t_map(params, j) == RepLabel.irr2(i0) else 0
        )
        reps.append(
            {
                "j": j,
                "gcd": gcd(j, n),
                "T": t_map(params, j).name,
                "in_omega": j in om,
                "d1": dd.d1,
                "d2": dd.d2,
                "udr": udr_class(params, i0, j).label,
            }
        )
        if not structural:
            checks.append(
                VerificationReport("cohomology_dims_structure", (n, p, i0, j), False)
            )
    checks.append(VerificationReport("cohomology_dims_structure", (n, p, i0), True))
    checks.append(check_center_constraint(params, i0))
    if i0 in om:
        checks.append(check_kernel_sets_detect_fusion(params, i0))

    return {
        "version": __version__,
        "params": {"group": "dihedral", "n": n, "p": p, "omega": params.omega, "i0": i0},
        "fusion": {
            "k": k,
            "numbers": {str(size): cnt for size, cnt in sorted(census.counts.items())},
            "orbit_count": len(closed.orbits),
            "representatives": [list(o.representative) for o in closed.orbits],
        },
        "reps": reps,
        "checks": [_check_entry(c) for c in checks],
    }


def _dihedral_csv(report: dict) -> str:
    par = report["params"]
    lines = ["n,p,omega,i0,j,gcd,T,in_omega,d1,d2,udr"]
    tags = {
        "Zp": "Zp",
        "Zp[[t]]/(t^2,pt)": "ZpTtorsion",
        "Zp[Z/p]": "ZpCp",
        "Zp[Z/pxZ/p]": "ZpCpSquared",
    }
    for row in report["reps"]:
        lines.append(
            ",".join(
                str(v)
                for v in (
                    par["n"],
                    par["p"],
                    par["omega"],
                    par["i0"],
                    row["j"],
                    row["gcd"],
                    row["T"],
                    str(row["in_omega"]).lower(),
                    row["d1"],
                    row["d2"],
                    tags[row["udr"]],
                )
            )
        )
    return "\n".join(lines) + "\n"


def _abelian_report(pair: CharacterPair) -> dict:
    params = pair.params
    dd = abelian_dims(pair)
    checks = [
        VerificationReport(
            "fixed_count_power_rule",
            (params.cyclic_orders, params.p),
            abelian_fixed_count(pair) == params.p ** pair.trivial_count(),
        ),
        VerificationReport(
            "dims_match_projector",
            (params.cyclic_orders, params.p),
            abelian_dims_projector(pair) == dd,
        ),
    ]
    fusion_block = {"k": None, "numbers": None, "orbit_count": None, "representatives": None}
    try:
        orbit_set = abelian_orbits_bruteforce(pair)
        census = fusion_numbers(orbit_set)
        fusion_block = {
            "k": None,
            "numbers": {str(size): cnt for size, cnt in sorted(census.counts.items())},
            "orbit_count": len(orbit_set.orbits),
            "representatives": [list(o.representative) for o in orbit_set.orbits],
        }
        checks.append(
            VerificationReport(
                "fixed_count_matches_bruteforce",
                (params.cyclic_orders, params.p),
                abelian_fixed_count_bruteforce(pair) == abelian_fixed_count(pair),
            )
        )
    except LimitExceeded:
        pass
    return {
        "version": __version__,
        "params": {
            "group": "abelian",
            "orders": list(params.cyclic_orders),
            "p": params.p,
            "theta1": list(pair.theta1),
            "theta2": list(pair.theta2),
        },
        "fusion": fusion_block,
        "reps": [
            {
                "j": None,
                "gcd": None,
                "T": None,
                "in_omega": None,
                "d1": dd.d1,
                "d2": dd.d2,
                "udr": abelian_udr(pair).label,
            }
        ],
        "checks": [_check_entry(c) for c in checks],
    }


def _abelian_csv(report: dict) -> str:
    par = report["params"]
    row = report["reps"][0]
    tags = {
        "Zp": "Zp",
        "Zp[Z/p]": "ZpCp",
        "Zp[Z/pxZ/p]": "ZpCpSquared",
    }
    lines = [
        "orders,p,theta1,theta2,d1,d2,udr",
        ",".join(
            str(v)
            for v in (
                "x".join(str(m) for m in par["orders"]),
                par["p"],
                "x".join(str(v) for v in par["theta1"]),
                "x".join(str(v) for v in par["theta2"]),
                row["d1"],
                row["d2"],
                tags[row["udr"]],
            )
        ),
    ]
    return "\n".join(lines) + "\n"


def _scan_rows(n_min: int, n_max: int, primes_per_n: int) -> list[dict]:
    rows = []
    for n in range(n_min, n_max + 1):
        for p in find_primes(n, primes_per_n):
            params = DihedralParams.standard(n, p)
            om = omega_set(params)
            determinable = fusion_determinability(params).passed
            for i0 in params.irr2_indices():
                rows.append(
                    {
                        "n": n,
                        "p": p,
                        "i0": i0,
                        "k": n // gcd(i0, n),
                        "in_omega": i0 in om,
                        "determinable": determinable,
                        "signature": udr_signature(params, i0).digest(),
                    }
                )
    return rows


def _scan_csv(rows: list[dict]) -> str:
    lines = ["n,p,i0,k,in_omega,determinable,signature"]
    for row in rows:
        lines.append(
            ",".join(
                str(v)
                for v in (
                    row["n"],
                    row["p"],
                    row["i0"],
                    row["k"],
                    str(row["in_omega"]).lower(),
                    str(row["determinable"]).lower(),
                    row["signature"],
                )
            )
        )
    return "\n".join(lines) + "\n"


def _run_verify_family(token: str, n_max: int) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    if token == "thm42":
        for n in range(3, n_max + 1):
            params = DihedralParams.standard(n)
            for i0 in sorted(omega_set(params)):
                reports.append(check_kernel_sets_detect_fusion(params, i0))
    elif token == "thm43":
        for n in range(3, n_max + 1):
            reports.append(check_maximality_matches_doubling_fibers(DihedralParams.standard(n)))
    elif token == "thm11":
        for n in range(4, n_max + 1, 2):
            reports.append(check_determinability_rule(n))
    elif token == "lemma410":
        for n in range(4, n_max + 1, 2):
            for i0 in range(2, (n + 1) // 2, 2):
                reports.append(check_gcd_pair_identity(n, i0))
    elif token == "cor34":
        for n in range(3, n_max + 1):
            params = DihedralParams.standard(n)
            for i0 in params.irr2_indices():
                reports.append(check_center_constraint(params, i0))
    elif token == "prop48":
        for n in range(3, n_max + 1):
            for p in find_primes(n, 2):
                params = DihedralParams.standard(n, p)
                for i0 in params.irr2_indices():
                    brute = fusion_orbits_bruteforce(params, i0)
                    closed = fusion_orbits_closed_form(params, i0)
                    ok = brute.partition() == closed.partition() and all(
                        a.stabilizer_order == b.stabilizer_order
                        and a.size * a.stabilizer_order == 2 * n
                        for a, b in zip(brute.orbits, closed.orbits)
                    )
                    reports.append(
                        VerificationReport("orbit_closed_form", (n, p, i0), ok)
                    )
    elif token == "cor49":
        for n in range(3, n_max + 1):
            for p in find_primes(n, 2):
                params = DihedralParams.standard(n, p)
                for i0 in params.irr2_indices():
                    census = fusion_numbers(fusion_orbits_bruteforce(params, i0))
                    k = n // gcd(i0, n)
                    expected = FusionNumbers.dihedral_closed_form(p, k)
                    ok = census.counts == expected.counts and census.total_points() == p * p
                    reports.append(VerificationReport("orbit_census", (n, p, i0), ok))
    elif token == "oracle-h1":
        for n in range(3, n_max + 1):
            for p in find_primes(n, 2):
                params = DihedralParams.standard(n, p)
                for i0 in params.irr2_indices():
                    for j in params.irr2_indices():
                        try:
                            oracle = d1_oracle_cocycles(params, i0, j)
                        except LimitExceeded:
                            continue
                        ok = oracle == dims(params, i0, j).d1
                        reports.append(
                            VerificationReport("cocycle_oracle_d1", (n, p, i0, j), ok)
                        )
    else:
        raise ValueError(f"unknown check {token!r}")
    return reports


def _cmd_verify(args) -> int:
    tokens = _VERIFY_ORDER if args.check == "all" else [args.check]
    failed = 0
    total = 0
    for token in tokens:
        n_max = args.n_max if args.n_max is not None else _VERIFY_DEFAULT_NMAX[token]
        for report in _run_verify_family(token, n_max):
            total += 1
            par = " ".join(str(v) for v in report.parameters)
            if report.passed:
                print(f"PASS {token} {par}")
            else:
                failed += 1
                print(f"FAIL {token} {par} witness={_jsonable(report.witness)}")
    print(f"{total} checks, {failed} failed")
    return 1 if failed else 0


def _cmd_analyze(args) -> int:
    if args.family == "dihedral":
        params = DihedralParams.standard(args.n, args.p)
        if args.i0 not in params.irr2_indices():
            raise ValueError(f"--i0 must lie in [1, {args.n}/2), got {args.i0}")
        report = _dihedral_report(params, args.i0)
        text = (
            json.dumps(report, indent=2) + "\n"
            if args.format == "json"
            else _dihedral_csv(report)
        )
    else:
        orders = _parse_int_list(args.orders, "--orders")
        params = AbelianParams.standard(orders, args.p)
        e1 = _parse_int_list(args.theta1, "--theta1")
        e2 = _parse_int_list(args.theta2, "--theta2")
        pair = CharacterPair.from_exponents(params, e1, e2)
        report = _abelian_report(pair)
        text = (
            json.dumps(report, indent=2) + "\n"
            if args.format == "json"
            else _abelian_csv(report)
        )
    _emit(text, args.out)
    return 0


def _cmd_scan(args) -> int:
    if args.n_min < 3 or args.n_max < args.n_min:
        raise ValueError("need 3 <= n-min <= n-max")
    if args.primes_per_n < 1:
        raise ValueError("need at least one prime per n")
    rows = _scan_rows(args.n_min, args.n_max, args.primes_per_n)
    if args.format == "json":
        text = json.dumps({"version": __version__, "rows": rows}, indent=2) + "\n"
    else:
        text = _scan_csv(rows)
    _emit(text, args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "scan":
            return _cmd_scan(args)
        return _cmd_verify(args)
    except (ValueError, LimitExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
