"""``ssm-kit`` command line.

Exit status: 0 on success, 1 when a verification finds a counterexample
(the witness goes to stdout), 2 on bad usage.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import ArgumentError, ConfigurationError, SsmKitError

DEFAULT_CAP = 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def default_cap() -> int:
    raw = os.environ.get("SSM_KIT_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"SSM_KIT_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError("SSM_KIT_CAP must be at least 1")
    return cap


def _int_list(text: str) -> tuple:
    text = text.strip()
    if text in ("", "none", "{}"):
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").strip("{}()").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ssm-kit", description="Exact CSM/SSM classes of matrix Schubert cells and rank loci.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    def cap(sp):
        sp.add_argument("--cap", type=_positive, default=None, help="degree cap (default $SSM_KIT_CAP or 10)")

    def cell(sp):
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        group = sp.add_mutually_exclusive_group(required=True)
        group.add_argument("--set", type=_int_list, help="column set, e.g. 1,3 (empty: none)")
        group.add_argument("--lambda", dest="lam", type=_int_list, help="weakly decreasing vector of length k")

    sp = sub.add_parser("weight", help="weight function of a cell")
    cell(sp)
    fmt(sp)
    sp.add_argument("--beta0", action="store_true", help="set b1..bn to 0")
    sp.add_argument("--residue", action="store_true", help="use the residue formula (implies --beta0)")

    sp = sub.add_parser("csm-cell", help="CSM class of a cell")
    cell(sp)
    fmt(sp)
    sp.add_argument("--beta0", action="store_true")
    sp.add_argument("--schur", action="store_true", help="print the Schur expansion (implies --beta0)")

    sp = sub.add_parser("ssm-cell", help="SSM class of a cell through the degree cap")
    cell(sp)
    fmt(sp)
    cap(sp)
    sp.add_argument("--beta0", action="store_true")
    sp.add_argument("--schur", action="store_true", help="print the Schur expansion (implies --beta0)")

    sp = sub.add_parser("tssm", help="Schur expansion of tssm_lambda")
    sp.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    fmt(sp)
    cap(sp)

    sp = sub.add_parser("sigma", help="SSM class of the rank-r locus")
    for flag in ("--k", "--n", "--r"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--method", choices=("tssm", "sieve"), default="tssm")
    sp.add_argument("--schur", action="store_true", help="tssm method only: print the Schur series before rho")
    fmt(sp)
    cap(sp)

    sp = sub.add_parser("phi", help="push-forward class Phi^s")
    for flag in ("--s", "--k", "--n"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--method", choices=("sss", "det", "loc"), default="loc")
    fmt(sp)
    cap(sp)

    sp = sub.add_parser("verify-axioms", help="check the interpolation axioms on the weight functions")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("scan-alternating", help="scan tssm expansions for sign violations")
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--min-weight", type=int, default=0)
    sp.add_argument("--jobs", type=_positive, default=1)
    cap(sp)

    sp = sub.add_parser("cross-check", help="run independent-route suites")
    sp.add_argument("--suite", required=True, help="suite name or 'all'")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--cap", type=_positive, default=None, help="override every suite's cap")
    return p


def _cell_from_args(args):
    from .cellgeom import ColumnSet, set_of_lambda

    if args.k < 0 or args.n < args.k:
        raise UsageError(f"--k/--n: need 0 <= k <= n, got k={args.k}, n={args.n}")
    if args.set is not None:
        try:
            return ColumnSet(args.k, args.n, args.set)
        except ArgumentError as exc:
            raise UsageError(f"--set: {exc}") from None
    try:
        return set_of_lambda(args.lam, args.k, args.n)
    except ArgumentError as exc:
        raise UsageError(f"--lambda: {exc}") from None


def _out(text: str):
    sys.stdout.write(text + "\n")


def _cmd_weight(args):
    from .weightfn import beta_zero, weight_function, weight_function_residue_beta0

    I = _cell_from_args(args)
    if args.residue:
        value = weight_function_residue_beta0(I)
    else:
        value = weight_function(I)
        if args.beta0:
            value = beta_zero(value, I.n)
    _out(_render(value, args.format))
    return 0


def _cmd_csm(args):
    from .schurbasis import schur_expand
    from .weightfn import csm_cell

    I = _cell_from_args(args)
    c = csm_cell(I, beta0=args.beta0 or args.schur)
    value = schur_expand(c.value, I.k) if args.schur else c.value
    _out(_render(value, args.format))
    return 0


def _cmd_ssm(args):
    from .schurbasis import schur_expand
    from .weightfn import codimension, ssm_cell

    I = _cell_from_args(args)
    cap = args.cap or default_cap()
    codim = codimension(I)
    if cap < codim:
        raise UsageError(f"--cap: {cap} is below the codimension {codim} of {I}")
    c = ssm_cell(I, cap, beta0=args.beta0 or args.schur)
    value = schur_expand(c.value.poly, I.k, cap) if args.schur else c.value
    _out(_render(value, args.format))
    return 0


def _cmd_tssm(args):
    from .genfun import tssm

    try:
        t = tssm(args.lam, args.cap or default_cap())
    except ArgumentError as exc:
        raise UsageError(f"--lambda: {exc}") from None
    _out(_render(t.series, args.format))
    return 0


def _check_knr(k, n, r, rname="--r"):
    if k < 0 or n < k:
        raise UsageError(f"--k/--n: need 0 <= k <= n, got k={k}, n={n}")
    if not 0 <= r <= k:
        raise UsageError(f"{rname}: need 0 <= {rname[2:]} <= k, got {r}")


def _cmd_sigma(args):
    from .a2pp import ssm_sigma_sieve, ssm_sigma_tssm

    _check_knr(args.k, args.n, args.r)
    cap = args.cap or default_cap()
    if args.method == "tssm":
        series, value = ssm_sigma_tssm(args.k, args.n, args.r, cap)
        _out(_render(series if args.schur else value, args.format))
    else:
        if args.schur:
            raise UsageError("--schur: only available with --method tssm")
        _out(_render(ssm_sigma_sieve(args.k, args.n, args.r, cap), args.format))
    return 0


def _cmd_phi(args):
    from .a2pp import phi_class

    _check_knr(args.k, args.n, args.s, "--s")
    if args.s < 1:
        raise UsageError("--s: need s >= 1")
    _out(_render(phi_class(args.s, args.k, args.n, args.cap or default_cap(), args.method), args.format))
    return 0


def _cmd_axioms(args):
    from .cellgeom import enumerate_orbits
    from .weightfn import verify_interpolation_axioms, weight_function

    if args.k < 0 or args.n < args.k:
        raise UsageError(f"--k/--n: need 0 <= k <= n, got k={args.k}, n={args.n}")
    orbits = enumerate_orbits(args.k, args.n)
    report = verify_interpolation_axioms({I: weight_function(I) for I in orbits}, args.k, args.n)
    _out(report.summary())
    return 0 if report.passed else 1


def _scan_one(lam, cap):
    from .genfun import alternating_violations

    return lam, alternating_violations(lam, cap)


def _cmd_scan(args):
    from .schurbasis import partitions_of

    cap = args.cap or default_cap()
    if args.min_weight < 0 or args.max_weight < args.min_weight:
        raise UsageError("--min-weight/--max-weight: need 0 <= min <= max")
    lams = [lam for w in range(args.min_weight, args.max_weight + 1) for lam in partitions_of(w)]
    failed = False

    def emit(lam, bad):
        nonlocal failed
        name = "Sc_" + (",".join(map(str, lam)) or "0")
        if bad:
            failed = True
            detail = "; ".join(f"Sc_{','.join(map(str, v.mu))}={v.coefficient}" for v in bad)
            _out(f"{name} cap={cap} VIOLATION {detail}")
        else:
            _out(f"{name} cap={cap} ok")
        sys.stdout.flush()

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            # map preserves input order, so lines stream in lambda order
            for lam, bad in pool.map(_scan_one, lams, [cap] * len(lams)):
                emit(lam, bad)
    else:
        for lam in lams:
            emit(*_scan_one(lam, cap))
    return 1 if failed else 0


def _cmd_cross_check(args):
    from .suites import run_suite

    try:
        results = run_suite(args.suite, args.cap, args.jobs)
    except ConfigurationError as exc:
        raise UsageError(f"--suite: {exc}") from None
    failed = [r for r in results if not r.ok]
    for r in results:
        line = f"{'PASS' if r.ok else 'FAIL'} {r.label}"
        if not r.ok and r.witness:
            line += f"  witness: {r.witness}"
        _out(line)
    _out(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def _render(value, fmt):
    from .output import render

    return render(value, fmt)


COMMANDS = {
    "weight": _cmd_weight,
    "csm-cell": _cmd_csm,
    "ssm-cell": _cmd_ssm,
    "tssm": _cmd_tssm,
    "sigma": _cmd_sigma,
    "phi": _cmd_phi,
    "verify-axioms": _cmd_axioms,
    "scan-alternating": _cmd_scan,
    "cross-check": _cmd_cross_check,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return 2
    except (ArgumentError, ConfigurationError) as exc:
        sys.stderr.write(f"ssm-kit: {exc}\n")
        return 2
    except SsmKitError as exc:
        sys.stderr.write(f"ssm-kit: internal consistency failure: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
