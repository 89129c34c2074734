"""Batch cross-checks between independent routes.

Every suite expands into small picklable tasks; each task returns
``(label, ok, witness)``.  Tasks may run in worker processes, and results
are sorted by label, so the report does not depend on scheduling.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .cellgeom import ColumnSet, enumerate_orbits, lambda_of_set
from .ringcore import Poly


@dataclass(frozen=True)
class CheckResult:
    label: str
    ok: bool
    witness: str = ""


# -- task bodies (module level so they pickle) ---------------------------


def _task_residue(k, n, elements, cap):
    from .weightfn import beta_zero, weight_function, weight_function_residue_beta0

    I = ColumnSet(k, n, elements)
    lhs = beta_zero(weight_function(I), n)
    rhs = weight_function_residue_beta0(I)
    return lhs == rhs, "" if lhs == rhs else f"symmetrized {lhs} vs residue {rhs}"


def _task_genfun(k, n, elements, cap):
    from .genfun import genfun_matches_weightfn

    r = genfun_matches_weightfn(ColumnSet(k, n, elements), cap)
    bad = [kind for kind, ok in r.items() if not ok]
    return not bad, "" if not bad else f"{', '.join(bad)} route differs"


def _task_lambda(k, n, elements, cap):
    from .genfun import ssm_orbit_tssm_expansion
    from .weightfn import codimension, ssm_cell

    I = ColumnSet(k, n, elements)
    _, via_tssm = ssm_orbit_tssm_expansion(I, cap)
    direct = ssm_cell(I, cap, beta0=True).value.poly if codimension(I) <= cap else Poly.const(0)
    ok = via_tssm.poly == direct
    return ok, "" if ok else f"tssm sum {via_tssm.poly} vs direct {direct}"


def _task_sieve(k, n, r, cap):
    from .a2pp import ssm_sigma_sieve, ssm_sigma_tssm

    a = ssm_sigma_tssm(k, n, r, cap)[1]
    b = ssm_sigma_sieve(k, n, r, cap)
    return a == b, "" if a == b else f"gamma route {a.poly} vs sieve {b.poly}"


def _task_phi(s, k, n, cap):
    from .a2pp import METHODS, phi_class

    values = {m: phi_class(s, k, n, cap, m).poly for m in METHODS}
    ok = len(set(values.values())) == 1
    return ok, "" if ok else "; ".join(f"{m}: {v}" for m, v in values.items())


def _task_oracle(seed, cap):
    from .schurbasis import RationalSeriesExpr, residue_at_infinity, sss_expand

    expr = random_series_expr(random.Random(seed))
    a, b = sss_expand(expr, cap), residue_at_infinity(expr, cap)
    return a == b, "" if a == b else f"{expr}: engine {a} vs residue {b}"


def _task_axioms(k, n, cap):
    from .weightfn import verify_interpolation_axioms, weight_function

    report = verify_interpolation_axioms({I: weight_function(I) for I in enumerate_orbits(k, n)}, k, n)
    return report.passed, "" if report.passed else report.summary()


def _task_supersymmetry(s, k, n, cap):
    from .a2pp import supersymmetry_check

    ok = supersymmetry_check(s, k, n, cap)
    return ok, "" if ok else "restriction of the larger class differs"


def _task_alternating(lam, cap):
    from .genfun import alternating_violations

    bad = alternating_violations(lam, cap)
    return not bad, "; ".join(f"Sc_{v.mu}: {v.coefficient}" for v in bad)


def _task_d_positive(s, l, cap):
    from .a2pp import d_determinant, disjoint_path_count
    from .schurbasis import partitions_up_to

    for mu in partitions_up_to(6, max_length=s):
        for nu in partitions_up_to(6, max_length=s):
            d = d_determinant(mu, nu, s, l)
            if d < 0:
                return False, f"D({mu},{nu}) = {d}"
            if s <= 2 and sum(mu) <= 4 and sum(nu) <= 4:
                paths = disjoint_path_count(mu, nu, s, l)
                if paths != d:
                    return False, f"D({mu},{nu}) = {d} but {paths} path families"
    return True, ""


def _task_schubert_positivity(k, n, elements, cap):
    from .weightfn import schubert_cell_classes

    I = ColumnSet(k, n, elements)
    c = schubert_cell_classes(I, "grassmannian-csm", k * (n - k))
    bad = [(lam, v) for lam, v in c.schur.items() if len(lam) <= k and (not lam or lam[0] <= n - k) and v < 0]
    return not bad, "; ".join(f"Sc_{lam}: {v}" for lam, v in bad)


def _task_identities(which, cap):
    from .a2pp import fundamental_class_sigma, ssm_sigma_sieve, ssm_sigma_tssm
    from .genfun import check_sum_to_one, raising_shift_check

    if which == "sum-to-one":
        return check_sum_to_one(min(cap, 5)), ""
    if which == "raising":
        return raising_shift_check((3, 1), 2, 5, 2), ""
    k, n, r = which
    ok = True
    for series in (ssm_sigma_tssm(k, n, r, cap)[1], ssm_sigma_sieve(k, n, r, cap)):
        low = series.poly.homogeneous_part(series.poly.low_degree())
        ok = ok and low == fundamental_class_sigma(k, n, r)
    return ok, "" if ok else "lowest part is not the rank-locus fundamental class"


def random_series_expr(rng: random.Random):
    from .schurbasis import RationalSeriesExpr

    mu = rng.randint(1, 3)
    z = [Poly.var(f"z{i}") for i in range(1, mu + 1)]
    num = Poly.const(0)
    for _ in range(rng.randint(1, 3)):
        m = Poly.const(rng.randint(-3, 3))
        for v in z:
            m = m * v ** rng.randint(0, 2)
        num = num + m
    dens = []
    for _ in range(rng.randint(0, 2)):
        dens.append((1 + rng.choice(z) * rng.choice([1, -1, 2]), rng.randint(0, 2)))
    return RationalSeriesExpr(num, dens, mu)


# -- suite definitions -------------------------------------------------


def _cells(kmax, nmax, full_rank_only=False, kmin=0):
    for k in range(kmin, kmax + 1):
        for n in range(max(k, 1), nmax + 1):
            for I in enumerate_orbits(k, n):
                if full_rank_only and not I.is_full_rank:
                    continue
                yield I


def _residue_tasks(cap):
    return [(f"residue k={I.k} n={I.n} I={I}", _task_residue, (I.k, I.n, I.elements, cap)) for I in _cells(3, 4)]


def _genfun_tasks(cap):
    return [(f"genfun k={I.k} n={I.n} I={I}", _task_genfun, (I.k, I.n, I.elements, cap)) for I in _cells(3, 4)]


def _lambda_tasks(cap):
    return [
        (f"lambda-sum n={I.n} I={I}", _task_lambda, (I.k, I.n, I.elements, cap))
        for I in _cells(2, 4, kmin=2)
    ]


def _sieve_tasks(cap):
    out = []
    for k in range(0, 3):
        for n in range(max(k, 1), 4):
            for r in range(k + 1):
                out.append((f"sieve k={k} n={n} r={r}", _task_sieve, (k, n, r, cap)))
    return out


def _phi_tasks(cap):
    out = []
    for k in range(1, 4):
        for n in range(k, 5):
            for s in range(1, k + 1):
                out.append((f"phi s={s} k={k} n={n}", _task_phi, (s, k, n, cap)))
    return out


def _oracle_tasks(cap):
    return [(f"oracle seed={seed:02d}", _task_oracle, (seed, min(cap, 6))) for seed in range(50)]


def _axiom_tasks(cap):
    return [(f"axioms k={k} n={n}", _task_axioms, (k, n, cap)) for k, n in ((2, 3), (3, 3))]


def _supersymmetry_tasks(cap):
    out = []
    for k in range(1, 3):
        for n in range(k, 4):
            for s in range(1, k + 1):
                out.append((f"supersymmetry s={s} k={k} n={n}", _task_supersymmetry, (s, k, n, min(cap, 5))))
    return out


def _positivity_tasks(cap):
    out = []
    for s in range(1, 4):
        for l in range(0, 3):
            out.append((f"binomial-det s={s} l={l}", _task_d_positive, (s, l, cap)))
    for I in _cells(2, 5, full_rank_only=True, kmin=1):
        out.append((f"schubert-positivity k={I.k} n={I.n} I={I}", _task_schubert_positivity, (I.k, I.n, I.elements, cap)))
    return out


def _alternating_tasks(cap):
    from .schurbasis import partitions_up_to

    return [(f"alternating lambda={lam}", _task_alternating, (lam, cap)) for lam in partitions_up_to(5)]


def _identity_tasks(cap):
    out = [("identity sum-to-one", _task_identities, ("sum-to-one", cap))]
    out.append(("identity raising-shift", _task_identities, ("raising", cap)))
    for k in range(0, 3):
        for n in range(max(k, 1), 4):
            for r in range(k + 1):
                out.append((f"identity lowest-part k={k} n={n} r={r}", _task_identities, ((k, n, r), cap)))
    return out


SUITES: dict[str, tuple[Callable, int]] = {
    # name: (task builder, default cap)
    "residue": (_residue_tasks, 8),
    "genfun": (_genfun_tasks, 8),
    "lambda": (_lambda_tasks, 7),
    "sieve": (_sieve_tasks, 6),
    "phi": (_phi_tasks, 6),
    "oracle": (_oracle_tasks, 6),
    "axioms": (_axiom_tasks, 6),
    "supersymmetry": (_supersymmetry_tasks, 5),
    "positivity": (_positivity_tasks, 6),
    "alternating": (_alternating_tasks, 9),
    "identities": (_identity_tasks, 6),
}


def _run(task):
    label, fn, args = task
    ok, witness = fn(*args)
    return CheckResult(label, bool(ok), witness)


def run_suite(name: str, cap: int | None = None, jobs: int = 1) -> list[CheckResult]:
    from .errors import ConfigurationError

    names = sorted(SUITES) if name == "all" else [name]
    tasks = []
    for nm in names:
        if nm not in SUITES:
            raise ConfigurationError(f"unknown suite {nm!r}; choose from all, {', '.join(sorted(SUITES))}")
        builder, default_cap = SUITES[nm]
        tasks.extend(builder(default_cap if cap is None else cap))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, tasks, chunksize=1))
    else:
        results = [_run(t) for t in tasks]
    return sorted(results, key=lambda r: r.label)
