"""Generating-function route to CSM/SSM classes and the tssm building blocks.

``tssm(lam)`` is the S operation in infinitely many variables of

    prod_i (z_i/(1+z_i))^lam_i * prod_j prod_{i<=j} (1+z_i-z_j)/(1+z_i).

It is computed exactly through a degree cap: the terms of length ``L``
only depend on the first ``L`` variables, so each length is evaluated once
with that many variables.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cellgeom import ColumnSet, enumerate_orbits, lambda_of_set, set_of_lambda
from .errors import ArgumentError
from .ringcore import Poly, TruncatedSeries
from .schurbasis import (
    RationalSeriesExpr,
    SchurSeries,
    apply_rho,
    canonical_partition,
    partitions_up_to,
    sss_expand,
    stable_sss_expand,
    sum_series,
)
from .weightfn import codimension, csm_cell, ssm_cell


def _z(i: int) -> Poly:
    return Poly.var(f"z{i}")


def _check_weakly_decreasing(lam: Sequence[int], k: int | None = None) -> tuple:
    lam = tuple(int(x) for x in lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(x < 0 for x in lam):
        raise ArgumentError(f"{lam} is not weakly decreasing and nonnegative")
    if k is not None and len(lam) != k:
        raise ArgumentError(f"expected {k} entries, got {lam}")
    return lam


INFINITY = "inf"


def fcsm_expr(lam: Sequence[int], k: int, n: int) -> RationalSeriesExpr:
    """CSM generating function of the cell with partition vector ``lam`` in ``Hom(C^k, C^n)``."""
    lam = _check_weakly_decreasing(lam, k)
    nums = [(_z(i), lam[i - 1]) for i in range(1, k + 1)]
    nums += [(1 + _z(i), max(0, n - k - 1 - lam[i - 1] + i)) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            if lam[j - 1] - j <= n - k - 1:
                nums.append((1 + _z(i) - _z(j), 1))
    return RationalSeriesExpr(num_factors=nums, nvars=k)


def fssm_expr(lam: Sequence[int], k: int, n) -> RationalSeriesExpr:
    """SSM generating function; ``n = INFINITY`` gives the stable closed form."""
    lam = _check_weakly_decreasing(lam, k)
    if n == INFINITY or n is None:
        nums = [(_z(i), lam[i - 1]) for i in range(1, k + 1)]
        nums += [(1 + _z(i) - _z(j), 1) for j in range(1, k + 1) for i in range(1, j)]
        dens = [(1 + _z(i), lam[i - 1] + (k - i + 1)) for i in range(1, k + 1)]
        return RationalSeriesExpr(num_factors=nums, den_factors=dens, nvars=k)
    base = fcsm_expr(lam, k, n)
    dens = [(1 + _z(i), n) for i in range(1, k + 1)]
    return RationalSeriesExpr(num_factors=base.num_factors, den_factors=dens, nvars=k)


def class_via_genfun(lam: Sequence[int], k: int, n: int, kind: str, cap: int) -> TruncatedSeries:
    """``rho^{k,0}`` of the S operation applied to the generating function."""
    series = schur_series_via_genfun(lam, k, n, kind, cap)
    return apply_rho(series, k, 0, cap)


def schur_series_via_genfun(lam: Sequence[int], k: int, n: int, kind: str, cap: int) -> SchurSeries:
    lam = _check_weakly_decreasing(lam, k)
    set_of_lambda(lam, k, n)  # compatibility check
    if kind == "csm":
        expr = fcsm_expr(lam, k, n)
    elif kind == "ssm":
        expr = fssm_expr(lam, k, n)
    else:
        raise ArgumentError(f"kind must be 'csm' or 'ssm', got {kind!r}")
    return sss_expand(expr, cap)


# -- tssm --------------------------------------------------------------


@dataclass(frozen=True)
class TssmFunction:
    lam: tuple
    cap: int
    series: SchurSeries
    vars_used: int


def _tssm_base(lam: tuple) -> RationalSeriesExpr:
    k = len(lam)
    nums = [(_z(i), lam[i - 1]) for i in range(1, k + 1)]
    nums += [(1 + _z(i) - _z(j), 1) for j in range(1, k + 1) for i in range(1, j)]
    dens = [(1 + _z(i), lam[i - 1] + (k - i + 1)) for i in range(1, k + 1)]
    return RationalSeriesExpr(num_factors=nums, den_factors=dens, nvars=k)


@functools.lru_cache(maxsize=None)
def _tssm_column(j: int) -> RationalSeriesExpr:
    nums = [(1 + _z(i) - _z(j), 1) for i in range(1, j)]
    dens = [(1 + _z(i), 1) for i in range(1, j + 1)]
    return RationalSeriesExpr(num_factors=nums, den_factors=dens, nvars=j)


@functools.lru_cache(maxsize=256)
def _tssm_cached(lam: tuple, cap: int) -> TssmFunction:
    result = stable_sss_expand(_tssm_base(lam), _tssm_column, cap, hard_limit=cap + len(lam) + 8)
    return TssmFunction(lam, cap, result.series, result.vars_used)


def tssm(lam: Sequence[int], cap: int) -> TssmFunction:
    lam = canonical_partition(lam)
    if cap < 0:
        raise ArgumentError("cap must be nonnegative")
    return _tssm_cached(lam, cap)


def tssm_finite(lam: Sequence[int], nvars: int, cap: int) -> SchurSeries:
    """Full S operation with exactly ``nvars`` variables (no stratification)."""
    lam = canonical_partition(lam)
    if nvars < len(lam):
        raise ArgumentError("need at least as many variables as parts")
    expr = _tssm_base(lam).with_nvars(len(lam))
    for j in range(len(lam) + 1, nvars + 1):
        expr = expr.times(_tssm_column(j)).with_nvars(j)
    return sss_expand(expr.with_nvars(nvars), cap)


# -- Lambda(I) expansion -----------------------------------------------


def lambda_set(I: ColumnSet, cap: int) -> list[tuple]:
    """Partitions of ``Lambda(I)`` with weight at most ``cap``."""
    k, n, d = I.k, I.n, I.d
    lam = lambda_of_set(I)
    r = k - d
    fixed = lam[r:]
    fixed_weight = sum(fixed)
    out = []

    def rec(prefix, lower, budget):
        # parts are chosen from the last free slot backwards
        if len(prefix) == r:
            out.append(canonical_partition(tuple(reversed(prefix)) + fixed))
            return
        x = lower
        while x <= budget:
            rec(prefix + [x], x, budget - x)
            x += 1

    start = max(n - d, fixed[0] if fixed else 0)
    rec([], start, cap - fixed_weight)
    return sorted(out, key=lambda p: (sum(p), p))


def ssm_orbit_tssm_expansion(I: ColumnSet, cap: int) -> tuple[list[tuple], TruncatedSeries]:
    parts = lambda_set(I, cap)
    total = sum_series((tssm(mu, cap).series for mu in parts), cap)
    return parts, apply_rho(total, I.k, 0, cap)


def check_sum_to_one(cap: int) -> bool:
    total = sum_series((tssm(lam, cap).series for lam in partitions_up_to(cap)), cap)
    return total == SchurSeries({(): 1}, cap)


# -- alternating-sign scan ---------------------------------------------


@dataclass(frozen=True)
class SignViolation:
    lam: tuple
    mu: tuple
    coefficient: object


def alternating_violations(lam: Sequence[int], cap: int) -> list[SignViolation]:
    t = tssm(lam, cap)
    base = sum(t.lam)
    out = []
    for mu, c in t.series.items():
        if (-1) ** (sum(mu) - base) * c < 0:
            out.append(SignViolation(t.lam, mu, c))
    return out


def scan_alternating_signs(max_weight: int, cap: int) -> Iterator[tuple[tuple, list[SignViolation]]]:
    """One ``(lambda, violations)`` pair per partition of weight at most ``max_weight``."""
    for lam in partitions_up_to(max_weight):
        yield lam, alternating_violations(lam, cap)


# -- raising operator --------------------------------------------------


def raising_shift_check(lam: Sequence[int], k: int, n_start: int, steps: int) -> bool:
    """Adding ``1`` to every part and to ``n`` shifts every Schur index by ``(1^k)``."""
    lam = _check_weakly_decreasing(lam, k)
    if n_start < k + (lam[0] if lam else 0):
        raise ArgumentError(f"need n >= k + lambda_1 = {k + (lam[0] if lam else 0)}, got {n_start}")
    base = csm_schur_expansion(lam, k, n_start)
    for t in range(1, steps + 1):
        shifted = tuple(x + t for x in lam)
        got = csm_schur_expansion(shifted, k, n_start + t)
        expected = {tuple(list(mu) + [0] * (k - len(mu))): c for mu, c in base.terms.items()}
        expected = SchurSeries({tuple(x + t for x in mu): c for mu, c in expected.items()}, got.cap)
        if got != expected:
            return False
    return True


def csm_schur_expansion(lam: Sequence[int], k: int, n: int) -> SchurSeries:
    """Exact (finite) Schur expansion of the ``b = 0`` CSM class."""
    expr = fcsm_expr(lam, k, n)
    top = sum(e * p.degree() for p, e in expr.num_factors)
    return sss_expand(expr, top)


def genfun_matches_weightfn(I: ColumnSet, cap: int) -> dict:
    """Compare both routes for one cell; returns ``{"csm": bool, "ssm": bool}``."""
    lam = lambda_of_set(I)
    csm_direct = csm_cell(I, beta0=True).value.truncate(cap)
    csm_gen = class_via_genfun(lam, I.k, I.n, "csm", cap).poly
    out = {"csm": csm_direct == csm_gen}
    if cap >= codimension(I):
        ssm_direct = ssm_cell(I, cap, beta0=True).value
        ssm_gen = class_via_genfun(lam, I.k, I.n, "ssm", cap)
        out["ssm"] = ssm_direct == ssm_gen
    return out
