"""SSM classes of the rank loci of Hom(C^k, C^n) under GL_k x GL_n.

``Sigma^r`` is the set of maps with ``r``-dimensional kernel and
``l = n - k``.  Its SSM class is computed two ways: as a sum of tssm
functions over a Gamma-shaped set of partitions, and by inclusion-exclusion
over the classes ``Phi^s`` pushed forward from the Grassmannian
resolution.  ``Phi^s`` itself has three formulas (S operation, binomial
determinants, localization), which are checked against each other.
"""

from __future__ import annotations

import functools
import itertools
import math
from fractions import Fraction
from typing import Sequence

from .errors import ArgumentError
from .genfun import tssm
from .ringcore import (
    Poly,
    TruncatedSeries,
    inverse_one_plus,
    poly_product,
    poly_sum,
    substitute,
    sum_of_fractions,
)
from .schurbasis import (
    RationalSeriesExpr,
    SchurSeries,
    apply_rho,
    canonical_partition,
    conjugate,
    partitions_up_to,
    schur_to_poly,
    stable_sss_expand,
    sum_series,
)

METHODS = ("sss", "det", "loc")


def _check_dims(k: int, n: int):
    if k < 0 or n < k:
        raise ArgumentError(f"need 0 <= k <= n, got k={k}, n={n}")


def _a(u: int) -> Poly:
    return Poly.var(f"a{u}")


def _b(v: int) -> Poly:
    return Poly.var(f"b{v}")


def _z(i: int) -> Poly:
    return Poly.var(f"z{i}")


# -- Gamma-shaped tssm route -------------------------------------------


def gamma_partitions(r: int, l: int, cap: int) -> list[tuple]:
    """Partitions containing the box ``(r, r+l)`` but not ``(r+1, r+l+1)``, weight <= cap."""
    out = []
    for lam in partitions_up_to(cap):
        part = lambda i: lam[i - 1] if len(lam) >= i else 0
        if r >= 1 and part(r) < r + l:
            continue
        if part(r + 1) > r + l:
            continue
        out.append(lam)
    return out


def ssm_sigma_tssm(k: int, n: int, r: int, cap: int) -> tuple[SchurSeries, TruncatedSeries]:
    _check_dims(k, n)
    if not 0 <= r <= k:
        raise ArgumentError(f"need 0 <= r <= k, got r={r}, k={k}")
    l = n - k
    series = sum_series((tssm(lam, cap).series for lam in gamma_partitions(r, l, cap)), cap)
    return series, apply_rho(series, k, n, cap)


def fundamental_class_sigma(k: int, n: int, r: int) -> Poly:
    _check_dims(k, n)
    if not 0 <= r <= k:
        raise ArgumentError(f"need 0 <= r <= k, got r={r}, k={k}")
    l = n - k
    return schur_to_poly(tuple([r + l] * r), k, n)


# -- binomial determinants ---------------------------------------------


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination (Bareiss)."""
    m = [list(r) for r in rows]
    size = len(m)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for i in range(size - 1):
        if m[i][i] == 0:
            swap = next((j for j in range(i + 1, size) if m[j][i] != 0), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for j in range(i + 1, size):
            for c in range(i + 1, size):
                m[j][c] = (m[j][c] * m[i][i] - m[j][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[-1][-1]


def _padded(p: Sequence[int], s: int, what: str) -> list[int]:
    p = canonical_partition(p)
    if len(p) > s:
        raise ArgumentError(f"{what}={p} has more than s={s} parts")
    return list(p) + [0] * (s - len(p))


def d_determinant(mu: Sequence[int], nu: Sequence[int], s: int, l: int) -> int:
    mu = _padded(mu, s, "mu")
    nu = _padded(nu, s, "nu")
    rows = [
        [math.comb(mu[i] + s - 1 - i + nu[j] + s + l - 1 - j, mu[i] + s - 1 - i) for j in range(s)]
        for i in range(s)
    ]
    return integer_determinant(rows)


def disjoint_path_count(mu: Sequence[int], nu: Sequence[int], s: int, l: int) -> int:
    """Vertex-disjoint families of left/up lattice paths from ``P_i`` to ``Q_i``.

    ``P_i = (mu_i + s - i, 0)`` and ``Q_j = (0, nu_j + s + l - j)``.  Paths of
    all walkers but the last are enumerated; the last one is counted with a
    grid recursion that avoids the occupied points.
    """
    mu = _padded(mu, s, "mu")
    nu = _padded(nu, s, "nu")
    if s == 0:
        return 1
    sources = [(mu[i] + s - 1 - i, 0) for i in range(s)]
    sinks = [(0, nu[j] + s + l - 1 - j) for j in range(s)]

    def paths(start, end):
        (x0, y0), (x1, y1) = start, end
        if x1 > x0 or y1 < y0:
            return
        lefts, ups = x0 - x1, y1 - y0
        for up_steps in itertools.combinations(range(lefts + ups), ups):
            x, y = x0, y0
            pts = [(x, y)]
            ups_set = set(up_steps)
            for t in range(lefts + ups):
                if t in ups_set:
                    y += 1
                else:
                    x -= 1
                pts.append((x, y))
            yield pts

    def count_last(start, end, blocked):
        @functools.lru_cache(maxsize=None)
        def ways(x, y):
            if (x, y) in blocked:
                return 0
            if (x, y) == end:
                return 1
            total = 0
            if x > end[0]:
                total += ways(x - 1, y)
            if y < end[1]:
                total += ways(x, y + 1)
            return total

        if start[0] < end[0] or start[1] > end[1]:
            return 0
        return ways(*start)

    def rec(i, blocked):
        if i == s - 1:
            return count_last(sources[i], sinks[i], frozenset(blocked))
        total = 0
        for pts in paths(sources[i], sinks[i]):
            if blocked.isdisjoint(pts):
                total += rec(i + 1, blocked | set(pts))
        return total

    return rec(0, set())


# -- Phi classes -------------------------------------------------------


def _phi_sss(s: int, k: int, n: int, cap: int) -> TruncatedSeries:
    l = n - k
    base = RationalSeriesExpr(
        num_factors=[(_z(i), s + l) for i in range(1, s + 1)],
        den_factors=[(1 + _z(i), s + l) for i in range(1, s + 1)],
        nvars=s,
    )

    def column(j):
        return RationalSeriesExpr(
            num_factors=[(1 + _z(i) - _z(j), 1) for i in range(1, s + 1)],
            den_factors=[(1 + _z(i), 1) for i in range(1, s + 1)],
            nvars=j,
        )

    series = stable_sss_expand(base, column, cap).series
    return apply_rho(series, k, n, cap)


def phi_determinant_series(s: int, l: int, cap: int) -> SchurSeries:
    """Schur expansion of ``Phi^s`` from the binomial determinants."""
    rect = s * (s + l)
    terms: dict = {}
    budget = cap - rect
    if budget < 0:
        return SchurSeries({}, cap)
    for mu in partitions_up_to(budget, max_length=s):
        for nu in partitions_up_to(budget - sum(mu), max_length=s):
            coeff = (-1) ** (sum(mu) + sum(nu)) * d_determinant(mu, nu, s, l)
            if coeff == 0:
                continue
            head = [s + l + x for x in _padded(mu, s, "mu")]
            index = tuple(head) + conjugate(nu)
            terms[index] = terms.get(index, 0) + coeff
    return SchurSeries(terms, cap)


def _phi_det(s: int, k: int, n: int, cap: int) -> TruncatedSeries:
    return apply_rho(phi_determinant_series(s, n - k, cap), k, n, cap)


def _phi_loc(s: int, k: int, n: int, cap: int) -> TruncatedSeries:
    slack = k * (k - 1) // 2
    top = cap + slack
    terms = []
    for I in itertools.combinations(range(1, k + 1), s):
        rest = [w for w in range(1, k + 1) if w not in I]
        num = Poly.const(1)
        dens = []
        for u in I:
            for v in range(1, n + 1):
                w = _b(v) - _a(u)
                num = num.mul_truncated(w, top)
                num = num.mul_truncated(inverse_one_plus(w, top), top)
            for w_ in rest:
                num = num.mul_truncated(1 + _a(w_) - _a(u), top)
                dens.append(_a(w_) - _a(u))
        terms.append((num, dens))
    return TruncatedSeries(sum_of_fractions(terms, cap), cap)


def phi_class(s: int, k: int, n: int, cap: int, method: str = "loc") -> TruncatedSeries:
    """``Phi^s_{k,n}`` through degree ``cap``; ``Phi^0 = 1``."""
    _check_dims(k, n)
    if not 0 <= s <= k:
        raise ArgumentError(f"need 0 <= s <= k, got s={s}, k={k}")
    if method not in METHODS:
        raise ArgumentError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    return _phi_cached(s, k, n, cap, method)


@functools.lru_cache(maxsize=512)
def _phi_cached(s, k, n, cap, method):
    if s == 0:
        return TruncatedSeries(Poly.const(1), cap)
    return {"sss": _phi_sss, "det": _phi_det, "loc": _phi_loc}[method](s, k, n, cap)


def phi_top_product(s: int, l: int, cap: int) -> TruncatedSeries:
    """``prod (b_v - a_u)/(1 + b_v - a_u)`` over ``u <= s``, ``v <= s + l``."""
    acc = Poly.const(1)
    for u in range(1, s + 1):
        for v in range(1, s + l + 1):
            w = _b(v) - _a(u)
            acc = acc.mul_truncated(w, cap).mul_truncated(inverse_one_plus(w, cap), cap)
    return TruncatedSeries(acc, cap)


# -- sieve -------------------------------------------------------------


def pascal_inverse_check(size: int) -> bool:
    for s in range(size):
        for r in range(size):
            total = sum(
                math.comb(s, t) * (-1) ** (t - r) * math.comb(t, r) for t in range(size)
            )
            if total != (1 if s == r else 0):
                return False
    return True


def ssm_sigma_sieve(k: int, n: int, r: int, cap: int, method: str = "loc") -> TruncatedSeries:
    _check_dims(k, n)
    if not 0 <= r <= k:
        raise ArgumentError(f"need 0 <= r <= k, got r={r}, k={k}")
    parts = []
    for s in range(r, k + 1):
        parts.append(phi_class(s, k, n, cap, method).poly.scale((-1) ** (s - r) * math.comb(s, r)))
    return TruncatedSeries(poly_sum(parts), cap)


def ssm_sigma_closure_sieve(k: int, n: int, r: int, cap: int, method: str = "loc") -> TruncatedSeries:
    _check_dims(k, n)
    if not 0 <= r <= k:
        raise ArgumentError(f"need 0 <= r <= k, got r={r}, k={k}")
    if r == 0:
        return TruncatedSeries(Poly.const(1), cap)
    parts = []
    for s in range(r, k + 1):
        parts.append(phi_class(s, k, n, cap, method).poly.scale((-1) ** (s - r) * math.comb(s - 1, r - 1)))
    return TruncatedSeries(poly_sum(parts), cap)


def phi_from_strata(k: int, n: int, r: int, cap: int, method: str = "loc") -> dict:
    """Both forward expressions of ``Phi^r`` in terms of the sieve outputs."""
    open_sum = poly_sum(
        ssm_sigma_sieve(k, n, s, cap, method).poly.scale(math.comb(s, r)) for s in range(r, k + 1)
    )
    closed_sum = poly_sum(
        ssm_sigma_closure_sieve(k, n, s, cap, method).poly.scale(math.comb(s - 1, r - 1) if r else int(s == 0))
        for s in range(r, k + 1)
    )
    return {"open": TruncatedSeries(open_sum, cap), "closure": TruncatedSeries(closed_sum, cap)}


def supersymmetry_check(s: int, k: int, n: int, cap: int, method: str = "loc") -> bool:
    big = phi_class(s, k + 1, n + 1, cap, method).poly
    squeezed = substitute(big, {f"a{k + 1}": "t", f"b{n + 1}": "t"})
    return squeezed == phi_class(s, k, n, cap, method).poly
