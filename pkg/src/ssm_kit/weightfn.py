"""Weight functions and the CSM/SSM classes of matrix Schubert cells.

``weight_function`` symmetrizes a product of linear factors over the
permutations of ``a1..ak``; ``weight_function_residue_beta0`` gets the
``b = 0`` specialization independently from a constant-term computation.
Also here: the interpolation-axiom checker, CSM classes of coordinate
arrangements, and the formulas for ordinary Schubert cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cellgeom import (
    ColumnSet,
    cell_geometry,
    closure_leq,
    enumerate_orbits,
    lambda_of_set,
    phi_assignment,
    phi_restriction,
    weight,
)
from .errors import ArgumentError, InternalConsistencyError
from .ringcore import (
    MINUS_INFINITY,
    Poly,
    TruncatedSeries,
    divide_by_linear,
    inverse_one_plus,
    poly_product,
    poly_sum,
    substitute,
    sum_of_fractions,
    symmetrize,
)
from .schurbasis import (
    RationalSeriesExpr,
    SchurSeries,
    _complete,
    alpha_names,
    beta_names,
    sss_expand,
)


def _a(u: int) -> Poly:
    return Poly.var(f"a{u}")


def _b(v: int) -> Poly:
    return Poly.var(f"b{v}")


def _z(i: int) -> Poly:
    return Poly.var(f"z{i}")


def beta_zero(p: Poly, n: int) -> Poly:
    return substitute(p, {f"b{v}": 0 for v in range(1, n + 1)})


# -- weight functions --------------------------------------------------


def weight_numerator_and_denominators(I: ColumnSet) -> tuple[Poly, list[Poly]]:
    """The summand before symmetrization, as numerator and linear denominators."""
    k, n, J, d = I.k, I.n, I.elements, I.d
    num = []
    den = []
    for u in range(1, d + 1):
        num.extend(1 + weight(v, u) for v in range(J[u - 1] + 1, n + 1))
        num.extend(weight(v, u) for v in range(1, J[u - 1]))
        for v in range(u + 1, k + 1):
            num.append(1 + _a(u) - _a(v))
            den.append(_a(u) - _a(v))
    for u in range(d + 1, k + 1):
        num.extend(weight(v, u) for v in range(1, n + 1))
    return poly_product(num), den


def _require_integral(p: Poly, what: str) -> Poly:
    for c in p.terms.values():
        if isinstance(c, Fraction):
            raise InternalConsistencyError(f"{what} has a non-integer coefficient {c}")
    return p


def weight_function(I: ColumnSet) -> Poly:
    """Symmetrized weight function of the cell ``I``; a polynomial of degree ``kn - d``."""
    num, den = weight_numerator_and_denominators(I)
    total = symmetrize(num, den, alpha_names(I.k))
    total = total.scale(Fraction(1, math.factorial(I.k - I.d)))
    return _require_integral(total, f"weight function of {I}")


def residue_numerator(I: ColumnSet) -> Poly:
    """Polynomial in ``z1..zk`` whose residue gives the ``b = 0`` weight function."""
    k, n, d = I.k, I.n, I.d
    r = k - d
    J = I.elements
    factors = [_z(a) ** (n + r - a) for a in range(1, r + 1)]
    for a in range(r + 1, k + 1):
        i = J[k - a]
        factors.append(_z(a) ** (i - 1))
        factors.append((1 + _z(a)) ** (n - i))
        factors.extend(1 + _z(b) - _z(a) for b in range(1, a))
    factors.extend(_z(a) - _z(b) for a in range(1, k + 1) for b in range(1, a))
    return poly_product(factors)


def weight_function_residue_beta0(I: ColumnSet) -> Poly:
    """``b = 0`` weight function from the residue at infinity.

    Each ``z_u`` contributes ``1/prod_v (z_u + a_v) = sum_m h_m(-a) z_u^(-k-m)``,
    so the residue picks ``prod_u h_{e_u - k + 1}(-a)`` from each monomial
    ``z^e`` of the numerator; the two sign conventions cancel.
    """
    k = I.k
    names = alpha_names(k)
    f = residue_numerator(I)
    zs = [f"z{i}" for i in range(1, k + 1)]
    parts = []
    for mono, c in f.monomials():
        term = Poly.const(c)
        for v in zs:
            m = mono.get(v, 0) - k + 1
            if m < 0:
                term = Poly.const(0)
                break
            term = term * _complete(names, m).scale((-1) ** m)
        parts.append(term)
    return poly_sum(parts)


# -- CSM / SSM classes ------------------------------------------------


@dataclass(frozen=True)
class CsmClass:
    cell: ColumnSet
    kind: str  # "csm" or "ssm"
    value: object  # Poly for csm, TruncatedSeries for ssm
    beta_zero: bool = False

    @property
    def poly(self) -> Poly:
        return self.value.poly if isinstance(self.value, TruncatedSeries) else self.value


def csm_cell(I: ColumnSet, beta0: bool = False) -> CsmClass:
    w = weight_function(I)
    if beta0:
        w = beta_zero(w, I.n)
    return CsmClass(I, "csm", w, beta0)


def codimension(I: ColumnSet) -> int:
    return cell_geometry(I).codimension


def ssm_cell(I: ColumnSet, cap: int, beta0: bool = False) -> CsmClass:
    """CSM class divided by ``prod(1 + b_v - a_u)``, through degree ``cap``."""
    codim = codimension(I)
    if cap < codim:
        raise ArgumentError(f"cap {cap} is below the codimension {codim} of {I}")
    k, n = I.k, I.n
    acc = csm_cell(I, beta0).value.truncate(cap)
    if beta0:
        for u in range(1, k + 1):
            acc = acc.mul_truncated(inverse_one_plus(-_a(u), cap, n), cap)
    else:
        for u in range(1, k + 1):
            for v in range(1, n + 1):
                acc = acc.mul_truncated(inverse_one_plus(weight(v, u), cap), cap)
    return CsmClass(I, "ssm", TruncatedSeries(acc, cap), beta0)


# -- interpolation axioms ----------------------------------------------


AXIOMS = ("I", "II", "III", "IV")


@dataclass
class AxiomReport:
    k: int
    n: int
    # (owner cell, restriction cell) -> {axiom: True / False}; missing axiom = not applicable
    results: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(all(v.values()) for v in self.results.values())

    def failures(self) -> list[tuple]:
        out = []
        for (omega, theta), checks in sorted(self.results.items(), key=lambda kv: _pair_key(kv[0])):
            for axiom in AXIOMS:
                if checks.get(axiom) is False:
                    out.append((omega, theta, axiom))
        return out

    def summary(self) -> str:
        fails = self.failures()
        lines = [f"k={self.k} n={self.n}: {len(self.results)} pairs, {len(fails)} failed checks"]
        for omega, theta, axiom in fails:
            lines.append(f"  axiom ({axiom}) fails for class of {omega} restricted to {theta}")
        return "\n".join(lines)


def _pair_key(pair):
    return (pair[0].elements, pair[1].elements)


def _restricted_tangent_factors(theta: ColumnSet) -> list[Poly]:
    geo = cell_geometry(theta)
    phi = phi_assignment(theta)
    out = []
    for v, u in sorted(geo.tangent):
        f = substitute(1 + weight(v, u), phi)
        if f != Poly.const(1):
            out.append(f)
    return out


def _restricted_normal_factors(theta: ColumnSet) -> list[Poly]:
    geo = cell_geometry(theta)
    phi = phi_assignment(theta)
    return [substitute(weight(v, u), phi) for v, u in sorted(geo.normal)]


def _divisible_by_all(p: Poly, factors: Sequence[Poly]) -> bool:
    grouped: dict[Poly, int] = {}
    for f in factors:
        grouped[f] = grouped.get(f, 0) + 1
    rest = p
    for f in sorted(grouped, key=lambda q: q.to_str()):
        rest = divide_by_linear(rest, f, grouped[f])
        if rest is None:
            return False
    return True


def check_pair(omega: ColumnSet, cls: Poly, theta: ColumnSet) -> dict:
    restricted = phi_restriction(cls, theta)
    tangent = _restricted_tangent_factors(theta)
    normal = _restricted_normal_factors(theta)
    out = {"II": _divisible_by_all(restricted, tangent)}
    if theta == omega:
        out["I"] = restricted == poly_product(tangent + normal)
    else:
        bound = sum(f.degree() for f in tangent) + sum(f.degree() for f in normal)
        deg = restricted.degree()
        out["III"] = deg is MINUS_INFINITY or deg < bound
    if not closure_leq(theta, omega):
        out["IV"] = restricted.is_zero()
    return out


def verify_interpolation_axioms(classes: Mapping[ColumnSet, Poly], k: int, n: int) -> AxiomReport:
    orbits = enumerate_orbits(k, n)
    missing = [I for I in orbits if I not in classes]
    if missing:
        raise ArgumentError(f"no class given for orbit(s) {', '.join(map(str, missing))}")
    report = AxiomReport(k, n)
    for omega in orbits:
        for theta in orbits:
            report.results[(omega, theta)] = check_pair(omega, classes[omega], theta)
    return report


def total_space_euler(k: int, n: int) -> Poly:
    return poly_product(weight(v, u) for v in range(1, n + 1) for u in range(1, k + 1))


# -- coordinate arrangements -------------------------------------------


def _as_union(region) -> list[frozenset]:
    """Normalize a region to a union of coordinate subspaces (sets of zero coordinates)."""
    if not isinstance(region, tuple) or len(region) != 2:
        raise ArgumentError(f"not a coordinate region: {region!r}")
    op, arg = region
    if op == "sub":
        try:
            return [frozenset(int(i) for i in arg)]
        except (TypeError, ValueError):
            raise ArgumentError(f"bad coordinate list {arg!r}") from None
    if op == "union":
        out = []
        for r in arg:
            out.extend(_as_union(r))
        return out
    if op == "meet":
        pieces = [_as_union(r) for r in arg]
        if not pieces:
            raise ArgumentError("empty intersection")
        acc = pieces[0]
        for nxt in pieces[1:]:
            acc = [a | b for a in acc for b in nxt]
        return acc
    raise ArgumentError(f"unknown region operation {op!r}")


def csm_coordinate_arrangement(weights: Sequence[Poly], region) -> Poly:
    """CSM class of a union/intersection of coordinate subspaces of a torus representation.

    ``region`` is built from ``("sub", [i, ...])`` (the subspace where the
    listed 0-based coordinates vanish), ``("union", [...])`` and
    ``("meet", [...])``.
    """
    weights = [w if isinstance(w, Poly) else Poly.const(w) for w in weights]
    subspaces = sorted(set(_as_union(region)), key=lambda s: sorted(s))
    for s in subspaces:
        if any(i < 0 or i >= len(weights) for i in s):
            raise ArgumentError(f"coordinate out of range in {sorted(s)}")

    def csm_subspace(zero: frozenset) -> Poly:
        return poly_product(w if i in zero else 1 + w for i, w in enumerate(weights))

    parts = []
    for size in range(1, len(subspaces) + 1):
        for combo in _combinations(subspaces, size):
            meet = frozenset().union(*combo)
            parts.append(csm_subspace(meet).scale((-1) ** (size + 1)))
    return poly_sum(parts)


def _combinations(items, size):
    import itertools

    return itertools.combinations(items, size)


# -- ordinary and matrix Schubert cells, full rank ---------------------


VARIANTS = ("matrix-csm", "grassmannian-csm", "matrix-ssm")


@dataclass(frozen=True)
class SchubertCellClasses:
    cell: ColumnSet
    variant: str
    value: object  # Poly or TruncatedSeries in a, b
    schur: SchurSeries  # generating-function route at b = 0


def _vandermonde_terms(k: int):
    nums, dens = [], []
    for u in range(1, k + 1):
        for v in range(u + 1, k + 1):
            dens.append(_a(u) - _a(v))
    return dens


def schubert_generating_expr(I: ColumnSet, variant: str) -> RationalSeriesExpr:
    k, n = I.k, I.n
    lam = lambda_of_set(I)
    pos = I.elements
    if variant == "matrix-ssm":
        nums = [(_z(j), lam[j - 1]) for j in range(1, k + 1)]
        nums += [(1 + _z(i) - _z(j), 1) for j in range(1, k + 1) for i in range(1, j)]
        dens = [(1 + _z(j), lam[j - 1]) for j in range(1, k + 1)]
        dens += [(1 + _z(i), 1) for j in range(1, k + 1) for i in range(1, j + 1)]
        return RationalSeriesExpr(num_factors=nums, den_factors=dens, nvars=k)
    nums = [(_z(j), lam[j - 1]) for j in range(1, k + 1)]
    nums += [(1 + _z(j), n - pos[k - j]) for j in range(1, k + 1)]
    if variant == "matrix-csm":
        nums += [(1 + _z(i) - _z(j), 1) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
        return RationalSeriesExpr(num_factors=nums, nvars=k)
    dens = [(1 + _z(i) - _z(j), 1) for j in range(1, k + 1) for i in range(j + 1, k + 1)]
    return RationalSeriesExpr(num_factors=nums, den_factors=dens, nvars=k)


def schubert_cell_classes(I: ColumnSet, variant: str, cap: int = 10) -> SchubertCellClasses:
    if variant not in VARIANTS:
        raise ArgumentError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}")
    if not I.is_full_rank:
        raise ArgumentError(f"{I} does not have full rank k={I.k}")
    k, n, pos = I.k, I.n, I.elements
    vand = _vandermonde_terms(k)
    slack = len(vand)
    base = []
    series_dens = []
    for u in range(1, k + 1):
        i = pos[u - 1]
        if variant == "matrix-ssm":
            series_dens.append(weight(i, u))
            for v in range(1, i):
                base.append(weight(v, u))
                series_dens.append(weight(v, u))
        else:
            base.extend(1 + weight(v, u) for v in range(i + 1, n + 1))
            base.extend(weight(v, u) for v in range(1, i))
        for v in range(u + 1, k + 1):
            if variant == "grassmannian-csm":
                series_dens.append(_a(v) - _a(u))
            else:
                base.append(1 + _a(u) - _a(v))
    expr = schubert_generating_expr(I, variant)
    if variant == "matrix-csm":
        value = symmetrize(poly_product(base), vand, alpha_names(k))
        value = _require_integral(value, f"matrix Schubert CSM of {I}")
        schur = sss_expand(expr, max(cap, value.degree()))
        return SchubertCellClasses(I, variant, value, schur)
    top = cap + slack
    num = poly_product(base, top)
    for w in series_dens:
        num = num.mul_truncated(inverse_one_plus(w, top), top)
    value = symmetrize(num, vand, alpha_names(k), cap)
    return SchubertCellClasses(I, variant, TruncatedSeries(value, cap), sss_expand(expr, cap))
