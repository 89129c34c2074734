"""Schur symbols, straightening, the rho substitution and the S operation.

A *Schur symbol* ``Sc_v`` is indexed by an arbitrary integer vector ``v``;
when ``v`` is not a partition it is rewritten into the partition basis by
the straightening rules.  ``SchurSeries`` stores degree-truncated formal
sums of genuine Schur symbols.

The S operation sends a monomial ``z^v`` to ``Sc_v`` and extends linearly
to power series given as products of polynomials and inverses of
``1 + (linear form)``.  Two independent evaluators are provided:

* :func:`sss_expand`, a pruned expansion that only keeps monomials which can
  still straighten to something of degree at most the cap, and
* :func:`residue_at_infinity`, which takes a constant term in the
  ``c``-generators and converts the result back with Jacobi-Trudi.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import ArgumentError
from .ringcore import (
    Poly,
    TruncatedSeries,
    inverse_one_plus,
    poly_product,
    poly_sum,
    var_key,
)

Partition = tuple  # tuple[int, ...], weakly decreasing, positive parts


# -- partitions --------------------------------------------------------


def canonical_partition(v: Iterable[int]) -> Partition:
    """Validate a weakly decreasing nonnegative vector and drop trailing zeros."""
    v = tuple(int(x) for x in v)
    if any(x < 0 for x in v) or any(a < b for a, b in zip(v, v[1:])):
        raise ArgumentError(f"{v} is not a partition")
    while v and v[-1] == 0:
        v = v[:-1]
    return v


def is_partition(v: Sequence[int]) -> bool:
    return all(x >= 0 for x in v) and all(a >= b for a, b in zip(v, v[1:]))


def conjugate(lam: Sequence[int]) -> Partition:
    lam = canonical_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def partitions_of(weight: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``weight`` in reverse lexicographic order."""
    if weight < 0:
        return
    top = weight if max_part is None else min(weight, max_part)
    limit = weight if max_length is None else max_length

    def rec(rest, bound, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(weight, top, limit)


def partitions_up_to(cap: int, max_length: int | None = None, max_part: int | None = None) -> list[Partition]:
    out = []
    for w in range(cap + 1):
        out.extend(partitions_of(w, max_length, max_part))
    return out


def schur_sort_key(lam: Partition):
    """Degree first, then reverse lexicographic (``Sc_41`` before ``Sc_32``)."""
    return (sum(lam), tuple(-p for p in lam) + (1,))


# -- straightening -----------------------------------------------------


@functools.lru_cache(maxsize=1 << 18)
def straighten(v: tuple) -> tuple:
    """Rewrite ``Sc_v`` as ``sign * Sc_lambda``.

    Returns ``(sign, lambda)`` with ``sign`` in ``{1, -1}``, or ``(0, None)``
    when the symbol vanishes.
    """
    v = tuple(v)
    shifted = [x - i for i, x in enumerate(v)]
    if len(set(shifted)) != len(shifted):
        return (0, None)
    inversions = sum(1 for a, b in itertools.combinations(shifted, 2) if a < b)
    shifted.sort(reverse=True)
    lam = [x + i for i, x in enumerate(shifted)]
    if lam and lam[-1] < 0:
        return (0, None)
    while lam and lam[-1] == 0:
        lam.pop()
    return (-1 if inversions % 2 else 1, tuple(lam))


def straighten_by_rules(v: Sequence[int]) -> tuple:
    """Straighten by applying the two local rewriting rules literally.

    Slow; kept as an independent reference for :func:`straighten`.  Any
    adjacent pair ``(a, b)`` with ``b > a`` is rewritten, first pair first.
    """
    v = list(v)
    sign = 1
    while True:
        for i in range(len(v) - 1):
            a, b = v[i], v[i + 1]
            if b == a + 1:
                return (0, None)
            if b > a + 1:
                v[i], v[i + 1] = b - 1, a + 1
                sign = -sign
                break
        else:
            break
    while v and v[-1] == 0:
        v.pop()
    if v and v[-1] < 0:
        return (0, None)
    return (sign, tuple(v))


# -- Schur series ------------------------------------------------------


class SchurSeries:
    """Truncated formal sum of Schur functions with exact coefficients."""

    __slots__ = ("terms", "cap")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None, cap: int = 10):
        if cap is None or cap < 0:
            raise ArgumentError(f"bad degree cap {cap!r}")
        out: dict = {}
        for v, c in (terms or {}).items():
            sign, lam = straighten(tuple(v))
            if sign == 0 or sum(lam) > cap:
                continue
            out[lam] = out.get(lam, 0) + sign * c
        self.terms = {lam: _norm(c) for lam, c in out.items() if c != 0}
        self.cap = cap

    @classmethod
    def _raw(cls, terms, cap):
        s = object.__new__(cls)
        s.terms = terms
        s.cap = cap
        return s

    def coefficient(self, lam: Sequence[int]):
        return self.terms.get(canonical_partition(lam), 0)

    def items(self) -> list:
        return [(lam, self.terms[lam]) for lam in sorted(self.terms, key=schur_sort_key)]

    def degree_part(self, d: int) -> "SchurSeries":
        return SchurSeries._raw({lam: c for lam, c in self.terms.items() if sum(lam) == d}, self.cap)

    def truncate(self, cap: int) -> "SchurSeries":
        if cap > self.cap:
            raise ArgumentError(f"series only known through degree {self.cap}")
        return SchurSeries._raw({lam: c for lam, c in self.terms.items() if sum(lam) <= cap}, cap)

    def lowest_degree(self):
        return min((sum(lam) for lam in self.terms), default=None)

    def restrict(self, predicate: Callable[[Partition], bool]) -> "SchurSeries":
        return SchurSeries._raw({lam: c for lam, c in self.terms.items() if predicate(lam)}, self.cap)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, SchurSeries):
            return NotImplemented
        cap = min(self.cap, other.cap)
        out = {lam: c for lam, c in self.terms.items() if sum(lam) <= cap}
        for lam, c in other.terms.items():
            if sum(lam) <= cap:
                out[lam] = out.get(lam, 0) + c
        return SchurSeries._raw({k: _norm(v) for k, v in out.items() if v != 0}, cap)

    def __neg__(self):
        return SchurSeries._raw({lam: -c for lam, c in self.terms.items()}, self.cap)

    def __sub__(self, other):
        if not isinstance(other, SchurSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "SchurSeries":
        if c == 0:
            return SchurSeries._raw({}, self.cap)
        return SchurSeries._raw({lam: _norm(v * c) for lam, v in self.terms.items()}, self.cap)

    def __eq__(self, other):
        if not isinstance(other, SchurSeries):
            return NotImplemented
        return self.cap == other.cap and self.terms == other.terms

    def __hash__(self):
        return hash((self.cap, frozenset(self.terms.items())))

    def agrees_with(self, other: "SchurSeries", cap: int | None = None) -> bool:
        c = min(self.cap, other.cap) if cap is None else cap
        return self.truncate(c).terms == other.truncate(c).terms

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.items():
            name = "Sc_" + ("0" if not lam else ",".join(map(str, lam)))
            mag = -c if c < 0 else c
            body = name if mag == 1 else f"{mag}*{name}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    __str__ = to_str

    def __repr__(self):
        return f"SchurSeries({self.to_str()!r}, cap={self.cap})"


def sum_series(series: Iterable[SchurSeries], cap: int) -> SchurSeries:
    out: dict = {}
    for s in series:
        if s.cap < cap:
            raise ArgumentError(f"summand only known through degree {s.cap} < {cap}")
        for lam, c in s.terms.items():
            if sum(lam) <= cap:
                out[lam] = out.get(lam, 0) + c
    return SchurSeries._raw({k: _norm(v) for k, v in out.items() if v != 0}, cap)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# -- rational series expressions ---------------------------------------


def zvar(i: int) -> str:
    return f"z{i}"


def _z_index(name: str) -> int:
    block, prefix, idx = var_key(name)
    if prefix != "z" or idx < 1:
        raise ArgumentError(f"variable {name} is not one of z1, z2, ...")
    return idx


class RationalSeriesExpr:
    """``prod(num_factors) / prod(den_factors)`` read as a power series in ``z1..z<nvars>``.

    Numerator factors are ``(polynomial, exponent)`` pairs.  Denominator
    factors are ``(1 + w, exponent)`` where ``w`` is a linear form in the
    ``z`` variables without constant term; ``1/(1 + w)`` means the geometric
    series in ``-w``.
    """

    __slots__ = ("num_factors", "den_factors", "nvars")

    def __init__(self, numerator=None, den_factors=(), nvars: int | None = None, num_factors=()):
        nums = []
        if numerator is not None:
            nums.append((numerator if isinstance(numerator, Poly) else Poly.const(numerator), 1))
        for p, e in num_factors:
            nums.append((p if isinstance(p, Poly) else Poly.const(p), int(e)))
        dens = []
        for f, e in den_factors:
            if not isinstance(f, Poly):
                raise ArgumentError(f"denominator factor {f!r} is not a polynomial")
            if int(e) < 0:
                raise ArgumentError("denominator exponents must be nonnegative")
            if not f.is_linear() or f.constant_term() != 1 or f.degree() != 1:
                raise ArgumentError(f"denominator factor {f} is not of the form 1 + (linear form)")
            dens.append((f, int(e)))
        used = 0
        for p, e in nums + dens:
            if e < 0:
                raise ArgumentError("numerator exponents must be nonnegative")
            for v in p.vars:
                used = max(used, _z_index(v))
        if nvars is None:
            nvars = used
        if used > nvars:
            raise ArgumentError(f"expression uses z{used} but declares {nvars} variables")
        self.num_factors = tuple(nums)
        self.den_factors = tuple(dens)
        self.nvars = nvars

    @property
    def numerator(self) -> Poly:
        return poly_product(p ** e for p, e in self.num_factors)

    def series(self, cap: int) -> Poly:
        """Plain truncated expansion through total degree ``cap``."""
        acc = Poly.const(1)
        for p, e in self.num_factors:
            for _ in range(e):
                acc = acc.mul_truncated(p, cap)
        for f, e in self.den_factors:
            acc = acc.mul_truncated(inverse_one_plus(f - 1, cap, e), cap)
        return acc.truncate(cap)

    def times(self, other: "RationalSeriesExpr") -> "RationalSeriesExpr":
        return RationalSeriesExpr(
            num_factors=self.num_factors + other.num_factors,
            den_factors=self.den_factors + other.den_factors,
            nvars=max(self.nvars, other.nvars),
        )

    def with_nvars(self, nvars: int) -> "RationalSeriesExpr":
        return RationalSeriesExpr(num_factors=self.num_factors, den_factors=self.den_factors, nvars=nvars)

    def __repr__(self):
        num = " * ".join(f"({p})^{e}" if e != 1 else f"({p})" for p, e in self.num_factors) or "1"
        den = " * ".join(f"({p})^{e}" if e != 1 else f"({p})" for p, e in self.den_factors) or "1"
        return f"RationalSeriesExpr({num} / {den}, nvars={self.nvars})"


# -- the pruned S-operation engine -------------------------------------


class _Codec:
    """Packs exponent vectors of ``L`` variables into integers (no carries below ``cap``)."""

    def __init__(self, nvars: int, cap: int):
        self.nvars = nvars
        self.cap = cap
        self.base = cap + 2
        self.place = [self.base ** i for i in range(nvars)]

    def encode(self, e: Sequence[int]) -> int:
        return sum(x * p for x, p in zip(e, self.place))

    def decode(self, code: int) -> tuple:
        out = []
        b = self.base
        for _ in range(self.nvars):
            code, r = divmod(code, b)
            out.append(r)
        return tuple(out)


def _factor_terms(poly: Poly, codec: _Codec) -> list:
    idx = [_z_index(v) - 1 for v in poly.vars]
    if any(i >= codec.nvars for i in idx):
        raise ArgumentError(f"factor {poly} uses more than {codec.nvars} variables")
    out = []
    for e, c in poly.terms.items():
        d = sum(e)
        if d > codec.cap:
            continue
        code = sum(x * codec.place[i] for i, x in zip(idx, e))
        out.append((d, code, c))
    out.sort(key=lambda t: t[0])
    return out


def _expanded_factors(expr: RationalSeriesExpr, cap: int) -> list[Poly]:
    """Each factor as a truncated polynomial, one entry per multiplication."""
    out = []
    for p, e in expr.num_factors:
        out.extend([p.truncate(cap)] * e)
    for f, e in expr.den_factors:
        if e:
            out.append(inverse_one_plus(f - 1, cap, e))
    return out


class _Pruner:
    """Decides whether a monomial can still grow into a useful one.

    A monomial ``z^e`` is useful if some ``e' >= e`` has degree at most
    ``cap`` and ``Sc_e'`` straightens to a partition of the wanted lengths.
    ``Sc_e'`` is nonzero exactly when ``e'_i + (L - i)`` are distinct and
    nonnegative; requiring them to be at least 1 forces length exactly ``L``.
    The cheapest such ``e'`` is found greedily.
    """

    def __init__(self, codec: _Codec, exact_length: bool):
        self.codec = codec
        self.floor = 1 if exact_length else 0
        self.memo: dict[int, int | None] = {}

    def degree_if_useful(self, code: int):
        hit = self.memo.get(code, -1)
        if hit != -1:
            return hit
        e = self.codec.decode(code)
        L = len(e)
        w = [x + L - 1 - i for i, x in enumerate(e)]
        deg = sum(e)
        need = 0
        prev = None
        for x in sorted(w):
            target = max(x, self.floor)
            if prev is not None and target <= prev:
                target = prev + 1
            need += target - x
            prev = target
        out = deg if deg + need <= self.codec.cap else None
        self.memo[code] = out
        return out


def _pruned_product(factors: Sequence[Poly], codec: _Codec, pruner: _Pruner, start: dict | None = None) -> dict:
    cap = codec.cap
    acc = dict(start) if start is not None else {0: 1}
    acc = {c: v for c, v in acc.items() if pruner.degree_if_useful(c) is not None}
    useful = pruner.degree_if_useful
    for factor in factors:
        terms = _factor_terms(factor, codec)
        if not terms:
            return {}
        new: dict = {}
        get = new.get
        for code, c in acc.items():
            budget = cap - useful(code)
            for d, fcode, fc in terms:
                if d > budget:
                    break
                nc = code + fcode
                if useful(nc) is None:
                    continue
                new[nc] = get(nc, 0) + c * fc
        acc = {k: v for k, v in new.items() if v != 0}
        if not acc:
            break
    return acc


def _straighten_codes(acc: Mapping[int, object], codec: _Codec, length_filter=None) -> dict:
    out: dict = {}
    for code, c in acc.items():
        sign, lam = straighten(codec.decode(code))
        if sign == 0:
            continue
        if length_filter is not None and len(lam) != length_filter:
            continue
        out[lam] = out.get(lam, 0) + sign * c
    return out


def sss_expand(expr: RationalSeriesExpr, cap: int) -> SchurSeries:
    """Apply the S operation in ``z1..z<expr.nvars>`` through degree ``cap``."""
    if cap < 0:
        raise ArgumentError("cap must be nonnegative")
    L = expr.nvars
    codec = _Codec(L, cap)
    pruner = _Pruner(codec, exact_length=False)
    acc = _pruned_product(_expanded_factors(expr, cap), codec, pruner)
    return SchurSeries._raw(
        {k: _norm(v) for k, v in _straighten_codes(acc, codec).items() if v != 0}, cap
    )


def sss_length_stratum(expr: RationalSeriesExpr, cap: int) -> SchurSeries:
    """Only the terms of length exactly ``expr.nvars`` of :func:`sss_expand`."""
    L = expr.nvars
    codec = _Codec(L, cap)
    pruner = _Pruner(codec, exact_length=True)
    acc = _pruned_product(_expanded_factors(expr, cap), codec, pruner)
    return SchurSeries._raw(
        {k: _norm(v) for k, v in _straighten_codes(acc, codec, L).items() if v != 0}, cap
    )


class StableExpansion:
    """Result of an infinite-variable S operation: the series and where it settled."""

    __slots__ = ("series", "vars_used", "strata")

    def __init__(self, series: SchurSeries, vars_used: int, strata: dict):
        self.series = series
        self.vars_used = vars_used
        self.strata = strata


def stable_sss_expand(
    base: RationalSeriesExpr,
    column: Callable[[int], RationalSeriesExpr],
    cap: int,
    hard_limit: int | None = None,
) -> StableExpansion:
    """S operation of ``base * prod_{j > base.nvars} column(j)`` in infinitely many variables.

    ``column(j)`` must only involve ``z1..zj`` and equal 1 at ``zj = 0``.
    Then the terms of length at most ``L`` are already exact with ``L``
    variables, so the answer is the full expansion in ``base.nvars``
    variables plus, for every ``L`` beyond, the length-``L`` terms of the
    ``L``-variable expansion.  Lengths beyond ``cap`` cannot carry degree at
    most ``cap``; the loop still evaluates them until two consecutive
    lengths contribute nothing and one further guard length is also empty.
    """
    from .errors import InternalConsistencyError

    k = base.nvars
    if hard_limit is None:
        hard_limit = cap + k + 8
    total = sss_expand(base, cap)
    strata = {}
    running = base
    empty_run = 0
    L = k
    while True:
        L += 1
        if L > hard_limit:
            raise InternalConsistencyError(f"no fixpoint below {hard_limit} variables")
        running = running.times(column(L)).with_nvars(L)
        layer = sss_length_stratum(running, cap)
        strata[L] = layer
        if layer.is_zero():
            empty_run += 1
        else:
            empty_run = 0
            total = total + layer
        # two consecutive equal truncations and a guard step, counted only past cap
        if empty_run >= 2 and L > cap + 1:
            return StableExpansion(total, L - 2, strata)


# -- c-generators, rho and the residue oracle ---------------------------


@functools.lru_cache(maxsize=None)
def _elementary(names: tuple, degree: int) -> Poly:
    if degree < 0 or degree > len(names):
        return Poly.const(0)
    out = []
    for combo in itertools.combinations(names, degree):
        out.append(Poly.from_monomials([({v: 1 for v in combo}, 1)]))
    return poly_sum(out)


@functools.lru_cache(maxsize=None)
def _complete(names: tuple, degree: int) -> Poly:
    if degree < 0:
        return Poly.const(0)
    if not names:
        return Poly.const(1 if degree == 0 else 0)
    out = []
    for combo in itertools.combinations_with_replacement(names, degree):
        mono: dict = {}
        for v in combo:
            mono[v] = mono.get(v, 0) + 1
        out.append(Poly.from_monomials([(mono, 1)]))
    return poly_sum(out)


def alpha_names(k: int) -> tuple:
    return tuple(f"a{i}" for i in range(1, k + 1))


def beta_names(n: int) -> tuple:
    return tuple(f"b{i}" for i in range(1, n + 1))


@functools.lru_cache(maxsize=None)
def rho_c(i: int, k: int, n: int) -> Poly:
    """Image of ``c_i``: degree ``i`` part of ``prod(1 + b t) / prod(1 + a t)``."""
    if i < 0:
        return Poly.const(0)
    terms = []
    a, b = alpha_names(k), beta_names(n)
    for j in range(0, min(i, n) + 1):
        h = _complete(a, i - j)
        if h.is_zero():
            continue
        terms.append((_elementary(b, j) * h).scale((-1) ** (i - j)))
    return poly_sum(terms)


@functools.lru_cache(maxsize=None)
def rho_dual_c(i: int, k: int, n: int) -> Poly:
    """Degree ``i`` part of ``prod(1 - a t) / prod(1 - b t)``; conjugate generators."""
    if i < 0:
        return Poly.const(0)
    terms = []
    a, b = alpha_names(k), beta_names(n)
    for j in range(0, min(i, k) + 1):
        h = _complete(b, i - j)
        if h.is_zero():
            continue
        terms.append((_elementary(a, j) * h).scale((-1) ** j))
    return poly_sum(terms)


def _determinant(entry: Callable[[int, int], Poly], size: int) -> Poly:
    """Laplace expansion along rows, memoized on the set of used columns."""
    if size == 0:
        return Poly.const(1)

    @functools.lru_cache(maxsize=None)
    def minor(row: int, used: int) -> Poly:
        if row == size:
            return Poly.const(1)
        parts = []
        sign = 1
        for col in range(size):
            if used >> col & 1:
                continue
            e = entry(row, col)
            if not e.is_zero():
                sub = minor(row + 1, used | (1 << col))
                if not sub.is_zero():
                    parts.append((e * sub).scale(sign))
            sign = -sign
        return poly_sum(parts)

    return minor(0, 0)


@functools.lru_cache(maxsize=4096)
def schur_to_poly(lam: tuple, k: int, n: int) -> Poly:
    """``rho^{k,n}(Sc_lambda)`` by Jacobi-Trudi (or its dual when that is smaller)."""
    lam = canonical_partition(lam)
    if not lam:
        return Poly.const(1)
    conj = conjugate(lam)
    if len(conj) < len(lam):
        m = len(conj)
        return _determinant(lambda i, j: rho_dual_c(conj[i] + j - i, k, n), m)
    m = len(lam)
    return _determinant(lambda i, j: rho_c(lam[i] + j - i, k, n), m)


def rho_kernel_test(lam: Sequence[int], k: int, n: int) -> bool:
    """Whether ``Sc_lambda`` lies in the kernel of ``rho^{k,n}``."""
    lam = canonical_partition(lam)
    part = lam[k] if len(lam) > k else 0
    return part >= n + 1


def apply_rho(series: SchurSeries, k: int, n: int, cap: int | None = None) -> TruncatedSeries:
    cap = series.cap if cap is None else cap
    parts = []
    for lam, c in series.items():
        if sum(lam) > cap:
            continue
        parts.append(schur_to_poly(lam, k, n).scale(c))
    return TruncatedSeries(poly_sum(parts), cap)


def schur_expand(p: Poly, k: int, cap: int | None = None) -> SchurSeries:
    """Write a symmetric polynomial in ``a1..ak`` as ``rho^{k,0}`` of a Schur sum.

    Peels off the lexicographically largest monomial each time; raises
    :class:`ArgumentError` if ``p`` is not symmetric in the ``a`` block.
    """
    names = alpha_names(k)
    if any(v not in names for v in p.vars):
        raise ArgumentError(f"{p} is not a polynomial in {names}")
    cap = p.degree() if cap is None and not p.is_zero() else (cap or 0)
    rest = p.truncate(cap)
    out: dict = {}
    while not rest.is_zero():
        mono, c = max(rest.monomials(), key=lambda mc: _lex_key(mc[0], names))
        lam = tuple(mono.get(v, 0) for v in names)
        if not is_partition(lam):
            raise ArgumentError("polynomial is not symmetric in the alpha block")
        lam = canonical_partition(lam)
        coeff = c * (-1) ** sum(lam)
        out[lam] = coeff
        rest = rest - schur_to_poly(lam, k, 0).scale(coeff)
    return SchurSeries._raw(out, cap)


def _lex_key(mono, names):
    return (sum(mono.values()), tuple(mono.get(v, 0) for v in names))


# residue at infinity ---------------------------------------------------


def residue_c_polynomial(expr: RationalSeriesExpr, cap: int) -> dict:
    """Constant term of ``P * prod_{i<j}(1 - z_i/z_j) * prod_i C(1/z_i)``.

    ``C(x) = sum c_u x^u``.  The result is a polynomial in the ``c_u``,
    returned as ``{sorted tuple of indices: coefficient}`` with ``c_0 = 1``
    dropped.
    """
    mu = expr.nvars
    p = expr.series(cap)
    # prod_{i<j}(1 - z_i/z_j) = prod_{i<j}(z_j - z_i) / prod_j z_j^{j-1}
    vand = poly_product(
        Poly.var(zvar(j)) - Poly.var(zvar(i)) for i in range(1, mu + 1) for j in range(i + 1, mu + 1)
    )
    q = p * vand
    names = [zvar(i) for i in range(1, mu + 1)]
    out: dict = {}
    for mono, c in q.monomials():
        a = [mono.get(v, 0) - j for j, v in enumerate(names)]
        if any(x < 0 for x in a) or sum(a) > cap:
            continue
        key = tuple(sorted((x for x in a if x), reverse=True))
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v != 0}


@functools.lru_cache(maxsize=None)
def _jacobi_trudi_in_c(lam: tuple) -> dict:
    """``Sc_lambda`` as a polynomial in the ``c_u`` (same encoding as above)."""
    m = len(lam)
    out: dict = {}
    for perm in itertools.permutations(range(m)):
        idx = [lam[i] + perm[i] - i for i in range(m)]
        if any(x < 0 for x in idx):
            continue
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        key = tuple(sorted((x for x in idx if x), reverse=True))
        out[key] = out.get(key, 0) + (-1) ** inv
    return {k: v for k, v in out.items() if v != 0}


def c_polynomial_to_schur(cpoly: Mapping[tuple, object], cap: int) -> SchurSeries:
    """Triangular change of basis from ``c``-monomials to Schur functions."""
    rest = dict(cpoly)
    out: dict = {}
    while rest:
        lam = min(rest, key=lambda t: (sum(t), t))
        coeff = rest[lam]
        out[lam] = coeff
        for key, v in _jacobi_trudi_in_c(lam).items():
            nv = rest.get(key, 0) - coeff * v
            if nv:
                rest[key] = nv
            else:
                rest.pop(key, None)
    return SchurSeries._raw({k: _norm(v) for k, v in out.items() if sum(k) <= cap}, cap)


def residue_at_infinity(expr: RationalSeriesExpr, cap: int) -> SchurSeries:
    """Same answer as :func:`sss_expand`, computed by the residue route."""
    return c_polynomial_to_schur(residue_c_polynomial(expr, cap), cap)
