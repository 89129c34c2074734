"""Exact sparse multivariate polynomials and degree-truncated series.

Variables are named strings.  The canonical variable order puts the
``a`` block (alpha_1..alpha_k) first, then the ``b`` block (beta_1..beta_n),
then the ``z`` block, then anything else alphabetically.  A polynomial only
records the variables it actually uses, so two equal polynomials are
structurally identical.

Coefficients are Python ints, or :class:`fractions.Fraction` when a value is
not integral.  Nothing in here ever touches floating point.
"""

from __future__ import annotations

import functools
import itertools
import math
import operator
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import ArgumentError, ConfigurationError, InternalConsistencyError

Coeff = Union[int, Fraction]
Exponent = tuple  # tuple[int, ...] aligned with Poly.vars

_BLOCK_ORDER = {"a": 0, "b": 1, "z": 2}
_VAR_RE = re.compile(r"([A-Za-z_]+)(\d*)")


@functools.lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    """Sort key of a variable name in the canonical order."""
    m = _VAR_RE.fullmatch(name) if isinstance(name, str) else None
    if m is None:
        raise ConfigurationError(f"not a variable name: {name!r}")
    prefix, digits = m.groups()
    return (_BLOCK_ORDER.get(prefix, 3), prefix, int(digits) if digits else 0)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class _MinusInfinity:
    """Degree of the zero polynomial.  Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "-inf"

    def __reduce__(self):
        return (_MinusInfinity, ())


MINUS_INFINITY = _MinusInfinity()


class Poly:
    """Immutable sparse polynomial with exact rational coefficients.

    ``vars`` is the ordered tuple of variable names and ``terms`` maps
    exponent tuples (aligned with ``vars``) to nonzero coefficients.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str] = (), terms: Mapping[Exponent, Coeff] | None = None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ArgumentError(f"duplicate variable names in {vars}")
        for v in vars:
            var_key(v)
        terms = dict(terms or {})
        for e in terms:
            if len(e) != len(vars) or any(x < 0 for x in e):
                raise ArgumentError(f"bad exponent {e} for variables {vars}")
        self.vars, self.terms = _canonical(vars, terms)
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms):
        # trusted constructor: vars canonical and used, terms nonzero
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Coeff) -> "Poly":
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls._raw((), {(): c} if c != 0 else {})

    @classmethod
    def var(cls, name: str) -> "Poly":
        var_key(name)
        return cls._raw((name,), {(1,): 1})

    @classmethod
    def from_monomials(cls, items: Iterable[tuple[Mapping[str, int], Coeff]]) -> "Poly":
        """Build from ``(exponent mapping, coefficient)`` pairs."""
        items = list(items)
        names = sorted({v for mono, _ in items for v in mono}, key=var_key)
        pos = {v: i for i, v in enumerate(names)}
        terms: dict = {}
        for mono, c in items:
            e = [0] * len(names)
            for v, x in mono.items():
                e[pos[v]] += x
            e = tuple(e)
            terms[e] = terms.get(e, 0) + c
        return cls(names, terms)

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree; :data:`MINUS_INFINITY` for the zero polynomial."""
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self.terms)

    def low_degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return min(sum(e) for e in self.terms)

    def coefficient(self, monomial: Mapping[str, int] | None = None) -> Coeff:
        monomial = dict(monomial or {})
        if any(v not in self.vars for v, x in monomial.items() if x):
            return 0
        e = tuple(monomial.get(v, 0) for v in self.vars)
        return self.terms.get(e, 0)

    def constant_term(self) -> Coeff:
        return self.terms.get((0,) * len(self.vars), 0)

    def monomials(self) -> list[tuple[dict[str, int], Coeff]]:
        """Terms as ``(exponent mapping, coefficient)`` in display order."""
        out = []
        for e in self.sorted_exponents():
            out.append(({v: x for v, x in zip(self.vars, e) if x}, self.terms[e]))
        return out

    def sorted_exponents(self) -> list[Exponent]:
        return sorted(self.terms, key=lambda e: (sum(e), e))

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._from_terms(self.vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def truncate(self, cap: int) -> "Poly":
        if cap is None:
            return self
        return Poly._from_terms(self.vars, {e: c for e, c in self.terms.items() if sum(e) <= cap})

    def is_linear(self) -> bool:
        return all(sum(e) <= 1 for e in self.terms)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _from_terms(vars, terms):
        vars, terms = _canonical(vars, terms)
        return Poly._raw(vars, terms)

    def _aligned(self, other: "Poly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        names = tuple(sorted(set(self.vars) | set(other.vars), key=var_key))
        return names, _embed(self, names), _embed(other, names)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        names, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return Poly._from_terms(names, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.mul_truncated(other, None)

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "Poly":
        if c == 0:
            return Poly._raw((), {})
        return Poly._raw(self.vars, {e: _norm(v * c) for e, v in self.terms.items()})

    def mul_truncated(self, other: "Poly", cap: int | None) -> "Poly":
        """Product with every monomial of total degree above ``cap`` discarded."""
        if not self.terms or not other.terms:
            return Poly._raw((), {})
        names, a, b = self._aligned(other)
        if cap is None:
            bl = [(e, c) for e, c in b.items()]
            out: dict = {}
            add = operator.add
            for e1, c1 in a.items():
                for e2, c2 in bl:
                    e = tuple(map(add, e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
            return Poly._from_terms(names, out)
        bl = sorted(((sum(e), e, c) for e, c in b.items()), key=operator.itemgetter(0))
        out = {}
        add = operator.add
        for e1, c1 in a.items():
            budget = cap - sum(e1)
            if budget < 0:
                continue
            for d2, e2, c2 in bl:
                if d2 > budget:
                    break
                e = tuple(map(add, e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._from_terms(names, out)

    def __pow__(self, m: int):
        if not isinstance(m, int) or m < 0:
            return NotImplemented
        result = Poly.const(1)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            if c == 0:
                raise ArgumentError("division by zero")
            return self.scale(Fraction(1) / c)
        return NotImplemented

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- display -------------------------------------------------------

    def __repr__(self):
        return f"Poly({self.to_str()!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in self.sorted_exponents():
            c = self.terms[e]
            mono = "*".join(v if x == 1 else f"{v}^{x}" for v, x in zip(self.vars, e) if x)
            neg = c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


def _canonical(vars, terms):
    terms = {e: _norm(c) for e, c in terms.items() if c != 0}
    n = len(vars)
    order = sorted(range(n), key=lambda i: var_key(vars[i]))
    used = [i for i in order if any(e[i] for e in terms)]
    if used == list(range(n)):
        return vars, terms
    names = tuple(vars[i] for i in used)
    out: dict = {}
    for e, c in terms.items():
        ne = tuple(e[i] for i in used)
        out[ne] = out.get(ne, 0) + c
    return names, out


def _embed(p: Poly, names: tuple) -> dict:
    pos = [names.index(v) for v in p.vars]
    width = len(names)
    out = {}
    for e, c in p.terms.items():
        ne = [0] * width
        for i, x in zip(pos, e):
            ne[i] = x
        out[tuple(ne)] = c
    return out


def variables(prefix: str, count: int) -> list[Poly]:
    """``[prefix1, ..., prefix<count>]`` as polynomials."""
    return [Poly.var(f"{prefix}{i}") for i in range(1, count + 1)]


def poly_sum(polys: Iterable[Poly]) -> Poly:
    acc: dict = {}
    names: tuple = ()
    polys = list(polys)
    names = tuple(sorted({v for p in polys for v in p.vars}, key=var_key))
    for p in polys:
        for e, c in (_embed(p, names) if p.vars != names else p.terms).items():
            acc[e] = acc.get(e, 0) + c
    return Poly._from_terms(names, acc)


def poly_product(polys: Iterable[Poly], cap: int | None = None) -> Poly:
    acc = Poly.const(1)
    for p in polys:
        acc = acc.mul_truncated(p, cap)
        if not acc.terms:
            break
    return acc


# -- substitution ------------------------------------------------------


def substitute(p: Poly, assignment: Mapping[str, Union[Poly, int, Fraction, str]]) -> Poly:
    """Replace variables by polynomials; unmapped variables pass through.

    Values may be polynomials, scalars, or variable names (a renaming).
    """
    images: dict[str, Poly] = {}
    for name, target in assignment.items():
        var_key(name)
        if isinstance(target, str):
            target = Poly.var(target)
        elif isinstance(target, (int, Fraction)):
            target = Poly.const(target)
        elif not isinstance(target, Poly):
            raise ConfigurationError(f"cannot substitute {target!r} for {name}")
        images[name] = target
    active = {v: images[v] for v in p.vars if v in images and images[v] != Poly.var(v)}
    if not active or not p.terms:
        return p
    # renamings and zeros only need exponent bookkeeping
    if all(t.is_zero() or _is_single_var(t) for t in active.values()):
        return _rename(p, active)
    keep = [i for i, v in enumerate(p.vars) if v not in active]
    keep_names = tuple(p.vars[i] for i in keep)
    mapped = [(i, active[v]) for i, v in enumerate(p.vars) if v in active]
    powers: dict = {}

    def power(i, img, m):
        key = (i, m)
        if key not in powers:
            powers[key] = img ** m
        return powers[key]

    # group terms by the exponents of the mapped variables
    groups: dict = {}
    for e, c in p.terms.items():
        key = tuple(e[i] for i, _ in mapped)
        rest = tuple(e[i] for i in keep)
        groups.setdefault(key, {})
        groups[key][rest] = groups[key].get(rest, 0) + c
    out = []
    for key, rest_terms in groups.items():
        factor = Poly._from_terms(keep_names, rest_terms)
        for (i, img), m in zip(mapped, key):
            if m:
                factor = factor * power(i, img, m)
        out.append(factor)
    return poly_sum(out)


def _is_single_var(t: Poly) -> bool:
    return len(t.terms) == 1 and len(t.vars) == 1 and t.terms.get((1,)) == 1


def _rename(p: Poly, active: Mapping[str, Poly]) -> Poly:
    targets = {}
    for v, t in active.items():
        targets[v] = None if t.is_zero() else t.vars[0]
    names = tuple(sorted({targets.get(v, v) for v in p.vars if targets.get(v, v) is not None}, key=var_key))
    pos = {v: i for i, v in enumerate(names)}
    slots = []
    for v in p.vars:
        t = targets.get(v, v)
        slots.append(None if t is None else pos[t])
    out: dict = {}
    width = len(names)
    for e, c in p.terms.items():
        ne = [0] * width
        dead = False
        for s, x in zip(slots, e):
            if s is None:
                if x:
                    dead = True
                    break
            else:
                ne[s] += x
        if dead:
            continue
        ne = tuple(ne)
        out[ne] = out.get(ne, 0) + c
    return Poly._from_terms(names, out)


# -- division by linear forms -----------------------------------------


def divide_by_linear(p: Poly, linear: Poly, multiplicity: int = 1) -> Poly | None:
    """Exact quotient ``p / linear**multiplicity``, or ``None`` if it does not divide."""
    if not linear.is_linear():
        raise ArgumentError(f"divisor {linear} is not of degree <= 1")
    if linear.is_zero():
        raise ArgumentError("division by the zero polynomial")
    if multiplicity < 0:
        raise ArgumentError("multiplicity must be nonnegative")
    q = p
    for _ in range(multiplicity):
        q = _divide_once(q, linear)
        if q is None:
            return None
    return q


def _divide_once(p: Poly, linear: Poly) -> Poly | None:
    if not linear.vars:
        return p.scale(Fraction(1) / linear.constant_term())
    if p.is_zero():
        return p
    # pivot on the last variable of the linear form
    x = linear.vars[-1]
    a = linear.coefficient({x: 1})
    b = linear - Poly.var(x).scale(a)
    names = tuple(sorted(set(p.vars) | set(linear.vars), key=var_key))
    xi = names.index(x)
    terms = p.terms if p.vars == names else _embed(p, names)
    rest_names = names[:xi] + names[xi + 1:]
    slices: dict[int, dict] = {}
    for e, c in terms.items():
        slices.setdefault(e[xi], {})[e[:xi] + e[xi + 1:]] = c
    top = max(slices)
    inv_a = Fraction(1) / a
    q_slices: dict[int, Poly] = {}
    carry = Poly._raw((), {})
    # p_i = a*q_{i-1} + b*q_i
    for i in range(top, 0, -1):
        p_i = Poly._from_terms(rest_names, slices.get(i, {}))
        q_prev = (p_i - b * carry).scale(inv_a)
        q_slices[i - 1] = q_prev
        carry = q_prev
    p_0 = Poly._from_terms(rest_names, slices.get(0, {}))
    if p_0 - b * carry:
        return None
    out: dict = {}
    for i, q in q_slices.items():
        for v, coeff in zip(*_explode(q)):
            mono = dict(v)
            mono[x] = mono.get(x, 0) + i
            e = tuple(mono.get(nm, 0) for nm in names)
            out[e] = coeff
    return Poly._from_terms(names, out)


def _explode(q: Poly):
    monos, coeffs = [], []
    for e, c in q.terms.items():
        monos.append({v: k for v, k in zip(q.vars, e) if k})
        coeffs.append(c)
    return monos, coeffs


# -- graded structure --------------------------------------------------


def graded_components(p: Poly) -> tuple[list[Poly], object]:
    """Homogeneous parts indexed by degree, and ``deg(p)``.

    The zero polynomial gives ``([], MINUS_INFINITY)``.
    """
    if p.is_zero():
        return [], MINUS_INFINITY
    deg = p.degree()
    buckets: list[dict] = [dict() for _ in range(deg + 1)]
    for e, c in p.terms.items():
        buckets[sum(e)][e] = c
    return [Poly._from_terms(p.vars, b) for b in buckets], deg


# -- fractions with products of linear denominators --------------------


def _normalize_linear(f: Poly) -> tuple[Poly, Coeff]:
    """Split a linear form as ``scale * monic`` where the leading coefficient of ``monic`` is 1."""
    if not f.is_linear() or f.is_zero():
        raise ArgumentError(f"denominator factor {f} is not a nonzero linear form")
    lead = max(f.terms, key=lambda e: (sum(e), e))
    c = f.terms[lead]
    return f.scale(Fraction(1) / c), c


def sum_of_fractions(terms: Iterable[tuple[Poly, Sequence[Poly]]], cap: int | None = None) -> Poly:
    """Exact polynomial ``sum(num / prod(den_factors))``.

    Each denominator is a product of linear forms.  The sum is brought over
    the least common multiple of the denominators and divided out; a nonzero
    remainder raises :class:`InternalConsistencyError`.

    With ``cap`` given the result is only needed through degree ``cap``.
    Every numerator must then be correct through degree
    ``cap + deg(its denominator)`` and all denominator factors must be
    homogeneous, so that division respects the grading.
    """
    prepared = []
    lcm: dict[Poly, int] = {}
    for num, dens in terms:
        counts: dict[Poly, int] = {}
        scale = Fraction(1)
        for f in dens:
            monic, c = _normalize_linear(f)
            if cap is not None and monic.constant_term() != 0:
                raise ArgumentError("truncated division needs homogeneous denominators")
            counts[monic] = counts.get(monic, 0) + 1
            scale *= c
        for f, m in counts.items():
            lcm[f] = max(lcm.get(f, 0), m)
        prepared.append((num, counts, scale))
    lcm_degree = sum(lcm.values())
    order = sorted(lcm, key=lambda f: f.to_str())
    numerator_parts = []
    for num, counts, scale in prepared:
        part = num.scale(Fraction(1) / scale)
        for f in order:
            extra = lcm[f] - counts.get(f, 0)
            for _ in range(extra):
                part = part.mul_truncated(f, None if cap is None else cap + lcm_degree)
        numerator_parts.append(part)
    total = poly_sum(numerator_parts)
    if cap is not None:
        total = total.truncate(cap + lcm_degree)
    for f in order:
        q = divide_by_linear(total, f, lcm[f])
        if q is None:
            raise InternalConsistencyError(f"denominator factor {f} does not clear")
        total = q
    if cap is not None:
        total = total.truncate(cap)
    return total


def permutation_images(block: Sequence[str]):
    """All renamings of ``block`` by permutations, identity first."""
    block = list(block)
    for perm in itertools.permutations(block):
        yield dict(zip(block, perm))


def symmetrize(num: Poly, den_factors: Sequence[Poly], block: Sequence[str], cap: int | None = None) -> Poly:
    """``sum over sigma in S(block)`` of ``num(sigma) / prod(den_factors)(sigma)``.

    The result must be a polynomial; otherwise
    :class:`InternalConsistencyError` is raised.
    """
    terms = []
    for sigma in permutation_images(block):
        terms.append((substitute(num, sigma), [substitute(f, sigma) for f in den_factors]))
    return sum_of_fractions(terms, cap)


# -- truncated series --------------------------------------------------


class TruncatedSeries:
    """A power series known through total degree ``cap``."""

    __slots__ = ("poly", "cap")

    def __init__(self, poly: Poly, cap: int):
        if cap is None or cap < 0:
            raise ArgumentError(f"bad degree cap {cap!r}")
        self.poly = poly.truncate(cap)
        self.cap = cap

    def _other(self, other):
        if isinstance(other, TruncatedSeries):
            return other.poly, min(self.cap, other.cap)
        if isinstance(other, (Poly, int, Fraction)):
            return _coerce(other), self.cap
        return None, None

    def __add__(self, other):
        p, cap = self._other(other)
        if p is None:
            return NotImplemented
        return TruncatedSeries(self.poly.truncate(cap) + p, cap)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.cap)

    def __sub__(self, other):
        p, cap = self._other(other)
        if p is None:
            return NotImplemented
        return TruncatedSeries(self.poly.truncate(cap) - p, cap)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.poly.scale(other), self.cap)
        p, cap = self._other(other)
        if p is None:
            return NotImplemented
        return TruncatedSeries(self.poly.mul_truncated(p, cap), cap)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.cap == other.cap and self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        return hash((self.poly, self.cap))

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap > self.cap:
            raise ArgumentError(f"series only known through degree {self.cap}")
        return TruncatedSeries(self.poly, cap)

    def agrees_with(self, other, cap: int | None = None) -> bool:
        """Equality through ``cap`` (default: the smaller of the two caps)."""
        if isinstance(other, TruncatedSeries):
            c = min(self.cap, other.cap) if cap is None else cap
            return self.poly.truncate(c) == other.poly.truncate(c)
        c = self.cap if cap is None else cap
        return self.poly.truncate(c) == _coerce(other).truncate(c)

    def __repr__(self):
        return f"TruncatedSeries({self.poly.to_str()!r}, cap={self.cap})"


def inverse_one_plus(w: Poly, cap: int, power: int = 1) -> Poly:
    """``(1 + w)**(-power)`` through degree ``cap``; ``w`` must have no constant term."""
    if w.constant_term() != 0:
        raise ArgumentError("geometric inversion needs w(0) = 0")
    if power < 0:
        raise ArgumentError("power must be nonnegative")
    if w.is_zero() or power == 0:
        return Poly.const(1)
    low = w.low_degree()
    top = cap // low
    terms = []
    wp = Poly.const(1)
    for j in range(top + 1):
        terms.append(wp.scale(math.comb(power + j - 1, j) * (-1) ** j))
        wp = wp.mul_truncated(w, cap)
        if wp.is_zero():
            break
    return poly_sum(terms).truncate(cap)
