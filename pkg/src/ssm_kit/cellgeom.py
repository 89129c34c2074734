"""Matrix Schubert cells in Hom(C^k, C^n): orbits, partitions, tangent data.

A cell is named by a column set ``J = {j_1 < ... < j_d}`` with ``d <= k``;
its representative has a 1 in row ``j_u`` of column ``u``.  Matrix
positions are ``(v, u)`` with row ``v`` in ``1..n`` and column ``u`` in
``1..k``; the weight of position ``(v, u)`` is ``b_v - a_u``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ArgumentError
from .ringcore import Poly, substitute


@dataclass(frozen=True, order=True)
class ColumnSet:
    """A matrix Schubert cell of ``Hom(C^k, C^n)``."""

    k: int
    n: int
    elements: tuple

    def __post_init__(self):
        els = tuple(int(x) for x in self.elements)
        object.__setattr__(self, "elements", els)
        if self.k < 0 or self.n < 0:
            raise ArgumentError("dimensions must be nonnegative")
        if self.k > self.n:
            raise ArgumentError(f"need k <= n, got k={self.k}, n={self.n}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ArgumentError(f"column set {els} is not strictly increasing")
        if els and (els[0] < 1 or els[-1] > self.n):
            raise ArgumentError(f"column set {els} is not inside 1..{self.n}")
        if len(els) > self.k:
            raise ArgumentError(f"column set {els} has more than k={self.k} elements")

    @property
    def d(self) -> int:
        return len(self.elements)

    @property
    def is_full_rank(self) -> bool:
        return self.d == self.k

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def enumerate_orbits(k: int, n: int) -> list[ColumnSet]:
    """All cells, largest sets first, then lexicographic."""
    if k < 0 or n < 0 or k > n:
        raise ArgumentError(f"need 0 <= k <= n, got k={k}, n={n}")
    out = []
    for d in range(k, -1, -1):
        for combo in itertools.combinations(range(1, n + 1), d):
            out.append(ColumnSet(k, n, combo))
    return out


def lambda_of_set(I: ColumnSet) -> tuple:
    """Weakly decreasing length-``k`` vector; missing elements are padded by ``n+1, n+2, ...``."""
    k, n = I.k, I.n
    padded = list(I.elements) + [n + a for a in range(1, k - I.d + 1)]
    return tuple(padded[k - a] - (k + 1 - a) for a in range(1, k + 1))


def set_of_lambda(lam: Iterable[int], k: int, n: int) -> ColumnSet:
    lam = tuple(int(x) for x in lam)
    if len(lam) != k:
        raise ArgumentError(f"expected a vector of length k={k}, got {lam}")
    if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ArgumentError(f"{lam} is not weakly decreasing and nonnegative")
    positions = [lam[k - a] + a for a in range(1, k + 1)]
    above = [p for p in positions if p > n]
    for q, p in enumerate(above, start=1):
        if p != n + q:
            raise ArgumentError(
                f"{lam} is not compatible with n={n}: position {p} leaves a gap above {n + q - 1}"
            )
    if k > n:
        raise ArgumentError(f"need k <= n, got k={k}, n={n}")
    return ColumnSet(k, n, tuple(p for p in positions if p <= n))


@dataclass(frozen=True)
class CellGeometry:
    cell: ColumnSet
    A0: frozenset
    A1: frozenset
    A2: frozenset
    A3: frozenset
    A4: frozenset
    tangent: frozenset
    normal: frozenset

    @property
    def dimension(self) -> int:
        return len(self.tangent)

    @property
    def codimension(self) -> int:
        return len(self.normal)

    def representative(self) -> tuple:
        """0/1 matrix with ``n`` rows and ``k`` columns."""
        I = self.cell
        rows = [[0] * I.k for _ in range(I.n)]
        for u, j in enumerate(I.elements, start=1):
            rows[j - 1][u - 1] = 1
        return tuple(tuple(r) for r in rows)

    def pattern(self) -> str:
        """Rows of ``1`` (pivot), ``*`` (other tangent) and ``.`` (normal)."""
        lines = []
        for v in range(1, self.cell.n + 1):
            line = []
            for u in range(1, self.cell.k + 1):
                if (v, u) in self.A0:
                    line.append("1")
                elif (v, u) in self.tangent:
                    line.append("*")
                else:
                    line.append(".")
            lines.append(" ".join(line))
        return "\n".join(lines)


def cell_geometry(I: ColumnSet) -> CellGeometry:
    k, n, J, d = I.k, I.n, I.elements, I.d
    positions = [(v, u) for v in range(1, n + 1) for u in range(1, k + 1)]
    A0 = frozenset((v, u) for v, u in positions if u <= d and v == J[u - 1])
    A1 = frozenset((v, u) for v, u in positions if u <= d and v < J[u - 1])
    A2 = frozenset((v, u) for v, u in positions if u <= d and v > J[u - 1])
    A3 = frozenset((v, u) for v, u in positions if u > d)
    A4 = frozenset((v, u) for v, u in positions if any(v == J[w - 1] and u > w for w in range(1, d + 1)))
    tangent = A0 | A2 | A4
    normal = frozenset(positions) - tangent
    return CellGeometry(I, A0, A1, A2, A3, A4, tangent, normal)


def rank_vector(I: ColumnSet) -> tuple:
    """``|I ∩ {1..r}|`` for ``r = 1..n``: the ranks of the top row blocks."""
    return tuple(sum(1 for j in I.elements if j <= r) for r in range(1, I.n + 1))


def closure_leq(J: ColumnSet, I: ColumnSet) -> bool:
    """Whether the cell of ``J`` lies in the closure of the cell of ``I``."""
    if (J.k, J.n) != (I.k, I.n):
        raise ArgumentError(f"cells live in different spaces: {(J.k, J.n)} vs {(I.k, I.n)}")
    return all(a <= b for a, b in zip(rank_vector(J), rank_vector(I)))


def phi_assignment(J: ColumnSet) -> dict:
    """``a_u -> b_{j_u}`` for ``u <= d``; everything else fixed."""
    return {f"a{u}": f"b{j}" for u, j in enumerate(J.elements, start=1)}


def phi_restriction(p: Poly, J: ColumnSet) -> Poly:
    """Restriction of a class to the representative point of the cell ``J``."""
    return substitute(p, phi_assignment(J))


def weight(v: int, u: int) -> Poly:
    return Poly.var(f"b{v}") - Poly.var(f"a{u}")


def euler_class(positions: Iterable[tuple]) -> Poly:
    out = Poly.const(1)
    for v, u in sorted(positions):
        out = out * weight(v, u)
    return out


def total_chern_factors(positions: Iterable[tuple]) -> list[Poly]:
    return [1 + weight(v, u) for v, u in sorted(positions)]
