"""Finite root data for the simple types A-G (Bourbaki numbering).

Weights are plain tuples of integers or ``Fraction`` values in the
fundamental-weight basis; coweights are tuples in the fundamental-coweight
basis.  The Cartan matrix follows Kac: ``cartan[i][j] = <alpha_i^vee, alpha_j>``,
so column ``j`` holds the omega-coordinates of ``alpha_j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy

__all__ = [
    "ConfigurationError",
    "PreconditionError",
    "ResourceError",
    "RootSystem",
    "build_root_system",
    "parse_type",
    "nu",
    "w0_dual",
    "finite_reflect",
    "to_dominant",
    "is_dominant",
]


class ConfigurationError(ValueError):
    """Invalid Cartan type or malformed configuration."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class ResourceError(RuntimeError):
    """A computation outgrew its configured cap."""


def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _cartan(series, n):
    if series == "A":
        return _chain(n)
    if series == "B":
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if series == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if series == "D":
        a = _chain(n)
        # node n attaches to n-2, not n-1
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if series == "E":
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(1, 3), (2, 4), (3, 4)] + [(k, k + 1) for k in range(4, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return a
    if series == "F":
        a = _chain(4)
        a[2][1] = -2
        return a
    if series == "G":
        return [[2, -3], [-1, 2]]
    raise ConfigurationError(f"unknown series {series!r}")


_VALID = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root datum of a finite simple type.

    Attributes
    ----------
    series, rank
        Cartan type, e.g. ``("C", 2)``.
    cartan
        Rows ``<alpha_i^vee, alpha_j>``.
    positive_roots
        Simple-root coordinates, sorted by height.
    marks, comarks
        Coefficients of the highest root and of its coroot.
    theta
        Simple-root coordinates of the highest root.
    d
        ``(alpha_i, alpha_i) / 2`` normalised so that ``(theta, theta) = 2``.
    """

    series: str
    rank: int
    cartan: tuple
    positive_roots: tuple
    marks: tuple
    comarks: tuple
    theta: tuple
    d: tuple
    _inverse_cartan: tuple = field(repr=False)

    @property
    def name(self):
        return f"{self.series}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    @property
    def simply_laced(self):
        return self.series in "ADE"

    def simple_root(self, i):
        """omega-coordinates of ``alpha_i`` (1-based)."""
        return tuple(row[i - 1] for row in self.cartan)

    def root_to_weight(self, coeffs):
        """Convert simple-root coordinates into omega-coordinates."""
        n = self.rank
        return tuple(
            sum(self.cartan[i][j] * coeffs[j] for j in range(n)) for i in range(n)
        )

    def weight_to_root(self, weight):
        """Convert omega-coordinates into (rational) simple-root coordinates."""
        inv = self._inverse_cartan
        n = self.rank
        return tuple(
            _simplify(sum(inv[i][j] * weight[j] for j in range(n))) for i in range(n)
        )

    @property
    def theta_weight(self):
        return self.root_to_weight(self.theta)

    def pair_theta_coroot(self, weight):
        """``<weight, theta^vee>``."""
        return sum(c * w for c, w in zip(self.comarks, weight))

    def form(self, lam, mu):
        """Invariant form ``(lam, mu)`` on omega-coordinates."""
        c = self.weight_to_root(mu)
        return _simplify(sum(cj * dj * lj for cj, dj, lj in zip(c, self.d, lam)))

    def height(self, weight):
        return _simplify(sum(self.weight_to_root(weight)))

    @property
    def nu_factors(self):
        """``a_i / a_i^vee``; always 1, 2 or 3."""
        return tuple(a // c for a, c in zip(self.marks, self.comarks))

    @property
    def theta_coweight(self):
        """``theta^vee`` in the fundamental-coweight basis."""
        tw = self.theta_weight
        out = []
        for t, f in zip(tw, self.nu_factors):
            if t % f:
                raise AssertionError("theta^vee is not an integral coweight")
            out.append(t // f)
        return tuple(out)


def _simplify(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def parse_type(token):
    """Parse a type token such as ``"C2"`` or ``"E6"``."""
    token = token.strip()
    if len(token) < 2 or not token[1:].isdigit():
        raise ConfigurationError(f"malformed type token {token!r}")
    return token[0].upper(), int(token[1:])


def _positive_roots(cartan):
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    roots = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        q += 1
                    else:
                        break
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        nxt.sort()
        roots.extend(nxt)
        layer = nxt
    return tuple(roots)


@lru_cache(maxsize=None)
def build_root_system(series, rank) -> RootSystem:
    """Build the root datum of type ``series``/``rank``.

    Raises
    ------
    ConfigurationError
        If the pair is not a valid simple type.
    """
    series = str(series).upper()
    if series not in _VALID or not isinstance(rank, int) or not _VALID[series](rank):
        raise ConfigurationError(f"invalid simple type {series}{rank}")
    cartan = _cartan(series, rank)
    roots = _positive_roots(cartan)
    if len(roots) != _POSITIVE_ROOT_COUNT[series](rank):
        raise AssertionError(f"root closure failed for {series}{rank}")
    theta = max(roots, key=sum)
    marks = tuple(theta)
    # symmetrise: (alpha_i, alpha_i) up to scale, propagated along the diagram
    sq = [None] * rank
    sq[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(rank):
            if j != i and cartan[i][j] and sq[j] is None:
                # (alpha_i, alpha_j) = sq_i/2 * a_ij = sq_j/2 * a_ji
                sq[j] = sq[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    theta_sq = sum(
        theta[i] * theta[j] * sq[i] * cartan[i][j] / 2
        for i in range(rank)
        for j in range(rank)
    )
    sq = [s * 2 / theta_sq for s in sq]
    comarks = tuple(int(a * s / 2) for a, s in zip(marks, sq))
    d = tuple(_simplify(s / 2) for s in sq)
    inv = sympy.Matrix(cartan).inv()
    inverse = tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(rank))
        for i in range(rank)
    )
    return RootSystem(
        series=series,
        rank=rank,
        cartan=tuple(tuple(r) for r in cartan),
        positive_roots=roots,
        marks=marks,
        comarks=comarks,
        theta=theta,
        d=d,
        _inverse_cartan=inverse,
    )


def nu(rs: RootSystem, coweight: Sequence) -> tuple:
    """Map a coweight ``sum m_i omega_i^vee`` to ``sum m_i (a_i/a_i^vee) omega_i``."""
    return tuple(m * f for m, f in zip(coweight, rs.nu_factors))


def finite_reflect(rs: RootSystem, i: int, w: Sequence, coweight=False) -> tuple:
    """Simple reflection ``s_i`` (1-based) on a weight, or on a coweight."""
    m = w[i - 1]
    if not m:
        return tuple(w)
    if coweight:
        col = rs.cartan[i - 1]
    else:
        col = rs.simple_root(i)
    return tuple(x - m * c for x, c in zip(w, col))


def is_dominant(w):
    return all(x >= 0 for x in w)


def to_dominant(rs: RootSystem, w: Sequence, coweight=False) -> tuple:
    """Dominant representative of the Weyl orbit of ``w``."""
    w = tuple(w)
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = finite_reflect(rs, i + 1, w, coweight=coweight)
                break
        else:
            return w


def w0_dual(rs: RootSystem, coweight: Sequence) -> tuple:
    """``-w_0(coweight)`` for a dominant coweight."""
    if not is_dominant(coweight):
        raise PreconditionError(f"coweight {tuple(coweight)} is not dominant")
    return to_dominant(rs, tuple(-x for x in coweight), coweight=True)
