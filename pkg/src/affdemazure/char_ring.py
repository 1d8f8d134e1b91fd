"""Characters in Z[P-hat], Demazure operators and the g-restriction.

A :class:`Character` is an immutable sparse map from :class:`AffineWeight` to
nonzero integers.  Demazure characters of ``D(level, coweight)`` are built by
running the operators ``D_i`` along the reduced word of the translation.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .affine_weyl import (
    AffineWeight,
    affine_root,
    apply_element,
    apply_sigma,
    decompose_translation,
    fundamental_affine_weight,
    pairing,
)
from .root_data import (
    PreconditionError,
    ResourceError,
    RootSystem,
    finite_reflect,
    is_dominant,
)

__all__ = [
    "Character",
    "GradedClassicalCharacter",
    "IntegrityError",
    "demazure_step",
    "demazure_character",
    "dimension",
    "extremal_weight",
    "restrict_graded",
    "classical_product",
    "decompose_g",
    "finite_weyl_character",
    "format_fraction",
]


class IntegrityError(ValueError):
    """Input to :func:`decompose_g` is not the character of a g-module."""


def format_fraction(x):
    """``"3"`` for integers, ``"-1/4"`` otherwise."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _weight_sort_key(lam):
    return (-Fraction(lam.delta), tuple(-Fraction(c) for c in lam.classical), lam.level)


class Character:
    """Finitely supported integer combination of ``e^lam``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[AffineWeight, int] = ()):
        clean = {}
        for lam, m in dict(terms).items():
            if m:
                clean[AffineWeight(*lam)] = m
        self._terms = clean

    @classmethod
    def monomial(cls, lam, mult=1):
        return cls({lam: mult})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __getitem__(self, lam):
        return self._terms.get(lam, 0)

    def __eq__(self, other):
        return isinstance(other, Character) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = defaultdict(int, self._terms)
        for lam, m in other.items():
            out[lam] += m
        return Character(out)

    def __sub__(self, other):
        out = defaultdict(int, self._terms)
        for lam, m in other.items():
            out[lam] -= m
        return Character(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return Character({k: other * v for k, v in self._terms.items()})
        out = defaultdict(int)
        for a, m in self._terms.items():
            for b, k in other.items():
                out[a + b] += m * k
        return Character(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Character({len(self)} terms, dim={dimension(self)})"

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: _weight_sort_key(kv[0]))

    def levels(self):
        return {lam.level for lam in self._terms}

    def to_records(self):
        """One line per term: level, delta, classical coordinates, multiplicity."""
        lines = []
        for lam, m in self.sorted_items():
            cl = ",".join(format_fraction(c) for c in lam.classical)
            lines.append(
                f"level={format_fraction(lam.level)} delta={format_fraction(lam.delta)} "
                f"classical={cl} mult={m}"
            )
        return "\n".join(lines)


def dimension(chi: Character) -> int:
    return sum(m for _, m in chi.items())


def _step_terms(rs, i, terms):
    root = affine_root(rs, i)
    rc = root.classical
    rd = root.delta
    out = defaultdict(int)
    for lam, mult in terms.items():
        m = pairing(rs, i, lam)
        if m == -1:
            continue
        cl, lev, de = lam.classical, lam.level, lam.delta
        if m >= 0:
            # lam, lam - alpha, ..., s_i(lam)
            out[lam] += mult
            for k in range(1, m + 1):
                out[AffineWeight(tuple(c - k * r for c, r in zip(cl, rc)), lev, de - k * rd)] += mult
        else:
            # -(lam + alpha + ... + s_i(lam) - alpha)
            for k in range(1, -m):
                out[AffineWeight(tuple(c + k * r for c, r in zip(cl, rc)), lev, de + k * rd)] -= mult
    return out


def demazure_step(rs: RootSystem, i: int, chi: Character) -> Character:
    """The Demazure operator ``D_i`` extended linearly."""
    return Character(_step_terms(rs, i, chi.terms))


def demazure_character(
    rs: RootSystem, level: int, coweight: Sequence, tiebreak="min", check_positive=False, cap=None
) -> Character:
    """Character of ``D(level, coweight)``.

    The operators are applied right-to-left along the reduced word of
    ``t_{-nu(coweight_*)} = w sigma``, starting from ``e^{sigma(level Lambda_0)}``.
    """
    if not isinstance(level, int) or level < 1:
        raise PreconditionError(f"level must be a positive integer, got {level!r}")
    element = decompose_translation(rs, coweight, tiebreak=tiebreak)
    start = apply_sigma(rs, element.sigma, fundamental_affine_weight(rs, 0).scale(level))
    terms = {start: 1}
    for i in reversed(element.word):
        terms = {k: v for k, v in _step_terms(rs, i, terms).items() if v}
        if check_positive and any(v < 0 for v in terms.values()):
            raise AssertionError(f"negative multiplicity after D_{i}")
        if cap is not None and len(terms) > cap:
            raise ResourceError(f"character exceeds cap of {cap} terms")
    return Character(terms)


def extremal_weight(rs: RootSystem, level: int, coweight: Sequence) -> AffineWeight:
    element = decompose_translation(rs, coweight)
    return apply_element(rs, element, fundamental_affine_weight(rs, 0).scale(level))


@dataclass
class GradedClassicalCharacter:
    """Energy-graded g-character: ``layers[k][weight] = multiplicity``."""

    layers: dict = field(default_factory=dict)

    def total(self):
        out = defaultdict(int)
        for layer in self.layers.values():
            for w, m in layer.items():
                out[w] += m
        return {w: m for w, m in out.items() if m}

    def dimension(self):
        return sum(sum(layer.values()) for layer in self.layers.values())

    def layer_dimension(self, k):
        return sum(self.layers.get(k, {}).values())

    def to_records(self):
        lines = []
        for k in sorted(self.layers):
            for w in sorted(self.layers[k], key=lambda w: tuple(-Fraction(c) for c in w)):
                coords = ",".join(format_fraction(c) for c in w)
                lines.append(f"energy={k} weight={coords} mult={self.layers[k][w]}")
        return "\n".join(lines)


def restrict_graded(chi: Character) -> GradedClassicalCharacter:
    """Forget ``Lambda_0``; energy = (max delta) - delta."""
    levels = chi.levels()
    if len(levels) > 1:
        raise PreconditionError(f"character mixes levels {sorted(levels)}")
    if not len(chi):
        return GradedClassicalCharacter({})
    top = max(lam.delta for lam in chi)
    layers = defaultdict(lambda: defaultdict(int))
    for lam, m in chi.items():
        k = top - lam.delta
        if Fraction(k).denominator != 1:
            raise PreconditionError("delta-coefficients are not congruent mod 1")
        layers[int(k)][lam.classical] += m
    return GradedClassicalCharacter(
        {k: {w: m for w, m in v.items() if m} for k, v in sorted(layers.items())}
    )


def classical_product(a: Mapping, b: Mapping) -> dict:
    """Product in Z[P] of two classical characters given as dicts."""
    out = defaultdict(int)
    for x, m in a.items():
        for y, k in b.items():
            out[tuple(p + q for p, q in zip(x, y))] += m * k
    return {w: m for w, m in out.items() if m}


def _strip_order(rs, w):
    return (rs.height(w), tuple(w))


def decompose_g(rs: RootSystem, classical: Mapping, cap=200_000) -> dict:
    """Multiplicities of irreducibles via highest-weight stripping."""
    remaining = {tuple(w): m for w, m in classical.items() if m}
    for w, m in remaining.items():
        for i in range(1, rs.rank + 1):
            if remaining.get(finite_reflect(rs, i, w), 0) != m:
                raise PreconditionError("input is not Weyl-group symmetric")
    out = {}
    while remaining:
        dominant = [w for w in remaining if is_dominant(w)]
        if not dominant:
            raise IntegrityError("no dominant weight left to strip")
        top = max(dominant, key=lambda w: _strip_order(rs, w))
        mult = remaining[top]
        if mult < 0:
            raise IntegrityError(f"negative multiplicity {mult} at {top}")
        out[top] = mult
        for w, k in finite_weyl_character(rs, top, cap=cap).items():
            left = remaining.get(w, 0) - mult * k
            if left < 0:
                raise IntegrityError(f"stripping V{top} leaves {left} at {w}")
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
    return dict(sorted(out.items(), key=lambda kv: _strip_order(rs, kv[0]), reverse=True))


def finite_weyl_character(rs: RootSystem, mu: Sequence, cap=200_000) -> dict:
    """Character of the finite irreducible ``V(mu)`` from its path crystal."""
    from .path_crystal import endpoint_multiset, generate_crystal, straight_path

    mu = tuple(mu)
    if not is_dominant(mu):
        raise PreconditionError(f"{mu} is not dominant")
    seed = straight_path(mu + (0,))
    graph = generate_crystal(rs, seed, range(1, rs.rank + 1), cap=cap)
    out = {}
    for (cl, _level), m in endpoint_multiset(graph.vertices).items():
        out[cl] = m
    return out
