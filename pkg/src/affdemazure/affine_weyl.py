"""Affine weights, affine reflections, translations and the extended affine
Weyl group ``Sigma x W^aff``.

An affine weight is ``classical + level * Lambda_0 + delta * delta`` with the
classical part in omega-coordinates.  Node ``0`` is the affine node throughout.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .root_data import PreconditionError, RootSystem, is_dominant, nu, w0_dual

__all__ = [
    "AffineWeight",
    "DiagramAut",
    "ExtendedAffineElement",
    "pairing",
    "affine_root",
    "fundamental_affine_weight",
    "affine_reflect",
    "translate",
    "in_translation_lattice",
    "apply_word",
    "apply_sigma",
    "apply_element",
    "decompose_translation",
    "identity_aut",
    "is_diagram_automorphism",
    "decompose_weight_translation",
]


class AffineWeight(NamedTuple):
    classical: tuple
    level: object = 0
    delta: object = 0

    def __add__(self, other):
        return AffineWeight(
            tuple(a + b for a, b in zip(self.classical, other.classical)),
            self.level + other.level,
            self.delta + other.delta,
        )

    def __sub__(self, other):
        return AffineWeight(
            tuple(a - b for a, b in zip(self.classical, other.classical)),
            self.level - other.level,
            self.delta - other.delta,
        )

    def scale(self, c):
        return AffineWeight(
            tuple(c * a for a in self.classical), c * self.level, c * self.delta
        )


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _clean(lam):
    return AffineWeight(
        tuple(_norm(a) for a in lam.classical), _norm(lam.level), _norm(lam.delta)
    )


def pairing(rs: RootSystem, i: int, lam: AffineWeight):
    """``<lam, alpha_i^vee>`` for ``0 <= i <= n``."""
    if i == 0:
        return lam.level - rs.pair_theta_coroot(lam.classical)
    return lam.classical[i - 1]


def affine_root(rs: RootSystem, i: int) -> AffineWeight:
    """``alpha_i``; ``alpha_0 = delta - theta``."""
    if i == 0:
        return AffineWeight(tuple(-t for t in rs.theta_weight), 0, 1)
    return AffineWeight(rs.simple_root(i), 0, 0)


def fundamental_affine_weight(rs: RootSystem, i: int) -> AffineWeight:
    """``Lambda_i = omega_i + a_i^vee Lambda_0`` (``Lambda_0`` for ``i = 0``)."""
    n = rs.rank
    if i == 0:
        return AffineWeight((0,) * n, 1, 0)
    return AffineWeight(tuple(int(j == i - 1) for j in range(n)), rs.comarks[i - 1], 0)


def affine_reflect(rs: RootSystem, i: int, lam: AffineWeight) -> AffineWeight:
    m = pairing(rs, i, lam)
    if not m:
        return lam
    root = affine_root(rs, i)
    return AffineWeight(
        tuple(a - m * r for a, r in zip(lam.classical, root.classical)),
        lam.level,
        lam.delta - m * root.delta,
    )


def in_translation_lattice(rs: RootSystem, mu: Sequence) -> bool:
    """Whether ``mu`` lies in ``L``, the image of the coweight lattice under nu."""
    return all(
        Fraction(m) % f == 0 for m, f in zip(mu, rs.nu_factors)
    )


def translate(rs: RootSystem, mu: Sequence, lam: AffineWeight) -> AffineWeight:
    """``t_mu(lam)`` including the delta-correction.

    The classical part moves by ``level * mu``; the delta-coefficient drops by
    ``(lam_cl, mu) + (mu, mu) * level / 2``.
    """
    if not in_translation_lattice(rs, mu):
        raise PreconditionError(f"{tuple(mu)} is not in the translation lattice L")
    b = lam.level
    shift = rs.form(lam.classical, mu) + Fraction(rs.form(mu, mu)) * b / 2
    return _clean(
        AffineWeight(
            tuple(a + b * m for a, m in zip(lam.classical, mu)),
            b,
            lam.delta - shift,
        )
    )


def apply_word(rs: RootSystem, word: Sequence[int], lam: AffineWeight) -> AffineWeight:
    """Apply ``s_{word[0]} ... s_{word[-1]}``; the last letter acts first."""
    for i in reversed(word):
        lam = affine_reflect(rs, i, lam)
    return lam


class DiagramAut(NamedTuple):
    """Length-zero element of the extended affine Weyl group.

    ``perm[i]`` is the image node of ``i``; ``delta_shift[i]`` is the
    delta-coefficient of ``sigma(Lambda_i) - Lambda_{perm[i]}``.  A zero shift
    gives the pure diagram automorphism.
    """

    perm: tuple
    delta_shift: tuple = ()

    @property
    def is_identity(self):
        return all(p == i for i, p in enumerate(self.perm)) and not any(
            self.delta_shift
        )

    def shift(self, i):
        return self.delta_shift[i] if self.delta_shift else 0


def identity_aut(rs: RootSystem) -> DiagramAut:
    n = rs.rank
    return DiagramAut(tuple(range(n + 1)), (0,) * (n + 1))


def _affine_cartan_entry(rs, i, j):
    return pairing(rs, i, affine_root(rs, j))


def is_diagram_automorphism(rs: RootSystem, perm: Sequence[int]) -> bool:
    n = rs.rank
    if sorted(perm) != list(range(n + 1)):
        return False
    return all(
        _affine_cartan_entry(rs, perm[i], perm[j]) == _affine_cartan_entry(rs, i, j)
        for i in range(n + 1)
        for j in range(n + 1)
    )


def apply_sigma(rs: RootSystem, sigma: DiagramAut, lam: AffineWeight) -> AffineWeight:
    """Act by ``sigma``, permuting the ``Lambda_i`` and adding the delta shifts."""
    n = rs.rank
    classical = [0] * n
    level = 0
    delta = lam.delta
    for i in range(n + 1):
        c = pairing(rs, i, lam)
        if not c:
            continue
        target = fundamental_affine_weight(rs, sigma.perm[i])
        classical = [x + c * y for x, y in zip(classical, target.classical)]
        level += c * target.level
        delta += c * sigma.shift(i)
    return _clean(AffineWeight(tuple(classical), level, delta))


class ExtendedAffineElement(NamedTuple):
    """``s_{word[0]} ... s_{word[-1]} sigma``."""

    sigma: DiagramAut
    word: tuple

    def __len__(self):
        return len(self.word)


def apply_element(rs: RootSystem, e: ExtendedAffineElement, lam: AffineWeight) -> AffineWeight:
    return apply_word(rs, e.word, apply_sigma(rs, e.sigma, lam))


def _alcove_point(rs: RootSystem) -> AffineWeight:
    # rho-hat / h^vee: every affine coordinate equals 1/h^vee
    hv = 1 + sum(rs.comarks)
    c = Fraction(1, hv)
    return AffineWeight((c,) * rs.rank, Fraction(1), 0)


def _walk_to_chamber(rs, point, tiebreak):
    word = []
    n = rs.rank
    order = range(n + 1) if tiebreak == "min" else range(n, -1, -1)
    while True:
        for i in order:
            if pairing(rs, i, point) < 0:
                point = affine_reflect(rs, i, point)
                word.append(i)
                break
        else:
            return word


def decompose_translation(rs: RootSystem, coweight: Sequence, tiebreak="min") -> ExtendedAffineElement:
    """Write ``t_{-nu(coweight_*)}`` as ``s_{i_1} ... s_{i_k} sigma``.

    Uses an alcove walk: the image of an interior alcove point is reflected
    back across the first violated wall (smallest index, or largest with
    ``tiebreak="max"``) until it returns to the fundamental alcove.  Each
    step crosses one separating wall, so the recorded word is reduced.
    """
    if tiebreak not in ("min", "max"):
        raise ValueError(f"unknown tiebreak {tiebreak!r}")
    if not is_dominant(coweight):
        raise PreconditionError(f"coweight {tuple(coweight)} is not dominant")
    mu = tuple(-x for x in nu(rs, w0_dual(rs, coweight)))
    return decompose_weight_translation(rs, mu, tiebreak)


def decompose_weight_translation(rs: RootSystem, mu: Sequence, tiebreak="min") -> ExtendedAffineElement:
    """Decompose ``t_mu`` for any ``mu`` in ``L``."""
    n = rs.rank
    word = _walk_to_chamber(rs, translate(rs, mu, _alcove_point(rs)), tiebreak)

    def residual(lam):
        lam = translate(rs, mu, lam)
        for i in word:
            lam = affine_reflect(rs, i, lam)
        return lam

    perm = []
    shifts = []
    for j in range(n + 1):
        img = residual(fundamental_affine_weight(rs, j))
        for k in range(n + 1):
            target = fundamental_affine_weight(rs, k)
            if img.classical == target.classical and img.level == target.level:
                perm.append(k)
                shifts.append(_norm(Fraction(img.delta) - target.delta))
                break
        else:
            raise AssertionError(f"residual map does not permute Lambda_i ({img})")
    sigma = DiagramAut(tuple(perm), tuple(shifts))
    return ExtendedAffineElement(sigma, tuple(word))
