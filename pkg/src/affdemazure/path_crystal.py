"""LS path model on ``P_cl (x) R``.

Coordinates are ``(omega_1, ..., omega_n, Lambda_0)``; an optional trailing
``delta`` coordinate is supported so that projection can be tested.  A path
is stored as its sequence of displacement vectors with positively parallel
neighbours merged, i.e. up to reparametrisation.  Root operators only depend
on that class, which makes equality exact and hash-stable.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .affine_weyl import ExtendedAffineElement, apply_sigma, fundamental_affine_weight
from .root_data import PreconditionError, ResourceError, RootSystem

__all__ = [
    "ResourceError",
    "Path",
    "CrystalGraph",
    "DEFAULT_CAP",
    "straight_path",
    "empty_path",
    "concat",
    "project",
    "root_f",
    "root_e",
    "generate_crystal",
    "demazure_paths",
    "demazure_crystal",
    "demazure_seed",
    "concatenation_seed",
    "endpoint_multiset",
    "has_concatenation_form",
    "to_dot",
]

DEFAULT_CAP = 200_000


def _num(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _parallel(u, v):
    """True if ``v = c u`` for some ``c > 0``."""
    for a, b in zip(u, v):
        if a:
            c = Fraction(b) / a
            break
    else:
        return False
    if c <= 0:
        return False
    return all(b == c * a for a, b in zip(u, v))


def _canonical(segments):
    out = []
    for d in segments:
        if not any(d):
            continue
        if out and _parallel(out[-1], d):
            out[-1] = tuple(_num(a + b) for a, b in zip(out[-1], d))
        else:
            out.append(tuple(_num(a) for a in d))
    return tuple(out)


class Path:
    """Piecewise-linear path starting at the origin."""

    __slots__ = ("segments", "dim", "_hash")

    def __init__(self, segments: Iterable[Sequence], dim: int):
        self.segments = _canonical(segments)
        self.dim = dim
        self._hash = hash((self.segments, dim))

    def __eq__(self, other):
        return (
            isinstance(other, Path)
            and self.dim == other.dim
            and self.segments == other.segments
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Path({list(self.segments)})"

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return tuple(tuple(Fraction(a) for a in d) for d in self.segments)

    def is_empty(self):
        return not self.segments

    def endpoint(self):
        end = [0] * self.dim
        for d in self.segments:
            end = [a + b for a, b in zip(end, d)]
        return tuple(_num(a) for a in end)


def straight_path(nu: Sequence) -> Path:
    """``t -> t nu``; the zero vector gives the empty path."""
    return Path([tuple(nu)], len(nu))


def empty_path(dim: int) -> Path:
    return Path((), dim)


def concat(p1: Path, p2: Path) -> Path:
    if p1.dim != p2.dim:
        raise PreconditionError("cannot concatenate paths of different dimension")
    return Path(p1.segments + p2.segments, p1.dim)


def project(path: Path) -> Path:
    """Drop the trailing delta-coordinate."""
    return Path([d[:-1] for d in path.segments], path.dim - 1)


@lru_cache(maxsize=None)
def _operator_data(rs: RootSystem, i: int, with_delta: bool):
    """(coroot functional, root vector) on the path coordinates."""
    n = rs.rank
    extra = (0,) if with_delta else ()
    if i == 0:
        cor = tuple(-a for a in rs.comarks) + (1,) + extra
        root = tuple(-t for t in rs.theta_weight) + (0,) + ((1,) if with_delta else ())
    else:
        cor = tuple(int(j == i - 1) for j in range(n)) + (0,) + extra
        root = rs.simple_root(i) + (0,) + extra
    return cor, root


def _data_for(rs, i, path):
    if not 0 <= i <= rs.rank:
        raise PreconditionError(f"operator index {i} outside 0..{rs.rank}")
    if path.dim == rs.rank + 1:
        return _operator_data(rs, i, False)
    if path.dim == rs.rank + 2:
        return _operator_data(rs, i, True)
    raise PreconditionError(f"path dimension {path.dim} does not fit {rs.name}")


def _heights(segments, cor):
    h = [0]
    for d in segments:
        h.append(h[-1] + sum(a * c for a, c in zip(d, cor)))
    return h


def _reflect(d, cor, root):
    m = sum(a * c for a, c in zip(d, cor))
    if not m:
        return d
    return tuple(a - m * r for a, r in zip(d, root))


def _integral_min(h):
    m = min(h)
    if Fraction(m).denominator != 1:
        raise PreconditionError(f"path minimum {m} is not integral")
    return m


def root_f(rs: RootSystem, i: int, path: Path):
    """Lowering operator ``f_i``; ``None`` where undefined."""
    cor, root = _data_for(rs, i, path)
    segs = path.segments
    h = _heights(segs, cor)
    m = _integral_min(h)
    if h[-1] - m < 1:
        return None
    p = max(k for k, v in enumerate(h) if v == m)
    target = m + 1
    k = p
    while h[k + 1] < target:
        k += 1
    r = Fraction(target - h[k]) / (h[k + 1] - h[k])
    d = segs[k]
    head = tuple(r * a for a in d)
    tail = tuple((1 - r) * a for a in d)
    new = list(segs[:p])
    new.extend(_reflect(s, cor, root) for s in segs[p:k])
    new.append(_reflect(head, cor, root))
    new.append(tail)
    new.extend(segs[k + 1:])
    return Path(new, path.dim)


def root_e(rs: RootSystem, i: int, path: Path):
    """Raising operator ``e_i``; ``None`` where undefined."""
    cor, root = _data_for(rs, i, path)
    segs = path.segments
    h = _heights(segs, cor)
    m = _integral_min(h)
    if m > -1:
        return None
    q = min(k for k, v in enumerate(h) if v == m)
    target = m + 1
    k = q - 1
    while h[k] < target:
        k -= 1
    r = Fraction(h[k] - target) / (h[k] - h[k + 1])
    d = segs[k]
    head = tuple(r * a for a in d)
    tail = tuple((1 - r) * a for a in d)
    new = list(segs[:k])
    new.append(head)
    new.append(_reflect(tail, cor, root))
    new.extend(_reflect(s, cor, root) for s in segs[k + 1:q])
    new.extend(segs[q:])
    return Path(new, path.dim)


@dataclass(frozen=True)
class CrystalGraph:
    """Vertices in discovery order; edges ``(source, target, i)`` mean ``f_i``."""

    vertices: tuple
    edges: tuple
    seed: Path

    def index(self):
        return {p: k for k, p in enumerate(self.vertices)}


def _check_cap(count, cap):
    if count > cap:
        raise ResourceError(f"crystal exceeds cap of {cap} vertices")


def generate_crystal(rs: RootSystem, seed: Path, alphabet: Iterable[int], cap: int = DEFAULT_CAP) -> CrystalGraph:
    """Closure of ``seed`` under ``e_i, f_i`` for ``i`` in ``alphabet`` (BFS)."""
    alphabet = sorted(set(alphabet))
    index = {seed: 0}
    order = [seed]
    edges = set()
    queue = deque([seed])
    while queue:
        path = queue.popleft()
        for i in alphabet:
            for op, lowering in ((root_f, True), (root_e, False)):
                image = op(rs, i, path)
                if image is None:
                    continue
                if image not in index:
                    index[image] = len(order)
                    order.append(image)
                    _check_cap(len(order), cap)
                    queue.append(image)
                if lowering:
                    edges.add((index[path], index[image], i))
                else:
                    edges.add((index[image], index[path], i))
    return CrystalGraph(tuple(order), tuple(sorted(edges)), seed)


def demazure_paths(rs: RootSystem, element: ExtendedAffineElement, seed: Path, cap: int = DEFAULT_CAP) -> tuple:
    """All ``f_{j_1}^{n_1} ... f_{j_t}^{n_t} seed`` along the word of ``element``.

    The result is ordered by discovery, which is deterministic.
    """
    found = {seed: None}
    for i in reversed(element.word):
        for path in list(found):
            image = root_f(rs, i, path)
            while image is not None:
                if image not in found:
                    found[image] = None
                    _check_cap(len(found), cap)
                image = root_f(rs, i, image)
    return tuple(found)


def demazure_crystal(rs: RootSystem, element: ExtendedAffineElement, seed: Path, cap: int = DEFAULT_CAP) -> CrystalGraph:
    """Demazure subcrystal with every ``f_i`` edge between its members."""
    vertices = demazure_paths(rs, element, seed, cap=cap)
    index = {p: k for k, p in enumerate(vertices)}
    edges = []
    for k, p in enumerate(vertices):
        for i in range(rs.rank + 1):
            image = root_f(rs, i, p)
            if image is not None and image in index:
                edges.append((k, index[image], i))
    return CrystalGraph(vertices, tuple(sorted(edges)), seed)


def _psi(weight):
    return tuple(weight.classical) + (weight.level,)


def demazure_seed(rs: RootSystem, element: ExtendedAffineElement, level: int = 1) -> Path:
    """Straight path to ``psi(sigma(level Lambda_0))``."""
    start = apply_sigma(rs, element.sigma, fundamental_affine_weight(rs, 0).scale(level))
    return straight_path(_psi(start))


def concatenation_seed(rs: RootSystem, coweight_star_weight: Sequence) -> Path:
    """Dominant path ``pi_0`` above ``pi_{Lambda_0} * pi_{-lambda_*}``.

    ``coweight_star_weight`` is the classical weight ``nu(lambda_*^vee)``.
    The concatenation is raised by ``e_i`` (smallest index first) until no
    raising operator applies.
    """
    n = rs.rank
    lam0 = straight_path((0,) * n + (1,))
    tail = straight_path(tuple(-x for x in coweight_star_weight) + (0,))
    path = concat(lam0, tail)
    while True:
        for i in range(n + 1):
            image = root_e(rs, i, path)
            if image is not None:
                path = image
                break
        else:
            return path


def has_concatenation_form(path: Path) -> bool:
    """Whether ``path = psi(pi_{Lambda_0}) * pi'`` with ``pi'`` of level zero."""
    if path.is_empty():
        return False
    unit = (0,) * (path.dim - 1) + (1,)
    first, rest = path.segments[0], path.segments[1:]
    return first == unit and all(d[-1] == 0 for d in rest)


def endpoint_multiset(paths: Iterable[Path]) -> dict:
    """``{(classical, Lambda_0-coordinate): count}``."""
    counts = Counter()
    for p in paths:
        end = p.endpoint()
        counts[(end[:-1], end[-1])] += 1
    return dict(sorted(counts.items(), key=lambda kv: (kv[0][1], kv[0][0])))


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_dot(graph: CrystalGraph, name="crystal") -> str:
    """DOT text; vertices labelled by endpoint, edges by operator index."""
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for k, p in enumerate(graph.vertices):
        end = p.endpoint()
        label = "(" + ",".join(_fmt(a) for a in end[:-1]) + ";" + _fmt(end[-1]) + ")"
        lines.append(f'  v{k} [label="{label}"];')
    for s, t, i in graph.edges:
        lines.append(f'  v{s} -> v{t} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
