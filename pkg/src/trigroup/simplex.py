"""The regular-simplex identity in n dimensions, over exact rationals.

For a regular n-simplex with squared side a0 and a point P in its
affine hull with squared vertex distances a1..a_{n+1}, the tuple
satisfies (n+1) * sum(a_i^2) = (sum(a_i))^2.  The identity follows from
the vanishing of the Gram determinant of the vertex vectors with P at
the origin; both the determinant and its closed form are computed here
and compared exactly.  The reflection replacing one distance entry by
(2/n) * (sum of the others) - entry preserves the identity; for n = 2
it coincides with the quadruple generators, and for n > 2 it does not
preserve integrality.

Everything is done on squared quantities, so no irrational coordinate
ever appears; regular simplices with rational coordinates are built in
an ambient dimension one above the simplex dimension (the plane, for
instance, contains no rational equilateral triangle).
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .linalg import rational_det, rational_rank, solve_rational

Entries = tuple[Fraction, ...]


class NegativeEntryWarning(UserWarning):
    """A reflection produced a negative entry: algebraically fine, but the
    geometric reading as a squared distance is lost."""


def as_entries(values) -> Entries:
    """Coerce a sequence of numbers or fraction strings to exact rationals."""
    entries = tuple(Fraction(v) for v in values)
    if len(entries) < 4:
        raise ValueError("a tuple needs at least 4 entries (dimension >= 2)")
    return entries


def dimension(entries: Entries) -> int:
    """Simplex dimension n for an (n+2)-entry tuple."""
    return len(entries) - 2


def identity_residual(values) -> Fraction:
    """(n+1) * sum of squares minus the squared sum; zero iff the tuple is valid."""
    entries = as_entries(values)
    n = dimension(entries)
    total = sum(entries)
    return (n + 1) * sum(e * e for e in entries) - total * total


def is_valid_tuple(values) -> bool:
    return identity_residual(values) == 0


def reflect(values, index: int) -> Entries:
    """Replace distance entry `index` (1-based; entry 0 is the squared side)
    by (2/n) * (sum of the other entries) - entry.

    The identity is quadratic in each distance entry, so this swaps the
    two roots: it preserves validity exactly and is an involution.  A
    negative result is allowed but triggers NegativeEntryWarning, since
    the tuple then has no distance interpretation.
    """
    entries = as_entries(values)
    n = dimension(entries)
    if not 1 <= index <= n + 1:
        raise ValueError(f"index must be in 1..{n + 1}, got {index!r}")
    residual = identity_residual(entries)
    if residual != 0:
        raise ValueError(f"tuple does not satisfy the identity (residual {residual})")
    others = sum(entries) - entries[index]
    new_entry = Fraction(2, n) * others - entries[index]
    if new_entry < 0:
        warnings.warn(
            f"reflection produced negative entry {new_entry} at index {index}",
            NegativeEntryWarning,
            stacklevel=2,
        )
    return entries[:index] + (new_entry,) + entries[index + 1 :]


def gram_matrix(values) -> list[list[Fraction]]:
    """The (n+1) x (n+1) matrix with diagonal 2*a_i and off-diagonal
    a_i + a_j - a0: twice the vertex Gram matrix when P sits at the origin."""
    entries = as_entries(values)
    a0 = entries[0]
    dist = entries[1:]
    k = len(dist)
    return [
        [2 * dist[i] if i == j else dist[i] + dist[j] - a0 for j in range(k)]
        for i in range(k)
    ]


def gram_det(values) -> Fraction:
    """Exact determinant of the Gram-style matrix, by fraction-free elimination."""
    return rational_det(gram_matrix(values))


def gram_closed_form(values) -> Fraction:
    """a0^(n-1) * ((sum a)^2 - (n+1) * sum a^2): equals gram_det identically."""
    entries = as_entries(values)
    n = dimension(entries)
    total = sum(entries)
    return entries[0] ** (n - 1) * (total * total - (n + 1) * sum(e * e for e in entries))


@dataclass(frozen=True)
class PointConfiguration:
    """n+1 vertex vectors and a point, exact rational coordinates.

    The ambient dimension may exceed the simplex dimension n (it must,
    for a rational regular simplex in most n); validity then requires
    the vertices to be affinely independent and the point to lie in
    their affine hull, which keeps the spanned flat n-dimensional.
    """

    vertices: tuple[tuple[Fraction, ...], ...]
    point: tuple[Fraction, ...]

    @classmethod
    def from_values(cls, vertices, point) -> "PointConfiguration":
        vs = tuple(tuple(Fraction(x) for x in v) for v in vertices)
        p = tuple(Fraction(x) for x in point)
        return cls(vertices=vs, point=p)

    @property
    def n(self) -> int:
        return len(self.vertices) - 1

    def side_squared(self) -> Fraction:
        """Common squared side length; raises if the simplex is not regular."""
        if len(self.vertices) < 3:
            raise ValueError("need at least 3 vertices")
        dims = {len(v) for v in self.vertices} | {len(self.point)}
        if len(dims) != 1:
            raise ValueError("inconsistent coordinate dimensions")
        side = None
        for i in range(len(self.vertices)):
            for j in range(i + 1, len(self.vertices)):
                d = _dist_squared(self.vertices[i], self.vertices[j])
                if side is None:
                    side = d
                elif d != side:
                    raise ValueError(
                        f"not a regular simplex: squared distances {side} and {d}"
                    )
        if side == 0:
            raise ValueError("degenerate simplex: coincident vertices")
        return side

    def validate(self) -> None:
        """Check regularity, affine independence, and point-in-hull exactly."""
        self.side_squared()
        base = self.vertices[0]
        edges = [_sub(v, base) for v in self.vertices[1:]]
        columns = list(map(list, zip(*edges)))
        if rational_rank(edges) != self.n:
            raise ValueError("vertices are affinely dependent")
        if solve_rational(columns, list(_sub(self.point, base))) is None:
            raise ValueError("point does not lie in the affine hull of the vertices")


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _dist_squared(u, v) -> Fraction:
    return sum((a - b) ** 2 for a, b in zip(u, v))


def tuple_from_configuration(cfg: PointConfiguration) -> Entries:
    """(squared side, squared distances from the point to each vertex).

    The configuration is validated first; the resulting tuple satisfies
    the identity exactly.
    """
    cfg.validate()
    side = cfg.side_squared()
    return (side,) + tuple(_dist_squared(cfg.point, v) for v in cfg.vertices)


def gram_residual(cfg: PointConfiguration) -> Fraction:
    """Gram determinant of the configuration (zero for genuine configurations)."""
    return gram_det(tuple_from_configuration(cfg))


def standard_configuration(
    n: int,
    scale: Fraction | int = 1,
    weights=None,
) -> PointConfiguration:
    """Regular n-simplex with rational coordinates, plus a point in its hull.

    Vertices are scale * e_i in (n+1)-dimensional space (squared side
    2 * scale^2); the point is the affine combination of the vertices
    with the given rational weights (default: the centroid).  Weights
    must sum to 1 but may be negative, placing the point anywhere in
    the affine hull.
    """
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n!r}")
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    if weights is None:
        weights = [Fraction(1, n + 1)] * (n + 1)
    weights = [Fraction(w) for w in weights]
    if len(weights) != n + 1:
        raise ValueError(f"need {n + 1} weights, got {len(weights)}")
    if sum(weights) != 1:
        raise ValueError("weights must sum to 1")
    vertices = tuple(
        tuple(scale if j == i else Fraction(0) for j in range(n + 1))
        for i in range(n + 1)
    )
    point = tuple(
        sum(w * v[j] for w, v in zip(weights, vertices)) for j in range(n + 1)
    )
    return PointConfiguration(vertices=vertices, point=point)


def nonintegral_reflection_example() -> tuple[Entries, int, Entries]:
    """An integer-valued valid tuple for n = 3 whose reflection is not integral.

    The point at a vertex of a unit-side 3-simplex gives (1, 0, 1, 1, 1);
    reflecting the zero entry yields 8/3, demonstrating that the n > 2
    reflections leave the integers.
    """
    entries = as_entries((1, 0, 1, 1, 1))
    index = 1
    reflected = reflect(entries, index)
    assert any(e.denominator != 1 for e in reflected)
    return entries, index, reflected


def _fraction_to_pair(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def configuration_to_json(cfg: PointConfiguration) -> dict:
    """JSON-ready dict with every rational as a [numerator, denominator] pair."""
    return {
        "vertices": [[_fraction_to_pair(x) for x in v] for v in cfg.vertices],
        "point": [_fraction_to_pair(x) for x in cfg.point],
    }


def configuration_from_json(data) -> PointConfiguration:
    """Inverse of configuration_to_json; accepts a dict or a JSON string."""
    if isinstance(data, str):
        data = json.loads(data)
    vertices = [
        [Fraction(num, den) for num, den in vertex] for vertex in data["vertices"]
    ]
    point = [Fraction(num, den) for num, den in data["point"]]
    return PointConfiguration.from_values(vertices, point)


def load_configuration(path) -> PointConfiguration:
    with open(path, encoding="utf-8") as fh:
        return configuration_from_json(json.load(fh))
