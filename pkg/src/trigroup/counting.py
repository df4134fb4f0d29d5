"""Exhaustive censuses of quadruples bounded by height or maximal entry.

Canonical enumeration iterates b >= c >= d >= 0 and solves the quadruple
equation for the leading entry: 2a = (b+c+d) + sqrt(6(bc+cd+db) -
3(b^2+c^2+d^2)), with exact integer discriminant tests.  Counts grow
roughly like n^2 log^3 n; the divisor-square sieve provides the matching
diagnostic sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .core import Quadruple, ResourceLimitError, is_triangle_quadruple
from .reduction import is_primitive

DEFAULT_BOUND_CAP = 5000

MODES = ("canonical", "ordered")


@dataclass(frozen=True)
class CensusReport:
    bound: int
    mode: str
    count: int
    quadruples: tuple[Quadruple, ...] | None = None


def canonicalize(q: Quadruple) -> Quadruple:
    """Sort entries in nonincreasing order (multiset representative)."""
    return tuple(sorted(q, reverse=True))


def ordered_multiplicity(q: Quadruple) -> int:
    """Number of distinct orderings of the multiset of entries."""
    denom = 1
    for x in set(q):
        denom *= math.factorial(q.count(x))
    return math.factorial(4) // denom


def _leading_candidates(b: int, c: int, d: int):
    """Exact integer solutions a >= b of the quadruple equation for (b, c, d)."""
    delta = 6 * (b * c + c * d + d * b) - 3 * (b * b + c * c + d * d)
    if delta < 0:
        return
    s = math.isqrt(delta)
    if s * s != delta:
        return
    sigma = b + c + d
    for twice_a in {sigma + s, sigma - s}:
        if twice_a % 2:
            continue
        a = twice_a // 2
        if a >= b:
            yield a


def _canonical_by_height(bound: int) -> list[Quadruple]:
    bound_sq = bound * bound
    found = set()
    for b in range(bound + 1):
        bb = b * b
        if bb > bound_sq:
            break
        for c in range(b + 1):
            norm_bc = bb + c * c
            if norm_bc > bound_sq:
                break
            rem = bound_sq - norm_bc
            for d in range(min(c, math.isqrt(rem)) + 1):
                dd = d * d
                for a in _leading_candidates(b, c, d):
                    q = (a, b, c, d)
                    if a * a + norm_bc + dd > bound_sq:
                        continue
                    if q != (0, 0, 0, 0) and is_triangle_quadruple(q):
                        found.add(q)
    return sorted(found)


def _canonical_by_max(bound: int) -> list[Quadruple]:
    found = set()
    for b in range(bound + 1):
        for c in range(b + 1):
            for d in range(c + 1):
                for a in _leading_candidates(b, c, d):
                    if a > bound:
                        continue
                    q = (a, b, c, d)
                    if q != (0, 0, 0, 0) and is_triangle_quadruple(q):
                        found.add(q)
    return sorted(found)


def _check_bound(bound: int, max_bound: int) -> None:
    if bound < 1:
        raise ValueError(f"bound must be a positive integer, got {bound!r}")
    if bound > max_bound:
        raise ResourceLimitError(
            f"census bound {bound} exceeds configured cap {max_bound}"
        )


def _build_report(
    canonical: list[Quadruple],
    bound: int,
    mode: str,
    primitive: bool,
    include_list: bool,
) -> CensusReport:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if primitive:
        canonical = [q for q in canonical if is_primitive(q)]
    if mode == "canonical":
        count = len(canonical)
        listed = tuple(canonical) if include_list else None
    else:
        count = sum(ordered_multiplicity(q) for q in canonical)
        if include_list:
            listed = tuple(
                sorted(t for q in canonical for t in set(permutations(q)))
            )
        else:
            listed = None
    return CensusReport(bound=bound, mode=mode, count=count, quadruples=listed)


def enumerate_all(
    height_bound: int,
    mode: str = "canonical",
    primitive: bool = False,
    max_bound: int = DEFAULT_BOUND_CAP,
) -> CensusReport:
    """Census with list of all quadruples of height at most height_bound.

    Height is the Euclidean norm sqrt(a^2 + b^2 + c^2 + d^2); membership
    is decided on the exact squared comparison.  Canonical mode lists
    nonincreasing multiset representatives; ordered mode lists every
    distinct arrangement.
    """
    _check_bound(height_bound, max_bound)
    canonical = _canonical_by_height(height_bound)
    return _build_report(canonical, height_bound, mode, primitive, True)


def count_by_height(
    n: int,
    mode: str = "canonical",
    primitive: bool = False,
    max_bound: int = DEFAULT_BOUND_CAP,
) -> CensusReport:
    """Count-only census by height."""
    _check_bound(n, max_bound)
    canonical = _canonical_by_height(n)
    return _build_report(canonical, n, mode, primitive, False)


def count_by_max(
    n: int,
    mode: str = "canonical",
    primitive: bool = False,
    max_bound: int = DEFAULT_BOUND_CAP,
    include_list: bool = False,
) -> CensusReport:
    """Census of quadruples whose maximal entry is at most n.

    Every enumerated quadruple is checked against the sandwich
    max(Q) <= H(Q) <= 2 max(Q) (exactly, on squares).
    """
    _check_bound(n, max_bound)
    canonical = _canonical_by_max(n)
    for q in canonical:
        norm_sq = sum(x * x for x in q)
        top = max(q)
        assert top * top <= norm_sq <= 4 * top * top, q
    return _build_report(canonical, n, mode, primitive, include_list)


def height_sweep(
    max_n: int,
    mode: str = "canonical",
    max_bound: int = DEFAULT_BOUND_CAP,
) -> list[tuple[int, int, float]]:
    """Rows (n, count of height <= n, count / (n^2 ln^3 n)) for n = 1..max_n.

    A single enumeration at the top bound is bucketed by exact squared
    height, so the sweep costs one census.
    """
    _check_bound(max_n, max_bound)
    canonical = _canonical_by_height(max_n)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    weights = sorted(
        (sum(x * x for x in q), 1 if mode == "canonical" else ordered_multiplicity(q))
        for q in canonical
    )
    rows = []
    total = 0
    idx = 0
    for n in range(1, max_n + 1):
        n_sq = n * n
        while idx < len(weights) and weights[idx][0] <= n_sq:
            total += weights[idx][1]
            idx += 1
        if n == 1:
            ratio = 0.0
        else:
            ratio = total / (n_sq * math.log(n) ** 3)
        rows.append((n, total, ratio))
    return rows


def divisor_square_sum(n: int) -> tuple[int, float]:
    """Exact sum of d(k)^2 for k = 1..n, plus the ratio to n ln^3 n.

    Sieves divisor counts with the paired-divisor trick (each divisor
    i <= sqrt(k) contributes 2, squares contribute 1), so only about
    sqrt(n) vectorized passes are needed.  Values stay far below the
    int64 overflow line for any feasible n.
    """
    import numpy as np

    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    counts = np.zeros(n + 1, dtype=np.int64)
    for i in range(1, math.isqrt(n) + 1):
        counts[i * i] += 1
        counts[i * i + i :: i] += 2
    total = int(np.dot(counts[1:], counts[1:]))
    if n == 1:
        return total, 0.0
    return total, total / (n * math.log(n) ** 3)
