"""Breadth-first enumeration of group elements and quadruple orbits.

Element BFS deduplicates exact matrices layer by layer; because every
generator is an involution, a product formed from a depth-n element can
only coincide with elements at depth n-1, n, or n+1, so only two layers
need to be retained.  Layer sizes are the growth coefficients of the
group and are computed independently of the closed recurrence, which is
kept as a separate code path so the two can be reported side by side.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from . import counting
from .core import (
    IDENTITY,
    Mat4,
    Quadruple,
    ResourceLimitError,
    Vector4,
    generator_matrix,
    mat_mul,
    mat_vec,
    validate_quadruple,
)
from .eisenstein import factorize

MAX_ELEMENTS_ENV = "TRIGROUP_MAX_ELEMENTS"
DEFAULT_MAX_ELEMENTS = 2_000_000

RECURRENCE_SEEDS = (1, 4, 12)


def element_cap(max_elements: int | None = None) -> int:
    """Resolve the BFS element cap: argument, else environment, else default."""
    if max_elements is not None:
        return max_elements
    env = os.environ.get(MAX_ELEMENTS_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_ELEMENTS


@dataclass(frozen=True)
class GrowthTable:
    """Per-depth new-element counts and their running totals."""

    layer_sizes: tuple[int, ...]
    cumulative_sizes: tuple[int, ...]
    orbit_sizes: tuple[int, ...] | None = None


def element_layers(
    generators: tuple[Mat4, ...],
    max_depth: int,
    max_elements: int | None = None,
) -> list[list[Mat4]]:
    """BFS layers of the group generated by involutive matrices.

    Layer n holds the exact matrices at word length n, sorted, so the
    result is deterministic regardless of expansion order.  Raises
    ResourceLimitError when the total element count exceeds the cap.
    """
    cap = element_cap(max_elements)
    layers = [[IDENTITY]]
    prev: set[Mat4] = set()
    cur: set[Mat4] = {IDENTITY}
    total = 1
    for _ in range(max_depth):
        nxt: set[Mat4] = set()
        for m in cur:
            for g in generators:
                candidate = mat_mul(m, g)
                if candidate not in prev and candidate not in cur:
                    nxt.add(candidate)
        total += len(nxt)
        if total > cap:
            raise ResourceLimitError(
                f"element BFS exceeded cap of {cap} elements"
            )
        layers.append(sorted(nxt))
        prev, cur = cur, nxt
    return layers


def all_generators() -> tuple[Mat4, ...]:
    return tuple(generator_matrix(i) for i in (1, 2, 3, 4))


def bfs_elements(max_depth: int, max_elements: int | None = None) -> GrowthTable:
    """Growth table of the full group: layer sizes and cumulative counts."""
    layers = element_layers(all_generators(), max_depth, max_elements)
    sizes = tuple(len(layer) for layer in layers)
    cumulative = []
    total = 0
    for s in sizes:
        total += s
        cumulative.append(total)
    return GrowthTable(layer_sizes=sizes, cumulative_sizes=tuple(cumulative))


def growth_recurrence(n: int) -> int:
    """Evaluate the closed three-term recurrence with seeds 1, 4, 12.

    G_n = 2 G_{n-1} + 2 G_{n-2} - 3 G_{n-3}.  The BFS oracle disagrees
    with this at depth 3 (30 against 29); both values are reported by
    the growth table machinery rather than reconciled here.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n!r}")
    if n < 3:
        return RECURRENCE_SEEDS[n]
    a, b, c = RECURRENCE_SEEDS
    for _ in range(n - 2):
        a, b, c = b, c, 2 * c + 2 * b - 3 * a
    return c


def recurrence_values(max_n: int) -> list[int]:
    return [growth_recurrence(n) for n in range(max_n + 1)]


@dataclass(frozen=True)
class VectorOrbit:
    """Distinct quadruples reached within each depth, plus the layers."""

    root: Quadruple
    cumulative_sizes: tuple[int, ...]
    layers: tuple[tuple[Vector4, ...], ...] | None

    def vectors(self) -> set[Vector4]:
        if self.layers is None:
            raise ValueError("orbit was computed without layer storage")
        return {v for layer in self.layers for v in layer}


def _vector_neighbors(v: Vector4) -> list[Vector4]:
    s = sum(v)
    return [
        tuple((s - 2 * v[j]) if j == i else v[j] for j in range(4))
        for i in range(4)
    ]


def orbit_vectors(
    root: Quadruple,
    max_depth: int,
    max_vectors: int | None = None,
    max_sum: int | None = None,
    keep_layers: bool = True,
) -> VectorOrbit:
    """BFS over quadruples under the four generator actions.

    cumulative_sizes[n] is the number of distinct vectors reachable by
    words of length at most n.  With max_sum set, vectors whose entry
    sum exceeds the limit are discarded: the result is then a subset of
    the unrestricted orbit, and every vector it reports at depth n is
    genuinely reachable within n steps (paths are never invented, only
    dropped).
    """
    root = validate_quadruple(root)
    cap = element_cap(max_vectors)
    prev: set[Vector4] = set()
    cur: set[Vector4] = {root}
    total = 1
    cumulative = [1]
    layers = [[root]]
    for _ in range(max_depth):
        nxt: set[Vector4] = set()
        for v in cur:
            for w in _vector_neighbors(v):
                if max_sum is not None and sum(w) > max_sum:
                    continue
                if w not in prev and w not in cur:
                    nxt.add(w)
        total += len(nxt)
        if total > cap:
            raise ResourceLimitError(f"vector BFS exceeded cap of {cap} vectors")
        cumulative.append(total)
        if keep_layers:
            layers.append(sorted(nxt))
        prev, cur = cur, nxt
    return VectorOrbit(
        root=root,
        cumulative_sizes=tuple(cumulative),
        layers=tuple(tuple(layer) for layer in layers) if keep_layers else None,
    )


def stabilizer_counts(max_n: int, max_elements: int | None = None) -> list[int]:
    """Layer sizes of the subgroup generated by the last three reflections.

    That subgroup fixes every root quadruple (0, x, x, x); its growth
    is linear, with 3n new elements at each length n >= 1, so the count
    of elements of length at most 2n is 6n^2 + 3n + 1.
    """
    gens = tuple(generator_matrix(i) for i in (2, 3, 4))
    layers = element_layers(gens, max_n, max_elements)
    return [len(layer) for layer in layers]


def stabilizer_cumulative_closed_form(n: int) -> int:
    """Closed form 6n^2 + 3n + 1 for stabilizer elements of length <= 2n."""
    return 6 * n * n + 3 * n + 1


Word = tuple[int, ...]


def extremal_word(n: int) -> Word:
    """The norm-extremal word of length n.

    For n = 4m + i the word is the length-i staircase prefix followed
    by m copies of the full descending cycle (4, 3, 2, 1); letters act
    on vectors right to left.
    """
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n!r}")
    m, i = divmod(n, 4)
    prefix = {0: (), 1: (1,), 2: (2, 1), 3: (3, 2, 1)}[i]
    return prefix + (4, 3, 2, 1) * m


def word_matrix(word: Word) -> Mat4:
    """Product of generator matrices in the written order."""
    result = IDENTITY
    for letter in word:
        result = mat_mul(result, generator_matrix(letter))
    return result


def word_norm(word: Word, root: Quadruple) -> int:
    """Maximum entry of the word applied to a quadruple, letters right to left."""
    v = validate_quadruple(root)
    for letter in reversed(word):
        s = sum(v)
        v = tuple((s - 2 * v[j]) if j == letter - 1 else v[j] for j in range(4))
    return max(v)


def max_norm_profile(
    max_n: int,
    root: Quadruple,
    max_elements: int | None = None,
) -> list[tuple[int, list[Word]]]:
    """Exhaustive per-length maxima of the sup norm over the whole group.

    Entry n is (max over all length-n elements w of max(w r), list of
    the words attaining it).  Each element carries its lexicographically
    smallest reduced word, so ties are recorded deterministically.
    """
    root = validate_quadruple(root)
    cap = element_cap(max_elements)
    gens = [(i, generator_matrix(i)) for i in (1, 2, 3, 4)]
    prev: dict[Mat4, Word] = {}
    cur: dict[Mat4, Word] = {IDENTITY: ()}
    total = 1
    profile: list[tuple[int, list[Word]]] = []
    for _ in range(max_n + 1):
        best = max(max(mat_vec(m, root)) for m in cur)
        attaining = sorted(
            word for m, word in cur.items() if max(mat_vec(m, root)) == best
        )
        profile.append((best, attaining))
        nxt: dict[Mat4, Word] = {}
        for m, word in cur.items():
            for letter, g in gens:
                candidate = mat_mul(m, g)
                if candidate in prev or candidate in cur:
                    continue
                cand_word = word + (letter,)
                seen = nxt.get(candidate)
                if seen is None or cand_word < seen:
                    nxt[candidate] = cand_word
        total += len(nxt)
        if total > cap:
            raise ResourceLimitError(f"element BFS exceeded cap of {cap} elements")
        prev, cur = cur, nxt
    return profile


def max_norm_at_length(
    n: int,
    root: Quadruple,
    max_elements: int | None = None,
) -> tuple[int, list[Word]]:
    """Exhaustive maximum of the sup norm over length-n elements applied to root."""
    return max_norm_profile(n, root, max_elements)[n]


def coxeter_element() -> Mat4:
    """The product of all four generators in descending order."""
    m = IDENTITY
    for i in (4, 3, 2, 1):
        m = mat_mul(m, generator_matrix(i))
    return m


def char_poly(m: Mat4) -> tuple[int, ...]:
    """Characteristic polynomial coefficients, leading first; exact integers.

    Faddeev-LeVerrier recursion; every division by the step index is
    exact for an integer matrix.
    """
    coeffs = [1]
    b = m
    for k in range(1, 5):
        trace = sum(b[i][i] for i in range(4))
        if trace % k != 0:
            raise AssertionError("inexact division in characteristic polynomial")
        c = -trace // k
        coeffs.append(c)
        if k < 4:
            shifted = tuple(
                tuple(b[i][j] + (c if i == j else 0) for j in range(4))
                for i in range(4)
            )
            b = mat_mul(m, shifted)
    return tuple(coeffs)


def coxeter_char_poly() -> tuple[int, ...]:
    return char_poly(coxeter_element())


def _poly_eval(coeffs: tuple[int, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def spectral_radius(error_bound: Fraction = Fraction(1, 10**13)) -> Fraction:
    """Largest real root of the Coxeter element polynomial, by bisection.

    Sign evaluations are exact at rational points; the returned value is
    within error_bound of the root.  The polynomial is palindromic, so
    the reciprocal of the returned root is also a root.
    """
    coeffs = coxeter_char_poly()
    lo, hi = Fraction(8), Fraction(9)
    if not (_poly_eval(coeffs, lo) < 0 < _poly_eval(coeffs, hi)):
        raise AssertionError("root bracket [8, 9] lost")
    while hi - lo > error_bound:
        mid = (lo + hi) / 2
        if _poly_eval(coeffs, mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def spectral_radius_closed_form() -> float:
    """Closed form of the largest root of t^4 - 7t^3 - 15t^2 - 7t + 1.

    The palindromic quartic factors as (t^2 - at + 1)(t^2 - bt + 1) with
    a + b = 7 and ab = -17, so a = (7 + 3 sqrt 13)/2 and the largest
    root is (a + sqrt(a^2 - 4))/2.
    """
    a = (7 + 3 * math.sqrt(13)) / 2
    return (a + math.sqrt(a * a - 4)) / 2


def prime_factor_count(q: Quadruple) -> int | None:
    """Number of prime factors, with multiplicity, of the entry product.

    Undefined (None) when any entry is zero: the product is then zero
    and the count has no meaning.
    """
    q = validate_quadruple(q)
    if any(x == 0 for x in q):
        return None
    product = q[0] * q[1] * q[2] * q[3]
    return sum(factorize(product).values())


def search_prime_factor_count(
    height_bound: int,
    max_count: int,
    max_bound: int | None = None,
) -> list[Quadruple]:
    """Canonical primitive quadruples of bounded height whose entry product
    has at most max_count prime factors (zero-entry quadruples excluded)."""
    kwargs = {} if max_bound is None else {"max_bound": max_bound}
    report = counting.enumerate_all(height_bound, mode="canonical", primitive=True, **kwargs)
    found = []
    for q in report.quadruples:
        count = prime_factor_count(q)
        if count is not None and count <= max_count:
            found.append(q)
    return found
