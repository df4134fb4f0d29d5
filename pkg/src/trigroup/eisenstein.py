"""Representations by the norm form z^2 - zw + w^2.

The form is the norm of the ring of Eisenstein integers, which has six
units, so the number of representations of k is six times a multiplicative
divisor sum: A(k) = 6 * sum over d | k of chi(d), where chi is the
nontrivial character mod 3.  Solving the form also counts the quadruples
containing a fixed positive pair (p, q), via the unimodular substitution
that sends the quadruple equation to z^2 - zw + w^2 = 3pq.
"""

from __future__ import annotations

import math

from .core import Quadruple, ResourceLimitError, is_triangle_quadruple

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Miller-Rabin with these witnesses is deterministic below 3.3e24.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n below 3.3e24; strong test above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    witnesses = _SMALL_PRIMES
    if n >= _MR_DETERMINISTIC_BOUND:
        witnesses = _SMALL_PRIMES + tuple(range(41, 160, 2))
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, max_iterations: int) -> int:
    """Brent-cycle rho; returns a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    spent = 0
    for c in range(1, 1000):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            spent += r
            if spent > max_iterations:
                raise ResourceLimitError(f"factorization gave up on {n}")
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ResourceLimitError(f"factorization gave up on {n}")


def factorize(k: int, max_iterations: int = 10_000_000) -> dict[int, int]:
    """Exact prime factorization as {prime: exponent}; factorize(1) == {}.

    Trial division by small primes, then Miller-Rabin plus Pollard-Brent
    splitting.  Raises ResourceLimitError on adversarial inputs rather
    than running unbounded.
    """
    if k < 1:
        raise ValueError(f"factorize needs a positive integer, got {k!r}")
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while k % p == 0:
            factors[p] = factors.get(p, 0) + 1
            k //= p
    p = 41
    while p * p <= k and p < 100_000:
        while k % p == 0:
            factors[p] = factors.get(p, 0) + 1
            k //= p
        p += 2
    stack = [k] if k > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = _pollard_rho(m, max_iterations)
        stack.extend((d, m // d))
    return dict(sorted(factors.items()))


def divisor_count(n: int) -> int:
    """Number of divisors of n, from the factorization."""
    result = 1
    for e in factorize(n).values():
        result *= e + 1
    return result


def solve_norm_form(k: int) -> list[tuple[int, int]]:
    """All integer (z, w) with z^2 - zw + w^2 = k, sorted lexicographically.

    Completing the square gives (2z - w)^2 + 3w^2 = 4k, so |w| is at
    most 2*sqrt(k/3); for each w the discriminant 4k - 3w^2 must be a
    perfect square, tested with exact integer square roots.
    """
    if k < 0:
        raise ValueError(f"norm form target must be nonnegative, got {k!r}")
    if k == 0:
        return [(0, 0)]
    solutions = []
    wmax = math.isqrt(4 * k // 3) + 1
    for w in range(-wmax, wmax + 1):
        disc = 4 * k - 3 * w * w
        if disc < 0:
            continue
        s = math.isqrt(disc)
        if s * s != disc:
            continue
        if (w + s) % 2 == 0:
            solutions.append(((w + s) // 2, w))
            if s != 0:
                solutions.append(((w - s) // 2, w))
    solutions.sort()
    return solutions


def divisor_character_sum(m: int) -> int:
    """Sum of chi(d) over divisors d of m, chi the nontrivial character mod 3.

    chi(d) is +1, -1, 0 for d congruent to 1, 2, 0 mod 3.  Computed
    multiplicatively: a prime p = 1 mod 3 with exponent e contributes
    e + 1, p = 2 mod 3 contributes 1 for even e and 0 for odd e, and
    p = 3 contributes 1.  Six times this value is the number of norm
    form representations of m, which the tests cross-check against
    solve_norm_form.
    """
    if m < 1:
        raise ValueError(f"argument must be a positive integer, got {m!r}")
    result = 1
    for p, e in factorize(m).items():
        if p == 3:
            continue
        if p % 3 == 1:
            result *= e + 1
        elif e % 2 == 1:
            return 0
    return result


def representation_count(k: int) -> int:
    """Number of integer solutions of z^2 - zw + w^2 = k, for k >= 1."""
    return 6 * divisor_character_sum(k)


def quadruples_with_pair(p: int, q: int) -> list[Quadruple]:
    """All quadruples (p, q, c, d) containing the positive pair (p, q).

    Each norm form solution (z, w) of z^2 - zw + w^2 = 3pq maps to the
    extension (c, d) = (p + q - z, p + q - w).  Nonnegativity of c and d
    and validity of the quadruple are theorems for p, q > 0, so they are
    asserted, not filtered.  Extensions are ordered: (c, d) and (d, c)
    are distinct entries when they both occur.
    """
    if p < 1 or q < 1:
        raise ValueError(f"pair entries must be positive, got ({p!r}, {q!r})")
    extensions = []
    for z, w in solve_norm_form(3 * p * q):
        c, d = p + q - z, p + q - w
        assert c >= 0 and d >= 0, (p, q, z, w)
        quad = (p, q, c, d)
        assert is_triangle_quadruple(quad), quad
        extensions.append(quad)
    return extensions
