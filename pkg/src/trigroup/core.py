"""Quadruples, the quadratic form, and the four reflection generators.

A triangle quadruple is an ordered 4-tuple of nonnegative integers
(a, b, c, d) satisfying 3(a^2+b^2+c^2+d^2) = (a+b+c+d)^2.  The generator
at position i replaces entry i by the sum of the other three entries
minus entry i; the four generators are involutions represented by
integer 4x4 matrices and generate a reflection group acting on the set
of quadruples.

All arithmetic is exact arbitrary-precision integer arithmetic.
"""

from __future__ import annotations

Quadruple = tuple[int, int, int, int]
Vector4 = tuple[int, int, int, int]
Mat4 = tuple[tuple[int, int, int, int], ...]

GENERATOR_INDICES = (1, 2, 3, 4)

IDENTITY: Mat4 = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
)

# Reflection matrices: row i of S_i is (1,1,1,1) with the diagonal entry
# negated; all other rows are identity rows.
_GENERATORS: dict[int, Mat4] = {
    1: ((-1, 1, 1, 1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    2: ((1, 0, 0, 0), (1, -1, 1, 1), (0, 0, 1, 0), (0, 0, 0, 1)),
    3: ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, -1, 1), (0, 0, 0, 1)),
    4: ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, -1)),
}

# Symmetric matrix of the form Q(x) = x A x^T, diagonal 2, off-diagonal -1.
FORM_MATRIX: Mat4 = (
    (2, -1, -1, -1),
    (-1, 2, -1, -1),
    (-1, -1, 2, -1),
    (-1, -1, -1, 2),
)


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration exceeds its configured element cap."""


def mat_mul(x: Mat4, y: Mat4) -> Mat4:
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


def mat_vec(m: Mat4, v: Vector4) -> Vector4:
    return tuple(sum(m[i][k] * v[k] for k in range(4)) for i in range(4))


def mat_transpose(m: Mat4) -> Mat4:
    return tuple(tuple(m[j][i] for j in range(4)) for i in range(4))


def generator_matrix(i: int) -> Mat4:
    """Return the reflection matrix S_i for i in {1, 2, 3, 4}."""
    if i not in _GENERATORS:
        raise ValueError(f"generator index must be in {{1,2,3,4}}, got {i!r}")
    return _GENERATORS[i]


def quadratic_form(x) -> int:
    """Evaluate Q(x) = 3*sum(x_i^2) - (sum(x_i))^2 on an integer 4-vector.

    Q vanishes exactly on the solutions of the quadruple equation, and
    equals x A x^T for the form matrix A.
    """
    a, b, c, d = x
    return 3 * (a * a + b * b + c * c + d * d) - (a + b + c + d) ** 2


def is_triangle_quadruple(q) -> bool:
    """True iff q is a nonnegative, not-all-zero integer 4-tuple with Q(q) = 0.

    Total over arbitrary integer 4-tuples.  The all-zero tuple satisfies
    the equation but is rejected: it is fixed by every generator and has
    no geometric reading.
    """
    if len(q) != 4:
        return False
    if any(x < 0 for x in q):
        return False
    if not any(q):
        return False
    return quadratic_form(q) == 0


def validate_quadruple(q) -> Quadruple:
    """Return q as a tuple, raising ValueError if it is not a valid quadruple."""
    t = tuple(q)
    if not is_triangle_quadruple(t):
        raise ValueError(f"not a triangle quadruple: {t!r}")
    return t


def apply_generator(q: Quadruple, i: int) -> Quadruple:
    """Replace entry i of a valid quadruple by (sum of the others) - entry.

    The result is again a valid quadruple; nonnegativity of the new
    entry is a theorem (the product of the old and new entry at
    position i equals the sum of squared differences of the other
    three), so it is asserted rather than branched on.
    """
    q = validate_quadruple(q)
    if i not in _GENERATORS:
        raise ValueError(f"generator index must be in {{1,2,3,4}}, got {i!r}")
    s = sum(q)
    new = s - 2 * q[i - 1]
    assert new >= 0, (q, i)
    return tuple(new if j == i - 1 else q[j] for j in range(4))


def verify_coxeter_relations() -> list[tuple[str, bool]]:
    """Check S_i^2 = I (4 identities) and (S_i S_j)^3 = I (12 identities).

    Returns one (name, holds) record per identity, in a fixed order.
    Every check is an exact integer matrix computation.
    """
    checks: list[tuple[str, bool]] = []
    for i in GENERATOR_INDICES:
        si = _GENERATORS[i]
        checks.append((f"S{i}^2", mat_mul(si, si) == IDENTITY))
    for i in GENERATOR_INDICES:
        for j in GENERATOR_INDICES:
            if i == j:
                continue
            p = mat_mul(_GENERATORS[i], _GENERATORS[j])
            checks.append((f"(S{i}S{j})^3", mat_mul(mat_mul(p, p), p) == IDENTITY))
    return checks


def form_signature() -> tuple[int, int, int]:
    """Signature of the form matrix as (positive, negative, zero) counts.

    Computed by exhibiting an exact eigenbasis: A = 3I - J with J the
    all-ones matrix, so (1,1,1,1) has eigenvalue -1 and the three
    independent sum-zero differences have eigenvalue 3.
    """
    ones = (1, 1, 1, 1)
    if mat_vec(FORM_MATRIX, ones) != (-1, -1, -1, -1):
        raise AssertionError("form matrix lost its -1 eigenvector")
    positive = 0
    for v in ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1)):
        if mat_vec(FORM_MATRIX, v) != tuple(3 * x for x in v):
            raise AssertionError(f"form matrix lost its 3-eigenvector {v}")
        positive += 1
    return (positive, 1, 0)


# Change of variables (a,b,c,d) -> (a, b, a+b-c, a+b-d); unimodular, and
# it carries Q to -6xy + 2z^2 - 2zw + 2w^2.
SUBSTITUTION_MATRIX: Mat4 = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (1, 1, -1, 0),
    (1, 1, 0, -1),
)


def _det4(m: Mat4) -> int:
    """Determinant by cofactor expansion; exact."""

    def det3(r):
        (a, b, c), (d, e, f), (g, h, i) = r
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    total = 0
    for j in range(4):
        minor = tuple(
            tuple(m[r][col] for col in range(4) if col != j) for r in range(1, 4)
        )
        total += (-1) ** j * m[0][j] * det3(minor)
    return total


assert _det4(SUBSTITUTION_MATRIX) == 1


def norm_form_substitution(q: Quadruple) -> tuple[int, int, int, int]:
    """Map a nonincreasing valid quadruple (a,b,c,d) to (a, b, a+b-c, a+b-d).

    The image (x,y,z,w) satisfies -6xy + 2z^2 - 2zw + 2w^2 = Q(q) = 0,
    i.e. z^2 - zw + w^2 = 3xy.  Rejects input that is not sorted in
    nonincreasing order.
    """
    q = validate_quadruple(q)
    a, b, c, d = q
    if not (a >= b >= c >= d):
        raise ValueError(f"quadruple must be sorted nonincreasing: {q!r}")
    return (a, b, a + b - c, a + b - d)
