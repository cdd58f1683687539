"""Small exact linear algebra helpers over Fractions."""

from fractions import Fraction


def det(rows):
    """Determinant of a square matrix of rationals by fraction-exact elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col]
            if f:
                f /= p
                row_r, row_c = m[r], m[col]
                for c in range(col + 1, n):
                    row_r[c] -= f * row_c[c]
    return sign * result


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly; raises ZeroDivisionError when singular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col] / p
                for c in range(col, n + 1):
                    aug[r][c] -= f * aug[col][c]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def lagrange_at(points, values, x0):
    """Value at ``x0`` of the interpolating polynomial through ``(points, values)``."""
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(points, values)):
        term = Fraction(yi)
        for j, xj in enumerate(points):
            if j != i:
                term *= Fraction(x0 - xj, 1) / (xi - xj)
        total += term
    return total
