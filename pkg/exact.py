# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: Exact scalar conversions, determinants and the exponential recurrence used by every module

from fractions import Fraction

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from report import InvariantViolation


def to_fraction(value):
    # QQ/ZZ ground elements (python or gmpy flavour), ints and Fractions
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is None or denominator is None:
        return Fraction(int(value))
    if callable(numerator):
        numerator, denominator = numerator(), denominator()
    return Fraction(int(numerator), int(denominator))


def to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_integer(value, what="value"):
    value = to_fraction(value)
    if value.denominator != 1:
        raise InvariantViolation("{} is not an integer: {}".format(what, value))
    return value.numerator


def determinant(rows, domain):
    """Exact determinant of a square matrix whose entries live in `domain`.

    Works for fields (QQ) and for polynomial rings, where DomainMatrix runs the
    fraction-free Bareiss elimination. The empty matrix has determinant one.
    """
    size = len(rows)
    if size == 0:
        return domain.one
    if any(len(row) != size for row in rows):
        raise ValueError("determinant needs a square matrix, got {} rows of lengths {}".format(
            size, [len(row) for row in rows]))
    return DomainMatrix([list(row) for row in rows], (size, size), domain).det()


def rational_determinant(rows):
    return to_fraction(determinant([[to_qq(entry) for entry in row] for row in rows], QQ))


def solve_rational(matrix, rhs):
    # unique solution x of matrix * x = rhs over QQ
    size = len(matrix)
    if size == 0:
        return []
    a = DomainMatrix([[to_qq(v) for v in row] for row in matrix], (size, size), QQ)
    b = DomainMatrix([[to_qq(v)] for v in rhs], (size, 1), QQ)
    try:
        x = a.lu_solve(b)
    except DMNonInvertibleMatrixError as exc:
        raise InvariantViolation("singular system of size {}: {}".format(size, exc))
    column = x.to_Matrix()
    return [Fraction(int(column[i, 0].p), int(column[i, 0].q)) for i in range(size)]


def invert_rational(matrix):
    size = len(matrix)
    if size == 0:
        return []
    a = DomainMatrix([[to_qq(v) for v in row] for row in matrix], (size, size), QQ)
    try:
        inverse = a.inv().to_Matrix()
    except DMNonInvertibleMatrixError as exc:
        raise InvariantViolation("singular matrix of size {}: {}".format(size, exc))
    return [[Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(size)] for i in range(size)]


def exp_recurrence(order, one, zero, step, scale):
    """Coefficients E_0..E_order of exp(A(t)) for A(t) = sum_k a_k t^k.

    Uses m*E_m = sum_{k=1}^m (k*a_k) E_{m-k}; `step(k, e)` must return (k*a_k)*e.
    Only requires the a_k to commute, so it serves polynomials, differential
    operators and commuting derivations alike.
    """
    coeffs = [one]
    for m in range(1, order + 1):
        acc = zero
        for k in range(1, m + 1):
            acc = acc + step(k, coeffs[m - k])
        coeffs.append(scale(acc, Fraction(1, m)))
    return coeffs


__all__ = [
    "QQ",
    "ZZ",
    "to_fraction",
    "to_qq",
    "to_integer",
    "determinant",
    "rational_determinant",
    "solve_rational",
    "invert_rational",
    "exp_recurrence",
]
