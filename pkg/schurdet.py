# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: Truncated power series with exact rational coefficients, Schur determinants and f^λ = |λ|!·Δ_λ(exp t)
# Note: the worked (3,2,2) example evaluates to Δ = 1/240 and f = 21; a printed value of 15 for this
#       determinant is a misprint and is not reproduced anywhere here.

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from exact import rational_determinant
from partitions import Partition, format_partition, hook_product
from report import CheckReport, InvariantViolation, format_rational


@dataclass(frozen=True)
class TruncatedSeries:
    """Σ fₙtⁿ known up to tᵒʳᵈᵉʳ; fⱼ = 0 for j < 0 and for j > order."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be non-negative, got {}".format(self.order))
        if len(self.coeffs) != self.order + 1:
            raise ValueError("series of order {} needs {} coefficients, got {}".format(
                self.order, self.order + 1, len(self.coeffs)))

    def __getitem__(self, n):
        if n < 0 or n > self.order:
            return Fraction(0)
        return self.coeffs[n]


def series_from_coefficients(values, order=None):
    values = [Fraction(v) for v in values]
    if order is None:
        order = len(values) - 1
    values = (values + [Fraction(0)] * (order + 1))[:order + 1]
    return TruncatedSeries(tuple(values), order)


def exp_series(order):
    if order < 0:
        raise ValueError("series order must be non-negative, got {}".format(order))
    return TruncatedSeries(tuple(Fraction(1, factorial(n)) for n in range(order + 1)), order)


def required_order(partition):
    partition = Partition(partition)
    if not partition:
        return 0
    return partition[0] + len(partition) - 1


def schur_matrix(f, partition, size=None):
    """Rows of (f_{λⱼ-j+i}) for 1 <= i, j <= size, size defaulting to ℓ(λ)."""
    partition = Partition(partition)
    if size is None:
        size = len(partition)
    if size < len(partition):
        raise ValueError("matrix size {} is smaller than the length of {}".format(size, format_partition(partition)))
    need = partition.first + size - 1 if size else 0
    if need > f.order:
        raise ValueError("Δ_{} needs series order {}, got {}".format(format_partition(partition), need, f.order))
    return [[f[partition.part(j) - j + i] for j in range(size)] for i in range(size)]


def schur_determinant(f, partition):
    partition = Partition(partition)
    if not partition:
        return Fraction(1)
    return rational_determinant(schur_matrix(f, partition))


def degree_determinant(partition):
    partition = Partition(partition)
    value = factorial(partition.weight) * schur_determinant(exp_series(required_order(partition)), partition)
    if value.denominator != 1 or value <= 0:
        raise InvariantViolation("|λ|!·Δ_λ(exp t) for {} is not a positive integer: {}".format(
            format_partition(partition), format_rational(value)))
    return value.numerator


def hook_product_check(partition):
    partition = Partition(partition)
    delta = schur_determinant(exp_series(required_order(partition)), partition)
    hooks = hook_product(partition)
    report = CheckReport("hook-product {}".format(format_partition(partition)))
    return report.expect(
        hooks * delta == 1,
        "Π h(x) = {}, Δ(exp t) = {}, product = {}".format(hooks, format_rational(delta), format_rational(hooks * delta)),
        partition=format_partition(partition), hooks=hooks, delta=delta,
    )
