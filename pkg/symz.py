# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: Schur polynomials s_λ(z1..zr) in finitely many variables, the expansion (z1+...+zr)^d = Σ f^λ s_λ
#          and the principal specialisation s_λ(1,...,1)
# Note: s_λ(1,...,1) counts column-strict tableaux of shape λ with entries in {1..r}

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, prod

from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from exact import QQ, ZZ, determinant, exp_recurrence, to_integer, to_qq
from partitions import Partition, contents, degree_hook, format_partition, hook_lengths, pad, partitions_of
from report import CheckReport, InvariantViolation


@lru_cache(maxsize=None)
def z_ring(r, domain=ZZ):
    if r < 1:
        raise ValueError("need at least one z variable, got r={}".format(r))
    return ring(["z{}".format(k) for k in range(1, r + 1)], domain)[0]


class SymPoly:
    """Polynomial in z1..zr with integer coefficients, stored as a sympy PolyElement over ZZ."""

    __slots__ = ("poly",)

    def __init__(self, poly):
        self.poly = poly

    @classmethod
    def from_terms(cls, terms, r):
        base = z_ring(r)
        # InvariantViolation on any non-integral coefficient
        return cls(base.from_dict({
            tuple(e): ZZ(to_integer(c, "coefficient of z^{}".format(tuple(e)))) for e, c in terms.items() if c
        }))

    @classmethod
    def zero(cls, r):
        return cls(z_ring(r).zero)

    @property
    def r(self):
        return self.poly.ring.ngens

    @property
    def terms(self):
        return {tuple(m): int(c) for m, c in self.poly.terms()}

    def __add__(self, other):
        return SymPoly(self.poly + other.poly)

    def __sub__(self, other):
        return SymPoly(self.poly - other.poly)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymPoly(self.poly * other)
        return SymPoly(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return SymPoly(self.poly ** exponent)

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.poly)

    def permute(self, i, j):
        # swap z_{i+1} and z_{j+1}
        swapped = {}
        for exponents, coef in self.terms.items():
            e = list(exponents)
            e[i], e[j] = e[j], e[i]
            swapped[tuple(e)] = coef
        return SymPoly.from_terms(swapped, self.r)

    def is_symmetric(self):
        return all(self.permute(i, i + 1) == self for i in range(self.r - 1))

    def restrict(self, r):
        # set z_{r+1}, z_{r+2}, ... to zero
        kept = {e[:r]: c for e, c in self.terms.items() if not any(e[r:])}
        return SymPoly.from_terms(kept, r)

    def evaluate_ones(self):
        return sum(self.terms.values())

    def render(self):
        if not self:
            return "0"
        pieces = []
        for exponents, coef in sorted(self.terms.items(), key=lambda item: (-sum(item[0]), [-e for e in item[0]])):
            factors = ["z{}".format(k + 1) + ("^{}".format(e) if e > 1 else "") for k, e in enumerate(exponents) if e]
            pieces.append("{} * {}".format(coef, " ".join(factors)) if factors else str(coef))
        return " + ".join(pieces)

    def to_json(self):
        return [{"exponents": list(e), "coef": str(c)}
                for e, c in sorted(self.terms.items(), key=lambda item: (-sum(item[0]), [-x for x in item[0]]))]

    def __repr__(self):
        return "SymPoly({})".format(self.render())


def complete_homogeneous_z(k, r):
    base = z_ring(r)
    if k < 0:
        return SymPoly(base.zero)
    total = base.zero
    gens = base.gens
    for choice in combinations_with_replacement(range(r), k):
        total = total + prod((gens[i] for i in choice), start=base.one)
    return SymPoly(total)


def power_sum_z(k, r):
    base = z_ring(r)
    return SymPoly(sum((g ** k for g in base.gens), base.zero))


@lru_cache(maxsize=None)
def _schur_z(partition, r):
    base = z_ring(r)
    if len(partition) > r:
        return base.zero
    if not partition:
        return base.one
    size = len(partition)
    h = {}

    def entry(index):
        if index < 0:
            return base.zero
        if index not in h:
            h[index] = complete_homogeneous_z(index, r).poly
        return h[index]

    rows = [[entry(partition.part(j) - j + i) for j in range(size)] for i in range(size)]
    return determinant(rows, base.to_domain())


def schur_z(partition, r):
    """s_λ(z1..zr) by the Jacobi-Trudi determinant in complete homogeneous h_k(z)."""
    return SymPoly(_schur_z(Partition(partition), r))


def _alternant(exponents, r):
    base = z_ring(r)
    gens = base.gens
    rows = [[gens[j] ** exponents[i] for j in range(r)] for i in range(r)]
    return determinant(rows, base.to_domain())


def schur_z_bialternant(partition, r):
    """s_λ = a_{λ+δ} / a_δ, with the Vandermonde division required to be exact."""
    partition = Partition(partition)
    if len(partition) > r:
        return SymPoly.zero(r)
    padded = pad(partition, r)
    numerator = _alternant([padded[i] + r - 1 - i for i in range(r)], r)
    vandermonde = _alternant([r - 1 - i for i in range(r)], r)
    try:
        return SymPoly(numerator.exquo(vandermonde))
    except ExactQuotientFailed:
        raise InvariantViolation("alternant of {} is not divisible by the Vandermonde in {} variables".format(
            format_partition(partition), r))


def principal_specialization(partition, r):
    return schur_z(partition, r).evaluate_ones()


def hook_content_count(partition, r):
    """Π (r + c(x)) / h(x) over the boxes of λ."""
    partition = Partition(partition)
    numerator = prod(r + c for row in contents(partition) for c in row)
    denominator = prod(h for row in hook_lengths(partition) for h in row)
    return to_integer(Fraction(numerator, denominator), "hook-content count")


def _difference(left, right):
    diff = []
    keys = sorted(set(left.terms) | set(right.terms), reverse=True)
    for exponents in keys:
        a, b = left.terms.get(exponents, 0), right.terms.get(exponents, 0)
        if a != b:
            diff.append({"monomial": list(exponents), "lhs": a, "rhs": b})
    return diff


def schur_sum(d, r, weights=None):
    # Σ_{λ ⊢ d} w_λ s_λ(z1..zr), w_λ defaulting to f^λ
    total = SymPoly.zero(r)
    for partition in partitions_of(d):
        if len(partition) > r:
            continue
        weight = degree_hook(partition) if weights is None else weights(partition)
        total = total + schur_z(partition, r) * weight
    return total


def power_expansion_check(d, r):
    """(z1+...+zr)^d against Σ_{λ ⊢ d} f^λ s_λ(z1..zr), term by term."""
    report = CheckReport("powersum r={} d={}".format(r, d))
    lhs = power_sum_z(1, r) ** d
    rhs = schur_sum(d, r)
    diff = _difference(lhs, rhs)
    if diff:
        for entry in diff:
            report.fail("coefficient of z^{} differs: {} vs {}".format(entry["monomial"], entry["lhs"], entry["rhs"]),
                        **entry)
    else:
        shown = ["{}·s[{}]".format(degree_hook(p), format_partition(p)) for p in partitions_of(d) if len(p) <= r]
        report.note("(z1+...+z{})^{} = {}".format(r, d, " + ".join(shown) if shown else "1"))
    return report


def comp_identity_check(r, d):
    """r^d = Σ_{λ ⊢ d} s_λ(1,...,1) f^λ."""
    report = CheckReport("comp r={} d={}".format(r, d))
    total = 0
    for partition in partitions_of(d):
        specialised = principal_specialization(partition, r)
        oracle = hook_content_count(partition, r)
        report.expect(specialised == oracle,
                      "s[{}](1^{}) = {}, hook-content {}".format(format_partition(partition), r, specialised, oracle),
                      partition=format_partition(partition), specialised=specialised, oracle=oracle)
        total += specialised * degree_hook(partition)
    report.expect(total == r ** d, "{}^{} = {} vs Σ = {}".format(r, d, r ** d, total), expected=r ** d, actual=total)
    return report


def exponential_series_check(d, r):
    """d! times the t^d coefficient of exp(t·(z1+...+zr)) against Σ f^λ s_λ."""
    base = z_ring(r, QQ)
    p1 = sum(base.gens, base.zero)
    series = exp_recurrence(d, base.one, base.zero,
                            lambda k, e: p1 * e if k == 1 else base.zero,
                            lambda p, c: p.mul_ground(to_qq(c)))
    scaled = series[d].mul_ground(QQ(factorial(d)))
    lhs = SymPoly.from_terms({m: to_integer(c, "series coefficient") for m, c in scaled.terms()}, r)
    report = CheckReport("exp-series r={} d={}".format(r, d))
    diff = _difference(lhs, schur_sum(d, r))
    if diff:
        for entry in diff:
            report.fail("t^{}/{}! coefficient differs at z^{}".format(d, d, entry["monomial"]), **entry)
    else:
        report.note("t^{0}/{0}! coefficient of exp(t·p1) matches Σ f^λ s_λ".format(d))
    return report
