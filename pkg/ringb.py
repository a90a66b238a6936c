# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: The ring B = Q[x1, x2, ...] with x_i of weight i, Schur polynomials S_λ(x), the operators S_i(∂̃),
#          Pieri multiplication, Schur-basis expansion and the degree / integral identities built on them
# Notes:
#   a polynomial of weighted degree d only ever involves x1..xd, so computations run in N = d variables
#   exponent vectors are reported without trailing zeros; internally they are fixed-length sympy monomials

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from sympy import Poly, Symbol, SympifyError, sympify
from sympy.polys.polyerrors import PolynomialError
from sympy.polys.rings import ring

import config
from exact import QQ, determinant, exp_recurrence, invert_rational, to_fraction, to_qq
from partitions import (
    Partition,
    canonical_key,
    conjugate,
    degree_hook,
    format_partition,
    multiplicities,
    partitions_of,
    pieri_up,
)
from report import CheckReport, InvariantViolation, format_rational


@lru_cache(maxsize=None)
def polynomial_ring(nvars):
    return ring(["x{}".format(k) for k in range(1, max(nvars, 1) + 1)], QQ)[0]


@lru_cache(maxsize=None)
def operator_ring(nvars):
    # D_k stands for ∂/∂x_k; the D_k commute so operators are polynomials in them
    return ring(["D{}".format(k) for k in range(1, max(nvars, 1) + 1)], QQ)[0]


def _strip(exponents):
    exponents = tuple(int(e) for e in exponents)
    end = len(exponents)
    while end and exponents[end - 1] == 0:
        end -= 1
    return exponents[:end]


def _pad(exponents, nvars):
    exponents = _strip(exponents)
    if len(exponents) > nvars:
        raise ValueError("monomial {} needs more than {} variables".format(exponents, nvars))
    return exponents + (0,) * (nvars - len(exponents))


def monomial_weight(exponents):
    return sum((k + 1) * e for k, e in enumerate(exponents))


def monomial_partition(exponents):
    # x_1^{e_1} x_2^{e_2} ... <-> the partition with e_k parts equal to k
    parts = []
    for k in range(len(exponents), 0, -1):
        parts.extend([k] * exponents[k - 1])
    return Partition(parts)


def partition_monomial(partition):
    partition = Partition(partition)
    if not partition:
        return ()
    counts = multiplicities(partition)
    return tuple(counts.get(k, 0) for k in range(1, partition[0] + 1))


def _term_order(exponents):
    return (-monomial_weight(exponents), tuple(-e for e in exponents))


class _SparseElement:
    """Shared behaviour of polynomials in x and operators in D: a sympy PolyElement over QQ."""

    __slots__ = ("poly",)
    _ring_for = None
    _symbol = "x"

    def __init__(self, poly):
        self.poly = poly

    @classmethod
    def from_terms(cls, terms, nvars=None):
        terms = {_strip(e): Fraction(c) for e, c in dict(terms).items() if Fraction(c) != 0}
        if nvars is None:
            nvars = max([len(e) for e in terms] + [1])
        base = cls._ring_for(nvars)
        return cls(base.from_dict({_pad(e, base.ngens): to_qq(c) for e, c in terms.items()}))

    @classmethod
    def constant(cls, value, nvars=1):
        return cls.from_terms({(): value}, nvars)

    @property
    def nvars(self):
        return self.poly.ring.ngens

    @property
    def terms(self):
        return {_strip(m): to_fraction(c) for m, c in self.poly.terms()}

    def lift(self, nvars):
        if nvars == self.nvars:
            return self
        return type(self).from_terms(self.terms, max(nvars, self.nvars))

    def _common(self, other):
        if not isinstance(other, type(self)):
            other = type(self).constant(other, self.nvars)
        nvars = max(self.nvars, other.nvars)
        return self.lift(nvars).poly, other.lift(nvars).poly

    def __add__(self, other):
        a, b = self._common(other)
        return type(self)(a + b)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._common(other)
        return type(self)(a - b)

    def __neg__(self):
        return type(self)(-self.poly)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self._common(other)
        return type(self)(a * b)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative power {}".format(exponent))
        return type(self)(self.poly ** exponent)

    def scale(self, value):
        return type(self)(self.poly.mul_ground(to_qq(value)))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).constant(other, self.nvars)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.poly)

    @property
    def is_constant(self):
        return all(not e for e in self.terms)

    @property
    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _term_order(item[0]))

    def render(self):
        if not self:
            return "0"
        pieces = []
        for exponents, coef in self.sorted_terms():
            factors = [
                "{}{}".format(self._symbol, k + 1) + ("^{}".format(e) if e > 1 else "")
                for k, e in enumerate(exponents) if e
            ]
            if factors:
                pieces.append("{} * {}".format(format_rational(coef), " ".join(factors)))
            else:
                pieces.append(format_rational(coef))
        return " + ".join(pieces)

    def to_json(self):
        return [{"exponents": list(e), "coef": format_rational(c)} for e, c in self.sorted_terms()]

    def __repr__(self):
        return "{}({})".format(type(self).__name__, self.render())


class WeightedPolynomial(_SparseElement):
    """Element of B in x1..xN, x_i carrying weight i."""

    __slots__ = ()
    _ring_for = staticmethod(polynomial_ring)
    _symbol = "x"

    @classmethod
    def variable(cls, i, nvars=None):
        nvars = max(i, nvars or 0)
        return cls.from_terms({(0,) * (i - 1) + (1,): 1}, nvars)

    def weighted_degree(self):
        if not self:
            return 0
        return max(monomial_weight(e) for e in self.terms)

    def components(self):
        grouped = {}
        for exponents, coef in self.terms.items():
            grouped.setdefault(monomial_weight(exponents), {})[exponents] = coef
        return {d: WeightedPolynomial.from_terms(t, self.nvars) for d, t in sorted(grouped.items())}

    def is_homogeneous(self):
        return len(self.components()) <= 1


class DiffOperator(_SparseElement):
    """Constant-coefficient differential operator Σ c_α ∂^α; D_k = ∂/∂x_k."""

    __slots__ = ()
    _ring_for = staticmethod(operator_ring)
    _symbol = "D"

    @classmethod
    def identity(cls, nvars=1):
        return cls.constant(1, nvars)

    def apply(self, polynomial):
        nvars = max(self.nvars, polynomial.nvars)
        target = polynomial.lift(nvars).poly
        gens = target.ring.gens
        result = target.ring.zero
        for exponents, coef in self.terms.items():
            image = target
            for k, e in enumerate(exponents):
                for _ in range(e):
                    image = image.diff(gens[k])
                    if not image:
                        break
            if image:
                result = result + image.mul_ground(to_qq(coef))
        return WeightedPolynomial(result)


def _require_variables(nvars, weight, what):
    if nvars < weight:
        raise ValueError("{} has weight {} but only {} variables were allowed".format(what, weight, nvars))


@lru_cache(maxsize=None)
def _generators(nvars, alternating):
    # S_0..S_N (alternating=False) or e_0..e_N (alternating=True) as PolyElements of polynomial_ring(N)
    base = polynomial_ring(nvars)
    gens = base.gens

    def step(k, e):
        term = gens[k - 1] * e
        if alternating and k % 2 == 0:
            term = -term
        return term * k

    return tuple(exp_recurrence(nvars, base.one, base.zero, step, lambda p, c: p.mul_ground(to_qq(c))))


def complete_generator(n, nvars=None):
    """S_n(x), the coefficient of t^n in exp(Σ x_i t^i)."""
    if n < 0:
        raise ValueError("generator index must be non-negative, got {}".format(n))
    nvars = max(n, 1) if nvars is None else nvars
    _require_variables(nvars, n, "S_{}".format(n))
    return WeightedPolynomial(_generators(max(nvars, 1), False)[n])


def elementary_generator(n, nvars=None):
    """e_n(x), the coefficient of t^n in exp(Σ (-1)^{i-1} x_i t^i)."""
    if n < 0:
        raise ValueError("generator index must be non-negative, got {}".format(n))
    nvars = max(n, 1) if nvars is None else nvars
    _require_variables(nvars, n, "e_{}".format(n))
    return WeightedPolynomial(_generators(max(nvars, 1), True)[n])


def _jacobi_trudi(partition, nvars, alternating):
    base = polynomial_ring(nvars)
    gens = _generators(nvars, alternating)
    size = len(partition)

    def entry(index):
        return gens[index] if index >= 0 else base.zero

    rows = [[entry(partition.part(j) - j + i) for j in range(size)] for i in range(size)]
    return determinant(rows, base.to_domain())


@lru_cache(maxsize=None)
def _schur_poly(partition, nvars):
    partition = Partition(partition)
    if not partition:
        return polynomial_ring(nvars).one
    # the dual determinant in e's is smaller for tall shapes
    if len(partition) > partition[0]:
        return _jacobi_trudi(conjugate(partition), nvars, True)
    return _jacobi_trudi(partition, nvars, False)


def schur_polynomial(partition, nvars=None, route=None):
    """S_λ(x) = det(S_{λⱼ-j+i}); route may force "complete" or "elementary"."""
    partition = Partition(partition)
    nvars = max(partition.weight, 1) if nvars is None else nvars
    _require_variables(nvars, partition.weight, "S_{}".format(format_partition(partition)))
    nvars = max(nvars, 1)
    if route == "complete":
        return WeightedPolynomial(_jacobi_trudi(partition, nvars, False) if partition else polynomial_ring(nvars).one)
    if route == "elementary":
        conj = conjugate(partition)
        return WeightedPolynomial(_jacobi_trudi(conj, nvars, True) if partition else polynomial_ring(nvars).one)
    return WeightedPolynomial(_schur_poly(partition, nvars))


def partial_derivative(polynomial, i, order=1):
    if not 1 <= i <= polynomial.nvars:
        raise ValueError("variable index {} outside 1..{}".format(i, polynomial.nvars))
    if order < 1:
        raise ValueError("derivative order must be positive, got {}".format(order))
    poly = polynomial.poly
    gen = poly.ring.gens[i - 1]
    for _ in range(order):
        poly = poly.diff(gen)
    return WeightedPolynomial(poly)


def degree_derivative(partition):
    """f^λ as the |λ|-th x1-derivative of S_λ(x)."""
    partition = Partition(partition)
    d = partition.weight
    polynomial = schur_polynomial(partition)
    if d:
        polynomial = partial_derivative(polynomial, 1, d)
    if not polynomial.is_constant:
        raise InvariantViolation("∂^{0}S_{1}/∂x1^{0} is not constant: {2}".format(
            d, format_partition(partition), polynomial.render()))
    value = polynomial.constant_term
    if value.denominator != 1 or value <= 0:
        raise InvariantViolation("∂^{}S_{} = {} is not a positive integer".format(
            d, format_partition(partition), format_rational(value)))
    return value.numerator


def s_tilde_operator(i, nvars=None):
    """S_i(∂̃): coefficient of t^i in exp(Σ_k (t^k/k) ∂/∂x_k)."""
    if i < 0:
        raise ValueError("operator index must be non-negative, got {}".format(i))
    nvars = max(i, 1) if nvars is None else max(nvars, i, 1)
    base = operator_ring(nvars)
    gens = base.gens
    # k * (D_k / k) = D_k
    coeffs = exp_recurrence(i, base.one, base.zero, lambda k, e: gens[k - 1] * e,
                            lambda p, c: p.mul_ground(to_qq(c)))
    return DiffOperator(coeffs[i])


def operator_from_polynomial(polynomial):
    """P(∂̃): substitute x_k -> (1/k) ∂/∂x_k."""
    terms = {}
    for exponents, coef in polynomial.terms.items():
        weight = prod(Fraction(1, k + 1) ** e for k, e in enumerate(exponents))
        terms[exponents] = coef * weight
    return DiffOperator.from_terms(terms, polynomial.nvars)


class SchurExpansion:
    """Sparse Σ c_λ S_λ with exact rational coefficients; zero coefficients are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        for partition, coef in dict(coeffs or {}).items():
            coef = Fraction(coef)
            if coef:
                cleaned[Partition(partition)] = coef
        self.coeffs = cleaned

    @classmethod
    def basis(cls, partition):
        return cls({Partition(partition): 1})

    def coefficient(self, partition):
        return self.coeffs.get(Partition(partition), Fraction(0))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda item: canonical_key(item[0]))

    def __add__(self, other):
        merged = dict(self.coeffs)
        for partition, coef in other.coeffs.items():
            merged[partition] = merged.get(partition, Fraction(0)) + coef
        return SchurExpansion(merged)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, value):
        return SchurExpansion({p: c * value for p, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def render(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for partition, coef in self.items():
            name = "S[{}]".format(format_partition(partition))
            pieces.append(name if coef == 1 else "{}·{}".format(format_rational(coef), name))
        return " + ".join(pieces)

    def to_json(self):
        return [{"partition": format_partition(p), "coef": format_rational(c)} for p, c in self.items()]

    def __repr__(self):
        return "SchurExpansion({})".format(self.render())


def pieri_multiply(i, expansion, cap=None):
    """S_i · Σ c_λ S_λ = Σ c_λ Σ_{μ ∈ PF_i(λ)} S_μ, optionally clipped to a rectangle."""
    if i < 0:
        raise ValueError("Pieri index must be non-negative, got {}".format(i))
    result = {}
    for partition, coef in expansion.coeffs.items():
        for mu in pieri_up(partition, i, cap):
            result[mu] = result.get(mu, Fraction(0)) + coef
    return SchurExpansion(result)


@lru_cache(maxsize=None)
def _schur_inverse(d):
    # columns of the forward matrix: S_λ in monomial coordinates x_μ, λ, μ ⊢ d
    shapes = partitions_of(d)
    index = {mu: row for row, mu in enumerate(shapes)}
    forward = [[Fraction(0)] * len(shapes) for _ in shapes]
    for column, partition in enumerate(shapes):
        for exponents, coef in schur_polynomial(partition, d).terms.items():
            forward[index[monomial_partition(exponents)]][column] = coef
    return tuple(shapes), invert_rational(forward)


def expand_in_schur(polynomial):
    """Unique c_λ with P = Σ c_λ S_λ(x), solved exactly one weighted component at a time."""
    result = {}
    for d, component in polynomial.components().items():
        if d == 0:
            result[Partition()] = component.constant_term
            continue
        shapes, inverse = _schur_inverse(d)
        index = {mu: row for row, mu in enumerate(shapes)}
        vector = [Fraction(0)] * len(shapes)
        for exponents, coef in component.terms.items():
            vector[index[monomial_partition(exponents)]] = coef
        for row, partition in enumerate(shapes):
            value = sum((a * b for a, b in zip(inverse[row], vector) if b), Fraction(0))
            if value:
                result[partition] = value
    expansion = SchurExpansion(result)
    if schur_to_polynomial(expansion, polynomial.nvars) != polynomial:
        raise InvariantViolation("Schur expansion does not reproduce {}".format(polynomial.render()))
    return expansion


def schur_to_polynomial(expansion, nvars=None):
    weight = max([p.weight for p in expansion.coeffs] + [1])
    nvars = max(weight, nvars or 1)
    total = WeightedPolynomial.constant(0, nvars)
    for partition, coef in expansion.items():
        total = total + schur_polynomial(partition, nvars).scale(coef)
    return total


def hall_pairing(left, right):
    """⟨P, Q⟩ with the Schur polynomials orthonormal."""
    a, b = expand_in_schur(left), expand_in_schur(right)
    return sum((c * b.coefficient(p) for p, c in a.coeffs.items()), Fraction(0))


def h_mu(partition, nvars=None):
    # h_μ = S_{μ1} S_{μ2} ... in the x variables
    partition = Partition(partition)
    nvars = max(partition.weight, 1) if nvars is None else nvars
    total = WeightedPolynomial.constant(1, nvars)
    for part in partition:
        total = total * complete_generator(part, nvars)
    return total


def multinomial_closed_form(partition):
    partition = Partition(partition)
    denominator = prod(factorial(k) ** m for k, m in multiplicities(partition).items())
    return Fraction(factorial(partition.weight), denominator)


def integral_h_mu(partition, cutoff=None):
    """(∂/∂x1)^{|μ|} h_μ, asserted equal to |μ|! / Π_k (k!)^{m_k}."""
    partition = Partition(partition)
    if cutoff is None:
        cutoff = config.formula_cutoff()
    if partition.weight > cutoff:
        raise ValueError("|{}| = {} exceeds the formula cutoff {}".format(
            format_partition(partition), partition.weight, cutoff))
    polynomial = h_mu(partition)
    if partition.weight:
        polynomial = partial_derivative(polynomial, 1, partition.weight)
    value = polynomial.constant_term
    expected = multinomial_closed_form(partition)
    if not polynomial.is_constant or value != expected:
        raise InvariantViolation("∂^{}h_{} = {} but the closed form gives {}".format(
            partition.weight, format_partition(partition), polynomial.render(), format_rational(expected)))
    return value


@lru_cache(maxsize=None)
def _u_ring(nvars):
    return ring(["u{}".format(k) for k in range(1, max(nvars, 1) + 1)], QQ)[0]


def integral_generating_coefficient(partition):
    """|μ|! Π m_i! times the coefficient of Π u_i^{m_i} t^{|μ|} in exp(Σ u_i t^i / i!).

    The u_i enter exponentially as well, so the bare coefficient is off by Π m_i!.
    """
    partition = Partition(partition)
    d = partition.weight
    if not d:
        return Fraction(1)
    base = _u_ring(partition[0])
    gens = base.gens

    def step(k, e):
        # k * (u_k / k!) = u_k / (k-1)!
        if k > len(gens):
            return base.zero
        return (gens[k - 1] * e).mul_ground(QQ(1, factorial(k - 1)))

    series = exp_recurrence(d, base.one, base.zero, step, lambda p, c: p.mul_ground(to_qq(c)))
    counts = multiplicities(partition)
    monom = tuple(counts.get(k, 0) for k in range(1, partition[0] + 1))
    return to_fraction(series[d].get(monom, QQ.zero)) * factorial(d) * prod(factorial(m) for m in counts.values())


def square_identity_check(n):
    """n! = Σ_{λ ⊢ n} (f^λ)², with f^λ read off the Schur expansion of x1^n."""
    report = CheckReport("square {}".format(n))
    expansion = expand_in_schur(WeightedPolynomial.variable(1, max(n, 1)) ** n)
    squares = []
    for partition in partitions_of(n):
        coefficient = expansion.coefficient(partition)
        hook = degree_hook(partition)
        report.expect(coefficient == hook,
                      "<x1^{}, S[{}]> = {}, f = {}".format(n, format_partition(partition), format_rational(coefficient), hook),
                      partition=format_partition(partition), coefficient=coefficient, f_hook=hook)
        squares.append(hook * hook)
    total = sum(squares)
    report.expect(total == factorial(n),
                  "{} = {}".format(factorial(n), "+".join(str(s) for s in squares)),
                  expected=factorial(n), actual=total)
    return report


def lasf_check(partition):
    """Σ_λ (h_μ(∂̃) S_λ) · f^λ equals |μ|! / Π_k (k!)^{m_k}."""
    partition = Partition(partition)
    d = partition.weight
    report = CheckReport("integrals {}".format(format_partition(partition)))
    h = h_mu(partition)
    operator = operator_from_polynomial(h)
    expansion = expand_in_schur(h)
    total = Fraction(0)
    for shape in partitions_of(d):
        paired = operator.apply(schur_polynomial(shape, max(d, 1)))
        if not paired.is_constant:
            report.fail("h(∂̃)S[{}] is not constant".format(format_partition(shape)))
            continue
        value = paired.constant_term
        report.expect(value == expansion.coefficient(shape),
                      "<h, S[{}]> = {}".format(format_partition(shape), format_rational(value)),
                      partition=format_partition(shape), operator=value, expansion=expansion.coefficient(shape))
        total += value * degree_hook(shape)
    expected = multinomial_closed_form(partition)
    report.expect(total == expected, "Σ <h, S_λ> f^λ = {}, closed form {}".format(
        format_rational(total), format_rational(expected)), expected=expected, actual=total)
    report.expect(integral_h_mu(partition) == expected, "∂^{}h = {}".format(d, format_rational(expected)))
    generated = integral_generating_coefficient(partition)
    report.expect(generated == expected, "F(u,t) coefficient = {}".format(format_rational(generated)),
                  expected=expected, actual=generated)
    return report


_VARIABLE = re.compile(r"^x(\d+)$")


def parse_polynomial(text):
    """Read text such as "x1^2 + 1/2*x2" into a WeightedPolynomial."""
    try:
        expr = sympify(text, convert_xor=True, rational=True)
    except (SympifyError, SyntaxError, TypeError) as exc:
        raise ValueError("cannot parse polynomial {!r}: {}".format(text, exc))
    indices = []
    for symbol in expr.free_symbols:
        match = _VARIABLE.match(symbol.name)
        if not match or int(match.group(1)) < 1:
            raise ValueError("unknown variable {!r}; use x1, x2, ...".format(symbol.name))
        indices.append(int(match.group(1)))
    nvars = max(indices + [1])
    symbols = [Symbol("x{}".format(k)) for k in range(1, nvars + 1)]
    try:
        poly = Poly(expr, *symbols, domain="QQ")
    except PolynomialError as exc:
        raise ValueError("not a polynomial in x1..x{}: {}".format(nvars, exc))
    terms = {m: Fraction(int(c.p), int(c.q)) for m, c in poly.as_dict().items()}
    return WeightedPolynomial.from_terms(terms, nvars)
