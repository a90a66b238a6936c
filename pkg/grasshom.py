# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: Rational homology of the Grassmannian G(r,n) in the Schubert basis Ω^λ, caps by the special classes
#          σ_i = c_i(Q_r) via the dual Pieri rule, Giambelli's determinant, degrees σ_1^d ∩ Ω^λ and the check that
#          σ_i ∩ Ω^λ agrees with the differential operator S_i(∂̃) acting on S_λ(x)
# Notes:
#   the fundamental class [G(r,n)] is Ω^((n-r)^r)
#   the projection from Schur expansions drops every S_λ outside the r x (n-r) rectangle

from fractions import Fraction
from itertools import permutations

from sympy.combinatorics import Permutation

from partitions import Partition, canonical_key, complement, fits, format_partition, pieri_down
from report import CheckReport, InvariantViolation, format_rational
from ringb import SchurExpansion, expand_in_schur, s_tilde_operator, schur_polynomial


def _check_ambient(r, n):
    if r < 1 or n < r:
        raise ValueError("G(r,n) needs 1 <= r <= n, got r={} n={}".format(r, n))


class HomologyClass:
    """Σ c_λ Ω^λ in H_*(G(r,n), Q); every λ fits the r x (n-r) rectangle."""

    __slots__ = ("r", "n", "coeffs")

    def __init__(self, r, n, coeffs=None):
        _check_ambient(r, n)
        cleaned = {}
        for partition, coef in dict(coeffs or {}).items():
            partition = Partition(partition)
            if not fits(partition, r, n - r):
                raise ValueError("Ω[{}] does not live in G({},{})".format(format_partition(partition), r, n))
            coef = Fraction(coef)
            if coef:
                cleaned[partition] = coef
        self.r = r
        self.n = n
        self.coeffs = cleaned

    def _same_ambient(self, other):
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("classes live in G({},{}) and G({},{})".format(self.r, self.n, other.r, other.n))

    def coefficient(self, partition):
        return self.coeffs.get(Partition(partition), Fraction(0))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda item: canonical_key(item[0]))

    def __add__(self, other):
        self._same_ambient(other)
        merged = dict(self.coeffs)
        for partition, coef in other.coeffs.items():
            merged[partition] = merged.get(partition, Fraction(0)) + coef
        return HomologyClass(self.r, self.n, merged)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, value):
        return HomologyClass(self.r, self.n, {p: c * value for p, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, HomologyClass):
            return NotImplemented
        return (self.r, self.n, self.coeffs) == (other.r, other.n, other.coeffs)

    def __hash__(self):
        return hash((self.r, self.n, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def components(self):
        # homological dimension |λ| -> homogeneous piece
        grouped = {}
        for partition, coef in self.coeffs.items():
            grouped.setdefault(partition.weight, {})[partition] = coef
        return {d: HomologyClass(self.r, self.n, part) for d, part in sorted(grouped.items())}

    def render(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for partition, coef in self.items():
            name = "Ω[{}]".format(format_partition(partition))
            pieces.append(name if coef == 1 else "{}·{}".format(format_rational(coef), name))
        return " + ".join(pieces)

    def to_json(self):
        return {
            "r": self.r,
            "n": self.n,
            "terms": [{"partition": format_partition(p), "coef": format_rational(c)} for p, c in self.items()],
        }

    def __repr__(self):
        return "HomologyClass(G({},{}): {})".format(self.r, self.n, self.render())


def zero_class(r, n):
    return HomologyClass(r, n)


def schubert_class(partition, r, n):
    return HomologyClass(r, n, {Partition(partition): 1})


def fundamental_class(r, n):
    _check_ambient(r, n)
    return schubert_class((n - r,) * r, r, n)


def cap_sigma(i, homology_class):
    """σ_i ∩ Σ c_λ Ω^λ = Σ c_λ Σ_{μ ∈ PF_{-i}(λ)} Ω^μ."""
    if i < 0:
        raise ValueError("σ_i needs i >= 0, got {}".format(i))
    if i == 0:
        return homology_class
    result = {}
    for partition, coef in homology_class.coeffs.items():
        for mu in pieri_down(partition, i):
            result[mu] = result.get(mu, Fraction(0)) + coef
    return HomologyClass(homology_class.r, homology_class.n, result)


def chern_cap(homology_class):
    """[σ_0 ∩ c, σ_1 ∩ c, ...], stopping once every further cap vanishes."""
    top = max([p.first for p in homology_class.coeffs] + [0])
    return [cap_sigma(i, homology_class) for i in range(top + 1)]


def projection_pi(expansion, r, n):
    # S_λ -> Ω^λ inside the rectangle, zero outside it
    _check_ambient(r, n)
    kept = {p: c for p, c in expansion.coeffs.items() if fits(p, r, n - r)}
    return HomologyClass(r, n, kept)


def _require_fit(partition, r, n):
    _check_ambient(r, n)
    if not fits(partition, r, n - r):
        raise ValueError("{} does not fit the {}x{} rectangle of G({},{})".format(
            format_partition(partition), r, n - r, r, n))


def degree_cap(partition, r, n):
    """f^λ = σ_1^{|λ|} ∩ Ω^λ, read off as the coefficient of the point class Ω^()."""
    partition = Partition(partition)
    _require_fit(partition, r, n)
    current = schubert_class(partition, r, n)
    for _ in range(partition.weight):
        current = cap_sigma(1, current)
    value = current.coefficient(Partition())
    if value.denominator != 1 or value <= 0:
        raise InvariantViolation("σ_1^{} ∩ Ω[{}] has point coefficient {}".format(
            partition.weight, format_partition(partition), format_rational(value)))
    return value.numerator


def _class_diff(left, right):
    keys = sorted(set(left.coeffs) | set(right.coeffs), key=canonical_key)
    return [
        {"partition": format_partition(p), "lhs": left.coefficient(p), "rhs": right.coefficient(p)}
        for p in keys if left.coefficient(p) != right.coefficient(p)
    ]


def _permutation_sign(perm):
    return Permutation(list(perm)).signature() if perm else 1


def giambelli_terms(partition, r, n):
    """Leibniz expansion of det(σ_{λᶜ_j - j + i}) as (sign, [σ indices]) with σ_k = 0 for k < 0 dropped."""
    partition = Partition(partition)
    _require_fit(partition, r, n)
    dual = complement(partition, r, n - r)
    size = len(dual)
    terms = []
    for perm in permutations(range(size)):
        indices = [dual.part(perm[i]) - perm[i] + i for i in range(size)]
        if any(index < 0 for index in indices):
            continue
        terms.append((_permutation_sign(perm), indices))
    return dual, terms


def giambelli_check(partition, r, n):
    """Δ_{λᶜ}(c_t(Q_r)) ∩ [G(r,n)] = Ω^λ."""
    partition = Partition(partition)
    dual, terms = giambelli_terms(partition, r, n)
    report = CheckReport("giambelli G({},{}) {}".format(r, n, format_partition(partition)))
    total = zero_class(r, n)
    for sign, indices in terms:
        current = fundamental_class(r, n)
        # product applied right to left
        for index in reversed(indices):
            current = cap_sigma(index, current)
        total = total + current.scale(sign)
    expected = schubert_class(partition, r, n)
    diff = _class_diff(total, expected)
    if diff:
        report.fail("Δ_{}(σ) ∩ [G] = {}, expected {}".format(format_partition(dual), total.render(), expected.render()))
        for entry in diff:
            report.fail("coefficient of Ω[{}]: {} vs {}".format(entry["partition"], format_rational(entry["lhs"]),
                                                                 format_rational(entry["rhs"])), **entry)
    else:
        report.note("λᶜ = {}, {} terms, Δ ∩ [G] = {}".format(format_partition(dual), len(terms), total.render()))
    return report


def theorem13_check(partition, r, n, max_i=None):
    """σ_i ∩ Ω^λ = π_{r,n}(S_i(∂̃) S_λ(x)) for 1 <= i <= max_i."""
    partition = Partition(partition)
    _require_fit(partition, r, n)
    d = partition.weight
    if max_i is None:
        max_i = d
    if max_i > d:
        raise ValueError("max_i = {} exceeds |{}| = {}".format(max_i, format_partition(partition), d))
    report = CheckReport("theorem13 G({},{}) {}".format(r, n, format_partition(partition)))
    if max_i < 1:
        return report.note("no i in 1..{}".format(max_i))
    nvars = max(d, 1)
    schur = schur_polynomial(partition, nvars)
    start = schubert_class(partition, r, n)
    for i in range(1, max_i + 1):
        lhs = cap_sigma(i, start)
        expansion = expand_in_schur(s_tilde_operator(i, nvars).apply(schur))
        leaked = [p for p in expansion.coeffs if not fits(p, r, n - r)]
        if leaked:
            report.fail("i={}: S_i(∂̃)S[{}] has terms outside the rectangle: {}".format(
                i, format_partition(partition), ", ".join(format_partition(p) for p in leaked)),
                i=i, leaked=[format_partition(p) for p in leaked])
        rhs = projection_pi(expansion, r, n)
        diff = _class_diff(lhs, rhs)
        if diff:
            for entry in diff:
                report.fail("i={}: coefficient of Ω[{}] is {} by dual Pieri, {} by S_i(∂̃)".format(
                    i, entry["partition"], format_rational(entry["lhs"]), format_rational(entry["rhs"])),
                    i=i, **entry)
        else:
            report.note("i={}: {}".format(i, lhs.render()))
    return report


def degree_independence_check(partition, ns, r=None):
    """σ_1^{|λ|} ∩ Ω^λ must not depend on the ambient n >= r + λ_1."""
    partition = Partition(partition)
    r = max(len(partition), 1) if r is None else r
    report = CheckReport("degree-independence {}".format(format_partition(partition)))
    values = {}
    for n in ns:
        if n < r + partition.first:
            raise ValueError("n={} is below r + λ_1 = {}".format(n, r + partition.first))
        values[n] = degree_cap(partition, r, n)
    distinct = sorted(set(values.values()))
    report.expect(len(distinct) <= 1,
                  ", ".join("G({},{}): {}".format(r, n, v) for n, v in values.items()),
                  values={str(n): v for n, v in values.items()})
    return report
