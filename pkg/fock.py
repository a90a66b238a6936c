# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: The exterior power ⋀^r V_n with basis X^r(λ) = X^{r-1+λ_1} ∧ ... ∧ X^{λ_r}, derivations δ(A), the Schubert
#          derivations σ_+(z), σ̄_+(z), σ_-(z) as plethystic exponentials and their Pieri actions, and the
#          finite-rank boson-fermion check against Schur polynomials in z_1..z_r
# Notes:
#   V_n has basis X^0..X^{n-1}; X and X^{-1} are truncated shifts, so every σ_+ sum is clipped at λ_1 <= n - r
#   wedge words are strictly decreasing tuples and all sign bookkeeping goes through normalize_wedge
#   the exponential uses δ(A^k): σ_+(z) = exp(Σ_k z^k/k δ(X^k)), which makes σ_+(z)u = Σ X^i u z^i on ⋀^1

from dataclasses import dataclass
from fractions import Fraction

from exact import exp_recurrence
from partitions import (
    Partition,
    canonical_key,
    complement,
    fits,
    format_partition,
    partitions_in_rectangle,
    pieri_down,
    pieri_up,
)
from report import CheckReport, format_rational
from symz import SymPoly, schur_z


class WedgeWord(tuple):
    """Strictly decreasing exponents (i_1 > ... > i_r >= 0) naming X^{i_1} ∧ ... ∧ X^{i_r}."""

    def __new__(cls, indices=()):
        indices = tuple(int(i) for i in indices)
        for k, index in enumerate(indices):
            if index < 0:
                raise ValueError("wedge indices must be non-negative: {}".format(indices))
            if k + 1 < len(indices) and indices[k + 1] >= index:
                raise ValueError("wedge indices must be strictly decreasing: {}".format(indices))
        return super().__new__(cls, indices)

    @classmethod
    def from_partition(cls, partition, r):
        partition = Partition(partition)
        if len(partition) > r:
            raise ValueError("{} has more than {} parts".format(format_partition(partition), r))
        return cls(partition.part(i) + r - 1 - i for i in range(r))

    @property
    def partition(self):
        r = len(self)
        return Partition(index - (r - 1 - i) for i, index in enumerate(self))

    def __repr__(self):
        return "WedgeWord({})".format(tuple(self))

    def __str__(self):
        return "X[{}]".format(",".join(str(i) for i in self))


def normalize_wedge(indices, n):
    """(sign, WedgeWord) for X^{indices[0]} ∧ X^{indices[1]} ∧ ..., or (0, None) when a factor repeats."""
    indices = [int(i) for i in indices]
    for index in indices:
        if not 0 <= index < n:
            raise ValueError("X^{} is not in V_{} (indices run over 0..{})".format(index, n, n - 1))
    if len(set(indices)) != len(indices):
        return 0, None
    sign = 1
    # insertion sort into decreasing order, one transposition per swap
    work = list(indices)
    for k in range(1, len(work)):
        j = k
        while j > 0 and work[j - 1] < work[j]:
            work[j - 1], work[j] = work[j], work[j - 1]
            sign = -sign
            j -= 1
    return sign, WedgeWord(work)


class ExteriorElement:
    """Σ a_w w over wedge words w of ⋀^r V_n with exact rational coefficients."""

    __slots__ = ("r", "n", "coeffs")

    def __init__(self, r, n, coeffs=None):
        if r < 0 or n < r:
            raise ValueError("⋀^r V_n needs 0 <= r <= n, got r={} n={}".format(r, n))
        cleaned = {}
        for word, coef in dict(coeffs or {}).items():
            word = WedgeWord(word)
            if len(word) != r or (word and word[0] >= n):
                raise ValueError("{} is not a basis word of ⋀^{} V_{}".format(word, r, n))
            coef = Fraction(coef)
            if coef:
                cleaned[word] = coef
        self.r = r
        self.n = n
        self.coeffs = cleaned

    @classmethod
    def from_partitions(cls, r, n, coeffs):
        return cls(r, n, {WedgeWord.from_partition(p, r): c for p, c in dict(coeffs).items()})

    def _same_ambient(self, other):
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("elements live in ⋀^{} V_{} and ⋀^{} V_{}".format(self.r, self.n, other.r, other.n))

    def coefficient(self, partition):
        return self.coeffs.get(WedgeWord.from_partition(partition, self.r), Fraction(0))

    def partition_coeffs(self):
        return {word.partition: coef for word, coef in self.coeffs.items()}

    def items(self):
        return sorted(self.coeffs.items(), key=lambda item: canonical_key(item[0].partition))

    def __add__(self, other):
        self._same_ambient(other)
        merged = dict(self.coeffs)
        for word, coef in other.coeffs.items():
            merged[word] = merged.get(word, Fraction(0)) + coef
        return ExteriorElement(self.r, self.n, merged)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, value):
        return ExteriorElement(self.r, self.n, {w: c * value for w, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return (self.r, self.n, self.coeffs) == (other.r, other.n, other.coeffs)

    def __hash__(self):
        return hash((self.r, self.n, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def render(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for word, coef in self.items():
            pieces.append(str(word) if coef == 1 else "{}·{}".format(format_rational(coef), word))
        return " + ".join(pieces)

    def to_json(self):
        return {
            "r": self.r,
            "n": self.n,
            "terms": [
                {"partition": format_partition(w.partition), "word": list(w), "coef": format_rational(c)}
                for w, c in self.items()
            ],
        }

    def __repr__(self):
        return "ExteriorElement(⋀^{} V_{}: {})".format(self.r, self.n, self.render())


def zero_element(r, n):
    return ExteriorElement(r, n)


def basis_element(partition, r, n):
    """X^r(λ), defined for λ inside the r x (n-r) rectangle."""
    partition = Partition(partition)
    if not fits(partition, r, n - r):
        raise ValueError("X^{}({}) is not in ⋀^{} V_{}".format(r, format_partition(partition), r, n))
    return ExteriorElement.from_partitions(r, n, {partition: 1})


@dataclass(frozen=True)
class EndoSpec:
    """Linear endomorphism of V_n on basis vectors: images[j] is (j', c) for X^j -> c·X^{j'}, or None for zero."""

    n: int
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.n:
            raise ValueError("an endomorphism of V_{} needs {} images, got {}".format(self.n, self.n, len(self.images)))
        for image in self.images:
            if image is not None and not 0 <= image[0] < self.n:
                raise ValueError("image X^{} is outside V_{}".format(image[0], self.n))

    def __call__(self, j):
        return self.images[j]

    def compose(self, other):
        # (self ∘ other)(X^j) = self(other(X^j))
        images = []
        for j in range(self.n):
            first = other(j)
            second = None if first is None else self(first[0])
            images.append(None if second is None else (second[0], first[1] * second[1]))
        return EndoSpec(self.n, tuple(images))


def shift_endo(n, k):
    """X^k on V_n: X^j -> X^{j+k}, zero once j+k leaves 0..n-1 (k < 0 gives powers of X^{-1})."""
    return EndoSpec(n, tuple((j + k, 1) if 0 <= j + k < n else None for j in range(n)))


def derivation_apply(endo, element):
    """δ(A) by the Leibniz rule: replace one factor at a time by its image under A."""
    if endo.n != element.n:
        raise ValueError("endomorphism of V_{} applied to ⋀^{} V_{}".format(endo.n, element.r, element.n))
    result = {}
    for word, coef in element.coeffs.items():
        for position, index in enumerate(word):
            image = endo(index)
            if image is None:
                continue
            target, factor = image
            raw = list(word)
            raw[position] = target
            sign, normal = normalize_wedge(raw, element.n)
            if not sign:
                continue
            result[normal] = result.get(normal, Fraction(0)) + sign * factor * coef
    return ExteriorElement(element.r, element.n, result)


def _pieri_apply(element, neighbours):
    result = {}
    for word, coef in element.coeffs.items():
        for mu in neighbours(word.partition):
            target = WedgeWord.from_partition(mu, element.r)
            result[target] = result.get(target, Fraction(0)) + coef
    return ExteriorElement(element.r, element.n, result)


def sigma_plus(i, element):
    """σ_i X^r(λ) = Σ X^r(μ) over μ ∈ PF_i(λ) with μ_1 <= n - r."""
    if i < 0:
        raise ValueError("σ_i needs i >= 0, got {}".format(i))
    cap = (element.r, element.n - element.r)
    return _pieri_apply(element, lambda partition: pieri_up(partition, i, cap))


def sigma_minus_pieri(i, element):
    if i < 0:
        raise ValueError("σ_-i needs i >= 0, got {}".format(i))
    return _pieri_apply(element, lambda partition: pieri_down(partition, i))


def _exponential_series(element, order, direction, sign=1):
    # coefficients of exp(sign · Σ_k z^k/k δ(X^{direction·k})) applied to element, z^0..z^order
    zero = zero_element(element.r, element.n)

    def step(k, e):
        image = derivation_apply(shift_endo(element.n, direction * k), e)
        return image if sign > 0 else image.scale(-1)

    return exp_recurrence(order, element, zero, step, lambda e, c: e.scale(c))


def sigma_plus_series(element, order):
    return _exponential_series(element, order, 1)


def sigma_plus_exp(i, element):
    """Coefficient of z^i in exp(Σ_k z^k/k δ(X^k)) u."""
    if i < 0:
        raise ValueError("σ_i needs i >= 0, got {}".format(i))
    return _exponential_series(element, i, 1)[i]


def sigma_bar_plus(i, element):
    """Coefficient of z^i in σ_+(z)^{-1} u = exp(-Σ_k z^k/k δ(X^k)) u, signs included."""
    if i < 0:
        raise ValueError("σ̄_i needs i >= 0, got {}".format(i))
    return _exponential_series(element, i, 1, sign=-1)[i]


def sigma_minus(i, element):
    """Coefficient of z^i in exp(Σ_k z^k/k δ(X^{-k})) u."""
    if i < 0:
        raise ValueError("σ_-i needs i >= 0, got {}".format(i))
    return _exponential_series(element, i, -1)[i]


def wedge(left, right):
    """Exterior product ⋀^a V_n x ⋀^b V_n -> ⋀^{a+b} V_n."""
    if left.n != right.n:
        raise ValueError("cannot wedge elements of V_{} and V_{}".format(left.n, right.n))
    r = left.r + right.r
    if r > left.n:
        raise ValueError("⋀^{} V_{} is zero-dimensional".format(r, left.n))
    result = {}
    for a, ca in left.coeffs.items():
        for b, cb in right.coeffs.items():
            sign, word = normalize_wedge(tuple(a) + tuple(b), left.n)
            if sign:
                result[word] = result.get(word, Fraction(0)) + sign * ca * cb
    return ExteriorElement(r, left.n, result)


def pairing(left, right):
    # X^r(λ) orthonormal
    left._same_ambient(right)
    return sum((c * right.coeffs.get(w, Fraction(0)) for w, c in left.coeffs.items()), Fraction(0))


def complement_element(element):
    """Σ a_λ X^r(λ) -> Σ a_λ X^r(λᶜ) in the r x (n-r) rectangle."""
    r, n = element.r, element.n
    return ExteriorElement.from_partitions(
        r, n, {complement(word.partition, r, n - r): c for word, c in element.coeffs.items()})


def basis_words(r, n):
    # (text name, X^r(λ)) for every λ in the rectangle, canonical order
    return [(str(WedgeWord.from_partition(p, r)), basis_element(p, r, n)) for p in partitions_in_rectangle(r, n - r)]


def schubert_derivation_check(r, n, max_i):
    """Pieri vs exponential for σ_+ and σ_-, adjointness and σ_+(z)σ̄_+(z) = 1 on every basis word of ⋀^r V_n."""
    report = CheckReport("schubert-derivations ⋀^{} V_{} i<={}".format(r, n, max_i))
    basis = basis_words(r, n)
    up = {}
    down = {}
    for name, u in basis:
        series = sigma_plus_series(u, max_i)
        for i in range(max_i + 1):
            up[(name, i)] = sigma_plus(i, u)
            down[(name, i)] = sigma_minus(i, u)
            if series[i] != up[(name, i)]:
                report.fail("σ_{} {}: Pieri {} vs exponential {}".format(i, name, up[(name, i)].render(),
                                                                          series[i].render()), word=name, i=i)
            pieri = sigma_minus_pieri(i, u)
            if down[(name, i)] != pieri:
                report.fail("σ_-{} {}: exponential {} vs Pieri {}".format(i, name, down[(name, i)].render(),
                                                                           pieri.render()), word=name, i=i)
        for i in range(1, max_i + 1):
            total = zero_element(r, n)
            for k in range(i + 1):
                total = total + sigma_bar_plus(k, sigma_plus(i - k, u))
            if total:
                report.fail("Σ σ̄_k σ_{{{}-k}} {} = {} (expected 0)".format(i, name, total.render()), word=name, i=i)
    for i in range(max_i + 1):
        for a, u in basis:
            for b, v in basis:
                lhs = pairing(down[(a, i)], v)
                rhs = pairing(u, up[(b, i)])
                if lhs != rhs:
                    report.fail("<σ_-{0} {1}, {2}> = {3} but <{1}, σ_{0} {2}> = {4}".format(
                        i, a, b, format_rational(lhs), format_rational(rhs)), i=i, left=a, right=b)
    if report.passed:
        report.note("{} basis words, orders 0..{}: Pieri = exponential, adjoint, inverse series".format(
            len(basis), max_i))
    return report


def boson_fermion_check(r, n, degree_cut):
    """σ_+(z_1)...σ_+(z_r) X^r(0) = Σ_{|λ| <= cut} s_λ(z_1..z_r) X^r(λ), truncated at total z-degree cut."""
    if r < 1 or n < r:
        raise ValueError("⋀^r V_n needs 1 <= r <= n, got r={} n={}".format(r, n))
    if not 0 <= degree_cut <= r * (n - r):
        raise ValueError("degree cut {} outside 0..{}".format(degree_cut, r * (n - r)))
    report = CheckReport("boson-fermion ⋀^{} V_{} cut={}".format(r, n, degree_cut))
    # (word, z exponents) -> coefficient
    state = {(WedgeWord.from_partition((), r), (0,) * r): Fraction(1)}
    for j in reversed(range(r)):
        following = {}
        for (word, exponents), coef in state.items():
            start = ExteriorElement(r, n, {word: 1})
            for i in range(degree_cut - sum(exponents) + 1):
                bumped = exponents[:j] + (exponents[j] + i,) + exponents[j + 1:]
                for target, c in sigma_plus(i, start).coeffs.items():
                    key = (target, bumped)
                    following[key] = following.get(key, Fraction(0)) + coef * c
        state = {k: c for k, c in following.items() if c}
    actual = {}
    for (word, exponents), coef in state.items():
        actual.setdefault(word.partition, {})[exponents] = coef
    checked = 0
    for partition in partitions_in_rectangle(r, n - r):
        if partition.weight > degree_cut:
            continue
        checked += 1
        expected = schur_z(partition, r)
        got = SymPoly.from_terms(actual.pop(partition, {}), r)
        if got != expected:
            report.fail("coefficient of X^{}({}) is {}, s_λ gives {}".format(
                r, format_partition(partition), got.render(), expected.render()),
                partition=format_partition(partition), actual=got.to_json(), expected=expected.to_json())
    for partition in sorted(actual, key=canonical_key):
        report.fail("unexpected X^{}({}) beyond the cut".format(r, format_partition(partition)),
                    partition=format_partition(partition))
    if report.passed:
        report.note("{} words up to degree {} match s_λ(z_1..z_{})".format(checked, degree_cut, r))
    return report
