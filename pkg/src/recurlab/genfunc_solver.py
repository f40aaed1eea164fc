"""Closed forms via ordinary generating functions.

Independent second route to the same answers as the characteristic-
polynomial solver:

1. ``build_ogf`` turns a recurrence into the rational function
   f(x) = sum a_n x^n.  Multiplying the recurrence by x^{n+d} and summing
   over n gives f(x) * D(x) = N(x), where D(x) = x^d chi(1/x) factors as
   prod (1 - r_i x)^{m_i} over the characteristic roots, and N collects the
   initial conditions plus the transformed right-hand side.
2. ``partial_fractions`` decomposes f into sum coeff / (1 - r x)^k (plus a
   polynomial part when the numerator degree reaches the denominator's).
3. ``extract_coefficient_formula`` reads coefficients off each basis term
   with [x^n] 1/(1 - r x)^k = C(n + k - 1, k - 1) r^n, yielding a
   ClosedForm tagged "genfunc".

``series_expand`` provides the ground truth the decomposition is checked
against: exact power-series coefficients straight from the rational
function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core_numeric import (
    Polynomial,
    Rational,
    as_rational,
    binomial,
    binomial_rising,
    format_polynomial,
)
from .difference_engine import LinearRecurrence, Sequence
from .errors import UnsupportedRootsError
from .recurrence_solver import (
    ClosedForm,
    ExactMatrix,
    characteristic_polynomial,
    gaussian_solve,
    rational_roots,
)


@dataclass(frozen=True)
class RationalFunction:
    """numerator(x) / prod (1 - r x)^power, with the denominator kept factored.

    Factors with the same r are merged, r = 0 factors are dropped (they
    equal 1), and factors are sorted by r, so structural equality compares
    meaningfully.  ``equivalent_to`` checks true equality of the underlying
    rational functions by cross-multiplication.
    """

    numerator: Polynomial
    denominator_factors: tuple[tuple[Rational, int], ...]

    def __post_init__(self):
        merged: dict[Rational, int] = {}
        for root, power in self.denominator_factors:
            root = as_rational(root)
            if power < 1:
                raise ValueError(f"factor power must be >= 1, got {power}")
            if root == 0:
                continue
            merged[root] = merged.get(root, 0) + power
        factors = tuple(sorted(merged.items()))
        object.__setattr__(self, "denominator_factors", factors)

    def denominator_polynomial(self) -> Polynomial:
        """The denominator expanded into a polynomial (constant term 1)."""
        poly = Polynomial.one()
        for root, power in self.denominator_factors:
            poly = poly * Polynomial((1, -root)) ** power
        return poly

    @property
    def denominator_degree(self) -> int:
        return sum(power for _, power in self.denominator_factors)

    def series(self, depth: int) -> list[Rational]:
        """First ``depth`` exact power-series coefficients.

        Solves numerator = series * denominator coefficient by coefficient;
        the denominator's constant term is 1 by construction, so every step
        is a subtraction, no division.
        """
        if depth < 1:
            raise ValueError(f"depth must be >= 1, got {depth}")
        den = self.denominator_polynomial().coefficients
        out: list[Rational] = []
        for n in range(depth):
            value = self.numerator.coefficient(n)
            for k in range(1, min(n, len(den) - 1) + 1):
                value -= den[k] * out[n - k]
            out.append(value)
        return out

    def equivalent_to(self, other: "RationalFunction") -> bool:
        """Exact equality as rational functions (cross-multiplied)."""
        return (
            self.numerator * other.denominator_polynomial()
            == other.numerator * self.denominator_polynomial()
        )


@dataclass(frozen=True)
class PartialFractionForm:
    """sum coeff / (1 - root x)^power, plus an optional polynomial part.

    ``terms`` holds (root, power, coeff) triples sorted by (root, power)
    with zero coefficients dropped.  ``poly_part`` is nonzero only when the
    originating rational function was improper (numerator degree >=
    denominator degree); it contributes finitely many coefficients,
    poly_part[n] at index n.
    """

    terms: tuple[tuple[Rational, int, Rational], ...]
    poly_part: Polynomial = field(default_factory=Polynomial.zero)

    def __post_init__(self):
        cleaned = []
        for root, power, coeff in self.terms:
            root = as_rational(root)
            coeff = as_rational(coeff)
            if power < 1:
                raise ValueError(f"term power must be >= 1, got {power}")
            if coeff != 0:
                cleaned.append((root, power, coeff))
        cleaned.sort(key=lambda t: (t[0], t[1]))
        object.__setattr__(self, "terms", tuple(cleaned))

    def series(self, depth: int) -> list[Rational]:
        """Exact series coefficients reconstructed term by term.

        [x^n] coeff/(1 - r x)^p = coeff * C(n + p - 1, p - 1) * r^n, plus
        the polynomial part's coefficient at n.  Used to verify that a
        decomposition reproduces its source exactly.
        """
        if depth < 1:
            raise ValueError(f"depth must be >= 1, got {depth}")
        out = []
        for n in range(depth):
            value = self.poly_part.coefficient(n)
            for root, power, coeff in self.terms:
                value += coeff * binomial(n + power - 1, power - 1) * root**n
            out.append(value)
        return out


def build_ogf(rec: LinearRecurrence) -> RationalFunction:
    """The ordinary generating function of the recurrence's solution.

    Multiply sum_k c_k a_{n+k} = rhs(n) by x^{n+d} and sum over n >= 0:

        f(x) * D(x) = x^d * R(x) + N_init(x)

    where D(x) = x^d chi(1/x) = prod (1 - r_i x)^{m_i} over the nonzero
    characteristic roots, N_init(x) = sum_{k=1..d} c_k x^{d-k}
    (a_0 + a_1 x + ... + a_{k-1} x^{k-1}) collects the initial-condition
    boundary terms, and R(x) = sum_n rhs(n) x^n.

    A polynomial right-hand side of degree e makes R rational with
    denominator (1-x)^{e+1}: writing rhs in the binomial basis
    rhs(n) = sum_i beta_i C(n+i, i) gives
    R(x) = sum_i beta_i / (1-x)^{i+1}.  Clearing denominators yields a
    fully factored result.  Requires all characteristic roots rational.
    """
    d = rec.order
    ascending = tuple(reversed(rec.coefficients))  # c_0 .. c_d
    chi = characteristic_polynomial(rec)
    roots, residual = rational_roots(chi)
    if residual.degree >= 1:
        raise UnsupportedRootsError(
            "characteristic polynomial has an unfactored part with no rational "
            f"roots: {format_polynomial(residual, 'r')}",
            residual=residual,
        )
    factors = [(rm.root, rm.multiplicity) for rm in roots if rm.root != 0]

    init_poly = Polynomial.zero()
    for k in range(1, d + 1):
        if ascending[k] == 0:
            continue
        prefix = Polynomial(rec.initial_conditions[:k])
        init_poly = init_poly + ascending[k] * (Polynomial.monomial(d - k) * prefix)

    rhs = rec.rhs
    if rhs.is_zero:
        return RationalFunction(init_poly, tuple(factors))

    degree = rhs.degree
    # Rewrite rhs in the binomial basis C(n+i, i), i = 0..degree.  The
    # basis polynomial for i has degree i with leading coefficient 1/i!,
    # so peeling from the top degree down is an exact triangular solve.
    basis = [Polynomial.one()] + [binomial_rising(i) for i in range(1, degree + 1)]
    remainder = rhs
    beta = [Fraction(0)] * (degree + 1)
    for i in range(degree, -1, -1):
        beta[i] = remainder.coefficient(i) / basis[i].leading_coefficient
        remainder = remainder - beta[i] * basis[i]
    assert remainder.is_zero, "binomial-basis rewrite must be exact"

    one_minus_x = Polynomial((1, -1))
    forcing = Polynomial.zero()
    for i in range(degree + 1):
        forcing = forcing + beta[i] * one_minus_x ** (degree - i)
    numerator = Polynomial.monomial(d) * forcing + init_poly * one_minus_x ** (degree + 1)
    factors.append((Fraction(1), degree + 1))
    return RationalFunction(numerator, tuple(factors))


def partial_fractions(rf: RationalFunction) -> PartialFractionForm:
    """Decompose into sum coeff/(1 - root x)^k plus a polynomial part.

    An improper numerator is first reduced by exact polynomial division.
    The remaining proper part is matched against the basis
    B_{r,k}(x) = denominator / (1 - r x)^k for each factor root r and each
    k up to its power; comparing coefficients gives a square exact system
    (a confluent Vandermonde-type matrix, nonsingular for distinct roots).
    """
    den = rf.denominator_polynomial()
    total = rf.denominator_degree
    numerator = rf.numerator
    poly_part = Polynomial.zero()
    if not numerator.is_zero and numerator.degree >= total:
        poly_part, numerator = divmod(numerator, den)
    if total == 0:
        return PartialFractionForm(terms=(), poly_part=poly_part)

    layout = [(root, k) for root, power in rf.denominator_factors for k in range(1, power + 1)]
    basis_polys = []
    for root, k in layout:
        poly = Polynomial.one()
        for other_root, power in rf.denominator_factors:
            reduced = power - k if other_root == root else power
            if reduced:
                poly = poly * Polynomial((1, -other_root)) ** reduced
        basis_polys.append(poly)

    matrix = ExactMatrix.from_rows(
        [[poly.coefficient(j) for poly in basis_polys] for j in range(total)]
    )
    target = [numerator.coefficient(j) for j in range(total)]
    coeffs = gaussian_solve(matrix, target)
    terms = tuple(
        (root, k, coeff) for (root, k), coeff in zip(layout, coeffs)
    )
    return PartialFractionForm(terms=terms, poly_part=poly_part)


def extract_coefficient_formula(pf: PartialFractionForm) -> ClosedForm:
    """Closed form for the series coefficients of a partial-fraction form.

    Each term coeff/(1 - r x)^p contributes coeff * C(n+p-1, p-1) * r^n,
    and C(n+p-1, p-1) is the polynomial ``binomial_rising(p-1)`` in n.
    Terms sharing a root are summed into one polynomial per root.

    A nonzero polynomial part only affects indices up to its degree and is
    deliberately not represented: the returned formula is exact for all
    n > deg(poly_part), and for all n when the part is zero (always the
    case for the proper rational functions ``build_ogf`` produces).
    """
    grouped: dict[Rational, Polynomial] = {}
    for root, power, coeff in pf.terms:
        contribution = binomial_rising(power - 1) if power >= 2 else Polynomial.one()
        current = grouped.get(root, Polynomial.zero())
        grouped[root] = current + coeff * contribution
    terms = tuple((root, poly) for root, poly in grouped.items())
    return ClosedForm(terms=terms, method="genfunc")


def series_expand(rf: RationalFunction, depth: int) -> Sequence:
    """First ``depth`` series coefficients of ``rf`` as an exact Sequence."""
    return Sequence(tuple(rf.series(depth)))
