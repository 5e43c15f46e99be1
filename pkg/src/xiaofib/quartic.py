"""Exact certificates for plane curves: smoothness, simple flexes, classical counts.

A ternary form is a homogeneous polynomial in (x, y, z) with exact
rational coefficients.  Smoothness is decided by chart-wise elimination
on the partial derivatives; the flex certificate eliminates one
variable from the curve and its Hessian after a seeded random
unimodular change of coordinates and tests the degree-24 eliminant for
repeated roots.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import NamedTuple

from .polynomials import (
    BiPoly,
    PolynomialError,
    UnivariatePoly,
    common_affine_zero,
    poly_gcd,
    res_y_prs,
    squarefree_part,
    subresultant_y,
)

FLEX_RETRY_BUDGET = 32


class FormParseError(ValueError):
    """Polynomial text that does not match the input grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegenerateFormError(ValueError):
    """A form whose requested certificate is undefined (zero Hessian, singular input)."""


class RetryBudgetError(RuntimeError):
    """No usable coordinate change found within the retry budget."""


class TernaryForm:
    """Homogeneous polynomial in (x, y, z) with exact rational coefficients.

    Coefficients map exponent triples (i, j, k) with i + j + k = degree
    to nonzero rationals.  Arithmetic may produce the zero form
    internally; the public constructor and the parser reject it.
    """

    __slots__ = ("degree", "coefficients")

    def __init__(self, degree: int, coefficients: dict[tuple[int, int, int], Fraction]):
        cleaned = {}
        for key, value in coefficients.items():
            i, j, k = key
            if i < 0 or j < 0 or k < 0 or i + j + k != degree:
                raise DegenerateFormError(
                    f"exponents {key} do not sum to the declared degree {degree}"
                )
            value = Fraction(value)
            if value != 0:
                cleaned[(i, j, k)] = value
        self.degree = degree
        self.coefficients = cleaned

    @classmethod
    def from_coefficients(
        cls, degree: int, coefficients: dict[tuple[int, int, int], Fraction]
    ) -> "TernaryForm":
        form = cls(degree, coefficients)
        if form.is_zero():
            raise DegenerateFormError("a ternary form needs at least one nonzero coefficient")
        return form

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TernaryForm)
            and self.degree == other.degree
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.coefficients.items())))

    def __add__(self, other: "TernaryForm") -> "TernaryForm":
        if self.degree != other.degree:
            raise DegenerateFormError("adding forms of different degrees")
        terms = dict(self.coefficients)
        for key, c in other.coefficients.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return TernaryForm(self.degree, terms)

    def __sub__(self, other: "TernaryForm") -> "TernaryForm":
        return self + other.scale(-1)

    def __mul__(self, other: "TernaryForm") -> "TernaryForm":
        terms: dict[tuple[int, int, int], Fraction] = {}
        for (a, b, c), u in self.coefficients.items():
            for (d, e, f), v in other.coefficients.items():
                key = (a + d, b + e, c + f)
                terms[key] = terms.get(key, Fraction(0)) + u * v
        return TernaryForm(self.degree + other.degree, terms)

    def scale(self, c) -> "TernaryForm":
        c = Fraction(c)
        return TernaryForm(self.degree, {k: v * c for k, v in self.coefficients.items()})

    def partial(self, var: int) -> "TernaryForm":
        """Partial derivative with respect to variable 0, 1 or 2; may be zero."""
        terms = {}
        for key, c in self.coefficients.items():
            e = key[var]
            if e == 0:
                continue
            new_key = tuple(v - 1 if idx == var else v for idx, v in enumerate(key))
            terms[new_key] = c * e
        return TernaryForm(max(self.degree - 1, 0), terms)

    def evaluate(self, x, y, z) -> Fraction:
        x, y, z = Fraction(x), Fraction(y), Fraction(z)
        return sum(
            (c * x**i * y**j * z**k for (i, j, k), c in self.coefficients.items()),
            Fraction(0),
        )

    def compose(self, matrix: list[list[int]]) -> "TernaryForm":
        """The form (F o M)(v) = F(M v) for an integer 3x3 matrix M."""
        linear = []
        for row in matrix:
            linear.append(
                TernaryForm(
                    1,
                    {
                        (1, 0, 0): Fraction(row[0]),
                        (0, 1, 0): Fraction(row[1]),
                        (0, 0, 1): Fraction(row[2]),
                    },
                )
            )
        powers: list[dict[int, TernaryForm]] = [
            {0: TernaryForm(0, {(0, 0, 0): Fraction(1)})} for _ in range(3)
        ]

        def power(var: int, e: int) -> TernaryForm:
            table = powers[var]
            if e not in table:
                table[e] = power(var, e - 1) * linear[var]
            return table[e]

        result = TernaryForm(self.degree, {})
        for (i, j, k), c in self.coefficients.items():
            term = power(0, i) * power(1, j) * power(2, k)
            result = result + term.scale(c)
        return result

    def chart(self, var: int) -> BiPoly:
        """Dehomogenize by setting one variable to 1, keeping the other two in order."""
        keep = [v for v in range(3) if v != var]
        terms: dict[tuple[int, int], Fraction] = {}
        for key, c in self.coefficients.items():
            terms[(key[keep[0]], key[keep[1]])] = c
        return BiPoly(terms)

    def xz_slice_at_y1(self) -> BiPoly:
        """Collect the form as a polynomial in z over Q[x] with y set to 1."""
        terms: dict[tuple[int, int], Fraction] = {}
        for (i, j, k), c in self.coefficients.items():
            key = (i, k)
            terms[key] = terms.get(key, Fraction(0)) + c
        return BiPoly(terms)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for key in sorted(self.coefficients, reverse=True):
            c = self.coefficients[key]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip("xyz", key)
                if e > 0
            )
            mag = str(abs(c)) if (abs(c) != 1 or not mono) else ""
            core = mag + ("*" if mag and mono else "") + mono
            parts.append(("- " if c < 0 else ("+ " if parts else "")) + core)
        return " ".join(parts)


_TOKEN_RE = re.compile(
    r"(?P<space>\s+)|(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<var>[xyz])"
    r"|(?P<pow>\^)|(?P<mul>\*)|(?P<plus>\+)|(?P<minus>-)"
)


def parse_ternary_form(text: str) -> TernaryForm:
    """Parse the input grammar: terms ``c*x^i*y^j*z^k`` joined by ``+``/``-``.

    Rational or integer coefficients, ``*`` and ``^1`` optional,
    variables fixed as x, y, z.  The result must be homogeneous and
    nonzero.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise FormParseError(f"unexpected character {text[pos]!r}", pos)
        if match.lastgroup != "space":
            tokens.append((match.lastgroup, match.group(), pos))
        pos = match.end()
    if not tokens:
        raise FormParseError("empty polynomial", 0)

    terms: dict[tuple[int, int, int], Fraction] = {}
    idx = 0
    var_index = {"x": 0, "y": 1, "z": 2}

    while idx < len(tokens):
        sign = 1
        saw_sign = False
        while idx < len(tokens) and tokens[idx][0] in ("plus", "minus"):
            if tokens[idx][0] == "minus":
                sign = -sign
            if saw_sign:
                raise FormParseError("repeated sign", tokens[idx][2])
            saw_sign = True
            idx += 1
        if idx >= len(tokens):
            raise FormParseError("dangling sign at end of input", tokens[-1][2])
        coeff = Fraction(sign)
        exponents = [0, 0, 0]
        saw_factor = False
        while idx < len(tokens) and tokens[idx][0] in ("num", "var", "mul"):
            kind, value, token_pos = tokens[idx]
            if kind == "mul":
                if not saw_factor:
                    raise FormParseError("'*' with nothing to its left", token_pos)
                idx += 1
                if idx >= len(tokens) or tokens[idx][0] not in ("num", "var"):
                    raise FormParseError("'*' with nothing to its right", token_pos)
                continue
            if kind == "num":
                coeff *= Fraction(value.replace(" ", ""))
                idx += 1
            else:
                var = var_index[value]
                exponent = 1
                idx += 1
                if idx < len(tokens) and tokens[idx][0] == "pow":
                    caret_pos = tokens[idx][2]
                    idx += 1
                    if idx >= len(tokens) or tokens[idx][0] != "num" or "/" in tokens[idx][1]:
                        raise FormParseError("'^' must be followed by an integer", caret_pos)
                    exponent = int(tokens[idx][1])
                    idx += 1
                exponents[var] += exponent
            saw_factor = True
        if not saw_factor:
            raise FormParseError("expected a term", tokens[idx][2] if idx < len(tokens) else len(text))
        key = tuple(exponents)
        terms[key] = terms.get(key, Fraction(0)) + coeff

    degrees = {sum(key) for key, c in terms.items() if c != 0}
    if len(degrees) > 1:
        raise FormParseError(f"non-homogeneous input: term degrees {sorted(degrees)}", 0)
    if not degrees:
        raise FormParseError("all terms cancel: the zero form is not allowed", 0)
    degree = degrees.pop()
    if degree < 1:
        raise FormParseError("a positive-degree form is required", 0)
    return TernaryForm.from_coefficients(degree, terms)


def hessian(form: TernaryForm) -> TernaryForm:
    """Determinant of the matrix of second partials; degree 3(d - 2)."""
    if form.degree < 3:
        raise DegenerateFormError("hessian certificate needs degree at least 3")
    h = [[form.partial(a).partial(b) for b in range(3)] for a in range(3)]
    det = (
        h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
        - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
        + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
    )
    if det.is_zero():
        raise DegenerateFormError("identically zero hessian: degenerate form")
    return det


def is_smooth(form: TernaryForm) -> bool:
    """Whether the projective plane curve cut out by the form is smooth.

    True iff the three partial derivatives have no common projective
    zero, decided chart by chart with the exact bivariate common-zero
    procedure.
    """
    if form.degree < 2:
        raise DegenerateFormError("smoothness certificate needs degree at least 2")
    partials = [form.partial(v) for v in range(3)]
    for chart_var in range(3):
        charted = [p.chart(chart_var) for p in partials]
        if common_affine_zero(charted):
            return False
    return True


class PluckerCounts(NamedTuple):
    flexes: int
    bitangents: int


def plucker_counts(d: int) -> PluckerCounts:
    """Flex and bitangent counts of a smooth plane curve of degree d."""
    if d < 3:
        raise ValueError("counts are for curves of degree at least 3")
    flexes = 3 * d * (d - 2)
    bitangents = d * (d - 2) * (d - 3) * (d + 3) // 2
    return PluckerCounts(flexes, bitangents)


class FlexCertificate(NamedTuple):
    all_simple: bool
    flex_degree: int


def random_unimodular(rng: random.Random, operations: int = 12) -> list[list[int]]:
    """Small random integer matrix of determinant +-1, built from shears and swaps."""
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(operations):
        kind = rng.randrange(5)
        i, j = rng.sample(range(3), 2)
        if kind == 0:
            m[i], m[j] = m[j], m[i]
        else:
            s = rng.choice((1, -1, 2, -2))
            m[i] = [a + s * b for a, b in zip(m[i], m[j])]
    return m


def flexes_all_simple(form: TernaryForm, seed: int) -> FlexCertificate:
    """Decide whether all flexes of a smooth quartic are simple.

    A seeded unimodular coordinate change puts the curve and its Hessian
    in generic position and z is eliminated by a subresultant remainder
    sequence, giving a degree-24 polynomial whose roots are the
    projected flexes.  A squarefree eliminant certifies that all flexes
    are simple.  A repeated root is a hyperflex exactly when a single
    intersection point sits above it, which is read off the first
    principal subresultant coefficient; repeated roots carrying two
    distinct points are projection collisions, so the coordinate change
    is rejected and retried, as are changes with extraneous or deficient
    eliminant degree.
    """
    if form.degree != 4:
        raise DegenerateFormError("the flex certificate is for quartics")
    if not is_smooth(form):
        raise DegenerateFormError("the flex certificate needs a smooth quartic")
    hess = hessian(form)
    rng = random.Random(seed)
    for _ in range(FLEX_RETRY_BUDGET):
        matrix = random_unimodular(rng)
        moved_form = form.compose(matrix)
        moved_hess = hess.compose(matrix)
        if moved_form.evaluate(0, 0, 1) == 0 or moved_hess.evaluate(0, 0, 1) == 0:
            continue
        hess_slice = moved_hess.xz_slice_at_y1()
        form_slice = moved_form.xz_slice_at_y1()
        try:
            eliminant = res_y_prs(hess_slice, form_slice)
        except PolynomialError:
            continue
        if eliminant.degree != 24:
            continue
        repeated = poly_gcd(eliminant, eliminant.derivative())
        if repeated.degree == 0:
            return FlexCertificate(True, 24)
        sres1 = subresultant_y(hess_slice, form_slice, 1)
        coeffs = sres1.y_coeffs()
        principal = coeffs[1] if len(coeffs) > 1 else UnivariatePoly.zero()
        lonely = squarefree_part(repeated)
        lonely = lonely.exact_div(poly_gcd(lonely, principal))
        if lonely.degree >= 1:
            return FlexCertificate(False, 24)
        # every repeated root carries two distinct points: projection artifact
    raise RetryBudgetError(
        f"no usable coordinate change in {FLEX_RETRY_BUDGET} attempts (seed {seed})"
    )


KLEIN_QUARTIC = "x^3*y + y^3*z + z^3*x"
FERMAT_QUARTIC = "x^4 + y^4 + z^4"
