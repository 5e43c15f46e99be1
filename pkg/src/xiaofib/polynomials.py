"""Exact rational polynomial arithmetic: gcds, resultants, subresultants.

Univariate polynomials carry Fraction coefficients.  Bivariate
polynomials in (x, y) treat y as the main variable with coefficients in
Q[x]; resultants and subresultant chains with respect to y come in two
independent flavours, a determinantal one (fraction-free Bareiss on
Sylvester-type matrices) and a polynomial-remainder-sequence one in the
style of the classical subresultant algorithm.  On top of these sits an
exact decision procedure for whether a small family of bivariate
polynomials has a common complex zero, which backs the smoothness
certificate for plane curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd


class PolynomialError(ValueError):
    """Invalid polynomial input for an exact operation."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise PolynomialError(f"exact arithmetic needs int or Fraction coefficients, got {value!r}")


@dataclass(frozen=True)
class UnivariatePoly:
    """Dense univariate polynomial, coefficients ascending, exact rationals.

    The zero polynomial is the empty coefficient tuple; any nonzero
    polynomial has a nonzero leading coefficient.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [_as_fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "UnivariatePoly":
        return cls(())

    @classmethod
    def one(cls) -> "UnivariatePoly":
        return cls((Fraction(1),))

    @classmethod
    def constant(cls, c) -> "UnivariatePoly":
        return cls((_as_fraction(c),))

    @classmethod
    def x_power(cls, k: int, c=1) -> "UnivariatePoly":
        return cls((Fraction(0),) * k + (_as_fraction(c),))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if self.is_zero():
            raise PolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self) -> "UnivariatePoly":
        return UnivariatePoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        if self.is_zero() or other.is_zero():
            return UnivariatePoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePoly(tuple(out))

    def scale(self, c) -> "UnivariatePoly":
        c = _as_fraction(c)
        return UnivariatePoly(tuple(a * c for a in self.coeffs))

    def __pow__(self, k: int) -> "UnivariatePoly":
        if k < 0:
            raise PolynomialError("negative polynomial power")
        result = UnivariatePoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UnivariatePoly":
        return UnivariatePoly(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def divmod(self, other: "UnivariatePoly") -> tuple["UnivariatePoly", "UnivariatePoly"]:
        if other.is_zero():
            raise PolynomialError("polynomial division by zero")
        quotient = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        lead = other.leading()
        d = other.degree
        while len(rem) - 1 >= d and rem:
            if rem[-1] == 0:
                rem.pop()
                continue
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return UnivariatePoly(tuple(quotient)), UnivariatePoly(tuple(rem))

    def exact_div(self, other: "UnivariatePoly") -> "UnivariatePoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise PolynomialError("division expected to be exact left a remainder")
        return q

    def monic(self) -> "UnivariatePoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def primitive(self) -> "UnivariatePoly":
        """Integer-primitive associate with positive leading coefficient."""
        if self.is_zero():
            return self
        denominator = 1
        for c in self.coeffs:
            denominator = denominator * c.denominator // int_gcd(denominator, c.denominator)
        ints = [int(c * denominator) for c in self.coeffs]
        content = 0
        for v in ints:
            content = int_gcd(content, abs(v))
        if ints[-1] < 0:
            content = -content
        return UnivariatePoly(tuple(Fraction(v, content) for v in ints))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            mag = str(abs(c)) if (abs(c) != 1 or i == 0) else ""
            var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            core = mag + ("*" if mag and var else "") + var
            parts.append(("- " if c < 0 else ("+ " if parts else "")) + core)
        return " ".join(parts)


def poly_gcd(f: UnivariatePoly, g: UnivariatePoly) -> UnivariatePoly:
    """Monic gcd over the rationals; gcd(0, 0) = 0."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def squarefree_part(f: UnivariatePoly) -> UnivariatePoly:
    """f divided by gcd(f, f'), made monic."""
    if f.is_zero():
        return f
    return f.exact_div(poly_gcd(f, f.derivative())).monic()


def is_squarefree(f: UnivariatePoly) -> bool:
    if f.is_zero():
        return False
    return poly_gcd(f, f.derivative()).degree == 0


def _fraction_det(matrix: list[list[Fraction]]) -> Fraction:
    n = len(matrix)
    m = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def sylvester_matrix(f: UnivariatePoly, g: UnivariatePoly) -> list[list[Fraction]]:
    """Sylvester matrix with the rows of f first."""
    if f.is_zero() or g.is_zero():
        raise PolynomialError("resultant needs two nonzero polynomials")
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    for shift in range(n):
        row = [Fraction(0)] * size
        for i, c in enumerate(reversed(f.coeffs)):
            row[shift + i] = c
        rows.append(row)
    for shift in range(m):
        row = [Fraction(0)] * size
        for i, c in enumerate(reversed(g.coeffs)):
            row[shift + i] = c
        rows.append(row)
    return rows


def resultant(f: UnivariatePoly, g: UnivariatePoly) -> Fraction:
    """Resultant as the Sylvester determinant (f-rows first)."""
    if f.is_zero() or g.is_zero():
        raise PolynomialError("resultant needs two nonzero polynomials")
    if f.degree == 0 and g.degree == 0:
        return Fraction(1)
    if f.degree == 0:
        return f.leading() ** g.degree
    if g.degree == 0:
        return g.leading() ** f.degree
    return _fraction_det(sylvester_matrix(f, g))


def _poly_matrix_det(matrix: list[list[UnivariatePoly]]) -> UnivariatePoly:
    """Fraction-free Bareiss determinant for matrices over Q[x]."""
    n = len(matrix)
    if n == 0:
        return UnivariatePoly.one()
    m = [row[:] for row in matrix]
    sign = 1
    prev = UnivariatePoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if pivot is None:
                return UnivariatePoly.zero()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = numerator.exact_div(prev)
            m[i][k] = UnivariatePoly.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


class BiPoly:
    """Polynomial in (x, y) with y as the main variable, exact rational coefficients.

    Stored as a map (x-exponent, y-exponent) -> Fraction with zero
    values dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction]):
        cleaned = {}
        for (i, j), c in terms.items():
            c = _as_fraction(c)
            if c != 0:
                if i < 0 or j < 0:
                    raise PolynomialError("negative exponent in bivariate polynomial")
                cleaned[(int(i), int(j))] = c
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls({})

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls({(0, 0): _as_fraction(c)})

    @classmethod
    def from_y_coeffs(cls, coeffs: list[UnivariatePoly]) -> "BiPoly":
        terms = {}
        for j, poly in enumerate(coeffs):
            for i, c in enumerate(poly.coeffs):
                if c != 0:
                    terms[(i, j)] = c
        return cls(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree, -1 for zero."""
        return max((i + j for i, j in self.terms), default=-1)

    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def y_coeffs(self) -> list[UnivariatePoly]:
        """Coefficients of 1, y, y^2, ... as polynomials in x."""
        d = self.deg_y()
        buckets: list[dict[int, Fraction]] = [{} for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            buckets[j][i] = c
        out = []
        for bucket in buckets:
            size = max(bucket, default=-1) + 1
            out.append(UnivariatePoly(tuple(bucket.get(k, Fraction(0)) for k in range(size))))
        return out

    def leading_y(self) -> UnivariatePoly:
        coeffs = self.y_coeffs()
        if not coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return coeffs[-1]

    def __add__(self, other: "BiPoly") -> "BiPoly":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return BiPoly(terms)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) - c
        return BiPoly(terms)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        terms: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return BiPoly(terms)

    def scale(self, c) -> "BiPoly":
        c = _as_fraction(c)
        return BiPoly({k: v * c for k, v in self.terms.items()})

    def evaluate(self, x, y) -> Fraction:
        x, y = _as_fraction(x), _as_fraction(y)
        return sum((c * x**i * y**j for (i, j), c in self.terms.items()), Fraction(0))

    def top_form_at(self, a) -> Fraction:
        """The top-degree homogeneous part evaluated at (a, 1)."""
        a = _as_fraction(a)
        d = self.total_degree()
        return sum((c * a**i for (i, j), c in self.terms.items() if i + j == d), Fraction(0))

    def shear(self, a: int) -> "BiPoly":
        """Substitute x -> x + a*y; common zeros correspond bijectively."""
        if a == 0:
            return self
        terms: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            # (x + a y)^i expanded by binomials
            binom = 1
            for t in range(i + 1):
                key = (i - t, j + t)
                terms[key] = terms.get(key, Fraction(0)) + c * binom * a**t
                binom = binom * (i - t) // (t + 1)
        return BiPoly(terms)

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        """Exact division in Q[x, y]; raises when not divisible."""
        if other.is_zero():
            raise PolynomialError("division by the zero polynomial")
        remainder = dict(self.terms)
        quotient: dict[tuple[int, int], Fraction] = {}
        lead_key = max(other.terms, key=lambda k: (k[1], k[0]))
        lead_c = other.terms[lead_key]
        while remainder:
            key = max(remainder, key=lambda k: (k[1], k[0]))
            di, dj = key[0] - lead_key[0], key[1] - lead_key[1]
            if di < 0 or dj < 0:
                raise PolynomialError("bivariate division expected to be exact failed")
            factor = remainder[key] / lead_c
            quotient[(di, dj)] = factor
            for (i, j), c in other.terms.items():
                k2 = (i + di, j + dj)
                value = remainder.get(k2, Fraction(0)) - factor * c
                if value == 0:
                    remainder.pop(k2, None)
                else:
                    remainder[k2] = value
        return BiPoly(quotient)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[1])):
            c = self.terms[(i, j)]
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("x", i), ("y", j))
                if e > 0
            )
            mag = str(abs(c)) if (abs(c) != 1 or not mono) else ""
            core = mag + ("*" if mag and mono else "") + mono
            parts.append(("- " if c < 0 else ("+ " if parts else "")) + core)
        return " ".join(parts)


def _content_y(p: BiPoly) -> UnivariatePoly:
    """Monic gcd over Q[x] of the y-coefficients."""
    content = UnivariatePoly.zero()
    for c in p.y_coeffs():
        content = poly_gcd(content, c)
        if content.degree == 0:
            break
    return content


def _primitive_y(p: BiPoly) -> BiPoly:
    content = _content_y(p)
    if content.is_zero() or content.degree == 0:
        return p
    return BiPoly.from_y_coeffs([c.exact_div(content) for c in p.y_coeffs()])


def _pseudo_rem_y(a: list[UnivariatePoly], b: list[UnivariatePoly]) -> list[UnivariatePoly]:
    """Pseudo-remainder in y: lc(b)^(deg a - deg b + 1) * a modulo b."""

    def strip(coeffs: list[UnivariatePoly]) -> list[UnivariatePoly]:
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        return coeffs

    r = strip(list(a))
    b = strip(list(b))
    if not b:
        raise PolynomialError("pseudo-division by zero")
    db = len(b) - 1
    lb = b[-1]
    e = len(r) - 1 - db + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] = r[shift + i] - lr * bc
        r = strip(r)
        e -= 1
    if e > 0:
        factor = lb**e
        r = [factor * c for c in r]
    return r


def bipoly_gcd(p: BiPoly, q: BiPoly) -> BiPoly:
    """A gcd of p and q in Q[x, y], computed by a primitive remainder sequence in y."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    content = poly_gcd(_content_y(p), _content_y(q))
    a = _primitive_y(p).y_coeffs()
    b = _primitive_y(q).y_coeffs()
    if len(a) - 1 < len(b) - 1:
        a, b = b, a
    while True:
        stripped_b = [c for c in b]
        while stripped_b and stripped_b[-1].is_zero():
            stripped_b.pop()
        if not stripped_b:
            break
        r = _pseudo_rem_y(a, stripped_b)
        a, b = stripped_b, r
        if b:
            b = _primitive_y(BiPoly.from_y_coeffs(b)).y_coeffs()
    primitive = _primitive_y(BiPoly.from_y_coeffs(a))
    content_part = BiPoly.from_y_coeffs([content])
    return primitive * content_part


def _poly_coeff(coeffs: list[UnivariatePoly], k: int) -> UnivariatePoly:
    return coeffs[k] if 0 <= k < len(coeffs) else UnivariatePoly.zero()


def subresultant_y(p: BiPoly, q: BiPoly, k: int) -> BiPoly:
    """The k-th determinantal subresultant of p and q in y, 0 <= k < deg_y(q).

    A polynomial of y-degree at most k; its y^k coefficient is the k-th
    principal subresultant coefficient.  Requires deg_y(p) >= deg_y(q) >= 1.
    """
    pc = p.y_coeffs()
    qc = q.y_coeffs()
    m, n = len(pc) - 1, len(qc) - 1
    if m < n or n < 1:
        raise PolynomialError("subresultants need deg_y(p) >= deg_y(q) >= 1")
    if not 0 <= k < n:
        raise PolynomialError(f"subresultant index {k} out of range 0..{n - 1}")
    r = m + n - 2 * k
    c = m + n - k
    rows = []
    for t in range(n - k - 1, -1, -1):  # rows y^t * p
        rows.append([_poly_coeff(pc, c - 1 - col - t) for col in range(c)])
    for t in range(m - k - 1, -1, -1):  # rows y^t * q
        rows.append([_poly_coeff(qc, c - 1 - col - t) for col in range(c)])
    result = BiPoly.zero()
    for l in range(k + 1):
        cols = list(range(r - 1)) + [r - 1 + l]
        minor = _poly_matrix_det([[row[col] for col in cols] for row in rows])
        result = result + BiPoly.from_y_coeffs([UnivariatePoly.zero()] * (k - l) + [minor])
    return result


def subresultant_chain_y(p: BiPoly, q: BiPoly) -> list[BiPoly]:
    """All determinantal subresultants sRes_k(p, q) for k = 0, ..., deg_y(q) - 1."""
    return [subresultant_y(p, q, k) for k in range(q.deg_y())]


def res_y(p: BiPoly, q: BiPoly) -> UnivariatePoly:
    """Resultant of p and q with respect to y, as a polynomial in x (determinantal)."""
    if p.is_zero() or q.is_zero():
        raise PolynomialError("resultant needs two nonzero polynomials")
    m, n = p.deg_y(), q.deg_y()
    if m < n:
        r = res_y(q, p)
        return r if (m * n) % 2 == 0 else -r
    if n == 0:
        return q.y_coeffs()[0] ** m if m > 0 else UnivariatePoly.one()
    pc, qc = p.y_coeffs(), q.y_coeffs()
    size = m + n
    rows = []
    for t in range(n - 1, -1, -1):
        rows.append([_poly_coeff(pc, size - 1 - col - t) for col in range(size)])
    for t in range(m - 1, -1, -1):
        rows.append([_poly_coeff(qc, size - 1 - col - t) for col in range(size)])
    return _poly_matrix_det(rows)


def res_y_prs(p: BiPoly, q: BiPoly) -> UnivariatePoly:
    """Resultant of p and q with respect to y by a subresultant remainder sequence.

    Content-normalized pseudo-remainders keep all divisions exact in
    Q[x]; the returned value is the exact resultant, equal to the
    determinantal one.
    """
    if p.is_zero() or q.is_zero():
        raise PolynomialError("resultant needs two nonzero polynomials")
    a = p.y_coeffs()
    b = q.y_coeffs()
    sign = 1
    if len(a) < len(b):
        if ((len(a) - 1) * (len(b) - 1)) % 2 == 1:
            sign = -sign
        a, b = b, a
    deg_a, deg_b = len(a) - 1, len(b) - 1
    if deg_b == 0:
        result = b[0] ** deg_a if deg_a > 0 else UnivariatePoly.one()
        return result if sign == 1 else -result
    cont_a = _content_y(BiPoly.from_y_coeffs(a))
    cont_b = _content_y(BiPoly.from_y_coeffs(b))
    a = [c.exact_div(cont_a) for c in a]
    b = [c.exact_div(cont_b) for c in b]
    t_factor = (cont_a**deg_b) * (cont_b**deg_a)
    g = UnivariatePoly.one()
    h = UnivariatePoly.one()
    while True:
        deg_a, deg_b = len(a) - 1, len(b) - 1
        delta = deg_a - deg_b
        if deg_a % 2 == 1 and deg_b % 2 == 1:
            sign = -sign
        r = _pseudo_rem_y(a, b)
        a = b
        if not r:
            return UnivariatePoly.zero()
        divisor = g * h**delta
        b = [c.exact_div(divisor) for c in r]
        g = a[-1]
        if delta >= 1:
            h = (g**delta).exact_div(h ** (delta - 1))
        if len(b) - 1 == 0:
            break
    deg_a = len(a) - 1
    final = (b[0] ** deg_a).exact_div(h ** (deg_a - 1))
    result = t_factor * final
    return result if sign == 1 else -result


def common_affine_zero(polys: list[BiPoly]) -> bool:
    """Whether the listed bivariate polynomials share a complex affine zero.

    Exact decision: zero polynomials impose nothing, a nonzero constant
    makes the answer no, a single nonconstant polynomial always has
    zeros.  For two or three polynomials the variables are sheared so
    every leading y-coefficient is a nonzero constant, after which gcds,
    resultants and the subresultant gcd-specialization give an exact
    criterion.
    """
    ps = [p for p in polys if not p.is_zero()]
    if not ps:
        return True
    if any(p.total_degree() == 0 for p in ps):
        return False
    if len(ps) == 1:
        return True
    if len(ps) > 3:
        raise PolynomialError("common-zero decision implemented for at most three polynomials")
    a = 0
    while not all(p.top_form_at(a) != 0 for p in ps):
        a = -a if a > 0 else -a + 1
    return _common_zero_normalized([p.shear(a) for p in ps])


def _common_zero_normalized(polys: list[BiPoly]) -> bool:
    # Invariant: every nonzero entry has constant nonzero leading y-coefficient.
    ps = [p for p in polys if not p.is_zero()]
    if not ps:
        return True
    if any(p.total_degree() == 0 for p in ps):
        return False
    if len(ps) == 1:
        return True
    p, q, rest = ps[0], ps[1], ps[2:]
    h = bipoly_gcd(p, q)
    if h.total_degree() >= 1:
        if _common_zero_normalized([h] + rest):
            return True
        return _common_zero_normalized([p.exact_div(h), q.exact_div(h)] + rest)
    if not rest:
        r = res_y(p, q) if p.deg_y() >= q.deg_y() else res_y(q, p)
        return r.degree >= 1
    return _coprime_pair_meets(p, q, rest[0])


def _coprime_pair_meets(p: BiPoly, q: BiPoly, r: BiPoly) -> bool:
    """Common zero of coprime p, q together with r, all with constant leading y-coefficients.

    Branches on the gcd degree j of p and q at a specialization: the
    j-th subresultant is the gcd wherever the lower principal
    coefficients vanish and the j-th does not, so a common zero with r
    over some x-value is witnessed by a common root of the vanishing
    locus polynomials.
    """
    if p.deg_y() < q.deg_y():
        p, q = q, p
    n = q.deg_y()
    chain = subresultant_chain_y(p, q)
    if chain[0].is_zero():
        raise PolynomialError("subresultant branch analysis needs coprime inputs")
    principal = []
    for k, entry in enumerate(chain):
        coeffs = entry.y_coeffs()
        principal.append(coeffs[k] if len(coeffs) > k else UnivariatePoly.zero())
    for j in range(1, n + 1):
        if j < n:
            gate = principal[j]
            if gate.is_zero():
                continue  # this gcd degree never occurs
            g_poly = chain[j]
        else:
            gate = None
            g_poly = q
        t_poly = res_y(g_poly, r) if g_poly.deg_y() >= r.deg_y() else res_y(r, g_poly)
        u = squarefree_part(principal[0])
        for t in range(1, j):
            if principal[t].is_zero():
                continue
            u = poly_gcd(u, principal[t])
            if u.degree == 0:
                break
        if u.degree == 0:
            continue
        if not t_poly.is_zero():
            u = poly_gcd(u, t_poly)
            if u.degree == 0:
                continue
        if gate is not None:
            u = u.exact_div(poly_gcd(u, gate))
        if u.degree >= 1:
            return True
    return False
