import random
from fractions import Fraction

import pytest

from xiaofib.quartic import (
    FERMAT_QUARTIC,
    KLEIN_QUARTIC,
    DegenerateFormError,
    FormParseError,
    TernaryForm,
    flexes_all_simple,
    hessian,
    is_smooth,
    parse_ternary_form,
    plucker_counts,
    random_unimodular,
)


def det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def random_quartic(rng):
    terms = {}
    for i in range(5):
        for j in range(5 - i):
            if rng.random() < 0.6:
                terms[(i, j, 4 - i - j)] = Fraction(rng.randint(-9, 9))
    terms[(4, 0, 0)] = Fraction(rng.choice([1, 2, 3, -2]))
    return TernaryForm(4, terms)


# ---- parsing ----


def test_parse_standard_forms():
    klein = parse_ternary_form(KLEIN_QUARTIC)
    assert klein.degree == 4
    assert klein.coefficients == {
        (3, 1, 0): Fraction(1),
        (0, 3, 1): Fraction(1),
        (1, 0, 3): Fraction(1),
    }
    fermat = parse_ternary_form("x^4+y^4+z^4")
    assert len(fermat.coefficients) == 3


def test_parse_grammar_flexibility():
    form = parse_ternary_form("3/2*x^2*y^2 - z^4 + x^4")
    assert form.coefficients[(2, 2, 0)] == Fraction(3, 2)
    assert form.coefficients[(0, 0, 4)] == Fraction(-1)
    assert parse_ternary_form("2 x y z^2").coefficients == {(1, 1, 2): Fraction(2)}
    assert parse_ternary_form("x^1*y^1*z^2") == parse_ternary_form("x y z^2")
    assert parse_ternary_form("-x^4 + 2*x^4").coefficients == {(4, 0, 0): Fraction(1)}
    # repeated variables multiply
    assert parse_ternary_form("x*x*y*y").coefficients == {(2, 2, 0): Fraction(1)}


def test_parse_errors_have_positions():
    with pytest.raises(FormParseError) as info:
        parse_ternary_form("x^4 + w")
    assert info.value.position == 6
    with pytest.raises(FormParseError):
        parse_ternary_form("x + y^2")  # non-homogeneous
    with pytest.raises(FormParseError):
        parse_ternary_form("x^4 - x^4")  # zero form
    with pytest.raises(FormParseError):
        parse_ternary_form("")
    with pytest.raises(FormParseError):
        parse_ternary_form("x^")
    with pytest.raises(FormParseError):
        parse_ternary_form("x^4 +")
    with pytest.raises(FormParseError):
        parse_ternary_form("* x^4")
    with pytest.raises(FormParseError):
        parse_ternary_form("x^1/2")


# ---- hessian ----


def test_hessian_of_fermat():
    fermat = parse_ternary_form(FERMAT_QUARTIC)
    hess = hessian(fermat)
    assert hess.degree == 6
    assert hess.coefficients == {(2, 2, 2): Fraction(1728)}


def test_hessian_degree_and_degenerate():
    rng = random.Random(71)
    hess = hessian(random_quartic(rng))
    assert hess.degree == 6
    with pytest.raises(DegenerateFormError):
        hessian(parse_ternary_form("x^4"))
    with pytest.raises(DegenerateFormError):
        hessian(parse_ternary_form("x^2 + y^2"))  # degree too small
    cubic_hessian = hessian(parse_ternary_form("x^3 + y^3 + z^3"))
    assert cubic_hessian.degree == 3


def test_hessian_covariance():
    rng = random.Random(2024)
    checked = 0
    while checked < 20:
        form = random_quartic(rng)
        matrix = random_unimodular(rng)
        try:
            hess = hessian(form)
        except DegenerateFormError:
            continue
        lhs = hessian(form.compose(matrix))
        rhs = hess.compose(matrix).scale(Fraction(det3(matrix)) ** 2)
        assert lhs == rhs
        checked += 1


# ---- smoothness ----


def test_is_smooth_classical_curves():
    assert is_smooth(parse_ternary_form(FERMAT_QUARTIC)) is True
    assert is_smooth(parse_ternary_form(KLEIN_QUARTIC)) is True
    assert is_smooth(parse_ternary_form("x^2 + y^2 + z^2")) is True


def test_is_smooth_rejects_singular_curves():
    assert is_smooth(parse_ternary_form("x^4")) is False
    assert is_smooth(parse_ternary_form("x^2*y^2")) is False
    # node at (0 : 0 : 1)
    assert is_smooth(parse_ternary_form("x^4 + y^4 - x^2*z^2")) is False
    # cuspidal cubic
    assert is_smooth(parse_ternary_form("y^2*z - x^3")) is False
    with pytest.raises(DegenerateFormError):
        is_smooth(parse_ternary_form("x + y"))


def test_is_smooth_irrational_singularities():
    # smooth cubic times a line: singular exactly where they meet, at points
    # with x/z a cube root of 2, so no rational shortcut applies
    assert is_smooth(parse_ternary_form("y^3*z - x^3*y + 2*y*z^3")) is False
    # double conic: singular along a whole curve
    double_conic = "x^4 + y^4 + z^4 + 2*x^2*y^2 + 2*y^2*z^2 + 2*x^2*z^2"
    assert is_smooth(parse_ternary_form(double_conic)) is False


def random_conic(rng):
    terms = {}
    for i in range(3):
        for j in range(3 - i):
            if rng.random() < 0.8:
                terms[(i, j, 2 - i - j)] = Fraction(rng.randint(-4, 4))
    terms[(2, 0, 0)] = Fraction(rng.choice([1, 2, -1]))
    return TernaryForm(2, terms)


def test_reducible_quartics_are_singular():
    # two plane curves always intersect, so a product of conics is singular
    rng = random.Random(101)
    checked = 0
    while checked < 8:
        product = random_conic(rng) * random_conic(rng)
        if product.is_zero():
            continue
        assert is_smooth(product) is False
        checked += 1


# ---- flexes ----


def test_flex_certificates_stable_across_seeds():
    klein = parse_ternary_form(KLEIN_QUARTIC)
    fermat = parse_ternary_form(FERMAT_QUARTIC)
    for seed in (1, 2):
        assert tuple(flexes_all_simple(klein, seed)) == (True, 24)
        assert tuple(flexes_all_simple(fermat, seed)) == (False, 24)


def test_flex_certificate_preconditions():
    with pytest.raises(DegenerateFormError):
        flexes_all_simple(parse_ternary_form("x^3 + y^3 + z^3"), 1)
    with pytest.raises(DegenerateFormError):
        flexes_all_simple(parse_ternary_form("x^4 + y^4 - x^2*z^2"), 1)


# ---- counts and matrices ----


def test_plucker_counts():
    assert tuple(plucker_counts(4)) == (24, 28)
    assert tuple(plucker_counts(3)) == (9, 0)
    assert tuple(plucker_counts(5)) == (45, 120)
    with pytest.raises(ValueError):
        plucker_counts(2)


def test_random_unimodular_determinant():
    rng = random.Random(77)
    for _ in range(50):
        assert det3(random_unimodular(rng)) in (1, -1)


def test_compose_is_substitution():
    rng = random.Random(83)
    for _ in range(10):
        form = random_quartic(rng)
        matrix = random_unimodular(rng)
        x, y, z = (Fraction(rng.randint(-3, 3)) for _ in range(3))
        image = [sum(matrix[i][j] * v for j, v in enumerate((x, y, z))) for i in range(3)]
        assert form.compose(matrix).evaluate(x, y, z) == form.evaluate(*image)
