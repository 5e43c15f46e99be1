"""Exact integer intersection theory on numerical divisor lattices.

Lattices are symmetric integer Gram matrices over a named basis,
together with the canonical class.  Two families matter here: the
product of a curve with itself (basis D1, D2, diagonal) and its
symmetric square (basis D_P, half-diagonal delta).  Everything is done
in exact integer or rational arithmetic; signature computations use
rational congruence diagonalization so that Hodge-index conclusions are
certificates rather than approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import numerology


class LatticeError(ValueError):
    """Structural problem with a lattice, a class, or an operation's input."""


class RankMismatchError(LatticeError):
    """A divisor class has the wrong number of coordinates for the lattice."""


class ClassNotInLatticeError(LatticeError):
    """Prescribed pairings have no integral solution in the lattice."""


class NonIntegralGenusError(LatticeError):
    """Adjunction produced a half-integer: the class cannot be a curve class."""


class LatticeShapeError(LatticeError):
    """Lattice fails a shape precondition (nondegeneracy or signature)."""


class CompletionError(LatticeError):
    """Partial involution data does not extend to a unique isometry."""


class NonDivisibleClassError(LatticeError):
    """A class required to be 2-divisible is not."""


class HodgeIndexViolationError(ArithmeticError):
    """A null class orthogonal to a positive class was nonzero: lattice inconsistent."""


@dataclass(frozen=True)
class DivisorClass:
    """Integer coefficient vector in a fixed lattice basis."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise RankMismatchError("adding classes of different ranks")
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise RankMismatchError("subtracting classes of different ranks")
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar: int) -> "DivisorClass":
        return DivisorClass(tuple(scalar * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def halved(self) -> "DivisorClass":
        """The class divided by 2; raises if any coefficient is odd."""
        if any(c % 2 for c in self.coeffs):
            raise NonDivisibleClassError(f"class {self.coeffs} is not divisible by 2")
        return DivisorClass(tuple(c // 2 for c in self.coeffs))


@dataclass(frozen=True)
class IntersectionLattice:
    """Named basis, symmetric integer Gram matrix, and canonical class vector."""

    basis_labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))
        object.__setattr__(self, "gram", tuple(tuple(row) for row in self.gram))
        object.__setattr__(self, "canonical", tuple(self.canonical))
        n = len(self.basis_labels)
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise LatticeError("gram matrix shape does not match the basis")
        if len(self.canonical) != n:
            raise LatticeError("canonical vector length does not match the basis")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise LatticeError("gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    def canonical_class(self) -> DivisorClass:
        return DivisorClass(self.canonical)

    def basis_class(self, label: str) -> DivisorClass:
        idx = self.basis_labels.index(label)
        return DivisorClass(tuple(1 if i == idx else 0 for i in range(self.rank)))

    def _check_rank(self, c: DivisorClass):
        if len(c.coeffs) != self.rank:
            raise RankMismatchError(
                f"class of rank {len(c.coeffs)} in a lattice of rank {self.rank}"
            )

    def intersect(self, a: DivisorClass, b: DivisorClass) -> int:
        """The pairing a . b through the Gram matrix."""
        self._check_rank(a)
        self._check_rank(b)
        return sum(
            a.coeffs[i] * self.gram[i][j] * b.coeffs[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def adjunction_genus(self, c: DivisorClass) -> int:
        """Arithmetic genus 1 + (c.c + c.K)/2."""
        total = self.intersect(c, c) + self.intersect(c, self.canonical_class())
        if total % 2:
            raise NonIntegralGenusError(f"c^2 + c.K = {total} is odd: genus is not an integer")
        return 1 + total // 2

    def pairings(self, c: DivisorClass) -> tuple[int, ...]:
        """Intersections of c with each basis class, i.e. gram . c."""
        self._check_rank(c)
        return tuple(
            sum(self.gram[i][j] * c.coeffs[j] for j in range(self.rank)) for i in range(self.rank)
        )

    def class_from_intersections(self, pairings) -> DivisorClass:
        """Solve gram . c = pairings exactly; the solution must be integral."""
        target = tuple(pairings)
        if len(target) != self.rank:
            raise RankMismatchError("pairing vector length does not match the lattice rank")
        solution = _solve_exact(self.gram, target)
        if solution is None:
            raise LatticeShapeError("gram matrix is degenerate: pairings do not determine a class")
        coeffs = []
        for value in solution:
            if value.denominator != 1:
                raise ClassNotInLatticeError(
                    f"pairings {target} solve to non-integral coefficients {solution}"
                )
            coeffs.append(int(value))
        return DivisorClass(tuple(coeffs))

    def signature(self) -> tuple[int, int, int]:
        """(positive, negative, zero) inertia indices, by exact congruence diagonalization."""
        n = self.rank
        m = [[Fraction(self.gram[i][j]) for j in range(n)] for i in range(n)]
        pos = neg = zero = 0
        for k in range(n):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][i] != 0), None)
                if pivot is not None:
                    _swap_symmetric(m, k, pivot)
                else:
                    partner = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                    if partner is None:
                        zero += 1
                        continue
                    _add_symmetric(m, k, partner)
            d = m[k][k]
            if d > 0:
                pos += 1
            else:
                neg += 1
            for i in range(k + 1, n):
                factor = m[i][k] / d
                if factor == 0:
                    continue
                for j in range(n):
                    m[i][j] -= factor * m[k][j]
                for j in range(n):
                    m[j][i] -= factor * m[j][k]
        return pos, neg, zero

    def to_json_dict(self, classes: dict[str, DivisorClass] | None = None) -> dict:
        """Serializable dump: {basis, gram, canonical, classes}."""
        return {
            "basis": list(self.basis_labels),
            "gram": [list(row) for row in self.gram],
            "canonical": list(self.canonical),
            "classes": {name: list(c.coeffs) for name, c in (classes or {}).items()},
        }


def _swap_symmetric(m: list[list[Fraction]], a: int, b: int):
    m[a], m[b] = m[b], m[a]
    for row in m:
        row[a], row[b] = row[b], row[a]


def _add_symmetric(m: list[list[Fraction]], a: int, b: int):
    for j in range(len(m)):
        m[a][j] += m[b][j]
    for row in m:
        row[a] += row[b]


def _solve_exact(gram, rhs) -> list[Fraction] | None:
    """Gaussian elimination over the rationals; None when the matrix is singular."""
    n = len(gram)
    aug = [[Fraction(gram[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def product_with_diagonal_lattice(g: int) -> IntersectionLattice:
    """Numerical lattice of C x C for a genus-g curve: basis (D1, D2, Delta).

    D1.D2 = D1.Delta = D2.Delta = 1, D1^2 = D2^2 = 0, Delta^2 = 2 - 2g,
    canonical class (2g - 2)(D1 + D2).  Genus 0 and 1 are allowed so the
    same lattice serves quotient curves of any genus.
    """
    if g < 0:
        raise LatticeError("curve genus must be non-negative")
    gram = (
        (0, 1, 1),
        (1, 0, 1),
        (1, 1, 2 - 2 * g),
    )
    k = 2 * g - 2
    return IntersectionLattice(("D1", "D2", "Delta"), gram, (k, k, 0))


def symmetric_square_lattice(g: int) -> IntersectionLattice:
    """Numerical lattice of the symmetric square of a genus-g curve: basis (D_P, delta).

    D_P^2 = 1, D_P.delta = 1, delta^2 = 1 - g, canonical (2g - 2) D_P - delta.
    """
    if g < 2:
        raise LatticeError("symmetric-square lattice needs genus at least 2")
    gram = (
        (1, 1),
        (1, 1 - g),
    )
    return IntersectionLattice(("D_P", "delta"), gram, (2 * g - 2, -1))


def hodge_index_forced_zero(
    lattice: IntersectionLattice, v: DivisorClass, ample: DivisorClass
) -> bool:
    """True iff v.v = 0 and v.ample = 0, which forces v = 0 in a (1, n-1) lattice.

    The signature precondition is checked exactly; if the two pairings
    vanish but v is not the zero vector the lattice itself is
    inconsistent and the operation fails loudly.
    """
    pos, neg, zero = lattice.signature()
    if (pos, neg, zero) != (1, lattice.rank - 1, 0):
        raise LatticeShapeError(
            f"hodge-index argument needs signature (1, {lattice.rank - 1}), got "
            f"({pos}, {neg}) with {zero} null directions"
        )
    if lattice.intersect(ample, ample) <= 0:
        raise LatticeError("the ample witness must have positive self-intersection")
    forced = lattice.intersect(v, v) == 0 and lattice.intersect(v, ample) == 0
    if forced and not v.is_zero():
        raise HodgeIndexViolationError(
            f"nonzero class {v.coeffs} is null and orthogonal to a positive class"
        )
    return forced


def complete_involution(
    lattice: IntersectionLattice,
    partial: dict[str, DivisorClass],
    invariant: DivisorClass,
) -> tuple[tuple[int, ...], ...]:
    """Extend a partially known pushforward to the full matrix of an involution.

    ``partial`` maps basis labels to their images; ``invariant`` is a
    class fixed by the action.  The extension must be unique, and the
    result is checked to square to the identity and preserve the Gram
    matrix.  Returned as a rank x rank matrix of integers whose column j
    is the image of the j-th basis vector.
    """
    n = lattice.rank
    lattice._check_rank(invariant)
    missing = [j for j, label in enumerate(lattice.basis_labels) if label not in partial]
    for label in partial:
        if label not in lattice.basis_labels:
            raise CompletionError(f"unknown basis label {label!r}")
        lattice._check_rank(partial[label])
    columns: list[list[Fraction] | None] = [None] * n
    for label, image in partial.items():
        columns[lattice.basis_labels.index(label)] = [Fraction(c) for c in image.coeffs]
    if len(missing) > 1:
        raise CompletionError(
            "invariance of a single class cannot determine more than one missing column"
        )
    if len(missing) == 1:
        j0 = missing[0]
        weight = Fraction(invariant.coeffs[j0])
        if weight == 0:
            raise CompletionError(
                f"invariant class has zero coefficient on {lattice.basis_labels[j0]!r}: "
                "extension is underdetermined"
            )
        new_column = []
        for i in range(n):
            known = sum(
                columns[j][i] * invariant.coeffs[j]  # type: ignore[index]
                for j in range(n)
                if j != j0
            )
            new_column.append((Fraction(invariant.coeffs[i]) - known) / weight)
        columns[j0] = new_column
    matrix_fraction = [[columns[j][i] for j in range(n)] for i in range(n)]  # type: ignore[index]
    matrix: list[list[int]] = []
    for row in matrix_fraction:
        out_row = []
        for value in row:
            if value.denominator != 1:
                raise CompletionError(f"completed matrix is not integral: {matrix_fraction}")
            out_row.append(int(value))
        matrix.append(out_row)
    m = tuple(tuple(row) for row in matrix)
    if _mat_mul(m, m) != _identity(n):
        raise CompletionError("completed action does not square to the identity")
    if not _is_isometry(lattice, m):
        raise CompletionError("completed action does not preserve the intersection form")
    check = apply_matrix(m, invariant)
    if check != invariant:
        raise CompletionError("completed action does not fix the required invariant class")
    return m


def apply_matrix(matrix: tuple[tuple[int, ...], ...], c: DivisorClass) -> DivisorClass:
    n = len(matrix)
    if len(c.coeffs) != n:
        raise RankMismatchError("matrix size does not match class rank")
    return DivisorClass(tuple(sum(matrix[i][j] * c.coeffs[j] for j in range(n)) for i in range(n)))


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _is_isometry(lattice: IntersectionLattice, m) -> bool:
    n = lattice.rank
    g = lattice.gram
    mt = tuple(tuple(m[j][i] for j in range(n)) for i in range(n))
    return _mat_mul(_mat_mul(mt, g), m) == g


@dataclass(frozen=True)
class LatticeMorphism:
    """Push/pull pair between lattices for a finite quotient map.

    The projection formula (push x).y = x.(pull y) is verified on all
    basis pairs, as is push o pull = degree x identity.
    """

    source: IntersectionLattice
    target: IntersectionLattice
    pushforward: tuple[tuple[int, ...], ...]  # target rank x source rank
    pullback: tuple[tuple[int, ...], ...]  # source rank x target rank
    degree: int

    def __post_init__(self):
        ns, nt = self.source.rank, self.target.rank
        if len(self.pushforward) != nt or any(len(r) != ns for r in self.pushforward):
            raise LatticeError("pushforward matrix has the wrong shape")
        if len(self.pullback) != ns or any(len(r) != nt for r in self.pullback):
            raise LatticeError("pullback matrix has the wrong shape")
        if self.degree < 1:
            raise LatticeError("degree must be positive")
        for i in range(ns):
            x = DivisorClass(tuple(1 if a == i else 0 for a in range(ns)))
            for j in range(nt):
                y = DivisorClass(tuple(1 if a == j else 0 for a in range(nt)))
                left = self.target.intersect(self.pushforward_class(x), y)
                right = self.source.intersect(x, self.pullback_class(y))
                if left != right:
                    raise LatticeError(
                        f"projection formula fails on basis pair ({i}, {j}): {left} != {right}"
                    )
        for j in range(nt):
            y = DivisorClass(tuple(1 if a == j else 0 for a in range(nt)))
            if self.pushforward_class(self.pullback_class(y)) != self.degree * y:
                raise LatticeError("pushforward of pullback is not degree times the identity")

    def pushforward_class(self, c: DivisorClass) -> DivisorClass:
        self.source._check_rank(c)
        return DivisorClass(
            tuple(
                sum(self.pushforward[i][j] * c.coeffs[j] for j in range(self.source.rank))
                for i in range(self.target.rank)
            )
        )

    def pullback_class(self, c: DivisorClass) -> DivisorClass:
        self.target._check_rank(c)
        return DivisorClass(
            tuple(
                sum(self.pullback[i][j] * c.coeffs[j] for j in range(self.target.rank))
                for i in range(self.source.rank)
            )
        )


def phi_morphism(g: int) -> LatticeMorphism:
    """Degree-2 quotient from the product lattice to the symmetric-square lattice.

    Pushforward sends D1 and D2 to D_P and the diagonal to 2 delta;
    pullback sends D_P to D1 + D2 and delta to the diagonal.
    """
    if g < 2:
        raise LatticeError("quotient morphism needs genus at least 2")
    source = product_with_diagonal_lattice(g)
    target = symmetric_square_lattice(g)
    pushforward = (
        (1, 1, 0),
        (0, 0, 2),
    )
    pullback = (
        (1, 0),
        (1, 0),
        (0, 1),
    )
    return LatticeMorphism(source, target, pushforward, pullback, 2)


@dataclass(frozen=True)
class BranchClassResult:
    """Branch class of the double cover of the genus-3 product, with its half."""

    branch: DivisorClass
    half: DivisorClass
    involution: tuple[tuple[int, ...], ...]


def branch_class(g: int) -> BranchClassResult:
    """Branch locus of the double cover of D x D for the plane-quartic case.

    Runs the whole chain: determine the fiber class from its pairings
    (2, 2, 10), push it to the symmetric square, halve to get the image
    of D_P under the canonical involution, complete the involution using
    invariance of the canonical class, push the diagonal through, and
    pull the result back to D x D.  Only genus 3 is meaningful here.
    """
    if g != 3:
        raise LatticeError("the branch-class chain is specific to the genus-3 case")
    product = product_with_diagonal_lattice(g)
    sym = symmetric_square_lattice(g)
    phi = phi_morphism(g)
    fiber = product.class_from_intersections((2, 2, 10))
    tau_dp = phi.pushforward_class(fiber).halved()
    tau = complete_involution(sym, {"D_P": tau_dp}, sym.canonical_class())
    diagonal_upstairs = DivisorClass((0, 2))  # diagonal = 2 delta in the symmetric square
    tau_diagonal = apply_matrix(tau, diagonal_upstairs)
    branch = phi.pullback_class(tau_diagonal)
    half = branch.halved()
    return BranchClassResult(branch=branch, half=half, involution=tau)


def adjunction_inverse(g: int, p: int) -> int:
    """Self-intersection of the embedded cover curve, inverted from adjunction.

    Works in the product lattice of the quotient curve: the curve meets
    both rulings in 2 points and has arithmetic genus g_C, so its
    self-intersection is 2 g_C - 2 - gamma.K.  Must equal
    8 - 2(g - 1)(p - 2).
    """
    params = numerology.CoverParams(g, p)
    g_c, g_d = numerology.cover_genera(params)
    lattice = product_with_diagonal_lattice(g_d)
    k = lattice.canonical
    if k[2] != 0:
        raise LatticeError("canonical class of a product must have no diagonal component")
    gamma_dot_k = 2 * k[0] + 2 * k[1]
    return 2 * g_c - 2 - gamma_dot_k
