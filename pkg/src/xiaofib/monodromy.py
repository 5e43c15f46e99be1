"""Branched covers of the line given by permutation monodromy.

A cover of degree n with k branch points is encoded by a tuple of
permutations (sigma_1, ..., sigma_k) of the sheet set {0, ..., n-1}.
Throughout the package tuples act left to right: sigma_1 is applied
first, and the product sigma_1 * sigma_2 * ... * sigma_k must be the
identity.  All genus computations reduce to Riemann-Hurwitz on cycle
types, so branch points are abstract labels and carry no coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import factorial

DEFAULT_MAX_GROUP_ORDER = 5000

CYCLIC = "cyclic"
DIHEDRAL = "dihedral"
SYMMETRIC = "symmetric"
OTHER = "other"


class MonodromyDataError(ValueError):
    """Monodromy data violates a structural invariant."""


class EnumerationLimitError(RuntimeError):
    """Group closure exceeded the configured element bound."""


class SubgroupContainmentError(ValueError):
    """Claimed subgroup is not contained in the ambient group."""


@dataclass(frozen=True)
class Permutation:
    """Bijection of {0, ..., n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise MonodromyDataError(f"not a bijection of 0..{len(images) - 1}: {images!r}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation such as ``(0 1)(2 3)``, 0-based, whitespace-insensitive."""
        stripped = re.sub(r"\s+", "", text)
        if re.sub(r"\([0-9,]*\)", "", stripped):
            raise MonodromyDataError(f"unparseable cycle notation: {text!r}")
        images = list(range(degree))
        seen: set[int] = set()
        for body in re.findall(r"\(([^()]*)\)", text):
            entries = [e for e in re.split(r"[,\s]+", body.strip()) if e]
            cycle = [int(e) for e in entries]
            if any(i < 0 or i >= degree for i in cycle):
                raise MonodromyDataError(f"sheet index out of range 0..{degree - 1}: {text!r}")
            if seen.intersection(cycle) or len(set(cycle)) != len(cycle):
                raise MonodromyDataError(f"repeated sheet index in cycles: {text!r}")
            seen.update(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def then(self, other: "Permutation") -> "Permutation":
        """Composite applying ``self`` first, then ``other``."""
        if other.degree != self.degree:
            raise MonodromyDataError("composing permutations of different degrees")
        return Permutation(tuple(other.images[i] for i in self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.then(other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles, fixed points included."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths sorted decreasingly; sums to the degree."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        power = self
        k = 1
        while not power.is_identity():
            power = power.then(self)
            k += 1
        return k

    def sign(self) -> int:
        return -1 if (self.degree - len(self.cycles())) % 2 else 1

    def moved_points(self) -> frozenset[int]:
        return frozenset(i for i, j in enumerate(self.images) if i != j)

    def cycle_string(self) -> str:
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) if parts else "()"


@dataclass(frozen=True)
class BranchedCover:
    """Degree-n cover of a genus-b curve, branch monodromy acting left to right."""

    degree: int
    base_genus: int
    branch_monodromy: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "branch_monodromy", tuple(self.branch_monodromy))
        if self.degree < 1:
            raise MonodromyDataError("cover degree must be positive")
        if self.base_genus < 0:
            raise MonodromyDataError("base genus must be non-negative")
        for sigma in self.branch_monodromy:
            if sigma.degree != self.degree:
                raise MonodromyDataError("permutation degree does not match cover degree")
            if sigma.is_identity():
                raise MonodromyDataError("branch permutations must be non-identity")
        if self.branch_monodromy:
            product = reduce(Permutation.then, self.branch_monodromy)
            if not product.is_identity():
                raise MonodromyDataError("branch monodromy product is not the identity")
        if not self._is_transitive():
            raise MonodromyDataError("monodromy group is not transitive: cover is disconnected")

    def _is_transitive(self) -> bool:
        reached = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for sigma in self.branch_monodromy:
                for j in (sigma.images[i], sigma.inverse().images[i]):
                    if j not in reached:
                        reached.add(j)
                        frontier.append(j)
        return len(reached) == self.degree


@dataclass(frozen=True)
class GroupDescriptor:
    """A concrete permutation group: order, coarse classification, full element list."""

    order: int
    classification: str
    elements: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if self.order != len(self.elements):
            raise MonodromyDataError("group order does not match element count")

    def __contains__(self, perm: Permutation) -> bool:
        return perm in set(self.elements)


def rh_genus(cover: BranchedCover) -> int:
    """Genus from Riemann-Hurwitz: 2g - 2 = n(2b - 2) + sum over cycles of (len - 1)."""
    n = cover.degree
    ramification = sum(n - len(sigma.cycles()) for sigma in cover.branch_monodromy)
    rhs = n * (2 * cover.base_genus - 2) + ramification
    if rhs % 2:
        raise MonodromyDataError(f"Riemann-Hurwitz total {rhs} is odd: malformed monodromy data")
    genus = (rhs + 2) // 2
    if genus < 0:
        raise MonodromyDataError(f"negative genus {genus}: malformed monodromy data")
    return genus


def ramification_profile(cover: BranchedCover) -> list[tuple[int, ...]]:
    """Cycle-length multiset over each branch point, sorted decreasingly."""
    return [sigma.cycle_type() for sigma in cover.branch_monodromy]


def _closure(generators: list[Permutation], degree: int, max_order: int) -> list[Permutation]:
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for g in frontier:
            for s in generators:
                h = g.then(s)
                if h not in elements:
                    elements.add(h)
                    new_frontier.append(h)
                    if len(elements) > max_order:
                        raise EnumerationLimitError(
                            f"group closure exceeds the configured bound {max_order}"
                        )
        frontier = new_frontier
    return sorted(elements, key=lambda p: p.images)


def _classify(elements: list[Permutation]) -> str:
    n = len(elements)
    orders = [e.order() for e in elements]
    if n in orders:
        return CYCLIC
    if n % 2 == 0 and n >= 6:
        m = n // 2
        element_set = set(elements)
        for r in elements:
            if r.order() != m:
                continue
            rotations = set()
            power = Permutation.identity(r.degree)
            for _ in range(m):
                rotations.add(power)
                power = power.then(r)
            r_inv = r.inverse()
            for s in element_set - rotations:
                if s.then(s).is_identity() and s.then(r).then(s) == r_inv:
                    return DIHEDRAL
            break
    moved: set[int] = set()
    for e in elements:
        moved.update(e.moved_points())
    if len(moved) >= 3 and n == factorial(len(moved)):
        return SYMMETRIC
    return OTHER


def generated_group(cover: BranchedCover, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> GroupDescriptor:
    """Enumerate the monodromy group by closure under composition and classify it."""
    elements = _closure(list(cover.branch_monodromy), cover.degree, max_order)
    return GroupDescriptor(len(elements), _classify(elements), tuple(elements))


def group_from_elements(perms: list[Permutation]) -> GroupDescriptor:
    """Descriptor for an explicitly listed group; closure and identity are verified."""
    elements = set(perms)
    if not elements:
        raise MonodromyDataError("a group needs at least the identity")
    degree = next(iter(elements)).degree
    if Permutation.identity(degree) not in elements:
        raise MonodromyDataError("element list is missing the identity")
    for a in elements:
        for b in elements:
            if a.then(b) not in elements:
                raise MonodromyDataError("element list is not closed under composition")
    ordered = sorted(elements, key=lambda p: p.images)
    return GroupDescriptor(len(ordered), _classify(ordered), tuple(ordered))


def cyclic_rotation_subgroup(group: GroupDescriptor) -> GroupDescriptor:
    """The cyclic index-2 subgroup of a dihedral group descriptor."""
    if group.classification != DIHEDRAL:
        raise MonodromyDataError("rotation subgroup is defined for dihedral groups only")
    m = group.order // 2
    for r in group.elements:
        if r.order() != m:
            continue
        rotations = []
        power = Permutation.identity(r.degree)
        for _ in range(m):
            rotations.append(power)
            power = power.then(r)
        return GroupDescriptor(m, _classify(rotations), tuple(sorted(rotations, key=lambda p: p.images)))
    raise MonodromyDataError("dihedral descriptor has no rotation of half order")


def even_subgroup(group: GroupDescriptor) -> GroupDescriptor:
    """The subgroup of even permutations (alternating part)."""
    evens = sorted((e for e in group.elements if e.sign() == 1), key=lambda p: p.images)
    return GroupDescriptor(len(evens), _classify(evens), tuple(evens))


def galois_closure_genus(cover: BranchedCover, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> int:
    """Genus of the regular cover on which the monodromy group acts by translation."""
    group = generated_group(cover, max_order)
    index = {g.images: i for i, g in enumerate(group.elements)}
    regular = []
    for sigma in cover.branch_monodromy:
        # translation g -> g * sigma; the homomorphism side for left-to-right products
        images = tuple(index[g.then(sigma).images] for g in group.elements)
        regular.append(Permutation(images))
    closure = BranchedCover(group.order, cover.base_genus, tuple(regular))
    return rh_genus(closure)


def quotient_genus(
    cover: BranchedCover,
    subgroup: GroupDescriptor,
    max_order: int = DEFAULT_MAX_GROUP_ORDER,
) -> int:
    """Genus of the quotient of the Galois closure by ``subgroup``.

    The monodromy acts on cosets of the subgroup inside the full monodromy
    group; branch points whose induced action is trivial are dropped.
    """
    group = generated_group(cover, max_order)
    ambient = set(group.elements)
    members = set(subgroup.elements)
    for u in subgroup.elements:
        if u not in ambient:
            raise SubgroupContainmentError("subgroup element is not in the monodromy group")
    if Permutation.identity(cover.degree) not in members:
        raise MonodromyDataError("subgroup is missing the identity")
    for u in members:
        for v in members:
            if u.then(v) not in members:
                raise MonodromyDataError("subgroup is not closed under composition")
    coset_of: dict[tuple[int, ...], int] = {}
    n_cosets = 0
    for g in group.elements:
        if g.images in coset_of:
            continue
        for u in subgroup.elements:
            coset_of[u.then(g).images] = n_cosets
        n_cosets += 1
    reps: list[Permutation] = [None] * n_cosets  # type: ignore[list-item]
    for g in group.elements:
        idx = coset_of[g.images]
        if reps[idx] is None:
            reps[idx] = g
    induced = []
    for sigma in cover.branch_monodromy:
        images = tuple(coset_of[rep.then(sigma).images] for rep in reps)
        perm = Permutation(images)
        if not perm.is_identity():
            induced.append(perm)
    quotient = BranchedCover(n_cosets, cover.base_genus, tuple(induced))
    return rh_genus(quotient)


def build_dihedral_cover(g: int, p: int) -> BranchedCover:
    """Degree-p cover of the line with 2g + 2 reflection branch points.

    Sheets are Z/p and each branch permutation is a reflection
    x -> a - x (mod p), so every profile is {2^((p-1)/2), 1}.  The tuple
    (s_1, s_1, s_0, ..., s_0) multiplies to the identity and generates
    the full dihedral group of order 2p because s_0 * s_1 is the unit
    rotation.
    """
    if g < 2:
        raise MonodromyDataError("base hyperelliptic genus must be at least 2")
    if not _is_odd_prime(p):
        raise MonodromyDataError(f"cover degree must be an odd prime, got {p}")

    def reflection(a: int) -> Permutation:
        return Permutation(tuple((a - x) % p for x in range(p)))

    tup = (reflection(1), reflection(1)) + (reflection(0),) * (2 * g)
    return BranchedCover(p, 0, tup)


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def parse_cover(text: str) -> BranchedCover:
    """Parse the cover file format.

    First non-empty line: ``degree n; base_genus b``.  Each following
    non-empty line is one permutation in 0-based cycle notation, e.g.
    ``(0 1)(2 3)``.  Whitespace-insensitive.
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise MonodromyDataError("empty cover description")
    header = re.fullmatch(r"degree\s*(\d+)\s*;\s*base_genus\s*(\d+)", lines[0].strip())
    if not header:
        raise MonodromyDataError(f"bad header line {lines[0]!r}: expected 'degree n; base_genus b'")
    degree = int(header.group(1))
    base_genus = int(header.group(2))
    perms = tuple(Permutation.from_cycles(line, degree) for line in lines[1:])
    return BranchedCover(degree, base_genus, perms)


def load_cover(path: str) -> BranchedCover:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_cover(handle.read())
