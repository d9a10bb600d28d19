"""Finite transformations and transformation semigroups.

A transformation of degree n is a total self-map of {0, ..., n-1} stored as
the tuple of its images.  A :class:`TransSemigroup` is a composition-closed
set of transformations with a precomputed composition table; elements are
kept in lexicographic order of their image tuples and every index used
anywhere in this package refers to that order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError, InputError

Transformation = tuple[int, ...]

DEFAULT_CLOSURE_CAP = 100_000


def transformation(images: Iterable[int]) -> Transformation:
    """Validate an image list and return it as a transformation tuple."""
    t = tuple(images)
    n = len(t)
    if n == 0:
        raise InputError("transformations of degree 0 are not supported")
    for x, y in enumerate(t):
        if not isinstance(y, int) or isinstance(y, bool) or not 0 <= y < n:
            raise InputError(f"image of point {x} is {y!r}, not a point in [0, {n})")
    return t


def identity_map(degree: int) -> Transformation:
    return tuple(range(degree))


def compose(f: Transformation, g: Transformation) -> Transformation:
    """The composite f∘g, i.e. the map x ↦ f(g(x))."""
    if len(f) != len(g):
        raise InputError(f"cannot compose transformations of degrees {len(f)} and {len(g)}")
    return tuple(f[y] for y in g)


def is_permutation(f: Transformation) -> bool:
    return len(set(f)) == len(f)


def is_single_cycle(p: Transformation) -> bool:
    """True iff p is a permutation whose cycle decomposition is one n-cycle."""
    if not is_permutation(p):
        return False
    x = p[0]
    length = 1
    while x != 0:
        x = p[x]
        length += 1
    return length == len(p)


class TransSemigroup:
    """A composition-closed set of transformations of a fixed degree.

    Immutable after construction.  Build instances with :func:`closure` or
    :meth:`from_elements`; the constructor trusts its arguments.
    """

    def __init__(
        self,
        degree: int,
        elements: tuple[Transformation, ...],
        comp: tuple[tuple[int, ...], ...],
        generators: tuple[Transformation, ...] | None = None,
    ):
        self.degree = degree
        self.elements = elements
        self.comp = comp
        self.generators = generators
        self._index = {t: i for i, t in enumerate(elements)}
        self._classification: ClassificationReport | None = None

    @classmethod
    def from_elements(
        cls,
        elements: Iterable[Iterable[int]],
        generators: Sequence[Transformation] | None = None,
    ) -> "TransSemigroup":
        """Build a semigroup from an already-closed element set.

        Elements are deduplicated and sorted lexicographically; a set that is
        not closed under composition is rejected.
        """
        elems = sorted({transformation(t) for t in elements})
        if not elems:
            raise InputError("a transformation semigroup needs at least one element")
        degree = len(elems[0])
        if any(len(t) != degree for t in elems):
            raise InputError("all elements must have the same degree")
        index = {t: i for i, t in enumerate(elems)}
        comp_rows = []
        for f in elems:
            row = []
            for g in elems:
                fg = compose(f, g)
                k = index.get(fg)
                if k is None:
                    raise InputError(
                        f"element set is not closed under composition: "
                        f"{f} ∘ {g} = {fg} is missing"
                    )
                row.append(k)
            comp_rows.append(tuple(row))
        gens = tuple(generators) if generators is not None else None
        return cls(degree, tuple(elems), tuple(comp_rows), gens)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, t: Transformation) -> int:
        try:
            return self._index[tuple(t)]
        except KeyError:
            raise InputError(f"{tuple(t)} is not an element of this semigroup") from None

    def generator_indices(self) -> tuple[int, ...]:
        """Indices of a generating set; the full element set when none was recorded."""
        if self.generators is None:
            return tuple(range(self.order))
        return tuple(sorted({self._index[g] for g in self.generators}))

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransSemigroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        return f"TransSemigroup(degree={self.degree}, order={self.order})"


def closure(
    generators: Sequence[Iterable[int]],
    cap: int = DEFAULT_CLOSURE_CAP,
) -> TransSemigroup:
    """Smallest composition-closed superset of the generators.

    Breadth-first: new elements are multiplied by the generators on both
    sides until a fixpoint.  Exceeding ``cap`` elements raises
    :class:`CapacityError`.
    """
    if not generators:
        raise InputError("closure needs at least one generator")
    if cap < 1:
        raise InputError(f"closure cap must be >= 1, got {cap}")
    gens = []
    for g in generators:
        t = transformation(g)
        if t not in gens:
            gens.append(t)
    degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise InputError("all generators must have the same degree")
    known = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for t in frontier:
            for g in gens:
                for prod in (compose(t, g), compose(g, t)):
                    if prod not in known:
                        known.add(prod)
                        new.append(prod)
                        if len(known) > cap:
                            raise CapacityError(
                                f"closure exceeded the cap of {cap} elements"
                            )
        frontier = new
    return TransSemigroup.from_elements(known, generators=tuple(gens))


@dataclass(frozen=True)
class ClassificationReport:
    """What kind of transformation semigroup we are looking at.

    ``identity`` is the index of the identity transformation when present;
    ``inverses`` is the unique-inverse table, total exactly when
    ``is_inverse``.  ``size_matches_degree`` records whether |S| equals the
    degree, the necessary condition for unrepresentations to exist.
    """

    is_monoid: bool
    identity: int | None
    is_group: bool
    is_inverse: bool
    inverses: tuple[int, ...] | None
    is_clifford: bool
    is_left_zero: bool
    idempotents: tuple[int, ...]
    size_matches_degree: bool


def idempotents(sg: TransSemigroup) -> tuple[int, ...]:
    """Indices i with elements[i] ∘ elements[i] = elements[i], in canonical order."""
    return tuple(i for i in range(sg.order) if sg.comp[i][i] == i)


def classify(sg: TransSemigroup) -> ClassificationReport:
    """Classify a transformation semigroup by direct table scans.

    Monoid means the identity transformation is an element; group means
    monoid plus two-sided composition inverses; inverse uses the
    unique-inverse definition (exactly one y with xyx = x and yxy = y);
    Clifford means inverse with every idempotent commuting with every
    element; left-zero means x ∘ y = x throughout.
    """
    if sg._classification is not None:
        return sg._classification
    m = sg.order
    comp = sg.comp
    idem = idempotents(sg)
    ident = sg._index.get(identity_map(sg.degree))
    is_monoid = ident is not None

    inverses: list[int] = []
    is_inverse = True
    for x in range(m):
        mates = [
            y
            for y in range(m)
            if comp[comp[x][y]][x] == x and comp[comp[y][x]][y] == y
        ]
        if len(mates) != 1:
            is_inverse = False
            break
        inverses.append(mates[0])

    is_group = is_monoid and all(
        any(comp[x][y] == ident and comp[y][x] == ident for y in range(m))
        for x in range(m)
    )
    is_clifford = is_inverse and all(
        comp[e][s] == comp[s][e] for e in idem for s in range(m)
    )
    is_left_zero = all(comp[i][j] == i for i in range(m) for j in range(m))

    report = ClassificationReport(
        is_monoid=is_monoid,
        identity=ident,
        is_group=is_group,
        is_inverse=is_inverse,
        inverses=tuple(inverses) if is_inverse else None,
        is_clifford=is_clifford,
        is_left_zero=is_left_zero,
        idempotents=idem,
        size_matches_degree=(m == sg.degree),
    )
    sg._classification = report
    return report


class IdempotentOrder(enum.Enum):
    """How two idempotents compare in the natural partial order."""

    EQUAL = "equal"
    LOWER = "lower"  # f < e
    HIGHER = "higher"  # f > e
    INCOMPARABLE = "incomparable"


def idempotent_le(sg: TransSemigroup, f: int, e: int) -> bool:
    """f ≤ e in the natural order: e∘f = f∘e = f."""
    return sg.comp[e][f] == f and sg.comp[f][e] == f


def natural_order(sg: TransSemigroup, e: int, f: int) -> IdempotentOrder:
    """Position of the idempotent f relative to the idempotent e."""
    for i in (e, f):
        if not 0 <= i < sg.order or sg.comp[i][i] != i:
            raise InputError(f"element {i} is not an idempotent of this semigroup")
    if e == f:
        return IdempotentOrder.EQUAL
    if idempotent_le(sg, f, e):
        return IdempotentOrder.LOWER
    if idempotent_le(sg, e, f):
        return IdempotentOrder.HIGHER
    return IdempotentOrder.INCOMPARABLE
