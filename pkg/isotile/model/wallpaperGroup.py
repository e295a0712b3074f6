from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import product
from math import gcd, isqrt
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .isometry import (
    IDENTITY,
    IDENTITY_MATRIX,
    Isometry,
    apply_to_cell,
    fixing,
    image_cell,
    mat_apply,
    matrix_closure,
    rotation_about,
)
from .lattice import (
    Cell,
    LatticeKind,
    Orient,
    Edge,
    ScaledPoint,
    boundary_edges,
    cell_at_centroid,
    cell_centroid,
    cell_vertices,
)


__all__ = [
    "GroupKind",
    "GroupParams",
    "AdmissibleSize",
    "BUILDABLE_KINDS",
    "EMPTY_KINDS",
    "EMPTINESS_NOTES",
    "is_marked_only",
    "validate_params",
    "fundamental_area",
    "admissible_sizes",
    "TranslationLattice",
    "OrbitLabel",
    "WallpaperGroup",
    "build_group",
]


class GroupKind(Enum):
    """Wallpaper group types handled by the engine. Declaration order is table order."""

    P3 = "p3"
    P31M = "p31m"
    P3M1 = "p3m1"
    P4 = "p4"
    P4G = "p4g"
    P4M = "p4m"
    P6 = "p6"
    P6M = "p6m"

    @property
    def lattice(self) -> LatticeKind:
        if self in (GroupKind.P4, GroupKind.P4G, GroupKind.P4M):
            return LatticeKind.SQUARE
        return LatticeKind.TRIANGULAR

    @property
    def buildable(self) -> bool:
        return self in BUILDABLE_KINDS

    @property
    def point_group_size(self) -> int:
        return _POINT_GROUP_SIZE[self]

    @classmethod
    def parse(cls, name: str) -> "GroupKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown group kind {name!r}; expected one of {choices}")


BUILDABLE_KINDS = (GroupKind.P3, GroupKind.P31M, GroupKind.P4, GroupKind.P4G, GroupKind.P6)
EMPTY_KINDS = (GroupKind.P4M, GroupKind.P6M)
TWO_PARAMETER_KINDS = (GroupKind.P3, GroupKind.P4, GroupKind.P6)

_POINT_GROUP_SIZE = {
    GroupKind.P3: 3,
    GroupKind.P31M: 6,
    GroupKind.P3M1: 6,
    GroupKind.P4: 4,
    GroupKind.P4G: 8,
    GroupKind.P4M: 8,
    GroupKind.P6: 6,
    GroupKind.P6M: 12,
}

EMPTINESS_NOTES = {
    GroupKind.P4M: "p4m admits no polyomino fundamental domains of an isohedral tiling",
    GroupKind.P6M: "p6m admits no polyiamond fundamental domains of an isohedral tiling",
    GroupKind.P3M1: (
        "p3m1 admits no isohedral tiling by unmarked polyiamonds; only the marked "
        "triangular k^2-iamond is reported"
    ),
}


class GroupParams(NamedTuple):
    """Placement of the second generating center (x, y), or the axis offset x."""

    x: int
    y: int = 0

    def __str__(self):
        return f"({self.x},{self.y})"


class AdmissibleSize(NamedTuple):
    n: int
    params: List[GroupParams]


def is_marked_only(kind: GroupKind) -> bool:
    return kind is GroupKind.P3M1


def validate_params(kind: GroupKind, params: Sequence[int]) -> GroupParams:
    """
    Check placement parameters for a group kind and return them normalized, with x >= y
    for the kinds whose two parameters are interchangeable.

    :raises ValueError: with a parity/zero/range diagnostic
    :raises TypeError: if the parameters are not integers
    """
    if kind in EMPTY_KINDS:
        raise ValueError(EMPTINESS_NOTES[kind])
    params = tuple(params)
    if len(params) == 1:
        params = (params[0], 0)
    if len(params) != 2:
        raise ValueError(f"expected one or two placement parameters, got {params}")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in params):
        raise TypeError(f"placement parameters must be integers, got {params}")
    x, y = params
    if x < 0 or y < 0:
        raise ValueError(f"placement parameters must be nonnegative, got ({x},{y})")

    if kind in TWO_PARAMETER_KINDS:
        if x == 0 and y == 0:
            raise ValueError(f"{kind.value}: x and y must not both be 0")
        if kind is GroupKind.P4 and (x - y) % 2 != 0:
            raise ValueError(f"p4: x and y must have the same parity, got ({x},{y})")
        return GroupParams(max(x, y), min(x, y))

    if y != 0:
        raise ValueError(f"{kind.value} takes a single parameter x, got ({x},{y})")
    if x < 1:
        raise ValueError(f"{kind.value}: x must be at least 1")
    return GroupParams(x, 0)


def fundamental_area(kind: GroupKind, params: Sequence[int]) -> int:
    """
    Area of a fundamental domain in cell units (unit squares or unit triangles).

    :param kind: group kind
    :param params: placement parameters, validated
    :return: the number of cells n of every tile generated with these parameters
    """
    x, y = validate_params(kind, params)
    if kind is GroupKind.P4:
        return (x * x + y * y) // 2
    if kind in (GroupKind.P4G, GroupKind.P3M1):
        return x * x
    if kind is GroupKind.P3:
        return 2 * (x * x + x * y + y * y)
    if kind is GroupKind.P31M:
        return 3 * x * x
    return x * x + x * y + y * y


def admissible_sizes(kind: GroupKind, max_n: int) -> List[AdmissibleSize]:
    """
    All achievable n <= max_n together with every parameter pair realizing it.

    Parameter lists are sorted ascending. p4m and p6m give an empty list; p3m1 lists
    n = k^2, whose single tile is marked-only.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    if kind in EMPTY_KINDS:
        return []
    by_n: Dict[int, List[GroupParams]] = {}
    bound = isqrt(2 * max_n) + 1
    for x in range(1, bound + 1):
        ys = range(0, x + 1) if kind in TWO_PARAMETER_KINDS else [0]
        for y in ys:
            try:
                params = validate_params(kind, (x, y))
            except ValueError:
                continue
            n = fundamental_area(kind, params)
            if n <= max_n:
                by_n.setdefault(n, []).append(params)
    return [AdmissibleSize(n, sorted(set(by_n[n]))) for n in sorted(by_n)]


@dataclass(frozen=True)
class TranslationLattice:
    """
    A full-rank sublattice of Z^2 (scaled coordinates) in Hermite normal form, with basis
    e1 = (A, 0) and e2 = (B, D), where A, D > 0 and 0 <= B < A.
    """

    A: int
    B: int
    D: int

    @classmethod
    def spanned_by(cls, vectors) -> "TranslationLattice":
        """
        :raises ValueError: if the vectors do not span a full-rank lattice
        """
        with_y = [tuple(v) for v in vectors if v[1] != 0]
        xs = [v[0] for v in vectors if v[1] == 0]
        while len(with_y) > 1:
            with_y.sort(key=lambda v: (abs(v[1]), v))
            pivot = with_y[0]
            rest = []
            for v in with_y[1:]:
                k = v[1] // pivot[1]
                w = (v[0] - k * pivot[0], v[1] - k * pivot[1])
                if w[1] == 0:
                    xs.append(w[0])
                else:
                    rest.append(w)
            with_y = [pivot] + rest
        a = 0
        for x in xs:
            a = gcd(a, x)
        if not with_y or a == 0:
            raise ValueError("translations do not span the plane")
        px, py = with_y[0]
        if py < 0:
            px, py = -px, -py
        return cls(a, px % a, py)

    @property
    def basis(self) -> Tuple[ScaledPoint, ScaledPoint]:
        return (self.A, 0), (self.B, self.D)

    @property
    def area(self) -> int:
        return self.A * self.D

    def reduce(self, p: ScaledPoint) -> ScaledPoint:
        """The canonical residue of p in [0, A) x [0, D)."""
        k = p[1] // self.D
        return (p[0] - k * self.B) % self.A, p[1] - k * self.D

    def contains(self, v: ScaledPoint) -> bool:
        return self.reduce(v) == (0, 0)

    def extended(self, vectors) -> "TranslationLattice":
        return TranslationLattice.spanned_by(list(self.basis) + [tuple(v) for v in vectors])

    def cubic_multiple(self) -> int:
        """The least M such that M Z^2 is contained in this lattice."""
        q = self.D * self.A // gcd(self.A, self.B)
        return self.A * q // gcd(self.A, q)

    def coset_vectors(self, modulus: int) -> List[ScaledPoint]:
        """Representatives of this lattice modulo ``modulus`` Z^2."""
        return [
            (i * self.A + j * self.B, j * self.D)
            for j in range(modulus // self.D)
            for i in range(modulus // self.A)
        ]


class OrbitLabel(NamedTuple):
    """Canonical key of a cell's orbit: the least cell among its reduced images."""

    key: Cell


@dataclass(frozen=True)
class WallpaperGroup:
    """
    A concrete wallpaper group instance on the square or triangular lattice.

    :param kind: group kind
    :param params: normalized placement parameters
    :param lattice: lattice the group acts on
    :param generators: generating isometries
    :param translations: the translation sublattice of the group
    :param cosets: one representative per element of the group modulo translations,
        identity first
    :param black: the origin center
    :param white: the second placed center (the corner center on the mirrors for p4g/p31m)
    :param n: fundamental-domain area in cells
    """

    kind: GroupKind
    params: GroupParams
    lattice: LatticeKind
    generators: Tuple[Isometry, ...]
    translations: TranslationLattice
    cosets: Tuple[Isometry, ...]
    black: ScaledPoint
    white: ScaledPoint
    n: int
    _labels: Dict[Cell, OrbitLabel] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    @property
    def lambda_basis(self) -> Tuple[ScaledPoint, ScaledPoint]:
        return self.translations.basis

    @property
    def has_reflection(self) -> bool:
        return any(not g.is_proper for g in self.cosets)

    @property
    def uses_region(self) -> bool:
        return self.kind in (GroupKind.P4G, GroupKind.P31M)

    def reduce_point(self, p: ScaledPoint) -> ScaledPoint:
        return self.translations.reduce(p)

    def reduce_cell(self, c: Cell) -> Cell:
        return cell_at_centroid(self.translations.reduce(cell_centroid(c)), self.lattice)

    def cell_offset(self, c: Cell) -> Tuple[Cell, ScaledPoint]:
        """Split a cell into its residue cell and the translation carrying the residue onto it."""
        centroid = cell_centroid(c)
        residue = self.translations.reduce(centroid)
        offset = (centroid[0] - residue[0], centroid[1] - residue[1])
        return cell_at_centroid(residue, self.lattice), offset

    def residue_cells(self) -> List[Cell]:
        """All cells whose centroid lies in the residue domain of the translation lattice."""
        found = []
        for px in range(self.translations.A):
            for py in range(self.translations.D):
                try:
                    found.append(cell_at_centroid((px, py), self.lattice))
                except ValueError:
                    continue
        return sorted(found)

    def orbit_label(self, c: Cell) -> OrbitLabel:
        residue = self.reduce_cell(c)
        label = self._labels.get(residue)
        if label is None:
            key = min(self.reduce_cell(image_cell(g, residue)) for g in self.cosets)
            label = OrbitLabel(key)
            self._labels[residue] = label
        return label

    def in_region(self, c: Cell) -> bool:
        """
        For p4g and p31m, whether the cell lies in the closed region bounded by the
        reflection axes nearest the origin; always true for the other kinds.
        """
        if not self.uses_region:
            return True
        x = self.params.x
        s = self.lattice.scale
        for px, py in cell_vertices(c):
            u, v = px // s, py // s
            if self.kind is GroupKind.P4G:
                if not (-x <= u <= x and -x <= v <= x):
                    return False
            elif u > x or v > x or u + v < -x:
                return False
        return True

    def stabilizer(self, p: ScaledPoint) -> List[Isometry]:
        """Elements of the group fixing p, one per coset that has such an element."""
        fixing_elements = []
        for g in self.cosets:
            q = g.apply(p)
            d = (p[0] - q[0], p[1] - q[1])
            if self.translations.contains(d):
                fixing_elements.append(Isometry(g.m, (g.t[0] + d[0], g.t[1] + d[1])))
        return fixing_elements

    def rotation_order_at(self, p: ScaledPoint) -> int:
        return sum(1 for g in self.stabilizer(p) if g.is_proper)

    def same_orbit(self, p: ScaledPoint, q: ScaledPoint) -> bool:
        for g in self.cosets:
            r = g.apply(p)
            if self.translations.contains((q[0] - r[0], q[1] - r[1])):
                return True
        return False

    def mirror_edges(self, cells) -> List[Edge]:
        """Boundary edges of a cell set that lie on a reflection axis of the group."""
        mirrors = [g for g in self.cosets if not g.is_proper]
        found = []
        for p, q in boundary_edges(cells):
            for g in mirrors:
                gp, gq = g.apply(p), g.apply(q)
                dp = (p[0] - gp[0], p[1] - gp[1])
                if dp == (q[0] - gq[0], q[1] - gq[1]) and self.translations.contains(dp):
                    found.append((p, q))
                    break
        return found

    def __reduce__(self):
        return build_group, (self.kind, self.params)


def _generators(kind: GroupKind, params: GroupParams) -> Tuple[Tuple[Isometry, ...], ScaledPoint]:
    lattice = kind.lattice
    s = lattice.scale
    x, y = params
    origin = (0, 0)
    if kind is GroupKind.P4:
        white = (s * x, s * y)
        gens = (rotation_about(origin, lattice, 4), rotation_about(white, lattice, 4))
    elif kind is GroupKind.P3:
        white = (s * x, s * y)
        gens = (rotation_about(origin, lattice, 3), rotation_about(white, lattice, 3))
    elif kind is GroupKind.P6:
        white = (s * x, s * y)
        gens = (rotation_about(origin, lattice, 6), rotation_about(white, lattice, 3))
    elif kind is GroupKind.P4G:
        # mirror in the axis u = x
        white = (s * x, s * x)
        gens = (rotation_about(origin, lattice, 4), fixing((-1, 0, 0, 1), (s * x, 0)))
    else:
        # mirror in the axis v = x, which runs from x(u+v) to x(-2u+v)
        white = (s * x, s * x)
        gens = (rotation_about(origin, lattice, 3), fixing((1, 1, 0, -1), (0, s * x)))
    return gens, white


def _close_group(
    generators: Sequence[Isometry], word_length: int = 4
) -> Tuple[TranslationLattice, Tuple[Isometry, ...]]:
    """
    Translation lattice and coset representatives of the group generated by ``generators``.

    Translations are first collected from all words of bounded length; cosets are then sieved
    by closing under the generators with translation parts reduced modulo the lattice. Two
    sieved elements with the same linear part but distinct reduced translations expose a
    missed translation, which is added before sieving again.
    """
    letters = list(generators) + [g.inverse() for g in generators]
    linear = matrix_closure([g.m for g in generators])

    vectors = []
    for length in range(1, word_length + 1):
        for word in product(letters, repeat=length):
            g = IDENTITY
            for letter in word:
                g = letter.compose(g)
            if g.is_translation and g.t != (0, 0):
                vectors.extend(mat_apply(m, g.t) for m in linear)
    try:
        translations = TranslationLattice.spanned_by(vectors)
    except ValueError:
        raise RuntimeError(f"generators {list(generators)} produced no full translation lattice")

    while True:
        reps = {IDENTITY_MATRIX: IDENTITY}
        queue = [IDENTITY]
        missed: Optional[ScaledPoint] = None
        i = 0
        while i < len(queue) and missed is None:
            current = queue[i]
            i += 1
            for letter in letters:
                g = letter.compose(current)
                g = Isometry(g.m, translations.reduce(g.t))
                known = reps.get(g.m)
                if known is None:
                    reps[g.m] = g
                    queue.append(g)
                elif known.t != g.t:
                    missed = (g.t[0] - known.t[0], g.t[1] - known.t[1])
                    break
        if missed is None:
            break
        translations = translations.extended(mat_apply(m, missed) for m in linear)

    cosets = sorted(
        reps.values(), key=lambda g: (g.m != IDENTITY_MATRIX, -g.det, g.linear_order, g.m, g.t)
    )
    return translations, tuple(cosets)


def build_group(kind: GroupKind, params: Sequence[int]) -> WallpaperGroup:
    """
    Construct the wallpaper group of a kind from its placement parameters.

    p4: quarter turns about the origin and about (x, y). p4g: quarter turn about the origin
    and the mirror u = x. p3: third turns about the origin and (x, y). p31m: third turn about
    the origin and the mirror v = x. p6: sixth turn about the origin and third turn about (x, y).

    :raises ValueError: for p3m1, p4m, p6m or invalid parameters
    :raises RuntimeError: if the construction is internally inconsistent
    """
    if kind is GroupKind.P3M1:
        raise ValueError("p3m1 has no generating construction; see special_case_tiles")
    return _build_group(kind, validate_params(kind, params))


@lru_cache(maxsize=256)
def _build_group(kind: GroupKind, params: GroupParams) -> WallpaperGroup:
    n = fundamental_area(kind, params)
    generators, white = _generators(kind, params)
    lattice = kind.lattice

    probe = Cell(Orient.NONE if lattice is LatticeKind.SQUARE else Orient.UP, 0, 0)
    for g in generators:
        apply_to_cell(g, probe)

    translations, cosets = _close_group(generators)
    if len(cosets) != kind.point_group_size:
        raise RuntimeError(
            f"{kind.value}{params}: found {len(cosets)} cosets, expected {kind.point_group_size}"
        )
    if translations.area != len(cosets) * n * lattice.cell_area:
        raise RuntimeError(
            f"{kind.value}{params}: translation cell holds {translations.area // lattice.cell_area}"
            f" cells, expected {len(cosets) * n}"
        )
    return WallpaperGroup(
        kind=kind,
        params=params,
        lattice=lattice,
        generators=generators,
        translations=translations,
        cosets=cosets,
        black=(0, 0),
        white=white,
        n=n,
    )
