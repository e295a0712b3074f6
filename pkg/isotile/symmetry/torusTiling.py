from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

from isotile.model import (
    Cell,
    Center,
    Isometry,
    LatticeKind,
    MarkedTile,
    ScaledPoint,
    TranslationLattice,
    WallpaperGroup,
    cell_centroid,
    cell_edges,
    cell_vertices,
    edge_midpoint,
    image_cell,
    is_vertex,
    mat_apply,
    point_group,
    translate_cell,
)
from isotile.util import notice

__all__ = [
    "TorusTiling",
    "SymmetryReport",
    "generate_torus_tiling",
    "is_tiling_symmetry",
    "tile_stabilizer",
    "symmetry_elements",
    "full_symmetry_group",
    "name_wallpaper_group",
    "marked_only_report",
    "classify_tile",
]

CopyId = Tuple[int, ScaledPoint]


@dataclass(frozen=True)
class TorusTiling:
    """
    The tiling generated by a tile, reduced modulo the translation lattice: every residue
    cell is assigned the coset index of the tile copy covering it and the translation
    placing that copy.
    """

    tile: MarkedTile
    group: WallpaperGroup
    cell_to_copy: Dict[Cell, int]
    copy_offsets: Dict[Cell, ScaledPoint]

    @property
    def lambda_basis(self) -> Tuple[ScaledPoint, ScaledPoint]:
        return self.group.lambda_basis

    def copy_of(self, c: Cell) -> CopyId:
        """
        The copy covering a plane cell, as (coset index i, translation t): the copy is the image
        of the tile under the coset representative i followed by translation by t.
        """
        residue, offset = self.group.cell_offset(c)
        mu = self.copy_offsets[residue]
        return self.cell_to_copy[residue], (mu[0] + offset[0], mu[1] + offset[1])

    def copy_cells(self, copy_id: CopyId) -> List[Cell]:
        index, shift = copy_id
        g = self.group.cosets[index]
        return sorted(translate_cell(image_cell(g, c), shift) for c in self.tile.cells)

    def copy_isometry(self, copy_id: CopyId) -> Isometry:
        index, shift = copy_id
        g = self.group.cosets[index]
        return Isometry(g.m, (g.t[0] + shift[0], g.t[1] + shift[1]))


class SymmetryReport(NamedTuple):
    """
    Full symmetry of the tiling generated by a tile.

    :param full_kind: wallpaper type of the full symmetry group G' of the unmarked tiling
    :param index: |G' : G|
    :param is_fundamental: the tile is a fundamental domain of G' (index 1)
    :param new_centers: points of the tile where G' has a higher rotation order than G
    :param has_reflection: G' contains a reflection
    """

    full_kind: str
    index: int
    is_fundamental: bool
    new_centers: Tuple[Center, ...]
    has_reflection: bool

    def to_json(self) -> dict:
        return {
            "full_kind": self.full_kind,
            "index": self.index,
            "is_fundamental": self.is_fundamental,
            "new_centers": [{"at": list(c.point), "order": c.order} for c in self.new_centers],
            "has_reflection": self.has_reflection,
        }


def generate_torus_tiling(
    tile: MarkedTile, group: Optional[WallpaperGroup] = None
) -> TorusTiling:
    """
    Assign every residue cell to exactly one copy of the tile.

    :param tile: a tile enumerated for ``group``
    :param group: the generating group; rebuilt from the tile when omitted
    :raises RuntimeError: if the copies do not partition the plane
    """
    if group is None:
        group = tile.group
    if tile.n != group.n:
        raise ValueError(f"{tile} has {tile.n} cells but the group needs {group.n}")
    cell_to_copy: Dict[Cell, int] = {}
    copy_offsets: Dict[Cell, ScaledPoint] = {}
    for i, g in enumerate(group.cosets):
        for c in tile.cells:
            residue, offset = group.cell_offset(image_cell(g, c))
            if residue in cell_to_copy:
                raise RuntimeError(f"{tile}: residue cell {residue} is covered twice")
            cell_to_copy[residue] = i
            copy_offsets[residue] = (-offset[0], -offset[1])
    expected = group.translations.area // group.lattice.cell_area
    if len(cell_to_copy) != expected:
        raise RuntimeError(f"{tile}: {expected - len(cell_to_copy)} residue cells are uncovered")
    return TorusTiling(tile, group, cell_to_copy, copy_offsets)


def _check_lattice_isometry(phi: Isometry, lattice: LatticeKind):
    if phi.m not in point_group(lattice) or not is_vertex(phi.t, lattice):
        raise ValueError(f"{phi} is not an isometry of the {lattice.value} lattice")


def is_tiling_symmetry(tt: TorusTiling, phi: Isometry) -> bool:
    """
    Whether a lattice isometry maps every tile of the tiling onto a tile. Copies are checked
    for one representative translation per class of the translation lattice modulo its largest
    square sublattice, which every lattice isometry preserves.

    :raises ValueError: if phi is not a lattice isometry
    """
    group = tt.group
    _check_lattice_isometry(phi, group.lattice)
    translations = group.translations
    shifts = translations.coset_vectors(translations.cubic_multiple())
    for g in group.cosets:
        base = [image_cell(g, c) for c in tt.tile.cells]
        for shift in shifts:
            target = None
            for c in base:
                copy_id = tt.copy_of(image_cell(phi, translate_cell(c, shift)))
                if target is None:
                    target = copy_id
                elif copy_id != target:
                    return False
    return True


def tile_stabilizer(tt: TorusTiling) -> List[Isometry]:
    """
    Lattice isometries that map the tile onto itself and preserve the tiling, identity first.
    """
    lattice = tt.group.lattice
    centroids = sorted(cell_centroid(c) for c in tt.tile.cells)
    anchor = centroids[0]
    target = set(centroids)
    found = []
    for m in point_group(lattice):
        moved = [mat_apply(m, p) for p in centroids]
        low = min(moved)
        t = (anchor[0] - low[0], anchor[1] - low[1])
        if not is_vertex(t, lattice):
            continue
        if {(x + t[0], y + t[1]) for x, y in moved} != target:
            continue
        phi = Isometry(m, t)
        if is_tiling_symmetry(tt, phi):
            found.append(phi)
    return found


def _reduced(phi: Isometry, translations: TranslationLattice) -> Isometry:
    return Isometry(phi.m, translations.reduce(phi.t))


def symmetry_elements(tt: TorusTiling, exhaustive: bool = False) -> List[Isometry]:
    """
    The full symmetry group G' of the tiling, one element per class modulo the translation
    lattice of G, sorted.

    By default G' is assembled as G times the tile stabilizer, since G acts simply transitively
    on the tiles. With ``exhaustive`` every lattice isometry modulo the translation lattice is
    tested instead.
    """
    group = tt.group
    translations = group.translations
    if not exhaustive:
        stabilizer = tile_stabilizer(tt)
        elements = {_reduced(g.compose(s), translations) for g in group.cosets for s in stabilizer}
        return sorted(elements)

    s = group.lattice.scale
    elements = []
    for m in point_group(group.lattice):
        for tx in range(0, translations.A, s):
            for ty in range(0, translations.D, s):
                phi = Isometry(m, (tx, ty))
                if is_tiling_symmetry(tt, phi):
                    elements.append(phi)
    return sorted(elements)


def _probe_points(translations: TranslationLattice, lattice: LatticeKind) -> List[ScaledPoint]:
    """Vertices, edge midpoints and cell centers in the residue domain of the lattice."""
    if lattice is LatticeKind.SQUARE:
        residues = None
    else:
        residues = {(0, 0), (3, 0), (0, 3), (3, 3), (2, 2), (4, 4)}
    points = []
    for px in range(translations.A):
        for py in range(translations.D):
            if residues is None or (px % 6, py % 6) in residues:
                points.append((px, py))
    return points


def _point_stabilizer(
    elements: List[Isometry], translations: TranslationLattice, p: ScaledPoint
) -> List[Isometry]:
    fixing = []
    for h in elements:
        q = h.apply(p)
        if translations.contains((p[0] - q[0], p[1] - q[1])):
            fixing.append(h)
    return fixing


def name_wallpaper_group(
    elements: List[Isometry], translations: TranslationLattice, lattice: LatticeKind
) -> Tuple[str, bool]:
    """
    Name the wallpaper type of a group given modulo a translation lattice, by probing every
    vertex, edge midpoint and cell center for rotations and mirrors: highest rotation order,
    presence of reflections, and whether 4-fold (3-fold) centers lie on mirrors.

    :return: (type name, whether the group has a reflection)
    """
    orders = []
    on_mirror = []
    for p in _probe_points(translations, lattice):
        stab = _point_stabilizer(elements, translations, p)
        orders.append(sum(1 for h in stab if h.is_proper))
        on_mirror.append(any(not h.is_proper for h in stab))
    top = max(orders)
    has_reflection = any(on_mirror)
    improper = any(not h.is_proper for h in elements)

    def centers_on_mirror(k):
        return [mirror for order, mirror in zip(orders, on_mirror) if order == k]

    if top == 6:
        return ("p6m" if has_reflection else "p6"), has_reflection
    if top == 4:
        if any(centers_on_mirror(4)):
            return "p4m", has_reflection
        return ("p4g" if has_reflection else "p4"), has_reflection
    if top == 3:
        if not has_reflection:
            return "p3", False
        return ("p3m1" if all(centers_on_mirror(3)) else "p31m"), True

    # 2- and 1-fold types cannot arise from the generating groups here
    if top == 2:
        if not improper:
            name = "p2"
        elif not has_reflection:
            name = "pgg"
        elif all(centers_on_mirror(2)):
            name = "pmm"
        elif any(centers_on_mirror(2)):
            name = "cmm"
        else:
            name = "pmg"
    elif not improper:
        name = "p1"
    else:
        # pm and cm are not told apart
        name = "pm" if has_reflection else "pg"
    notice(f"symmetry group classified as {name}, outside the 3-, 4- and 6-fold families")
    return name, has_reflection


def _tile_points(tile: MarkedTile) -> List[ScaledPoint]:
    points = set()
    for c in tile.cells:
        points.add(cell_centroid(c))
        points.update(cell_vertices(c))
        points.update(edge_midpoint(e) for e in cell_edges(c))
    return sorted(points)


def full_symmetry_group(tt: TorusTiling, exhaustive: bool = False) -> SymmetryReport:
    """
    Compute the full symmetry group G' of the unmarked tiling, its wallpaper type and its
    index over the generating group G. The tile is a fundamental domain of G' iff the index
    is 1, that is iff no symmetry of the tiling other than the identity fixes the tile.

    :param tt: torus tiling of the tile
    :param exhaustive: test every lattice isometry instead of only tile stabilizers
    """
    group = tt.group
    translations = group.translations
    elements = symmetry_elements(tt, exhaustive=exhaustive)
    if len(elements) % len(group.cosets):
        raise RuntimeError(
            f"{tt.tile}: {len(elements)} symmetries is not a multiple of {len(group.cosets)}"
        )
    index = len(elements) // len(group.cosets)
    if index == 1:
        return SymmetryReport(group.kind.value, 1, True, (), group.has_reflection)

    full_kind, has_reflection = name_wallpaper_group(elements, translations, group.lattice)
    new_centers = []
    for p in _tile_points(tt.tile):
        stab = _point_stabilizer(elements, translations, p)
        order = sum(1 for h in stab if h.is_proper)
        if order >= 2 and order > group.rotation_order_at(p):
            new_centers.append(Center(p, order))
    return SymmetryReport(full_kind, index, False, tuple(new_centers), has_reflection)


def marked_only_report(tile: MarkedTile) -> SymmetryReport:
    """
    Report for the marked-only p3m1 triangle: unmarked, its tiling is p6m with index 6 and
    gains a 3-fold center at the triangle's centroid. These values are derived from the
    triangle's geometry, not computed: no p3m1 group is ever built.
    """
    k = tile.params.x
    return SymmetryReport("p6m", 6, False, (Center((2 * k, 2 * k), 3),), True)


def classify_tile(tile: MarkedTile, exhaustive: bool = False) -> SymmetryReport:
    if tile.marked_only:
        return marked_only_report(tile)
    return full_symmetry_group(generate_torus_tiling(tile), exhaustive=exhaustive)
