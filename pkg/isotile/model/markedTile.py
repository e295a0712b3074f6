from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Tuple

from .isometry import mat_apply, point_group
from .lattice import (
    Cell,
    Edge,
    LatticeKind,
    Orient,
    ScaledPoint,
    boundary_edges,
    cell_centroid,
)
from .wallpaperGroup import GroupKind, GroupParams, build_group

__all__ = ["Center", "MarkedTile", "TileSignature", "signature", "shape_signature"]

CellForm = Tuple[ScaledPoint, ...]
CenterForm = Tuple[Tuple[int, int, int], ...]
TileSignature = Tuple[CellForm, CenterForm]


class Center(NamedTuple):
    """A rotation center on a tile boundary: scaled point and rotation order."""

    point: ScaledPoint
    order: int


@dataclass(frozen=True)
class MarkedTile:
    """
    An edge-connected, simply connected set of n cells together with the rotation centers
    of its generating group that lie on its boundary.

    :param cells: the cells, sorted
    :param centers: boundary rotation centers with their orders, sorted
    :param group_kind: kind of the generating group
    :param params: placement parameters of the generating group
    :param mirror_edges: boundary edges lying on reflection axes (p4g, p31m, p3m1)
    :param marked_only: True when the tile is a fundamental domain only while marked
    """

    cells: Tuple[Cell, ...]
    centers: Tuple[Center, ...]
    group_kind: GroupKind
    params: GroupParams
    mirror_edges: Tuple[Edge, ...] = ()
    marked_only: bool = False

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def lattice(self) -> LatticeKind:
        return self.group_kind.lattice

    @property
    def group(self):
        """The generating WallpaperGroup."""
        return build_group(self.group_kind, self.params)

    def to_json(self) -> dict:
        """The tile exchange format, with a stable field order and integers only."""
        cells = []
        for c in self.cells:
            if c.orient == Orient.NONE:
                cells.append([c.a, c.b])
            else:
                cells.append([c.a, c.b, "U" if c.orient == Orient.UP else "D"])
        data = {
            "group": self.group_kind.value,
            "params": [self.params.x, self.params.y],
            "n": self.n,
            "cells": cells,
            "centers": [{"at": [c.point[0], c.point[1]], "order": c.order} for c in self.centers],
            "scale": self.lattice.scale,
        }
        if self.marked_only:
            data["marked_only"] = True
        return data

    @classmethod
    def from_json(cls, data: dict) -> "MarkedTile":
        kind = GroupKind.parse(data["group"])
        params = GroupParams(*data["params"])
        if data.get("scale", kind.lattice.scale) != kind.lattice.scale:
            raise ValueError(f"scale {data['scale']} does not match the {kind.value} lattice")
        cells = []
        for entry in data["cells"]:
            if len(entry) == 2:
                cells.append(Cell(Orient.NONE, entry[0], entry[1]))
            elif entry[2] in ("U", "D"):
                orient = Orient.UP if entry[2] == "U" else Orient.DOWN
                cells.append(Cell(orient, entry[0], entry[1]))
            else:
                raise ValueError(f"unknown cell orientation {entry[2]!r}")
        if len(cells) != data.get("n", len(cells)):
            raise ValueError(f"tile lists {len(cells)} cells but declares n = {data['n']}")
        centers = tuple(
            sorted(Center((c["at"][0], c["at"][1]), c["order"]) for c in data["centers"])
        )
        marked_only = bool(data.get("marked_only", False))
        cells = tuple(sorted(cells))
        if kind.buildable and build_group(kind, params).has_reflection:
            mirror_edges = tuple(build_group(kind, params).mirror_edges(cells))
        elif marked_only:
            mirror_edges = tuple(boundary_edges(cells))
        else:
            mirror_edges = ()
        return cls(cells, centers, kind, params, mirror_edges, marked_only)

    def __str__(self):
        kind = f"{self.group_kind.value}{self.params}"
        return f"MarkedTile({kind}, n={self.n}, cells={list(self.cells)})"


def _translation_to_canonical(p: ScaledPoint, lattice: LatticeKind) -> ScaledPoint:
    """The lattice vector moving the centroid p to the base cell at the origin."""
    if lattice is LatticeKind.SQUARE:
        return p[0] - 1, p[1] - 1
    return 6 * (p[0] // 6), 6 * (p[1] // 6)


def _oriented_forms(
    cells: Iterable[Cell], centers: Iterable[Center], lattice: LatticeKind
) -> List[TileSignature]:
    centroids = [cell_centroid(c) for c in cells]
    centers = list(centers)
    forms = []
    for m in point_group(lattice):
        moved = [mat_apply(m, p) for p in centroids]
        dx, dy = _translation_to_canonical(min(moved), lattice)
        cell_form = tuple(sorted((x - dx, y - dy) for x, y in moved))
        center_form = []
        for center in centers:
            x, y = mat_apply(m, center.point)
            center_form.append((center.order, x - dx, y - dy))
        forms.append((cell_form, tuple(sorted(center_form))))
    return forms


def signature(tile: MarkedTile) -> TileSignature:
    """
    Canonical form of a marked tile under lattice rotations, reflections and translations.
    Two tiles share a signature iff they are congruent (mirror images included) with their
    rotation centers of each order matching as sets.
    """
    return min(_oriented_forms(tile.cells, tile.centers, tile.lattice))


def shape_signature(cells: Iterable[Cell]) -> CellForm:
    """Canonical form of a cell set under lattice isometries, ignoring rotation centers."""
    cells = list(cells)
    if not cells:
        raise ValueError("cannot take the signature of an empty cell set")
    return min(form for form, _ in _oriented_forms(cells, (), cells[0].lattice))
