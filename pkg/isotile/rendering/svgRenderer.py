import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from matplotlib import colormaps
from matplotlib.colors import to_hex

from isotile.model import (
    Center,
    Edge,
    LatticeKind,
    MarkedTile,
    ScaledPoint,
    boundary_cycle,
    to_cartesian,
)
from isotile.symmetry import SymmetryReport, TorusTiling
from isotile.util import tile_caption

__all__ = ["RenderStyle", "render_tile_svg", "render_tiling_svg", "default_palette"]

SVG_NS = "http://www.w3.org/2000/svg"


def default_palette(name: str = "tab10") -> List[str]:
    """Hex fill colors of a qualitative matplotlib colormap."""
    return [to_hex(c) for c in colormaps[name].colors]


@dataclass(frozen=True)
class RenderStyle:
    """
    Drawing options shared by tile and tiling renderings.

    :param cell_px: pixels per lattice unit; at least 4
    :param palette: fill colors, indexed by copy id modulo the palette size
    :param show_centers: draw rotation centers
    :param show_axes: draw mirror edges
    :param patch_radius: translation-lattice cells per side of a tiling patch; at least 1
    """

    cell_px: int = 24
    palette: Tuple[str, ...] = field(default_factory=lambda: tuple(default_palette()))
    show_centers: bool = True
    show_axes: bool = False
    patch_radius: int = 2

    def __post_init__(self):
        if not isinstance(self.cell_px, int) or self.cell_px < 4:
            raise ValueError(f"cell_px must be an integer of at least 4, got {self.cell_px}")
        if not isinstance(self.patch_radius, int) or self.patch_radius < 1:
            raise ValueError(
                f"patch_radius must be an integer of at least 1, got {self.patch_radius}"
            )
        if not self.palette:
            raise ValueError("palette must hold at least one color")
        object.__setattr__(self, "palette", tuple(self.palette))


def _fmt(v: float) -> str:
    text = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


class _Canvas:
    """Maps scaled lattice points to SVG pixels, y pointing up, with a one-unit margin."""

    def __init__(self, points: Sequence[ScaledPoint], lattice: LatticeKind, cell_px: int):
        self.lattice = lattice
        self.cell_px = cell_px
        xy = to_cartesian(points, lattice)
        self.low = xy.min(axis=0) - 1.0
        high = xy.max(axis=0) + 1.0
        self.width, self.height = (high - self.low) * cell_px
        self.root = ET.Element(
            "svg",
            xmlns=SVG_NS,
            version="1.1",
            width=_fmt(self.width),
            height=_fmt(self.height),
            viewBox=f"0 0 {_fmt(self.width)} {_fmt(self.height)}",
        )

    def pixels(self, points: Sequence[ScaledPoint]) -> np.ndarray:
        xy = (to_cartesian(points, self.lattice) - self.low) * self.cell_px
        xy[:, 1] = self.height - xy[:, 1]
        return xy

    def polygon(self, parent, points: Sequence[ScaledPoint], fill: str, stroke_width: float):
        px = self.pixels(points)
        d = "M" + " L".join(f"{_fmt(x)} {_fmt(y)}" for x, y in px) + " Z"
        return ET.SubElement(
            parent,
            "path",
            d=d,
            fill=fill,
            stroke="black",
            **{"stroke-width": _fmt(stroke_width), "stroke-linejoin": "round"},
        )

    def line(self, parent, edge: Edge, color: str):
        (x1, y1), (x2, y2) = self.pixels(list(edge))
        return ET.SubElement(
            parent,
            "line",
            x1=_fmt(x1),
            y1=_fmt(y1),
            x2=_fmt(x2),
            y2=_fmt(y2),
            stroke=color,
            **{"stroke-width": "2", "stroke-dasharray": "4 3"},
        )

    def circle(self, parent, p: ScaledPoint, radius: float, fill: str, stroke: str = "black"):
        ((x, y),) = self.pixels([p])
        return ET.SubElement(
            parent,
            "circle",
            cx=_fmt(x),
            cy=_fmt(y),
            r=_fmt(radius),
            fill=fill,
            stroke=stroke,
            **{"stroke-width": "1"},
        )

    def text(self, content: str):
        node = ET.SubElement(
            self.root,
            "text",
            x=_fmt(self.width / 2),
            y=_fmt(self.height - 4),
            **{"text-anchor": "middle", "font-family": "sans-serif", "font-size": "12"},
        )
        node.text = content
        return node

    def to_string(self) -> str:
        ET.indent(self.root)
        return ET.tostring(self.root, encoding="unicode") + "\n"


def _center_roles(tile: MarkedTile) -> List[str]:
    """
    Glyph role of each center: "primary" for the black (origin) orbit, "secondary" for the
    white one, "derived" for the rest. Every corner of a marked-only tile is primary.
    """
    if tile.marked_only:
        return ["primary"] * len(tile.centers)
    group = tile.group
    roles = []
    for center in tile.centers:
        if group.same_orbit(center.point, group.black):
            roles.append("primary")
        elif group.same_orbit(center.point, group.white):
            roles.append("secondary")
        else:
            roles.append("derived")
    return roles


def _draw_center(canvas: _Canvas, parent, p: ScaledPoint, order: int, role: str):
    r = canvas.cell_px / 6
    if role == "primary":
        canvas.circle(parent, p, r, "black")
    elif role == "secondary":
        canvas.circle(parent, p, r, "white")
    else:
        canvas.circle(parent, p, r * (0.6 if order == 2 else 0.8), "gray", stroke="gray")


def _draw_new_center(canvas: _Canvas, parent, center: Center):
    canvas.circle(parent, center.point, canvas.cell_px / 4, "none", stroke="red")


def render_tile_svg(
    tile: MarkedTile,
    style: Optional[RenderStyle] = None,
    tile_id: Optional[str] = None,
    report: Optional[SymmetryReport] = None,
) -> str:
    """
    Draw one tile: its outline as a single closed path, its rotation centers (black disc for
    the origin orbit, open circle for the second placed center, small gray discs for the
    others) and, when ``tile_id`` is given, a caption that is parenthesized if the report
    shows the tiling has more symmetry than its generating group.

    :return: SVG 1.1 text, identical for identical inputs
    """
    style = style or RenderStyle()
    outline = boundary_cycle(tile.cells)
    canvas = _Canvas(outline, tile.lattice, style.cell_px)
    shapes = ET.SubElement(canvas.root, "g", id="tile")
    canvas.polygon(shapes, outline, style.palette[0], 2)

    if style.show_axes and tile.mirror_edges:
        axes = ET.SubElement(canvas.root, "g", id="axes")
        for edge in tile.mirror_edges:
            canvas.line(axes, edge, "blue")
    if style.show_centers:
        marks = ET.SubElement(canvas.root, "g", id="centers")
        for center, role in zip(tile.centers, _center_roles(tile)):
            _draw_center(canvas, marks, center.point, center.order, role)
        if report is not None:
            for center in report.new_centers:
                _draw_new_center(canvas, marks, center)
    if tile_id is not None:
        is_fundamental = report.is_fundamental if report is not None else True
        canvas.text(tile_caption(tile_id, is_fundamental))
    return canvas.to_string()


def render_tiling_svg(
    tt: TorusTiling,
    style: Optional[RenderStyle] = None,
    report: Optional[SymmetryReport] = None,
) -> str:
    """
    Draw a patch of the tiling: every copy of the tile whose coset translation falls in
    patch_radius by patch_radius translation-lattice cells, filled by coset index. Centers
    and mirror edges are carried to each copy; the report's new centers are circled in red.

    :return: SVG 1.1 text, identical for identical inputs
    """
    style = style or RenderStyle()
    tile = tt.tile
    (ax, ay), (bx, by) = tt.lambda_basis
    roles = _center_roles(tile)

    copies = []
    for i in range(style.patch_radius):
        for j in range(style.patch_radius):
            shift = (i * ax + j * bx, i * ay + j * by)
            for k in range(len(tt.group.cosets)):
                copies.append((k, shift))

    outlines = []
    for copy_id in copies:
        phi = tt.copy_isometry(copy_id)
        outlines.append([phi.apply(p) for p in boundary_cycle(tile.cells)])
    canvas = _Canvas([p for outline in outlines for p in outline], tile.lattice, style.cell_px)

    shapes = ET.SubElement(canvas.root, "g", id="tiles")
    for (k, _), outline in zip(copies, outlines):
        canvas.polygon(shapes, outline, style.palette[k % len(style.palette)], 1)

    if style.show_axes and tile.mirror_edges:
        axes = ET.SubElement(canvas.root, "g", id="axes")
        for copy_id in copies:
            phi = tt.copy_isometry(copy_id)
            for p, q in tile.mirror_edges:
                canvas.line(axes, (phi.apply(p), phi.apply(q)), "blue")
    if style.show_centers:
        marks = ET.SubElement(canvas.root, "g", id="centers")
        drawn = set()
        for copy_id in copies:
            phi = tt.copy_isometry(copy_id)
            for center, role in zip(tile.centers, roles):
                p = phi.apply(center.point)
                if p not in drawn:
                    drawn.add(p)
                    _draw_center(canvas, marks, p, center.order, role)
            if report is not None:
                for center in report.new_centers:
                    _draw_new_center(canvas, marks, Center(phi.apply(center.point), center.order))
    return canvas.to_string()
