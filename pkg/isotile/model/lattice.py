from collections import Counter
from enum import Enum, IntEnum
from typing import Dict, Iterable, List, NamedTuple, Set, Tuple

import numpy as np

__all__ = [
    "ScaledPoint",
    "Edge",
    "LatticeKind",
    "Orient",
    "Cell",
    "square",
    "up",
    "down",
    "cell_vertices",
    "cell_centroid",
    "cell_at_centroid",
    "translate_cell",
    "edge_neighbors",
    "is_vertex",
    "cells_touching_point",
    "cell_edges",
    "edge_midpoint",
    "is_edge_connected",
    "boundary_edges",
    "boundary_cycle",
    "is_simply_connected",
    "to_cartesian",
]

ScaledPoint = Tuple[int, int]
Edge = Tuple[ScaledPoint, ScaledPoint]


class LatticeKind(Enum):
    """
    The two lattices tiles are built on. Square uses orthonormal basis vectors u, v;
    Triangular uses unit vectors u, v at 60 degrees.
    """

    SQUARE = "square"
    TRIANGULAR = "triangular"

    @property
    def scale(self) -> int:
        """Factor making every vertex, edge midpoint and cell center integral in (u, v)."""
        return 2 if self is LatticeKind.SQUARE else 6

    @property
    def cells_per_vertex(self) -> int:
        return 4 if self is LatticeKind.SQUARE else 6

    @property
    def cell_area(self) -> int:
        """Area of one cell measured in scaled coordinate units."""
        return 4 if self is LatticeKind.SQUARE else 18


class Orient(IntEnum):
    NONE = 0
    UP = 1
    DOWN = 2


class Cell(NamedTuple):
    """
    A unit square (orient NONE) or unit triangle (orient UP/DOWN) of a lattice.
    Square (a, b) has corners (a, b), (a+1, b), (a+1, b+1), (a, b+1) in (u, v) coordinates;
    Up (a, b) has vertices (a, b), (a+1, b), (a, b+1); Down (a, b) has vertices (a+1, b),
    (a+1, b+1), (a, b+1). Tuple order gives the (orient, a, b) cell ordering used everywhere.
    """

    orient: Orient
    a: int
    b: int

    @property
    def lattice(self) -> LatticeKind:
        return LatticeKind.SQUARE if self.orient == Orient.NONE else LatticeKind.TRIANGULAR

    def __repr__(self):
        if self.orient == Orient.NONE:
            return f"Square({self.a},{self.b})"
        return f"{'Up' if self.orient == Orient.UP else 'Down'}({self.a},{self.b})"


def square(a: int, b: int) -> Cell:
    return Cell(Orient.NONE, a, b)


def up(a: int, b: int) -> Cell:
    return Cell(Orient.UP, a, b)


def down(a: int, b: int) -> Cell:
    return Cell(Orient.DOWN, a, b)


def cell_vertices(c: Cell) -> List[ScaledPoint]:
    """
    Corner points of a cell in counterclockwise order, in scaled coordinates.

    :param c: the cell
    :return: 4 points for a square, 3 for a triangle
    """
    a, b = c.a, c.b
    if c.orient == Orient.NONE:
        return [(2 * a, 2 * b), (2 * a + 2, 2 * b), (2 * a + 2, 2 * b + 2), (2 * a, 2 * b + 2)]
    if c.orient == Orient.UP:
        return [(6 * a, 6 * b), (6 * a + 6, 6 * b), (6 * a, 6 * b + 6)]
    return [(6 * a + 6, 6 * b), (6 * a + 6, 6 * b + 6), (6 * a, 6 * b + 6)]


def cell_centroid(c: Cell) -> ScaledPoint:
    if c.orient == Orient.NONE:
        return 2 * c.a + 1, 2 * c.b + 1
    if c.orient == Orient.UP:
        return 6 * c.a + 2, 6 * c.b + 2
    return 6 * c.a + 4, 6 * c.b + 4


def cell_at_centroid(p: ScaledPoint, lattice: LatticeKind) -> Cell:
    """
    Inverse of cell_centroid.

    :raises ValueError: if p is not the centroid of a cell of the given lattice
    """
    px, py = p
    if lattice is LatticeKind.SQUARE:
        if px % 2 == 1 and py % 2 == 1:
            return Cell(Orient.NONE, (px - 1) // 2, (py - 1) // 2)
    else:
        rx, ry = px % 6, py % 6
        if rx == 2 and ry == 2:
            return Cell(Orient.UP, (px - 2) // 6, (py - 2) // 6)
        if rx == 4 and ry == 4:
            return Cell(Orient.DOWN, (px - 4) // 6, (py - 4) // 6)
    raise ValueError(f"{p} is not a cell centroid of the {lattice.value} lattice")


def translate_cell(c: Cell, d: ScaledPoint) -> Cell:
    """Shift a cell by a lattice vector given in scaled coordinates."""
    s = c.lattice.scale
    if d[0] % s or d[1] % s:
        raise ValueError(f"{d} is not a lattice vector of the {c.lattice.value} lattice")
    return Cell(c.orient, c.a + d[0] // s, c.b + d[1] // s)


def edge_neighbors(c: Cell) -> List[Cell]:
    """
    Cells sharing a full edge with c: 4 for a square, 3 for a triangle.
    """
    a, b = c.a, c.b
    if c.orient == Orient.NONE:
        return [square(a + 1, b), square(a - 1, b), square(a, b + 1), square(a, b - 1)]
    if c.orient == Orient.UP:
        return [down(a, b), down(a - 1, b), down(a, b - 1)]
    return [up(a, b), up(a + 1, b), up(a, b + 1)]


def is_vertex(p: ScaledPoint, lattice: LatticeKind) -> bool:
    s = lattice.scale
    return p[0] % s == 0 and p[1] % s == 0


def cells_touching_point(p: ScaledPoint, lattice: LatticeKind) -> List[Cell]:
    """
    All cells having p as a vertex.

    :param p: a lattice vertex in scaled coordinates
    :param lattice: the lattice
    :return: the 4 squares or 6 triangles around p
    :raises ValueError: if p is not a lattice vertex
    """
    if not is_vertex(p, lattice):
        raise ValueError(f"{p} is not a vertex of the {lattice.value} lattice")
    i, j = p[0] // lattice.scale, p[1] // lattice.scale
    if lattice is LatticeKind.SQUARE:
        return [square(i, j), square(i - 1, j), square(i, j - 1), square(i - 1, j - 1)]
    return [
        up(i, j),
        up(i - 1, j),
        up(i, j - 1),
        down(i - 1, j - 1),
        down(i - 1, j),
        down(i, j - 1),
    ]


def cell_edges(c: Cell) -> List[Edge]:
    """Directed edges of a cell following its counterclockwise vertex order."""
    vs = cell_vertices(c)
    return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]


def edge_midpoint(e: Edge) -> ScaledPoint:
    (x0, y0), (x1, y1) = e
    return (x0 + x1) // 2, (y0 + y1) // 2


def is_edge_connected(cells: Iterable[Cell]) -> bool:
    cell_set = set(cells)
    if not cell_set:
        return False
    start = min(cell_set)
    reached = {start}
    frontier = [start]
    while frontier:
        c = frontier.pop()
        for nb in edge_neighbors(c):
            if nb in cell_set and nb not in reached:
                reached.add(nb)
                frontier.append(nb)
    return len(reached) == len(cell_set)


def boundary_edges(cells: Iterable[Cell]) -> List[Edge]:
    """
    Directed edges lying on the boundary of the union of cells, oriented so the union is on
    their left. Output is sorted.
    """
    directed = set()
    for c in cells:
        directed.update(cell_edges(c))
    return sorted(e for e in directed if (e[1], e[0]) not in directed)


def boundary_cycle(cells: Iterable[Cell]) -> List[ScaledPoint]:
    """
    The outline of a simply connected cell set as a counterclockwise list of vertices,
    starting from the least vertex.

    :raises ValueError: if the boundary is not a single cycle
    """
    edges = boundary_edges(cells)
    successor: Dict[ScaledPoint, ScaledPoint] = {}
    for p, q in edges:
        if p in successor:
            raise ValueError("boundary pinches at a vertex")
        successor[p] = q
    start = min(successor)
    cycle = [start]
    current = successor[start]
    while current != start:
        cycle.append(current)
        current = successor[current]
    if len(cycle) != len(edges):
        raise ValueError("boundary consists of more than one cycle")
    return cycle


def is_simply_connected(cells: Iterable[Cell]) -> bool:
    """
    True iff the union of the closed cells is homeomorphic to a disk: no holes and no
    pinch points. Checks V - E + F = 1 on the cell complex together with the boundary being
    a single cycle.

    :param cells: a nonempty, edge-connected set of cells
    :raises ValueError: on empty or disconnected input
    """
    cell_set = set(cells)
    if not cell_set:
        raise ValueError("cannot test connectivity of an empty cell set")
    if not is_edge_connected(cell_set):
        raise ValueError("cell set is not edge-connected")

    vertices: Set[ScaledPoint] = set()
    undirected: Set[Edge] = set()
    for c in cell_set:
        vertices.update(cell_vertices(c))
        for p, q in cell_edges(c):
            undirected.add((min(p, q), max(p, q)))
    if len(vertices) - len(undirected) + len(cell_set) != 1:
        return False

    edges = boundary_edges(cell_set)
    degree = Counter()
    for p, q in edges:
        degree[p] += 1
        degree[q] += 1
    if any(d != 2 for d in degree.values()):
        return False
    try:
        boundary_cycle(cell_set)
    except ValueError:
        return False
    return True


def to_cartesian(points, lattice: LatticeKind):
    """
    Convert scaled (u, v) points to Cartesian coordinates in lattice units.

    :param points: sequence of scaled points
    :return: numpy array of shape (len(points), 2)
    """
    if lattice is LatticeKind.SQUARE:
        basis = np.array([[1.0, 0.0], [0.0, 1.0]])
    else:
        basis = np.array([[1.0, 0.5], [0.0, np.sqrt(3.0) / 2.0]])
    arr = np.asarray(points, dtype=float).reshape(-1, 2) / lattice.scale
    return arr @ basis.T
