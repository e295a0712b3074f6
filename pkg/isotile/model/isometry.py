from functools import lru_cache
from typing import List, NamedTuple, Tuple

from .lattice import (
    Cell,
    LatticeKind,
    ScaledPoint,
    cell_at_centroid,
    cell_centroid,
    cell_vertices,
)

__all__ = [
    "Matrix",
    "Isometry",
    "IDENTITY",
    "IDENTITY_MATRIX",
    "mat_det",
    "mat_inverse",
    "translation",
    "fixing",
    "rotation_matrix",
    "rotation_about",
    "point_group",
    "matrix_closure",
    "mat_apply",
    "mat_mul",
    "apply_to_cell",
    "image_cell",
]

Matrix = Tuple[int, int, int, int]

IDENTITY_MATRIX: Matrix = (1, 0, 0, 1)

# quarter turn on the square lattice: u -> v, v -> -u
SQUARE_ROTATION: Matrix = (0, -1, 1, 0)
# sixth turn on the triangular lattice: u -> v, v -> v - u
TRIANGULAR_ROTATION: Matrix = (0, -1, 1, 1)
# exchanging u and v is a reflection on both lattices
SWAP: Matrix = (0, 1, 1, 0)


def mat_mul(m1: Matrix, m2: Matrix) -> Matrix:
    a, b, c, d = m1
    e, f, g, h = m2
    return a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h


def mat_apply(m: Matrix, p: ScaledPoint) -> ScaledPoint:
    a, b, c, d = m
    return a * p[0] + b * p[1], c * p[0] + d * p[1]


def mat_det(m: Matrix) -> int:
    return m[0] * m[3] - m[1] * m[2]


def mat_inverse(m: Matrix) -> Matrix:
    det = mat_det(m)
    if det not in (1, -1):
        raise ValueError(f"matrix {m} is not unimodular")
    a, b, c, d = m
    return det * d, -det * b, -det * c, det * a


def mat_power(m: Matrix, k: int) -> Matrix:
    result = IDENTITY_MATRIX
    for _ in range(k):
        result = mat_mul(m, result)
    return result


def mat_order(m: Matrix) -> int:
    """Order of a point-group matrix (at most 6 for lattice isometries)."""
    power = m
    for k in range(1, 13):
        if power == IDENTITY_MATRIX:
            return k
        power = mat_mul(m, power)
    raise ValueError(f"matrix {m} has no finite order")


class Isometry(NamedTuple):
    """
    An exact lattice isometry p -> m p + t, with m acting on (u, v) coordinates and t a
    translation in scaled coordinates.
    """

    m: Matrix
    t: ScaledPoint

    def apply(self, p: ScaledPoint) -> ScaledPoint:
        x, y = mat_apply(self.m, p)
        return x + self.t[0], y + self.t[1]

    def compose(self, other: "Isometry") -> "Isometry":
        """The isometry applying ``other`` first, then ``self``."""
        return Isometry(mat_mul(self.m, other.m), self.apply(other.t))

    def inverse(self) -> "Isometry":
        m_inv = mat_inverse(self.m)
        x, y = mat_apply(m_inv, self.t)
        return Isometry(m_inv, (-x, -y))

    @property
    def det(self) -> int:
        return mat_det(self.m)

    @property
    def is_proper(self) -> bool:
        return self.det == 1

    @property
    def is_translation(self) -> bool:
        return self.m == IDENTITY_MATRIX

    @property
    def linear_order(self) -> int:
        return mat_order(self.m)

    def __repr__(self):
        return f"Isometry(m={self.m}, t={self.t})"


IDENTITY = Isometry(IDENTITY_MATRIX, (0, 0))


def translation(d: ScaledPoint) -> Isometry:
    return Isometry(IDENTITY_MATRIX, tuple(d))


def fixing(m: Matrix, center: ScaledPoint) -> Isometry:
    """The isometry with linear part m that fixes ``center``."""
    x, y = mat_apply(m, center)
    return Isometry(m, (center[0] - x, center[1] - y))


def rotation_matrix(lattice: LatticeKind, order: int) -> Matrix:
    """Counterclockwise rotation by a 1/order turn."""
    if lattice is LatticeKind.SQUARE:
        if order not in (1, 2, 4):
            raise ValueError(f"the square lattice has no {order}-fold rotation")
        return mat_power(SQUARE_ROTATION, 4 // order)
    if order not in (1, 2, 3, 6):
        raise ValueError(f"the triangular lattice has no {order}-fold rotation")
    return mat_power(TRIANGULAR_ROTATION, 6 // order)


def rotation_about(center: ScaledPoint, lattice: LatticeKind, order: int) -> Isometry:
    return fixing(rotation_matrix(lattice, order), center)


@lru_cache(maxsize=None)
def point_group(lattice: LatticeKind) -> Tuple[Matrix, ...]:
    """
    The linear parts of all lattice isometries: rotations R^k followed by the
    reflections R^k S, 8 elements for the square lattice and 12 for the triangular one.
    """
    rot = SQUARE_ROTATION if lattice is LatticeKind.SQUARE else TRIANGULAR_ROTATION
    k = 4 if lattice is LatticeKind.SQUARE else 6
    rotations = [mat_power(rot, i) for i in range(k)]
    return tuple(rotations + [mat_mul(r, SWAP) for r in rotations])


def matrix_closure(mats: List[Matrix]) -> List[Matrix]:
    """The finite matrix group generated by ``mats``, sorted."""
    found = {IDENTITY_MATRIX}
    frontier = [IDENTITY_MATRIX]
    while frontier:
        cur = frontier.pop()
        for m in mats:
            nxt = mat_mul(m, cur)
            if nxt not in found:
                found.add(nxt)
                frontier.append(nxt)
    return sorted(found)


def apply_to_point_set(g: Isometry, points) -> List[ScaledPoint]:
    return [g.apply(p) for p in points]


def apply_to_cell(g: Isometry, c: Cell) -> Cell:
    """
    The image of a cell under an isometry, found by mapping the cell's vertices and
    identifying the unique cell with that vertex set.

    :raises RuntimeError: if the mapped vertices are not the vertices of a cell
    """
    image = apply_to_point_set(g, cell_vertices(c))
    count = len(image)
    centroid = (sum(p[0] for p in image), sum(p[1] for p in image))
    if centroid[0] % count or centroid[1] % count:
        raise RuntimeError(f"{g} does not map {c} onto a lattice cell")
    try:
        target = cell_at_centroid((centroid[0] // count, centroid[1] // count), c.lattice)
    except ValueError:
        raise RuntimeError(f"{g} does not map {c} onto a lattice cell")
    if set(cell_vertices(target)) != set(image):
        raise RuntimeError(f"{g} does not map {c} onto a lattice cell")
    return target


def image_cell(g: Isometry, c: Cell) -> Cell:
    """Fast variant of apply_to_cell for isometries known to preserve the lattice."""
    return cell_at_centroid(g.apply(cell_centroid(c)), c.lattice)
