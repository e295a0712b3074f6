from math import isqrt
from typing import List

from isotile.model import (
    Center,
    GroupKind,
    GroupParams,
    MarkedTile,
    boundary_edges,
    down,
    up,
)

__all__ = ["SPECIAL_KINDS", "marked_triangle", "special_case_tiles"]

SPECIAL_KINDS = (GroupKind.P3M1, GroupKind.P4M, GroupKind.P6M)


def marked_triangle(k: int) -> MarkedTile:
    """
    The equilateral triangle of side k made of k^2 unit triangles, with corners at the origin,
    k u and k v. Its edges lie on the three mirrors of a p3m1 group and its corners are 3-fold
    centers; it is a fundamental domain of that group only when marked.
    """
    if k < 1:
        raise ValueError(f"triangle side must be at least 1, got {k}")
    cells = [up(a, b) for a in range(k) for b in range(k - a)]
    cells += [down(a, b) for a in range(k - 1) for b in range(k - 1 - a)]
    cells = tuple(sorted(cells))
    corners = [(0, 0), (6 * k, 0), (0, 6 * k)]
    centers = tuple(sorted(Center(p, 3) for p in corners))
    return MarkedTile(
        cells,
        centers,
        GroupKind.P3M1,
        GroupParams(k, 0),
        mirror_edges=tuple(boundary_edges(cells)),
        marked_only=True,
    )


def special_case_tiles(kind: GroupKind, n: int) -> List[MarkedTile]:
    """
    Tiles for the groups without a generating construction: none for p4m and p6m at any n;
    for p3m1 the single marked-only triangle when n is a perfect square.

    :raises ValueError: for other kinds or n < 1
    """
    if kind not in SPECIAL_KINDS:
        raise ValueError(f"{kind.value} is enumerated by search, not as a special case")
    if n < 1:
        raise ValueError(f"tile size must be at least 1, got {n}")
    if kind is not GroupKind.P3M1:
        return []
    k = isqrt(n)
    if k * k != n:
        return []
    return [marked_triangle(k)]
