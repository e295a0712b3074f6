from random import Random
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from isotile.model import (
    Cell,
    Center,
    MarkedTile,
    OrbitLabel,
    WallpaperGroup,
    boundary_edges,
    build_group,
    cell_vertices,
    cells_touching_point,
    edge_midpoint,
    edge_neighbors,
    is_simply_connected,
    is_vertex,
    signature,
)

__all__ = [
    "PartialTile",
    "TileSearch",
    "boundary_candidates",
    "is_complete",
    "enumerate_cell_sets",
    "enumerate_tiles",
    "attach_centers",
    "check_center_angles",
    "merge_tiles",
]

CellSet = Tuple[Cell, ...]


class PartialTile(NamedTuple):
    """
    Backtracking state: the cells chosen so far, their orbit labels, the untried candidate
    cells in order, every cell ever offered as a candidate, and the least number of further
    cells needed to reach the white center.
    """

    cells: CellSet
    used_labels: FrozenSet[OrbitLabel]
    frontier: CellSet
    seen: FrozenSet[Cell]
    reach: int


def boundary_candidates(cells: Iterable[Cell], group: WallpaperGroup) -> List[Cell]:
    """
    Cells that may extend a partial tile: edge-adjacent to it, not orbit-equivalent to any of
    its cells, and inside the mirror-bounded region for p4g and p31m. For an empty tile,
    the cells around the origin.

    :return: sorted list of cells
    """
    cells = set(cells)
    if not cells:
        around = cells_touching_point(group.black, group.lattice)
        return sorted(c for c in around if group.in_region(c))
    used = {group.orbit_label(c) for c in cells}
    found = set()
    for c in cells:
        for nb in edge_neighbors(c):
            if nb in cells or nb in found:
                continue
            if group.in_region(nb) and group.orbit_label(nb) not in used:
                found.add(nb)
    return sorted(found)


def is_complete(cells: Sequence[Cell], group: WallpaperGroup) -> bool:
    """
    True iff the tile has n cells and, for p3, p4 and p6, the white center is one of its
    vertices. For p4g and p31m the region constraint already places the corner centers on the
    boundary, so only the size is checked.
    """
    if len(cells) != group.n:
        return False
    if group.uses_region:
        return True
    return any(group.white in cell_vertices(c) for c in cells)


class TileSearch:
    """
    Depth-first construction of all n-cell tiles with one cell per orbit, driven by an
    explicit stack of PartialTiles. Each connected cell set is produced at most once: a
    candidate that is passed over stays in ``seen`` and is never offered again below that
    branch.

    :param group: the generating group
    :param rng: optional random generator; when given, newly exposed candidates are shuffled
        instead of kept in cell order
    """

    def __init__(self, group: WallpaperGroup, rng: Optional[Random] = None):
        self.group = group
        self.n = group.n
        self.rng = rng
        self._distance = {} if group.uses_region else self._distance_map()

    def _distance_map(self) -> Dict[Cell, int]:
        """Edge-steps from each nearby cell to the nearest cell touching the white center."""
        start = cells_touching_point(self.group.white, self.group.lattice)
        dist = {c: 0 for c in start}
        layer = list(start)
        for d in range(1, self.n):
            next_layer = []
            for c in layer:
                for nb in edge_neighbors(c):
                    if nb not in dist:
                        dist[nb] = d
                        next_layer.append(nb)
            layer = next_layer
        return dist

    def distance(self, c: Cell) -> int:
        if self.group.uses_region:
            return 0
        return self._distance.get(c, self.n)

    def root(self) -> PartialTile:
        start = boundary_candidates((), self.group)
        if self.rng is not None:
            self.rng.shuffle(start)
        return PartialTile((), frozenset(), tuple(start), frozenset(start), self.n)

    def extend(self, frame: PartialTile, e: Cell, rest: CellSet) -> Optional[PartialTile]:
        """
        Add candidate ``e`` to a partial tile. Returns None when the result cannot be completed.
        """
        group = self.group
        label = group.orbit_label(e)
        cells = frame.cells + (e,)
        reach = min(frame.reach, self.distance(e))
        if reach > self.n - len(cells):
            return None
        used = frame.used_labels | {label}
        if frame.cells:
            untried = [c for c in rest if group.orbit_label(c) != label]
            seen = set(frame.seen)
        else:
            # later roots may rejoin only once they are edge-adjacent to the tile
            untried = []
            seen = set(frame.seen) - set(rest)
        fresh = []
        for nb in edge_neighbors(e):
            if nb in seen:
                continue
            seen.add(nb)
            if group.in_region(nb) and group.orbit_label(nb) not in used:
                fresh.append(nb)
        if self.rng is not None:
            self.rng.shuffle(fresh)
            untried.extend(fresh)
        else:
            untried = sorted(untried + fresh)
        return PartialTile(cells, frozenset(used), tuple(untried), frozenset(seen), reach)

    def drain(
        self, stack: List[PartialTile], split_depth: Optional[int] = None
    ) -> Tuple[List[CellSet], List[PartialTile]]:
        """
        Run the search from the given frames.

        :param stack: frames to expand; consumed
        :param split_depth: when set, frames reaching this many cells are returned unexpanded
        :return: completed cell sets (sorted tuples) and the unexpanded frames
        """
        completed: List[CellSet] = []
        pending: List[PartialTile] = []
        while stack:
            frame = stack.pop()
            if not frame.frontier:
                continue
            e, rest = frame.frontier[0], frame.frontier[1:]
            stack.append(frame._replace(frontier=rest))
            child = self.extend(frame, e, rest)
            if child is None:
                continue
            if len(child.cells) == self.n:
                if is_complete(child.cells, self.group):
                    completed.append(tuple(sorted(child.cells)))
                continue
            if split_depth is not None and len(child.cells) >= split_depth:
                pending.append(child)
                continue
            stack.append(child)
        return completed, pending


def _search_frames(kind, params, frames: List[PartialTile]) -> List[CellSet]:
    search = TileSearch(build_group(kind, params))
    completed, _ = search.drain(list(frames))
    return completed


def enumerate_cell_sets(
    group: WallpaperGroup,
    workers: int = 1,
    split_depth: int = 3,
    rng: Optional[Random] = None,
) -> List[CellSet]:
    """
    All completed cell sets for a group, sorted. With several workers the search tree is cut
    at ``split_depth`` and the frames at that depth are dealt round-robin to joblib workers.
    """
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    search = TileSearch(group, rng=rng)
    if workers == 1:
        completed, _ = search.drain([search.root()])
        return sorted(completed)

    completed, pending = search.drain([search.root()], split_depth=split_depth)
    chunks = [pending[i::workers] for i in range(workers)]
    results = Parallel(n_jobs=workers)(
        delayed(_search_frames)(group.kind, group.params, chunk) for chunk in chunks if chunk
    )
    for part in results:
        completed.extend(part)
    return sorted(completed)


def attach_centers(cells: Iterable[Cell], group: WallpaperGroup) -> MarkedTile:
    """
    Mark a completed tile with every rotation center of the group on its boundary (vertices
    and edge midpoints), and for reflection groups the boundary edges lying on mirrors.
    """
    cells = tuple(sorted(cells))
    edges = boundary_edges(cells)
    points = set()
    for edge in edges:
        points.update(edge)
        points.add(edge_midpoint(edge))
    centers = []
    for p in sorted(points):
        order = group.rotation_order_at(p)
        if order >= 2:
            centers.append(Center(p, order))
    mirror_edges = tuple(group.mirror_edges(cells)) if group.has_reflection else ()
    return MarkedTile(cells, tuple(centers), group.kind, group.params, mirror_edges)


def check_center_angles(tile: MarkedTile, group: WallpaperGroup) -> List[str]:
    """
    Check the angle rule at rotation centers on lattice vertices: summed over the points of
    one center orbit on the tile, the number of tile cells meeting those points equals the
    number of cells around a vertex divided by the order of the point's stabilizer. So a
    4-fold center sits at a single square corner and a 6-fold one at a single triangle corner.

    :return: human-readable violations, empty when the tile passes
    """
    lattice = group.lattice
    cell_set = set(tile.cells)
    classes: List[List[Center]] = []
    for center in tile.centers:
        if not is_vertex(center.point, lattice):
            continue
        for members in classes:
            if group.same_orbit(members[0].point, center.point):
                members.append(center)
                break
        else:
            classes.append([center])

    violations = []
    for members in classes:
        touching = sum(
            sum(1 for c in cells_touching_point(m.point, lattice) if c in cell_set) for m in members
        )
        expected = lattice.cells_per_vertex // len(group.stabilizer(members[0].point))
        if touching != expected:
            points = [m.point for m in members]
            order = members[0].order
            violations.append(
                f"{order}-fold centers {points} meet {touching} cells, expected {expected}"
            )
    return violations


def merge_tiles(tile_lists: Iterable[Iterable[MarkedTile]]) -> List[MarkedTile]:
    """
    Union of tile lists without repeated signatures. The representative kept for a signature
    is the one with the least (cells, params); output is ordered by signature.
    """
    best: Dict[tuple, MarkedTile] = {}
    for tiles in tile_lists:
        for tile in tiles:
            sig = signature(tile)
            kept = best.get(sig)
            if kept is None or (tile.cells, tile.params) < (kept.cells, kept.params):
                best[sig] = tile
    return [best[sig] for sig in sorted(best)]


def enumerate_tiles(
    group: WallpaperGroup,
    workers: int = 1,
    split_depth: int = 3,
    rng: Optional[Random] = None,
) -> List[MarkedTile]:
    """
    The complete, duplicate-free set of n-cell marked tiles that are fundamental domains of
    ``group``, ordered by signature.

    :param group: a built p3, p31m, p4, p4g or p6 group
    :param workers: number of parallel workers
    :param split_depth: depth at which the search tree is split between workers
    :param rng: optional random generator shuffling candidate order
    :raises RuntimeError: if a produced tile is not a topological disk or breaks the angle rule
    """
    tiles = []
    for cells in enumerate_cell_sets(group, workers=workers, split_depth=split_depth, rng=rng):
        if not is_simply_connected(cells):
            raise RuntimeError(
                f"{group.kind.value}{group.params}: tile {list(cells)} is not a disk"
            )
        tile = attach_centers(cells, group)
        problems = check_center_angles(tile, group)
        if problems:
            raise RuntimeError(f"{tile}: {'; '.join(problems)}")
        tiles.append(tile)
    return merge_tiles([tiles])

