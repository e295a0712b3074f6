from typing import List, NamedTuple, Sequence, Tuple

from isotile.model import (
    EMPTY_KINDS,
    GroupKind,
    MarkedTile,
    shape_signature,
    square,
)
from .torusTiling import SymmetryReport

__all__ = ["TheoremCheck", "ClassifiedTile", "assert_theorems"]

ClassifiedTile = Tuple[str, MarkedTile, SymmetryReport]


class TheoremCheck(NamedTuple):
    """Outcome of one structural check over a classified run."""

    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return self._asdict()


def _square_shape(k: int):
    return shape_signature([square(a, b) for a in range(k) for b in range(k)])


def _check_stabilizer_index(results: Sequence[ClassifiedTile]) -> TheoremCheck:
    for tile_id, tile, report in results:
        if report.is_fundamental != (report.index == 1):
            return TheoremCheck(
                "stabilizer_index",
                False,
                f"tile {tile_id} {tile}: is_fundamental={report.is_fundamental} "
                f"but index={report.index}",
            )
    return TheoremCheck("stabilizer_index", True, f"{len(results)} reports consistent")


def _check_p4g_square_only(results: Sequence[ClassifiedTile]) -> TheoremCheck:
    """Only the x by x square generates a p4g tiling with extra symmetry, and it is p4m."""
    flagged = 0
    for tile_id, tile, report in results:
        is_square = shape_signature(tile.cells) == _square_shape(tile.params.x)
        if is_square != (report.index > 1):
            return TheoremCheck(
                "p4g_square_only",
                False,
                f"tile {tile_id} {tile}: index {report.index} for a "
                f"{'square' if is_square else 'non-square'} tile",
            )
        if is_square:
            flagged += 1
            if report.full_kind != "p4m":
                return TheoremCheck(
                    "p4g_square_only",
                    False,
                    f"tile {tile_id} {tile}: square tiling classified {report.full_kind}",
                )
    return TheoremCheck("p4g_square_only", True, f"{flagged} of {len(results)} tiles flagged")


def _check_p31m_fundamental(results: Sequence[ClassifiedTile]) -> TheoremCheck:
    for tile_id, tile, report in results:
        if report.index != 1:
            return TheoremCheck(
                "p31m_always_fundamental",
                False,
                f"tile {tile_id} {tile}: {report.full_kind} with index {report.index}",
            )
    return TheoremCheck("p31m_always_fundamental", True, f"{len(results)} tiles, all index 1")


def _check_empty(kind: GroupKind, results: Sequence[ClassifiedTile]) -> TheoremCheck:
    name = f"{kind.value}_empty"
    if results:
        tile_id, tile, _ = results[0]
        return TheoremCheck(name, False, f"tile {tile_id} {tile} exists")
    return TheoremCheck(name, True, "no tiles")


def _check_p3m1_marked_only(results: Sequence[ClassifiedTile]) -> TheoremCheck:
    if len(results) > 1:
        return TheoremCheck("p3m1_marked_only", False, f"{len(results)} tiles, expected at most 1")
    for tile_id, tile, report in results:
        if not tile.marked_only or report.is_fundamental:
            return TheoremCheck(
                "p3m1_marked_only", False, f"tile {tile_id} {tile} is not a marked-only tile"
            )
    return TheoremCheck("p3m1_marked_only", True, f"{len(results)} marked-only tiles")


def assert_theorems(kind: GroupKind, results: Sequence[ClassifiedTile]) -> List[TheoremCheck]:
    """
    Run the structural checks that apply to a group kind over its classified tiles:

    * every report: index 1 exactly when the tile is a fundamental domain of the full group
    * p4g: index above 1 only for the x by x square, whose tiling is p4m
    * p31m: every tile is a fundamental domain of its tiling's full group
    * p4m, p6m: no tiles
    * p3m1: at most one tile, marked-only

    :param kind: the generating group kind of the run
    :param results: (tile id, tile, report) triples
    :return: the passed checks
    :raises AssertionError: naming the counterexample tile when a check fails
    """
    results = list(results)
    checks = [_check_stabilizer_index(results)]
    if kind is GroupKind.P4G:
        checks.append(_check_p4g_square_only(results))
    elif kind is GroupKind.P31M:
        checks.append(_check_p31m_fundamental(results))
    elif kind in EMPTY_KINDS:
        checks.append(_check_empty(kind, results))
    elif kind is GroupKind.P3M1:
        checks.append(_check_p3m1_marked_only(results))

    for check in checks:
        if not check.passed:
            raise AssertionError(f"{kind.value}: check {check.name} failed: {check.detail}")
    return checks
