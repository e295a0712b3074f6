from typing import List, NamedTuple, Sequence

import pandas as pd

from isotile.model import (
    GroupKind,
    MarkedTile,
    TileCollection,
    admissible_sizes,
    shape_signature,
)
from isotile.enumerator import SPECIAL_KINDS, TileEnumerator
from isotile.transformer import Transformer
from .symmetryClassifier import SymmetryClassifier
from .torusTiling import SymmetryReport

__all__ = ["CountRow", "TileCounter", "count_from_reports", "count_row", "count_rows"]


class CountRow(NamedTuple):
    """
    Tile counts for one group kind and size.

    :param N: tiles, up to congruence of marked tiles
    :param S: tiles that are fundamental domains of their tiling's full symmetry group
    :param Nprime: congruence classes of the tile shapes, ignoring centers
    :param Sprime: congruence classes of the shapes counted in S
    """

    group: GroupKind
    n: int
    N: int
    S: int
    Nprime: int
    Sprime: int

    def to_json(self) -> dict:
        return {
            "group": self.group.value,
            "n": self.n,
            "N": self.N,
            "S": self.S,
            "Nprime": self.Nprime,
            "Sprime": self.Sprime,
        }


def count_from_reports(
    kind: GroupKind, n: int, tiles: Sequence[MarkedTile], reports: Sequence[SymmetryReport]
) -> CountRow:
    """
    Reduce classified tiles to a CountRow. Shapes are compared under the full lattice point
    group, so mirror images count as congruent.
    """
    if len(tiles) != len(reports):
        raise ValueError(f"{len(tiles)} tiles but {len(reports)} reports")
    shapes = set()
    fundamental_shapes = set()
    fundamental = 0
    for tile, report in zip(tiles, reports):
        shape = shape_signature(tile.cells)
        shapes.add(shape)
        if report.is_fundamental:
            fundamental += 1
            fundamental_shapes.add(shape)
    return CountRow(kind, n, len(tiles), fundamental, len(shapes), len(fundamental_shapes))


class TileCounter(Transformer):
    """
    Computes the CountRow of a classified collection and stores it in the collection
    metadata under "count_row".
    """

    def transform(self, collection: TileCollection, **kwargs) -> TileCollection:
        self._call_options(kwargs)
        tile_ids = collection.get_tile_ids()
        reports = []
        for tile_id in tile_ids:
            report = collection.get_tile_meta(tile_id).get("symmetry")
            if report is None:
                raise ValueError(
                    f"tile {tile_id} has not been classified; run SymmetryClassifier first"
                )
            reports.append(report)
        tiles = [collection.get_tile(tile_id) for tile_id in tile_ids]
        collection.meta["count_row"] = count_from_reports(
            collection.group_kind, collection.n, tiles, reports
        )
        return collection

    def summarize(self, collection: TileCollection) -> pd.DataFrame:
        row = collection.meta["count_row"]
        return pd.DataFrame([row.to_json()])


def count_row(
    kind: GroupKind,
    n: int,
    workers: int = 1,
    split_depth: int = 3,
    verbosity: int = 0,
) -> CountRow:
    """
    Enumerate, classify and count the tiles of one size, merging every parameter choice
    that realizes n.

    :raises ValueError: if n is not admissible for a searchable kind
    :raises AssertionError: if a structural check fails on the classified tiles
    """
    collection = TileCollection(kind, n)
    TileEnumerator(workers=workers, split_depth=split_depth, verbosity=verbosity).transform(
        collection
    )
    SymmetryClassifier(workers=workers, verbosity=verbosity).transform(collection)
    TileCounter().transform(collection)
    return collection.meta["count_row"]


def count_rows(
    kind: GroupKind,
    max_n: int,
    workers: int = 1,
    split_depth: int = 3,
    verbosity: int = 0,
) -> List[CountRow]:
    """
    CountRows for every n up to max_n that the kind's table lists: all n for p4m and p6m
    (all zero) and for p3m1 (nonzero at perfect squares), the admissible sizes otherwise.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    if kind in SPECIAL_KINDS:
        sizes = range(1, max_n + 1)
    else:
        sizes = [size.n for size in admissible_sizes(kind, max_n)]
    return [
        count_row(kind, n, workers=workers, split_depth=split_depth, verbosity=verbosity)
        for n in sizes
    ]
