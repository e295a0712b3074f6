from typing import List

import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from isotile.model import MarkedTile, TileCollection
from isotile.transformer import Transformer
from .theorems import assert_theorems
from .torusTiling import SymmetryReport, classify_tile

__all__ = ["SymmetryClassifier"]


def _classify_all(tiles: List[MarkedTile], exhaustive: bool) -> List[SymmetryReport]:
    return [classify_tile(tile, exhaustive=exhaustive) for tile in tiles]


class SymmetryClassifier(Transformer):
    """
    Computes, for every tile of a collection, the full symmetry group of the tiling it
    generates when rotation centers are ignored, and whether the tile remains a fundamental
    domain of that larger group.

    Tile metadata written: "symmetry", a SymmetryReport. Collection metadata written:
    "theorem_checks", the passed structural checks, when ``check_theorems`` is set.

    :param check_theorems: run the structural checks for the group kind after classifying;
        a failed check raises AssertionError naming the tile
    :param exhaustive: test every lattice isometry of the torus instead of only the tile
        stabilizer; slower, used to cross-check
    :param workers: number of joblib workers; tiles are classified independently
    :param verbosity: frequency of status messages; 0 is silent

    Each option may also be passed to ``transform()`` to override it for that call.
    """

    options = ("check_theorems", "exhaustive", "workers", "verbosity")

    def __init__(
        self,
        check_theorems: bool = True,
        exhaustive: bool = False,
        workers: int = 1,
        verbosity: int = 0,
    ):
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        self.check_theorems = check_theorems
        self.exhaustive = exhaustive
        self.workers = workers
        self.verbosity = verbosity

    def _reports(
        self, tiles: List[MarkedTile], exhaustive: bool, workers: int, verbosity: int
    ) -> List[SymmetryReport]:
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        if workers == 1 or len(tiles) < 2:
            reports = []
            for idx, tile in enumerate(tqdm(tiles, disable=verbosity <= 0)):
                reports.append(classify_tile(tile, exhaustive=exhaustive))
                if verbosity > 0 and idx > 0 and idx % verbosity == 0:
                    print(f"{idx}/{len(tiles)} tiles classified")
            return reports
        chunks = [tiles[i :: workers] for i in range(workers)]
        parts = Parallel(n_jobs=workers)(
            delayed(_classify_all)(chunk, exhaustive) for chunk in chunks
        )
        reports = [None] * len(tiles)
        for i, part in enumerate(parts):
            reports[i :: workers] = part
        return reports

    def transform(self, collection: TileCollection, **kwargs) -> TileCollection:
        """
        Classify every tile of the collection.

        :param collection: a TileCollection filled by TileEnumerator
        :param kwargs: per-call overrides of the constructor options
        :return: the collection, with a "symmetry" report on every tile
        """
        tile_ids = collection.get_tile_ids()
        tiles = [collection.get_tile(tile_id) for tile_id in tile_ids]
        opts = self._call_options(kwargs)
        reports = self._reports(tiles, opts["exhaustive"], opts["workers"], opts["verbosity"])
        for tile_id, report in zip(tile_ids, reports):
            collection.get_tile_meta(tile_id)["symmetry"] = report

        if opts["check_theorems"]:
            checks = assert_theorems(collection.group_kind, list(zip(tile_ids, tiles, reports)))
            collection.meta["theorem_checks"] = [check.to_json() for check in checks]
            if opts["verbosity"] > 0:
                for check in checks:
                    print(f"{check.name}: {check.detail}")
        return collection

    def summarize(self, collection: TileCollection) -> pd.DataFrame:
        """
        :return: DataFrame indexed by tile id with the full type, index, fundamental-domain
            status, number of new centers and reflection flag of each tile's tiling
        """
        records = []
        for tile_id in collection.get_tile_ids():
            report = collection.get_tile_meta(tile_id).get("symmetry")
            if report is None:
                raise ValueError(f"tile {tile_id} has not been classified")
            records.append(
                {
                    "id": tile_id,
                    "full_kind": report.full_kind,
                    "index": report.index,
                    "is_fundamental": report.is_fundamental,
                    "new_centers": len(report.new_centers),
                    "has_reflection": report.has_reflection,
                }
            )
        columns = ["id", "full_kind", "index", "is_fundamental", "new_centers", "has_reflection"]
        if not records:
            return pd.DataFrame(columns=columns).set_index("id")
        return pd.DataFrame(records).set_index("id")
