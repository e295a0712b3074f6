import json
import os
from typing import Callable, Dict, Generator, Iterable, List, Optional

import pandas as pd

from isotile.util import warn
from .markedTile import MarkedTile
from .wallpaperGroup import GroupKind, GroupParams


class TileCollection:
    """
    The set of tiles for one group kind and size n, together with per-tile and
    collection-level metadata. Transformers read from and write to a TileCollection.

    Tiles are labelled "n-k", with k counting from 1 in insertion order.

    :param group_kind: kind of the generating group
    :param n: number of cells per tile
    :param params: the placement parameters the tiles were generated from
    :param tiles: optional initial tiles
    :param meta: optional collection-level metadata
    """

    def __init__(
        self,
        group_kind: GroupKind,
        n: int,
        params: Optional[List[GroupParams]] = None,
        tiles: Optional[Iterable[MarkedTile]] = None,
        meta: Optional[dict] = None,
    ):
        if n < 1:
            raise ValueError(f"tile size must be at least 1, got {n}")
        self.group_kind = group_kind
        self.n = n
        self.params = list(params) if params is not None else []
        self.tiles: Dict[str, MarkedTile] = {}
        self.tile_meta: Dict[str, dict] = {}
        self.meta = meta if meta is not None else {}
        if tiles is not None:
            self.add_tiles(tiles)

    def __len__(self):
        return len(self.tiles)

    def __repr__(self):
        return f"TileCollection({self.group_kind.value}, n={self.n}, {len(self)} tiles)"

    def add_tiles(self, tiles: Iterable[MarkedTile]) -> List[str]:
        """
        Append tiles, labelling them "n-k" after the ones already present.

        :return: the new tile ids
        """
        new_ids = []
        for tile in tiles:
            if tile.group_kind is not self.group_kind or tile.n != self.n:
                raise ValueError(
                    f"cannot add a {tile.group_kind.value} {tile.n}-cell tile to {self!r}"
                )
            tile_id = f"{self.n}-{len(self.tiles) + 1}"
            self.tiles[tile_id] = tile
            self.tile_meta[tile_id] = {}
            new_ids.append(tile_id)
        return new_ids

    def set_tiles(self, tiles: Iterable[MarkedTile]) -> List[str]:
        """Replace all tiles (and their metadata) with ``tiles``."""
        self.tiles = {}
        self.tile_meta = {}
        return self.add_tiles(tiles)

    def get_tile(self, tile_id: str) -> MarkedTile:
        """
        Gets the tile with the given id

        :param tile_id: id such as "5-2"
        :return: MarkedTile
        """
        return self.tiles[tile_id]

    def get_tile_meta(self, tile_id: str) -> dict:
        return self.tile_meta[tile_id]

    def get_tile_ids(
        self, selector: Optional[Callable[[MarkedTile], bool]] = lambda tile: True
    ) -> List[str]:
        return [tile_id for tile_id, tile in self.tiles.items() if selector(tile)]

    def iter_tiles(
        self, selector: Optional[Callable[[MarkedTile], bool]] = lambda tile: True
    ) -> Generator[MarkedTile, None, None]:
        """
        Get tiles in the collection, with an optional selector that filters for tiles that should
        be included.

        :param selector: a (lambda) function that takes a MarkedTile and returns True or False
            (i.e. include / exclude). By default, the selector includes all tiles.
        :return: a generator of MarkedTiles
        """
        for tile in self.tiles.values():
            if selector(tile):
                yield tile

    def get_tiles_dataframe(
        self,
        selector: Optional[Callable[[MarkedTile], bool]] = lambda tile: True,
        exclude_meta: bool = False,
    ) -> pd.DataFrame:
        """
        Get a DataFrame of the tiles with their fields and metadata attributes. Edits to the
        DataFrame do not change the collection.

        :param selector: filter on tiles, includes all tiles by default
        :param exclude_meta: whether to exclude metadata
        :return: a pandas DataFrame indexed by tile id
        """
        records = []
        for tile_id, tile in self.tiles.items():
            if not selector(tile):
                continue
            record = {
                "id": tile_id,
                "group": tile.group_kind.value,
                "params": str(tile.params),
                "n": tile.n,
                "num_centers": len(tile.centers),
                "marked_only": tile.marked_only,
            }
            if not exclude_meta:
                for key, value in self.tile_meta[tile_id].items():
                    record[f"meta.{key}"] = value
            records.append(record)
        columns = ["id", "group", "params", "n", "num_centers", "marked_only"]
        if not records:
            return pd.DataFrame(columns=columns).set_index("id")
        return pd.DataFrame(records).set_index("id")

    def to_json(self) -> List[dict]:
        return [tile.to_json() for tile in self.tiles.values()]

    def dump(self, filename: str) -> None:
        """
        Write the tiles in the exchange format, as a JSON list in id order.

        :param filename: output path; parent directories are created
        """
        dir_name = os.path.dirname(filename)
        if dir_name:
            os.makedirs(dir_name, exist_ok=True)
        with open(filename, "w") as f:
            json.dump(self.to_json(), f, indent=2)
            f.write("\n")

    @classmethod
    def load(cls, filename: str) -> "TileCollection":
        """
        Read tiles written by ``dump``. All tiles must share a group kind and size.

        :raises ValueError: on mixed or empty files
        """
        with open(filename, "r") as f:
            data = json.load(f)
        tiles = [MarkedTile.from_json(entry) for entry in data]
        if not tiles:
            raise ValueError(f"{filename} holds no tiles; group and size cannot be recovered")
        kind, n = tiles[0].group_kind, tiles[0].n
        if any(t.group_kind is not kind or t.n != n for t in tiles):
            raise ValueError(f"{filename} mixes tiles of different groups or sizes")
        params = sorted({t.params for t in tiles})
        if len(params) > 1:
            warn(f"{filename} merges tiles from {len(params)} parameter choices")
        return cls(kind, n, params=params, tiles=tiles)
