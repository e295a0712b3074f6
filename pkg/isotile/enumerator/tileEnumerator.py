from random import Random
from typing import List, Optional, Sequence

import pandas as pd
from tqdm import tqdm

from isotile.model import (
    EMPTINESS_NOTES,
    GroupKind,
    GroupParams,
    TileCollection,
    admissible_sizes,
    build_group,
    fundamental_area,
    validate_params,
)
from isotile.transformer import Transformer
from .specialCases import SPECIAL_KINDS, special_case_tiles
from .tileSearch import enumerate_tiles, merge_tiles

__all__ = ["TileEnumerator", "params_for_size"]


def params_for_size(kind: GroupKind, n: int) -> List[GroupParams]:
    """
    Every parameter choice realizing tile size n for a searchable kind.

    :raises ValueError: if n is not admissible for the kind
    """
    for size in admissible_sizes(kind, n):
        if size.n == n:
            return size.params
    raise ValueError(f"n={n} is not an admissible tile size for {kind.value}")


class TileEnumerator(Transformer):
    """
    Fills a TileCollection with every n-cell marked tile that is a fundamental domain of an
    isohedral tiling generated by the collection's group kind. When several parameter choices
    realize n, each is searched and the results are merged by signature, unless ``params``
    pins one of them.

    Collection metadata written: "params" (the searched parameter choices) and, for p3m1, p4m
    and p6m, "note" explaining the special case.

    :param params: optional placement parameter override
    :param workers: number of parallel search workers
    :param split_depth: depth at which the search tree is split between workers
    :param rng: optional random generator shuffling candidate order
    :param verbosity: frequency of status messages; 0 is silent

    Each option may also be passed to ``transform()`` to override it for that call.
    """

    options = ("params", "workers", "split_depth", "rng", "verbosity")

    def __init__(
        self,
        params: Optional[Sequence[int]] = None,
        workers: int = 1,
        split_depth: int = 3,
        rng: Optional[Random] = None,
        verbosity: int = 0,
    ):
        self.params = params
        self.workers = workers
        self.split_depth = split_depth
        self.rng = rng
        self.verbosity = verbosity

    def _resolve_params(
        self, kind: GroupKind, n: int, params: Optional[Sequence[int]]
    ) -> List[GroupParams]:
        if params is None:
            return params_for_size(kind, n)
        params = validate_params(kind, params)
        area = fundamental_area(kind, params)
        if area != n:
            raise ValueError(
                f"{kind.value}{params} generates {area}-cell tiles, not {n}-cell tiles"
            )
        return [params]

    def transform(self, collection: TileCollection, **kwargs) -> TileCollection:
        """
        Enumerate the tiles of the collection's kind and size, replacing any tiles present.

        :param collection: the TileCollection to fill
        :param kwargs: per-call overrides of the constructor options
        :return: the collection, labelled "n-k" in signature order
        """
        kind, n = collection.group_kind, collection.n
        opts = self._call_options(kwargs)
        verbosity = opts["verbosity"]
        if kind in SPECIAL_KINDS:
            tiles = special_case_tiles(kind, n)
            collection.params = sorted({t.params for t in tiles})
            collection.meta["note"] = EMPTINESS_NOTES[kind]
            collection.set_tiles(tiles)
            if verbosity > 0:
                print(f"{kind.value} n={n}: {len(tiles)} tiles ({EMPTINESS_NOTES[kind]})")
            return collection

        params_list = self._resolve_params(kind, n, opts["params"])
        runs = []
        for params in tqdm(params_list, disable=verbosity <= 0, desc=f"{kind.value} n={n}"):
            group = build_group(kind, params)
            tiles = enumerate_tiles(
                group,
                workers=opts["workers"],
                split_depth=opts["split_depth"],
                rng=opts["rng"],
            )
            if verbosity > 0:
                print(f"{kind.value}{params}: {len(tiles)} tiles")
            runs.append(tiles)
        collection.params = list(params_list)
        collection.meta["params"] = [[p.x, p.y] for p in params_list]
        collection.set_tiles(merge_tiles(runs))
        return collection

    def summarize(self, collection: TileCollection) -> pd.DataFrame:
        """
        :return: DataFrame of the collection's tiles, one row per tile id
        """
        return collection.get_tiles_dataframe(exclude_meta=True)
