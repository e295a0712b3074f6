from sklearn.pipeline import Pipeline

from isotile.model import MarkedTile, TileCollection


class IsoTilePipeline(Pipeline):
    """
    A pipeline of transformers over a TileCollection. Builds on and inherits functionality
    from scikit-learn's Pipeline class; keyword arguments of the form ``step__param`` are
    routed to the named step's ``transform()``, which takes them as per-call overrides of its
    constructor options.

    :param steps: a list of (name, transformer) tuples in the order that they are to be called.
    """

    def __init__(self, steps):
        Pipeline.__init__(self, steps)

    def _parse_param_steps(self, params):
        params_steps = {}
        for pname, pval in params.items():
            if "__" not in pname:
                continue
            step, param = pname.split("__", 1)
            if step in params_steps:
                params_steps[step][param] = pval
            else:
                params_steps[step] = {param: pval}
        return params_steps

    def transform(self, collection: TileCollection, **params) -> TileCollection:
        params_steps = self._parse_param_steps(params)
        for name, transform in self.steps:
            if name in params_steps:
                collection = transform.transform(collection, **params_steps[name])
            else:
                collection = transform.transform(collection)
        return collection

    def transform_tile(self, tile: MarkedTile, **params) -> TileCollection:
        """
        Runs the pipeline on a collection holding a single tile, as for a tile loaded from
        the exchange format.

        :param tile: the tile to process
        :return: the one-tile collection, with the steps' metadata.
        """
        collection = TileCollection(tile.group_kind, tile.n, params=[tile.params], tiles=[tile])
        return self.transform(collection, **params)
