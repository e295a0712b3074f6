from abc import ABC, abstractmethod
from typing import Any, Dict, Tuple

from .model import TileCollection


class Transformer(ABC):
    """
    Abstract base class for modules that take in a TileCollection and modify it and/or extend
    it with additional information, imitating the scikit-learn Transformer API. Exposes
    ``fit()`` and ``transform()`` methods. ``fit()`` performs any necessary precomputation
    while ``transform()`` does the work of actually computing the modification and applying it
    to the collection.

    All subclasses must implement ``transform()``; subclasses that require precomputation
    should also override ``fit()``, which by default does nothing. ``fit_transform()`` simply
    calls ``fit()`` followed by ``transform()`` on the same collection.
    """

    # constructor options that ``transform()`` accepts as per-call keyword overrides
    options: Tuple[str, ...] = ()

    def fit(self, collection: TileCollection, y=None, **kwargs):
        """Use the provided TileCollection to perform any precomputations necessary to
        later perform the actual transformation step.

        :param collection: the TileCollection to use for fitting

        :return: the fitted Transformer
        """
        return self

    @abstractmethod
    def transform(self, collection: TileCollection, **kwargs) -> TileCollection:
        """Modify the provided collection. This is an abstract method that must be
        implemented by any Transformer subclass

        :param collection: the TileCollection to transform

        :return: modified version of the input TileCollection. Note that unlike the
            scikit-learn equivalent, ``transform()`` operates inplace on the collection
            (though for convenience and compatibility with scikit-learn, it also
            returns the modified collection).
        """
        pass

    def fit_transform(self, collection: TileCollection, y=None, **kwargs) -> TileCollection:
        """Fit and run the Transformer on a single TileCollection.

        :param collection: the TileCollection to use

        :return: same as transform
        """
        self.fit(collection, y=y, **kwargs)
        return self.transform(collection, **kwargs)

    def summarize(self, collection: TileCollection, **kwargs):
        pass

    def _call_options(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        """
        Merge keyword overrides passed to ``transform()`` with the constructor options.

        :raises TypeError: for a keyword that is not one of ``options``
        """
        unknown = sorted(set(kwargs) - set(self.options))
        if unknown:
            raise TypeError(
                f"{type(self).__name__}.transform() got unexpected keyword arguments {unknown}"
            )
        return {name: kwargs.get(name, getattr(self, name)) for name in self.options}
