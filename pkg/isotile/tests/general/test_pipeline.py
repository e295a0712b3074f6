import unittest

from isotile import IsoTilePipeline
from isotile.enumerator import TileEnumerator, marked_triangle
from isotile.model import GroupKind, TileCollection
from isotile.symmetry import CountRow, SymmetryClassifier, TileCounter


class TestPipeline(unittest.TestCase):
    def pipeline(self) -> IsoTilePipeline:
        return IsoTilePipeline(
            [
                ("enumerate", TileEnumerator()),
                ("classify", SymmetryClassifier()),
                ("count", TileCounter()),
            ]
        )

    def test_transform(self):
        collection = self.pipeline().transform(TileCollection(GroupKind.P4, 5))
        self.assertEqual(collection.meta["count_row"], CountRow(GroupKind.P4, 5, 12, 9, 8, 7))

    def test_step_params(self):
        pipeline = self.pipeline()
        steps = pipeline._parse_param_steps({"classify__exhaustive": True, "plain": 1})
        self.assertEqual(steps, {"classify": {"exhaustive": True}})

    def test_routed_step_params(self):
        pipeline = self.pipeline()
        collection = pipeline.transform(
            TileCollection(GroupKind.P4, 5),
            enumerate__workers=2,
            enumerate__split_depth=2,
            classify__exhaustive=True,
        )
        self.assertEqual(collection.meta["count_row"], CountRow(GroupKind.P4, 5, 12, 9, 8, 7))
        self.assertEqual(pipeline.named_steps["enumerate"].workers, 1)
        self.assertFalse(pipeline.named_steps["classify"].exhaustive)

    def test_routed_params_are_applied(self):
        with self.assertRaises(ValueError):
            self.pipeline().transform(TileCollection(GroupKind.P4, 5), enumerate__params=(1, 1))
        with self.assertRaises(ValueError):
            self.pipeline().transform(TileCollection(GroupKind.P4, 5), classify__workers=0)

    def test_unknown_step_param(self):
        with self.assertRaises(TypeError):
            self.pipeline().transform(TileCollection(GroupKind.P4, 5), count__workers=2)

    def test_transform_tile(self):
        pipeline = IsoTilePipeline(
            [("classify", SymmetryClassifier()), ("count", TileCounter())]
        )
        collection = pipeline.transform_tile(marked_triangle(3))
        self.assertEqual(collection.get_tile_ids(), ["9-1"])
        self.assertEqual(collection.meta["count_row"], CountRow(GroupKind.P3M1, 9, 1, 0, 1, 0))


if __name__ == "__main__":
    unittest.main()
