import unittest

from isotile.enumerator import (
    TileEnumerator,
    marked_triangle,
    params_for_size,
    special_case_tiles,
)
from isotile.model import EMPTINESS_NOTES, GroupKind, GroupParams, TileCollection


def enumerate_collection(kind: GroupKind, n: int, **kwargs) -> TileCollection:
    return TileEnumerator(**kwargs).transform(TileCollection(kind, n))


class TestTileEnumerator(unittest.TestCase):
    def test_sizes(self):
        expected = {
            GroupKind.P4: {1: 1, 2: 1, 4: 3, 5: 12},
            GroupKind.P4G: {1: 1, 4: 3},
            GroupKind.P3: {2: 1, 6: 4, 8: 7},
            GroupKind.P31M: {3: 1},
            GroupKind.P6: {1: 1, 3: 1, 4: 3, 7: 20},
        }
        for kind, counts in expected.items():
            for n, count in counts.items():
                with self.subTest(kind=kind.value, n=n):
                    self.assertEqual(len(enumerate_collection(kind, n)), count)

    def test_ids_and_params(self):
        collection = enumerate_collection(GroupKind.P4, 5)
        self.assertEqual(collection.get_tile_ids()[:3], ["5-1", "5-2", "5-3"])
        self.assertEqual(collection.params, [GroupParams(3, 1)])
        self.assertEqual(collection.meta["params"], [[3, 1]])
        self.assertTrue(all(tile.n == 5 for tile in collection.iter_tiles()))

    def test_params_override(self):
        collection = enumerate_collection(GroupKind.P4, 5, params=(1, 3))
        self.assertEqual(len(collection), 12)
        with self.assertRaises(ValueError):
            enumerate_collection(GroupKind.P4, 5, params=(1, 1))
        with self.assertRaises(ValueError):
            enumerate_collection(GroupKind.P4, 5, params=(1, 2))

    def test_inadmissible_size(self):
        with self.assertRaises(ValueError):
            enumerate_collection(GroupKind.P4, 3)
        with self.assertRaises(ValueError):
            enumerate_collection(GroupKind.P31M, 4)

    def test_deterministic(self):
        first = enumerate_collection(GroupKind.P6, 7).to_json()
        second = enumerate_collection(GroupKind.P6, 7, workers=2, split_depth=2).to_json()
        self.assertEqual(first, second)

    def test_special_kinds(self):
        for kind in (GroupKind.P4M, GroupKind.P6M):
            collection = enumerate_collection(kind, 4)
            self.assertEqual(len(collection), 0)
            self.assertEqual(collection.meta["note"], EMPTINESS_NOTES[kind])
        collection = enumerate_collection(GroupKind.P3M1, 9)
        self.assertEqual(len(collection), 1)
        self.assertTrue(collection.get_tile("9-1").marked_only)
        self.assertEqual(len(enumerate_collection(GroupKind.P3M1, 8)), 0)

    def test_summarize(self):
        enumerator = TileEnumerator()
        collection = enumerator.transform(TileCollection(GroupKind.P4, 4))
        df = enumerator.summarize(collection)
        self.assertEqual(list(df.index), ["4-1", "4-2", "4-3"])
        self.assertTrue((df["n"] == 4).all())


class TestSizes(unittest.TestCase):
    def test_params_for_size(self):
        self.assertEqual(params_for_size(GroupKind.P4, 25), [GroupParams(5, 5), GroupParams(7, 1)])
        self.assertEqual(params_for_size(GroupKind.P31M, 12), [GroupParams(2, 0)])
        with self.assertRaises(ValueError):
            params_for_size(GroupKind.P6, 2)


class TestSpecialCases(unittest.TestCase):
    def test_marked_triangle(self):
        tile = marked_triangle(3)
        self.assertEqual(tile.n, 9)
        self.assertEqual([c.point for c in tile.centers], [(0, 0), (0, 18), (18, 0)])
        self.assertTrue(all(c.order == 3 for c in tile.centers))
        self.assertEqual(len(tile.mirror_edges), 9)
        with self.assertRaises(ValueError):
            marked_triangle(0)

    def test_special_case_tiles(self):
        self.assertEqual(special_case_tiles(GroupKind.P4M, 4), [])
        self.assertEqual(special_case_tiles(GroupKind.P6M, 1), [])
        self.assertEqual(special_case_tiles(GroupKind.P3M1, 4), [marked_triangle(2)])
        self.assertEqual(special_case_tiles(GroupKind.P3M1, 5), [])
        with self.assertRaises(ValueError):
            special_case_tiles(GroupKind.P4, 4)
        with self.assertRaises(ValueError):
            special_case_tiles(GroupKind.P3M1, 0)


if __name__ == "__main__":
    unittest.main()
