import unittest
from random import Random

from isotile.enumerator import (
    attach_centers,
    boundary_candidates,
    check_center_angles,
    enumerate_cell_sets,
    enumerate_tiles,
    is_complete,
    merge_tiles,
)
from isotile.model import (
    Center,
    GroupKind,
    LatticeKind,
    MarkedTile,
    apply_to_cell,
    build_group,
    is_edge_connected,
    is_simply_connected,
    rotation_about,
    square,
)
from isotile.tests.test_utils import oracle_signatures, tile_signatures

ORACLE_CASES = [
    (GroupKind.P4, (1, 1)),
    (GroupKind.P4, (2, 0)),
    (GroupKind.P4, (2, 2)),
    (GroupKind.P4, (3, 1)),
    (GroupKind.P3, (1, 0)),
    (GroupKind.P3, (1, 1)),
    (GroupKind.P3, (2, 0)),
    (GroupKind.P6, (1, 0)),
    (GroupKind.P6, (1, 1)),
    (GroupKind.P6, (2, 0)),
]


class TestTileSearch(unittest.TestCase):
    def test_counts(self):
        expected = {
            (GroupKind.P4, (1, 1)): 1,
            (GroupKind.P4, (2, 0)): 1,
            (GroupKind.P4, (2, 2)): 3,
            (GroupKind.P4, (3, 1)): 12,
            (GroupKind.P4G, (1,)): 1,
            (GroupKind.P4G, (2,)): 3,
            (GroupKind.P3, (1, 0)): 1,
            (GroupKind.P3, (2, 0)): 7,
            (GroupKind.P31M, (1,)): 1,
            (GroupKind.P6, (1, 0)): 1,
            (GroupKind.P6, (1, 1)): 1,
            (GroupKind.P6, (2, 0)): 3,
            (GroupKind.P6, (2, 1)): 20,
        }
        for (kind, params), count in expected.items():
            with self.subTest(kind=kind.value, params=params):
                self.assertEqual(len(enumerate_tiles(build_group(kind, params))), count)

    def test_matches_brute_force(self):
        for kind, params in ORACLE_CASES:
            with self.subTest(kind=kind.value, params=params):
                group = build_group(kind, params)
                self.assertEqual(
                    tile_signatures(enumerate_tiles(group)), oracle_signatures(group)
                )

    def test_region_kinds_match_brute_force(self):
        for kind, params in [(GroupKind.P4G, (2,)), (GroupKind.P31M, (1,))]:
            group = build_group(kind, params)
            self.assertEqual(tile_signatures(enumerate_tiles(group)), oracle_signatures(group))

    def test_cell_sets_are_edge_connected(self):
        cases = [
            (GroupKind.P3, (1, 0)),
            (GroupKind.P3, (1, 1)),
            (GroupKind.P3, (2, 0)),
            (GroupKind.P31M, (1,)),
            (GroupKind.P31M, (2,)),
        ]
        for kind, params in cases:
            with self.subTest(kind=kind.value, params=params):
                group = build_group(kind, params)
                for cells in enumerate_cell_sets(group):
                    self.assertTrue(is_edge_connected(cells), cells)

    def test_p3_pair_is_the_adjacent_one(self):
        group = build_group(GroupKind.P3, (1, 0))
        (tile,) = enumerate_tiles(group)
        self.assertEqual(len(tile.cells), 2)
        self.assertTrue(is_edge_connected(tile.cells))

    def test_workers_agree(self):
        group = build_group(GroupKind.P4, (3, 1))
        serial = enumerate_tiles(group)
        parallel = enumerate_tiles(group, workers=2, split_depth=2)
        self.assertEqual(parallel, serial)

    def test_candidate_order_does_not_matter(self):
        group = build_group(GroupKind.P6, (2, 1))
        self.assertEqual(enumerate_tiles(group, rng=Random(7)), enumerate_tiles(group))

    def test_tiles_are_disks_obeying_angle_rule(self):
        for kind, params in [(GroupKind.P6, (2, 1)), (GroupKind.P4G, (3,)), (GroupKind.P3, (2, 0))]:
            group = build_group(kind, params)
            for tile in enumerate_tiles(group):
                self.assertTrue(is_simply_connected(tile.cells))
                self.assertEqual(check_center_angles(tile, group), [])
                labels = {group.orbit_label(c) for c in tile.cells}
                self.assertEqual(len(labels), group.n)

    def test_angle_rule_violation(self):
        group = build_group(GroupKind.P4, (2, 0))
        cells = [square(0, 0), square(-1, 0)]
        bad = MarkedTile(
            tuple(sorted(cells)), (Center((0, 0), 4),), group.kind, group.params
        )
        self.assertEqual(len(check_center_angles(bad, group)), 1)

    def test_invalid_workers(self):
        with self.assertRaises(ValueError):
            enumerate_tiles(build_group(GroupKind.P4, (1, 1)), workers=0)


class TestHelpers(unittest.TestCase):
    def test_boundary_candidates(self):
        group = build_group(GroupKind.P4, (2, 0))
        self.assertEqual(
            boundary_candidates((), group),
            sorted([square(0, 0), square(-1, 0), square(0, -1), square(-1, -1)]),
        )
        candidates = boundary_candidates([square(0, 0)], group)
        self.assertIn(square(1, 0), candidates)
        self.assertNotIn(square(0, 0), candidates)
        self.assertNotIn(square(-1, 0), candidates)

    def test_region_candidates(self):
        group = build_group(GroupKind.P4G, (1,))
        start = boundary_candidates((), group)
        self.assertEqual(len(start), 4)
        self.assertEqual(len({group.orbit_label(c) for c in start}), 1)
        self.assertEqual(boundary_candidates([square(0, 0)], group), [])

    def test_is_complete(self):
        group = build_group(GroupKind.P4, (2, 0))
        self.assertTrue(is_complete([square(0, 0), square(1, 0)], group))
        self.assertFalse(is_complete([square(0, 0), square(0, 1)], group))
        self.assertFalse(is_complete([square(1, 0)], group))

    def test_attach_centers_marks_mirrors(self):
        group = build_group(GroupKind.P4G, (1,))
        tile = attach_centers([square(0, 0)], group)
        self.assertEqual(len(tile.mirror_edges), 2)
        self.assertEqual(tile.centers, (Center((0, 0), 4), Center((2, 2), 2)))

    def test_merge_tiles(self):
        group = build_group(GroupKind.P4, (3, 1))
        tiles = enumerate_tiles(group)
        quarter = rotation_about((0, 0), LatticeKind.SQUARE, 4)
        turned = []
        for tile in tiles:
            cells = tuple(sorted(apply_to_cell(quarter, c) for c in tile.cells))
            centers = tuple(sorted(Center(quarter.apply(c.point), c.order) for c in tile.centers))
            turned.append(MarkedTile(cells, centers, tile.group_kind, tile.params))
        self.assertEqual(len(merge_tiles([tiles, turned, tiles])), len(tiles))
        self.assertEqual(merge_tiles([tiles]), tiles)


if __name__ == "__main__":
    unittest.main()
