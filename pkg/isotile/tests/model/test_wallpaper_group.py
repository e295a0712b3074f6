import pickle
import unittest

from isotile.model import (
    IDENTITY,
    GroupKind,
    GroupParams,
    TranslationLattice,
    admissible_sizes,
    build_group,
    fundamental_area,
    validate_params,
)

SEARCHABLE = [
    (GroupKind.P4, (1, 1)),
    (GroupKind.P4, (3, 1)),
    (GroupKind.P4, (4, 2)),
    (GroupKind.P4G, (2, 0)),
    (GroupKind.P4G, (3, 0)),
    (GroupKind.P3, (1, 0)),
    (GroupKind.P3, (2, 1)),
    (GroupKind.P31M, (1, 0)),
    (GroupKind.P31M, (2, 0)),
    (GroupKind.P6, (1, 0)),
    (GroupKind.P6, (2, 1)),
    (GroupKind.P6, (3, 3)),
]


class TestParams(unittest.TestCase):
    def test_normalization(self):
        self.assertEqual(validate_params(GroupKind.P4, (1, 3)), GroupParams(3, 1))
        self.assertEqual(validate_params(GroupKind.P6, (0, 2)), GroupParams(2, 0))
        self.assertEqual(validate_params(GroupKind.P4G, (2,)), GroupParams(2, 0))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            validate_params(GroupKind.P4, (1, 2))
        with self.assertRaises(ValueError):
            validate_params(GroupKind.P3, (0, 0))
        with self.assertRaises(ValueError):
            validate_params(GroupKind.P6, (-1, 2))
        with self.assertRaises(ValueError):
            validate_params(GroupKind.P4G, (1, 1))
        with self.assertRaises(ValueError):
            validate_params(GroupKind.P31M, (0,))
        with self.assertRaises(ValueError):
            validate_params(GroupKind.P4M, (1, 1))
        with self.assertRaises(ValueError):
            validate_params(GroupKind.P3, (1, 2, 3))
        with self.assertRaises(TypeError):
            validate_params(GroupKind.P3, (1.5, 1))

    def test_parse(self):
        self.assertIs(GroupKind.parse(" P31M "), GroupKind.P31M)
        with self.assertRaises(ValueError):
            GroupKind.parse("p2")


class TestAreas(unittest.TestCase):
    def test_fundamental_area(self):
        self.assertEqual(fundamental_area(GroupKind.P4, (1, 3)), 5)
        self.assertEqual(fundamental_area(GroupKind.P4G, (2,)), 4)
        self.assertEqual(fundamental_area(GroupKind.P3, (2, 1)), 14)
        self.assertEqual(fundamental_area(GroupKind.P31M, (2,)), 12)
        self.assertEqual(fundamental_area(GroupKind.P6, (2, 1)), 7)
        self.assertEqual(fundamental_area(GroupKind.P3M1, (3,)), 9)

    def test_admissible_sizes(self):
        p4 = admissible_sizes(GroupKind.P4, 10)
        self.assertEqual([s.n for s in p4], [1, 2, 4, 5, 8, 9, 10])
        (last,) = [s for s in admissible_sizes(GroupKind.P4, 25) if s.n == 25]
        self.assertEqual(last.params, [GroupParams(5, 5), GroupParams(7, 1)])
        (last,) = [s for s in admissible_sizes(GroupKind.P3, 98) if s.n == 98]
        self.assertEqual(last.params, [GroupParams(5, 3), GroupParams(7, 0)])
        (last,) = [s for s in admissible_sizes(GroupKind.P6, 49) if s.n == 49]
        self.assertEqual(last.params, [GroupParams(5, 3), GroupParams(7, 0)])

    def test_special_kinds(self):
        self.assertEqual(admissible_sizes(GroupKind.P4M, 50), [])
        self.assertEqual(admissible_sizes(GroupKind.P6M, 50), [])
        self.assertEqual([s.n for s in admissible_sizes(GroupKind.P3M1, 10)], [1, 4, 9])
        with self.assertRaises(ValueError):
            admissible_sizes(GroupKind.P4, 0)


class TestTranslationLattice(unittest.TestCase):
    def test_hermite_form(self):
        lattice = TranslationLattice.spanned_by([(4, 0), (0, 4), (2, 2)])
        self.assertEqual((lattice.A, lattice.B, lattice.D), (4, 2, 2))
        self.assertEqual(lattice.area, 8)
        self.assertEqual(lattice.reduce((5, 3)), (3, 1))
        self.assertTrue(lattice.contains((6, -2)))
        self.assertFalse(lattice.contains((2, 0)))

    def test_cubic_multiple(self):
        lattice = TranslationLattice.spanned_by([(4, 0), (0, 4), (2, 2)])
        self.assertEqual(lattice.cubic_multiple(), 4)
        self.assertEqual(lattice.coset_vectors(4), [(0, 0), (2, 2)])

    def test_degenerate(self):
        with self.assertRaises(ValueError):
            TranslationLattice.spanned_by([(2, 0), (4, 0)])


class TestWallpaperGroup(unittest.TestCase):
    def test_structure(self):
        for kind, params in SEARCHABLE:
            with self.subTest(kind=kind.value, params=params):
                group = build_group(kind, params)
                self.assertEqual(len(group.cosets), kind.point_group_size)
                self.assertEqual(group.cosets[0], IDENTITY)
                residues = group.residue_cells()
                self.assertEqual(len(residues), len(group.cosets) * group.n)
                labels = {group.orbit_label(c) for c in residues}
                self.assertEqual(len(labels), group.n)
                self.assertEqual(group.has_reflection, kind in (GroupKind.P4G, GroupKind.P31M))

    def test_cosets_closed(self):
        for kind, params in SEARCHABLE:
            group = build_group(kind, params)
            for g in group.cosets:
                for h in group.cosets:
                    gh = g.compose(h)
                    self.assertTrue(
                        any(
                            k.m == gh.m
                            and group.translations.contains((gh.t[0] - k.t[0], gh.t[1] - k.t[1]))
                            for k in group.cosets
                        )
                    )

    def test_rotation_orders_p4(self):
        group = build_group(GroupKind.P4, (1, 1))
        self.assertEqual(group.rotation_order_at((0, 0)), 4)
        self.assertEqual(group.rotation_order_at((2, 2)), 4)
        self.assertEqual(group.rotation_order_at((2, 0)), 2)
        self.assertEqual(group.rotation_order_at((1, 0)), 1)
        self.assertFalse(group.same_orbit((0, 0), (2, 2)))
        self.assertTrue(group.same_orbit((2, 0), (0, 2)))

    def test_rotation_orders_p6(self):
        group = build_group(GroupKind.P6, (1, 0))
        self.assertEqual(group.rotation_order_at((0, 0)), 6)
        self.assertEqual(group.rotation_order_at((6, 0)), 3)
        self.assertTrue(group.same_orbit((6, 0), (0, 6)))
        self.assertFalse(group.same_orbit((0, 0), (6, 0)))

    def test_region(self):
        group = build_group(GroupKind.P4G, (1,))
        self.assertTrue(group.uses_region)
        self.assertEqual(group.white, (2, 2))
        self.assertFalse(build_group(GroupKind.P4, (1, 1)).uses_region)

    def test_p3m1_not_buildable(self):
        with self.assertRaises(ValueError):
            build_group(GroupKind.P3M1, (1,))

    def test_pickle(self):
        group = build_group(GroupKind.P6, (2, 1))
        restored = pickle.loads(pickle.dumps(group))
        self.assertEqual(restored, group)


if __name__ == "__main__":
    unittest.main()
