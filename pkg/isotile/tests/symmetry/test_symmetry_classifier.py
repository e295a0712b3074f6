import unittest
from collections import Counter

from isotile.enumerator import TileEnumerator
from isotile.model import Center, GroupKind, TileCollection
from isotile.symmetry import SymmetryClassifier
from isotile.tests.test_utils import (
    classified_collection,
    full_kinds,
    hexagon,
    report_for_shape,
    reports_of,
    square_block,
)


class TestSymmetryClassifier(unittest.TestCase):
    def test_p4_full_kinds(self):
        self.assertEqual(full_kinds(classified_collection(GroupKind.P4, 1)), Counter({"p4m": 1}))
        self.assertEqual(full_kinds(classified_collection(GroupKind.P4, 2)), Counter({"p4g": 1}))
        collection = classified_collection(GroupKind.P4, 4)
        self.assertEqual(full_kinds(collection), Counter({"p4": 2, "p4m": 1}))
        square = report_for_shape(collection, square_block(2))
        self.assertEqual(square.full_kind, "p4m")
        self.assertFalse(square.is_fundamental)

    def test_p4g_full_kinds(self):
        collection = classified_collection(GroupKind.P4G, 4)
        self.assertEqual(full_kinds(collection), Counter({"p4g": 2, "p4m": 1}))
        self.assertEqual(report_for_shape(collection, square_block(2)).full_kind, "p4m")

    def test_p3_full_kinds(self):
        self.assertEqual(full_kinds(classified_collection(GroupKind.P3, 2)), Counter({"p6m": 1}))
        collection = classified_collection(GroupKind.P3, 6)
        self.assertEqual(
            full_kinds(collection), Counter({"p3": 1, "p6": 1, "p31m": 1, "p6m": 1})
        )
        self.assertEqual(report_for_shape(collection, hexagon()).full_kind, "p6m")
        self.assertEqual(
            full_kinds(classified_collection(GroupKind.P3, 8)), Counter({"p3": 6, "p6m": 1})
        )

    def test_p6_full_kinds(self):
        self.assertEqual(full_kinds(classified_collection(GroupKind.P6, 1)), Counter({"p6m": 1}))
        self.assertEqual(
            full_kinds(classified_collection(GroupKind.P6, 4)), Counter({"p6": 2, "p6m": 1})
        )
        reports = reports_of(classified_collection(GroupKind.P6, 7)).values()
        extra = [r for r in reports if not r.is_fundamental]
        self.assertEqual(len(extra), 1)
        (rotor,) = extra
        self.assertEqual(rotor.full_kind, "p6")
        self.assertEqual(rotor.index, 3)
        self.assertIn(Center((2, 8), 3), rotor.new_centers)
        self.assertEqual(
            {(c.point, c.order) for c in rotor.new_centers},
            {((-6, 18), 6), ((-3, 9), 2), ((2, 8), 3), ((6, 3), 2), ((12, 6), 6)},
        )

    def test_p31m_always_fundamental(self):
        collection = classified_collection(GroupKind.P31M, 12)
        self.assertEqual(len(collection), 20)
        self.assertTrue(all(r.is_fundamental for r in reports_of(collection).values()))
        (_, p31m_check) = collection.meta["theorem_checks"]
        self.assertEqual(p31m_check["name"], "p31m_always_fundamental")
        self.assertTrue(p31m_check["passed"])

    def test_p4g_check_detail(self):
        collection = classified_collection(GroupKind.P4G, 9)
        checks = {c["name"]: c for c in collection.meta["theorem_checks"]}
        self.assertEqual(checks["p4g_square_only"]["detail"], "1 of 26 tiles flagged")
        self.assertTrue(checks["stabilizer_index"]["passed"])

    def test_marked_only(self):
        collection = classified_collection(GroupKind.P3M1, 4)
        (report,) = reports_of(collection).values()
        self.assertEqual(report.full_kind, "p6m")
        self.assertEqual(report.index, 6)
        self.assertEqual(report.new_centers, (Center((4, 4), 3),))

    def test_empty_kinds(self):
        collection = classified_collection(GroupKind.P4M, 9)
        self.assertEqual(len(collection), 0)
        names = [c["name"] for c in collection.meta["theorem_checks"]]
        self.assertEqual(names, ["stabilizer_index", "p4m_empty"])

    def test_workers_agree(self):
        serial = classified_collection(GroupKind.P4, 5)
        collection = TileEnumerator().transform(TileCollection(GroupKind.P4, 5))
        SymmetryClassifier(workers=2).transform(collection)
        self.assertEqual(reports_of(collection), reports_of(serial))

    def test_without_checks(self):
        collection = TileEnumerator().transform(TileCollection(GroupKind.P4, 4))
        SymmetryClassifier(check_theorems=False).transform(collection)
        self.assertNotIn("theorem_checks", collection.meta)
        self.assertEqual(len(reports_of(collection)), 3)

    def test_summarize(self):
        classifier = SymmetryClassifier()
        collection = TileEnumerator().transform(TileCollection(GroupKind.P4, 5))
        with self.assertRaises(ValueError):
            classifier.summarize(collection)
        classifier.transform(collection)
        df = classifier.summarize(collection)
        self.assertEqual(len(df), 12)
        self.assertEqual(int((~df["is_fundamental"]).sum()), 3)
        self.assertTrue(((df["index"] == 1) == df["is_fundamental"]).all())

    def test_invalid_workers(self):
        with self.assertRaises(ValueError):
            SymmetryClassifier(workers=0)


if __name__ == "__main__":
    unittest.main()
