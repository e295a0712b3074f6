import unittest

from isotile.model import GroupKind
from isotile.rendering import emit_tables, parse_tables, tables_dataframe
from isotile.symmetry import CountRow

ROWS = [
    CountRow(GroupKind.P4, 5, 12, 9, 8, 7),
    CountRow(GroupKind.P3, 2, 1, 0, 1, 0),
    CountRow(GroupKind.P4, 1, 1, 0, 1, 0),
]


class TestTables(unittest.TestCase):
    def test_csv(self):
        self.assertEqual(
            emit_tables(ROWS),
            "group,n,N,S,Nprime,Sprime\np3,2,1,0,1,0\np4,1,1,0,1,0\np4,5,12,9,8,7\n",
        )

    def test_json(self):
        text = emit_tables(ROWS, "json")
        self.assertTrue(text.startswith('[\n  {\n    "group": "p3",\n    "n": 2,'))
        self.assertTrue(text.endswith("]\n"))

    def test_parse(self):
        ordered = [ROWS[1], ROWS[2], ROWS[0]]
        for fmt in ("csv", "json"):
            with self.subTest(fmt=fmt):
                self.assertEqual(parse_tables(emit_tables(ROWS, fmt), fmt), ordered)

    def test_dataframe(self):
        df = tables_dataframe(ROWS)
        self.assertEqual(list(df.columns), ["group", "n", "N", "S", "Nprime", "Sprime"])
        self.assertEqual(list(df["group"]), ["p3", "p4", "p4"])

    def test_errors(self):
        with self.assertRaises(ValueError):
            emit_tables([])
        with self.assertRaises(ValueError):
            emit_tables(ROWS, "xml")
        with self.assertRaises(ValueError):
            parse_tables("group,n\np4,1\n")


if __name__ == "__main__":
    unittest.main()
