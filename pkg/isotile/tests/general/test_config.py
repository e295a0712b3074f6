import contextlib
import io
import os
import shutil
import tempfile
import unittest
from unittest import mock

from isotile.isotileConfig import DEFAULT_CONFIG_CONTENTS, IsoTileConfig


class TestConfig(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.filename = os.path.join(self.tmp, "nested", "config.yml")
        env = {k: v for k, v in os.environ.items() if not k.startswith("ISOTILE_")}
        self.env = mock.patch.dict(os.environ, env, clear=True)
        self.env.start()

    def tearDown(self):
        self.env.stop()
        shutil.rmtree(self.tmp)

    def write(self, text: str):
        os.makedirs(os.path.dirname(self.filename), exist_ok=True)
        with open(self.filename, "w") as f:
            f.write(text)

    def test_writes_defaults(self):
        with contextlib.redirect_stdout(io.StringIO()) as out:
            config = IsoTileConfig(self.filename)
        self.assertIn("No configuration file found", out.getvalue())
        with open(self.filename) as f:
            self.assertEqual(f.read(), DEFAULT_CONFIG_CONTENTS)
        self.assertEqual(config.out_directory, "isotile-out")
        self.assertEqual(config.workers, 1)
        self.assertEqual(config.split_depth, 3)
        self.assertEqual(config.cell_px, 24)
        self.assertEqual(config.patch_radius, 2)

    def test_file_values(self):
        self.write("out_directory: ~/tiles\nworkers: 4\ncell_px: 10\n")
        config = IsoTileConfig(self.filename)
        self.assertEqual(config.out_directory, os.path.expanduser("~/tiles"))
        self.assertEqual(config.workers, 4)
        self.assertEqual(config.cell_px, 10)
        self.assertEqual(config.split_depth, 3)

    def test_empty_file(self):
        self.write("")
        self.assertEqual(IsoTileConfig(self.filename).workers, 1)

    def test_environment_overrides(self):
        self.write("out_directory: from-file\nworkers: 2\n")
        with mock.patch.dict(os.environ, {"ISOTILE_OUT": "from-env", "ISOTILE_WORKERS": "8"}):
            config = IsoTileConfig(self.filename)
            self.assertEqual(config.out_directory, "from-env")
            self.assertEqual(config.workers, 8)

    def test_invalid_values(self):
        self.write("workers: 0\ncell_px: 2\nsplit_depth: many\n")
        config = IsoTileConfig(self.filename)
        with self.assertRaises(ValueError):
            config.workers
        with self.assertRaises(ValueError):
            config.cell_px
        with self.assertRaises(ValueError):
            config.split_depth


if __name__ == "__main__":
    unittest.main()
