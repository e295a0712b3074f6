import os
from typing import Optional
from yaml import load, Loader

DEFAULT_CONFIG_CONTENTS = (
    "# Default run parameters\n"
    "out_directory: isotile-out\n"
    "workers: 1\n"
    "split_depth: 3\n"
    "cell_px: 24\n"
    "patch_radius: 2\n"
)

ENV_VARS = {"out_directory": "ISOTILE_OUT", "workers": "ISOTILE_WORKERS"}


class IsoTileConfig:
    """
    Utility class providing read-only access to the isotile config file. Environment
    variables take priority over the file for the keys listed in ENV_VARS.
    """

    def __init__(self, filename: Optional[str] = None):
        if filename is None:
            filename = os.path.expanduser("~/.isotile/config.yml")

        if not os.path.isfile(filename):
            self.config_contents = load(DEFAULT_CONFIG_CONTENTS, Loader=Loader)
            try:
                config_dir = os.path.dirname(filename)
                if config_dir and not os.path.isdir(config_dir):
                    os.makedirs(config_dir)
                with open(filename, "w") as f:
                    print(
                        f"No configuration file found at {filename}; writing with contents: "
                        f"\n{DEFAULT_CONFIG_CONTENTS}"
                    )
                    f.write(DEFAULT_CONFIG_CONTENTS)
            except OSError:
                # read-only home: keep the defaults in memory
                pass
        else:
            with open(filename, "r") as f:
                self.config_contents = load(f.read(), Loader=Loader) or {}

    def _get_config_from_env_or_file(self, config_key: str, default_val):
        env_val = os.environ.get(ENV_VARS[config_key], None)
        if env_val is not None:
            # environment variable setting takes priority
            return env_val
        return self.config_contents.get(config_key, default_val)

    @staticmethod
    def _positive_int(config_key: str, value, minimum: int) -> int:
        try:
            value = int(value)
        except (TypeError, ValueError):
            raise ValueError(f"config value {config_key}={value!r} is not an integer")
        if value < minimum:
            raise ValueError(f"config value {config_key}={value} must be at least {minimum}")
        return value

    @property
    def out_directory(self) -> str:
        out_dir = self._get_config_from_env_or_file("out_directory", "isotile-out")
        return os.path.expanduser(out_dir)

    @property
    def workers(self) -> int:
        return self._positive_int("workers", self._get_config_from_env_or_file("workers", 1), 1)

    @property
    def split_depth(self) -> int:
        return self._positive_int("split_depth", self.config_contents.get("split_depth", 3), 1)

    @property
    def cell_px(self) -> int:
        return self._positive_int("cell_px", self.config_contents.get("cell_px", 24), 4)

    @property
    def patch_radius(self) -> int:
        return self._positive_int("patch_radius", self.config_contents.get("patch_radius", 2), 1)
