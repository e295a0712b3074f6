import os
import warnings
from typing import Tuple


def warn(text: str):
    """
    Pre-pends a red-colored 'WARNING: ' to [text]. This is a printed warning and cannot be
    suppressed.

    :param text: Warning message
    :return: 'WARNING: [text]'
    """
    print("\033[91m" + "WARNING: " + "\033[0m" + text)


def _notice_format(message, category, filename, lineno, file=None, line=None):
    return "{}:{}: {}: {}\n".format(filename, lineno, category.__name__, message)


def notice(message: str, stacklevel: int = 3):
    """
    Suppressable warning for results that are valid but unexpected.
    """
    warnings.formatwarning = _notice_format
    warnings.warn(message, category=RuntimeWarning, stacklevel=stacklevel)


def parse_params(text: str) -> Tuple[int, ...]:
    """
    Parse a placement parameter override such as "3,1" or "2".

    :raises ValueError: if the text is not one or two comma-separated integers
    """
    parts = [p.strip() for p in text.strip().strip("()").split(",") if p.strip()]
    if not 1 <= len(parts) <= 2:
        raise ValueError(f"expected 'x,y' or 'x', got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"placement parameters must be integers, got {text!r}")


def tile_caption(tile_id: str, is_fundamental: bool = True) -> str:
    """Tile label as drawn on figures; tiles whose tiling gains symmetry are parenthesized."""
    return tile_id if is_fundamental else f"({tile_id})"


def ensure_dir(path: str) -> str:
    path = os.path.expanduser(path)
    os.makedirs(path, exist_ok=True)
    return path
