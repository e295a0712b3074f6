"""
Command-line driver: ``isotile {sizes,enumerate,classify,table,render}``.

Flag defaults come from the isotile config file; explicit flags win. Invalid input exits
with status 2, a failed structural check on classified tiles with status 1.
"""

import argparse
import json
import os
import sys
from typing import List, Optional

from isotile.enumerator import SPECIAL_KINDS, TileEnumerator
from isotile.isotileConfig import IsoTileConfig
from isotile.model import EMPTINESS_NOTES, GroupKind, TileCollection, admissible_sizes
from isotile.rendering import (
    TABLE_FORMATS,
    RenderStyle,
    emit_tables,
    render_tile_svg,
    render_tiling_svg,
)
from isotile.symmetry import SymmetryClassifier, count_rows, generate_torus_tiling
from isotile.util import ensure_dir, parse_params

__all__ = ["build_parser", "run", "main"]


def _group_kind(text: str) -> GroupKind:
    try:
        return GroupKind.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _params(text: str):
    try:
        return parse_params(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_group(cmd: argparse.ArgumentParser, **kwargs):
    kinds = ",".join(k.value for k in GroupKind)
    cmd.add_argument(
        "--group",
        type=_group_kind,
        required=True,
        metavar=f"{{{kinds}}}",
        help="wallpaper group",
        **kwargs,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isotile",
        description="Enumerate, classify, count and draw isohedral polyomino and polyiamond "
        "tilings with 3-, 4- or 6-fold rotational symmetry.",
    )
    parser.add_argument(
        "--config", default=None, help="config file (default ~/.isotile/config.yml)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sizes = sub.add_parser("sizes", help="list admissible tile sizes and their parameters")
    _add_group(sizes)
    sizes.add_argument("--max-n", type=int, required=True)

    for name, text in (
        ("enumerate", "write every tile of one size as JSON"),
        ("classify", "enumerate and write each tile's full symmetry report as JSON"),
        ("render", "write SVG drawings of every tile and its tiling"),
    ):
        cmd = sub.add_parser(name, help=text)
        _add_group(cmd)
        cmd.add_argument("--n", type=int, required=True)
        cmd.add_argument("--params", type=_params, default=None, help="placement override x,y")
        cmd.add_argument("--out", default=None, help="output directory")
        cmd.add_argument("--workers", type=int, default=None)
        cmd.add_argument("--split-depth", type=int, default=None)
        if name == "render":
            cmd.add_argument("--patch-radius", type=int, default=None)
        else:
            cmd.add_argument("--svg", action="store_true", help="also write SVG tile drawings")
        if name == "classify":
            cmd.add_argument(
                "--exhaustive",
                action="store_true",
                help="test every lattice isometry instead of only tile stabilizers",
            )

    table = sub.add_parser("table", help="write tile count tables")
    _add_group(table, nargs="+")
    table.add_argument("--max-n", type=int, required=True)
    table.add_argument("--format", choices=TABLE_FORMATS, default="csv")
    table.add_argument("--out", default=None, help="output directory")
    table.add_argument("--workers", type=int, default=None)
    table.add_argument("--split-depth", type=int, default=None)
    return parser


class _Run:
    """Resolved settings for one command: flags first, then config values."""

    def __init__(self, args: argparse.Namespace, config: IsoTileConfig):
        self.args = args
        self.out_dir = getattr(args, "out", None) or config.out_directory
        workers = getattr(args, "workers", None)
        self.workers = workers if workers is not None else config.workers
        split_depth = getattr(args, "split_depth", None)
        self.split_depth = split_depth if split_depth is not None else config.split_depth
        if self.workers < 1:
            raise ValueError(f"--workers must be at least 1, got {self.workers}")
        if self.split_depth < 1:
            raise ValueError(f"--split-depth must be at least 1, got {self.split_depth}")
        patch_radius = getattr(args, "patch_radius", None)
        self.style = RenderStyle(
            cell_px=config.cell_px,
            patch_radius=patch_radius if patch_radius is not None else config.patch_radius,
        )

    def path(self, *parts: str) -> str:
        path = os.path.join(self.out_dir, *parts)
        ensure_dir(os.path.dirname(path))
        return path

    def write(self, text: str, *parts: str) -> str:
        path = self.path(*parts)
        with open(path, "w") as f:
            f.write(text)
        print(f"wrote {path}")
        return path


def _note_if_special(kind: GroupKind):
    if kind in SPECIAL_KINDS:
        print(EMPTINESS_NOTES[kind])


def _enumerate(run: _Run) -> TileCollection:
    args = run.args
    if args.n < 1:
        raise ValueError(f"--n must be at least 1, got {args.n}")
    collection = TileCollection(args.group, args.n)
    enumerator = TileEnumerator(
        params=args.params, workers=run.workers, split_depth=run.split_depth
    )
    enumerator.transform(collection)
    return collection


def _write_tiles(run: _Run, collection: TileCollection):
    kind = collection.group_kind.value
    path = run.path(f"{kind}-n{collection.n}-tiles.json")
    collection.dump(path)
    print(f"wrote {path} ({len(collection)} tiles)")


def _write_tile_svgs(run: _Run, collection: TileCollection, tilings: bool = False):
    kind = collection.group_kind.value
    for tile_id in collection.get_tile_ids():
        tile = collection.get_tile(tile_id)
        report = collection.get_tile_meta(tile_id).get("symmetry")
        svg = render_tile_svg(tile, run.style, tile_id=tile_id, report=report)
        run.write(svg, "svg", f"{kind}-{tile_id}.svg")
        if tilings and not tile.marked_only:
            svg = render_tiling_svg(generate_torus_tiling(tile), run.style, report=report)
            run.write(svg, "svg", f"{kind}-{tile_id}-tiling.svg")


def _cmd_sizes(run: _Run):
    args = run.args
    if args.max_n < 1:
        raise ValueError(f"--max-n must be at least 1, got {args.max_n}")
    _note_if_special(args.group)
    for size in admissible_sizes(args.group, args.max_n):
        for params in size.params:
            print(f"{size.n} {params}")


def _cmd_enumerate(run: _Run):
    collection = _enumerate(run)
    _note_if_special(collection.group_kind)
    _write_tiles(run, collection)
    if run.args.svg:
        _write_tile_svgs(run, collection)


def _cmd_classify(run: _Run):
    collection = _enumerate(run)
    _note_if_special(collection.group_kind)
    SymmetryClassifier(exhaustive=run.args.exhaustive, workers=run.workers).transform(collection)
    _write_tiles(run, collection)
    reports = [
        {"id": tile_id, **collection.get_tile_meta(tile_id)["symmetry"].to_json()}
        for tile_id in collection.get_tile_ids()
    ]
    kind = collection.group_kind.value
    run.write(json.dumps(reports, indent=2) + "\n", f"{kind}-n{collection.n}-symmetry.json")
    for check in collection.meta["theorem_checks"]:
        print(f"{check['name']}: {check['detail']}")
    if run.args.svg:
        _write_tile_svgs(run, collection)


def _cmd_table(run: _Run):
    args = run.args
    rows = []
    for kind in args.group:
        _note_if_special(kind)
        rows.extend(
            count_rows(kind, args.max_n, workers=run.workers, split_depth=run.split_depth)
        )
    if not rows:
        raise ValueError(f"no admissible sizes up to {args.max_n}")
    text = emit_tables(rows, args.format)
    names = "-".join(kind.value for kind in args.group)
    run.write(text, f"table-{names}-n{args.max_n}.{args.format}")
    sys.stdout.write(text)


def _cmd_render(run: _Run):
    collection = _enumerate(run)
    _note_if_special(collection.group_kind)
    SymmetryClassifier(check_theorems=False, workers=run.workers).transform(collection)
    _write_tile_svgs(run, collection, tilings=True)


_HANDLERS = {
    "sizes": _cmd_sizes,
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "table": _cmd_table,
    "render": _cmd_render,
}


def run(args: argparse.Namespace, config: Optional[IsoTileConfig] = None) -> int:
    """
    Execute a parsed command.

    :return: exit status; 0 on success (including groups with no tiles), 1 when a
        structural check fails, 2 on invalid input
    """
    try:
        if config is None:
            config = IsoTileConfig(args.config)
        _HANDLERS[args.command](_Run(args, config))
    except (ValueError, TypeError) as e:
        print(f"isotile: error: {e}", file=sys.stderr)
        return 2
    except AssertionError as e:
        print(f"isotile: check failed: {e}", file=sys.stderr)
        return 1
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
