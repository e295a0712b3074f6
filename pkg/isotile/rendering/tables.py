import io
import json
from typing import List, Sequence

import pandas as pd

from isotile.model import GroupKind
from isotile.symmetry import CountRow

__all__ = ["TABLE_COLUMNS", "TABLE_FORMATS", "tables_dataframe", "emit_tables", "parse_tables"]

TABLE_COLUMNS = ["group", "n", "N", "S", "Nprime", "Sprime"]
TABLE_FORMATS = ("csv", "json")

_KIND_ORDER = {kind: i for i, kind in enumerate(GroupKind)}


def _check_format(fmt: str):
    if fmt not in TABLE_FORMATS:
        choices = ", ".join(TABLE_FORMATS)
        raise ValueError(f"unknown table format {fmt!r}; expected one of {choices}")


def _ordered(rows: Sequence[CountRow]) -> List[CountRow]:
    return sorted(rows, key=lambda row: (_KIND_ORDER[row.group], row.n))


def tables_dataframe(rows: Sequence[CountRow]) -> pd.DataFrame:
    """Count rows as a DataFrame ordered by group kind, then n."""
    return pd.DataFrame([row.to_json() for row in _ordered(rows)], columns=TABLE_COLUMNS)


def emit_tables(rows: Sequence[CountRow], fmt: str = "csv") -> str:
    """
    Serialize count rows with header group,n,N,S,Nprime,Sprime, ordered by group kind and
    then n.

    :param rows: nonempty list of CountRows
    :param fmt: "csv" or "json"
    """
    _check_format(fmt)
    if not rows:
        raise ValueError("no count rows to emit")
    if fmt == "csv":
        return tables_dataframe(rows).to_csv(index=False, lineterminator="\n")
    return json.dumps([row.to_json() for row in _ordered(rows)], indent=2) + "\n"


def parse_tables(text: str, fmt: str = "csv") -> List[CountRow]:
    """Inverse of ``emit_tables``."""
    _check_format(fmt)
    if fmt == "csv":
        df = pd.read_csv(io.StringIO(text), dtype={"group": str})
    else:
        df = pd.DataFrame(json.loads(text))
    missing = [c for c in TABLE_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError(f"count table lacks columns {missing}")
    return [
        CountRow(
            GroupKind.parse(record["group"]),
            *(int(record[c]) for c in TABLE_COLUMNS[1:]),
        )
        for record in df.to_dict(orient="records")
    ]
