import sys
from typing import Optional

import pandas as pd

FLOAT_FORMAT = '%.15g'


def table_to_csv(table: pd.DataFrame) -> str:
    """Render a table as CSV: header row, comma separated, 15 significant digits, LF line endings."""
    return table.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n', na_rep='nan')


def write_table(table: pd.DataFrame, path: Optional[str] = None):
    """Write a table to `path`, or to stdout when no path is given."""
    text = table_to_csv(table)
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)


__all__ = [
    "FLOAT_FORMAT",
    "table_to_csv",
    "write_table",
]
