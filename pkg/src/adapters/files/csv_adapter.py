# adapters/files/csv_adapter.py
# CSV result sink
# Author: qinvar developers

from __future__ import annotations

import csv
import os
import sys
from typing import Any, Dict, List, Optional, TextIO, Union

from ...helpers import format_float
from ..base_adapter import BaseResultAdapter, Row


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format_float(value)
    return str(value)


class CSVFileAdapter(BaseResultAdapter):
    """
    Writes rows as CSV: header row, '.' decimal separator, 17 significant digits, '\\n' line ends.

    With file_path None the rows go to stdout.
    """

    def __init__(self, file_path: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
        self.file_path = file_path
        self.stream = stream

    def connect(self) -> None:
        if self.file_path:
            folder = os.path.dirname(self.file_path)
            if folder:
                os.makedirs(folder, exist_ok=True)

    def _emit(self, f: TextIO, records: List[Row]) -> None:
        fieldnames = list(records[0].keys())
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(fieldnames)
        for r in records:
            writer.writerow([_cell(r[name]) for name in fieldnames])

    def write(self, data: Union[Row, List[Row]], options: Optional[Dict[str, Any]] = None) -> bool:
        self.connect()
        target = (options and options.get("file_path")) or self.file_path
        records = data if isinstance(data, list) else [data]
        if not records:
            return True

        if target is None:
            self._emit(self.stream or sys.stdout, records)
            return True
        # overwrite so repeated runs give byte-identical files
        with open(target, "w", newline="", encoding="utf-8") as f:
            self._emit(f, records)
        return True

    def close(self) -> None:
        pass
