# adapters/files/excel_adapter.py
# Excel (.xlsx) result sink backed by openpyxl
# Author: qinvar developers

from __future__ import annotations

import os
from typing import Any, Dict, List, Optional, Union

from ...state_types import MissingDependencyError
from ..base_adapter import BaseResultAdapter, Row


def _close_workbook(wb: Any) -> None:
    """Close an openpyxl workbook, including its archive handle if present."""
    archive = getattr(wb, "_archive", None)
    if archive is not None:
        try:
            archive.close()
        except Exception:
            pass
    try:
        wb.close()
    except Exception:
        pass


class ExcelFileAdapter(BaseResultAdapter):
    """
    Writes rows to the first sheet of a new workbook (header row first).

    Needs the optional openpyxl dependency: pip install qinvar[excel]
    """

    def __init__(self, file_path: str = "output.xlsx", sheet: str = "results") -> None:
        self.file_path = file_path
        self.sheet = sheet

    def connect(self) -> None:
        folder = os.path.dirname(self.file_path)
        if folder:
            os.makedirs(folder, exist_ok=True)

    def write(self, data: Union[Row, List[Row]], options: Optional[Dict[str, Any]] = None) -> bool:
        self.connect()
        target = (options and options.get("file_path")) or self.file_path
        sheet_name = (options and options.get("sheet")) or self.sheet
        records = data if isinstance(data, list) else [data]

        try:
            from openpyxl import Workbook
        except ImportError:
            raise MissingDependencyError(
                "openpyxl is required for Excel support. Install with 'pip install qinvar[excel]'"
            )

        wb = Workbook()
        ws = wb.active
        ws.title = sheet_name
        if records:
            headers = list(records[0].keys())
            ws.append(headers)
            for r in records:
                ws.append([r[h] for h in headers])
        wb.save(target)
        _close_workbook(wb)
        return True

    def close(self) -> None:
        pass
