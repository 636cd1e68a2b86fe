# adapters/files/json_adapter.py
# JSON result sink
# Author: qinvar developers

from __future__ import annotations

import json
import os
import sys
from typing import Any, Dict, List, Optional, TextIO, Union

from ..base_adapter import BaseResultAdapter, Row


class JSONFileAdapter(BaseResultAdapter):
    """
    Writes a list of rows as a JSON array, or a single row as one object; sorted keys, 2-space indent.

    With file_path None the document goes to stdout.
    """

    def __init__(self, file_path: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
        self.file_path = file_path
        self.stream = stream

    def connect(self) -> None:
        if self.file_path:
            folder = os.path.dirname(self.file_path)
            if folder:
                os.makedirs(folder, exist_ok=True)

    def write(self, data: Union[Row, List[Row]], options: Optional[Dict[str, Any]] = None) -> bool:
        self.connect()
        target = (options and options.get("file_path")) or self.file_path
        # a single row is written as one object, a list as an array
        text = json.dumps(data, indent=2, sort_keys=True) + "\n"

        if target is None:
            (self.stream or sys.stdout).write(text)
            return True
        with open(target, "w", encoding="utf-8") as f:
            f.write(text)
        return True

    def close(self) -> None:
        pass
