# adapters/base_adapter.py
# Abstract base class for qinvar result sinks
# Author: qinvar developers

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Union

Row = Dict[str, Any]


class BaseResultAdapter(ABC):
    """
    Contract for every result sink.

    Sweeps, basis dumps and verification reports hand their rows to an adapter;
    the adapter owns the on-disk format.
    """

    @abstractmethod
    def connect(self) -> None:
        """Prepare the target (create parent folders, open handles)."""

    @abstractmethod
    def write(self, data: Union[Row, List[Row]], options: Optional[Dict[str, Any]] = None) -> bool:
        """
        Write one row or a list of rows, replacing any previous content of the target.

        :param data: single row or list of rows sharing the same keys
        :param options: sink-specific overrides (file_path, sheet name)
        :return: True once the rows are written
        """

    @abstractmethod
    def close(self) -> None:
        """Release whatever connect acquired."""
