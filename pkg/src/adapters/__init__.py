# adapters/__init__.py
# Pluggable result sinks for qinvar
# Author: qinvar developers

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional, Type, Union

from ..state_types import DomainError
from .base_adapter import BaseResultAdapter
from .files.csv_adapter import CSVFileAdapter
from .files.excel_adapter import ExcelFileAdapter
from .files.json_adapter import JSONFileAdapter

_ADAPTER_REGISTRY: Dict[str, Type[BaseResultAdapter]] = {
    "csv": CSVFileAdapter,
    "json": JSONFileAdapter,
    "xlsx": ExcelFileAdapter,
    "excel": ExcelFileAdapter,
}


def register_adapter(name: str, adapter_cls: Type[BaseResultAdapter]) -> None:
    """Register a custom result adapter class under a name."""
    if not issubclass(adapter_cls, BaseResultAdapter):
        raise ValueError(f"Adapter class {adapter_cls} must subclass BaseResultAdapter.")
    _ADAPTER_REGISTRY[name.lower()] = adapter_cls


def get_adapter(
    adapter: Union[str, BaseResultAdapter, None] = None,
    **kwargs: Any,
) -> BaseResultAdapter:
    """
    Resolve a result adapter instance.

    :param adapter: registered name ('csv', 'json', 'xlsx') or an adapter instance; None means csv
    """
    if adapter is None:
        return CSVFileAdapter(**kwargs)

    if isinstance(adapter, BaseResultAdapter):
        return adapter

    if isinstance(adapter, str):
        key = adapter.lower()
        if key in _ADAPTER_REGISTRY:
            return _ADAPTER_REGISTRY[key](**kwargs)
        raise DomainError(f"Unknown result adapter '{adapter}'. Registered adapters: {list(_ADAPTER_REGISTRY.keys())}")

    raise DomainError(f"Invalid result adapter specification: {adapter}")


def adapter_for_path(path: Optional[Union[str, Path]], adapter: Optional[str] = None) -> BaseResultAdapter:
    """
    Adapter writing to path, picked by name or else by file extension (.csv, .json, .xlsx).

    A None path gives the stdout CSV sink.
    """
    if path is None:
        return get_adapter(adapter or "csv")
    name = adapter or Path(path).suffix.lstrip(".").lower() or "csv"
    return get_adapter(name, file_path=str(path))


__all__ = [
    "BaseResultAdapter",
    "CSVFileAdapter",
    "JSONFileAdapter",
    "ExcelFileAdapter",
    "adapter_for_path",
    "get_adapter",
    "register_adapter",
]
