# adapters/files/__init__.py
# File-backed result sinks
