"""Flat result records printed by the command line."""
import json
from typing import Any, Dict

from reslat.models import OutputFormat


def _scalar(value: Any) -> str:
    """One-line text of a value; table rows are separated by ";"."""
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return ",".join(f"{k}:{_scalar(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        sep = ";" if any(isinstance(v, (list, tuple)) for v in value) else ","
        return sep.join(_scalar(v) for v in value)
    return str(value)


def render_record(record: Dict[str, Any], fmt: OutputFormat = OutputFormat.FRL) -> str:
    """Render a result as ``key=value`` lines, or as one JSON object."""
    if OutputFormat(fmt) is OutputFormat.JSON:
        return json.dumps(record, indent=2, default=str) + "\n"
    return "".join(f"{key}={_scalar(value)}\n" for key, value in record.items())


def render_value(key: str, value: Any, fmt: OutputFormat = OutputFormat.FRL) -> str:
    """A single answer: the bare value, or ``{key: value}`` in JSON."""
    if OutputFormat(fmt) is OutputFormat.JSON:
        return json.dumps({key: value}, default=str) + "\n"
    return _scalar(value) + "\n"
