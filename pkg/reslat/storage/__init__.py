"""Algebra codecs and result records."""
from reslat.models import FinRL, OutputFormat

from .base import STDIO, BaseCodec, algebra_from_tables, read_text
from .frl_codec import FrlCodec
from .json_codec import JsonCodec
from .records import render_record, render_value


def get_codec(fmt: OutputFormat) -> BaseCodec:
    """Codec for an output format."""
    if OutputFormat(fmt) is OutputFormat.JSON:
        return JsonCodec()
    return FrlCodec()


def load_algebra(path: str) -> FinRL:
    """Read an algebra in either format; JSON documents start with "{"."""
    text = read_text(path)
    codec = JsonCodec() if text.lstrip().startswith("{") else FrlCodec()
    return codec.parse(text)


__all__ = [
    "STDIO",
    "BaseCodec",
    "FrlCodec",
    "JsonCodec",
    "algebra_from_tables",
    "get_codec",
    "load_algebra",
    "read_text",
    "render_record",
    "render_value",
]
