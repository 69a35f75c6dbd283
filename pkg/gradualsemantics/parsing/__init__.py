"""陈述图 DSL 解析、序列化与导出模块。"""

from gradualsemantics.parsing.exporters import (
    DOTExporter,
    ExportFormat,
    GraphExporter,
    JSONExporter,
    export_dot,
    export_json,
    get_exporter,
)
from gradualsemantics.parsing.parser import load_sg, parse_sg
from gradualsemantics.parsing.serializer import serialize_sg

__all__ = [
    "parse_sg",
    "load_sg",
    "serialize_sg",
    "export_json",
    "export_dot",
    "get_exporter",
    "GraphExporter",
    "JSONExporter",
    "DOTExporter",
    "ExportFormat",
]
