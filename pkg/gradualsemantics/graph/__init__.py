"""陈述图构造与关系推导模块。"""

from gradualsemantics.graph.builder import (
    add_statement,
    ancestors,
    build_graph,
    descendants,
    exists_path,
    remove_statement,
    reweight,
    support_ancestors,
)
from gradualsemantics.graph.relations import derive_relations

__all__ = [
    "build_graph",
    "derive_relations",
    "exists_path",
    "descendants",
    "ancestors",
    "support_ancestors",
    "add_statement",
    "remove_statement",
    "reweight",
]
