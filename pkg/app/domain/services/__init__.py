"""Domain services - temporal reasoning that doesn't belong to a single entity"""
from .chronon import extract_question_time, find_time_expressions, normalize_timex, normalize_timex_value
from .interval_algebra import (
    CompositionTable,
    build_composition_table,
    compose,
    load_composition_table,
    relate,
)
from .inference import infer_all, infer_relation, shortest_path
from .graph_builder import build_graph, build_graph_with_report, select_subgraph
from .graph_stats import CorpusStats, GraphStats, aggregate_stats, degree_stats, graph_stats
from .fusion import err_serialize, gnn_export, length_report
from .prompt_builder import PromptShot, PromptTarget, build_icl_prompt
from .relgraphconv import NodeStates, RelConvLayer, forward
from .document_annotator import DocumentAnnotator

__all__ = [
    "extract_question_time",
    "find_time_expressions",
    "normalize_timex",
    "normalize_timex_value",
    "CompositionTable",
    "build_composition_table",
    "compose",
    "load_composition_table",
    "relate",
    "infer_all",
    "infer_relation",
    "shortest_path",
    "build_graph",
    "build_graph_with_report",
    "select_subgraph",
    "CorpusStats",
    "GraphStats",
    "aggregate_stats",
    "degree_stats",
    "graph_stats",
    "err_serialize",
    "gnn_export",
    "length_report",
    "PromptShot",
    "PromptTarget",
    "build_icl_prompt",
    "NodeStates",
    "RelConvLayer",
    "forward",
    "DocumentAnnotator",
]
