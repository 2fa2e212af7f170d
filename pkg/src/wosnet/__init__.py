"""Web-of-Science exports to relational tables, 2-mode and weighted 1-mode
networks, written as Pajek files. No ceiling on the number of attributes."""

__version__ = "0.1.0"

from .graph import (BipartiteNetwork, OneModeNetwork, ProjectionCapError, build_bipartite,
                    component_census, extract_component, occurrence_vector, project_columns,
                    project_rows, weak_components, weighted_degree)
from .ingest import Corpus, ParseOptions, WosFormatError, WosRecord, parse_export, split_addresses
from .kernels import BACKEND
from .normalize import FoldMode, extract_country, extract_institution, fold_case
from .pajek import PajekDocument, read_net, write_clu, write_net, write_vec
from .tabular import TableSet, build_tables, export_csv, import_pairs

__all__ = [
    "BACKEND", "BipartiteNetwork", "Corpus", "FoldMode", "OneModeNetwork", "PajekDocument",
    "ParseOptions", "ProjectionCapError", "TableSet", "WosFormatError", "WosRecord",
    "build_bipartite", "build_tables", "component_census", "export_csv", "extract_component",
    "extract_country", "extract_institution", "fold_case", "import_pairs", "occurrence_vector",
    "parse_export", "project_columns", "project_rows", "read_net", "split_addresses",
    "weak_components", "weighted_degree", "write_clu", "write_net", "write_vec",
]
