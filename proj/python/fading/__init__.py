"""Rainbow neighbourhoods and fading numbers of small graphs."""

import json
import os
from pathlib import Path

from . import _core
from ._core import (
    ContractError,
    FormatError,
    Graph,
    OracleRefusal,
    chromatic_colorings,
    chromatic_number,
    claim_ids,
    clique_number,
    corona,
    family,
    from_edge_list,
    from_graph6,
    is_bipartite,
    is_connected,
    join,
    mycielskian,
    rainbow_vertices,
    thorn,
    uncovered_bound,
    windmill,
)

__all__ = [
    "ContractError",
    "FormatError",
    "Graph",
    "OracleRefusal",
    "analyze",
    "chromatic_colorings",
    "chromatic_number",
    "claim_ids",
    "clique_number",
    "corona",
    "fading_for_coloring",
    "family",
    "from_edge_list",
    "from_graph6",
    "is_bipartite",
    "is_connected",
    "join",
    "mycielskian",
    "oracle_invariants",
    "rainbow_vertices",
    "run_claim",
    "scan",
    "thorn",
    "uncovered_bound",
    "windmill",
]


def _data_dir():
    return Path(os.environ.get("FADING_DATA_DIR", Path(__file__).resolve().parent / "data"))


def analyze(g, mode="threshold", jobs=1):
    return json.loads(_core.analyze(g, mode, jobs))


def fading_for_coloring(g, colors, threshold):
    return json.loads(_core.fading_for_coloring(g, colors, threshold))


def oracle_invariants(g, cap=9):
    return json.loads(_core.oracle_invariants(g, cap))


def run_claim(claim_id, mode="threshold", exhaustive_n=7, max_base_n=4, use_oracle=False, jobs=1):
    data = _data_dir()
    return json.loads(
        _core.run_claim(
            claim_id,
            str(data / "connected_n1-7.g6"),
            str(data / "trees_n1-8.g6"),
            mode,
            exhaustive_n,
            max_base_n,
            use_oracle,
            jobs,
        )
    )


def scan(lines, max_n=0, use_oracle=False, jobs=1):
    return json.loads(_core.scan(list(lines), max_n, use_oracle, jobs))
