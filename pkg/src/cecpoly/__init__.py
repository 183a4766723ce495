"""Exact connected edge cover polynomials: enumeration oracle, deletion-contraction
engine, closed-form evaluators and a claim-verification harness."""

from .engine import EngineConfig, EngineStats, MultiGraph, cec_poly_engine, spanning_tree_count
from .errors import BudgetExceeded, CecError, EdgeListParseError, InvalidParameter, ResourceLimit
from .graphs import Family, FamilySpec, Graph, generate, is_connected, parse_edge_list, serialize_edge_list, spec
from .oracle import OracleConfig, cec_poly_oracle, ec_poly_oracle, min_cec_size
from .poly import Poly, binom_power, eval_int, is_unimodal

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CecError",
    "EdgeListParseError",
    "EngineConfig",
    "EngineStats",
    "Family",
    "FamilySpec",
    "Graph",
    "InvalidParameter",
    "MultiGraph",
    "OracleConfig",
    "Poly",
    "ResourceLimit",
    "binom_power",
    "cec_poly_engine",
    "cec_poly_oracle",
    "ec_poly_oracle",
    "eval_int",
    "generate",
    "is_connected",
    "is_unimodal",
    "min_cec_size",
    "parse_edge_list",
    "serialize_edge_list",
    "spanning_tree_count",
    "spec",
]
