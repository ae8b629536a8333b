"""Exact-arithmetic toolkit for triangle operations on distance
distribution functions: catalogs of operations on [0,1] and [0,inf],
the triangle operation itself, axiom checking with counterexample
mining, and a decision procedure for when the operation is lawful."""

from .classify import Classification, classify
from .ddf import DDF, canonicalize, last_jump_to_one, leq, make_epsilon, make_v, parse_ddf, serialize
from .lawcheck import LawReport, RandomDDFConfig, check_law, mine_counterexample, random_ddf
from .rationals import EXT_INF, EXT_ZERO, UNIT_ONE, UNIT_ZERO, ExtRat, UnitRat, ext, unit
from .tconorms import TConormDesc, catalog_tconorm, catalog_tconorm_spec
from .tnorms import TNormDesc, catalog_tnorm
from .tau import grid_oracle_tau_at, level_split_witness, tau, tau_d_closed_form, tau_raw_at
from .verdicts import Verdict

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "DDF",
    "EXT_INF",
    "EXT_ZERO",
    "ExtRat",
    "LawReport",
    "RandomDDFConfig",
    "TConormDesc",
    "TNormDesc",
    "UNIT_ONE",
    "UNIT_ZERO",
    "UnitRat",
    "Verdict",
    "canonicalize",
    "catalog_tconorm",
    "catalog_tconorm_spec",
    "catalog_tnorm",
    "check_law",
    "classify",
    "ext",
    "grid_oracle_tau_at",
    "last_jump_to_one",
    "level_split_witness",
    "leq",
    "make_epsilon",
    "make_v",
    "mine_counterexample",
    "parse_ddf",
    "random_ddf",
    "serialize",
    "tau",
    "tau_d_closed_form",
    "tau_raw_at",
    "unit",
]
