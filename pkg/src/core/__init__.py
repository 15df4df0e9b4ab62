#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""森林 Hopf 代数 - 核心计算引擎"""

__version__ = "1.0.0"
__author__ = "Forest Hopf Team"

from .config import Config
from .exceptions import (
    ForestArgumentError, ForestDecodeError, ForestDomainError, ForestFormatError,
    ForestHopfError, TargetRegistrationError,
)
from .forest import (
    Forest, Tree, VertexRef, UNIT, bplus, breadth, concat, depth, hl_order, leaf,
    split_at, unbplus, validate, vertex_count,
)
from .freemodule import LinComb, Tensor2, Tensor3, act_left, act_right, lc_add, lc_mul, lc_scale, t2_mul
from .coproduct import (
    coproduct, delta_eps, delta_eps_comb, delta_eps_lin, delta_foissy, delta_foissy_lin,
    delta_rt, delta_rt_lin,
)
from .hopf import (
    Endo, antipode, antipode_check, antipode_recursive, circ_convolve, compose_power,
    conv_power, convolve, d_eps, nilpotency_witness,
)
from .poly_model import (
    KxTarget, Poly, PolyTensor2, TargetSpec, UniversalMorphism, kx_antipode, kx_delta,
    kx_P, morphism_check, phi_bar,
)
from .enumerator import count, enumerate_forests
from .textio import (
    from_json, parse_forest, parse_lincomb, parse_tensor2, serialize, serialize_forest,
    serialize_lincomb, serialize_tensor2, to_json,
)
from .verification import SuiteRunner, SuiteResult
from .main import ForestHopfSystem, clear_caches
from .utils import logger, setup_logging

__all__ = [
    "Config",
    "ForestHopfError",
    "ForestFormatError",
    "ForestArgumentError",
    "ForestDomainError",
    "ForestDecodeError",
    "TargetRegistrationError",
    "Forest",
    "Tree",
    "VertexRef",
    "UNIT",
    "leaf",
    "bplus",
    "unbplus",
    "concat",
    "depth",
    "breadth",
    "vertex_count",
    "hl_order",
    "split_at",
    "validate",
    "LinComb",
    "Tensor2",
    "Tensor3",
    "lc_add",
    "lc_scale",
    "lc_mul",
    "act_left",
    "act_right",
    "t2_mul",
    "coproduct",
    "delta_eps",
    "delta_eps_comb",
    "delta_eps_lin",
    "delta_foissy",
    "delta_foissy_lin",
    "delta_rt",
    "delta_rt_lin",
    "Endo",
    "d_eps",
    "convolve",
    "conv_power",
    "circ_convolve",
    "compose_power",
    "nilpotency_witness",
    "antipode",
    "antipode_recursive",
    "antipode_check",
    "Poly",
    "PolyTensor2",
    "TargetSpec",
    "KxTarget",
    "UniversalMorphism",
    "kx_delta",
    "kx_antipode",
    "kx_P",
    "phi_bar",
    "morphism_check",
    "enumerate_forests",
    "count",
    "parse_forest",
    "parse_lincomb",
    "parse_tensor2",
    "serialize",
    "serialize_forest",
    "serialize_lincomb",
    "serialize_tensor2",
    "to_json",
    "from_json",
    "SuiteRunner",
    "SuiteResult",
    "ForestHopfSystem",
    "clear_caches",
    "logger",
    "setup_logging",
]
