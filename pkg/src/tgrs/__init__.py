"""Twisted generalized Reed-Solomon codes: construction, classification,
error-correcting-pair decoding and deep holes over small finite fields."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ._accel import USE_NUMBA
from .code import LinearCode, SingletonClass, code_from_generator, full_space
from .deepholes import (
    DeepHoleSpec,
    covering_radius,
    deep_hole_vector,
    error_distance,
    is_deep_hole,
    second_extension_of_tgrs,
)
from .ecp import DecodeOutcome, EcpPair, EcpReport, build_ecp, decode, verify_ecp
from .equivalence import GrsVerdict, Witness, exhaustive_grs_search, monomial_equivalent, schur_certificate
from .errors import TgrsError
from .field import (
    FieldElement,
    FieldSpec,
    arith,
    enumerate_field,
    field_new,
    format_element,
    frobenius,
    parse_element,
    power,
)
from .matrix import Affine, FMatrix, NoSolution, Unique, diag, matmul, null_space, rref, solve_right, transpose
from .twisted import (
    DualFamily,
    TwistedSpec,
    classify_twisted,
    dual_family,
    egrs,
    etgrs,
    etgrs_parity_check,
    grs,
    galois_self_dual_etgrs,
    subset_sum_contains,
    tgrs,
    w_vector,
)


def fixture_path(name: str) -> Path:
    """Path of a bundled example spec, e.g. ``fixture_path("ex42")``."""
    if not name.endswith(".json"):
        name += ".json"
    return Path(str(resources.files("tgrs") / "fixtures" / name))


__all__ = [
    "USE_NUMBA",
    "Affine",
    "DecodeOutcome",
    "DeepHoleSpec",
    "DualFamily",
    "EcpPair",
    "EcpReport",
    "FMatrix",
    "FieldElement",
    "FieldSpec",
    "GrsVerdict",
    "LinearCode",
    "NoSolution",
    "SingletonClass",
    "TgrsError",
    "TwistedSpec",
    "Unique",
    "Witness",
    "arith",
    "build_ecp",
    "classify_twisted",
    "code_from_generator",
    "covering_radius",
    "decode",
    "deep_hole_vector",
    "diag",
    "dual_family",
    "egrs",
    "enumerate_field",
    "error_distance",
    "etgrs",
    "etgrs_parity_check",
    "exhaustive_grs_search",
    "field_new",
    "fixture_path",
    "format_element",
    "frobenius",
    "full_space",
    "galois_self_dual_etgrs",
    "grs",
    "is_deep_hole",
    "matmul",
    "monomial_equivalent",
    "null_space",
    "parse_element",
    "power",
    "rref",
    "schur_certificate",
    "second_extension_of_tgrs",
    "solve_right",
    "subset_sum_contains",
    "tgrs",
    "transpose",
    "verify_ecp",
    "w_vector",
]
