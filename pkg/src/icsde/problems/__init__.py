"""Benchmark-problem registry: instances addressed by string id."""

from __future__ import annotations

import numpy as np

from ..core import ContractViolation, ProblemSpec
from . import cdtlz, dascmop, lircmop, mw

_FRONT_CACHE: dict = {}

INSTANCE_IDS = mw.NAMES + lircmop.NAMES + cdtlz.NAMES + dascmop.NAMES

_CDTLZ_FES = {
    "c1_dtlz1": 46000,
    "c1_dtlz3": 92000,
    "c2_dtlz2": 23000,
    "c3_dtlz1": 69000,
    "c3_dtlz4": 69000,
}


def suite_of(name: str) -> str:
    if name in mw.NAMES:
        return "MW"
    if name in lircmop.NAMES:
        return "LIRCMOP"
    if name in cdtlz.NAMES:
        return "CDTLZ"
    if name in dascmop.NAMES:
        return "DASCMOP"
    raise ContractViolation(f"unknown problem id: {name}")


def make_problem(name: str) -> ProblemSpec:
    suite = suite_of(name)
    module = {"MW": mw, "LIRCMOP": lircmop, "CDTLZ": cdtlz, "DASCMOP": dascmop}[suite]
    return module.build(name, _FRONT_CACHE)


def default_budget(name: str) -> tuple:
    suite = suite_of(name)
    if suite == "MW":
        return 100, 60000
    if suite == "CDTLZ":
        return 92, _CDTLZ_FES[name]
    return 300, 300000


def default_operator_kind(name: str) -> str:
    return "GA" if suite_of(name) in ("MW", "CDTLZ") else "DE"


def pf_sample(name: str, k: int) -> np.ndarray:
    if k < 2:
        raise ContractViolation("pf_sample needs k >= 2")
    return make_problem(name).pf_sampler(k)
