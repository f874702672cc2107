"""Constrained DTLZ variants (5 instances, m=3, n in {7, 12}).

C1 variants add a single feasibility constraint on top of the base
problem's objectives; C3 variants replace the front with the envelope of
m per-objective constraints. Constraints are exposed in g <= 0 form.
"""

from __future__ import annotations

import numpy as np

from ..core import ProblemSpec
from ._support import simplex_lattice, sphere_directions

M = 3


def _g_dtlz1(Xm):
    k = Xm.shape[1]
    return 100.0 * (
        k
        + np.sum((Xm - 0.5) ** 2 - np.cos(20.0 * np.pi * (Xm - 0.5)), axis=1)
    )


def _g_dtlz2(Xm):
    return np.sum((Xm - 0.5) ** 2, axis=1)


def _linear_front(x_front, g):
    f1 = 0.5 * (1.0 + g) * x_front[:, 0] * x_front[:, 1]
    f2 = 0.5 * (1.0 + g) * x_front[:, 0] * (1.0 - x_front[:, 1])
    f3 = 0.5 * (1.0 + g) * (1.0 - x_front[:, 0])
    return np.column_stack([f1, f2, f3])


def _sphere_front(x_front, g, alpha=1.0):
    y = x_front**alpha
    f1 = (1.0 + g) * np.cos(0.5 * np.pi * y[:, 0]) * np.cos(0.5 * np.pi * y[:, 1])
    f2 = (1.0 + g) * np.cos(0.5 * np.pi * y[:, 0]) * np.sin(0.5 * np.pi * y[:, 1])
    f3 = (1.0 + g) * np.sin(0.5 * np.pi * y[:, 0])
    return np.column_stack([f1, f2, f3])


def _evaluate(name: str, X: np.ndarray):
    X = np.asarray(X, dtype=float)
    front_x, Xm = X[:, : M - 1], X[:, M - 1 :]
    if name == "c1_dtlz1":
        F = _linear_front(front_x, _g_dtlz1(Xm))
        G = [(F[:, 2] / 0.6 + (F[:, 0] + F[:, 1]) / 0.5) - 1.0]
    elif name == "c1_dtlz3":
        F = _sphere_front(front_x, _g_dtlz1(Xm))
        r2 = np.sum(F**2, axis=1)
        G = [-(r2 - 16.0) * (r2 - 81.0)]
    elif name == "c2_dtlz2":
        F = _sphere_front(front_x, _g_dtlz2(Xm))
        r = 0.4
        per_axis = [
            (F[:, j] - 1.0) ** 2
            + np.sum(F**2, axis=1)
            - F[:, j] ** 2
            - r**2
            for j in range(M)
        ]
        centered = np.sum((F - 1.0 / np.sqrt(M)) ** 2, axis=1) - r**2
        G = [np.minimum(np.minimum.reduce(per_axis), centered)]
    elif name == "c3_dtlz1":
        F = _linear_front(front_x, _g_dtlz1(Xm))
        total = np.sum(F, axis=1)
        G = [1.0 - (total - F[:, j]) - F[:, j] / 0.5 for j in range(M)]
    elif name == "c3_dtlz4":
        F = _sphere_front(front_x, _g_dtlz2(Xm), alpha=100.0)
        r2 = np.sum(F**2, axis=1)
        G = [1.0 - (F[:, j] ** 2 / 4.0 + (r2 - F[:, j] ** 2)) for j in range(M)]
    else:
        raise KeyError(name)
    return F, np.column_stack(G)


def _front(name: str) -> np.ndarray:
    if name == "c1_dtlz1":
        front = 0.5 * simplex_lattice(M, 2000)
        keep = front[:, 2] / 0.6 + (front[:, 0] + front[:, 1]) / 0.5 <= 1.0 + 1e-9
        return front[keep]
    if name == "c1_dtlz3":
        return sphere_directions(M, 2000)
    if name == "c2_dtlz2":
        dirs = sphere_directions(M, 4000)
        r = 0.4
        close_axis = np.min(
            np.stack(
                [
                    (dirs[:, j] - 1.0) ** 2 + (1.0 - dirs[:, j] ** 2) - r**2
                    for j in range(M)
                ]
            ),
            axis=0,
        )
        centered = np.sum((dirs - 1.0 / np.sqrt(M)) ** 2, axis=1) - r**2
        return dirs[np.minimum(close_axis, centered) <= 1e-9]
    if name == "c3_dtlz1":
        dirs = simplex_lattice(M, 2000)
        scale = 1.0 / (1.0 + dirs.min(axis=1))
        return dirs * scale[:, None]
    if name == "c3_dtlz4":
        dirs = sphere_directions(M, 2000)
        scale = 1.0 / np.sqrt(1.0 - 0.75 * np.max(dirs**2, axis=1))
        return dirs * scale[:, None]
    raise KeyError(name)


NAMES = ["c1_dtlz1", "c1_dtlz3", "c2_dtlz2", "c3_dtlz1", "c3_dtlz4"]
_N = {"c1_dtlz1": 7, "c1_dtlz3": 12, "c2_dtlz2": 12, "c3_dtlz1": 7, "c3_dtlz4": 12}
_Q = {"c1_dtlz1": 1, "c1_dtlz3": 1, "c2_dtlz2": 1, "c3_dtlz1": 3, "c3_dtlz4": 3}


def build(name: str, front_cache: dict) -> ProblemSpec:
    if name not in NAMES:
        raise KeyError(name)
    n = _N[name]

    def pf_sampler(k: int, _name=name) -> np.ndarray:
        if _name not in front_cache:
            front_cache[_name] = _front(_name)
        from ._support import subsample

        return subsample(front_cache[_name], k)

    return ProblemSpec(
        name=name,
        n=n,
        m=M,
        q=_Q[name],
        bounds=np.tile([0.0, 1.0], (n, 1)),
        evaluator=lambda X, _name=name: _evaluate(_name, X),
        pf_sampler=pf_sampler,
    )
