"""DASCMOP difficulty-adjustable constrained suite (9 instances, n=30).

Difficulty is controlled by a triplet (eta, zeta, gamma): eta sets the
feasible windows of a sine constraint on the position variables, zeta sets
a band the distance functions must fall into (pushing the front away from
the unconstrained optimum), and gamma scales keep-out regions in objective
space. Constraints are exposed in g <= 0 (satisfied) form.
"""

from __future__ import annotations

import numpy as np

from ..core import ProblemSpec
from ..indicators import non_dominated_mask
from ._support import strict_front

N_VAR = 30

# difficulty triplets (eta, zeta, gamma) per instance
_TRIPLET = {
    "dascmop1": (0.5, 0.5, 0.5),
    "dascmop2": (0.5, 0.5, 0.5),
    "dascmop3": (0.5, 0.5, 0.5),
    "dascmop4": (0.25, 0.25, 0.25),
    "dascmop5": (0.25, 0.25, 0.25),
    "dascmop6": (0.25, 0.25, 0.25),
    "dascmop7": (0.5, 0.5, 0.5),
    "dascmop8": (0.5, 0.5, 0.5),
    "dascmop9": (0.5, 0.5, 0.5),
}

_P = [0.0, 1.0, 0.0, 1.0, 2.0, 0.0, 1.0, 2.0, 3.0]
_QC = [1.5, 0.5, 2.5, 1.5, 0.5, 3.5, 2.5, 1.5, 0.5]
_THETA = -0.25 * np.pi


def _band_params(zeta: float):
    if zeta == 0.0:
        return 0.0, 1e30
    return 0.5, 0.5 - np.log(zeta)


def _g1(X):
    return np.sum((X[:, 2::2] - np.sin(0.5 * np.pi * X[:, 0:1])) ** 2, axis=1)


def _g2(X):
    return np.sum((X[:, 1::2] - np.cos(0.5 * np.pi * X[:, 0:1])) ** 2, axis=1)


def _ellipse_cons(f1, f2, gamma):
    r = 0.5 * gamma
    out = []
    for pk, qk in zip(_P, _QC):
        u = (f1 - pk) * np.cos(_THETA) - (f2 - qk) * np.sin(_THETA)
        v = (f1 - pk) * np.sin(_THETA) + (f2 - qk) * np.cos(_THETA)
        out.append(-(u**2 / 0.3 + v**2 / 1.2 - r))
    return out


def _base2(name, x1):
    if name in ("dascmop1", "dascmop4"):
        return 1.0 - x1**2
    if name in ("dascmop2", "dascmop5"):
        return 1.0 - np.sqrt(x1)
    return 1.0 - np.sqrt(x1) + 0.5 * np.abs(np.sin(5 * np.pi * x1))


def _front3(name, x1, x2, g):
    s = 1.0 + g
    if name == "dascmop7":
        return np.column_stack([s * x1 * x2, s * x2 * (1.0 - x1), s * (1.0 - x2)])
    f1 = s * np.cos(0.5 * np.pi * x1) * np.cos(0.5 * np.pi * x2)
    f2 = s * np.cos(0.5 * np.pi * x1) * np.sin(0.5 * np.pi * x2)
    f3 = s * np.sin(0.5 * np.pi * x1)
    return np.column_stack([f1, f2, f3])


def _sphere_center(name):
    if name == "dascmop7":
        return np.array([0.5, 0.5, 0.5])
    return np.full(3, 1.5 / np.sqrt(3.0))


def _evaluate(name: str, X: np.ndarray):
    X = np.asarray(X, dtype=float)
    eta, zeta, gamma = _TRIPLET[name]
    b = 2.0 * eta - 1.0
    d, e = _band_params(zeta)
    x1 = X[:, 0]
    if name in ("dascmop7", "dascmop8", "dascmop9"):
        x2 = X[:, 1]
        if name == "dascmop9":
            center = np.cos(0.25 * np.pi * (x1 + x2))[:, None]
            g = np.sum((X[:, 2:] - center) ** 2, axis=1)
        else:
            g = np.sum((X[:, 2:] - 0.5) ** 2, axis=1)
        F = _front3(name, x1, x2, g)
        c = _sphere_center(name)
        keep_out = -(np.sum((F - c) ** 2, axis=1) - 0.5 * gamma)
        G = [
            b - np.sin(20 * np.pi * x1),
            b - np.cos(20 * np.pi * x2),
            -(e - g) * (g - d),
            keep_out,
        ]
        return F, np.column_stack(G)
    g1, g2 = _g1(X), _g2(X)
    f1 = x1 + g1
    f2 = _base2(name, x1) + g2
    G = [
        b - np.sin(20 * np.pi * x1),
        -(e - g1) * (g1 - d),
        -(e - g2) * (g2 - d),
    ] + _ellipse_cons(f1, f2, gamma)
    return np.column_stack([f1, f2]), np.column_stack(G)


def _front(name: str) -> np.ndarray:
    eta, zeta, gamma = _TRIPLET[name]
    b = 2.0 * eta - 1.0
    d, _ = _band_params(zeta)
    if name in ("dascmop7", "dascmop8", "dascmop9"):
        axis = np.linspace(0.0, 1.0, 140)
        X1, X2 = np.meshgrid(axis, axis, indexing="ij")
        x1, x2 = X1.ravel(), X2.ravel()
        ok = (np.sin(20 * np.pi * x1) >= b - 1e-9) & (
            np.cos(20 * np.pi * x2) >= b - 1e-9
        )
        F = _front3(name, x1[ok], x2[ok], np.full(ok.sum(), d))
        c = _sphere_center(name)
        F = F[np.sum((F - c) ** 2, axis=1) >= 0.5 * gamma - 1e-9]
        return F[non_dominated_mask(F)]
    x1 = np.linspace(0.0, 1.0, 20000)
    x1 = x1[np.sin(20 * np.pi * x1) >= b - 1e-9]
    f1 = x1 + d
    f2 = _base2(name, x1) + d
    G = np.column_stack(_ellipse_cons(f1, f2, gamma))
    pts = np.column_stack([f1, f2])[np.all(G <= 1e-9, axis=1)]
    return strict_front(pts)


NAMES = [f"dascmop{i}" for i in range(1, 10)]


def build(name: str, front_cache: dict) -> ProblemSpec:
    if name not in NAMES:
        raise KeyError(name)
    m = 3 if name in ("dascmop7", "dascmop8", "dascmop9") else 2
    q = 4 if m == 3 else 12

    def pf_sampler(k: int, _name=name) -> np.ndarray:
        if _name not in front_cache:
            front_cache[_name] = _front(_name)
        from ._support import subsample

        return subsample(front_cache[_name], k)

    return ProblemSpec(
        name=name,
        n=N_VAR,
        m=m,
        q=q,
        bounds=np.tile([0.0, 1.0], (N_VAR, 1)),
        evaluator=lambda X, _name=name: _evaluate(_name, X),
        pf_sampler=pf_sampler,
    )
