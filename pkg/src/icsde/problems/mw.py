"""MW constrained benchmark suite (14 instances, n=15, m in {2, 3}).

Each instance combines one of three distance functions with a front shape
and constraint set defined directly on the objective values. All
constraints are exposed in g <= 0 (satisfied) form.
"""

from __future__ import annotations

import numpy as np

from ..core import ProblemSpec
from ._support import simplex_lattice, sphere_directions, strict_front

N_VAR = 15


def _g1(X: np.ndarray, m: int) -> np.ndarray:
    n = X.shape[1]
    j = np.arange(m - 1, n)
    z = X[:, j] ** (n - m) - 0.5 - j / (2.0 * n)
    return 1.0 + np.sum(1.0 - np.exp(-10.0 * z**2), axis=1)


def _g2(X: np.ndarray, m: int) -> np.ndarray:
    n = X.shape[1]
    j = np.arange(m - 1, n)
    z = 1.0 - np.exp(-10.0 * (X[:, j] - j / n) ** 2)
    return 1.0 + np.sum(1.5 + (0.1 / n) * z**2 - 1.5 * np.cos(2 * np.pi * z), axis=1)


def _g3(X: np.ndarray, m: int) -> np.ndarray:
    j = np.arange(m - 1, X.shape[1])
    return 1.0 + np.sum(2.0 * (X[:, j] + (X[:, j - 1] - 0.5) ** 2 - 1.0) ** 2, axis=1)


def _angle(f1, f2):
    return np.arctan2(f2, f1)


# ---------------------------------------------------------------------------
# Constraint sets, written as functions of the objective values (g <= 0 ok).

def _cons_mw1(f1, f2):
    l = np.sqrt(2.0) * (f2 - f1)
    return [f1 + f2 - 1.0 - 0.5 * np.sin(2 * np.pi * l) ** 8]


def _cons_mw2(f1, f2):
    l = np.sqrt(2.0) * (f2 - f1)
    return [f1 + f2 - 1.0 - 0.5 * np.sin(3 * np.pi * l) ** 8]


def _cons_mw3(f1, f2):
    l = np.sqrt(2.0) * (f2 - f1)
    return [
        f1 + f2 - 1.05 - 0.45 * np.sin(0.75 * np.pi * l) ** 4,
        0.85 - f1 - f2 + 0.3 * np.sin(0.75 * np.pi * l) ** 2,
    ]


def _cons_mw4(f1, f2, f3):
    l = f3 - f2 - f1
    return [f1 + f2 + f3 - 1.0 - 0.4 * np.sin(2.5 * np.pi * l) ** 8]


def _cons_mw5(f1, f2):
    l = _angle(f1, f2)
    r2 = f1**2 + f2**2
    s = np.sin(6.0 * l**3)
    return [
        r2 - (1.7 - 0.2 * np.sin(2.0 * l)) ** 2,
        (1.0 + 0.5 * s) ** 2 - r2,
        (1.0 - 0.45 * s) ** 2 - r2,
    ]


def _cons_mw6(f1, f2):
    l = np.cos(6.0 * _angle(f1, f2) ** 4) ** 10
    return [(f1 / (1.0 + 0.15 * l)) ** 2 + (f2 / (1.0 + 0.75 * l)) ** 2 - 1.0]


def _cons_mw7(f1, f2):
    l = _angle(f1, f2)
    r2 = f1**2 + f2**2
    return [
        r2 - (1.2 + 0.4 * np.sin(4.0 * l) ** 16) ** 2,
        (1.15 - 0.2 * np.sin(4.0 * l) ** 8) ** 2 - r2,
    ]


def _cons_mw8(f1, f2, f3):
    r = np.sqrt(f1**2 + f2**2 + f3**2)
    l = np.arcsin(np.clip(f3 / np.where(r > 0, r, 1.0), -1.0, 1.0))
    return [r**2 - (1.25 - 0.5 * np.sin(6.0 * l) ** 2) ** 2]


def _cons_mw9(f1, f2):
    t1 = (1.0 - 0.64 * f1**2 - f2) * (1.0 - 0.36 * f1**2 - f2)
    t2 = 1.35**2 - (f1 + 0.35) ** 2 - f2
    t3 = 1.15**2 - (f1 + 0.15) ** 2 - f2
    return [np.minimum(t1, t2 * t3)]


def _cons_mw10(f1, f2):
    t1 = (2.0 - 4.0 * f1**2 - f2) * (2.0 - 8.0 * f1**2 - f2)
    t2 = (2.0 - 2.0 * f1**2 - f2) * (2.0 - 16.0 * f1**2 - f2)
    t3 = (1.0 - f1**2 - f2) * (1.2 - 1.2 * f1**2 - f2)
    return [-t1, t2, t3]


def _cons_mw11(f1, f2):
    t1 = (3.0 - f1**2 - f2) * (3.0 - 2.0 * f1**2 - f2)
    t2 = (3.0 - 0.625 * f1**2 - f2) * (3.0 - 7.0 * f1**2 - f2)
    t3 = (1.62 - 0.18 * f1**2 - f2) * (1.125 - 0.125 * f1**2 - f2)
    t4 = (2.07 - 0.23 * f1**2 - f2) * (0.63 - 0.07 * f1**2 - f2)
    return [-t1, t2, -t3, t4]


def _cons_mw12(f1, f2):
    t1 = (1.0 - 0.8 * f1 - f2 + 0.08 * np.sin(2 * np.pi * (f2 - f1 / 1.5))) * (
        1.8 - 1.125 * f1 - f2 + 0.08 * np.sin(2 * np.pi * (f2 / 1.8 - f1 / 1.6))
    )
    t2 = (1.0 - 0.625 * f1 - f2 + 0.08 * np.sin(2 * np.pi * (f2 - f1 / 1.6))) * (
        1.4 - 0.875 * f1 - f2 + 0.08 * np.sin(2 * np.pi * (f2 / 1.4 - f1 / 1.6))
    )
    return [-t1, -t2]


def _cons_mw13(f1, f2):
    w = 0.5 * np.sin(3 * np.pi * f1)
    t1 = (5.0 - np.exp(f1) - w - f2) * (5.0 - (1.0 + 0.4 * f1) - w - f2)
    t2 = (5.0 - (1.0 + f1 + 0.5 * f1**2) - w - f2) * (5.0 - (1.0 + 0.7 * f1) - w - f2)
    return [-t1, -t2]


def _mw14_cap(f_front: np.ndarray) -> np.ndarray:
    return 0.5 * np.sum(
        5.1 - f_front - 0.5 * f_front**2 - 1.5 * np.sin(1.1 * np.pi * f_front**2),
        axis=1,
    )


def _mw14_curve(f_front: np.ndarray) -> np.ndarray:
    return 0.5 * np.sum(
        6.0 - np.exp(f_front) - 1.5 * np.sin(1.1 * np.pi * f_front**2), axis=1
    )


# ---------------------------------------------------------------------------
# Evaluators.

def _evaluate(name: str, X: np.ndarray):
    X = np.asarray(X, dtype=float)
    if name == "mw1":
        g = _g1(X, 2)
        f1 = X[:, 0]
        f2 = g - 0.85 * X[:, 0]
        G = _cons_mw1(f1, f2)
    elif name == "mw2":
        g = _g2(X, 2)
        f1 = X[:, 0]
        f2 = g - X[:, 0]
        G = _cons_mw2(f1, f2)
    elif name == "mw3":
        g = _g3(X, 2)
        f1 = X[:, 0]
        f2 = g - X[:, 0]
        G = _cons_mw3(f1, f2)
    elif name == "mw4":
        g = _g1(X, 3)
        f1 = g * X[:, 0] * X[:, 1]
        f2 = g * X[:, 0] * (1.0 - X[:, 1])
        f3 = g * (1.0 - X[:, 0])
        return np.column_stack([f1, f2, f3]), np.column_stack(_cons_mw4(f1, f2, f3))
    elif name == "mw5":
        g = _g1(X, 2)
        f1 = g * X[:, 0]
        f2 = g * np.sqrt(np.maximum(1.0 - X[:, 0] ** 2, 0.0))
        G = _cons_mw5(f1, f2)
    elif name == "mw6":
        g = _g2(X, 2)
        f1 = g * X[:, 0] * 1.0999
        f2 = g * np.sqrt(np.maximum(1.21 - (1.0999 * X[:, 0]) ** 2, 0.0))
        G = _cons_mw6(f1, f2)
    elif name == "mw7":
        g = _g3(X, 2)
        f1 = g * X[:, 0]
        f2 = g * np.sqrt(np.maximum(1.0 - X[:, 0] ** 2, 0.0))
        G = _cons_mw7(f1, f2)
    elif name == "mw8":
        g = _g2(X, 3)
        c1 = np.cos(0.5 * np.pi * X[:, 0])
        f1 = g * c1 * np.cos(0.5 * np.pi * X[:, 1])
        f2 = g * c1 * np.sin(0.5 * np.pi * X[:, 1])
        f3 = g * np.sin(0.5 * np.pi * X[:, 0])
        return np.column_stack([f1, f2, f3]), np.column_stack(_cons_mw8(f1, f2, f3))
    elif name == "mw9":
        g = _g1(X, 2)
        f1 = g * X[:, 0]
        f2 = g * (1.0 - X[:, 0] ** 0.6)
        G = _cons_mw9(f1, f2)
    elif name == "mw10":
        g = _g2(X, 2)
        f1 = g * X[:, 0]
        f2 = g * (1.0 - X[:, 0] ** 2)
        G = _cons_mw10(f1, f2)
    elif name == "mw11":
        g = _g3(X, 2)
        f1 = g * X[:, 0] * np.sqrt(2.0)
        f2 = g * np.sqrt(np.maximum(2.0 - 2.0 * X[:, 0] ** 2, 0.0))
        G = _cons_mw11(f1, f2)
    elif name == "mw12":
        g = _g1(X, 2)
        f1 = g * X[:, 0]
        f2 = g * (
            0.85
            - 0.8 * X[:, 0]
            - 0.08 * np.abs(np.sin(3.2 * np.pi * X[:, 0]))
        )
        G = _cons_mw12(f1, f2)
    elif name == "mw13":
        g = _g2(X, 2)
        f1 = g * X[:, 0] * 1.5
        f2 = g * (
            5.0
            - np.exp(1.5 * X[:, 0])
            - 0.5 * np.abs(np.sin(3 * np.pi * 1.5 * X[:, 0]))
        )
        G = _cons_mw13(f1, f2)
    elif name == "mw14":
        g = _g3(X, 3)
        front = 1.5 * X[:, :2]
        f3 = g * _mw14_curve(front)
        F = np.column_stack([front, f3])
        return F, (f3 - _mw14_cap(front))[:, None]
    else:
        raise KeyError(name)
    return np.column_stack([f1, f2]), np.column_stack(G)


# ---------------------------------------------------------------------------
# True-front samplers: dense analytic candidates, feasibility filter, then a
# strict non-domination pass. Instances whose front partially lies on
# constraint boundaries get a grid-extracted boundary supplement.

_BASE = 20000


def _filter(points, cons_fn, tol=1e-9):
    points = np.asarray(points, dtype=float)
    if points.size == 0:
        return points.reshape(0, 2)
    G = np.column_stack(cons_fn(points[:, 0], points[:, 1]))
    return points[np.all(G <= tol, axis=1)]


def _boundary_grid(cons_fn, f1_max, f2_max, floor_fn, res=1500):
    """Per-column minimal feasible & attainable f2 over an objective grid."""
    f1 = np.linspace(0.0, f1_max, res)
    f2 = np.linspace(0.0, f2_max, res)
    F1, F2 = np.meshgrid(f1, f2, indexing="ij")
    flat1, flat2 = F1.ravel(), F2.ravel()
    G = np.column_stack(cons_fn(flat1, flat2))
    ok = np.all(G <= 1e-9, axis=1) & (flat2 >= floor_fn(flat1) - 1e-9)
    ok = ok.reshape(res, res)
    rows = []
    for i in range(res):
        j = np.argmax(ok[i])
        if ok[i, j]:
            rows.append((f1[i], f2[j]))
    return np.array(rows) if rows else np.empty((0, 2))


def _front(name: str) -> np.ndarray:
    t = np.linspace(0.0, 1.0, _BASE)
    if name == "mw1":
        pts = np.column_stack([t, 1.0 - 0.85 * t])
        return strict_front(_filter(pts, _cons_mw1))
    if name == "mw2":
        return strict_front(np.column_stack([t, 1.0 - t]))
    if name == "mw3":
        line = _filter(np.column_stack([t, 1.0 - t]), _cons_mw3)
        d = np.linspace(-1.2, 1.2, _BASE)
        s = 0.85 + 0.3 * np.sin(0.75 * np.pi * np.sqrt(2.0) * d) ** 2
        bnd = np.column_stack([(s - d) / 2.0, (s + d) / 2.0])
        bnd = bnd[(bnd[:, 0] >= 0) & (bnd[:, 1] >= 1.0 - bnd[:, 0] - 1e-9)]
        bnd = _filter(bnd, _cons_mw3, tol=1e-6)
        return strict_front(np.vstack([line, bnd]) if len(bnd) else line)
    if name == "mw4":
        return simplex_lattice(3, 2000)
    if name == "mw5":
        a = np.linspace(0.0, 0.5 * np.pi, _BASE)
        s = np.sin(6.0 * a**3)
        r = np.maximum.reduce([np.ones_like(s), 1.0 + 0.5 * s, 1.0 - 0.45 * s])
        pts = np.column_stack([r * np.cos(a), r * np.sin(a)])
        return strict_front(_filter(pts, _cons_mw5, tol=1e-6))
    if name == "mw6":
        f1 = 1.0999 * t
        pts = np.column_stack([f1, np.sqrt(np.maximum(1.21 - f1**2, 0.0))])
        return strict_front(_filter(pts, _cons_mw6))
    if name == "mw7":
        a = np.linspace(0.0, 0.5 * np.pi, _BASE)
        r = np.maximum(1.0, 1.15 - 0.2 * np.sin(4.0 * a) ** 8)
        pts = np.column_stack([r * np.cos(a), r * np.sin(a)])
        return strict_front(_filter(pts, _cons_mw7, tol=1e-6))
    if name == "mw8":
        dirs = sphere_directions(3, 4000)
        G = np.column_stack(_cons_mw8(dirs[:, 0], dirs[:, 1], dirs[:, 2]))
        return dirs[np.all(G <= 1e-9, axis=1)]
    if name == "mw9":
        curve = np.column_stack([t, 1.0 - t**0.6])
        pts = _filter(curve, _cons_mw9)
        floor = lambda f1: np.where(f1 <= 1.0, 1.0 - np.minimum(f1, 1.0) ** 0.6, 0.0)
        bnd = _boundary_grid(_cons_mw9, 1.8, 1.8, floor)
        return strict_front(np.vstack([pts, bnd]) if len(bnd) else pts)
    if name == "mw10":
        curve = np.column_stack([t, 1.0 - t**2])
        pts = _filter(curve, _cons_mw10)
        floor = lambda f1: np.maximum(1.0 - f1**2, 0.0)
        bnd = _boundary_grid(_cons_mw10, 1.5, 2.2, floor)
        return strict_front(np.vstack([pts, bnd]) if len(bnd) else pts)
    if name == "mw11":
        a = np.linspace(0.0, 0.5 * np.pi, _BASE)
        circ = np.sqrt(2.0) * np.column_stack([np.cos(a), np.sin(a)])
        pts = _filter(circ, _cons_mw11)
        floor = lambda f1: np.sqrt(np.maximum(2.0 - f1**2, 0.0))
        bnd = _boundary_grid(_cons_mw11, 2.2, 2.2, floor)
        return strict_front(np.vstack([pts, bnd]) if len(bnd) else pts)
    if name == "mw12":
        f2 = 0.85 - 0.8 * t - 0.08 * np.abs(np.sin(3.2 * np.pi * t))
        curve = np.column_stack([t, f2])
        pts = _filter(curve, _cons_mw12)
        floor_curve = lambda f1: np.where(
            f1 <= 1.0,
            0.85
            - 0.8 * np.minimum(f1, 1.0)
            - 0.08 * np.abs(np.sin(3.2 * np.pi * np.minimum(f1, 1.0))),
            0.0,
        )
        bnd = _boundary_grid(_cons_mw12, 1.3, 2.0, floor_curve)
        return strict_front(np.vstack([pts, bnd]) if len(bnd) else pts)
    if name == "mw13":
        f1 = 1.5 * t
        f2 = 5.0 - np.exp(f1) - 0.5 * np.abs(np.sin(3 * np.pi * f1))
        pts = _filter(np.column_stack([f1, f2]), _cons_mw13)
        floor_curve = lambda u: np.where(
            u <= 1.5,
            5.0
            - np.exp(np.minimum(u, 1.5))
            - 0.5 * np.abs(np.sin(3 * np.pi * np.minimum(u, 1.5))),
            0.0,
        )
        bnd = _boundary_grid(_cons_mw13, 2.0, 5.0, floor_curve)
        return strict_front(np.vstack([pts, bnd]) if len(bnd) else pts)
    if name == "mw14":
        axis = np.linspace(0.0, 1.5, 90)
        F1, F2 = np.meshgrid(axis, axis, indexing="ij")
        front = np.column_stack([F1.ravel(), F2.ravel()])
        f3 = _mw14_curve(front)
        ok = f3 - _mw14_cap(front) <= 1e-9
        pts = np.column_stack([front, f3])[ok]
        from ..indicators import non_dominated_mask

        return pts[non_dominated_mask(pts)]
    raise KeyError(name)


_M = {"mw4": 3, "mw8": 3, "mw14": 3}
_Q = {
    "mw1": 1, "mw2": 1, "mw3": 2, "mw4": 1, "mw5": 3, "mw6": 1, "mw7": 2,
    "mw8": 1, "mw9": 1, "mw10": 3, "mw11": 4, "mw12": 2, "mw13": 2, "mw14": 1,
}
NAMES = [f"mw{i}" for i in range(1, 15)]


def build(name: str, front_cache: dict) -> ProblemSpec:
    if name not in NAMES:
        raise KeyError(name)
    m = _M.get(name, 2)

    def pf_sampler(k: int, _name=name) -> np.ndarray:
        if _name not in front_cache:
            front_cache[_name] = _front(_name)
        from ._support import subsample

        return subsample(front_cache[_name], k)

    return ProblemSpec(
        name=name,
        n=N_VAR,
        m=m,
        q=_Q[name],
        bounds=np.tile([0.0, 1.0], (N_VAR, 1)),
        evaluator=lambda X, _name=name: _evaluate(_name, X),
        pf_sampler=pf_sampler,
    )
