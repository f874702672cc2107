"""LIRCMOP constrained benchmark suite (14 instances, n=30, m in {2, 3}).

Instances 1-4 force the distance functions into a narrow feasible band,
5-8 add large infeasible ellipses in objective space, 9-12 combine one
ellipse with a sine-wave level constraint, and 13-14 are 3-objective
spherical instances with feasible radius bands. Constraints are exposed in
g <= 0 (satisfied) form.
"""

from __future__ import annotations

import numpy as np

from ..core import ProblemSpec
from ._support import sphere_directions, strict_front

N_VAR = 30


def _g1_plain(X):
    return np.sum((X[:, 2::2] - np.sin(0.5 * np.pi * X[:, 0:1])) ** 2, axis=1)


def _g2_plain(X):
    return np.sum((X[:, 1::2] - np.cos(0.5 * np.pi * X[:, 0:1])) ** 2, axis=1)


def _g1_indexed(X):
    i = np.arange(1, N_VAR + 1)[2::2]
    return np.sum(
        (X[:, 2::2] - np.sin(0.5 * i * np.pi * X[:, 0:1] / N_VAR)) ** 2, axis=1
    )


def _g2_indexed(X):
    j = np.arange(1, N_VAR + 1)[1::2]
    return np.sum(
        (X[:, 1::2] - np.cos(0.5 * j * np.pi * X[:, 0:1] / N_VAR)) ** 2, axis=1
    )


def _band_cons(g1, g2, a=0.51, b=0.5):
    # satisfied (<= 0) when the distance values sit inside the [b, a] band
    return [-(a - g1) * (g1 - b), -(a - g2) * (g2 - b)]


def _ellipses(f1, f2, p, q, a, b, r=0.1, theta=-0.25 * np.pi):
    """Keep-out ellipse constraints: satisfied (<= 0) outside each ellipse."""
    out = []
    for pk, qk, ak, bk in zip(p, q, a, b):
        u = (f1 - pk) * np.cos(theta) - (f2 - qk) * np.sin(theta)
        v = (f1 - pk) * np.sin(theta) + (f2 - qk) * np.cos(theta)
        out.append(-(u**2 / ak**2 + v**2 / bk**2 - r))
    return out


_ELL = {
    "lircmop5": ([1.6, 2.5], [1.6, 2.5], [2, 2], [4, 8]),
    "lircmop6": ([1.8, 2.8], [1.8, 2.8], [2, 2], [8, 8]),
    "lircmop7": ([1.2, 2.25, 3.5], [1.2, 2.25, 3.5], [2, 2.5, 2.5], [6, 12, 10]),
    "lircmop8": ([1.2, 2.25, 3.5], [1.2, 2.25, 3.5], [2, 2.5, 2.5], [6, 12, 10]),
}

_WAVE = {  # (p1, q1, a1, b1, level) for the single ellipse + sine constraint
    "lircmop9": (1.4, 1.4, 1.5, 6.0, 2.0),
    "lircmop10": (1.1, 1.2, 2.0, 4.0, 1.0),
    "lircmop11": (1.2, 1.2, 1.5, 5.0, 2.1),
    "lircmop12": (1.6, 1.6, 1.5, 6.0, 2.5),
}


def _wave_cons(name, f1, f2):
    p1, q1, a1, b1, level = _WAVE[name]
    alpha = 0.25 * np.pi
    ell = _ellipses(f1, f2, [p1], [q1], [a1], [b1])[0]
    wave = (
        f1 * np.sin(alpha)
        + f2 * np.cos(alpha)
        - np.sin(4 * np.pi * (f1 * np.cos(alpha) - f2 * np.sin(alpha)))
        - level
    )
    return [ell, -wave]


def _sphere_radius_cons(name, r2):
    cons = [-(r2 - 9.0) * (r2 - 4.0), -(r2 - 3.61) * (r2 - 3.24)]
    if name == "lircmop14":
        cons.append(-(r2 - 3.0625) * (r2 - 2.56))
    return cons


def _evaluate(name: str, X: np.ndarray):
    X = np.asarray(X, dtype=float)
    x1 = X[:, 0]
    if name in ("lircmop1", "lircmop2", "lircmop3", "lircmop4"):
        g1, g2 = _g1_plain(X), _g2_plain(X)
        f1 = x1 + g1
        f2 = (1.0 - x1**2 if name in ("lircmop1", "lircmop3") else 1.0 - np.sqrt(x1)) + g2
        G = _band_cons(g1, g2)
        if name in ("lircmop3", "lircmop4"):
            G.append(0.5 - np.sin(20 * np.pi * x1))
        return np.column_stack([f1, f2]), np.column_stack(G)
    if name in ("lircmop5", "lircmop6", "lircmop7", "lircmop8"):
        g1, g2 = _g1_indexed(X), _g2_indexed(X)
        f1 = x1 + 10.0 * g1 + 0.7057
        base = 1.0 - np.sqrt(x1) if name in ("lircmop5", "lircmop7") else 1.0 - x1**2
        f2 = base + 10.0 * g2 + 0.7057
        return np.column_stack([f1, f2]), np.column_stack(
            _ellipses(f1, f2, *_ELL[name])
        )
    if name in ("lircmop9", "lircmop10", "lircmop11", "lircmop12"):
        g1, g2 = _g1_indexed(X), _g2_indexed(X)
        f1 = 1.7057 * x1 * (10.0 * g1 + 1.0)
        base = (
            1.0 - x1**2 if name in ("lircmop9", "lircmop12") else 1.0 - np.sqrt(x1)
        )
        f2 = 1.7057 * base * (10.0 * g2 + 1.0)
        return np.column_stack([f1, f2]), np.column_stack(_wave_cons(name, f1, f2))
    if name in ("lircmop13", "lircmop14"):
        g = 10.0 * np.sum((X[:, 2:] - 0.5) ** 2, axis=1)
        s = 1.7057 + g
        f1 = s * np.cos(0.5 * np.pi * x1) * np.cos(0.5 * np.pi * X[:, 1])
        f2 = s * np.cos(0.5 * np.pi * x1) * np.sin(0.5 * np.pi * X[:, 1])
        f3 = s * np.sin(0.5 * np.pi * x1)
        r2 = f1**2 + f2**2 + f3**2
        return np.column_stack([f1, f2, f3]), np.column_stack(
            _sphere_radius_cons(name, r2)
        )
    raise KeyError(name)


_BASE = 20000


def _front(name: str) -> np.ndarray:
    t = np.linspace(0.0, 1.0, _BASE)
    if name in ("lircmop1", "lircmop3"):
        pts = np.column_stack([t, 1.0 - t**2]) + 0.5
    elif name in ("lircmop2", "lircmop4"):
        pts = np.column_stack([t, 1.0 - np.sqrt(t)]) + 0.5
    if name in ("lircmop1", "lircmop2"):
        return strict_front(pts)
    if name in ("lircmop3", "lircmop4"):
        return strict_front(pts[np.sin(20 * np.pi * t) >= 0.5])
    if name in ("lircmop5", "lircmop6"):
        base = 1.0 - np.sqrt(t) if name == "lircmop5" else 1.0 - t**2
        pts = np.column_stack([t, base]) + 0.7057
        G = np.column_stack(_ellipses(pts[:, 0], pts[:, 1], *_ELL[name]))
        return strict_front(pts[np.all(G <= 0.0, axis=1)])
    if name in ("lircmop7", "lircmop8"):
        base = 1.0 - np.sqrt(t) if name == "lircmop7" else 1.0 - t**2
        pts = np.column_stack([t, base]) + 0.7057
        # inflate points trapped inside the first (front-covering) ellipse
        # radially away from the front's origin shift until they escape
        p, q, a, b = ([1.2], [1.2], [2.0], [6.0])
        for _ in range(10000):
            c1 = _ellipses(pts[:, 0], pts[:, 1], p, q, a, b)[0]
            bad = c1 > 0.0
            if not bad.any():
                break
            pts[bad] = (pts[bad] - 0.7057) * 1.001 + 0.7057
        return strict_front(pts)
    if name in ("lircmop9", "lircmop10", "lircmop11", "lircmop12"):
        if name == "lircmop11":
            return strict_front(
                np.array(
                    [
                        [1.3965, 0.1591], [1.0430, 0.5127], [0.6894, 0.8662],
                        [0.3359, 1.2198], [0.0106, 1.6016], [0.0, 2.1910],
                        [1.8730, 0.0],
                    ]
                )
            )
        if name == "lircmop12":
            return strict_front(
                np.array(
                    [
                        [1.6794, 0.4419], [1.3258, 0.7955], [0.9723, 1.1490],
                        [2.0320, 0.0990], [0.6187, 1.5026], [0.2652, 1.8562],
                        [0.0, 2.2580], [2.5690, 0.0],
                    ]
                )
            )
        base = 1.0 - t**2 if name == "lircmop9" else 1.0 - np.sqrt(t)
        pts = 1.7057 * np.column_stack([t, base])
        G = np.column_stack(_wave_cons(name, pts[:, 0], pts[:, 1]))
        pts = pts[np.all(G <= 0.0, axis=1)]
        extremes = (
            np.array([[0.0, 2.182], [1.856, 0.0]])
            if name == "lircmop9"
            else np.array([[1.747, 0.0]])
        )
        return strict_front(np.vstack([pts, extremes]))
    if name in ("lircmop13", "lircmop14"):
        radius = 1.7057 if name == "lircmop13" else np.sqrt(3.0625)
        return radius * sphere_directions(3, 2000)
    raise KeyError(name)


NAMES = [f"lircmop{i}" for i in range(1, 15)]
_Q = {
    "lircmop1": 2, "lircmop2": 2, "lircmop3": 3, "lircmop4": 3,
    "lircmop5": 2, "lircmop6": 2, "lircmop7": 3, "lircmop8": 3,
    "lircmop9": 2, "lircmop10": 2, "lircmop11": 2, "lircmop12": 2,
    "lircmop13": 2, "lircmop14": 3,
}


def build(name: str, front_cache: dict) -> ProblemSpec:
    if name not in NAMES:
        raise KeyError(name)
    m = 3 if name in ("lircmop13", "lircmop14") else 2

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
