"""Five nilpotent Lie groups in global polynomial coordinates.

Each group is R^n with a polynomial product.  Four of the laws are written
out explicitly; the seventh-dimensional one is generated from its structure
constants through the Baker-Campbell-Hausdorff series in coordinates of the
second kind (ordered exponentials e^{c1 E1} ... e^{c7 E7}), which is the
parametrization its Schroedinger-type representation expects.

All operations broadcast over leading axes, so lattice and sampling code can
push 10^4 points through at once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "GROUPS",
    "GroupSpec",
    "group_spec",
    "identity",
    "multiply",
    "inverse",
    "commutator",
    "section",
    "project",
    "quotient_multiply",
    "quotient_inverse",
    "axis_point",
    "structure_constants",
    "bracket_check",
    "jacobian_check",
]

GROUPS = ("heisenberg", "g6_16", "g5_3", "g6_19", "dynin_folland")


@dataclass(frozen=True)
class GroupSpec:
    name: str
    total_dim: int
    center_dim: int
    heisenberg_d: int = 0

    @property
    def center_indices(self) -> tuple[int, ...]:
        if self.name == "heisenberg":
            return (self.total_dim - 1,)
        return tuple(range(self.center_dim))

    @property
    def quotient_dim(self) -> int:
        return self.total_dim - self.center_dim

    @property
    def noncenter_indices(self) -> tuple[int, ...]:
        c = set(self.center_indices)
        return tuple(i for i in range(self.total_dim) if i not in c)


def group_spec(name: str, heisenberg_d: int = 1) -> GroupSpec:
    if name == "heisenberg":
        if heisenberg_d < 1:
            raise ValueError("heisenberg_d must be >= 1")
        return GroupSpec("heisenberg", 2 * heisenberg_d + 1, 1, heisenberg_d)
    table = {"g6_16": (6, 2), "g5_3": (5, 1), "g6_19": (6, 2), "dynin_folland": (7, 1)}
    if name not in table:
        raise ValueError(f"unknown group {name!r}; choose from {GROUPS}")
    dim, cdim = table[name]
    return GroupSpec(name, dim, cdim)


def identity(spec: GroupSpec, shape=()) -> np.ndarray:
    return np.zeros(tuple(np.atleast_1d(shape)) + (spec.total_dim,)) if shape else np.zeros(spec.total_dim)


def axis_point(dim: int, j: int, t) -> np.ndarray:
    """Coordinate-axis element(s): t e_j, with t scalar or batched."""
    t = np.asarray(t, dtype=float)
    out = np.zeros(t.shape + (dim,))
    out[..., j] = t
    return out


# ---------------------------------------------------------------------------
# explicit product laws (0-based coordinates; centers come first except for
# the Heisenberg group, whose center is the last coordinate)

def _mul_heisenberg(d, a, b):
    out = a + b
    out[..., 2 * d] += np.einsum("...i,...i->...", a[..., :d], b[..., d : 2 * d])
    return out


def _mul_g6_16(a, b):
    out = a + b
    out[..., 0] += a[..., 4] * b[..., 2] + a[..., 5] * b[..., 3]
    out[..., 1] += a[..., 5] * b[..., 4]
    return out


def _mul_g5_3(a, b):
    out = a + b
    out[..., 0] += a[..., 3] * b[..., 2] + a[..., 4] * b[..., 1] + 0.5 * a[..., 4] ** 2 * b[..., 3]
    out[..., 1] += a[..., 4] * b[..., 3]
    return out


def _mul_g6_19(a, b):
    out = a + b
    out[..., 0] += a[..., 5] * b[..., 2]
    out[..., 1] += a[..., 4] * b[..., 3] + a[..., 4] * a[..., 5] * b[..., 4] + 0.5 * a[..., 5] * b[..., 4] ** 2
    out[..., 3] += a[..., 5] * b[..., 4]
    return out


# ---------------------------------------------------------------------------
# the 7-dimensional group: BCH in second-kind coordinates
# basis order (Z, Y1, Y2, Y3, X1, X2, X3) = (E0, ..., E6)

def _df_structure() -> np.ndarray:
    C = np.zeros((7, 7, 7))
    table = [
        (6, 1, 0, 1.0),   # [X3, Y1] = Z
        (5, 2, 0, 1.0),   # [X2, Y2] = Z
        (4, 3, 0, 1.0),   # [X1, Y3] = Z
        (5, 3, 1, 0.5),   # [X2, Y3] = Y1/2
        (6, 3, 2, -0.5),  # [X3, Y3] = -Y2/2
        (6, 5, 4, 1.0),   # [X3, X2] = X1
    ]
    for i, j, k, c in table:
        C[i, j, k] += c
        C[j, i, k] -= c
    return C


_DF_C = _df_structure()


def _df_bracket(u, v):
    m = np.tensordot(u, _DF_C, axes=(-1, 0))
    return np.matmul(v[..., None, :], m)[..., 0, :]


def _df_bch(u, v):
    """Baker-Campbell-Hausdorff product; exact here since the algebra is 3-step."""
    w = _df_bracket(u, v)
    return u + v + 0.5 * w + (_df_bracket(u, w) - _df_bracket(v, w)) / 12.0


def _df_log(c):
    """Algebra element of the ordered product e^{c0 E0} ... e^{c6 E6}."""
    c = np.asarray(c, dtype=float)
    W = np.zeros_like(c)
    W[..., 0] = c[..., 0]
    for j in range(1, 7):
        V = np.zeros_like(c)
        V[..., j] = c[..., j]
        W = _df_bch(W, V)
    return W


def _df_coords(W):
    """Inverse of _df_log: peel ordered-exponential coordinates off the top.

    Works because every prefix span of the basis is an ideal, so brackets
    never feed the coordinate currently being peeled.
    """
    W = np.array(W, dtype=float)
    out = np.empty_like(W)
    for j in range(6, -1, -1):
        out[..., j] = W[..., j]
        V = np.zeros_like(W)
        V[..., j] = -out[..., j]
        W = _df_bch(W, V)
    return out


def _mul_df(a, b):
    return _df_coords(_df_bch(_df_log(a), _df_log(b)))


# ---------------------------------------------------------------------------

def multiply(spec: GroupSpec, a, b) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[-1] != spec.total_dim or b.shape[-1] != spec.total_dim:
        raise ValueError(f"expected trailing dimension {spec.total_dim}")
    a, b = np.broadcast_arrays(a, b)
    a = a.copy()
    if spec.name == "heisenberg":
        return _mul_heisenberg(spec.heisenberg_d, a, b)
    if spec.name == "g6_16":
        return _mul_g6_16(a, b)
    if spec.name == "g5_3":
        return _mul_g5_3(a, b)
    if spec.name == "g6_19":
        return _mul_g6_19(a, b)
    return _mul_df(a, b)


def inverse(spec: GroupSpec, a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if spec.name == "dynin_folland":
        return _df_coords(-_df_log(a))
    # Coordinate i of a product is a_i + b_i + P_i with P_i depending only on
    # coordinates the sweep has already fixed, so one sweep solves a.y = 0.
    y = -a.copy()
    order = range(spec.total_dim) if spec.name == "heisenberg" else reversed(range(spec.total_dim))
    for i in order:
        y[..., i] -= multiply(spec, a, y)[..., i]
    return y


def commutator(spec: GroupSpec, a, b) -> np.ndarray:
    ab = multiply(spec, a, b)
    return multiply(spec, ab, multiply(spec, inverse(spec, a), inverse(spec, b)))


def section(spec: GroupSpec, q) -> np.ndarray:
    """Lift quotient coordinates to the group, central part set to zero."""
    q = np.asarray(q, dtype=float)
    if q.shape[-1] != spec.quotient_dim:
        raise ValueError(f"expected trailing dimension {spec.quotient_dim}")
    out = np.zeros(q.shape[:-1] + (spec.total_dim,))
    out[..., list(spec.noncenter_indices)] = q
    return out


def project(spec: GroupSpec, a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return a[..., list(spec.noncenter_indices)]


def quotient_multiply(spec: GroupSpec, qa, qb) -> np.ndarray:
    return project(spec, multiply(spec, section(spec, qa), section(spec, qb)))


def quotient_inverse(spec: GroupSpec, qa) -> np.ndarray:
    return project(spec, inverse(spec, section(spec, qa)))


# ---------------------------------------------------------------------------
# declared structure constants, and the numeric checks against the laws

def structure_constants(spec: GroupSpec) -> np.ndarray:
    n = spec.total_dim
    C = np.zeros((n, n, n))

    def put(i, j, k, c):
        C[i, j, k] += c
        C[j, i, k] -= c

    if spec.name == "heisenberg":
        d = spec.heisenberg_d
        for i in range(d):
            put(i, d + i, 2 * d, 1.0)
    elif spec.name == "g6_16":
        put(4, 2, 0, 1.0)
        put(5, 3, 0, 1.0)
        put(5, 4, 1, 1.0)
    elif spec.name == "g5_3":
        put(3, 2, 0, 1.0)
        put(4, 1, 0, 1.0)
        put(4, 3, 1, 1.0)
    elif spec.name == "g6_19":
        put(5, 2, 0, 1.0)
        put(4, 3, 1, 1.0)
        put(5, 4, 3, 1.0)
    else:
        return _DF_C.copy()
    return C


def bracket_check(spec: GroupSpec, step: float = 1e-3) -> dict:
    """Structure constants from group commutators vs the declared table.

    Richardson-extrapolated: with c(h) = commutator(h e_i, h e_j)/h^2, the
    estimate 2 c(h) - c(2h) removes the O(h) term.
    """
    n = spec.total_dim
    declared = structure_constants(spec)
    worst = 0.0
    pairs = 0
    for i in range(n):
        for j in range(i + 1, n):
            def est(h):
                return commutator(spec, axis_point(n, i, h), axis_point(n, j, h)) / h**2

            num = 2.0 * est(step) - est(2.0 * step)
            worst = max(worst, float(np.abs(num - declared[i, j]).max()))
            pairs += 1
    return {"max_error": worst, "pairs": pairs, "ok": worst < 1e-4}


def jacobian_check(spec: GroupSpec, n_samples: int = 40, seed: int = 0, step: float = 1e-4) -> dict:
    """|det| of left and right translation Jacobians (Haar = Lebesgue check)."""
    rng = np.random.default_rng(seed)
    n = spec.total_dim
    a = rng.uniform(-2.0, 2.0, size=(n_samples, n))
    x = rng.uniform(-2.0, 2.0, size=(n_samples, n))
    worst = {"left": 0.0, "right": 0.0}
    for side in ("left", "right"):
        J = np.empty((n_samples, n, n))
        for i in range(n):
            dx = np.zeros(n)
            dx[i] = 0.5 * step
            if side == "left":
                diff = multiply(spec, a, x + dx) - multiply(spec, a, x - dx)
            else:
                diff = multiply(spec, x + dx, a) - multiply(spec, x - dx, a)
            J[:, :, i] = diff / step
        dets = np.linalg.det(J)
        worst[side] = float(np.abs(np.abs(dets) - 1.0).max())
    return {**worst, "ok": max(worst.values()) < 1e-6}
