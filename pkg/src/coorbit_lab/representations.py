"""Schroedinger-type representations of the five groups on Gaussian windows.

Each representation acts by a unit phase times a chain of elementary
operators (translation, modulation, chirp, unimodular affine substitution),
so applying a group element to a generalized Gaussian stays in closed form.

omit_phase=True (the default) drops the t-independent phase prefactor, which
is how coefficient moduli and quotient integrals want it; the full phase is
kept for homomorphism tests.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .gaussian import (
    Gaussian,
    GaussianSum,
    chirp,
    inner_product,
    l2_norm,
    log_inner,
    modulate,
    pullback_affine,
    translate,
    unit_gaussian,
    tensor,
)
from .groups import GroupSpec, section

__all__ = [
    "RepSpec",
    "apply_rep",
    "rep_coefficient",
    "rep_coefficient_log_modulus",
    "quotient_coefficient_log_modulus",
    "pointwise_action",
    "default_window",
    "homogeneity_check",
    "homomorphism_check",
    "unitarity_check",
    "formal_dimension",
    "known_formal_dimension",
]

_TWO_PI_I = 2j * np.pi


@dataclass(frozen=True)
class RepSpec:
    group: GroupSpec
    lam: float = 1.0
    mu: float = 0.0
    omit_phase: bool = True

    def __post_init__(self):
        name = self.group.name
        if name == "g6_19":
            if self.lam * self.mu == 0.0:
                raise ValueError("g6_19 needs lambda * mu != 0")
        elif self.lam == 0.0:
            raise ValueError(f"{name} needs lambda != 0")
        if name not in ("g6_16", "g6_19") and self.mu != 0.0:
            raise ValueError(f"{name} does not take a mu parameter")

    @property
    def acting_dim(self) -> int:
        return {"heisenberg": self.group.heisenberg_d, "g6_16": 2, "g5_3": 2, "g6_19": 2, "dynin_folland": 3}[
            self.group.name
        ]

    def with_full_phase(self) -> "RepSpec":
        return replace(self, omit_phase=False)


def default_window(rep: RepSpec) -> Gaussian:
    return unit_gaussian(rep.acting_dim)


def _phased(f, theta: float):
    """Multiply by the unit scalar exp(2 pi i theta)."""

    def op(g: Gaussian) -> Gaussian:
        return Gaussian(g.quad, g.lin, g.log_amp + _TWO_PI_I * theta)

    if isinstance(f, GaussianSum):
        return GaussianSum(op(t) for t in f.terms)
    return op(f)


def _factors(rep: RepSpec, a):
    """Break pi(a) into (scalar phase theta, chirp C, modulation m, affine (S, v)).

    The operator is f -> e^{2 pi i theta} * M_m N_C (f o (t -> S t + v)); all
    multiplications commute, so the order among them is immaterial.
    """
    lam, mu = rep.lam, rep.mu
    name = rep.group.name
    d = rep.acting_dim
    S = np.eye(d)
    C = np.zeros((d, d))
    if name == "heisenberg":
        x, y, z = a[:d], a[d : 2 * d], a[2 * d]
        theta = lam * z
        m = -lam * y
        v = -x
    elif name == "g6_16":
        theta = lam * a[0] + mu * (a[1] - a[4] * a[5])
        m = np.array([-lam * a[2] + mu * a[5], -lam * a[3]])
        v = -a[4:6]
    elif name == "g5_3":
        theta = lam * (a[0] - a[2] * a[3])
        C = np.diag([0.0, -lam * a[3]])
        m = np.array([lam * a[3], -lam * a[1]])
        v = -np.array([a[2], a[4]])
    elif name == "g6_19":
        theta = lam * a[0] + mu * (a[1] - 0.5 * a[4] ** 2 * a[5])
        C = np.diag([mu * a[5], 0.0])
        m = np.array([mu * (-a[3] + a[4] * a[5]), -lam * a[2]])
        v = -a[4:6]
    else:  # dynin_folland, coordinates (z, y1, y2, y3, x1, x2, x3)
        z, y1, y2, y3 = a[0], a[1], a[2], a[3]
        x1, x2, x3 = a[4], a[5], a[6]
        theta = lam * z
        m = lam * np.array([y3, y2, y1])
        C[1, 2] = C[2, 1] = lam * y3 / 2.0
        S = np.array([[1.0, 0.0, x2], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
        v = np.array([x1, x2, x3])
    return theta, C, m, S, v


def apply_rep(rep: RepSpec, a, f):
    """pi(a) f for a in full group coordinates."""
    a = np.asarray(a, dtype=float).reshape(rep.group.total_dim)
    theta, C, m, S, v = _factors(rep, a)
    out = pullback_affine(f, S, v) if not np.allclose(S, np.eye(rep.acting_dim)) or np.any(v) else f
    if np.any(C):
        out = chirp(out, C)
    if np.any(m):
        out = modulate(out, m)
    if not rep.omit_phase and theta != 0.0:
        out = _phased(out, theta)
    return out


def pointwise_action(rep: RepSpec, a):
    """The displayed formula as data: (phase callable, S, v) with (pi(a) f)(t) = phase(t) f(S t + v).

    Used by the grid oracle; evaluates the written-out phase polynomial
    directly instead of composing Gaussian parameters.
    """
    a = np.asarray(a, dtype=float).reshape(rep.group.total_dim)
    lam, mu = rep.lam, rep.mu
    name = rep.group.name
    d = rep.acting_dim
    S = np.eye(d)
    if name == "heisenberg":
        x, y, z = a[:d], a[d : 2 * d], a[2 * d]
        v = -x
        const = lam * z if not rep.omit_phase else 0.0

        def phase(t):
            return np.exp(_TWO_PI_I * (const - lam * t @ y))

    elif name == "g6_16":
        v = -a[4:6]
        const = lam * a[0] + mu * (a[1] - a[4] * a[5]) if not rep.omit_phase else 0.0

        def phase(t):
            s, tau = t[..., 0], t[..., 1]
            return np.exp(_TWO_PI_I * (const - lam * (a[2] * s + a[3] * tau) + mu * a[5] * s))

    elif name == "g5_3":
        v = -np.array([a[2], a[4]])
        const = lam * (a[0] - a[2] * a[3]) if not rep.omit_phase else 0.0

        def phase(t):
            s, tau = t[..., 0], t[..., 1]
            return np.exp(_TWO_PI_I * (const + lam * (a[3] * s - a[1] * tau + 0.5 * a[3] * tau**2)))

    elif name == "g6_19":
        v = -a[4:6]
        const = lam * a[0] + mu * (a[1] - 0.5 * a[4] ** 2 * a[5]) if not rep.omit_phase else 0.0

        def phase(t):
            s, tau = t[..., 0], t[..., 1]
            return np.exp(
                _TWO_PI_I * (const - lam * a[2] * tau + mu * (-a[3] * s + a[4] * a[5] * s - 0.5 * a[5] * s**2))
            )

    else:  # dynin_folland
        z, y1, y2, y3 = a[0], a[1], a[2], a[3]
        x1, x2, x3 = a[4], a[5], a[6]
        S = np.array([[1.0, 0.0, x2], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
        v = np.array([x1, x2, x3])
        const = lam * z if not rep.omit_phase else 0.0

        def phase(t):
            w1, w2, w3 = t[..., 0], t[..., 1], t[..., 2]
            return np.exp(_TWO_PI_I * (const + lam * (w3 * y1 + w2 * y2 + w1 * y3 - 0.5 * w3 * w2 * y3)))

    return phase, S, v


def rep_coefficient(rep: RepSpec, a, f, g) -> complex:
    """<f, pi(a) g> in closed form."""
    return inner_product(f, apply_rep(rep, a, g))


def rep_coefficient_log_modulus(rep: RepSpec, a, f: Gaussian, g: Gaussian) -> float:
    """log |<f, pi(a) g>|, safe far outside the windows' joint support."""
    return float(log_inner(f, apply_rep(rep, a, g)).real)


def quotient_coefficient_log_modulus(rep: RepSpec, q, f: Gaussian, g: Gaussian) -> float:
    """Same, with the argument given in quotient coordinates (central part 0)."""
    return rep_coefficient_log_modulus(rep, section(rep.group, q), f, g)


# ---------------------------------------------------------------------------
# self-tests used by the acceptance suite

def _compare_gaussians(u: Gaussian, v: Gaussian, ignore_global_phase: bool) -> float:
    scale = max(1.0, float(np.abs(u.quad).max()), float(np.abs(u.lin).max()), abs(u.log_amp))
    err = max(float(np.abs(u.quad - v.quad).max()), float(np.abs(u.lin - v.lin).max()))
    diff = u.log_amp - v.log_amp
    if ignore_global_phase:
        err = max(err, abs(diff.real))
    else:
        wrapped = (diff.imag + np.pi) % (2.0 * np.pi) - np.pi
        err = max(err, abs(diff.real), abs(wrapped))
    return err / scale


def homomorphism_check(rep: RepSpec, n_pairs: int = 500, seed: int = 0, box: float = 2.0) -> dict:
    """pi(a) pi(b) g versus pi(ab) g on random pairs.

    With the full phase the two Gaussians must agree exactly; with the phase
    omitted they agree up to a constant phase.
    """
    from .groups import multiply

    rng = np.random.default_rng(seed)
    g = default_window(rep)
    n = rep.group.total_dim
    worst = 0.0
    for _ in range(n_pairs):
        a = rng.uniform(-box, box, n)
        b = rng.uniform(-box, box, n)
        lhs = apply_rep(rep, a, apply_rep(rep, b, g))
        rhs = apply_rep(rep, multiply(rep.group, a, b), g)
        worst = max(worst, _compare_gaussians(lhs, rhs, rep.omit_phase))
    return {"max_error": worst, "pairs": n_pairs, "ok": worst < 1e-10}


def unitarity_check(rep: RepSpec, n_samples: int = 100, seed: int = 0, box: float = 3.0) -> dict:
    rng = np.random.default_rng(seed)
    g = Gaussian(
        np.eye(rep.acting_dim) * 1.3,
        rng.uniform(-0.5, 0.5, rep.acting_dim) + 1j * rng.uniform(-0.5, 0.5, rep.acting_dim),
    )
    ref = l2_norm(g)
    worst = 0.0
    for _ in range(n_samples):
        a = rng.uniform(-box, box, rep.group.total_dim)
        worst = max(worst, abs(l2_norm(apply_rep(rep, a, g)) - ref) / ref)
    return {"max_error": worst, "samples": n_samples, "ok": worst < 1e-10}


def homogeneity_check(rep: RepSpec, n_points: int = 50, seed: int = 0) -> dict:
    """Scaling relation special to the 5-dimensional group: the coefficient
    modulus at parameter lam equals the lam=1 modulus at rescaled section
    coordinates (lam x2, x3, lam x4, x5)."""
    if rep.group.name != "g5_3":
        raise ValueError("homogeneity_check applies to g5_3 only")
    rng = np.random.default_rng(seed)
    base = RepSpec(rep.group, 1.0)
    f = tensor(Gaussian(1.4, 0.3), unit_gaussian(1))
    g = default_window(rep)
    worst = 0.0
    pairs = []
    for _ in range(n_points):
        q = rng.uniform(-1.5, 1.5, 4)
        scaled = np.array([rep.lam * q[0], q[1], rep.lam * q[2], q[3]])
        lhs = np.exp(quotient_coefficient_log_modulus(rep, q, f, g))
        rhs = np.exp(quotient_coefficient_log_modulus(base, scaled, f, g))
        pairs.append((lhs, rhs))
        worst = max(worst, abs(lhs - rhs) / max(abs(rhs), 1e-300))
    return {"max_rel_error": worst, "pairs": pairs, "ok": worst < 1e-10}


def formal_dimension(rep: RepSpec, g=None, box_half: float = 8.0, resolution: float = 0.125) -> float:
    """d_pi estimate from the orthogonality relation: ||g||^4 / int |V_g g|^2.

    Raises when the tail outside the truncation box exceeds 1% of the
    integral.
    """
    from .coorbit import NormSpec, coorbit_norm_log

    if g is None:
        g = default_window(rep)
    spec = NormSpec(p=2.0, box_half=box_half, resolution=resolution)
    log_sq = 2.0 * coorbit_norm_log(rep, g, g, spec, tail="raise", tail_tol=0.01)
    return float(np.exp(4.0 * np.log(l2_norm(g)) - log_sq))


def known_formal_dimension(rep: RepSpec) -> float | None:
    """Closed-form formal dimension where one exists; None for the 7-dimensional group."""
    name = rep.group.name
    if name == "heisenberg":
        return abs(rep.lam) ** rep.group.heisenberg_d
    if name in ("g6_16", "g5_3"):
        return rep.lam**2
    if name == "g6_19":
        return abs(rep.lam * rep.mu)
    return None
