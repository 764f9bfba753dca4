"""Closed-form algebra of generalized Gaussian functions.

Everything in this package ultimately reduces to one function class: complex
multiples of exp(-pi t.At + b.t) on R^d, with A complex symmetric and Re A
positive definite.  Translation, modulation, quadratic chirps, invertible
affine substitutions, tensor products, Fourier transforms and L2 inner
products all stay inside the class, so each operation is bookkeeping on the
triple (A, b, log c).

Amplitudes are stored as complex logarithms.  Orbit experiments move windows
hundreds of widths off center, where the plain amplitude underflows double
precision; its logarithm never does.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Gaussian",
    "GaussianSum",
    "PhaseSpacePoint",
    "unit_gaussian",
    "translate",
    "modulate",
    "chirp",
    "tensor",
    "pullback_affine",
    "conjugate",
    "fourier",
    "gauss_integral",
    "log_gauss_integral",
    "inner_product",
    "log_inner",
    "l2_norm",
    "stft_closed",
    "log_stft_modulus",
    "delta_matrix",
    "chirp_stft_modulus",
    "chirp_mp_norm",
]

_TWO_PI = 2.0 * np.pi


def _as_quad(A):
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"quadratic form must be a square matrix, got shape {A.shape}")
    scale = max(1.0, float(np.abs(A).max()))
    if np.abs(A - A.T).max() > 1e-10 * scale:
        raise ValueError("quadratic form must be symmetric")
    A = 0.5 * (A + A.T)
    if np.linalg.eigvalsh(A.real).min() <= 0.0:
        raise ValueError("real part of the quadratic form must be positive definite")
    return A


def _as_real_sym(C, dim=None):
    C = np.atleast_2d(np.asarray(C, dtype=float))
    if C.shape[0] != C.shape[1]:
        raise ValueError(f"chirp matrix must be square, got shape {C.shape}")
    if dim is not None and C.shape[0] != dim:
        raise ValueError(f"chirp matrix dimension {C.shape[0]} does not match {dim}")
    if np.abs(C - C.T).max() > 1e-10 * max(1.0, float(np.abs(C).max())):
        raise ValueError("chirp matrix must be symmetric")
    return 0.5 * (C + C.T)


class Gaussian:
    """A single generalized Gaussian c * exp(-pi t.At + b.t) on R^d."""

    __slots__ = ("quad", "lin", "log_amp")

    def __init__(self, quad, lin=None, log_amp=0.0, amplitude=None):
        self.quad = _as_quad(quad)
        d = self.quad.shape[0]
        if lin is None:
            lin = np.zeros(d)
        self.lin = np.asarray(lin, dtype=complex).reshape(d)
        if amplitude is not None:
            amp = complex(amplitude)
            if amp == 0:
                raise ValueError("amplitude must be nonzero")
            log_amp = np.log(amp)
        self.log_amp = complex(log_amp)

    @property
    def dim(self) -> int:
        return self.quad.shape[0]

    @property
    def amplitude(self) -> complex:
        return complex(np.exp(self.log_amp))

    def _points(self, t):
        t = np.asarray(t, dtype=float)
        if self.dim == 1 and (t.ndim == 0 or t.shape[-1] != 1):
            t = t[..., None]
        if t.shape[-1] != self.dim:
            raise ValueError(f"points have dimension {t.shape[-1]}, expected {self.dim}")
        return t

    def log_value(self, t):
        """Complex log of the function at points t, shape (..., d)."""
        t = self._points(t)
        quad_term = np.einsum("...i,ij,...j->...", t, self.quad, t)
        return self.log_amp - np.pi * quad_term + t @ self.lin

    def __call__(self, t):
        return np.exp(self.log_value(t))

    def __repr__(self):
        return f"Gaussian(dim={self.dim}, quad={self.quad!r}, lin={self.lin!r}, log_amp={self.log_amp!r})"


class GaussianSum:
    """Finite sum of generalized Gaussians; closed under all operations here."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        terms = tuple(terms)
        if not terms:
            raise ValueError("empty Gaussian sum")
        dims = {g.dim for g in terms}
        if len(dims) != 1:
            raise ValueError("all terms must share one dimension")
        self.terms = terms

    @property
    def dim(self) -> int:
        return self.terms[0].dim

    def __call__(self, t):
        return sum(g(t) for g in self.terms)

    def __repr__(self):
        return f"GaussianSum({len(self.terms)} terms, dim={self.dim})"


@dataclass(frozen=True)
class PhaseSpacePoint:
    """A point (x, xi) in phase space: translation x, modulation xi."""

    x: np.ndarray
    xi: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", np.atleast_1d(np.asarray(self.x, dtype=float)))
        object.__setattr__(self, "xi", np.atleast_1d(np.asarray(self.xi, dtype=float)))
        if self.x.shape != self.xi.shape:
            raise ValueError("x and xi must have the same shape")


def unit_gaussian(dim: int = 1) -> Gaussian:
    """The standard window exp(-pi |t|^2)."""
    return Gaussian(np.eye(dim))


def _map_terms(op, f):
    if isinstance(f, GaussianSum):
        return GaussianSum(op(g) for g in f.terms)
    return op(f)


def translate(f, x):
    """f(t - x)."""

    def op(g: Gaussian) -> Gaussian:
        v = np.asarray(x, dtype=float).reshape(g.dim)
        lin = g.lin + _TWO_PI * g.quad @ v
        log_amp = g.log_amp - np.pi * v @ g.quad @ v - g.lin @ v
        return Gaussian(g.quad, lin, log_amp)

    return _map_terms(op, f)


def modulate(f, xi):
    """exp(2 pi i xi.t) f(t)."""

    def op(g: Gaussian) -> Gaussian:
        w = np.asarray(xi, dtype=float).reshape(g.dim)
        return Gaussian(g.quad, g.lin + _TWO_PI * 1j * w, g.log_amp)

    return _map_terms(op, f)


def chirp(f, C):
    """N_C f = exp(-i pi t.Ct) f(t) for real symmetric C."""

    def op(g: Gaussian) -> Gaussian:
        Cm = _as_real_sym(C, g.dim)
        return Gaussian(g.quad + 1j * Cm, g.lin, g.log_amp)

    return _map_terms(op, f)


def tensor(f, g):
    """(f tensor g)(s, t) = f(s) g(t)."""
    if isinstance(f, GaussianSum) or isinstance(g, GaussianSum):
        fts = f.terms if isinstance(f, GaussianSum) else (f,)
        gts = g.terms if isinstance(g, GaussianSum) else (g,)
        return GaussianSum(tensor(a, b) for a in fts for b in gts)
    df, dg = f.dim, g.dim
    quad = np.zeros((df + dg, df + dg), dtype=complex)
    quad[:df, :df] = f.quad
    quad[df:, df:] = g.quad
    lin = np.concatenate([f.lin, g.lin])
    return Gaussian(quad, lin, f.log_amp + g.log_amp)


def pullback_affine(f, S, v):
    """f(S t + v) for real invertible S."""

    def op(g: Gaussian) -> Gaussian:
        Sm = np.asarray(S, dtype=float).reshape(g.dim, g.dim)
        if abs(np.linalg.det(Sm)) < 1e-300:
            raise ValueError("affine substitution must be invertible")
        w = np.asarray(v, dtype=float).reshape(g.dim)
        quad = Sm.T @ g.quad @ Sm
        lin = Sm.T @ (g.lin - _TWO_PI * g.quad @ w)
        log_amp = g.log_amp - np.pi * w @ g.quad @ w + g.lin @ w
        return Gaussian(quad, lin, log_amp)

    return _map_terms(op, f)


def conjugate(f):
    def op(g: Gaussian) -> Gaussian:
        return Gaussian(np.conj(g.quad), np.conj(g.lin), np.conj(g.log_amp))

    return _map_terms(op, f)


def _log_det_sqrt(A):
    """log det(A)^{1/2} on the branch continuous from positive definite A.

    The spectrum of a complex symmetric A with Re A > 0 lies in the open right
    half-plane, so the principal log of each eigenvalue is unambiguous and the
    sum is the analytic branch.
    """
    w = np.linalg.eigvals(A)
    if np.any(w.real <= 0):
        raise ValueError("quadratic form has spectrum outside the right half-plane")
    return 0.5 * np.sum(np.log(w))


def log_gauss_integral(g: Gaussian) -> complex:
    """log of integral of g over R^d."""
    if isinstance(g, GaussianSum):
        raise TypeError("use gauss_integral for sums")
    y = np.linalg.solve(g.quad, g.lin)
    return g.log_amp - _log_det_sqrt(g.quad) + (g.lin @ y) / (4.0 * np.pi)


def gauss_integral(g) -> complex:
    """Integral over R^d: c det(A)^{-1/2} exp(b.A^{-1}b / 4pi)."""
    if isinstance(g, GaussianSum):
        return complex(sum(np.exp(log_gauss_integral(t)) for t in g.terms))
    return complex(np.exp(log_gauss_integral(g)))


def _product(f: Gaussian, g: Gaussian) -> Gaussian:
    return Gaussian(f.quad + g.quad, f.lin + g.lin, f.log_amp + g.log_amp)


def log_inner(f: Gaussian, g: Gaussian) -> complex:
    """log <f, g> with the inner product conjugate-linear in g."""
    return log_gauss_integral(_product(f, conjugate(g)))


def inner_product(f, g) -> complex:
    """<f, g> = integral of f conj(g)."""
    fts = f.terms if isinstance(f, GaussianSum) else (f,)
    gts = g.terms if isinstance(g, GaussianSum) else (g,)
    return complex(sum(np.exp(log_inner(a, b)) for a in fts for b in gts))


def l2_norm(f) -> float:
    if isinstance(f, GaussianSum):
        return float(np.sqrt(max(inner_product(f, f).real, 0.0)))
    return float(np.exp(0.5 * log_inner(f, f).real))


def fourier(f):
    """Integral transform with kernel exp(-2 pi i xi.t)."""

    def op(g: Gaussian) -> Gaussian:
        Ainv = np.linalg.inv(g.quad)
        lin = -1j * Ainv @ g.lin
        log_amp = g.log_amp - _log_det_sqrt(g.quad) + (g.lin @ Ainv @ g.lin) / (4.0 * np.pi)
        return Gaussian(Ainv, lin, log_amp)

    return _map_terms(op, f)


def _split_phase_point(z, xi):
    if isinstance(z, PhaseSpacePoint):
        return z.x, z.xi
    if xi is None:
        x, w = z
        return np.atleast_1d(np.asarray(x, float)), np.atleast_1d(np.asarray(w, float))
    return np.atleast_1d(np.asarray(z, float)), np.atleast_1d(np.asarray(xi, float))


def stft_closed(f, g, z, xi=None) -> complex:
    """<f, M_xi T_x g>: the short-time transform of f with window g at (x, xi).

    z may be a PhaseSpacePoint, an (x, xi) pair, or the x part with xi passed
    separately.
    """
    x, w = _split_phase_point(z, xi)
    return inner_product(f, modulate(translate(g, x), w))


def log_stft_modulus(f: Gaussian, g: Gaussian, z, xi=None) -> float:
    x, w = _split_phase_point(z, xi)
    return float(log_inner(f, modulate(translate(g, x), w)).real)


def delta_matrix(C):
    """Covariance-form matrix of |<N_C phi, M_xi T_x phi>| on stacked (xi, x).

    With D = (4I + C^2)^{-1} the blocks are [[2D, DC], [DC, I - 2D]]; the
    modulus of the transform is det(4I+C^2)^{-1/4} exp(-pi z.Delta z).
    """
    Cm = _as_real_sym(C)
    d = Cm.shape[0]
    D = np.linalg.inv(4.0 * np.eye(d) + Cm @ Cm)
    DC = D @ Cm
    out = np.empty((2 * d, 2 * d))
    out[:d, :d] = 2.0 * D
    out[:d, d:] = DC
    out[d:, :d] = DC
    out[d:, d:] = np.eye(d) - 2.0 * D
    return out


def chirp_stft_modulus(C, z, xi=None) -> float:
    """|<N_C phi, M_xi T_x phi>| in closed form."""
    x, w = _split_phase_point(z, xi)
    Cm = _as_real_sym(C)
    d = Cm.shape[0]
    zvec = np.concatenate([w, x])
    det4 = np.linalg.det(4.0 * np.eye(d) + Cm @ Cm)
    delta = delta_matrix(Cm)
    return float(det4 ** -0.25 * np.exp(-np.pi * zvec @ delta @ zvec))


def chirp_mp_norm(C, p: float) -> float:
    """L^p norm of the chirp spectrogram: p^{-d/p} det(4I+C^2)^{1/(2p)-1/4}."""
    if not p >= 1:
        raise ValueError("p must be >= 1")
    Cm = _as_real_sym(C)
    d = Cm.shape[0]
    det4 = np.linalg.det(4.0 * np.eye(d) + Cm @ Cm)
    return float(p ** (-d / p) * det4 ** (1.0 / (2.0 * p) - 0.25))
