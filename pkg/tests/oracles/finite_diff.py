"""Central finite-difference gradients, the oracle for every analytic gradient."""

import numpy as np


def fd_gradient(f, theta: np.ndarray, h: float = 1e-5) -> np.ndarray:
    """(f(t+h e_i) - f(t-h e_i)) / 2h for every coordinate, at h=1e-5."""
    theta = np.asarray(theta, dtype=float)
    grad = np.zeros_like(theta)
    for i in range(theta.size):
        bump = np.zeros_like(theta)
        bump.flat[i] = h
        grad.flat[i] = (f(theta + bump) - f(theta - bump)) / (2.0 * h)
    return grad


def max_relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    """Componentwise |a-n| / max(|a|, |n|, 1e-6), maximized.

    The 1e-6 floor keeps near-zero components from turning finite-difference
    roundoff (~1e-11 absolute) into spurious relative error.
    """
    analytic = np.asarray(analytic, dtype=float).ravel()
    numeric = np.asarray(numeric, dtype=float).ravel()
    denom = np.maximum(np.maximum(np.abs(analytic), np.abs(numeric)), 1e-6)
    return float(np.max(np.abs(analytic - numeric) / denom))
