"""Vectorised float quaternion kernels on arrays with a trailing axis of 4."""
import numpy as np


def qmul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    a1, b1, c1, d1 = np.moveaxis(p, -1, 0)
    a2, b2, c2, d2 = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ],
        axis=-1,
    )


def qconj(p: np.ndarray) -> np.ndarray:
    return p * np.array([1.0, -1.0, -1.0, -1.0])


def vinner(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Inner product of K^2 vectors shaped ``(..., 2, 4)``."""
    return qmul(u[..., 0, :], qconj(v[..., 0, :])) + qmul(u[..., 1, :], qconj(v[..., 1, :]))


def vnorm_sq(u: np.ndarray) -> np.ndarray:
    return (u * u).sum(axis=(-1, -2))


def residual_sq(w: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Squared distance of offsets ``w`` from the left span of ``d``.

    ``w`` and ``d`` broadcast against each other with shape ``(..., 2, 4)``.
    Uses the residual ``w - lam d`` so the result stays accurate when ``w``
    is nearly parallel to ``d``.
    """
    d_sq = vnorm_sq(d)
    lam = vinner(w, d) / d_sq[..., None]
    lam_d = qmul(lam[..., None, :], d)
    r = w - lam_d
    return vnorm_sq(r)


def cresidual_sq(w: np.ndarray, d: np.ndarray) -> np.ndarray:
    """:func:`residual_sq` for complex vectors shaped ``(..., 2)``."""
    d_sq = (d.real ** 2 + d.imag ** 2).sum(axis=-1)
    lam = (w * d.conj()).sum(axis=-1) / d_sq
    r = w - lam[..., None] * d
    return (r.real ** 2 + r.imag ** 2).sum(axis=-1)
