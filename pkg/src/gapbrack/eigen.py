"""Dense Hermitian eigenvalues by cyclic Jacobi rotations.

A complex Hermitian ``H = X + iY`` is diagonalised through its real symmetric
embedding ``[[X, -Y], [Y, X]]``, whose spectrum is that of ``H`` with every
eigenvalue doubled.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

HERMITIAN_TOL = 1e-12
DEFAULT_TOL = 1e-10
MAX_SWEEPS = 100


class EigenError(ArithmeticError):
    """Raised when the input is not Hermitian or the iteration fails to converge."""


def check_hermitian(h: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise EigenError(f"expected a square matrix, got shape {h.shape}")
    if h.size and np.max(np.abs(h - h.conj().T)) > tol * max(1.0, float(np.max(np.abs(h)))):
        raise EigenError("matrix is not Hermitian within tolerance")
    return h


def real_embedding(h: np.ndarray) -> np.ndarray:
    x, y = h.real, h.imag
    return np.block([[x, -y], [y, x]])


@njit(cache=True, nogil=True)
def _jacobi_sweeps(a, target, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        if math.sqrt(off) < target:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
    return -1


def jacobi_symmetric(a: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, ascending.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * ||a||_F``; by Weyl's inequality every returned value is then within
    that distance of an exact eigenvalue.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return np.zeros(n)
    if _jacobi_sweeps(a, tol * scale, MAX_SWEEPS) < 0:
        raise EigenError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")
    return np.sort(np.diag(a))


def hermitian_eigenvalues(h: np.ndarray, tol: float = DEFAULT_TOL, method: str = "jacobi") -> np.ndarray:
    """All eigenvalues of a Hermitian matrix in ascending order.

    ``method="jacobi"`` runs the in-package solver on the real embedding and
    keeps every second value of the doubled spectrum; ``method="lapack"``
    delegates to :func:`numpy.linalg.eigvalsh`.
    """
    h = check_hermitian(h)
    if method == "lapack":
        return np.linalg.eigvalsh(h)
    if method != "jacobi":
        raise ValueError(f"unknown eigensolver {method!r}")
    if not np.iscomplexobj(h) or not np.any(h.imag):
        return jacobi_symmetric(h.real, tol)
    doubled = jacobi_symmetric(real_embedding(h), tol)
    return doubled[::2].copy()
