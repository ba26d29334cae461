"""Dense-matrix helpers shared across the package.

All positivity decisions in this package go through complex Hermitian
eigendecomposition (never Cholesky), because the objects of interest sit
exactly on the boundary of the PSD cone in the generic case.
"""

import numpy as np


def symmetrize(a: np.ndarray) -> np.ndarray:
    """Exactly symmetric part (a + a.T) / 2 of a real matrix."""
    return 0.5 * (a + a.T)


def hermitize(a: np.ndarray) -> np.ndarray:
    """Exactly Hermitian part (a + a^dagger) / 2."""
    return 0.5 * (a + a.conj().T)


def min_eigval(a: np.ndarray) -> float:
    """Smallest eigenvalue of the Hermitian part of ``a``."""
    return float(np.linalg.eigvalsh(hermitize(a))[0])


def max_eigval(a: np.ndarray) -> float:
    """Largest eigenvalue of the Hermitian part of ``a``."""
    return float(np.linalg.eigvalsh(hermitize(a))[-1])


def spectral_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, 2))


def cond2(a: np.ndarray) -> float:
    """2-norm condition number (inf for singular matrices)."""
    return float(np.linalg.cond(a, 2))


def inv_sqrt_psd(a: np.ndarray, floor: float) -> np.ndarray:
    """Inverse square root of a Hermitian PSD matrix.

    Eigenvalues are floored at ``floor`` before inversion; this only guards
    against roundoff for matrices that are positive definite up to noise.
    """
    lam, u = np.linalg.eigh(hermitize(a))
    lam = np.maximum(lam, floor)
    return hermitize((u * lam ** -0.5) @ u.conj().T)


def fix_column_phases(u: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-magnitude entry is real positive.

    Ties in magnitude resolve to the lowest row index, which makes the
    resulting basis (and everything derived from it) reproducible.
    """
    out = np.array(u, dtype=complex, copy=True)
    for j in range(out.shape[1]):
        i = int(np.argmax(np.abs(out[:, j])))
        piv = out[i, j]
        mag = abs(piv)
        if mag > 0.0:
            out[:, j] *= piv.conjugate() / mag
    return out


def readonly(a: np.ndarray) -> np.ndarray:
    """Return a non-writeable copy of ``a`` (keeps value types immutable)."""
    out = np.array(a, copy=True)
    out.setflags(write=False)
    return out
