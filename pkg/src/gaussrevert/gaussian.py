"""Moment-level hybrid quantum-classical Gaussian states and channels.

A system of K bosonic modes and C classical real coordinates has
N = 2K + C canonical coordinates with block-diagonal symplectic form

    Omega = Diag(sigma, ..., sigma, 0_C),   sigma = [[0, 1], [-1, 0]],

one sigma block per mode followed by a C x C zero block.  A Gaussian state
is fully described by its mean vector M and symmetric covariance matrix V,
subject to the uncertainty principle V + (i/2) Omega >= 0.  A Gaussian
channel is a pair of real matrices (X, Y) acting on moments as

    M -> X^T M,      V -> X^T V X + Y,

and is completely positive iff Y + (i/2)(Omega - X^T Omega X) >= 0 as a
complex Hermitian matrix.  The factor i/2 matches the uncertainty
convention above and is used uniformly.

States and channels are immutable values; every operation here is a pure
function, so the module is safe for concurrent use.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidChannel, InvalidState
from .linalg import min_eigval, readonly, spectral_norm, symmetrize

_SYM_ATOL = 1e-12


@dataclass(frozen=True)
class Tolerances:
    """Numerical knobs shared across the solvers.

    Attributes:
        psd_tol: relative eigenvalue tolerance for PSD tests.
        cond_max: condition-number cap beyond which a matrix counts as
            singular for inversion purposes.
        bisect_tol: absolute tolerance on the rescaling factor k in the
            bisection oracle.
    """

    psd_tol: float = 1e-10
    cond_max: float = 1e12
    bisect_tol: float = 1e-10

    def __post_init__(self):
        if not (self.psd_tol > 0 and self.cond_max > 0 and self.bisect_tol > 0):
            raise ValueError("all tolerances must be strictly positive")


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class ModeSignature:
    """Shape of a hybrid system: K bosonic modes plus C classical coordinates."""

    K: int
    C: int

    def __post_init__(self):
        if self.K < 0 or self.C < 0 or self.N < 1:
            raise ValueError(f"invalid mode signature K={self.K}, C={self.C}")

    @property
    def N(self) -> int:
        return 2 * self.K + self.C

    def omega(self) -> np.ndarray:
        """The N x N symplectic form Diag(sigma, ..., sigma, 0_C)."""
        out = np.zeros((self.N, self.N))
        for m in range(self.K):
            out[2 * m, 2 * m + 1] = 1.0
            out[2 * m + 1, 2 * m] = -1.0
        return out


def _as_square(a, n: int, name: str) -> np.ndarray:
    a = np.array(a, dtype=float, copy=True)
    if a.shape != (n, n):
        raise DimensionMismatch(f"{name} must be {n}x{n}, got {a.shape}")
    return a


def _as_symmetric(a, n: int, name: str) -> np.ndarray:
    a = _as_square(a, n, name)
    scale = max(1.0, float(np.abs(a).max()))
    if np.abs(a - a.T).max() > _SYM_ATOL * scale:
        raise InvalidState(f"{name} is not symmetric")
    return symmetrize(a)


class HybridGaussianState:
    """Mean vector and covariance of a hybrid Gaussian state.

    The covariance is stored exactly symmetric; the uncertainty invariant
    V + (i/2) Omega >= 0 is checked by :func:`validate_state`, not here, so
    boundary and deliberately invalid states can be constructed and
    diagnosed.
    """

    def __init__(self, sig: ModeSignature, mean, cov):
        self.sig = sig
        m = np.array(mean, dtype=float, copy=True).reshape(-1)
        if m.shape != (sig.N,):
            raise DimensionMismatch(f"mean must have length {sig.N}, got {m.shape}")
        self.mean = readonly(m)
        self.cov = readonly(_as_symmetric(cov, sig.N, "cov"))

    def __repr__(self):
        return f"HybridGaussianState(K={self.sig.K}, C={self.sig.C})"


class GaussianChannel:
    """Gaussian channel (X, Y) acting on moments as M -> X^T M, V -> X^T V X + Y.

    Y is stored exactly symmetric.  Complete positivity (which implies
    Y >= 0 on real vectors) is checked by :func:`is_cp` rather than at
    construction, so candidate reversers beyond the CP boundary remain
    representable and testable.
    """

    def __init__(self, sig: ModeSignature, X, Y, sig_out: ModeSignature | None = None):
        self.sig_in = sig
        self.sig_out = sig if sig_out is None else sig_out
        if self.sig_in.N != self.sig_out.N:
            raise DimensionMismatch("input and output signatures must have equal dimension")
        self.X = readonly(_as_square(X, sig.N, "X"))
        try:
            self.Y = readonly(_as_symmetric(Y, sig.N, "Y"))
        except InvalidState:
            raise InvalidChannel("Y is not symmetric") from None

    @property
    def sig(self) -> ModeSignature:
        return self.sig_in

    def __repr__(self):
        return f"GaussianChannel(K={self.sig.K}, C={self.sig.C})"


def uncertainty_matrix(s: HybridGaussianState) -> np.ndarray:
    """The complex Hermitian matrix V + (i/2) Omega."""
    return s.cov + 0.5j * s.sig.omega()


def cp_matrix(g: GaussianChannel) -> np.ndarray:
    """The Hermitian CP certificate Y + (i/2)(Omega - X^T Omega X)."""
    om = g.sig.omega()
    return g.Y + 0.5j * (om - g.X.T @ om @ g.X)


@dataclass(frozen=True)
class StateReport:
    """Outcome of :func:`validate_state` with eigenvalue diagnostics."""

    ok: bool
    lambda_min: float
    threshold: float
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CpReport:
    """Outcome of :func:`is_cp` with the minimal certificate eigenvalue."""

    ok: bool
    lambda_min: float
    threshold: float

    def __bool__(self) -> bool:
        return self.ok


def validate_state(s: HybridGaussianState, tol: Tolerances = DEFAULT_TOL) -> StateReport:
    """Check the uncertainty invariant of a hybrid Gaussian state.

    Passes iff lambda_min(V + (i/2) Omega) >= -psd_tol * ||V||, so pure
    modes (which sit exactly at eigenvalue zero) validate cleanly.

    Args:
        s: state to check.
        tol: tolerance bundle; only ``psd_tol`` is used.

    Returns:
        A report that is truthy on PASS and lists violated invariants
        otherwise.
    """
    violations = []
    if np.abs(s.cov - s.cov.T).max() != 0.0:
        violations.append("covariance not symmetric")
    lam_min = min_eigval(uncertainty_matrix(s))
    threshold = tol.psd_tol * spectral_norm(s.cov)
    if lam_min < -threshold:
        violations.append(
            f"uncertainty violated: lambda_min(V + (i/2)Omega) = {lam_min:.6e}"
        )
    return StateReport(not violations, lam_min, threshold, tuple(violations))


def is_cp(g: GaussianChannel, tol: Tolerances = DEFAULT_TOL) -> CpReport:
    """Complete-positivity test for a Gaussian channel.

    True iff lambda_min(Y + (i/2)(Omega - X^T Omega X)) >= -psd_tol (1 + ||Y||).
    """
    lam_min = min_eigval(cp_matrix(g))
    threshold = tol.psd_tol * (1.0 + spectral_norm(g.Y))
    return CpReport(lam_min >= -threshold, lam_min, threshold)


def apply(g: GaussianChannel, s: HybridGaussianState,
          tol: Tolerances = DEFAULT_TOL) -> HybridGaussianState:
    """Push a valid state through a CP channel at the moment level.

    Args:
        g: channel; must pass :func:`is_cp`.
        s: state; must pass :func:`validate_state`.

    Returns:
        The output state with mean X^T M and covariance X^T V X + Y.

    Raises:
        InvalidChannel: if the CP certificate fails.
        InvalidState: if the input state is invalid.
        DimensionMismatch: if the signatures differ.
    """
    if g.sig_in != s.sig:
        raise DimensionMismatch(
            f"channel signature {g.sig_in} does not match state signature {s.sig}")
    rep = validate_state(s, tol)
    if not rep:
        raise InvalidState("; ".join(rep.violations))
    cp = is_cp(g, tol)
    if not cp:
        raise InvalidChannel(
            f"channel is not CP: lambda_min = {cp.lambda_min:.6e} "
            f"< -{cp.threshold:.6e}")
    mean = g.X.T @ s.mean
    cov = symmetrize(g.X.T @ s.cov @ g.X + g.Y)
    return HybridGaussianState(g.sig_out, mean, cov)


def compose(g_after: GaussianChannel, g_before: GaussianChannel) -> GaussianChannel:
    """Composite channel applying ``g_before`` first, then ``g_after``.

    At the moment level the composite is exactly
    (X_before X_after,  X_after^T Y_before X_after + Y_after).
    """
    if g_before.sig_out.N != g_after.sig_in.N:
        raise DimensionMismatch("composed channels have incompatible dimensions")
    x = g_before.X @ g_after.X
    y = symmetrize(g_after.X.T @ g_before.Y @ g_after.X + g_after.Y)
    return GaussianChannel(g_before.sig_in, x, y, sig_out=g_after.sig_out)


def identity_channel(sig: ModeSignature) -> GaussianChannel:
    return GaussianChannel(sig, np.eye(sig.N), np.zeros((sig.N, sig.N)))


def constant_channel(sig: ModeSignature, cov) -> GaussianChannel:
    """The channel mapping every input to the centered Gaussian with covariance ``cov``."""
    return GaussianChannel(sig, np.zeros((sig.N, sig.N)), cov)
