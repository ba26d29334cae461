"""Exception hierarchy for domain errors.

Everything raised on purpose by this package derives from
:class:`GaussRevertError`; malformed inputs (wrong JSON shape, bad grids)
raise plain ``ValueError`` subclasses instead, so callers can tell a
mathematical impossibility apart from a parsing problem.
"""


class GaussRevertError(Exception):
    """Base class for domain-level failures."""


class DimensionMismatch(GaussRevertError):
    """Array shapes are inconsistent with the declared mode signature."""


class DomainError(GaussRevertError):
    """A parameter lies outside its mathematical domain."""


class InvalidState(GaussRevertError):
    """A state fails its validity invariants (symmetry, uncertainty, PSD)."""


class InvalidChannel(GaussRevertError):
    """A channel fails complete positivity or trace preservation."""


class SingularX(GaussRevertError):
    """The displacement-transport matrix is singular or too ill conditioned."""


class BoundaryFamily(GaussRevertError):
    """The input family sits on the uncertainty boundary (pencil denominator
    not positive definite), so the reversal pencil is degenerate."""


class DegenerateSpectrum(GaussRevertError):
    """A reference state has (nearly) repeated eigenvalues; the local model
    is ill defined."""


class RankDeficient(GaussRevertError):
    """A reference state is (nearly) rank deficient."""


class NotPSD(GaussRevertError):
    """A perturbed state matrix left the positive semidefinite cone."""
