"""Exception types shared across the toolkit."""


class NfbpError(Exception):
    """Base class for all toolkit errors."""


class ZeroDistance(NfbpError):
    """Antenna and voxel are closer than the singularity guard distance."""


class WrongBranch(NfbpError):
    """Operator evaluated for a point that is not in front of the aperture (Rz >= 0)."""


class StencilCrossesPlane(NfbpError):
    """Finite-difference stencil would straddle the aperture plane Rz = 0."""


class TruncationInsufficient(NfbpError):
    """Spectral truncation radius leaves a non-negligible evanescent tail."""


class NonPlanarShift(NfbpError):
    """Array shift has an out-of-plane (z) component."""


class ScattererOnAperture(NfbpError):
    """A scatterer sits on (or too close to) an antenna position."""


class FrequencyMismatch(NfbpError):
    """Measurement sets cover different frequency lists."""


class PairingMismatch(NfbpError):
    """Measurement sets use incompatible pairing modes."""


class DimMismatch(NfbpError):
    """Array dimensions do not agree."""


class EmptyMask(NfbpError):
    """Target mask selects no voxels."""


class EmptyImage(NfbpError):
    """Image volume is identically zero; normalization is undefined."""


class ScenarioError(NfbpError):
    """Scenario file failed to parse or validate.

    ``line`` and ``column`` are 1-based positions when the underlying
    parser reported them, else None.
    """

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column
