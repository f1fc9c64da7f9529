"""Exception hierarchy for the texture descriptor pipeline.

Every error carries a machine-readable ``code`` that the command line
front end prints as ``<code>: <message>`` before exiting with status 2.
"""


class FractexError(Exception):
    """Base class for all pipeline errors."""

    code = "Error"


class UnsupportedFormatError(FractexError):
    """Input file is not a raster format this package reads."""

    code = "UnsupportedFormat"


class CorruptImageError(FractexError):
    """Image header and payload disagree (dimensions, pixel count, range)."""

    code = "CorruptImage"


class InvalidGridError(FractexError):
    """Window grid does not fit inside the image."""

    code = "InvalidGrid"


class EmptyDatasetError(FractexError):
    """Dataset root resolved to zero samples."""

    code = "EmptyDataset"


class RaggedDatasetError(FractexError):
    """Classes have unequal sample counts."""

    code = "RaggedDataset"


class VolumeTooLargeError(FractexError):
    """Padded dilation volume exceeds the configured voxel cap."""

    code = "VolumeTooLarge"


class CurveTooShortError(FractexError):
    """Curve has too few samples for the requested operation."""

    code = "CurveTooShort"


class DegenerateFitError(FractexError):
    """Least-squares fit is undefined (no variance along the abscissa)."""

    code = "DegenerateFit"


class InvalidScaleError(FractexError):
    """Gaussian scale parameter must be positive."""

    code = "InvalidScale"


class ClassTooSmallError(FractexError):
    """A class has too few samples to split."""

    code = "ClassTooSmall"


class SingularCovarianceError(FractexError):
    """Pooled covariance is not invertible at working precision."""

    code = "SingularCovariance"


class DimensionMismatchError(FractexError):
    """Feature dimension differs from the fitted model."""

    code = "DimensionMismatch"


class LengthMismatchError(FractexError):
    """Paired sequences have different lengths."""

    code = "LengthMismatch"


class InvalidFeatureError(FractexError):
    """Feature matrix contains non-finite or malformed values."""

    code = "InvalidFeature"


class InvalidConfigError(FractexError):
    """Configuration file or parameter value is not acceptable."""

    code = "InvalidConfig"


class InvalidLayoutError(FractexError):
    """Dataset layout rule cannot resolve a class for a file."""

    code = "InvalidLayout"
