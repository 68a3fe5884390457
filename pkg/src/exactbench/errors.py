"""Exception hierarchy shared by all exactbench modules."""


class ExactBenchError(Exception):
    """Base class for every error raised by this package."""


class NormalizationError(ExactBenchError):
    """A grid or dataset with no nonzero values cannot be normalized."""


class FormatError(ExactBenchError):
    """A serialized artifact (grid file, model bundle) is malformed."""


class PlacementError(ExactBenchError):
    """A pattern or lesion cannot be placed inside the image."""


class CorpusError(ExactBenchError):
    """An image corpus directory is empty or unusable."""


class DegenerateHistogramError(ExactBenchError):
    """Thresholding is undefined for a constant-valued grid."""


class ShapeError(ExactBenchError):
    """Array dimensions do not match the declared contract."""


class MassError(ExactBenchError):
    """Source and sink masses of a transport problem disagree."""


class TrainingDivergedError(ExactBenchError):
    """Training produced a non-finite loss."""


class MethodCompatibilityError(ExactBenchError):
    """The explanation method cannot be applied to this model kind."""


class ExplainerFailed(ExactBenchError):
    """An external explainer exited with a nonzero status."""


class ProtocolError(ExactBenchError):
    """An external explainer violated the file protocol."""


class TimeoutError(ExactBenchError):  # noqa: A001 - deliberate, scoped to this package
    """An external explainer exceeded its wall-clock deadline."""


class StoreError(ExactBenchError):
    """A challenge store operation referenced a missing or mismatched entity."""
