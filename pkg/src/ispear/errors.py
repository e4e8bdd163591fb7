"""Exception hierarchy shared by all ispear modules."""


class IspearError(Exception):
    """Base class for every error raised by ispear."""


# corpus
class BadFormatError(IspearError):
    """WAV file is not mono 16-bit PCM RIFF/WAVE."""


class EmptyAudioError(IspearError):
    """WAV file holds zero samples."""


class ManifestParseError(IspearError):
    pass


class DuplicateRecordError(IspearError):
    pass


class ShapeMismatchError(IspearError):
    pass


class SubjectMismatchError(IspearError):
    pass


class DegenerateGroupsError(IspearError):
    pass


class BadConfigError(IspearError, ValueError):
    pass


# dsp
class NoSpeechError(IspearError):
    pass


class TooShortError(IspearError):
    pass


class UnsupportedOrderError(IspearError, ValueError):
    pass


class EmptySignalError(IspearError, ValueError):
    pass


# stats
class DomainError(IspearError, ValueError):
    pass


class RankDeficientError(IspearError):
    pass


class SingularGroupError(IspearError):
    pass


class NotNestedError(IspearError):
    pass


class DataMismatchError(IspearError):
    pass


class UnknownColumnError(IspearError, KeyError):
    pass


# ml
class BothClassesRequiredError(IspearError):
    pass


class DivergedLossError(IspearError):
    pass


class TooFewSamplesError(IspearError):
    pass


class DimensionMismatchError(IspearError, ValueError):
    pass


class EmptyMatrixError(IspearError, ValueError):
    pass


class ConvergenceWarning(UserWarning):
    """SMO hit its iteration budget before satisfying the KKT tolerance."""
