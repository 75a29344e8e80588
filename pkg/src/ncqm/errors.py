"""Exception hierarchy.

Every library error carries a stable ``kind`` string; the CLI reports it
verbatim as ``error_kind``.
"""


class NCQMError(ValueError):
    kind = "Error"


class ParseError(NCQMError):
    kind = "Parse error"


class UnsupportedDimension(NCQMError):
    kind = "Unsupported dimension"


class DimensionMismatch(NCQMError):
    kind = "Dimension mismatch"


class SingularMatrix(NCQMError):
    kind = "Singular matrix"


class NotAntisymmetric(NCQMError):
    kind = "Not antisymmetric"


class NotSymmetric(NCQMError):
    kind = "Not symmetric"


class InadmissibleParams(NCQMError):
    kind = "Inadmissible params"


class ZeroHbar(NCQMError):
    kind = "Zero hbar"


class LabelMismatch(NCQMError):
    kind = "Label mismatch"


class DegenerateOmega(NCQMError):
    kind = "Degenerate omega"


class DegenerateLabel(NCQMError):
    kind = "Degenerate label"


class NotPositiveDefinite(NCQMError):
    kind = "Not positive definite"


class LengthMismatch(NCQMError):
    kind = "Length mismatch"


class UnsupportedStratum(NCQMError):
    kind = "Unsupported stratum"


class UnknownCommand(NCQMError):
    kind = "Unknown command"


ALL_ERRORS = (
    ParseError,
    UnsupportedDimension,
    DimensionMismatch,
    SingularMatrix,
    NotAntisymmetric,
    NotSymmetric,
    InadmissibleParams,
    ZeroHbar,
    LabelMismatch,
    DegenerateOmega,
    DegenerateLabel,
    NotPositiveDefinite,
    LengthMismatch,
    UnsupportedStratum,
    UnknownCommand,
)
