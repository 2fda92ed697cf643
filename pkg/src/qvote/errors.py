"""Exception hierarchy shared by all qvote modules."""


class QVoteError(Exception):
    """Base class for every error raised by qvote."""


class DimensionError(QVoteError, ValueError):
    """Operands have incompatible or invalid shapes."""


class DensityError(QVoteError, ValueError):
    """A matrix failed density-operator validation."""

    code = "density"


class NotHermitianError(DensityError):
    code = "not-hermitian"


class TraceError(DensityError):
    code = "trace"


class NotPSDError(DensityError):
    code = "not-psd"


class NumericError(QVoteError, ArithmeticError):
    """A computed quantity left its admissible range beyond tolerance."""


class ParameterError(QVoteError, ValueError):
    """Invalid rule parameters (e.g. minority-shot weight out of bounds)."""


class DegenerateProjectionError(QVoteError, ArithmeticError):
    """Unanimity enforcement removed (almost) all probability weight."""


class SizeError(QVoteError, ValueError):
    """An exhaustive enumeration would be too large to run."""


class ScenarioError(QVoteError, ValueError):
    """Malformed or invalid scenario text.

    Parameters
    ----------
    message : str
        What went wrong.
    line : int, optional
        1-based line number in the scenario text.
    field : str, optional
        Scenario field or constraint that was violated.
    """

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
