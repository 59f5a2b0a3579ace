"""Exception types shared across the package."""


class QDimerError(Exception):
    """Base class for all package-specific errors."""


class DomainError(QDimerError):
    """A q-deformed function was evaluated outside its admissible domain.

    For q > 1 the argument of the q-exponential must satisfy
    1 + (1-q)*x > 0; beyond that point the expression diverges, which
    signals that the caller left the admissible (beta*, E) window.
    """


class DegenerateState(QDimerError):
    """The generalized partition function vanished; no state exists."""


class SingularMap(QDimerError):
    """The pseudo-to-physical temperature map is singular at this point."""


class InsufficientGrid(QDimerError):
    """Too few sweep points for the requested analysis."""


class DivergentIntegral(QDimerError):
    """The fluctuation average does not converge for these parameters."""


class NumericalBreakdown(QDimerError):
    """An eigenvalue computation left its certified tolerance window."""


class ConfigError(QDimerError):
    """Invalid run configuration."""
