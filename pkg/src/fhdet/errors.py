"""Exception types shared across the package."""


class FHDetError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(FHDetError):
    """Malformed symbol/weight configuration (bad JSON, unknown keys, bad values)."""


class PoleError(FHDetError, ValueError):
    """Evaluation at a pole of the Gamma function (nonpositive integer argument)."""


class ConvergenceError(FHDetError):
    """A quadrature did not reach the requested tolerance within the panel budget."""


class HypothesisError(FHDetError, ValueError):
    """Parameters violate the validity hypotheses of an asymptotic formula."""


class DegenerateRepresentationError(FHDetError):
    """A representation has alpha_j +/- (beta_j + n_j) equal to a negative integer.

    The leading asymptotic formula vanishes identically there and does not
    describe the determinant; callers must exclude such representations.
    """

    def __init__(self, shifts, offenders):
        self.shifts = tuple(shifts)
        self.offenders = list(offenders)
        detail = ", ".join(
            f"j={j}: alpha{'+' if s > 0 else '-'}beta = {v}" for j, s, v in offenders
        )
        super().__init__(
            f"degenerate representation n={self.shifts}: {detail}"
        )


class SingularSystemError(FHDetError):
    """A moment determinant vanishes, so the orthogonal polynomial is undefined."""
