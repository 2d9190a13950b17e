"""Exception and warning types shared across the package."""


class PoleError(ArithmeticError):
    """Transfer-function evaluation at a point where the state polynomial is singular."""


class SingularInput(ValueError):
    """An operation that needs a regular (det not identically zero) input got a singular one."""


class InterpolationResidual(RuntimeError):
    """Sampled values do not agree with a polynomial of the expected degree bound."""


class HoldoutResidual(RuntimeError):
    """Interpolated determinant failed its holdout-point consistency check."""


class NonConvergence(RuntimeError):
    """Simultaneous root iteration did not converge within the sweep budget."""


class AllSamplesSingular(RuntimeError):
    """Every sample point of an evaluable matrix function failed to evaluate."""


class ParseError(ValueError):
    """Malformed input document."""


class DimensionError(ValueError):
    """Inconsistent matrix or block dimensions."""


class IrregularWarning(UserWarning):
    """The state polynomial failed the probabilistic regularity check."""
