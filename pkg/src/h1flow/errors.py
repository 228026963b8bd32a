"""Exception types shared across the package."""


class DegenerateCurve(ValueError):
    """A curve with a zero-length edge was passed where an immersion is required."""


class OutOfDomain(ValueError):
    """Scalar argument outside the mathematical domain of the function."""


class ConstantMapGuard(ValueError):
    """Curve length below the kernel guard; the metric degenerates there."""


class MismatchedFrames(ValueError):
    """Frames of a path disagree in vertex count."""


class NonMonotoneTwist(ValueError):
    """Reparametrization profile is not an orientation-preserving circle bijection."""
