"""Exception hierarchy shared by all spinorframe modules."""


class SpinorFrameError(Exception):
    """Base class for every error raised by this package."""


class ZeroSpinor(SpinorFrameError):
    pass


class ZeroTriad(SpinorFrameError):
    pass


class NotOrthonormal(SpinorFrameError):
    pass


class InvalidSpec(SpinorFrameError):
    pass


class VanishingSpeed(SpinorFrameError):
    pass


class CurvatureVanishes(SpinorFrameError):
    pass


class OffSurface(SpinorFrameError):
    pass


class DegenerateNormal(SpinorFrameError):
    pass


class TangentMismatch(SpinorFrameError):
    pass


class BadGrid(SpinorFrameError):
    pass


class NonFiniteState(SpinorFrameError):
    pass


class ScenarioInvalid(SpinorFrameError):
    pass


class ParseError(SpinorFrameError):
    pass


class SchemaError(SpinorFrameError):
    """Config document failed validation; ``path`` is a JSON pointer."""

    def __init__(self, message, path="/"):
        super().__init__(f"{path}: {message}")
        self.path = path
