"""Exception hierarchy for superfrieze"""

from typing import Optional


class SuperFriezeError(Exception):
    """Base class for every error raised by the library"""


class NotInvertible(SuperFriezeError):
    """Body of a divisor is zero or not a single monomial"""


class ParityMismatch(SuperFriezeError):
    """A value does not have the parity its slot requires"""


class DimensionMismatch(SuperFriezeError):
    """Matrix or list shapes are incompatible"""


class NotInGroup(SuperFriezeError):
    """Matrix fails the OSp(1|2) relations"""


class InsufficientSupport(SuperFriezeError):
    """Sequence window too short for the requested lookback"""


class NotGeneric(SuperFriezeError):
    """An interior even frieze entry has zero body"""

    def __init__(self, message: str, index: Optional[tuple] = None):
        super().__init__(message)
        self.index = index


class RuleViolation(SuperFriezeError):
    """Elementary diamond breaks the frieze rule"""


class NotClosed(SuperFriezeError):
    """Frieze does not end with rows of 1's and 0's"""


class NotHill(SuperFriezeError):
    """Monodromy differs from diag(-1, -1, 1)"""


class NotNilpotent(SuperFriezeError):
    """Even translation part has a non-zero body"""


class UnsupportedWidth(SuperFriezeError):
    """Frieze width below 1"""


class ExpressionError(SuperFriezeError):
    """Malformed expression input

    Attributes:
        position: 0-based offset of the offending character
        text: The full input
    """

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = max(0, min(position, len(text)))
        super().__init__(
            f"{message} at position {self.position}\n"
            f"  {text}\n"
            f"  {' ' * self.position}^"
        )
        self.reason = message
