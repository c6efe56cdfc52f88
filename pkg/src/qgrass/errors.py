"""Exception hierarchy shared by every qgrass module."""

from __future__ import annotations


class QGrassError(Exception):
    """Base class for all library errors."""


class NotPrimePower(QGrassError, ValueError):
    pass


class OrderOutOfRange(QGrassError, ValueError):
    pass


class ElementOutOfRange(QGrassError, ValueError):
    pass


class ZeroInverse(QGrassError, ZeroDivisionError):
    pass


class DimensionMismatch(QGrassError, ValueError):
    pass


class EntryOutOfRange(QGrassError, ValueError):
    pass


class RankDeficient(QGrassError, ValueError):
    pass


class AmbientMismatch(QGrassError, ValueError):
    pass


class BudgetExceeded(QGrassError, RuntimeError):
    """An enumeration would emit more subspaces than the configured budget."""

    def __init__(self, estimated: int, budget: int):
        super().__init__(f"enumeration of {estimated} subspaces exceeds budget {budget}")
        self.estimated = estimated
        self.budget = budget


class HypothesisViolated(QGrassError, ValueError):
    """A precondition inequality failed; the message names it."""

    def __init__(self, inequality: str):
        super().__init__(f"hypothesis violated: {inequality}")
        self.inequality = inequality


class MissingX(QGrassError, ValueError):
    pass


class UnknownLemma(QGrassError, KeyError):
    pass


class UnknownKind(QGrassError, KeyError):
    pass


class UnknownSuite(QGrassError, KeyError):
    pass


class NotContained(QGrassError, ValueError):
    pass


class DimensionOrder(QGrassError, ValueError):
    pass


class ChoiceOutOfRange(QGrassError, ValueError):
    pass


class EmptyFamily(QGrassError, ValueError):
    pass
