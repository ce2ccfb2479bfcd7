from enum import IntFlag
from typing import Tuple

#: version of the JSON documents written by :mod:`kpuzzle.serialize`
SCHEMA_VERSION = 1

#: sorted k-subset of {1..n}
Frame = Tuple[int, ...]


class KPuzzleError(Exception):
    """Base class of every error raised by kpuzzle itself."""


class NotDivisible(KPuzzleError):
    """An exact polynomial division left a nonzero remainder."""


class DenominatorVanishes(KPuzzleError):
    """A substitution or evaluation sent a denominator to zero."""


class SingularSystem(KPuzzleError):
    """The linear system of an expansion has no unique solution."""


class NonzeroResidual(KPuzzleError):
    """An expansion does not reproduce the product it was solved for."""


class StateSpaceTooLarge(KPuzzleError):
    """The lattice state space exceeds the configured number of sites."""


class InconsistentCatalogue(KPuzzleError):
    """Two R-matrix entries disagree on a tile or on a rhombus weight."""


class InconsistentCardinality(KPuzzleError):
    """Boundary diagrams do not live in the same k x (n-k) box."""


class EdgeState(IntFlag):
    """Lines crossing a puzzle edge; ``BOTH`` is red and green together."""

    EMPTY = 0
    RED = 1
    GREEN = 2
    BOTH = 3

    @property
    def short(self) -> str:
        return ("E", "R", "G", "RG")[self.value]
