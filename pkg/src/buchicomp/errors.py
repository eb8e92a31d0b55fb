"""Exception and warning types shared across the package."""


class AutomatonError(Exception):
    """Base class for all library-specific errors."""


class NotLimitDeterministic(AutomatonError):
    """The automaton admits no valid LDBW partition."""


class NotFinitelyAmbiguous(AutomatonError):
    """An FANBW-only construction was applied to an infinitely ambiguous NBW."""


class InvalidPartition(AutomatonError):
    """A supplied state partition violates the LDBW conditions."""


class TrackedNotSubset(AutomatonError):
    """The tracked set handed to the reduced transition function leaves its context."""


class PhaseMismatch(AutomatonError):
    """A macrostate query only defined for the accepting phase got an initial-phase state."""


class AlphabetMismatch(AutomatonError):
    """Two automata combined in a language operation have different alphabets."""


class IncompatibleAlgorithm(AutomatonError):
    """The requested complementation algorithm cannot handle the given automaton."""


class ShapeUnsatisfiable(AutomatonError):
    """Rejection sampling for a random-automaton shape ran out of retries."""


class ParseError(AutomatonError):
    """Malformed automaton document."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class UndeclaredState(ParseError):
    """A transition or header refers to a state outside the declared range."""


class DuplicateTransitionWarning(UserWarning):
    """A transition line occurs more than once; duplicates are merged."""
