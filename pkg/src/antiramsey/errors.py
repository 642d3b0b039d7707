"""Exception hierarchy shared across the package."""


class AntiRamseyError(Exception):
    """Base class for all library-specific errors."""


class GraphFormatError(AntiRamseyError):
    """Malformed graph text input."""


class InstanceTooLargeError(AntiRamseyError):
    """Instance exceeds a configured size guard."""


class NotAForestError(AntiRamseyError):
    """Operation requires an acyclic graph."""


class InvalidColoringError(AntiRamseyError):
    """Input coloring violates a precondition (not valid, not total, ...)."""


class EmptyGraphError(AntiRamseyError):
    """Operation requires at least one edge."""


class NotBipartiteError(AntiRamseyError):
    """Graph or supplied side assignment is not bipartite."""


class MalformedCnfError(AntiRamseyError):
    """CNF input violates the 3-literal clause format."""


class TriviallySatisfiableError(AntiRamseyError):
    """Pure-literal elimination emptied the clause set; no instance to emit."""


class UnsatisfyingAssignmentError(AntiRamseyError):
    """Assignment does not satisfy the formula of the instance."""


class NotIndependentError(AntiRamseyError):
    """Vertex set is not independent in the source graph."""
