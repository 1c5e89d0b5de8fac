"""Exception types shared across the package."""


class GameError(Exception):
    """Base class for all domain errors."""


class CycleDetected(GameError):
    """Input graph contains a cycle (including self-loops)."""


class BadVertexIndex(GameError):
    """Edge endpoint outside the declared vertex range."""


class DuplicateEdge(GameError):
    """The same undirected edge appears twice in the input."""


class UnknownEdge(GameError):
    """Edge id not present in the forest."""


class EdgeAlreadyColoured(GameError):
    """Attempt to colour an edge that already has a colour."""


class ImproperColour(GameError):
    """Colour out of range or clashing with an incident coloured edge."""


class DifferentComponents(GameError):
    """Path query across two distinct original components."""


class EdgeAlreadyDeleted(GameError):
    """Decremental structure asked to delete the same edge twice."""


class NoUniqueBaseNode(GameError):
    """Matched/unmatched classification needs exactly one base node."""


class NoUncolouredEdge(GameError):
    """Move requested but every edge is already coloured."""


class UnsupportedDelta(GameError):
    """The constructive strategy only covers maximum degree 4 and 5."""


class StrategyStuck(GameError):
    """The strategy found no feasible colour; should be unreachable."""


class BobStuck(GameError):
    """No legal action for Bob and skipping is disabled."""


class InvariantViolation(GameError):
    """A post-move structural invariant failed."""


class BudgetExceeded(GameError):
    """Exhaustive enumeration exceeded its configured budget."""


class CapExceeded(GameError):
    """Oracle asked to solve an instance above its edge cap."""
