"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or malformed graph input."""


class FamilyError(ValueError):
    """Family parameters outside their legal range."""


class MatchingError(ValueError):
    """An edge set that is not a (perfect) matching where one is required."""


class NoPerfectMatchingError(ValueError):
    """Operation requires a perfect matching but the graph has none."""


class ResourceLimitError(RuntimeError):
    """A configured search ceiling (matchings, nodes, cycles) was exceeded."""
