"""Exception hierarchy shared by every module in the package."""


class SupergameError(Exception):
    """Base class for all errors raised by this package."""


class GameSpecError(SupergameError, ValueError):
    """A game specification could not be parsed or is malformed."""


class UndefinedUtility(SupergameError, KeyError):
    """Utility requested for a role that does not exist in the given state."""

    def __str__(self):
        return Exception.__str__(self)


class EmptyCycle(SupergameError, ValueError):
    """A limit-of-means payoff was requested for an empty periodic part."""


class PropertyViolation(SupergameError):
    """The game fails one of the structural audits the solver requires."""

    def __init__(self, audits):
        self.audits = list(audits)
        lines = [v.render() for a in self.audits for v in a.violations]
        super().__init__("game fails structural audits:\n  " + "\n  ".join(lines))


class CycleLengthViolation(SupergameError):
    """Iterating a transition graph hit a cycle longer than one state."""

    def __init__(self, start, path):
        self.start = start
        self.path = list(path)
        super().__init__(
            f"chain from [{start}] revisits a non-equilibrium state: "
            + " -> ".join(f"[{s}]" for s in self.path)
        )


class SearchTooLarge(SupergameError):
    """Exhaustive search was requested for a game beyond the size cap."""


class InvalidProfile(SupergameError, ValueError):
    """A strategy profile does not match the game it is used with."""


class InfeasibleRange(SupergameError, ValueError):
    """The generator's value grid cannot host the required strict chains."""
