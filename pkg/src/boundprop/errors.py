"""Exception types shared across the package."""


class BoundPropError(Exception):
    """Base class for all package-specific errors."""


class StateCapExceededError(BoundPropError):
    """A requested exact computation exceeds the configured state-space cap."""

    def __init__(self, states: int, cap: int):
        super().__init__(f"state space {states} exceeds cap {cap}")
        self.states = states
        self.cap = cap


class LpInfeasibleError(BoundPropError):
    """The linear program has no feasible point within tolerance."""


class LpUnboundedError(BoundPropError):
    """The linear program is unbounded (impossible for well-formed bound LPs)."""


class InconsistentBoundsError(BoundPropError):
    """Stored bounds admit no probability distribution; the store is corrupt."""


class SoundnessError(BoundPropError):
    """An exact marginal escaped its bounds; reporting refuses to proceed."""


class UaiFormatError(BoundPropError, ValueError):
    """Malformed UAI-format text; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GraphSamplingError(BoundPropError):
    """The random wiring procedure failed to produce a simple graph."""
