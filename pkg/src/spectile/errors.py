"""Shared exception types."""


class PreconditionError(ValueError):
    """An operation's stated precondition does not hold for the input."""


class NoGoodPairingError(ValueError):
    """No index pairing with equal roots and odd index sum exists."""


class ClassificationError(ValueError):
    """A vanishing six-term sum did not fit any of the three known shapes."""
