class CapacityError(Exception):
    """Raised when an input is too large for the requested algorithm."""
