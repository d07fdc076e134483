class PreconditionError(ValueError):
    """A parameter combination outside the validity range of a formula."""
