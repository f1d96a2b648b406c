class ConstructionError(ValueError):
    """A rate-profile or critical-set construction could not be completed"""
