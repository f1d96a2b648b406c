class SimulationError(ValueError):
    """Invalid simulation campaign configuration"""
