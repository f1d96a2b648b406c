class SpectrumError(ValueError):
    """Empty or degenerate weight spectrum"""
