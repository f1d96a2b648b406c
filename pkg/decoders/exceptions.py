class DecoderError(ValueError):
    """Invalid decoder input or configuration"""
