class ChannelError(ValueError):
    """Invalid channel parameters or mismatched reliability vectors"""
