class CodecError(ValueError):
    """Base error of the PAC codec"""


class CodeConfigError(CodecError):
    """Inconsistent code parameters (N, K, information set, polynomial)"""


class ProfileFormatError(CodecError):
    """Malformed hex profile or profile file"""
