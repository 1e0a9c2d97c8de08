class BchlabError(Exception):
    """Base exception for every error raised by bchlab"""
    pass


class ConfigError(BchlabError):
    """Custom exception for configuration errors"""
    pass


class ParseError(BchlabError):
    """Custom exception for malformed polynomial text or JSON"""
    pass
