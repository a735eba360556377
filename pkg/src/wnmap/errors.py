"""Exception hierarchy shared by the parsers and the mapping stages."""


class WnmapError(Exception):
    """Base class for every error raised by wnmap."""


class InputError(WnmapError, ValueError):
    """Malformed or inconsistent input data (CLI exit status 2)."""


class MalformedKey(InputError):
    pass


class MalformedLine(InputError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class DuplicateKey(InputError):
    pass


class DuplicateIli(InputError):
    pass


class DuplicateOffset(InputError):
    pass


class SchemeMismatch(InputError):
    pass


class ConsistencyError(WnmapError):
    pass
