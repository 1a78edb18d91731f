class FuzzySummError(Exception):
    """Base class for all errors raised by fuzzysumm."""


class EmptyDocument(FuzzySummError, ValueError):
    pass


class InvalidEncoding(FuzzySummError, ValueError):
    def __init__(self, path, offset, reason=""):
        self.path = path
        self.offset = offset
        super().__init__(f"{path}: invalid UTF-8 at byte offset {offset}" + (f" ({reason})" if reason else ""))


class InvalidRate(FuzzySummError, ValueError):
    pass


class EmptyInput(FuzzySummError, ValueError):
    pass


class MissingFile(FuzzySummError, FileNotFoundError):
    def __init__(self, message, missing=()):
        self.missing = list(missing)
        super().__init__(message)


class ConfigError(FuzzySummError, ValueError):
    pass


# fuzzy engine

class FuzzyError(FuzzySummError):
    pass


class UnknownVariable(FuzzyError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownTerm(FuzzyError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class OutOfUniverse(FuzzyError, ValueError):
    pass


class MissingInput(FuzzyError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ConflictingRules(FuzzyError, ValueError):
    pass


class RuleSyntaxError(FuzzyError, ValueError):
    """Malformed rule text; carries 1-based ``line`` and ``column``."""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
