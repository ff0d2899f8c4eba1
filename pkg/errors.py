"""
Exception hierarchy for the transduction toolkit.

Every error raised on purpose by the library derives from TransductionError,
so the launcher can map whole families of failures to exit codes.
"""


class TransductionError(Exception):
    """Root of all library errors"""


# numeration
class InvalidDigit(TransductionError):
    pass


class NonCanonical(TransductionError):
    pass


class UnknownNumeration(TransductionError):
    pass


# automata and transducers
class UndefinedTransition(TransductionError):
    """A partial DFAO was run on a word it has no path for"""


class NotProlongable(TransductionError):
    pass


class IncompleteAutomaton(TransductionError):
    pass


class AlphabetMismatch(TransductionError):
    pass


class SymbolOutsideAlphabet(TransductionError):
    pass


class MissingTransition(TransductionError):
    pass


class AlreadyComplete(TransductionError):
    pass


class HashSymbolCollision(TransductionError):
    pass


class BoundExceeded(TransductionError):
    """Orbit detection ran past the |V|^(|Q|*|V|) bound"""


class SizeLimit(TransductionError):
    pass


# corpus and oracles
class UnknownName(TransductionError):
    pass


class ZeroInput(TransductionError):
    pass


class NotBalanced(TransductionError):
    pass


# files, expressions, configuration
class ParseError(TransductionError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ExpressionError(TransductionError):
    pass


class ConfigError(TransductionError):
    pass
