"""Exception hierarchy for genshift."""


class GenShiftError(Exception):
    """Base class for every error raised by this package."""


class IndexSetMismatch(GenShiftError, ValueError):
    pass


class AlphabetMismatch(GenShiftError, ValueError):
    pass


class UnknownSymbol(GenShiftError, ValueError):
    pass


class UnrepresentableResult(GenShiftError, ValueError):
    """A shift would leave the finite-support representation."""


class UnrepresentableComposition(GenShiftError, ValueError):
    pass


class NotBijective(GenShiftError, ValueError):
    pass


class InfiniteIndexSet(GenShiftError, ValueError):
    """An operation that enumerates the index set was given a countable one."""


class BudgetExceeded(GenShiftError, RuntimeError):
    pass


class NotASuperset(GenShiftError, ValueError):
    pass


class NotAnAgreementIndex(GenShiftError, ValueError):
    pass


class AgreementNotInfinite(GenShiftError, ValueError):
    pass


class DisagreementNotInfinite(GenShiftError, ValueError):
    pass


class DefaultsDiffer(GenShiftError, ValueError):
    pass


class AlphabetTooSmall(GenShiftError, ValueError):
    pass


class LiteralError(GenShiftError, ValueError):
    """Parse failure in a config or index-map literal.

    ``position`` is the 0-based offset into ``text`` where parsing stopped,
    ``expected`` names what the parser wanted to see there.
    """

    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(
            f"at position {position} in {text!r}: expected {expected}"
        )
