"""Exception hierarchy shared by all alnmatch modules."""

from __future__ import annotations


class AlnError(Exception):
    """Base class for every error raised by this package."""


class ParseError(AlnError):
    """Concrete-syntax error; carries the source span of the offending text."""

    def __init__(self, message, span):
        super().__init__(f"{message} at {span.line}:{span.column}")
        self.message = message
        self.span = span


class TBoxError(AlnError):
    """A terminology failed validation; .violations lists every problem found."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class UnfoldingBudgetExceeded(AlnError):
    """Terminology expansion grew past the configured node budget."""


class OracleBudgetExceeded(AlnError):
    """Input outside the bounds the brute-force model search can afford."""


class EnumerationBudgetExceeded(AlnError):
    """A checker's sub-conjunction enumeration grew past its budget."""


class UnsatisfiableAdvertisement(AlnError):
    """A supply or demand is unsatisfiable in the terminology in force."""

    def __init__(self, side, detail=""):
        self.side = side
        super().__init__(f"unsatisfiable {side}" + (f": {detail}" if detail else ""))


class PartialMatchError(AlnError):
    """The two concepts conflict; hypothesis-based scoring does not apply."""


class EmptyPreferenceError(AlnError):
    """A reference preference order contains no strictly ordered pair."""
