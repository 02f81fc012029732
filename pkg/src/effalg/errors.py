"""Exception hierarchy shared across the package."""

from __future__ import annotations


class EffectAlgebraError(Exception):
    """Base class for every domain error raised by this package."""


class AxiomViolation(EffectAlgebraError):
    """A table failed validation.  Carries the full axiom report."""

    def __init__(self, report):
        self.report = report
        head = "; ".join(f"{v.axiom}: {v.detail}" for v in report.violations[:3])
        rest = len(report.violations) - 3
        if rest > 0:
            head += f" (+{rest} more)"
        super().__init__(head or "axiom violations")


class DuplicateSum(EffectAlgebraError):
    """The same pair was declared with two different sums."""


class ParseError(EffectAlgebraError):
    """Malformed document text.  Keeps the offending line number."""

    def __init__(self, lineno: int | None, message: str):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


class MissingHeader(ParseError):
    """The document does not start with the expected format header."""


class UnknownName(EffectAlgebraError):
    """A referenced element name is not declared."""


class MissingElement(EffectAlgebraError):
    """A state document does not assign a value to every element."""


class NegativeDenominator(EffectAlgebraError):
    """A rational literal has a zero or negative denominator."""


class BoundsMissing(EffectAlgebraError):
    """A meet or join needed by the operation does not exist."""


class ZeroElement(EffectAlgebraError):
    """The operation is undefined at the zero element."""


class NotDecomposable(EffectAlgebraError):
    """No atom lies below a nonzero residual (cannot happen on validated
    finite tables, kept as an explicit guard)."""


class InvalidDecomposition(EffectAlgebraError):
    """A decomposition value violates its structural constraints."""


class PreconditionFailed(EffectAlgebraError):
    """The operation's structural precondition does not hold."""


class InvalidState(EffectAlgebraError):
    """A candidate state fails verification on its declared domain."""


class SizeLimit(EffectAlgebraError):
    """A generator parameter is outside its supported range."""


class DegenerateBlock(EffectAlgebraError):
    """A horizontal-sum block is too small to contribute an interior."""
