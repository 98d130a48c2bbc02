"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class AspicError(Exception):
    """Base class for engine errors."""


class TheoryError(AspicError):
    """The theory violates a structural constraint (ill-formed input)."""


class MissingContradictory(AspicError):
    """A formula needed for transposition has no designated contradictory."""

    def __init__(self, formula):
        super().__init__(f"no contradictory declared for {formula}")
        self.formula = formula


class BudgetExceeded(AspicError):
    """A construction or enumeration bound was hit; partial results are discarded."""


class OracleBudget(BudgetExceeded):
    """An entailment check exceeded its bound."""


class AtomBudget(BudgetExceeded):
    """Too many propositional atoms for exhaustive valuation."""


class UnknownElement(AspicError):
    """A set comparison was asked about an element missing from the preorder."""


class ClaimsEmpty(AspicError):
    """The classical claims universe is empty."""
