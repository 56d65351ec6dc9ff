from typing import Any, Optional, Tuple


class GaInvariantError(Exception):
    """Base class for every error raised by the library"""


# Fields

class FieldError(GaInvariantError):
    pass


class NotPrime(FieldError):
    def __init__(self, p: int):
        super().__init__(f"characteristic {p} is not prime")
        self.p = p


class ReducibleModulus(FieldError):
    def __init__(self, modulus):
        super().__init__(f"modulus {list(modulus)} is not a monic irreducible polynomial")
        self.modulus = list(modulus)


class FieldMismatch(FieldError):
    pass


# Ore ring

class OreError(GaInvariantError):
    pass


class NotAdditive(OreError):
    def __init__(self, exponent: int):
        super().__init__(f"exponent {exponent} is not a power of the characteristic")
        self.exponent = exponent


class DivisionByZero(OreError):
    pass


class BothZero(OreError):
    pass


class ZeroInput(OreError):
    pass


# Polynomials

class PolyError(GaInvariantError):
    pass


class ConstantBase(PolyError):
    pass


class ZeroDenominator(PolyError):
    pass


# Representations

class RepresentationError(GaInvariantError):
    pass


class CocycleViolation(RepresentationError):
    def __init__(self, entry: Tuple[int, int], residual: Any, reason: str = "cocycle identity fails"):
        super().__init__(f"{reason} at {entry}: residual {residual}")
        self.entry = entry
        self.residual = residual
        self.reason = reason


class SchemaError(RepresentationError):
    pass


# Pairs

class PairError(GaInvariantError):
    pass


class TrivialInput(PairError):
    pass


class EmptyInput(PairError):
    pass


class SearchSpaceTooLarge(PairError):
    def __init__(self, size: int, cap: int, what: str = "monomials"):
        super().__init__(f"{size} {what} exceed the configured cap of {cap}")
        self.size = size
        self.cap = cap


# Invariants

class InvariantError(GaInvariantError):
    pass


class KernelNotTrivial(InvariantError):
    def __init__(self, entry: Tuple[int, int], witness: Optional[Any] = None):
        super().__init__(f"q{entry} is not a polynomial in b(t)" + (f" (digit {witness})" if witness is not None else ""))
        self.entry = entry
        self.witness = witness


class NotPrinciple(InvariantError):
    pass


class NotInvariant(InvariantError):
    pass


class InseparableB(InvariantError):
    def __init__(self, w: int):
        super().__init__(f"b(t) is a Frobenius power F^{w} of a separable polynomial")
        self.w = w


class NotCaseB(InvariantError):
    pass


class KernelNotSplit(InvariantError):
    pass


# Budgets

class BudgetExceeded(GaInvariantError):
    pass


class EliminationBudgetExceeded(BudgetExceeded):
    pass


class DegreeBudgetExceeded(BudgetExceeded):
    pass
