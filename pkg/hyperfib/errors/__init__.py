

class HyperFibBaseError(Exception):
    """
    Base exception for all errors

    """

    def __init__(self, message: str):

        super().__init__(message)
        self.message = message

class HyperFibArithmeticError(HyperFibBaseError):
    """
    Base exception for exact arithmetic related errors

    """

    def __init__(self, message: str):

        super().__init__(message)

class HyperFibValidationError(HyperFibBaseError):
    """
    Base exception for validation related errors

    """

    def __init__(self, message: str):

        super().__init__(message)


class HyperFibSearchError(HyperFibBaseError):
    """
    Base exception for enumeration related errors

    """

    def __init__(self, message: str):

        super().__init__(message)


class HyperFibReferenceError(HyperFibBaseError):
    """
    Base exception for reference fixture related errors

    """

    def __init__(self, message: str):

        super().__init__(message)


class NonIntegralInvariantError(HyperFibArithmeticError):
    """
    Exception raised in hyperfib.invariants
    chi or K^2 of the canonical resolution is not an integer
    (spectrum and divisor class parity do not fit together)

    """

    def __init__(self, message: str = "Invariant is not integral."):

        super().__init__(message)


class InvariantMismatchError(HyperFibArithmeticError):
    """
    Exception raised in hyperfib.invariants
    Two restatements of the same identity disagree

    """

    def __init__(self, message: str = "Equivalent identities disagree."):

        super().__init__(message)


class ParityMismatchError(HyperFibValidationError):
    """
    Exception raised in hyperfib.invariants
    Branch divisor class or multiplicity is not even
    Examples: odd k, odd r_i, odd plane degree with even multiplicity

    """

    def __init__(self, message: str = "Parity mismatch."):

        super().__init__(message)


class PreconditionViolatedError(HyperFibValidationError):
    """
    Exception raised in hyperfib.bounds and hyperfib.enumerator
    Input outside the range a formula is stated for
    Examples: K^2 >= 4 chi - 6, k <= 8 for the lemma, t below a case floor

    """

    def __init__(self, message: str = "Precondition violated."):

        super().__init__(message)


class UnknownCaseError(HyperFibValidationError):
    """
    Exception raised in hyperfib.bounds
    Case label not one of a, b, c, c2, c3, d, e1, e2, f1, f2, g1, g2

    """

    def __init__(self, message: str = "Unknown case label."):

        super().__init__(message)


class InvalidArgumentError(HyperFibValidationError):
    """
    Exception raised in hyperfib modules
    Value provided not valid
    Examples: both r_list and counts given, malformed range

    """

    def __init__(self, message: str = "Invalid argument."):

        super().__init__(message)


class OutOfRegimeError(HyperFibSearchError):
    """
    Exception raised in hyperfib.invariants and hyperfib.enumerator
    Query outside the regime the constraint system covers
    Examples: delta > -7, delta < -18, g < 5, r_i > 8 for the N4 + N6 relation

    """

    def __init__(self, message: str = "Out of regime."):

        super().__init__(message)


class ReferenceFixtureError(HyperFibReferenceError):
    """
    Exception raised in hyperfib.enumerator.reference
    Reference table file missing or malformed

    """

    def __init__(self, message: str = "Invalid reference fixture."):

        super().__init__(message)
