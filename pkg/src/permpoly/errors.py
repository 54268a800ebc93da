"""Exception hierarchy for permpoly.

Everything raised on bad input derives from :class:`PermpolyError`, which is
a ``ValueError`` so callers that only care about "bad argument" can catch that.
"""


class PermpolyError(ValueError):
    pass


class OutOfRange(PermpolyError):
    """Modulus below 2 or not representable in a 64-bit word."""


class CompositeModulus(PermpolyError):
    def __init__(self, n):
        super().__init__(f"{n} is not prime")
        self.n = n


class DivisionByZero(PermpolyError, ZeroDivisionError):
    pass


class ModulusMismatch(PermpolyError):
    def __init__(self, p, q):
        super().__init__(f"moduli differ: {p} != {q}")
        self.moduli = (p, q)


class NotARoot(PermpolyError):
    pass


class InvalidTable(PermpolyError):
    pass


class DegeneratePair(PermpolyError):
    pass


class EvenModulus(PermpolyError):
    pass


class KOutOfRange(PermpolyError):
    pass


class TooLarge(PermpolyError):
    pass


class InexactDivision(ArithmeticError):
    """A division that must be exact left a remainder (logic fault, not bad input)."""


class VerificationFailure(Exception):
    """Raised by strict verification runs; carries the failing check and full report."""

    def __init__(self, check, report):
        msg = f"p={report.p}: check {check.name!r} failed"
        if check.witness is not None:
            msg += f" (witness: {check.witness})"
        super().__init__(msg)
        self.check = check
        self.report = report
