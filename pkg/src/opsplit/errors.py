"""Typed failures raised across the package."""


class OpsplitError(Exception):
    """Base class for every error raised by opsplit."""


class DimMismatch(OpsplitError, ValueError):
    pass


class Singular(OpsplitError, ValueError):
    pass


class SingularTypeMatrix(OpsplitError, ValueError):
    pass


class DegenerateForm(OpsplitError, ValueError):
    pass


class NotSymmetric(OpsplitError, ValueError):
    pass


class NotLeftInvariant(OpsplitError, ValueError):
    pass


class NotInvariant(OpsplitError, ValueError):
    pass


class NotAnOperator(OpsplitError, ValueError):
    pass


class NotLeibniz(OpsplitError, ValueError):
    pass


class NotLie(OpsplitError, ValueError):
    pass


class NotLieRep(OpsplitError, ValueError):
    pass


class NotAveraging(OpsplitError, ValueError):
    pass


class NotAdmissible(OpsplitError, ValueError):
    pass


class NotSDPL(OpsplitError, ValueError):
    """An (≻, ≺) pair failed one of the SDPL identities; ``identity`` names it."""

    def __init__(self, identity, detail=""):
        self.identity = identity
        super().__init__(f"{identity}: {detail}" if detail else identity)


class NotCoalgebra(OpsplitError, ValueError):
    pass


class NotBialgebra(OpsplitError, ValueError):
    def __init__(self, identity, detail=""):
        self.identity = identity
        super().__init__(f"{identity}: {detail}" if detail else identity)


class NotAvgLieBialgebra(OpsplitError, ValueError):
    pass


class CapExceeded(OpsplitError, ValueError):
    pass


class BadShape(OpsplitError, ValueError):
    pass


class UnknownMult(OpsplitError, KeyError):
    pass


class ParseError(OpsplitError, ValueError):
    """Malformed input file; ``where`` is a field path such as ``mults.bracket[3]``."""

    def __init__(self, where, detail):
        self.where = where
        super().__init__(f"{where}: {detail}")


class IndexOutOfRange(ParseError):
    pass


class DuplicateEntry(ParseError):
    pass
