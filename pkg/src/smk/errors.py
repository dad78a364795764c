"""Exception types raised by the library."""


class SmkError(Exception):
    pass


class EmptyFamily(SmkError):
    pass


class ExchangeViolation(SmkError):
    def __init__(self, b1, b2, a):
        self.b1, self.b2, self.a = b1, b2, a
        super().__init__(f"basis exchange fails for B1={b1:#x}, B2={b2:#x}, a={a}")


class CoLoopInput(SmkError):
    pass


class NotAdmissible(SmkError):
    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(f"matroid is not admissible: {certificate}")


class NoAdmissibleBasis(SmkError):
    pass


class DegenerateMinor(SmkError):
    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class DecompositionFailure(SmkError):
    def __init__(self, basis, candidates):
        self.basis, self.candidates = basis, candidates
        super().__init__(f"basis {basis:#x} has {len(candidates)} maximal strongly admissible decompositions")


class NotFound(SmkError):
    pass


class MultipleMinima(SmkError):
    def __init__(self, families):
        self.families = families
        super().__init__(f"{len(families)} distinct minimal admissible envelopes")


class ParityViolation(SmkError):
    pass


class ParseError(SmkError):
    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + loc)


class ValidationError(SmkError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
