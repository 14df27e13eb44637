"""Exception hierarchy shared by every module of the package."""


class DendError(Exception):
    """Base class for all errors raised by :mod:`dend`."""


class InputError(DendError):
    """Malformed user input (bad polynomial text, catalog, shapes)."""


class UnknownVariable(InputError):
    def __init__(self, name):
        super().__init__(f"unknown variable {name!r}")
        self.name = name


class PolySyntaxError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NegativeExponent(InputError):
    pass


class ExponentOverflow(InputError):
    pass


class VarTableMismatch(InputError):
    pass


class MissingAssignment(InputError):
    def __init__(self, name):
        super().__init__(f"no value assigned to {name!r}")
        self.name = name


class ZeroPolynomial(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class SchemaError(InputError):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


class DuplicateId(InputError):
    pass


class AlgebraMismatch(InputError):
    pass


class MissingAlgebra(InputError):
    def __init__(self, ids):
        super().__init__("catalog is missing algebras: " + ", ".join(ids))
        self.ids = list(ids)


class ResourceLimit(DendError):
    """A configured bound (pair queue, depth, basis size) was exceeded."""


class RejectionExhausted(DendError):
    pass
