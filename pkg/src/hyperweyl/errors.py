"""Exception types shared across the package."""


class HyperWeylError(Exception):
    pass


class DomainMismatch(HyperWeylError, ValueError):
    pass


class DomainError(HyperWeylError, ValueError):
    pass


class ParseError(HyperWeylError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class NotDisjoint(HyperWeylError, ValueError):
    pass


class UnsupportedLevel(HyperWeylError, ValueError):
    pass


class InvalidParams(HyperWeylError, ValueError):
    pass


class ResourceExceeded(HyperWeylError, RuntimeError):
    pass


class CapExceeded(HyperWeylError, RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"group order exceeds cap {cap}")
        self.cap = cap


class UnknownModel(HyperWeylError, KeyError):
    pass


class CrosscheckFailed(HyperWeylError, AssertionError):
    def __init__(self, formula: int, brute: int):
        super().__init__(f"formula gives {formula}, enumeration gives {brute}")
        self.formula = formula
        self.brute = brute


class NotBicompatible(HyperWeylError, ValueError):
    def __init__(self, i: int, j: int):
        super().__init__(f"element {i} is not compatible with element {j}")
        self.i = i
        self.j = j
