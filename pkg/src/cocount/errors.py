"""Exception types shared across the package."""

from __future__ import annotations


class CocountError(Exception):
    """Base class for all errors raised by cocount."""


class ElementOutOfRange(CocountError, ValueError):
    pass


class CycleDetected(CocountError, ValueError):
    def __init__(self, cycle: list[int]):
        self.cycle = cycle
        super().__init__("arcs contain a directed cycle: " + " -> ".join(map(str, cycle)))


class NotAPermutation(CocountError, ValueError):
    pass


class SizeMismatch(CocountError, ValueError):
    pass


class InvalidExtension(CocountError, ValueError):
    pass


class GraphPosetMismatch(CocountError, ValueError):
    pass


class KOutOfRange(CocountError, ValueError):
    pass


class TooLarge(CocountError, ValueError):
    pass


class ParseError(CocountError, ValueError):
    def __init__(self, lineno: int, reason: str):
        self.lineno = lineno
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}")


class UnsupportedCombination(CocountError, ValueError):
    pass
