"""Errors raised by the prover."""

from __future__ import annotations

from typing import Optional, Sequence


class OrthologicError(ValueError):
    """Base class of every domain error."""


class FormulaSyntaxError(OrthologicError):
    """A formula text does not follow the grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ReservedTokenError(OrthologicError):
    """A reserved token or a malformed identifier was used as a variable name."""


class ProofCheckError(OrthologicError):
    """A proof node does not instantiate its rule."""

    def __init__(self, reason: str, path: Sequence[int] = ()):
        self.reason = reason
        self.path = tuple(path)
        super().__init__(f"node {format_path(self.path)}: {reason}")


class SchemaMismatchError(OrthologicError):
    """A transformation received a proof of the wrong shape."""


class UnprovableSequentError(OrthologicError):
    """A transformation reached a sequent that has no proof."""


class SearchTimeout(OrthologicError):
    """A proof search ran past its deadline."""


class LatticeError(OrthologicError):
    """A lattice description or an evaluation is ill-formed."""


class InfeasibleSizeError(OrthologicError):
    """No formula has the requested size."""


class UnknownFamilyError(OrthologicError):
    """A benchmark family name is not known."""


class ConfigError(OrthologicError):
    """A configuration file cannot be resolved."""


def format_path(path: Optional[Sequence[int]]) -> str:
    """Render a premise-index path such as ``root.1.0``."""
    return ".".join(["root", *(str(i) for i in path or ())])
