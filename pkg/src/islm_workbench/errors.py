"""Exception types shared by the model core, scenario engine, CLI, and service."""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidParameters(WorkbenchError, ValueError):
    """A parameter set violates a structural invariant (e.g. c outside (0, 1))."""


class InvalidRegime(WorkbenchError, ValueError):
    """A policy regime is malformed (e.g. negative target rate)."""


class BranchAmbiguous(WorkbenchError):
    """The equilibrium sits exactly on the zero-rate kink, so the fiscal
    multiplier is direction-dependent; both one-sided values are attached."""

    def __init__(self, zlb_side: float, interior_side: float):
        self.zlb_side = zlb_side
        self.interior_side = interior_side
        super().__init__(
            "equilibrium sits exactly at the zero-rate kink: "
            f"multiplier is {zlb_side:g} toward the floor, {interior_side:g} above it"
        )


class InvalidSlot(WorkbenchError, ValueError):
    """A slot index is outside 1..3 or not allowed for the operation."""


class DuplicateSlot(WorkbenchError, ValueError):
    """The same slot was selected more than once."""


class EmptySelection(WorkbenchError, ValueError):
    """A comparison was requested with no slots selected."""


class UnknownParameter(WorkbenchError, ValueError):
    """A parameter name does not exist on the model."""


class OutOfRange(WorkbenchError, ValueError):
    """A parameter value falls outside its legal slider range."""

    def __init__(self, name: str, value: float, legal_range: str):
        self.name = name
        self.value = value
        self.legal_range = legal_range
        super().__init__(f"{name}={value:g} is out of range; legal range is {legal_range}")


class InvalidGrid(WorkbenchError, ValueError):
    """A sampling grid is malformed (n < 2, min >= max, or non-finite bounds)."""


class UnknownPlot(WorkbenchError, ValueError):
    """A plot identifier is not one of islm | money | goods."""


class DocumentError(WorkbenchError, ValueError):
    """A scenario document failed parsing or validation."""
