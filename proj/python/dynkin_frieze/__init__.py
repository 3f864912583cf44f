"""Friezes of Dynkin type: verification, bounds and enumeration."""

from ._core import (
    Frieze,
    InadmissibleType,
    ParseError,
    bounds,
    cartan_matrix,
    catalog,
    detect_period,
    emit_frieze,
    enumerate,
    inverse_cartan,
    parse_frieze,
    propagate_backward,
    propagate_forward,
    quiver_dot,
    type_profile,
)

__all__ = [
    "Frieze",
    "InadmissibleType",
    "ParseError",
    "bounds",
    "cartan_matrix",
    "catalog",
    "detect_period",
    "emit_frieze",
    "enumerate",
    "inverse_cartan",
    "parse_frieze",
    "propagate_backward",
    "propagate_forward",
    "quiver_dot",
    "type_profile",
]


def load(path):
    """Reads a frieze document from a file."""
    with open(path, encoding="utf-8") as fh:
        return parse_frieze(fh.read())
