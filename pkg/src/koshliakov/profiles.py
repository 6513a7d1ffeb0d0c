"""Precision profiles.

A profile bundles the working precision and the default accuracy targets
handed to series truncation and quadrature.  Two are provided: "double"
(IEEE binary64 throughout, Lanczos gamma) and "extended" (80-bit
longdouble accumulation where the platform supports it, Stirling gamma,
tighter targets).  The environment variable KOSHLIAKOV_PROFILE selects
the default for the CLI.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class PrecisionProfile:
    name: str
    working_digits: int
    target_abs_tol: float
    target_rel_tol: float

    def __post_init__(self):
        if self.working_digits < 15:
            raise DomainError("working_digits must be >= 15")
        floor = 10.0 ** (2 - self.working_digits)
        if self.target_abs_tol < floor or self.target_rel_tol < floor:
            raise DomainError(
                f"tolerances below the {floor:g} floor for "
                f"{self.working_digits} working digits")


DOUBLE = PrecisionProfile("double", 15, 1e-12, 1e-12)
EXTENDED = PrecisionProfile("extended", 18, 1e-15, 1e-15)

_PROFILES = {"double": DOUBLE, "extended": EXTENDED}


def get_profile(name: str) -> PrecisionProfile:
    try:
        return _PROFILES[name]
    except KeyError:
        raise DomainError(f"unknown profile {name!r}; "
                          f"expected one of {sorted(_PROFILES)}") from None


def default_profile() -> PrecisionProfile:
    """Profile selected by KOSHLIAKOV_PROFILE, falling back to double."""
    return get_profile(os.environ.get("KOSHLIAKOV_PROFILE", "double"))
