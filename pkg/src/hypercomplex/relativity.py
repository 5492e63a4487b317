"""Minkowski-interval check through the squared 4D number.

A spacetime displacement ``(dx, dy, dz, c*dt)`` becomes a 4D value; squaring
it doubles the arguments, and the spatial modulus of the square equals
``|ds^2|`` -- a quantity a Lorentz boost cannot change.  The time component
of the square is ``2 * c*dt * r3`` with ``r3`` the spatial modulus of the
displacement itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import TAU, HALF_PI, CartesianVec, pow_int, to_cartesian, to_spherical

__all__ = [
    "EventDelta",
    "SquareProjection",
    "interval_sq",
    "square_and_project",
    "doubled_latitude_quadrant",
    "lorentz_boost",
]


@dataclass(frozen=True)
class EventDelta:
    """Displacement between two events; time carried as c*dt (length units),
    so no numeric speed of light ever appears."""

    dx: float
    dy: float
    dz: float
    cdt: float

    def __post_init__(self):
        for name in ("dx", "dy", "dz", "cdt"):
            v = float(getattr(self, name))
            object.__setattr__(self, name, v)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")


class SquareProjection(NamedTuple):
    spatial_modulus: float
    time_component: float


def interval_sq(d: EventDelta) -> float:
    """``ds^2 = (c*dt)^2 - dx^2 - dy^2 - dz^2`` (negative for spacelike)."""
    return d.cdt * d.cdt - d.dx * d.dx - d.dy * d.dy - d.dz * d.dz


def _as_form(d: EventDelta):
    # a purely temporal displacement has degenerate spatial longitudes;
    # default (zero) longitudes are fine, the square's moduli do not see them
    return to_spherical(CartesianVec((d.dx, d.dy, d.dz, d.cdt)))


def square_and_project(d: EventDelta) -> SquareProjection:
    """Square the 4D form of ``d`` and project the result.

    ``spatial_modulus`` is the Euclidean norm of the square's first three
    Cartesian components and equals ``|ds^2|``; ``time_component`` is the
    fourth component and equals ``2 * cdt * sqrt(dx^2 + dy^2 + dz^2)``.
    """
    x, y, z, w = to_cartesian(pow_int(_as_form(d), 2)).components
    return SquareProjection(math.sqrt(x * x + y * y + z * z), w)


def doubled_latitude_quadrant(d: EventDelta) -> int:
    """Quadrant (0..3) of twice the final latitude of ``d``'s 4D form.

    Quadrants 1 and 2 are where the square's spatial part points backwards,
    i.e. where ``ds^2 > 0``.  Exposed for inspection only; nothing in this
    module interprets it.
    """
    psi2 = (2.0 * _as_form(d).args[-1]) % TAU
    return int(psi2 // HALF_PI) % 4


def lorentz_boost(d: EventDelta, beta: float) -> EventDelta:
    """Standard boost along x with velocity ``beta`` (fraction of c)."""
    if not abs(beta) < 1.0:
        raise ValueError(f"|beta| must be < 1, got {beta}")
    gamma = 1.0 / math.sqrt(1.0 - beta * beta)
    return EventDelta(
        gamma * (d.dx - beta * d.cdt),
        d.dy,
        d.dz,
        gamma * (d.cdt - beta * d.dx),
    )
