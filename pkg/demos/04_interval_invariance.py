#!/usr/bin/env python3
"""Squared 4D displacements versus the Minkowski interval under boosts.

The displacement (dx, dy, dz, c*dt) becomes a 4D value; the spatial modulus
of its square equals |ds^2| and survives any x-boost.  The square's time
component, 2*c*dt*r3, is printed alongside since the interval alone never
shows it.
"""

import random

from hypercomplex import (
    EventDelta,
    doubled_latitude_quadrant,
    interval_sq,
    lorentz_boost,
    square_and_project,
)

print("one displacement, many frames:")
d = EventDelta(1.0, 0.5, -0.25, 2.0)
print(f"  delta = ({d.dx}, {d.dy}, {d.dz}, {d.cdt}),  ds^2 = {interval_sq(d):+.9f}")
print(f"  {'beta':>6} {'spatial modulus of square':>27} {'|ds^2|':>12} {'time comp':>12}")
for beta in (0.0, 0.2, 0.5, 0.8, 0.95, -0.6):
    boosted = lorentz_boost(d, beta)
    spatial, time_comp = square_and_project(boosted)
    print(f"  {beta:+6.2f} {spatial:27.12f} {abs(interval_sq(d)):12.9f} {time_comp:12.6f}")

print("\nrandom displacements, random boosts:")
rng = random.Random(0)
worst = 0.0
for _ in range(2000):
    d = EventDelta(*(rng.uniform(-3, 3) for _ in range(4)))
    boosted = lorentz_boost(d, rng.uniform(-0.99, 0.99))
    spatial, _ = square_and_project(boosted)
    worst = max(worst, abs(spatial - abs(interval_sq(d))))
print(f"  max |spatial modulus - |ds^2|| over 2000 boosted samples: {worst:.3e}")

print("\nthe doubled-latitude quadrant separates timelike from spacelike:")
for d in (EventDelta(0.1, 0, 0, 2.0), EventDelta(2.0, 0, 0, 0.1), EventDelta(1, 0, 0, 1)):
    kind = "timelike" if interval_sq(d) > 0 else ("spacelike" if interval_sq(d) < 0 else "lightlike")
    print(f"  ds^2 = {interval_sq(d):+6.2f} ({kind:9}) -> quadrant {doubled_latitude_quadrant(d)}")
