#!/usr/bin/env python3
"""Tour of the two representations and the four arithmetic operations.

A value is a modulus plus ordered angle arguments (one longitude, then
latitudes).  Multiplication multiplies moduli and adds arguments index by
index; addition is plain componentwise Cartesian addition.  The same point
owns infinitely many argument tuples, which is why conversion, canonical
ranges and degenerate fallbacks all exist.
"""

import math

from hypercomplex import (
    CartesianVec,
    DegenerateArgs,
    DegenerateLongitudeError,
    SphericalForm,
    add,
    canonicalize,
    divide,
    inverse,
    mul_cartesian,
    mul_geometric,
    pow_int,
    to_cartesian,
    to_spherical,
)

PI = math.pi


def show(label, value):
    if isinstance(value, SphericalForm):
        body = f"r={value.modulus:.6g}, args=({', '.join(f'{a:.6g}' for a in value.args)})"
    else:
        body = "(" + ", ".join(f"{c:.6g}" for c in value.components) + ")"
    print(f"  {label:<38} {body}")


print("== both representations of one 3D point ==")
h = SphericalForm(2.0, (PI / 3, PI / 6))
v = to_cartesian(h)
show("geometric (r, theta, phi)", h)
show("cartesian (x, y, z)", v)
show("back to geometric", to_spherical(v))

print("\n== multiplication: moduli multiply, arguments add ==")
a = SphericalForm(2.0, (PI / 3, PI / 6))
b = SphericalForm(3.0, (PI / 6, PI / 6))
show("a", a)
show("b", b)
show("a*b (geometric route)", mul_geometric(a, b))
show("a*b (cartesian route)", mul_cartesian(to_cartesian(a), to_cartesian(b)))

print("\n== division, inverse, integer powers ==")
ab = mul_geometric(a, b)
show("(a*b)/b", divide(ab, b))
show("inverse(a)", inverse(a))
show("a * inverse(a)", mul_geometric(a, inverse(a)))
show("a**3", pow_int(a, 3))
show("(a**3)**(-1) == a**(-3)", pow_int(a, -3))

print("\n== addition lives in Cartesian coordinates ==")
show("a + b", add(to_cartesian(a), to_cartesian(b)))

print("\n== canonicalization folds equivalent argument tuples ==")
wild = SphericalForm(1.0, (PI / 4, 2 * PI / 3))
show("raw tuple", wild)
show("canonical tuple (same point)", canonicalize(wild))
show("cartesian of raw", to_cartesian(wild))
show("cartesian of canonical", to_cartesian(canonicalize(wild)))

print("\n== degenerate longitudes must be supplied ==")
axis = CartesianVec((0.0, 0.0, 1.0))
try:
    mul_cartesian(axis, axis)
except DegenerateLongitudeError as exc:
    print(f"  rejected as expected: {exc}")
fb = DegenerateArgs((0.0,))
show("with explicit zero longitude", mul_cartesian(axis, axis, fb, fb))
print("  (the square of a pure z-axis unit is -1 on the real axis)")

print("\n== higher dimensions work the same way ==")
h7 = SphericalForm(1.5, (0.4, 0.2, -0.3, 0.1, 0.6, -0.2))
show("7D value", h7)
show("7D value squared", pow_int(h7, 2))
show("roundtrip through cartesian", to_spherical(to_cartesian(h7)))
