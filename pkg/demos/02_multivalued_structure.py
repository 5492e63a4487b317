#!/usr/bin/env python3
"""Replicates and everything they spawn: conjugates, multivalued roots,
multivalued products, and the longitude-dependent square of the second
imaginary unit."""

import math

from hypercomplex import (
    SphericalForm,
    conjugate,
    j_squared,
    mul_geometric,
    nth_roots,
    pow_int,
    replicate,
    replicate_products,
    to_cartesian,
)

PI = math.pi


def cart(h):
    return "(" + ", ".join(f"{c:+.6f}" for c in to_cartesian(h).components) + ")"


print("== a replicate is a second name for the same point ==")
h = SphericalForm(1.0, (PI / 4, PI / 6))
r = replicate(h, 3)
print(f"  plain tuple     args=({h.args[0]:.6f}, {h.args[1]:.6f})  point {cart(h)}")
print(f"  replicate tuple args=({r.args[0]:.6f}, {r.args[1]:.6f})  point {cart(r)}")

print("\n== three conjugates of x + iy + jz ==")
g = SphericalForm(math.sqrt(3.0), (PI / 4, math.asin(1 / math.sqrt(3))))  # (1, 1, 1)
for variant in ("full", "second", "third"):
    c = conjugate(g, variant)
    prod = mul_geometric(g, c)
    print(f"  {variant:<7} conjugate -> {cart(c)}   h*conj -> {cart(prod)}")
print("  (full: real r^2; second: e^(j 2 phi) plane; third: e^(i 2 theta) plane)")

print("\n== square roots of a pure complex value are four, not two ==")
target = SphericalForm(4.0, (PI / 2, 0.0))  # the complex number 4i
roots = nth_roots(target, 2)
print(f"  {roots.multiplicity_note} candidates survive, {len(roots.roots)} distinct points:")
for root in roots.roots:
    back = pow_int(root, 2)
    print(f"    root {cart(root)}  squared -> {cart(back)}")
print("  the two z-axis roots exist because the replicate tuple also has halves")

print("\n== cube roots multiply out the same way ==")
g3 = SphericalForm(8.0, (0.9, 0.4))
roots = nth_roots(g3, 3)
print(f"  {len(roots.roots)} distinct cube roots of {cart(g3)}; all cube back:")
worst = 0.0
for root in roots.roots:
    back = to_cartesian(pow_int(root, 3)).components
    worst = max(worst, max(abs(p - q) for p, q in zip(back, to_cartesian(g3).components)))
print(f"  max |root^3 - value| = {worst:.2e}")

print("\n== the product itself is multivalued across replicate choices ==")
a = SphericalForm(1.0, (0.3, 0.2))
b = SphericalForm(1.0, (0.5, 0.45))
for i, p in enumerate(replicate_products(a, b), start=1):
    print(f"  case {i}: longitude {p.args[0]:.2f}, latitude {p.args[1]:+.2f}  point {cart(p)}")
print("  latitudes come in opposite pairs (1&4, 2&3); ordinary arithmetic uses case 1")

print("\n== the second imaginary unit squares to a longitude-dependent value ==")
for theta, label in ((0.0, "0"), (PI / 4, "pi/4"), (PI / 2, "pi/2"), (3 * PI / 4, "3pi/4")):
    re, im = j_squared(theta)
    print(f"  longitude {label:>5}: j^2 = {re:+.3f} {im:+.3f}i")
