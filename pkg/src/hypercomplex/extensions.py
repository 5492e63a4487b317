"""Conjugates, replicates, multivalued roots and products, and diagnostics.

Everything here exploits the same fact: an argument tuple is not unique for
its Cartesian point.  Folding a latitude (``theta_k -> pi - theta_k`` with a
pi shift absorbed by ``theta_{k-1}``) produces a *replicate* -- a different
tuple for the same point that multiplies differently.  Replicates are where
the extra roots and the multivalued products come from.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import (
    TAU,
    CartesianVec,
    DegenerateArgs,
    SphericalForm,
    add,
    canonicalize,
    mul_cartesian,
    pow_int,
    to_cartesian,
)

__all__ = [
    "ConjugateVariant",
    "RootSet",
    "conjugate",
    "replicate",
    "nth_roots",
    "replicate_products",
    "j_squared",
    "scalar_embed",
    "distributivity_residual",
]

# Every filtered root reproduces the input to well below this once raised
# back; candidates that canonicalization turned into a reflection miss by
# O(1) angles, so the cut is not delicate.
_ROOT_CHECK_TOL = 1e-8
_ROOT_DEDUP_TOL = 1e-9


class ConjugateVariant(str, Enum):
    FULL = "full"      # negate every argument: h * conj(h) is real r^2
    SECOND = "second"  # 3D only, negate the longitude: product is r^2 e^(j 2 phi)
    THIRD = "third"    # 3D only, negate the latitude:  product is r^2 e^(i 2 theta)


@dataclass(frozen=True)
class RootSet:
    """Deduplicated m-th roots plus how many candidates survived pre-dedup."""

    roots: tuple[SphericalForm, ...]
    multiplicity_note: int


def conjugate(
    h: SphericalForm, variant: ConjugateVariant | str = ConjugateVariant.FULL
) -> SphericalForm:
    """One of the three conjugates, canonicalized.

    ``full`` works in any dimension; ``second`` and ``third`` reflect across
    the two coordinate planes of 3D space and are rejected elsewhere.
    """
    variant = ConjugateVariant(variant)
    if variant is ConjugateVariant.FULL:
        return canonicalize(SphericalForm(h.modulus, tuple(-t for t in h.args)))
    if h.dim != 3:
        raise ValueError(
            f"{variant.value} conjugate is defined for dimension 3 only, got {h.dim}"
        )
    theta, phi = h.args
    if variant is ConjugateVariant.SECOND:
        return canonicalize(SphericalForm(h.modulus, (-theta, phi)))
    return canonicalize(SphericalForm(h.modulus, (theta, -phi)))


def replicate(h: SphericalForm, k: int) -> SphericalForm:
    """The replicate tuple at latitude index ``k``: ``theta_k -> pi - theta_k``,
    ``theta_{k-1} -> theta_{k-1} + pi``.

    Returned raw (not canonicalized): the point is the same, the tuple is the
    payload.  ``3 <= k <= dim``.
    """
    if not 3 <= k <= h.dim:
        raise ValueError(f"replicate index must be in [3, {h.dim}], got {k}")
    args = list(h.args)
    args[k - 2] = math.pi - args[k - 2]
    args[k - 3] = args[k - 3] + math.pi
    return SphericalForm(h.modulus, tuple(args))


def nth_roots(h: SphericalForm, m: int) -> RootSet:
    """All distinct m-th roots reachable from ``h`` and its replicates.

    Enumerates ``r' = r**(1/m)`` with every argument combination
    ``theta_k/m + 2*pi*j/m`` (``j = 0..m-1`` independently per argument),
    once for ``h`` itself and once for each single-index replicate form.
    Candidates are canonicalized, kept only if their m-th power lands back on
    ``h``'s Cartesian point, and deduplicated by Cartesian position.
    ``multiplicity_note`` counts the keepers before deduplication.

    Roots of zero are defined as the single zero value.
    """
    m = int(m)
    if m < 1:
        raise ValueError(f"root degree must be >= 1, got {m}")
    if h.modulus == 0.0:
        return RootSet((SphericalForm(0.0, (0.0,) * (h.dim - 1)),), 1)

    target = to_cartesian(h).components
    forms = [h] + [replicate(h, k) for k in range(3, h.dim + 1)]
    r_root = h.modulus ** (1.0 / m)
    step = TAU / m

    kept: list[tuple[SphericalForm, tuple[float, ...]]] = []
    survivors = 0
    for form in forms:
        base = tuple(t / m for t in form.args)
        for combo in itertools.product(range(m), repeat=h.dim - 1):
            cand = canonicalize(
                SphericalForm(r_root, tuple(b + j * step for b, j in zip(base, combo)))
            )
            back = to_cartesian(pow_int(cand, m)).components
            if not all(abs(p - t) <= _ROOT_CHECK_TOL for p, t in zip(back, target)):
                continue
            survivors += 1
            cart = to_cartesian(cand).components
            if not any(
                all(abs(c - kc) <= _ROOT_DEDUP_TOL for c, kc in zip(cart, other))
                for _, other in kept
            ):
                kept.append((cand, cart))
    return RootSet(tuple(root for root, _ in kept), survivors)


def replicate_products(
    a: SphericalForm, b: SphericalForm, canonical: bool = False
) -> tuple[SphericalForm, ...]:
    """The four products of two 3D values, one per choice of replicate.

    All share modulus ``r r'`` and longitude ``theta' + theta''``; the
    latitudes are ``phi' + phi''``, ``phi'' - phi'``, ``phi' - phi''`` and
    ``-phi' - phi''`` (pairwise opposite: 1st/4th and 2nd/3rd).  Reported raw
    by default since the spread of latitudes is the point; pass
    ``canonical=True`` for reduced tuples.
    """
    if a.dim != 3 or b.dim != 3:
        raise ValueError("replicate products are enumerated for dimension 3 only")
    r = a.modulus * b.modulus
    lon = a.args[0] + b.args[0]
    pa, pb = a.args[1], b.args[1]
    prods = tuple(
        SphericalForm(r, (lon, lat)) for lat in (pa + pb, pb - pa, pa - pb, -pa - pb)
    )
    if canonical:
        return tuple(canonicalize(p) for p in prods)
    return prods


def j_squared(theta: float) -> tuple[float, float]:
    """Square of the second imaginary unit sitting at longitude ``theta``.

    The unit is insensitive to rotation in the base complex plane, so its
    square is the plain complex number ``exp(i*(2*theta + pi))`` -- returned
    as an ``(re, im)`` pair: -1 at theta=0, +1 at theta=pi/2, -i at theta=pi/4.
    """
    return (-math.cos(2.0 * theta), -math.sin(2.0 * theta))


def scalar_embed(s: float, dim: int) -> SphericalForm:
    """The dim-N value that scales every Cartesian component by ``s``.

    Non-negative ``s`` is ``(s, 0, ..., 0)``.  Negative ``s`` is ``(|s|, 0,
    ..., 0, pi)``: the pi in the *last* argument flips every component at
    once.  Returned raw -- canonicalizing would trade the tuple for one that
    is Cartesian-equivalent but multiplies differently (it would only negate
    the first two components).
    """
    if dim < 2:
        raise ValueError("dimension must be >= 2")
    s = float(s)
    if s >= 0.0:
        return SphericalForm(s, (0.0,) * (dim - 1))
    args = [0.0] * (dim - 1)
    args[-1] = math.pi
    return SphericalForm(-s, tuple(args))


def distributivity_residual(
    a: CartesianVec,
    b: CartesianVec,
    c: CartesianVec,
    a_fallback: Optional[DegenerateArgs] = None,
    b_fallback: Optional[DegenerateArgs] = None,
    c_fallback: Optional[DegenerateArgs] = None,
    sum_fallback: Optional[DegenerateArgs] = None,
) -> CartesianVec:
    """``a*(b + c) - (a*b + a*c)``, componentwise.

    Zero exactly when b and c are collinear through the origin (equal
    longitude and latitude); generically nonzero -- the product does not
    distribute over addition.  Degenerate operands need fallbacks, including
    ``sum_fallback`` for ``b + c``; degenerate-longitude errors propagate.
    """
    lhs = mul_cartesian(a, add(b, c), a_fallback, sum_fallback)
    ab = mul_cartesian(a, b, a_fallback, b_fallback)
    ac = mul_cartesian(a, c, a_fallback, c_fallback)
    return CartesianVec(
        tuple(
            l - (p + q)
            for l, p, q in zip(lhs.components, ab.components, ac.components)
        )
    )
