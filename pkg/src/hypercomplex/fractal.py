"""Escape-time 3D Mandelbrot generator over a sampled box.

Two iteration schemes for ``h_{n+1} = h_n**2 + c`` on 3D values:

* ``first`` -- squares through the Cartesian product formula.  Orbits with
  ``c_z = 0`` never leave the z = 0 plane and reproduce the classical complex
  escape map bit for bit.
* ``second`` -- squares through doubled arguments of an alternative angle
  resolution (longitude in (-pi/2, pi/2], latitude in (-pi, pi]).  Orbits
  with ``c_y = 0`` stay in the y = 0 plane, where the map is the classical
  complex one under the substitution y -> z.

Both kernels exist as scalar steps and as vectorized lattice kernels that
apply the identical floating-point expression trees, so per-cell results are
bitwise independent of grid shape, tiling and parallelism.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import CartesianVec

__all__ = [
    "FractalConfig",
    "MembershipGrid",
    "axis_centers",
    "iterate_first",
    "iterate_second",
    "escape_time",
    "render_grid",
    "escape_byte",
    "export_grid",
]

_APPROACHES = ("first", "second")
_AXES = ("x", "y", "z")
_MAX_CELLS = 1 << 26  # lattice guard, ~0.5 GiB of float64 state


@dataclass(frozen=True)
class FractalConfig:
    """Sampling box, resolution and iteration budget for one render.

    The escape radius is pinned at 2.0: membership is only meaningful inside
    that disk, and every exporter and oracle assumes it.
    """

    approach: str = "first"
    n_max: int = 100
    escape_radius: float = 2.0
    region: tuple[tuple[float, float], ...] = ((-2.0, 2.0), (-2.0, 2.0), (-2.0, 2.0))
    resolution: tuple[int, int, int] = (64, 64, 64)
    slice_spec: Optional[tuple[str, float]] = None

    def __post_init__(self):
        if self.approach not in _APPROACHES:
            raise ValueError(f"approach must be one of {_APPROACHES}")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if self.escape_radius != 2.0:
            raise ValueError("escape radius is fixed at 2.0")
        region = tuple((float(lo), float(hi)) for lo, hi in self.region)
        object.__setattr__(self, "region", region)
        if len(region) != 3 or any(hi < lo for lo, hi in region):
            raise ValueError("region must be three inclusive intervals")
        res = tuple(int(r) for r in self.resolution)
        object.__setattr__(self, "resolution", res)
        if len(res) != 3 or any(r < 1 for r in res):
            raise ValueError("resolution components must be >= 1")
        if res[0] * res[1] * res[2] > _MAX_CELLS:
            raise ValueError(f"lattice larger than {_MAX_CELLS} cells")
        if self.slice_spec is not None:
            axis, value = self.slice_spec
            if axis not in _AXES:
                raise ValueError("slice axis must be one of x, y, z")
            object.__setattr__(self, "slice_spec", (axis, float(value)))


@dataclass(frozen=True, eq=False)
class MembershipGrid:
    """Escape-iteration counts on the lattice, shape = resolution.

    ``counts[ix, iy, iz]`` is the first iteration whose state left the
    radius-2 disk, or ``n_max`` for cells that never did (members).
    """

    config: FractalConfig
    counts: np.ndarray


def axis_centers(lo: float, hi: float, n: int) -> np.ndarray:
    """Cell-center coordinates of an n-cell axis over [lo, hi]."""
    return lo + (hi - lo) * (np.arange(n) + 0.5) / n


# -- scalar steps -----------------------------------------------------------
# The vectorized kernels below must keep these exact expression trees.

def _step_first(x, y, z, cx, cy, cz):
    rho2 = x * x + y * y
    if rho2 == 0.0:
        # pure z-axis state: squaring needs a longitude, fixed at 0 so the
        # iteration stays deterministic
        return -(z * z) + cx, cy, cz
    f = 1.0 - (z * z) / rho2
    return (
        (x * x - y * y) * f + cx,
        (2.0 * x * y) * f + cy,
        (2.0 * z) * math.sqrt(rho2) + cz,
    )


def _step_second(x, y, z, cx, cy, cz):
    # Doubled-angle square of the alternative resolution, evaluated through
    # exact half-angle algebra instead of trig calls:
    #   cos 2T = (x^2 - y^2)/rho^2      sin 2T = 2xy/rho^2
    #   cos 2P = (rho^2 - z^2)/r^2      sin 2P = s*2*rho*z/r^2
    # with s = -1 in the x < 0 (or x = 0, y < 0) half-space where the
    # latitude is offset by +-pi.  The r^2 modulus of the square cancels the
    # 1/r^2 of the doubled angles.
    rho2 = x * x + y * y
    if rho2 == 0.0:
        if z == 0.0:
            return cx, cy, cz  # undetermined latitude: next state is just c
        # pure z-axis state: same zero-longitude rule as the first approach
        # (T = 0, P = +-pi/2), keeping the y = 0 plane exactly complex
        return -(z * z) + cx, cy, cz
    t = rho2 - z * z
    rho = math.sqrt(rho2)
    srho = rho if (x > 0.0 or (x == 0.0 and y > 0.0)) else -rho
    return (
        ((x * x - y * y) / rho2) * t + cx,
        ((2.0 * x * y) / rho2) * t + cy,
        (2.0 * srho) * z + cz,
    )


def iterate_first(state: CartesianVec, c: CartesianVec) -> CartesianVec:
    """One Cartesian-formula step of ``h -> h**2 + c`` (3D)."""
    _require3(state, c)
    return CartesianVec(_step_first(*state.components, *c.components))


def iterate_second(state: CartesianVec, c: CartesianVec) -> CartesianVec:
    """One doubled-angle step of ``h -> h**2 + c`` (3D)."""
    _require3(state, c)
    return CartesianVec(_step_second(*state.components, *c.components))


def _require3(*vs: CartesianVec):
    for v in vs:
        if v.dim != 3:
            raise ValueError(f"expected dimension 3, got {v.dim}")


def escape_time(c: CartesianVec, cfg: FractalConfig) -> int:
    """First n in [1, n_max] with |h_n| > 2, else n_max (member).

    The comparison is on squared moduli, which is the same predicate without
    a square root in the loop.
    """
    _require3(c)
    step = _step_first if cfg.approach == "first" else _step_second
    cx, cy, cz = c.components
    esc2 = cfg.escape_radius * cfg.escape_radius
    x = y = z = 0.0
    for n in range(1, cfg.n_max + 1):
        x, y, z = step(x, y, z, cx, cy, cz)
        if x * x + y * y + z * z > esc2:
            return n
    return cfg.n_max


# -- vectorized lattice kernels ---------------------------------------------

def _grid_step_first(X, Y, Z, CX, CY, CZ):
    RHO2 = X * X + Y * Y
    deg = RHO2 == 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        F = 1.0 - (Z * Z) / RHO2
        XN = np.where(deg, -(Z * Z) + CX, (X * X - Y * Y) * F + CX)
        YN = np.where(deg, CY, (2.0 * X * Y) * F + CY)
        ZN = np.where(deg, CZ, (2.0 * Z) * np.sqrt(RHO2) + CZ)
    return XN, YN, ZN


def _grid_step_second(X, Y, Z, CX, CY, CZ):
    RHO2 = X * X + Y * Y
    deg = RHO2 == 0.0
    zero = deg & (Z == 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        T = RHO2 - Z * Z
        RHO = np.sqrt(RHO2)
        SRHO = np.where((X > 0.0) | ((X == 0.0) & (Y > 0.0)), RHO, -RHO)
        XN = np.where(
            zero, CX, np.where(deg, -(Z * Z) + CX, ((X * X - Y * Y) / RHO2) * T + CX)
        )
        YN = np.where(deg, CY, ((2.0 * X * Y) / RHO2) * T + CY)
        ZN = np.where(deg, CZ, (2.0 * SRHO) * Z + CZ)
    return XN, YN, ZN


def _render_block(cfg: FractalConfig, xs, ys, zs) -> np.ndarray:
    CX, CY, CZ = np.meshgrid(xs, ys, zs, indexing="ij")
    grid_step = _grid_step_first if cfg.approach == "first" else _grid_step_second
    esc2 = cfg.escape_radius * cfg.escape_radius
    shape = CX.shape
    X = np.zeros(shape)
    Y = np.zeros(shape)
    Z = np.zeros(shape)
    counts = np.full(shape, cfg.n_max, dtype=np.int32)
    active = np.ones(shape, dtype=bool)
    for n in range(1, cfg.n_max + 1):
        XN, YN, ZN = grid_step(X, Y, Z, CX, CY, CZ)
        X = np.where(active, XN, X)
        Y = np.where(active, YN, Y)
        Z = np.where(active, ZN, Z)
        escaped = active & ((X * X + Y * Y) + Z * Z > esc2)
        counts[escaped] = n
        active &= ~escaped
        if not active.any():
            break
    return counts


def render_grid(cfg: FractalConfig, workers: int = 1) -> MembershipGrid:
    """Escape time at every cell center of the configured lattice.

    ``workers > 1`` splits the lattice into z-slabs computed concurrently;
    each cell is independent, so the counts are bitwise identical for any
    worker count.
    """
    xs = axis_centers(cfg.region[0][0], cfg.region[0][1], cfg.resolution[0])
    ys = axis_centers(cfg.region[1][0], cfg.region[1][1], cfg.resolution[1])
    zs = axis_centers(cfg.region[2][0], cfg.region[2][1], cfg.resolution[2])
    nz = cfg.resolution[2]
    if workers <= 1 or nz == 1:
        counts = _render_block(cfg, xs, ys, zs)
    else:
        counts = np.empty(cfg.resolution, dtype=np.int32)
        bounds = [(b[0], b[-1] + 1) for b in np.array_split(np.arange(nz), min(workers, nz))]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            slabs = pool.map(
                lambda se: _render_block(cfg, xs, ys, zs[se[0]:se[1]]), bounds
            )
            for (start, end), slab in zip(bounds, slabs):
                counts[:, :, start:end] = slab
    counts.flags.writeable = False
    return MembershipGrid(config=cfg, counts=counts)


# -- exporters ---------------------------------------------------------------

def escape_byte(n: int, n_max: int) -> int:
    """Byte coding shared by PGM and voxel output: 0 = member, escape at n
    maps to ``1 + floor(254*(n - 1)/(n_max - 1))``."""
    if n >= n_max:
        return 0
    return 1 + (254 * (n - 1)) // (n_max - 1)


def _byte_array(counts: np.ndarray, n_max: int) -> np.ndarray:
    if n_max == 1:
        return np.zeros(counts.shape, dtype=np.uint8)  # every cell is a member
    scaled = 1 + (254 * (counts - 1)) // (n_max - 1)
    return np.where(counts >= n_max, 0, scaled).astype(np.uint8)


def _slice_plane(grid: MembershipGrid):
    """2D view of the sliced plane plus (width, height) image geometry."""
    if grid.config.slice_spec is None:
        raise ValueError("config has no slice; pgm_slice needs one")
    axis, value = grid.config.slice_spec
    ai = _AXES.index(axis)
    centers = axis_centers(*grid.config.region[ai], grid.config.resolution[ai])
    idx = int(np.argmin(np.abs(centers - value)))
    plane = np.take(grid.counts, idx, axis=ai)
    # remaining axes in (x, y, z) order: first is image width, second height
    return plane, plane.shape[0], plane.shape[1]


def export_grid(grid: MembershipGrid, fmt: str, destination) -> None:
    """Write ``grid`` to ``destination`` as ``pgm_slice``, ``csv`` or
    ``voxel_raw`` (the latter with a ``<destination>.meta`` sidecar)."""
    cfg = grid.config
    if fmt == "pgm_slice":
        plane, width, height = _slice_plane(grid)
        data = _byte_array(plane, cfg.n_max)
        with open(destination, "wb") as fh:
            fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
            for row in range(height - 1, -1, -1):  # top row = highest coordinate
                fh.write(data[:, row].tobytes())
    elif fmt == "csv":
        xs = axis_centers(*cfg.region[0], cfg.resolution[0])
        ys = axis_centers(*cfg.region[1], cfg.resolution[1])
        zs = axis_centers(*cfg.region[2], cfg.resolution[2])
        with open(destination, "w", encoding="ascii") as fh:
            fh.write("x,y,z,escape\n")
            for iz, zc in enumerate(zs):
                for iy, yc in enumerate(ys):
                    for ix, xc in enumerate(xs):
                        n = int(grid.counts[ix, iy, iz])
                        esc = -1 if n >= cfg.n_max else n
                        fh.write(f"{xc:.9e},{yc:.9e},{zc:.9e},{esc}\n")
    elif fmt == "voxel_raw":
        data = _byte_array(grid.counts, cfg.n_max)
        with open(destination, "wb") as fh:
            fh.write(data.transpose(2, 1, 0).tobytes())  # x fastest, then y, then z
        with open(f"{destination}.meta", "w", encoding="ascii") as fh:
            fh.write(f"region={cfg.region!r}\n")
            fh.write(f"resolution={cfg.resolution!r}\n")
            fh.write(f"approach={cfg.approach}\n")
            fh.write(f"n_max={cfg.n_max}\n")
    else:
        raise ValueError(f"unknown export format {fmt!r}")
