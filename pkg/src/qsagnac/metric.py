"""Metric of a uniformly rotating disk and its flat-background split.

Coordinates are (t, r, phi, z). The disk spinning at angular frequency
omega has g00 = -1 + omega^2 r^2 / c^2 and the frame-dragging coupling
g0phi = omega r^2 / c; the background is the flat cylindrical metric
diag(-1, 1, r^2, 1), so the perturbation h = g - background carries
h00 = omega^2 r^2 / c^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import ConstantSet, RegimeStatus, regime_check


@dataclass(frozen=True)
class DiskMetric:
    g: np.ndarray  # 4x4 components in coordinate order (t, r, phi, z)
    omega: float
    r: float
    c: float       # light speed used to build the components


@dataclass(frozen=True)
class Perturbation:
    h00: float        # omega^2 r^2 / c^2
    h0phi: float      # omega r^2 / c
    full: np.ndarray  # g minus the flat cylindrical background


def flat_background(r: float) -> np.ndarray:
    """Cylindrical Minkowski metric diag(-1, 1, r^2, 1)."""
    return np.diag([-1.0, 1.0, r * r, 1.0])


def rotating_disk_metric(omega: float, r: float, consts: ConstantSet) -> DiskMetric:
    """Metric components at radius r on a disk spinning at omega.

    Rejects negative radii and rim speeds at or above c.
    """
    check = regime_check(omega, r, consts)
    if check.status is RegimeStatus.ERROR:
        raise ValueError(
            f"rim speed {check.beta:g}c is outside the linear regime"
        )
    g = flat_background(r)
    rim = omega * r / consts.c
    g[0, 0] = -1.0 + rim * rim
    g[0, 2] = g[2, 0] = omega * r * r / consts.c
    return DiskMetric(g=g, omega=float(omega), r=float(r), c=consts.c)


def perturbation(metric: DiskMetric) -> Perturbation:
    """Split the metric into flat background plus deviation.

    The h00 and h0phi fields come from the closed forms; the full array is
    the componentwise difference, which adds back to the metric exactly.
    """
    rim = metric.omega * metric.r / metric.c
    return Perturbation(
        h00=rim * rim,
        h0phi=float(metric.g[0, 2]),
        full=metric.g - flat_background(metric.r),
    )
