"""Bipolar distributions and grid verification of their maximality.

For alpha = 1 the symmetric bipolar distribution (total mass split equally
across one diameter pair) maximizes polarization over all distributions on
a fixed graph.  This module builds that distribution, implements the
constructive merge step used to prove it, certifies maximality over
exhaustive simplex grids, and searches the three-node family
g_xy = g_xz <= g_yz = g_xz + eps for distributions beating the bipolar one
when alpha != 1.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DomainError,
    FewerThanFourMassPointsError,
    SingleNodeError,
    StepTooSmallError,
    TooManyNodesError,
    UnequalTotalMassError,
    ZeroTotalMassError,
)
from .graph import DistanceMatrix, Network, geodesic_distances, validate_network
from .measures import MeasureParams, bipolar_maximum_value, polarization

PAIR_TOLERANCE = 1e-12
MAX_GRID_NODES = 6
MAX_GRID_POINTS = 5_000_000


@dataclass(frozen=True)
class BipolarSpec:
    """Diameter pair and the half-mass placed on each of its nodes."""

    pair: tuple[str, str]
    half_mass: float


@dataclass(frozen=True)
class ExtremalReport:
    node_count: int
    alpha: float
    grid_step: float
    bipolar_value: float
    best_value: float
    best_distribution: tuple[float, ...]
    is_bipolar_max: bool
    witness: tuple[float, ...] | None

    def to_json(self) -> str:
        return json.dumps(
            {
                "node_count": self.node_count,
                "alpha": self.alpha,
                "grid_step": self.grid_step,
                "bipolar_value": self.bipolar_value,
                "best_value": self.best_value,
                "best_distribution": list(self.best_distribution),
                "is_bipolar_max": self.is_bipolar_max,
                "witness": None if self.witness is None else list(self.witness),
            },
            indent=2,
            sort_keys=True,
        )


def bipolar_distribution(net: Network, dist: DistanceMatrix | None = None) -> Network:
    """Same graph with total mass split equally across the diameter pair."""
    if net.n < 2:
        raise SingleNodeError("bipolar distribution needs at least two nodes")
    total = net.total_mass
    if total <= 0:
        raise ZeroTotalMassError("bipolar distribution needs positive total mass")
    if dist is None:
        dist = geodesic_distances(net)
    u, v = dist.diameter_pair
    masses = tuple(
        total / 2.0 if i in (u, v) else 0.0 for i in net.ids
    )
    return replace(net, masses=masses)


def bipolar_spec(net: Network) -> BipolarSpec:
    dist = geodesic_distances(net)
    if dist.diameter_pair is None:
        raise SingleNodeError("bipolar distribution needs at least two nodes")
    return BipolarSpec(dist.diameter_pair, net.total_mass / 2.0)


def merge_reduction(net: Network) -> Network:
    """One step of the maximality proof's constructive reduction.

    Replaces the graph with the complete graph at uniform edge weight equal
    to the diameter and merges the two smallest positive masses onto one
    node.  Requires at least four positive mass points; polarization at
    alpha = 1 strictly increases.
    """
    masses = list(net.masses)
    positive = [i for i, m in enumerate(masses) if m > 0]
    if len(positive) < 4:
        raise FewerThanFourMassPointsError("merge step needs >= 4 positive mass points")
    dist = geodesic_distances(net)
    # two smallest positive masses, ties broken by node order
    smallest, second = sorted(positive, key=lambda i: (masses[i], i))[:2]
    masses[second] += masses[smallest]
    masses[smallest] = 0.0
    edges = [
        (u, v, dist.diameter) for u, v in itertools.combinations(net.ids, 2)
    ]
    return validate_network(list(zip(net.ids, masses)), edges)


def simplex_grid(n: int, units: int) -> np.ndarray:
    """All compositions of ``units`` into ``n`` parts, scaled to sum to 1."""
    combos = itertools.combinations(range(units + n - 1), n - 1)
    rows = np.fromiter(
        (x for combo in combos for x in _composition(combo, units, n)),
        dtype=float,
    ).reshape(-1, n)
    return rows / units


def _composition(dividers: tuple[int, ...], units: int, n: int):
    prev = -1
    for d in dividers:
        yield d - prev - 1
        prev = d
    yield units + n - 1 - prev - 1


def grid_values(grid: np.ndarray, d: np.ndarray, alpha: float, K: float = 1.0) -> np.ndarray:
    """P_alpha of every grid row on the distance matrix ``d``, vectorized."""
    weights = (grid[:, :, None] ** (1.0 + alpha)) * grid[:, None, :]
    return K * np.einsum("aij,ij->a", weights, d)


def _bipolar_equivalent_mask(grid: np.ndarray, d: np.ndarray, diameter: float) -> np.ndarray:
    """Rows that split the mass half-half across some diameter pair."""
    n = grid.shape[1]
    mask = np.zeros(len(grid), dtype=bool)
    for i, j in itertools.combinations(range(n), 2):
        if abs(d[i, j] - diameter) <= PAIR_TOLERANCE * max(diameter, 1.0):
            on_pair = (np.abs(grid[:, i] - 0.5) < 1e-15) & (np.abs(grid[:, j] - 0.5) < 1e-15)
            mask |= on_pair
    return mask


def verify_bipolar_max(
    net: Network,
    alpha: float = 1.0,
    grid_step: float = 1.0 / 6.0,
    max_nodes: int = MAX_GRID_NODES,
) -> ExtremalReport:
    """Exhaustively compare the bipolar distribution against a simplex grid.

    Total mass is normalized to 1 internally (order-safe by homotheticity).
    Distributions equal to a half-half split on any diameter pair count as
    bipolar and are excluded from the comparison; the report flags whether
    the bipolar value strictly dominates everything else on the grid.
    """
    if net.n > max_nodes:
        raise TooManyNodesError(f"{net.n} nodes exceed the exhaustive-mode limit {max_nodes}")
    if net.n < 2:
        raise SingleNodeError("need at least two nodes")
    units = round(1.0 / grid_step)
    if units < 1 or abs(units * grid_step - 1.0) > 1e-9:
        raise StepTooSmallError(f"grid step {grid_step} must evenly divide 1")
    if math.comb(units + net.n - 1, net.n - 1) > MAX_GRID_POINTS:
        raise StepTooSmallError(f"grid step {grid_step} creates too many points")

    dist = geodesic_distances(net)
    params = MeasureParams(1.0, alpha)
    # total mass normalized to 1: bipolar reference is d(g) * 2 * (1/2)^(2+alpha)
    unit_mass = replace(net, masses=(1.0,) + (0.0,) * (net.n - 1))
    bipolar_value = bipolar_maximum_value(unit_mass, params, dist)

    grid = simplex_grid(net.n, units)
    values = grid_values(grid, dist.d, alpha)
    excluded = _bipolar_equivalent_mask(grid, dist.d, dist.diameter)
    values = np.where(excluded, -np.inf, values)
    best = int(np.argmax(values))
    best_value = float(values[best])
    is_max = best_value < bipolar_value
    witness = None if is_max else tuple(grid[best])
    return ExtremalReport(
        node_count=net.n,
        alpha=alpha,
        grid_step=grid_step,
        bipolar_value=bipolar_value,
        best_value=best_value,
        best_distribution=tuple(grid[best]),
        is_bipolar_max=is_max,
        witness=witness,
    )


DEFAULT_EPS_GRID = (1e-3, 1e-2, 0.05, 0.1)
DEFAULT_MASS_STEP = 1.0 / 64.0


def counterexample_search(
    alpha: float,
    eps_grid: tuple[float, ...] = DEFAULT_EPS_GRID,
    mass_step: float = DEFAULT_MASS_STEP,
    base_distance: float = 1.0,
) -> dict | None:
    """Search three-node graphs g_xy = g_xz = b, g_yz = b + eps for a
    distribution that beats the symmetric bipolar one at the given exponent.

    Returns the first witness found as a dict, or ``None`` when the whole
    grid is dominated by the bipolar value for every eps.
    """
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    if alpha == 1.0:
        raise DomainError("the bipolar distribution is maximal at alpha = 1")
    units = round(1.0 / mass_step)
    grid = simplex_grid(3, units)
    b = base_distance
    for eps in eps_grid:
        if eps > b:
            continue  # would break the triangle inequality
        d = np.array([[0.0, b, b], [b, 0.0, b + eps], [b, b + eps, 0.0]])
        diameter = b + eps
        bipolar_value = 2.0 * 0.5 ** (2.0 + alpha) * diameter
        values = grid_values(grid, d, alpha)
        excluded = _bipolar_equivalent_mask(grid, d, diameter)
        beating = np.where(~excluded & (values > bipolar_value))[0]
        if beating.size:
            k = int(beating[0])
            return {
                "eps": eps,
                "base_distance": b,
                "alpha": alpha,
                "masses": [float(x) for x in grid[k]],
                "value": float(values[k]),
                "bipolar_value": bipolar_value,
            }
    return None


def diameter_dominance_check(g1: Network, g2: Network) -> bool:
    """Larger diameter implies larger bipolar polarization at equal mass.

    Vacuously true when the diameters are equal.
    """
    if abs(g1.total_mass - g2.total_mass) > 1e-12 * max(g1.total_mass, g2.total_mass, 1.0):
        raise UnequalTotalMassError("networks must carry equal total mass")
    d1 = geodesic_distances(g1)
    d2 = geodesic_distances(g2)
    if d1.diameter == d2.diameter:
        return True
    params = MeasureParams()
    p1 = polarization(bipolar_distribution(g1, d1), params, d1).value
    p2 = polarization(bipolar_distribution(g2, d2), params, d2).value
    if d1.diameter > d2.diameter:
        return p1 > p2
    return p2 > p1
