"""Numerical checks of the three axiom families on small scenarios.

Each scenario is a two- or three-point configuration given by masses and
pairwise geodesic distances; both sides of an axiom's conclusion are
evaluated as explicit P_alpha sums and compared.  Randomized suites sample
valid scenarios from seeded ranges and report the first failing witness.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, asdict

import numpy as np

from .alpha_bounds import f_eval
from .errors import EmptyRangeError, InvalidScenarioError, ThresholdNotMetError


@dataclass(frozen=True)
class AxiomScenario:
    """One concrete instance of an axiom's antecedent.

    A1 uses masses (p, q, q) at distances (d_xy, d_xz, d_yz) and merges the
    two small groups.  A2 uses masses (p, q, r) and shifts the middle group
    by ``perturbation`` toward the smaller extreme.  A3/A3c use masses
    (p, q, q) with d_xy = d_xz = d, d_yz = c_bar * d, and move
    ``perturbation`` mass from the middle to each lateral node.
    """

    kind: str
    alpha: float
    p: float
    q: float
    r: float | None = None
    d_xy: float | None = None
    d_xz: float | None = None
    d_yz: float | None = None
    d: float | None = None
    c_bar: float | None = None
    perturbation: float | None = None
    c_threshold: float | None = None

    def validate(self) -> None:
        if self.alpha <= 0:
            raise InvalidScenarioError("alpha must be positive")
        if self.kind == "A1":
            if not (self.p > self.q > 0):
                raise InvalidScenarioError("A1 needs pi_x > pi_y = pi_z > 0")
            if None in (self.d_xy, self.d_xz, self.d_yz):
                raise InvalidScenarioError("A1 needs d_xy, d_xz, d_yz")
            if not (0 < self.d_xy <= self.d_xz) or self.d_yz < 0:
                raise InvalidScenarioError("A1 needs 0 < d_xy <= d_xz and d_yz >= 0")
        elif self.kind == "A2":
            if self.r is None or not (self.p > self.r > 0) or not self.q > 0:
                raise InvalidScenarioError("A2 needs pi_x > pi_z > 0 and pi_y > 0")
            if None in (self.d_xy, self.d_xz, self.d_yz):
                raise InvalidScenarioError("A2 needs d_xy, d_xz, d_yz")
            if not (self.d_xz > self.d_xy > self.d_yz > 0):
                raise InvalidScenarioError("A2 needs d_xz > d_xy > d_yz > 0")
            delta = self.perturbation
            if delta is None or not 0 < delta:
                raise InvalidScenarioError("A2 needs a positive shift")
            if not (self.d_xy + delta < self.d_xz and self.d_yz - delta > 0):
                raise InvalidScenarioError("A2 shift outside the admissible window")
        elif self.kind in ("A3", "A3c"):
            if not (self.p > 0 and self.q > 0):
                raise InvalidScenarioError("A3 needs positive masses")
            if self.d is None or not self.d > 0:
                raise InvalidScenarioError("A3 needs d > 0")
            if self.c_bar is None or not self.c_bar > 1:
                raise InvalidScenarioError("A3 needs lateral ratio c_bar > 1")
            delta = self.perturbation
            if delta is None or not (0 < delta <= self.p / 2):
                raise InvalidScenarioError("A3 needs reallocation in (0, pi_x / 2]")
            if self.kind == "A3c" and self.c_threshold is None:
                raise InvalidScenarioError("A3c needs a threshold c")
        else:
            raise InvalidScenarioError(f"unknown scenario kind {self.kind!r}")


@dataclass(frozen=True)
class AxiomVerdict:
    before: float
    after: float
    satisfied: bool
    margin: float
    closed_form: bool | None = None  # A1: proof inequality cross-check
    f_value: float | None = None     # A3: local derivative sign carrier


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    alpha: float
    c: float | None
    samples: int
    failures: int
    seed: int
    witness: dict | None

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def _p3(masses, distances, alpha: float, K: float) -> float:
    """P_alpha of a three-point configuration with prescribed distances."""
    (mx, my, mz), (dxy, dxz, dyz) = masses, distances
    return K * (
        mx ** (1 + alpha) * (my * dxy + mz * dxz)
        + my ** (1 + alpha) * (mx * dxy + mz * dyz)
        + mz ** (1 + alpha) * (mx * dxz + my * dyz)
    )


def check_axiom1(s: AxiomScenario, K: float = 1.0) -> AxiomVerdict:
    """Merge the two small groups at their average distance from the big one.

    ``closed_form`` reports the proof's equivalent inequality
    (2^alpha - 1)(d_xy + d_xz) p > 2 q d_yz for cross-validation.
    """
    if s.kind != "A1":
        raise InvalidScenarioError(f"expected kind A1, got {s.kind!r}")
    s.validate()
    a = s.alpha
    before = _p3((s.p, s.q, s.q), (s.d_xy, s.d_xz, s.d_yz), a, K)
    d_merged = (s.d_xy + s.d_xz) / 2.0
    w = 2.0 * s.q
    after = K * (s.p ** (1 + a) * w + w ** (1 + a) * s.p) * d_merged
    margin = after - before
    closed = (2.0 ** a - 1.0) * (s.d_xy + s.d_xz) * s.p > 2.0 * s.q * s.d_yz
    return AxiomVerdict(before, after, margin > 0, margin, closed_form=closed)


def check_axiom2(s: AxiomScenario, K: float = 1.0) -> AxiomVerdict:
    """Shift the middle group toward the smaller extreme by the given step."""
    if s.kind != "A2":
        raise InvalidScenarioError(f"expected kind A2, got {s.kind!r}")
    s.validate()
    delta = s.perturbation
    masses = (s.p, s.q, s.r)
    before = _p3(masses, (s.d_xy, s.d_xz, s.d_yz), s.alpha, K)
    after = _p3(masses, (s.d_xy + delta, s.d_xz, s.d_yz - delta), s.alpha, K)
    margin = after - before
    return AxiomVerdict(before, after, margin > 0, margin)


def check_axiom3(s: AxiomScenario, K: float = 1.0) -> AxiomVerdict:
    """Move mass from the middle node to the two equidistant lateral nodes.

    ``f_value`` carries f(q/p, alpha, c_bar); a negative value predicts a
    local polarization increase for outward reallocation.
    """
    if s.kind not in ("A3", "A3c"):
        raise InvalidScenarioError(f"expected kind A3 or A3c, got {s.kind!r}")
    s.validate()
    if s.kind == "A3c" and s.c_bar < s.c_threshold:
        raise ThresholdNotMetError(
            f"lateral ratio {s.c_bar} below the fixed threshold {s.c_threshold}"
        )
    delta = s.perturbation
    dists = (s.d, s.d, s.c_bar * s.d)
    before = _p3((s.p, s.q, s.q), dists, s.alpha, K)
    after = _p3((s.p - 2 * delta, s.q + delta, s.q + delta), dists, s.alpha, K)
    margin = after - before
    fval = float(f_eval(s.q / s.p, s.alpha, min(s.c_bar, 2.0))) if s.c_bar <= 2.0 else None
    return AxiomVerdict(before, after, margin > 0, margin, f_value=fval)


_CHECKS = {"A1": check_axiom1, "A2": check_axiom2, "A3": check_axiom3, "A3c": check_axiom3}


@dataclass(frozen=True)
class SamplerRanges:
    """Log-uniform sampling ranges for masses, distances and c_bar."""

    mass: tuple[float, float] = (0.1, 10.0)
    dist: tuple[float, float] = (0.1, 10.0)
    c_bar: tuple[float, float] = (1.0, 2.0)  # open at the left end

    def validate(self) -> None:
        for name, (lo, hi) in (("mass", self.mass), ("dist", self.dist), ("c_bar", self.c_bar)):
            if not (0 < lo < hi):
                raise EmptyRangeError(f"empty {name} range ({lo}, {hi})")


def _log_uniform(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(np.exp(rng.uniform(math.log(lo), math.log(hi))))


def _sample_scenario(kind: str, alpha: float, rng: np.random.Generator,
                     ranges: SamplerRanges, c_threshold: float | None,
                     a1_closed_form_only: bool) -> AxiomScenario:
    mlo, mhi = ranges.mass
    dlo, dhi = ranges.dist
    if kind == "A1":
        while True:
            p = _log_uniform(rng, mlo, mhi)
            q = p * rng.uniform(0.01, 0.99)
            d1 = _log_uniform(rng, dlo, dhi)
            d2 = _log_uniform(rng, dlo, dhi)
            d_xy, d_xz = min(d1, d2), max(d1, d2)
            # metric consistency: the three distances satisfy the triangle inequality
            d_yz = rng.uniform(d_xz - d_xy, d_xz + d_xy)
            if a1_closed_form_only and not (
                (2.0 ** alpha - 1.0) * (d_xy + d_xz) * p > 2.0 * q * d_yz
            ):
                continue
            return AxiomScenario("A1", alpha, p, q, d_xy=d_xy, d_xz=d_xz, d_yz=d_yz)
    if kind == "A2":
        p = _log_uniform(rng, mlo, mhi)
        r = p * rng.uniform(0.01, 0.99)
        q = _log_uniform(rng, mlo, mhi)
        d_xy = _log_uniform(rng, dlo, dhi)
        d_yz = d_xy * rng.uniform(0.05, 0.95)
        d_xz = rng.uniform(d_xy, d_xy + d_yz)  # triangle-consistent, d_xz > d_xy
        delta = rng.uniform(0.0, min(d_xz - d_xy, d_yz))
        delta = max(delta, 1e-9 * d_xy)
        return AxiomScenario("A2", alpha, p, q, r=r, d_xy=d_xy, d_xz=d_xz,
                             d_yz=d_yz, perturbation=delta)
    if kind in ("A3", "A3c"):
        lo = c_threshold if (kind == "A3c" and c_threshold) else ranges.c_bar[0]
        if lo >= ranges.c_bar[1]:
            raise EmptyRangeError(
                f"threshold {lo} leaves no admissible c_bar below {ranges.c_bar[1]}"
            )
        c_bar = rng.uniform(max(lo, np.nextafter(ranges.c_bar[0], 2.0)), ranges.c_bar[1])
        p = _log_uniform(rng, mlo, mhi)
        q = _log_uniform(rng, mlo, mhi)
        d = _log_uniform(rng, dlo, dhi)
        delta = p / 2.0 * rng.uniform(0.01, 1.0)
        return AxiomScenario(kind, alpha, p, q, d=d, c_bar=c_bar,
                             perturbation=delta, c_threshold=c_threshold)
    raise InvalidScenarioError(f"unknown scenario kind {kind!r}")


def run_suite(
    axiom: str,
    alpha: float,
    count: int,
    seed: int,
    c: float | None = None,
    ranges: SamplerRanges | None = None,
    K: float = 1.0,
    a1_closed_form_only: bool = True,
) -> AxiomReport:
    """Run ``count`` seeded random scenarios of one axiom and tally verdicts.

    The witness, when present, is the lowest-index failing scenario together
    with its verdict.
    """
    if count < 1:
        raise EmptyRangeError("count must be at least 1")
    ranges = ranges or SamplerRanges()
    ranges.validate()
    check = _CHECKS[axiom] if axiom in _CHECKS else None
    if check is None:
        raise InvalidScenarioError(f"unknown axiom {axiom!r}")
    rng = np.random.default_rng(seed)
    failures = 0
    witness = None
    for i in range(count):
        s = _sample_scenario(axiom, alpha, rng, ranges, c, a1_closed_form_only)
        verdict = check(s, K)
        if not verdict.satisfied:
            failures += 1
            if witness is None:
                witness = {"index": i, "scenario": asdict(s), "verdict": asdict(verdict)}
    return AxiomReport(axiom, alpha, c, count, failures, seed, witness)
