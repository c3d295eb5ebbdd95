"""Construct networks from voting, preference and attribute data.

Each builder returns a validated :class:`~netpolar.graph.Network` whose
total node mass equals the input population.  Supported encodings: discrete
real-line distributions, unit complete graphs over groups, vote hypercubes,
representative / party / co-sponsorship networks from roll-call matrices,
Kemeny preference graphs, and norm-induced complete graphs on attribute
points.
"""

from __future__ import annotations

import csv
import itertools
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import (
    DisconnectedAgreementGraphError,
    DisconnectedPartyGraphError,
    DisconnectedError,
    DuplicatePositionError,
    EmptyPartyError,
    FewerThanTwoGroupsError,
    SchemaError,
    TooManyAlternativesError,
    TooManyBillsError,
)
from .graph import Network, validate_network

MAX_BILLS = 20        # vote hypercube has 2^k nodes
MAX_ALTERNATIVES = 7  # preference graph has m! nodes


@dataclass(frozen=True)
class VoteMatrix:
    """Binary voter-by-bill matrix with an optional party affiliation map."""

    voters: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]  # one row of k bits per voter
    party: dict[str, str] | None = None

    def __post_init__(self):
        if not self.voters:
            raise SchemaError("vote matrix needs at least one voter")
        if len(set(self.voters)) != len(self.voters):
            raise SchemaError("voter ids must be unique")
        k = len(self.entries[0]) if self.entries else 0
        if k < 1:
            raise SchemaError("vote matrix needs at least one bill")
        for voter, row in zip(self.voters, self.entries):
            if len(row) != k:
                raise SchemaError(f"voter {voter!r} has {len(row)} entries, expected {k}")
            if any(v not in (0, 1) for v in row):
                raise SchemaError(f"voter {voter!r} has non-binary entries")

    @property
    def k(self) -> int:
        return len(self.entries[0])


@dataclass(frozen=True)
class PreferenceProfile:
    """Counts of full rankings (linear orders) over a set of alternatives."""

    alternatives: tuple[str, ...]
    ballots: tuple[tuple[tuple[str, ...], float], ...]

    def __post_init__(self):
        if len(self.alternatives) < 2:
            raise SchemaError("need at least two alternatives")
        if len(set(self.alternatives)) != len(self.alternatives):
            raise SchemaError("alternatives must be distinct")
        universe = set(self.alternatives)
        for ranking, count in self.ballots:
            if set(ranking) != universe or len(ranking) != len(self.alternatives):
                raise SchemaError(f"ranking {ranking!r} is not a permutation of the alternatives")
            if not count > 0:
                raise SchemaError(f"ballot count must be positive, got {count}")


@dataclass(frozen=True)
class MassPoints:
    """Distinct positions in R^m, each carrying a non-negative mass."""

    points: tuple[tuple[tuple[float, ...], float], ...]

    def __post_init__(self):
        if not self.points:
            raise SchemaError("need at least one mass point")
        positions = [pos for pos, _ in self.points]
        if len(set(positions)) != len(positions):
            raise DuplicatePositionError("positions must be pairwise distinct")
        dim = len(positions[0])
        for pos, mass in self.points:
            if len(pos) != dim:
                raise SchemaError("all positions must have the same dimension")
            if not all(np.isfinite(pos)):
                raise SchemaError(f"non-finite coordinates in {pos!r}")
            if mass < 0:
                raise SchemaError(f"negative mass at {pos!r}")

    @property
    def dim(self) -> int:
        return len(self.points[0][0])


def _point_id(pos: tuple[float, ...]) -> str:
    return "(" + ",".join(f"{x:g}" for x in pos) + ")"


def build_line(points: MassPoints) -> Network:
    """Chain network of 1-D mass points, consecutive gaps as edge weights.

    Geodesic distances then reproduce |x_i - x_j| exactly, embedding a
    discrete distribution on the real line.
    """
    if points.dim != 1:
        raise DuplicatePositionError("build_line expects 1-D positions")
    ordered = sorted(points.points, key=lambda p: p[0][0])
    nodes = [(_point_id(pos), mass) for pos, mass in ordered]
    edges = []
    for (pa, _), (pb, _) in zip(ordered, ordered[1:]):
        edges.append((_point_id(pa), _point_id(pb), abs(pb[0] - pa[0])))
    return validate_network(nodes, edges)


def build_complete_uniform(masses: Sequence[float]) -> Network:
    """Unit-weight complete graph: every pair of groups at distance 1."""
    if len(masses) < 2:
        raise FewerThanTwoGroupsError("need at least two groups")
    ids = [f"g{i}" for i in range(len(masses))]
    nodes = list(zip(ids, masses))
    edges = [(a, b, 1.0) for a, b in itertools.combinations(ids, 2)]
    return validate_network(nodes, edges)


def build_vote_hypercube(votes: VoteMatrix, max_bills: int = MAX_BILLS) -> Network:
    """Hypercube of all 2^k vote combinations with Hamming-1 unit edges.

    Every combination appears as a node (bitstring id) even at zero mass;
    empty nodes still shape the lattice distances.  Node mass counts the
    voters with that exact vote vector.
    """
    k = votes.k
    if k > max_bills:
        raise TooManyBillsError(f"{k} bills would create 2^{k} nodes")
    counts = Counter("".join(map(str, row)) for row in votes.entries)
    nodes = []
    for code in range(2 ** k):
        bits = format(code, f"0{k}b")
        nodes.append((bits, float(counts.get(bits, 0))))
    edges = []
    for code in range(2 ** k):
        bits = format(code, f"0{k}b")
        for bill in range(k):
            other = code ^ (1 << (k - 1 - bill))
            if other > code:
                edges.append((bits, format(other, f"0{k}b"), 1.0))
    return validate_network(nodes, edges)


def build_representatives(votes: VoteMatrix) -> Network:
    """Voters as unit-mass nodes, disagreement share as edge weight.

    Two voters are linked iff they agree on at least one bill; the weight
    is the share of bills on which their votes differ.  Voters with
    identical records end up at distance 0.
    """
    k = votes.k
    nodes = [(v, 1.0) for v in votes.voters]
    edges = []
    for (va, ra), (vb, rb) in itertools.combinations(zip(votes.voters, votes.entries), 2):
        differing = sum(a != b for a, b in zip(ra, rb))
        if differing < k:  # at least one agreement
            edges.append((va, vb, differing / k))
    try:
        return validate_network(nodes, edges)
    except DisconnectedError as exc:
        raise DisconnectedAgreementGraphError(str(exc)) from exc


def party_positions(votes: VoteMatrix) -> dict[str, tuple[int | None, ...]]:
    """Per-bill majority vote of each party; ``None`` marks a tied bill."""
    if votes.party is None:
        raise SchemaError("party map required")
    members: dict[str, list[tuple[int, ...]]] = {}
    for voter, row in zip(votes.voters, votes.entries):
        party = votes.party.get(voter)
        if party is None:
            raise SchemaError(f"voter {voter!r} has no party")
        members.setdefault(party, []).append(row)
    out = {}
    for party, rows in members.items():
        positions: list[int | None] = []
        for bill in range(votes.k):
            ones = sum(row[bill] for row in rows)
            zeros = len(rows) - ones
            positions.append(None if ones == zeros else int(ones > zeros))
        out[party] = tuple(positions)
    return out


def build_parties(votes: VoteMatrix, tie_rule: str = "strict-majority") -> Network:
    """Parties as nodes (mass = seats) linked by shared majority positions.

    Edge weight is 1 minus the share of bills on which both party
    majorities coincide; parties sharing no majority position on any bill
    are not linked.  ``tie_rule`` decides how a tied bill enters the share:
    ``strict-majority`` keeps it in the denominator (it can never match),
    ``exclude-bill`` drops it from the pair's denominator.
    """
    if tie_rule not in ("strict-majority", "exclude-bill"):
        raise ValueError(f"unknown tie rule {tie_rule!r}")
    if votes.party is None:
        raise SchemaError("party map required to build a party network")
    members: dict[str, list[tuple[int, ...]]] = {}
    for voter, row in zip(votes.voters, votes.entries):
        party = votes.party.get(voter)
        if party is None:
            raise SchemaError(f"voter {voter!r} has no party")
        members.setdefault(party, []).append(row)
    if len(members) < 2:
        raise FewerThanTwoGroupsError("need at least two parties")
    for party, rows in members.items():
        if not rows:
            raise EmptyPartyError(f"party {party!r} has no members")

    k = votes.k
    positions = party_positions(votes)
    nodes = [(p, float(len(rows))) for p, rows in members.items()]
    edges = []
    for pa, pb in itertools.combinations(members, 2):
        pos_a, pos_b = positions[pa], positions[pb]
        common = sum(
            1 for a, b in zip(pos_a, pos_b) if a is not None and a == b
        )
        if tie_rule == "exclude-bill":
            denom = sum(1 for a, b in zip(pos_a, pos_b) if a is not None and b is not None)
        else:
            denom = k
        if common >= 1:
            edges.append((pa, pb, 1.0 - common / denom))
    try:
        return validate_network(nodes, edges)
    except DisconnectedError as exc:
        raise DisconnectedPartyGraphError(str(exc)) from exc


def build_cosponsorship(sponsorships: VoteMatrix) -> Network:
    """Unit-mass voters, unit edge iff two voters co-sponsored some bill."""
    nodes = [(v, 1.0) for v in sponsorships.voters]
    edges = []
    pairs = itertools.combinations(zip(sponsorships.voters, sponsorships.entries), 2)
    for (va, ra), (vb, rb) in pairs:
        if any(a and b for a, b in zip(ra, rb)):
            edges.append((va, vb, 1.0))
    return validate_network(nodes, edges)


def ranking_id(ranking: Sequence[str]) -> str:
    """Canonical node id of a ranking, e.g. ``abc`` or ``x1>x2>x3``."""
    if all(len(s) == 1 for s in ranking):
        return "".join(ranking)
    return ">".join(ranking)


def kemeny_distance(a: Sequence[str], b: Sequence[str]) -> int:
    """Number of pairwise order disagreements between two rankings."""
    pos = {x: i for i, x in enumerate(b)}
    disagreements = 0
    for x, y in itertools.combinations(a, 2):
        if pos[x] > pos[y]:
            disagreements += 1
    return disagreements


def build_preference_kemeny(
    profile: PreferenceProfile, max_alternatives: int = MAX_ALTERNATIVES
) -> Network:
    """Graph of all m! rankings, unit edges between adjacent transpositions.

    Geodesic distances equal the Kemeny distance.  Node mass is the ballot
    count of the ranking, zero for rankings nobody holds.
    """
    m = len(profile.alternatives)
    if m > max_alternatives:
        raise TooManyAlternativesError(f"{m} alternatives would create {m}! nodes")
    counts: dict[tuple[str, ...], float] = {}
    for ranking, count in profile.ballots:
        counts[tuple(ranking)] = counts.get(tuple(ranking), 0.0) + count
    perms = list(itertools.permutations(profile.alternatives))
    nodes = [(ranking_id(p), counts.get(p, 0.0)) for p in perms]
    edges = []
    for p in perms:
        for i in range(m - 1):
            q = list(p)
            q[i], q[i + 1] = q[i + 1], q[i]
            q = tuple(q)
            if q > p:
                edges.append((ranking_id(p), ranking_id(q), 1.0))
    return validate_network(nodes, edges)


_NORMS = {
    "manhattan": lambda v: float(np.abs(v).sum()),
    "euclidean": lambda v: float(np.linalg.norm(v)),
    "chebyshev": lambda v: float(np.abs(v).max()),
}


def build_lattice(points: MassPoints, norm: str = "manhattan") -> Network:
    """Complete graph on attribute points, edge weight = norm distance.

    The triangle inequality of the norm makes every direct edge a shortest
    path, so geodesics reproduce the norm metric.
    """
    if norm not in _NORMS:
        raise ValueError(f"unknown norm {norm!r}; choose from {sorted(_NORMS)}")
    dist = _NORMS[norm]
    nodes = [(_point_id(pos), mass) for pos, mass in points.points]
    edges = []
    for (pa, _), (pb, _) in itertools.combinations(points.points, 2):
        delta = np.asarray(pa, dtype=float) - np.asarray(pb, dtype=float)
        edges.append((_point_id(pa), _point_id(pb), dist(delta)))
    return validate_network(nodes, edges)


# -- CSV ingestion -----------------------------------------------------------

def load_votes_csv(path: str | Path) -> VoteMatrix:
    """Read ``voter,party,bill_1..bill_k`` (party column optional)."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise SchemaError(f"{path}: empty vote file")
    header = [h.strip() for h in rows[0]]
    if not header or header[0] != "voter":
        raise SchemaError(f"{path}: first column must be 'voter'")
    has_party = len(header) > 1 and header[1] == "party"
    first_bill = 2 if has_party else 1
    if len(header) <= first_bill:
        raise SchemaError(f"{path}: no bill columns")
    voters, entries = [], []
    party: dict[str, str] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise SchemaError(f"{path}:{lineno}: expected {len(header)} fields")
        voters.append(row[0].strip())
        if has_party:
            party[row[0].strip()] = row[1].strip()
        try:
            entries.append(tuple(int(x) for x in row[first_bill:]))
        except ValueError:
            raise SchemaError(f"{path}:{lineno}: vote entries must be 0/1") from None
    return VoteMatrix(tuple(voters), tuple(entries), party if has_party else None)


def load_preferences_csv(path: str | Path) -> PreferenceProfile:
    """Read ``ranking,count`` with rankings written like ``c>b>a``."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or [h.strip() for h in rows[0]] != ["ranking", "count"]:
        raise SchemaError(f"{path}: header must be 'ranking,count'")
    ballots = []
    alternatives: tuple[str, ...] | None = None
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 2:
            raise SchemaError(f"{path}:{lineno}: expected 2 fields")
        ranking = tuple(s.strip() for s in row[0].split(">"))
        if alternatives is None:
            alternatives = tuple(sorted(ranking))
        try:
            count = float(row[1])
        except ValueError:
            raise SchemaError(f"{path}:{lineno}: count must be a number") from None
        ballots.append((ranking, count))
    if alternatives is None:
        raise SchemaError(f"{path}: no ballots")
    return PreferenceProfile(alternatives, tuple(ballots))


def load_mass_points_csv(path: str | Path) -> MassPoints:
    """Read ``x_1,...,x_m,mass`` rows (no header required)."""
    with open(path, newline="") as fh:
        rows = [row for row in csv.reader(fh) if row]
    if rows and any(not _is_number(x) for x in rows[0]):
        rows = rows[1:]  # tolerate a header line
    points = []
    for lineno, row in enumerate(rows, start=1):
        if len(row) < 2:
            raise SchemaError(f"{path}:{lineno}: need at least one coordinate and a mass")
        try:
            values = [float(x) for x in row]
        except ValueError:
            raise SchemaError(f"{path}:{lineno}: non-numeric field") from None
        points.append((tuple(values[:-1]), values[-1]))
    return MassPoints(tuple(points))


def _is_number(s: str) -> bool:
    try:
        float(s)
        return True
    except ValueError:
        return False
