"""Polarization of a small legislature from its roll-call record.

Eight legislators vote on three bills.  The same record is turned into two
different networks: the vote hypercube (all 2^3 vote combinations, Hamming
adjacency) and the representative agreement network (voters linked by the
share of bills they disagree on).  Both carry the same population but tell
different stories about how far apart the camps sit.
"""

from netpolar import (
    MeasureParams,
    VoteMatrix,
    build_representatives,
    build_vote_hypercube,
    normalized_polarization,
    polarization,
)

ROLL_CALL = {
    "R1": (1, 0, 0), "R2": (1, 0, 0), "R3": (1, 0, 0), "R4": (0, 1, 0),
    "R5": (0, 1, 1), "R6": (0, 1, 1), "R7": (1, 0, 1), "R8": (1, 1, 1),
}


def main() -> None:
    votes = VoteMatrix(tuple(ROLL_CALL), tuple(ROLL_CALL.values()))

    cube = build_vote_hypercube(votes)
    print("vote hypercube")
    print(f"  nodes: {cube.n}, total mass: {cube.total_mass:g}")
    occupied = {i: m for i, m in zip(cube.ids, cube.masses) if m > 0}
    print(f"  occupied vote profiles: {occupied}")
    res = normalized_polarization(cube)
    print(f"  P_1 = {res.value:.4f}, normalized = {res.normalized:.4f}")

    reps = build_representatives(votes)
    print("representative agreement network")
    print(f"  nodes: {reps.n}, edges: {len(reps.edges)}")
    res = normalized_polarization(reps)
    print(f"  P_1 = {res.value:.4f}, normalized = {res.normalized:.4f}")

    for alpha in (0.5, 1.0, 1.5):
        value = polarization(cube, MeasureParams(alpha=alpha)).value
        print(f"  hypercube P_alpha at alpha={alpha}: {value:.4f}")


if __name__ == "__main__":
    main()
