"""How divided is an electorate over three candidates?

Ballots are full rankings; the electorate lives on the graph of all six
rankings with unit edges between rankings that differ by one adjacent swap,
so geodesic distances equal the Kemeny distance.  A consensus profile is
compared against a profile split between a ranking and its exact reversal.
"""

from netpolar import (
    PreferenceProfile,
    build_preference_kemeny,
    normalized_polarization,
)


def describe(name: str, profile: PreferenceProfile) -> None:
    net = build_preference_kemeny(profile)
    res = normalized_polarization(net)
    print(f"{name}: P_1 = {res.value:.3f}, normalized = {res.normalized:.3f}")


def main() -> None:
    consensus = PreferenceProfile(
        ("a", "b", "c"),
        ((("a", "b", "c"), 9.0), (("a", "c", "b"), 2.0)),
    )
    describe("near-consensus electorate", consensus)

    mixed = PreferenceProfile(
        ("a", "b", "c"),
        ((("a", "b", "c"), 2.0), (("b", "a", "c"), 3.0),
         (("c", "a", "b"), 2.0), (("c", "b", "a"), 4.0)),
    )
    describe("mixed electorate", mixed)

    reversal = PreferenceProfile(
        ("a", "b", "c"),
        ((("a", "b", "c"), 5.5), (("c", "b", "a"), 5.5)),
    )
    describe("half-half on opposite rankings", reversal)
    print("the reversal split realizes the bipolar maximum: normalized = 1")


if __name__ == "__main__":
    main()
