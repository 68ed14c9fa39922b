"""Print the two-party and three-party cell tables, the count example and the H-H strings."""

import argparse

from seqapport import VoteProfile, generate
from seqapport.analysis import rle_encode
from seqapport.multi_party import breakpoints, count_sequences, enumerate_n_party, inclusion_exclusion_terms
from seqapport.rational import GeometricMean
from seqapport.two_party import enumerate_two_party


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--two", default="16,7")
    ap.add_argument("--three", default="16,11,7")
    ap.add_argument("--count", default="25,17,13,5")
    args = ap.parse_args()

    v1, v2 = map(int, args.two.split(","))
    print(f"# two parties {v1},{v2}")
    for region, runs in enumerate_two_party(v1, v2):
        print(f"{str(region):>14}  {rle_encode(runs.word())}")

    p = VoteProfile(tuple(map(int, args.three.split(","))))
    print(f"\n# parties {args.three}")
    for region, seq in enumerate_n_party(p):
        print(f"{str(region):>14}  {''.join(map(str, seq.period))}")

    p = VoteProfile(tuple(map(int, args.count.split(","))))
    terms = inclusion_exclusion_terms(p)
    print(f"\n# count for {args.count}: {count_sequences(p)}")
    print("terms:", " ".join(f"{t:+d}" for t in terms), "=", sum(terms))
    print("breakpoints:", " ".join(f"{e.numerator}/{e.denominator}" for e in breakpoints(p).endpoints))

    hh = VoteProfile((23, 4))
    print("\n# geometric mean on 23,4")
    print("27:", rle_encode(generate(hh, GeometricMean(), 27)))
    print("54:", rle_encode(generate(hh, GeometricMean(), 54)))


if __name__ == "__main__":
    main()
