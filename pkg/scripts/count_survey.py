"""Distribution of the number of distinct stationary sequences over small profiles."""

import argparse
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement

from seqapport import VoteProfile
from seqapport.multi_party import count_sequences


@dataclass(frozen=True)
class SurveyConfig:
    parties: int = 3
    max_votes: int = 20


def survey(cfg: SurveyConfig) -> tuple[Counter, tuple]:
    hist = Counter()
    best = (0, None)
    for votes in combinations_with_replacement(range(cfg.max_votes, 0, -1), cfg.parties):
        k = count_sequences(VoteProfile(votes))
        hist[k] += 1
        best = max(best, (k, votes))
    return hist, best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--parties", type=int, default=SurveyConfig.parties)
    ap.add_argument("--max-votes", type=int, default=SurveyConfig.max_votes)
    args = ap.parse_args()
    cfg = SurveyConfig(args.parties, args.max_votes)
    hist, best = survey(cfg)
    total = sum(hist.values())
    mean = sum(k * m for k, m in hist.items()) / total
    print(f"{total} profiles, {cfg.parties} parties, votes <= {cfg.max_votes}")
    print(f"mean count {mean:.2f}; max {best[0]} at {best[1]}")
    for k in sorted(hist):
        print(f"{k:4d} {hist[k]}")


if __name__ == "__main__":
    main()
