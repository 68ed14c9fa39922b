"""Command-line interface.

Every subcommand prints one document on stdout, either ``text`` or ``json``.
Exit status is 2 for bad input and 1 if an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .analysis import format_word, minimal_period, parse_word, rle_encode
from .engine import TieBreak, VoteProfile, generate, generate_period, totals
from .multi_party import (
    LiftError,
    breakpoints,
    count_by_union,
    count_sequences,
    enumerate_n_party,
    inclusion_exclusion_terms,
    lift,
    pairwise_tables,
    verify_sequence,
)
from .rational import GeometricMean, Stationary, format_rational, parse_rational
from .two_party import RunLengths, decompose, infer_cutpoint

FORMAT_VERSION = "1"


class UsageError(Exception):
    pass


def _parse_votes(text: str, labels: str | None) -> tuple[VoteProfile, list[str]]:
    names: list[str] = []
    votes: list[int] = []
    for i, tok in enumerate(text.split(","), start=1):
        tok = tok.strip()
        name, sep, value = tok.rpartition("=")
        if not sep:
            name = str(i)
        try:
            v = int(value)
        except ValueError:
            raise UsageError(f"votes must be positive integers, got {value!r}") from None
        if v < 1:
            raise UsageError(f"votes must be positive integers, got {v}")
        names.append(name)
        votes.append(v)
    if labels is not None:
        names = [s.strip() for s in labels.split(",")]
        if len(names) != len(votes):
            raise UsageError(f"{len(names)} labels for {len(votes)} parties")
    return VoteProfile(tuple(votes)), names


def _parse_cut(text: str):
    try:
        c = parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    if not 0 <= c <= 1:
        raise UsageError(f"cut point must lie in [0, 1], got {format_rational(c)}")
    return c


def _parse_canonical_word(text: str, n: int) -> tuple[int, ...]:
    try:
        word = parse_word(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    bad = sorted({s for s in word if not 1 <= s <= n})
    if bad:
        raise UsageError(f"word symbols {bad} outside ranks 1..{n}")
    return word


def _profile_payload(profile: VoteProfile, names: list[str]) -> dict[str, Any]:
    return {
        "labels": names,
        "votes": list(profile.votes),
        "canonical_labels": [names[u - 1] for u in profile.user_of],
        "canonical_votes": list(profile.canonical),
        "rank_of": list(profile.rank_of),
        "gcd": profile.g,
        "period": profile.period,
    }


def cmd_sequence(args, profile: VoteProfile, names: list[str]) -> dict[str, Any]:
    if args.method == "hill-huntington":
        rule = GeometricMean()
        cut = None
    else:
        if args.cut is None:
            raise UsageError("--cut is required for the stationary method")
        cut = _parse_cut(args.cut)
        rule = Stationary(cut)
    seats = profile.period if args.seats is None else args.seats
    if seats < 0:
        raise UsageError(f"--seats must be non-negative, got {seats}")
    initial = None
    if args.initial is not None:
        try:
            user_initial = [int(x) for x in args.initial.split(",")]
            initial = profile.canonical_seats(user_initial)
        except ValueError as exc:
            raise UsageError(f"bad --initial: {exc}") from None
    tie = TieBreak(args.tie)
    seq = generate(profile, rule, seats, initial, tie)
    user_seq = profile.to_user(seq)
    counts = totals(seq, profile.n).seats
    result: dict[str, Any] = {
        "method": args.method,
        "cut": None if cut is None else format_rational(cut),
        "seats": seats,
        "tie": tie.value,
        "initial": None if initial is None else [int(x) for x in args.initial.split(",")],
        "sequence": [names[u - 1] for u in user_seq],
        "canonical_sequence": list(seq),
        "totals": {names[u - 1]: counts[r - 1] for r, u in enumerate(profile.user_of, start=1)},
        "periodic": cut is not None,
    }
    if args.rle:
        result["rle"] = rle_encode(seq)
    return result


def cmd_enumerate(args, profile: VoteProfile, names: list[str]) -> dict[str, Any]:
    rows = enumerate_n_party(profile)
    return {
        "count": len(rows),
        "rows": [
            {"region": str(region), "word": format_word(seq.period), "rle": rle_encode(seq.period)}
            for region, seq in rows
        ],
    }


def cmd_count(args, profile: VoteProfile, names: list[str]) -> dict[str, Any]:
    bp = breakpoints(profile)
    return {
        "count": count_sequences(profile),
        "union_count": count_by_union(profile),
        "inclusion_exclusion_terms": inclusion_exclusion_terms(profile),
        "moduli": {f"{k.i}-{k.j}": m for k, m in bp.moduli.items()},
        "breakpoints": [format_rational(e) for e in bp.endpoints],
    }


def cmd_infer(args, profile: VoteProfile, names: list[str]) -> dict[str, Any]:
    if profile.n != 2:
        raise UsageError("infer takes exactly two parties")
    word = _parse_canonical_word(args.word, 2)
    d = decompose(*profile.canonical)
    if len(word) != d.p1 + d.p2:
        raise UsageError(f"word must have length {d.p1 + d.p2} (one period of the reduced votes)")
    runs = RunLengths.from_word(word)
    if len(runs.k) != d.p2:
        raise UsageError(f"word must contain {d.p2} seats for party 2, found {len(runs.k)}")
    region = infer_cutpoint(d, runs)
    return {
        "word": format_word(word),
        "runs": list(runs.k),
        "tail": runs.tail,
        "realizable": region is not None,
        "region": None if region is None else str(region),
    }


def cmd_lift(args, profile: VoteProfile, names: list[str]) -> dict[str, Any]:
    c = _parse_cut(args.cut)
    tables = pairwise_tables(profile, c)
    lifted = lift(profile, c).period
    engine = generate_period(profile, c).period
    if lifted != engine:
        raise LiftError("lifted word disagrees with direct allocation")
    return {
        "cut": format_rational(c),
        "pairwise": {f"{k.i}-{k.j}": format_word(w) for k, w in tables.items()},
        "word": format_word(lifted),
        "rle": rle_encode(lifted),
        "matches_engine": True,
        "minimal_period": minimal_period(lifted * 2),
    }


def cmd_verify(args, profile: VoteProfile, names: list[str]) -> dict[str, Any]:
    word = _parse_canonical_word(args.word, profile.n)
    if len(word) != profile.period:
        raise UsageError(f"word must have length {profile.period}, got {len(word)}")
    region = verify_sequence(profile, word)
    return {
        "word": format_word(word),
        "realizable": region is not None,
        "region": None if region is None else str(region),
    }


COMMANDS = {
    "sequence": cmd_sequence,
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "infer": cmd_infer,
    "lift": cmd_lift,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqapport",
        description="Seat-allocation sequences of stationary divisor methods.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--votes", required=True,
                       help="comma-separated positive integers, optionally NAME=VOTES")
        p.add_argument("--labels", help="comma-separated party labels in vote order")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("sequence", "allocate seats one at a time")
    p.add_argument("--cut", help="cut point in [0, 1]: 'num/den', decimal, or 1")
    p.add_argument("--seats", type=int, help="number of seats (default: one period)")
    p.add_argument("--initial", help="seats held before the first award, in vote order")
    p.add_argument("--tie", choices=("larger", "smaller"), default="larger")
    p.add_argument("--method", choices=("stationary", "hill-huntington"), default="stationary")
    p.add_argument("--rle", action="store_true", help="also print run-length form")

    add("enumerate", "list every stationary sequence with its cut-point region")
    add("count", "count the stationary sequences")
    p = add("infer", "find the cut points producing a two-party word")
    p.add_argument("--word", required=True, help="one period in ranks, e.g. '1^2 2 1 2' or '1,1,2'")
    p = add("lift", "merge pairwise words into the n-party word")
    p.add_argument("--cut", required=True)
    p = add("verify", "find the cut points producing an n-party word")
    p.add_argument("--word", required=True)
    return parser


def render_text(doc: dict[str, Any]) -> str:
    lines = [f"command: {doc['command']}"]
    prof = doc["profile"]
    lines.append("votes: " + ",".join(f"{l}={v}" for l, v in zip(prof["labels"], prof["votes"])))
    lines.append("canonical: " + ",".join(prof["canonical_labels"]))
    lines.append(f"gcd: {prof['gcd']}")
    lines.append(f"period: {prof['period']}")
    for key, value in doc["result"].items():
        if key == "rows":
            for row in value:
                lines.append(f"row: {row['region']}  {row['rle']}")
        elif isinstance(value, dict):
            lines.append(f"{key}: " + "; ".join(f"{k}={_scalar(v)}" for k, v in value.items()))
        elif isinstance(value, list):
            lines.append(f"{key}: " + ",".join(map(str, value)))
        else:
            lines.append(f"{key}: {_scalar(value)}")
    return "\n".join(lines)


def _scalar(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        profile, names = _parse_votes(args.votes, args.labels)
        result = COMMANDS[args.command](args, profile, names)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"seqapport {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (LiftError, ArithmeticError, AssertionError) as exc:
        print(f"seqapport {args.command}: internal error: {exc}", file=sys.stderr)
        return 1
    doc = {
        "version": FORMAT_VERSION,
        "command": args.command,
        "arguments": {k: v for k, v in vars(args).items() if k not in ("command", "format")},
        "profile": _profile_payload(profile, names),
        "result": result,
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(render_text(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
