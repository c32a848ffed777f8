"""Command-line front end; every capability, no domain logic.

Exit codes: 0 success, 1 domain error (or verification mismatch),
2 usage error.  Output is deterministic and newline-terminated; every
command also takes ``--json`` for a structured equivalent.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .deck import Deck, ShuffleLabError
from .elmsley import shortest_words
from .groups import closed_form_order, factored, group_order, verify_theorem
from .shuffles import (
    Family,
    apply_word,
    element_order,
    format_word,
    inout_text,
    parse_word,
    route_top_to,
)
from .special import DiagramOp, card_name, generate, predict_from_ends


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _parse_sizes(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise ShuffleLabError(f"bad size list {text!r}") from exc


def _parse_trick_card(token: str, k: int) -> int:
    text = token.strip().upper()
    if text == "A":
        value = 1
    else:
        try:
            value = int(text)
        except ValueError as exc:
            raise ShuffleLabError(f"bad card {token!r}") from exc
    if value == 1 << k:
        value = 0
    if not 0 <= value < 1 << k:
        raise ShuffleLabError(f"card {token!r} out of range for k={k}")
    return value


def _cmd_apply(args: argparse.Namespace) -> int:
    word = parse_word(args.word) if args.word else ()
    deck = Deck.parse(args.deck) if args.deck else Deck.identity(args.size)
    if deck.size != args.size:
        raise ShuffleLabError(f"--deck has size {deck.size}, --size says {args.size}")
    result = apply_word(word, deck)
    _emit(
        args,
        str(result),
        {"size": args.size, "word": format_word(word), "deck": str(result)},
    )
    return 0


def _cmd_order(args: argparse.Namespace) -> int:
    word = parse_word(args.word)
    order = element_order(word, args.size)
    _emit(
        args,
        str(order),
        {"size": args.size, "word": format_word(word), "order": order},
    )
    return 0


def _cmd_group_order(args: argparse.Namespace) -> int:
    family = Family.parse(args.family)
    order = group_order(family, args.size)
    payload: dict = {"family": family.value, "size": args.size, "order": order}
    if args.factored:
        payload["order_factored"] = factored(order)
    lines = []
    status = 0
    if args.check:
        closed = closed_form_order(family, args.size)
        match = order == closed.value
        computed_text = f"{order} = {factored(order)}" if args.factored else str(order)
        lines.append(f"computed: {computed_text}")
        lines.append(f"closed-form: {closed.value} = {closed.factored} [{closed.case}]")
        lines.append(f"match: {'yes' if match else 'no'}")
        payload.update(
            {
                "closed_form": closed.value,
                "closed_factored": closed.factored,
                "case": closed.case,
                "match": match,
            }
        )
        if not match:
            status = 1
    else:
        lines.append(f"{order} = {factored(order)}" if args.factored else str(order))
    _emit(args, "\n".join(lines), payload)
    return status


def _cmd_verify(args: argparse.Namespace) -> int:
    family = Family.parse(args.family)
    reports = verify_theorem(family, _parse_sizes(args.sizes))
    all_match = all(r.match for r in reports)
    _emit(
        args,
        "\n".join(r.line() for r in reports),
        {
            "family": family.value,
            "reports": [r.to_dict() for r in reports],
            "all_match": all_match,
        },
    )
    return 0 if all_match else 1


def _cmd_elmsley(args: argparse.Namespace) -> int:
    family = Family.parse(args.family)
    solutions = shortest_words(args.size, family, args.source, args.to)
    _emit(args, solutions.render(), solutions.to_dict())
    return 0


def _cmd_route(args: argparse.Namespace) -> int:
    family = Family.parse(args.family)
    word = route_top_to(args.to, args.size, family)
    _emit(
        args,
        inout_text(word),
        {
            "size": args.size,
            "family": family.value,
            "to": args.to,
            "word": [token for token in inout_text(word).split(", ") if token],
        },
    )
    return 0


def _cmd_trick(args: argparse.Namespace) -> int:
    left = _parse_trick_card(args.left, args.k)
    right = _parse_trick_card(args.right, args.k)
    ordering = predict_from_ends(args.k, left, right)
    _emit(
        args,
        ordering.display(),
        {
            "k": args.k,
            "left": card_name(left, args.k),
            "right": card_name(right, args.k),
            "first": ordering.first,
            "start": str(ordering.start),
            "skipped": str(ordering.skipped()),
            "values": list(ordering.values),
            "display": ordering.display(),
        },
    )
    return 0


def _cmd_diagram(args: argparse.Namespace) -> int:
    start = DiagramOp.parse(args.start)
    ordering = generate(args.k, args.first, start)
    _emit(
        args,
        " ".join(str(v) for v in ordering.values),
        {
            "k": args.k,
            "first": args.first,
            "start": str(start),
            "values": list(ordering.values),
            "display": ordering.display(),
        },
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shufflelab",
        description="Perfect shuffles: apply them, order them, verify their groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="emit structured output")
        return p

    p = add("apply", _cmd_apply, "apply a shuffle word to a deck")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--word", required=True, help="e.g. 'flip-in, inv:milk'")
    p.add_argument("--deck", help="deck text; default is the sorted face-down deck")

    p = add("order", _cmd_order, "repetitions of a word restoring the deck")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--word", required=True)

    p = add("group-order", _cmd_group_order, "exact order of a shuffle group")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--factored", action="store_true", help="show prime factorization")
    p.add_argument("--check", action="store_true", help="compare to the closed form")

    p = add("verify", _cmd_verify, "check computed orders against the closed forms")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--sizes", required=True, help="comma-separated deck sizes")

    p = add("elmsley", _cmd_elmsley, "all minimal in/out words between positions")
    p.add_argument("--size", type=int, required=True)
    p.add_argument(
        "--family", required=True, choices=[Family.FARO.value, Family.HORSESHOE.value]
    )
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", type=int, default=0)

    p = add("route", _cmd_route, "binary-method word moving the top card")
    p.add_argument("--size", type=int, required=True)
    p.add_argument(
        "--family", required=True, choices=[Family.FARO.value, Family.HORSESHOE.value]
    )
    p.add_argument("--to", type=int, required=True)

    p = add("trick", _cmd_trick, "predict a shuffled 2^k packet from its end cards")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--left", required=True, help="left end card (A for the ace)")
    p.add_argument("--right", required=True, help="right end card")

    p = add("diagram", _cmd_diagram, "generate a special ordering by doubling")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--first", type=int, required=True)
    p.add_argument("--start", required=True, help="bitJ or complement")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ShuffleLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
