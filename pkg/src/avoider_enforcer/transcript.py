"""Flat-file transcript format.

Line 1:   ``n=<n> property=<id> avoider=<name> enforcer=<name> seed=<u64>``
Then one line per move: ``<round> <A|E> <u> <v>`` (space separated, rounds
1-based, a round being an Avoider move plus Enforcer's reply).  The parser
and formatter round-trip bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import Edge, Player
from .errors import TranscriptParseError

Move = tuple[int, Player, Edge]


@dataclass
class Transcript:
    n: int
    property_id: str
    avoider: str
    enforcer: str
    seed: int
    moves: list[Move]


def format_transcript(t: Transcript) -> str:
    lines = [
        f"n={t.n} property={t.property_id} avoider={t.avoider} "
        f"enforcer={t.enforcer} seed={t.seed}"
    ]
    for rnd, player, (u, v) in t.moves:
        lines.append(f"{rnd} {player.value} {u} {v}")
    return "\n".join(lines) + "\n"


_HEADER_KEYS = ("n", "property", "avoider", "enforcer", "seed")


def parse_transcript(text: str) -> Transcript:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise TranscriptParseError("empty transcript", 1)

    fields: dict[str, str] = {}
    for token in lines[0].split(" "):
        key, sep, value = token.partition("=")
        if not sep or not value:
            raise TranscriptParseError(f"malformed header token {token!r}", 1)
        fields[key] = value
    if tuple(fields) != _HEADER_KEYS:
        raise TranscriptParseError(
            f"header keys {tuple(fields)} != {_HEADER_KEYS}", 1
        )
    try:
        n = int(fields["n"])
        seed = int(fields["seed"])
    except ValueError as exc:
        raise TranscriptParseError(str(exc), 1) from None
    if n < 2 or seed < 0:
        raise TranscriptParseError(f"bad n={n} or seed={seed}", 1)

    moves: list[Move] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 4:
            raise TranscriptParseError(
                f"expected '<round> <A|E> <u> <v>', got {line!r}", lineno
            )
        rnd_s, who, u_s, v_s = parts
        if who not in ("A", "E"):
            raise TranscriptParseError(f"bad player {who!r}", lineno)
        try:
            rnd, u, v = int(rnd_s), int(u_s), int(v_s)
        except ValueError:
            raise TranscriptParseError(f"non-integer field in {line!r}", lineno) from None
        if rnd < 1:
            raise TranscriptParseError(f"round {rnd} is not 1-based", lineno)
        if not (0 <= u < v < n):
            raise TranscriptParseError(f"edge ({u}, {v}) not canonical for n={n}", lineno)
        moves.append((rnd, Player(who), (u, v)))
    return Transcript(
        n=n,
        property_id=fields["property"],
        avoider=fields["avoider"],
        enforcer=fields["enforcer"],
        seed=seed,
        moves=moves,
    )
