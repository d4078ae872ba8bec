"""Line-oriented ``.game`` text format.

Grammar (UTF-8; ``#`` starts a comment running to end of line; blank lines ignored)::

    document := section*            each of the six sections exactly once, any order
    section  := HEADER ':' NL record*
    HEADER   := TYPES | PATTERNS | PRIOR | MESSAGES | ACTIONS | PAYOFFS
    TYPES    record: <type-label>
    PATTERNS record: <type-label>+            one block per line, in pattern order
    PRIOR    record: <rational>               one weight per pattern, same order
    MESSAGES record: <message-label>
    ACTIONS  record: <action-label>
    PAYOFFS  record: <type> <message> <action> <u1> <u2>
    rational := -?[0-9]+ ( '/' [0-9]+ )?
    label    := any run of characters without whitespace, '#' or ':'

Every (type, message, action) triple needs exactly one PAYOFFS record.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .model import PartitionError, SignalingGame, make_partition, validate_game

SECTIONS = ("TYPES", "PATTERNS", "PRIOR", "MESSAGES", "ACTIONS", "PAYOFFS")

_HEADER = re.compile(r"^([A-Za-z_]+):$")
_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")
_LABEL = re.compile(r"^[^\s#:]+$")


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        self.line, self.column, self.message = line, column, message
        super().__init__(f"line {line}, column {column}: {message}")


class ValidationError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid game: " + "; ".join(self.violations))


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    return value


def _tokens(line: str):
    """(column, token) pairs; columns are 1-based."""
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def parse_game_file(text: str) -> SignalingGame:
    sections = {}
    current = None
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        head = _HEADER.match(stripped)
        if head:
            name = head.group(1)
            col = line.index(name) + 1
            if name not in SECTIONS:
                raise ParseError(lineno, col, f"unknown section {name}")
            if name in sections:
                raise ParseError(lineno, col, f"duplicate section {name}")
            sections[name] = []
            current = name
            continue
        if current is None:
            raise ParseError(lineno, len(line) - len(line.lstrip()) + 1,
                             "record outside of any section")
        sections[current].append((lineno, _tokens(line)))

    for name in SECTIONS:
        if name not in sections:
            raise ParseError(len(lines) + 1, 1, f"missing section {name}")

    def labels(name):
        out, where = [], {}
        for lineno, toks in sections[name]:
            if len(toks) != 1:
                raise ParseError(lineno, toks[min(1, len(toks) - 1)][0],
                                 f"{name} records hold exactly one label")
            col, tok = toks[0]
            if not _LABEL.match(tok):
                raise ParseError(lineno, col, f"bad label {tok!r}")
            if tok in where:
                raise ParseError(lineno, col, f"duplicate {name[:-1].lower()} label {tok}")
            where[tok] = len(out)
            out.append(tok)
        return out, where

    types, type_ix = labels("TYPES")
    messages, msg_ix = labels("MESSAGES")
    actions, act_ix = labels("ACTIONS")

    def lookup(table, kind, lineno, col, tok):
        if tok not in table:
            raise ParseError(lineno, col, f"undeclared {kind} {tok}")
        return table[tok]

    blocks = []
    for lineno, toks in sections["PATTERNS"]:
        blocks.append([lookup(type_ix, "type", lineno, c, t) for c, t in toks])

    def rational(lineno, col, tok):
        try:
            return parse_rational(tok)
        except (ValueError, ZeroDivisionError):
            raise ParseError(lineno, col, f"bad rational {tok!r}") from None

    prior = []
    for lineno, toks in sections["PRIOR"]:
        if len(toks) != 1:
            raise ParseError(lineno, toks[-1][0], "PRIOR records hold exactly one rational")
        prior.append(rational(lineno, *toks[0]))

    u1, u2 = {}, {}
    for lineno, toks in sections["PAYOFFS"]:
        if len(toks) != 5:
            raise ParseError(lineno, toks[0][0],
                             f"PAYOFFS records need 5 fields (t m a u1 u2), got {len(toks)}")
        t = lookup(type_ix, "type", lineno, *toks[0])
        m = lookup(msg_ix, "message", lineno, *toks[1])
        a = lookup(act_ix, "action", lineno, *toks[2])
        if (t, m, a) in u1:
            raise ParseError(lineno, toks[0][0],
                             f"duplicate payoff for ({types[t]}, {messages[m]}, {actions[a]})")
        u1[t, m, a] = rational(lineno, *toks[3])
        u2[t, m, a] = rational(lineno, *toks[4])

    try:
        partition = make_partition(types, blocks)
    except PartitionError as exc:
        raise ValidationError([str(exc)]) from None
    game = SignalingGame(tuple(types), partition, tuple(prior), tuple(messages), tuple(actions),
                         u1, u2)
    report = validate_game(game)
    if not report:
        raise ValidationError(report.violations)
    return game


def load_game(path) -> SignalingGame:
    with open(path, encoding="utf-8") as fh:
        return parse_game_file(fh.read())


def render_game(game: SignalingGame) -> str:
    out = ["TYPES:"]
    out += list(game.types)
    out.append("PATTERNS:")
    out += [" ".join(game.types[t] for t in game.partition.members(p))
            for p in range(game.n_patterns)]
    out.append("PRIOR:")
    out += [str(w) for w in game.prior]
    out.append("MESSAGES:")
    out += list(game.messages)
    out.append("ACTIONS:")
    out += list(game.actions)
    out.append("PAYOFFS:")
    for t in range(game.n_types):
        for m in range(game.n_messages):
            for a in range(game.n_actions):
                out.append(f"{game.types[t]} {game.messages[m]} {game.actions[a]} "
                           f"{game.u1[t, m, a]} {game.u2[t, m, a]}")
    return "\n".join(out) + "\n"
