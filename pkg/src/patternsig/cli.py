"""Command-line front end.

Exit codes: 0 ok, 1 parse/validation error, 2 bad arguments.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import cartrade as ct
from .beliefs import conditional_message_dist, incentive_patterns, posterior
from .equilibrium import enumerate_equilibria
from .gamefile import ParseError, ValidationError, load_game, parse_rational, render_game
from .model import SignalingGame
from .receiver import Belief, best_actions, receiver_objective
from .sender import profile_for

EXIT_OK, EXIT_INPUT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rationals(text: str, what: str) -> list:
    try:
        return [parse_rational(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{what}: expected comma-separated rationals like 1/2,1/2") from None


def _pairs(text: str, what: str) -> list:
    out = []
    for item in text.split(","):
        left, sep, right = item.strip().partition(":")
        if not sep or not left or not right:
            raise UsageError(f"{what}: expected label:label pairs, got {item!r}")
        out.append((left, right))
    return out


def fmt_belief(game: SignalingGame, q) -> str:
    return ", ".join(f"{game.pattern_label(p)}: {x}" for p, x in enumerate(q))


def describe_equilibria(game: SignalingGame, eqs) -> list:
    lines = [f"{len(eqs)} equilibria"]
    ms, acts, ts = game.messages, game.actions, game.types
    for i, eq in enumerate(eqs, start=1):
        lines.append(f"#{i} {eq.classification}")
        lines.append("  sender:   " + ", ".join(f"{ts[t]}->{ms[m]}" for t, m in enumerate(eq.sender)))
        lines.append("  receiver: " + ", ".join(f"{ms[m]}->{acts[a]}" for m, a in enumerate(eq.receiver)))
        lines.append("  M*: " + "; ".join(
            f"{game.pattern_label(p)}={{{','.join(ms[m] for m in sorted(s))}}}"
            for p, s in enumerate(eq.pattern_message_sets)))
        for m in range(game.n_messages):
            if m in eq.posteriors.on_path:
                lines.append(f"  after {ms[m]}: posterior {fmt_belief(game, eq.posteriors.on_path[m])}")
            else:
                lines.append(f"  after {ms[m]}: off-path, witness "
                             f"{fmt_belief(game, eq.off_path_witnesses[m])}")
    return lines


def cmd_validate(args, out):
    game = load_game(args.file)
    out.append(f"valid: {game.n_types} types, {game.n_patterns} patterns, "
               f"{game.n_messages} messages, {game.n_actions} actions")
    return EXIT_OK


def cmd_best_response(args, out):
    game = load_game(args.file)
    if args.message not in game.messages:
        raise UsageError(f"unknown message {args.message}")
    m = game.message_index(args.message)
    probs = _rationals(args.belief, "--belief")
    if len(probs) != game.n_patterns:
        raise UsageError(f"belief needs {game.n_patterns} entries, got {len(probs)}")
    if any(p < 0 for p in probs):
        raise UsageError("belief entries must be nonnegative")
    if sum(probs, Fraction(0)) != 1:
        raise UsageError("belief must sum to 1")
    belief = Belief(tuple(probs))
    argmax, value = best_actions(game, belief, m)
    out.append(f"message {args.message}, belief {fmt_belief(game, belief)}")
    for a in range(game.n_actions):
        out.append(f"  {game.actions[a]}: {receiver_objective(game, belief, m, a)}")
    names = ",".join(game.actions[a] for a in sorted(argmax))
    out.append(f"argmax: {{{names}}} value {value}")
    out.append(f"canonical: {game.actions[min(argmax)]}")
    return EXIT_OK


def cmd_posterior(args, out):
    game = load_game(args.file)
    chosen = {}
    for t, m in _pairs(args.selection, "--selection"):
        if t not in game.types:
            raise UsageError(f"unknown type {t}")
        if m not in game.messages:
            raise UsageError(f"unknown message {m}")
        chosen[game.type_index(t)] = game.message_index(m)
    missing = [game.types[t] for t in range(game.n_types) if t not in chosen]
    if missing:
        raise UsageError("selection misses types " + ",".join(missing))
    strategy = tuple(chosen[t] for t in range(game.n_types))
    s2 = None
    if args.receiver:
        picked = {}
        for m, a in _pairs(args.receiver, "--receiver"):
            if m not in game.messages or a not in game.actions:
                raise UsageError(f"unknown message/action in {m}:{a}")
            picked[game.message_index(m)] = game.action_index(a)
        if len(picked) != game.n_messages:
            raise UsageError("--receiver must assign an action to every message")
        s2 = tuple(picked[m] for m in range(game.n_messages))
    profile = profile_for(game, strategy, s2)
    dist = conditional_message_dist(profile, game)
    ms = game.messages
    out.append("M*: " + "; ".join(
        f"{game.pattern_label(p)}={{{','.join(ms[m] for m in sorted(s))}}}"
        for p, s in enumerate(profile.pattern_message_sets)))
    out.append("p(m|pattern):")
    for p in range(game.n_patterns):
        out.append(f"  {game.pattern_label(p)}: " + ", ".join(
            f"{ms[m]}={dist(m, p)}" for m in range(game.n_messages)))
    for m in range(game.n_messages):
        senders = sorted(incentive_patterns(m, profile))
        label = ",".join(game.pattern_label(p) for p in senders) or "none"
        q = posterior(game.prior, dist, m)
        tail = "off-path" if q is None else f"posterior {fmt_belief(game, q)}"
        out.append(f"{ms[m]}: T'(m) = {label}; {tail}")
    return EXIT_OK


def cmd_solve(args, out):
    game = load_game(args.file)
    out.extend(describe_equilibria(game, enumerate_equilibria(game)))
    return EXIT_OK


def cmd_cartrade(args, out):
    try:
        p = ct.CarTradeParams(
            tuple(_rationals(args.values, "--values")),
            tuple(_rationals(args.bids, "--bids")),
            tuple(_rationals(args.costs, "--costs")),
            parse_rational(args.alpha),
        )
    except ct.InvalidParams as exc:
        raise UsageError(str(exc)) from None
    except ValueError:
        raise UsageError("--alpha: expected a rational like 1/2") from None
    game = ct.build_cartrade_game(p)
    if args.emit_game:
        with open(args.emit_game, "w", encoding="utf-8") as fh:
            fh.write("# car trade: values " + ",".join(map(str, p.values))
                     + " bids " + ",".join(map(str, p.bids))
                     + " costs " + ",".join(map(str, p.costs)) + f" alpha {p.alpha}\n")
            fh.write(render_game(game))

    th = ct.thresholds(p)
    out.append("thresholds (rho0, sigma0, lambda0): " + ", ".join(map(str, th.clamped)))
    if th.raw != th.clamped:
        out.append("  before clamping: " + ", ".join(map(str, th.raw)))
    out.append("zone receiver strategies:")
    for z in ct.ZONES:
        out.append(f"  {z}: {ct.fmt_actions(ct.zone_receiver_strategy(z))}")
    out.append("seller regimes active at these costs:")
    for z in ct.ZONES:
        for case in ct.zone_sender_cases(z, p):
            o = ct.evaluate_case(case, p)
            strategies = "; ".join(ct.fmt_strategy(s) for s in sorted(o.strategies))
            sets = "; ".join(ct.fmt_sets(s) for s in sorted(o.pattern_sets, key=ct.fmt_sets))
            out.append(f"  {z} regime {case.label}: m* {strategies} | M* {sets}")
    lines, ok = ct.crosscheck_report(p, seed=args.seed)
    out.append("cross-check:")
    out.extend("  " + ln for ln in lines)
    out.append(f"cross-check {'PASS' if ok else 'FAIL'}")
    out.extend(describe_equilibria(game, enumerate_equilibria(game)))
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="patternsig", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="parse and validate a .game file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    b = sub.add_parser("best-response", help="receiver argmax for one message and belief")
    b.add_argument("file")
    b.add_argument("--message", required=True)
    b.add_argument("--belief", required=True, help="pattern probabilities, e.g. 1/3,2/3")
    b.set_defaults(func=cmd_best_response)

    p = sub.add_parser("posterior", help="message distribution and posteriors for a selection")
    p.add_argument("file")
    p.add_argument("--selection", required=True, help="type:message pairs, e.g. t1:m1,t2:m2")
    p.add_argument("--receiver", help="message:action pairs; enables the top-payoff M* rule")
    p.set_defaults(func=cmd_posterior)

    s = sub.add_parser("solve", help="enumerate all pure equilibria")
    s.add_argument("file")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("cartrade", help="car trade thresholds, zone tables and cross-check")
    c.add_argument("--values", default="2,5,10")
    c.add_argument("--bids", default="3,6,9")
    c.add_argument("--costs", default="2,8,4", help="c12,c13,c23")
    c.add_argument("--alpha", default="1/2")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--emit-game", metavar="PATH")
    c.set_defaults(func=cmd_cartrade)
    return ap


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = []
    try:
        code = args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"{getattr(args, 'file', '')}: parse error: {exc}", file=stderr)
        return EXIT_INPUT
    except ValidationError as exc:
        print(f"{getattr(args, 'file', '')}: invalid game:", file=stderr)
        for v in exc.violations:
            print(f"  {v}", file=stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    stdout.write("\n".join(out) + "\n")
    return code


def main():
    sys.exit(run_cli())
