"""Second-hand car trade: three car qualities, two buyer patterns.

The seller knows the quality t1 < t2 < t3 and bids m1 < m2 < m3. The buyer only
tells "not high" {t1, t2} from "high" {t3} and either walks away (a1) or buys
(a2). A seller of quality k bidding as quality j > k pays a pretending cost
c_kj whether or not the car is sold.

The module also carries the expected outcome tables for this game: the buyer's
action in each of the eight belief zones D1..D8 and the seller's optimal
messages in each cost regime, used as golden data by the cross-check.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .model import SignalingGame, as_fraction, make_game
from .receiver import Belief, belief_intervals, best_actions
from .sender import enumerate_selections, type_best_messages

M1, M2, M3 = 0, 1, 2
A1, A2 = 0, 1  # walk away, buy

ZONES = ("D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8")


class InvalidParams(ValueError):
    pass


@dataclass(frozen=True)
class CarTradeParams:
    values: tuple  # V1, V2, V3
    bids: tuple    # m1, m2, m3
    costs: tuple   # c12, c13, c23
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))
        object.__setattr__(self, "bids", tuple(as_fraction(v) for v in self.bids))
        object.__setattr__(self, "costs", tuple(as_fraction(v) for v in self.costs))
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        for name, seq in (("values", self.values), ("bids", self.bids), ("costs", self.costs)):
            if len(seq) != 3:
                raise InvalidParams(f"{name} needs 3 entries, got {len(seq)}")
        V1, V2, V3 = self.values
        m1, m2, m3 = self.bids
        c12, c13, c23 = self.costs
        checks = [
            (m3 > m2 > m1 > 0, "m3 > m2 > m1 > 0"),
            (V3 > V2 > V1 > 0, "V3 > V2 > V1 > 0"),
            (c13 > c12 > 0, "c13 > c12 > 0"),
            (c13 > c23 > 0, "c13 > c23 > 0"),
            (0 < self.alpha < 1, "0 < alpha < 1"),
        ]
        for ok, text in checks:
            if not ok:
                raise InvalidParams(f"violated: {text}")

    def env(self) -> dict:
        V1, V2, V3 = self.values
        m1, m2, m3 = self.bids
        c12, c13, c23 = self.costs
        return dict(V1=V1, V2=V2, V3=V3, m1=m1, m2=m2, m3=m3, c12=c12, c13=c13, c23=c23,
                    alpha=self.alpha)


DEFAULT_PARAMS = CarTradeParams((2, 5, 10), (3, 6, 9), (2, 8, 4), Fraction(1, 2))


def pretend_cost(p: CarTradeParams, k: int, j: int) -> Fraction:
    """Cost for quality k to bid as quality j (zero when not overstating)."""
    c12, c13, c23 = p.costs
    return {(0, 1): c12, (0, 2): c13, (1, 2): c23}.get((k, j), Fraction(0))


def build_cartrade_game(p: CarTradeParams) -> SignalingGame:
    def u1(t, m, a):
        cost = pretend_cost(p, t, m)
        return p.bids[m] - cost if a == A2 else -cost

    def u2(t, m, a):
        return p.values[t] - p.bids[m] if a == A2 else 0

    return make_game(("t1", "t2", "t3"), [{0, 1}, {2}], (p.alpha, 1 - p.alpha),
                     ("m1", "m2", "m3"), ("a1", "a2"), u1, u2)


@dataclass(frozen=True)
class Thresholds:
    raw: tuple      # (rho0, sigma0, lambda0) before clamping
    clamped: tuple

    def __iter__(self):
        return iter(self.clamped)


def thresholds(p: CarTradeParams) -> Thresholds:
    V1, _, V3 = p.values
    raw = tuple((V3 - m) / (V3 - V1) for m in p.bids)
    clamped = tuple(min(max(x, Fraction(0)), Fraction(1)) for x in raw)
    return Thresholds(raw, clamped)


def interval_boundary(game: SignalingGame, m: int) -> Fraction:
    """Lower end of the walk-away region on the 'not high' probability axis."""
    regions = belief_intervals(game, m)
    walk = regions[A1]
    if walk.empty:
        return Fraction(1)
    return min(iv.lo for iv in walk.intervals)


def zone_classify(beliefs, p: CarTradeParams) -> str:
    """Zone of (rho, sigma, lambda); a threshold value itself belongs to the a1 side."""
    below = [b < t for b, t in zip(beliefs, thresholds(p).raw)]
    return ZONES[4 * below[0] + 2 * below[1] + below[2]]


_ZONE_TABLES = {
    "D1": (A1, A1, A1),
    "D2": (A1, A1, A2),
    "D3": (A1, A2, A1),
    "D4": (A1, A2, A2),
    "D5": (A2, A1, A1),
    "D6": (A2, A1, A2),
    "D7": (A2, A2, A1),
    "D8": (A2, A2, A2),
}


def zone_receiver_strategy(zone: str) -> tuple:
    return _ZONE_TABLES[zone]


def zone_belief(zone: str, p: CarTradeParams):
    """A belief triple strictly inside the zone, or None if it has no interior."""
    k = ZONES.index(zone)
    out = []
    for bit, t in zip(((k >> 2) & 1, (k >> 1) & 1, k & 1), thresholds(p).raw):
        if bit:  # strictly below the threshold
            if t <= 0:
                return None
            out.append(min(t, Fraction(1)) / 2)
        else:
            if t >= 1:
                return None
            out.append((max(t, Fraction(0)) + 1) / 2)
    return tuple(out)


# --- seller cost regimes -------------------------------------------------

_EXPR = {
    "c12": lambda e: e["c12"],
    "c13": lambda e: e["c13"],
    "c23": lambda e: e["c23"],
    "m2": lambda e: e["m2"],
    "m3": lambda e: e["m3"],
    "m2-m1": lambda e: e["m2"] - e["m1"],
    "m3-m1": lambda e: e["m3"] - e["m1"],
    "m3-m2": lambda e: e["m3"] - e["m2"],
    "c13-c12": lambda e: e["c13"] - e["c12"],
}


@dataclass(frozen=True)
class Condition:
    lhs: str
    op: str  # "<" or ">="
    rhs: str

    def margin(self, p: CarTradeParams) -> Fraction:
        e = p.env()
        return _EXPR[self.lhs](e) - _EXPR[self.rhs](e)

    def holds(self, p: CarTradeParams, strict: bool = False) -> bool:
        d = self.margin(p)
        if self.op == "<":
            return d < 0
        return d > 0 if strict else d >= 0

    def __str__(self):
        return f"{self.lhs} {self.op} {self.rhs}"


def _conds(*specs):
    return tuple(Condition(*s.split()) for s in specs)


def _sets(*alternatives):
    return tuple(tuple(frozenset(s) for s in alt) for alt in alternatives)


@dataclass(frozen=True)
class SenderCase:
    zone: str
    label: str
    conditions: tuple
    strategies: tuple    # listed m*(t1), m*(t2), m*(t3) alternatives
    set_branches: tuple  # ((extra conditions, M* alternatives), ...); first match wins
    note: str = ""

    def applies(self, p: CarTradeParams, strict: bool = False) -> bool:
        return all(c.holds(p, strict) for c in self.conditions)

    def expected_sets(self, p: CarTradeParams) -> tuple:
        for extra, alts in self.set_branches:
            if all(c.holds(p) for c in extra):
                return alts
        raise AssertionError("no M* branch matched")

    def describe(self) -> str:
        return ", ".join(str(c) for c in self.conditions) or "all costs"


def _case(zone, label, conds, strategies, *branches, note=""):
    return SenderCase(zone, label, _conds(*conds), tuple(strategies),
                      tuple((_conds(*extra), _sets(*alts)) for extra, alts in branches), note)


SENDER_CASES = (
    _case("D1", "1", (), [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)],
          ((), [({0}, {0}), ({0}, {1}), ({0, 1}, {0}), ({0, 1}, {1}), ({0, 1}, {2})]),
          note="listing omits m*=(m1,m1,m3) with M*={m1}/{m3}"),
    _case("D2", "1", ("c13 < m3",), [(2, 2, 2)], ((), [({2}, {2})]),
          note="the sub-case c13 < m3 <= c23 is empty because c23 < c13"),
    _case("D2", "2", ("c13 >= m3", "c23 < m3"), [(0, 2, 2)], ((), [({2}, {2})])),
    _case("D2", "3", ("c13 >= m3", "c23 >= m3"), [(0, 0, 2), (0, 1, 2)],
          ((), [({0}, {2}), ({0, 1}, {2})])),
    _case("D3", "1", ("c12 < m2",), [(1, 1, 1)], ((), [({1}, {1})])),
    _case("D3", "2", ("c12 >= m2",), [(0, 1, 1)], ((), [({1}, {1})])),
    _case("D4", "1", ("c12 >= m2", "c13 >= m3", "c23 >= m3-m2"), [(0, 1, 2)],
          ((), [({1}, {2})])),
    _case("D4", "2", ("c12 >= m2", "c13 >= m3", "c23 < m3-m2"), [(0, 2, 2)],
          ((), [({2}, {2})])),
    _case("D4", "3", ("c12 < m2", "c13-c12 >= m3-m2", "c23 >= m3-m2"), [(1, 1, 2)],
          ((), [({1}, {2})])),
    _case("D4", "4", ("c12 < m2", "c13-c12 >= m3-m2", "c23 < m3-m2"), [(1, 2, 2)],
          ((), [({2}, {2})])),
    _case("D4", "5", ("c13 < m3", "c13-c12 < m3-m2", "c23 >= m3-m2"), [(2, 1, 2)],
          (("m3-m2 >= c13",), [({2}, {2})]),
          ((), [({1}, {2})]),
          note="the m3-m2 >= c13 branch is empty because c13 > c23 >= m3-m2"),
    _case("D4", "6", ("c13 < m3", "c13-c12 < m3-m2", "c23 < m3-m2"), [(2, 2, 2)],
          ((), [({2}, {2})])),
    _case("D5", "1", (), [(0, 0, 0)], ((), [({0}, {0})])),
    _case("D6", "1", ("c23 >= m3-m1",), [(0, 0, 2)], ((), [({0}, {2})])),
    _case("D6", "2", ("c23 < m3-m1", "c13 >= m3-m1"), [(0, 2, 2)], ((), [({2}, {2})])),
    _case("D6", "3", ("c13 < m3-m1",), [(2, 2, 2)], ((), [({2}, {2})])),
    _case("D7", "1", ("c12 >= m2-m1",), [(0, 1, 1)], ((), [({1}, {1})])),
    _case("D7", "2", ("c12 < m2-m1",), [(1, 1, 1)], ((), [({1}, {1})])),
    _case("D8", "1", ("c12 >= m2-m1", "c13 >= m3-m1", "c23 >= m3-m2"), [(0, 1, 2)],
          ((), [({1}, {2})])),
    _case("D8", "2", ("c12 >= m2-m1", "c13 >= m3-m1", "c23 < m3-m2"), [(0, 2, 2)],
          ((), [({2}, {2})])),
    _case("D8", "3", ("c12 < m2-m1", "c13-c12 >= m3-m2", "c23 >= m3-m2"), [(1, 1, 2)],
          ((), [({1}, {2})])),
    _case("D8", "4", ("c12 < m2-m1", "c13-c12 >= m3-m2", "c23 < m3-m2"), [(1, 2, 2)],
          ((), [({2}, {2})])),
    _case("D8", "5", ("c13 < m3-m1", "c13-c12 < m3-m2", "c23 >= m3-m2"), [(2, 1, 2)],
          ((), [({1}, {2})])),
    _case("D8", "6", ("c13 < m3-m1", "c13-c12 < m3-m2", "c23 < m3-m2"), [(2, 2, 2)],
          ((), [({2}, {2})])),
)


def zone_sender_cases(zone: str, p: CarTradeParams) -> list:
    """Expected seller outcomes for the cost regimes of `zone` active at `p`."""
    return [c for c in SENDER_CASES if c.zone == zone and c.applies(p)]


@dataclass(frozen=True)
class CaseOutcome:
    case: SenderCase
    strategies: frozenset   # computed sender strategies
    pattern_sets: frozenset  # computed M* alternatives
    expected_strategies: frozenset
    expected_sets: frozenset

    @property
    def missing_from_listing(self):
        return (self.strategies - self.expected_strategies,
                self.pattern_sets - self.expected_sets)

    @property
    def not_computed(self):
        return (self.expected_strategies - self.strategies,
                self.expected_sets - self.pattern_sets)

    @property
    def exact(self) -> bool:
        return (self.strategies == self.expected_strategies
                and self.pattern_sets == self.expected_sets)


def evaluate_case(case: SenderCase, p: CarTradeParams) -> CaseOutcome:
    game = build_cartrade_game(p)
    br = type_best_messages(game, zone_receiver_strategy(case.zone))
    profiles = enumerate_selections(br, game.partition)
    return CaseOutcome(
        case,
        frozenset(pr.strategy for pr in profiles),
        frozenset(pr.pattern_message_sets for pr in profiles),
        frozenset(case.strategies),
        frozenset(case.expected_sets(p)),
    )


# --- random parameters -----------------------------------------------------

def _rand_frac(rng, lo, hi, den=12):
    lo, hi = Fraction(lo), Fraction(hi)
    k = rng.randint(1, den * 8 - 1)
    return lo + (hi - lo) * Fraction(k, den * 8)


def random_params(rng: random.Random, interior: bool = True) -> CarTradeParams:
    """Valid parameters; with `interior`, V1 < m1 and m3 < V3 so all zones are nonempty."""
    while True:
        bids = sorted(_rand_frac(rng, 0, 20) for _ in range(3))
        if not bids[0] < bids[1] < bids[2]:
            continue
        if interior:
            V1 = _rand_frac(rng, 0, bids[0])
            V3 = _rand_frac(rng, bids[2], bids[2] + 10)
        else:
            V1, V3 = sorted(_rand_frac(rng, 0, 30) for _ in range(2))
            if V1 == V3:
                continue
        V2 = _rand_frac(rng, V1, V3)
        span = 2 * bids[2]
        c12, c13, c23 = (_rand_frac(rng, 0, span) for _ in range(3))
        alpha = _rand_frac(rng, 0, 1)
        try:
            return CarTradeParams((V1, V2, V3), tuple(bids), (c12, c13, c23), alpha)
        except InvalidParams:
            continue


def _no_ties(p: CarTradeParams) -> bool:
    # every regime boundary is strict, so tie sets are exactly the generic ones
    return all(c.margin(p) != 0 for case in SENDER_CASES for c in case.conditions)


def sample_params_for(case: SenderCase, rng: random.Random, tries: int = 200_000) -> CarTradeParams:
    for _ in range(tries):
        p = random_params(rng)
        if case.applies(p, strict=True) and _no_ties(p):
            return p
    raise RuntimeError(f"no parameters found for {case.zone} regime {case.label}")


# --- golden cross-check ------------------------------------------------------

def _fmt_set(s):
    return "{" + ",".join(f"m{i + 1}" for i in sorted(s)) + "}"


def fmt_strategy(s):
    return "(" + ",".join(f"m{i + 1}" for i in s) + ")"


def fmt_sets(sets):
    return "/".join(_fmt_set(s) for s in sets)


def fmt_actions(s2):
    return "(" + ",".join(f"a{i + 1}" for i in s2) + ")"


def check_zone_tables(p: CarTradeParams) -> list:
    """[(zone, belief, computed canonical actions, argmax sets, ok)] at `p`."""
    game = build_cartrade_game(p)
    rows = []
    for z in ZONES:
        b = zone_belief(z, p)
        if b is None:
            rows.append((z, None, None, None, None))
            continue
        argmaxes = tuple(best_actions(game, Belief.two_point(x), m)[0] for m, x in enumerate(b))
        computed = tuple(min(s) for s in argmaxes)
        ok = all(s == {a} for s, a in zip(argmaxes, zone_receiver_strategy(z)))
        rows.append((z, b, computed, argmaxes, ok and zone_classify(b, p) == z))
    return rows


def check_thresholds(p: CarTradeParams) -> tuple:
    """(formula thresholds, interval boundaries, ok)."""
    V1, _, V3 = p.values
    formula = tuple(min(max((V3 - m) / (V3 - V1), Fraction(0)), Fraction(1)) for m in p.bids)
    game = build_cartrade_game(p)
    bounds = tuple(interval_boundary(game, m) for m in range(3))
    got = thresholds(p).clamped
    return got, bounds, got == formula == bounds


def crosscheck_report(p: CarTradeParams, seed: int = 0, samples: int = 3,
                      threshold_trials: int = 100) -> tuple:
    """Render the golden cross-check as text lines; returns (lines, all_ok)."""
    rng = random.Random(seed)
    lines = []
    ok_all = True

    lines.append("[zone receiver tables]")
    for z, b, computed, _, ok in check_zone_tables(p):
        if b is None:
            lines.append(f"  {z}: no interior point at these parameters")
            continue
        ok_all &= ok
        lines.append(f"  {z}: beliefs ({', '.join(map(str, b))}) -> {fmt_actions(computed)} "
                     f"expected {fmt_actions(zone_receiver_strategy(z))} "
                     f"{'PASS' if ok else 'FAIL'}")

    lines.append("[thresholds]")
    got, bounds, ok = check_thresholds(p)
    ok_all &= ok
    lines.append(f"  given parameters: {', '.join(map(str, got))} interval boundaries "
                 f"{', '.join(map(str, bounds))} {'PASS' if ok else 'FAIL'}")
    bad = 0
    for _ in range(threshold_trials):
        q = random_params(rng, interior=rng.random() < 0.5)
        if not check_thresholds(q)[2]:
            bad += 1
    ok_all &= bad == 0
    lines.append(f"  {threshold_trials} random parameter sets: {threshold_trials - bad} agree "
                 f"{'PASS' if bad == 0 else 'FAIL'}")

    lines.append("[seller cost regimes]")
    for case in SENDER_CASES:
        status = "PASS"
        flagged = []
        for _ in range(samples):
            q = sample_params_for(case, rng)
            out = evaluate_case(case, q)
            extra_s, extra_m = out.missing_from_listing
            lost_s, lost_m = out.not_computed
            if lost_s or lost_m:
                status = "FAIL"
            if extra_s or extra_m:
                flagged.append((extra_s, extra_m))
        if status == "FAIL":
            ok_all = False
        elif flagged:
            status = "PASS (flagged)"
        listed = "; ".join(fmt_strategy(s) for s in case.strategies)
        lines.append(f"  {case.zone} regime {case.label} [{case.describe()}]: m* {listed} {status}")
        for extra_s, extra_m in flagged[:1]:
            lines.append("    computed but not listed: "
                         + "; ".join(fmt_strategy(s) for s in sorted(extra_s))
                         + " | M* " + "; ".join(fmt_sets(x) for x in sorted(extra_m, key=fmt_sets)))
        if case.note:
            lines.append(f"    note: {case.note}")
    return lines, ok_all


# --- posterior configurations ------------------------------------------------

def _config(sets, msg_rows, posts):
    return (tuple(frozenset(s) for s in sets), msg_rows, posts)


# (M*(not high), M*(high)), p(m|pattern) rows, posteriors over patterns after each
# on-path message as functions of alpha
POSTERIOR_CONFIGS = (
    _config(({0}, {0}), lambda a: ((1, 0, 0), (1, 0, 0)), lambda a: {0: (a, 1 - a)}),
    _config(({1}, {1}), lambda a: ((0, 1, 0), (0, 1, 0)), lambda a: {1: (a, 1 - a)}),
    _config(({2}, {2}), lambda a: ((0, 0, 1), (0, 0, 1)), lambda a: {2: (a, 1 - a)}),
    _config(({0}, {1}), lambda a: ((1, 0, 0), (0, 1, 0)), lambda a: {0: (1, 0), 1: (0, 1)}),
    _config(({0}, {2}), lambda a: ((1, 0, 0), (0, 0, 1)), lambda a: {0: (1, 0), 2: (0, 1)}),
    _config(({1}, {2}), lambda a: ((0, 1, 0), (0, 0, 1)), lambda a: {1: (1, 0), 2: (0, 1)}),
    _config(({0, 1}, {0}), lambda a: ((Fraction(1, 2), Fraction(1, 2), 0), (1, 0, 0)),
        lambda a: {0: (a / (2 - a), (2 - 2 * a) / (2 - a)), 1: (1, 0)}),
    _config(({0, 1}, {1}), lambda a: ((Fraction(1, 2), Fraction(1, 2), 0), (0, 1, 0)),
        lambda a: {0: (1, 0), 1: (a / (2 - a), (2 - 2 * a) / (2 - a))}),
    _config(({0, 1}, {2}), lambda a: ((Fraction(1, 2), Fraction(1, 2), 0), (0, 0, 1)),
        lambda a: {0: (1, 0), 1: (1, 0), 2: (0, 1)}),
)
