"""Symmetric n-player prisoners' dilemma stage games.

A state of the stage game is summarised by ``j``, the number of defecting
agents (``0 <= j <= n``).  Action ``0`` is cooperate and ``1`` is defect.
Only two utility rows are needed: ``u(0, [j])`` for ``j = 0..n-1`` and
``u(1, [j])`` for ``j = 1..n``.  The cells ``u(0, [n])`` and ``u(1, [0])``
do not exist, because no agent can hold that role in that state.

All values are :class:`fractions.Fraction`, so every comparison the solver
makes is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import EmptyCycle, GameSpecError, UndefinedUtility

COOPERATE = 0
DEFECT = 1

LOCALLY_NONCOOPERATIVE = "locally_noncooperative"
MONOTONE_DECREASING = "monotone_decreasing"


def to_rational(value) -> Fraction:
    """Convert an int, a decimal string or a ``"p/q"`` string to a Fraction.

    Floats are rejected: a binary float such as ``0.1`` has no exact
    decimal meaning, so callers must pass ``"0.1"`` instead.
    """
    if isinstance(value, bool):
        raise GameSpecError(f"boolean {value!r} is not a utility value")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, float):
        raise GameSpecError(
            f"float {value!r} is not exact; pass it as a string such as '{value!r}'"
        )
    if isinstance(value, str):
        text = value.strip()
        try:
            result = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise GameSpecError(f"cannot parse {value!r} as a rational") from exc
        return result
    raise GameSpecError(f"unsupported utility value {value!r} ({type(value).__name__})")


def format_rational(value: Fraction) -> str:
    """Render as ``"p/q"``; integers are rendered as ``"p/1"`` for uniformity."""
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class StageGame:
    """Utility table of a symmetric stage game.

    ``coop_utility[j]`` is ``u(0, [j])`` for ``j = 0..n-1`` and
    ``defect_utility[j - 1]`` is ``u(1, [j])`` for ``j = 1..n``.
    """

    n: int
    coop_utility: tuple[Fraction, ...]
    defect_utility: tuple[Fraction, ...]

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 2:
            raise GameSpecError(f"player count must be an integer >= 2, got {self.n!r}")
        coop = tuple(to_rational(v) for v in self.coop_utility)
        defect = tuple(to_rational(v) for v in self.defect_utility)
        if len(coop) != self.n:
            raise GameSpecError(
                f"cooperate row needs {self.n} values (states [0]..[{self.n - 1}]), got {len(coop)}"
            )
        if len(defect) != self.n:
            raise GameSpecError(
                f"defect row needs {self.n} values (states [1]..[{self.n}]), got {len(defect)}"
            )
        object.__setattr__(self, "coop_utility", coop)
        object.__setattr__(self, "defect_utility", defect)

    @classmethod
    def from_rows(cls, cooperate: Iterable, defect: Iterable) -> "StageGame":
        cooperate = list(cooperate)
        return cls(len(cooperate), tuple(cooperate), tuple(defect))

    @property
    def states(self) -> range:
        return range(self.n + 1)

    def utility(self, action: int, state: int) -> Fraction:
        return utility(self, action, state)

    def has_utility(self, action: int, state: int) -> bool:
        if action == COOPERATE:
            return 0 <= state <= self.n - 1
        if action == DEFECT:
            return 1 <= state <= self.n
        return False

    def to_spec(self) -> dict:
        """Game-spec dictionary with rationals rendered as ``"p/q"`` strings."""
        return {
            "players": self.n,
            "cooperate": [format_rational(v) for v in self.coop_utility],
            "defect": [format_rational(v) for v in self.defect_utility],
        }


def utility(game: StageGame, action: int, state: int) -> Fraction:
    """Stage payoff of an agent playing ``action`` when the state is ``[state]``."""
    if action not in (COOPERATE, DEFECT):
        raise ValueError(f"action must be 0 or 1, got {action!r}")
    if not 0 <= state <= game.n:
        raise ValueError(f"state [{state}] outside [0]..[{game.n}]")
    if action == COOPERATE:
        if state == game.n:
            raise UndefinedUtility(f"no cooperative agent exists at [{game.n}]")
        return game.coop_utility[state]
    if state == 0:
        raise UndefinedUtility("no defective agent exists at [0]")
    return game.defect_utility[state - 1]


@dataclass(frozen=True)
class Violation:
    """One failing inequality found by an audit."""

    property: str
    states: tuple[int, ...]
    inequality: str

    def render(self) -> str:
        where = ",".join(f"[{s}]" for s in self.states)
        return f"{self.property} at {where}: {self.inequality}"


@dataclass(frozen=True)
class AuditResult:
    property: str
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed


def _fmt(v: Fraction) -> str:
    return str(v)


def check_locally_noncooperative(game: StageGame) -> AuditResult:
    """Defectors out-earn cooperators in every mixed state, and defecting at
    ``[b+1]`` beats cooperating at ``[b]`` for every ``b``."""
    u = game.utility
    out = []
    for j in range(1, game.n):
        if not u(1, j) > u(0, j):
            out.append(Violation(
                LOCALLY_NONCOOPERATIVE, (j,),
                f"u(1,[{j}]) = {_fmt(u(1, j))} is not > u(0,[{j}]) = {_fmt(u(0, j))}",
            ))
    for b in range(game.n):
        if not u(1, b + 1) > u(0, b):
            out.append(Violation(
                LOCALLY_NONCOOPERATIVE, (b + 1, b),
                f"u(1,[{b + 1}]) = {_fmt(u(1, b + 1))} is not > u(0,[{b}]) = {_fmt(u(0, b))}",
            ))
    return AuditResult(LOCALLY_NONCOOPERATIVE, tuple(out))


def check_monotone_decreasing(game: StageGame) -> AuditResult:
    """Both utility rows strictly decrease as the number of defectors grows."""
    out = []
    for action, row, first in ((0, game.coop_utility, 0), (1, game.defect_utility, 1)):
        for i in range(len(row) - 1):
            lo, hi = first + i, first + i + 1
            if not row[i + 1] < row[i]:
                out.append(Violation(
                    MONOTONE_DECREASING, (lo, hi),
                    f"u({action},[{hi}]) = {_fmt(row[i + 1])} is not < "
                    f"u({action},[{lo}]) = {_fmt(row[i])}",
                ))
    return AuditResult(MONOTONE_DECREASING, tuple(out))


def audit(game: StageGame) -> tuple[AuditResult, AuditResult]:
    return check_locally_noncooperative(game), check_monotone_decreasing(game)


def is_audited(game: StageGame) -> bool:
    return all(a.passed for a in audit(game))


def limit_of_means(transient: Sequence, periodic: Sequence) -> Fraction:
    """Limit-of-means payoff of the stream ``transient + periodic + periodic + ...``.

    The finite transient has no weight in the limit, so the result is the
    mean of one period.
    """
    if len(periodic) == 0:
        raise EmptyCycle("periodic part of the payoff stream is empty")
    values = [to_rational(v) for v in periodic]
    return sum(values, Fraction(0)) / len(values)


# -- game-spec files ---------------------------------------------------------

def game_from_spec(data) -> StageGame:
    """Build a game from a decoded game-spec JSON object."""
    if not isinstance(data, dict):
        raise GameSpecError("game spec must be a JSON object")
    expected = {"players", "cooperate", "defect"}
    missing = expected - data.keys()
    if missing:
        raise GameSpecError(f"game spec missing key(s): {', '.join(sorted(missing))}")
    extra = data.keys() - expected
    if extra:
        raise GameSpecError(f"game spec has unknown key(s): {', '.join(sorted(extra))}")
    n = data["players"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise GameSpecError(f"'players' must be an integer, got {n!r}")
    rows = {}
    for key in ("cooperate", "defect"):
        row = data[key]
        if not isinstance(row, list):
            raise GameSpecError(f"'{key}' must be an array")
        if len(row) != n:
            raise GameSpecError(f"'{key}' must have exactly {n} entries, got {len(row)}")
        parsed = []
        for i, v in enumerate(row):
            try:
                parsed.append(to_rational(v))
            except GameSpecError as exc:
                raise GameSpecError(f"'{key}'[{i}]: {exc}") from None
        rows[key] = tuple(parsed)
    return StageGame(n, rows["cooperate"], rows["defect"])


def loads_game(text: str) -> StageGame:
    """Parse a game-spec JSON document.  Syntax errors carry line/column."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameSpecError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return game_from_spec(data)


def load_game(path) -> StageGame:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return loads_game(text)
    except GameSpecError as exc:
        raise GameSpecError(f"{path}: {exc}") from exc


def dumps_game(game: StageGame) -> str:
    return json.dumps(game.to_spec(), indent=2) + "\n"
