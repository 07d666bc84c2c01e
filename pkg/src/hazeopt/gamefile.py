"""File formats: game files, sequence files, strict JSON conventions.

Game files hold either a payoff game

    {"type":"payoff","beta":"9/10","actions":[{"p":4,"p_star":0}, ...]}

or a hazing instance

    {"type":"hazing","delta":6,"actions":[{"h":4,"t":-8}, ...]}

and generator output wraps a list of games as {"meta": {...}, "games": [...]}.
Rationals are "num/den" strings, integers are bare JSON numbers, and JSON
floats are rejected outright so a file can never smuggle in inexact values.
Unknown keys are ignored on load.  Serialization uses a fixed key order and
compact separators, so equal inputs produce byte-identical files.

Sequence files are {"steps": [0, 1, 0]} where indices refer to the paired
instance's alphabet in threshold order (ascending threshold, ties by
alphabet position); loading converts them to alphabet indices and saving
converts back.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Union

from .games import HazingInstance, HazingSequence, SymmetricGame

Game = Union[SymmetricGame, HazingInstance]


class GameFileError(ValueError):
    """Malformed game, sequence, or benchmark file content."""


def _reject_float(token: str):
    raise GameFileError(
        f"float literal {token} not allowed; use \"num/den\" strings for rationals"
    )


def loads_strict(text: str):
    """json.loads that refuses float literals."""
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"invalid JSON: {exc}") from exc


def dumps_compact(obj) -> str:
    """Serialize with fixed separators and key order (insertion order)."""
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _rational_str(value: Fraction) -> Union[int, str]:
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def _parse_rational(value, name: str) -> Fraction:
    # bool is an int subclass; keep it out of payoffs
    if type(value) is int:
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GameFileError(f"{name}: bad rational {value!r}") from exc
    raise GameFileError(f"{name}: expected integer or \"num/den\" string, got {value!r}")


def _parse_int(value, name: str) -> int:
    if type(value) is not int:
        raise GameFileError(f"{name}: expected integer, got {value!r}")
    return value


def game_to_obj(game: Game) -> dict:
    if isinstance(game, SymmetricGame):
        return {
            "type": "payoff",
            "beta": f"{game.beta.numerator}/{game.beta.denominator}",
            "actions": [
                {"p": _rational_str(p), "p_star": _rational_str(ps)}
                for p, ps in game.actions
            ],
        }
    if isinstance(game, HazingInstance):
        return {
            "type": "hazing",
            "delta": game.delta,
            "actions": [{"h": h, "t": t} for h, t in game.alphabet],
        }
    raise TypeError(f"not a game: {game!r}")


def game_from_obj(obj) -> Game:
    if not isinstance(obj, dict):
        raise GameFileError(f"game must be an object, got {type(obj).__name__}")
    kind = obj.get("type")
    actions = obj.get("actions")
    if not isinstance(actions, list):
        raise GameFileError("game needs an \"actions\" array")
    if kind == "payoff":
        beta = _parse_rational(obj.get("beta"), "beta")
        pairs = []
        for i, act in enumerate(actions):
            if not isinstance(act, dict):
                raise GameFileError(f"actions[{i}] must be an object")
            pairs.append(
                (
                    _parse_rational(act.get("p"), f"actions[{i}].p"),
                    _parse_rational(act.get("p_star"), f"actions[{i}].p_star"),
                )
            )
        try:
            return SymmetricGame(pairs, beta)
        except ValueError as exc:
            raise GameFileError(str(exc)) from exc
    if kind == "hazing":
        delta = _parse_int(obj.get("delta"), "delta")
        alphabet = []
        for i, act in enumerate(actions):
            if not isinstance(act, dict):
                raise GameFileError(f"actions[{i}] must be an object")
            alphabet.append(
                (
                    _parse_int(act.get("h"), f"actions[{i}].h"),
                    _parse_int(act.get("t"), f"actions[{i}].t"),
                )
            )
        try:
            return HazingInstance(tuple(alphabet), delta)
        except ValueError as exc:
            raise GameFileError(str(exc)) from exc
    raise GameFileError(f"unknown game type {kind!r}")


def load_games(path: str) -> tuple[list[Game], Optional[dict]]:
    """Read a game file: a single game object or a {"meta","games"} wrapper."""
    with open(path, "r", encoding="utf-8") as fh:
        root = loads_strict(fh.read())
    if not isinstance(root, dict):
        raise GameFileError("top level must be an object")
    if "games" in root:
        games_field = root["games"]
        if not isinstance(games_field, list) or not games_field:
            raise GameFileError("\"games\" must be a nonempty array")
        meta = root.get("meta")
        if meta is not None and not isinstance(meta, dict):
            raise GameFileError("\"meta\" must be an object")
        return [game_from_obj(g) for g in games_field], meta
    return [game_from_obj(root)], None


def load_single_game(path: str) -> Game:
    games, _ = load_games(path)
    if len(games) != 1:
        raise GameFileError(f"expected exactly one game, file holds {len(games)}")
    return games[0]


def save_games(path: str, games: list[Game], meta: Optional[dict] = None) -> None:
    """Write one bare game, or a wrapper when there are several or meta is given."""
    if not games:
        raise ValueError("nothing to save")
    if meta is None and len(games) == 1:
        payload = game_to_obj(games[0])
    else:
        payload = {}
        if meta is not None:
            payload["meta"] = meta
        payload["games"] = [game_to_obj(g) for g in games]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_compact(payload))


def _threshold_positions(inst: HazingInstance) -> list[int]:
    pos = [0] * inst.n
    for i, j in enumerate(inst.threshold_order):
        pos[j] = i
    return pos


def load_sequence(path: str, inst: HazingInstance) -> HazingSequence:
    """Read {"steps": [...]} with threshold-order indices for inst."""
    with open(path, "r", encoding="utf-8") as fh:
        root = loads_strict(fh.read())
    if not isinstance(root, dict) or "steps" not in root:
        raise GameFileError("sequence file needs a \"steps\" array")
    steps_field = root["steps"]
    if not isinstance(steps_field, list):
        raise GameFileError("\"steps\" must be an array")
    order = inst.threshold_order
    steps = []
    for i, s in enumerate(steps_field):
        idx = _parse_int(s, f"steps[{i}]")
        if not 0 <= idx < inst.n:
            raise GameFileError(f"steps[{i}]: index {idx} out of range for {inst.n} actions")
        steps.append(order[idx])
    return HazingSequence(tuple(steps))


def save_sequence(path: str, inst: HazingInstance, seq: HazingSequence) -> None:
    pos = _threshold_positions(inst)
    payload = {"steps": [pos[j] for j in seq.steps]}
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_compact(payload))
