"""JSON envelopes and file loading for the command line."""

from __future__ import annotations

import json
import sys
from typing import Any

from .alphabet import Alphabet, AlphabetError
from .psst import FockTuple, Level1, Psst, PsstError
from .rational import RationalTableau

SCHEMA_VERSION = 1


class InputError(ValueError):
    """Malformed input (exit code 2)."""


def load_json(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def envelope(kind: str, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, **payload}


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _alphabet_field(data: dict, key: str, fallback: Alphabet) -> Alphabet:
    if key not in data:
        return fallback
    try:
        return Alphabet.from_json(data[key])
    except AlphabetError:
        raise
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad alphabet under {key!r}: {exc}") from None


def read_tuple(data: Any, a: Alphabet, b: Alphabet) -> FockTuple:
    """Accept a bare array of level-1 records or {"A":…, "B":…, "tuple": […]}.

    Alphabets embedded in the file win over the command-line ones.
    """
    if isinstance(data, dict):
        a = _alphabet_field(data, "A", a)
        b = _alphabet_field(data, "B", b)
        records = data.get("tuple")
    else:
        records = data
    if not isinstance(records, list):
        raise InputError("expected a list of level-1 records")
    entries = []
    for i, rec in enumerate(records):
        if not isinstance(rec, dict):
            raise InputError(f"record {i} is not an object")
        try:
            entries.append(Level1.from_json(rec))
        except PsstError:
            raise
        except (TypeError, ValueError) as exc:
            raise InputError(f"record {i}: {exc}") from None
    return FockTuple(a, b, tuple(entries))


def tuple_payload(ft: FockTuple) -> dict:
    return {"A": ft.a.to_json(), "B": ft.b.to_json(), "tuple": ft.to_json()}


def read_pair(data: Any) -> tuple[Psst, RationalTableau]:
    """The (P, Q) pair as written by ``rsk``."""
    if not isinstance(data, dict) or "P" not in data or "Q" not in data:
        raise InputError("expected an object with 'P' and 'Q'")
    try:
        return Psst.from_json(data["P"]), RationalTableau.from_json(data["Q"])
    except KeyError as exc:
        raise InputError(f"missing field {exc}") from None
    except TypeError as exc:
        raise InputError(str(exc)) from None


def parse_ints(text: str) -> tuple[int, ...]:
    """'3,2,0,-2' -> (3, 2, 0, -2); an empty string gives ()."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None
