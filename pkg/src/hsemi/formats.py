"""Cayley-table text format and its JSON twin.

Text form::

    # optional comment lines
    3
    0 0 0
    0 1 0
    0 0 2
    names: 0 e f

The first non-comment line is the order n, followed by n rows of n
whitespace-separated integers; an optional final ``names:`` line carries n
tokens. JSON form: ``{"order": n, "table": [[...]], "names": [...]}``.
"""
from __future__ import annotations

import json

from .core import FiniteSemigroup, from_table
from .errors import MalformedTable


def parse_text(text: str) -> FiniteSemigroup:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedTable("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise MalformedTable(f"first line must be the order, got {lines[0]!r}") from None
    if n < 1:
        raise MalformedTable(f"order must be positive, got {n}")
    body = lines[1:]
    names = None
    if body and body[-1].startswith("names:"):
        names = body[-1][len("names:"):].split()
        body = body[:-1]
    if len(body) != n:
        raise MalformedTable(f"expected {n} table rows, got {len(body)}")
    try:
        rows = [[int(tok) for tok in ln.split()] for ln in body]
    except ValueError as exc:
        raise MalformedTable(f"non-integer table entry: {exc}") from None
    return from_table(rows, names)


def parse_json(text: str) -> FiniteSemigroup:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedTable(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "table" not in obj:
        raise MalformedTable('JSON input must be an object with a "table" key')
    table = obj["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise MalformedTable('"table" must be a list of rows')
    if "order" in obj and obj["order"] != len(table):
        raise MalformedTable(f'"order" is {obj["order"]} but the table has {len(table)} rows')
    return from_table(table, obj.get("names"))


def parse(text: str) -> FiniteSemigroup:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def load(path: str) -> FiniteSemigroup:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def to_text(S: FiniteSemigroup) -> str:
    out = [str(S.order)]
    out += [" ".join(str(v) for v in row) for row in S.table]
    if S.names:
        out.append("names: " + " ".join(S.names))
    return "\n".join(out) + "\n"


def to_json(S: FiniteSemigroup) -> str:
    obj = {"order": S.order, "table": [list(r) for r in S.table]}
    if S.names:
        obj["names"] = list(S.names)
    return json.dumps(obj) + "\n"
