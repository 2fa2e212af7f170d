"""Attribute extraction from WoS address strings and case folding.

Institution is the text before the first comma, country the text after the
last one. Labels are compared after folding, so ``Unist`` and ``UNIST`` are
one node unless folding is switched off.
"""
from __future__ import annotations

import enum
import re

_TRIM = " \t"
_WS_SPLIT = re.compile(r"(\s+)")


class AddressError(ValueError):
    """Address string cannot yield the requested attribute."""


class FoldMode(str, enum.Enum):
    UPPER = "UPPER"
    LOWER = "LOWER"
    CAPITALIZED = "CAPITALIZED"
    NONE = "NONE"

    @classmethod
    def parse(cls, value: "str | FoldMode") -> "FoldMode":
        if isinstance(value, FoldMode):
            return value
        try:
            return cls[value.strip().upper()]
        except KeyError:
            choices = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown fold mode {value!r} (choose from {choices})") from None


def trim(s: str) -> str:
    return s.strip(_TRIM)


def extract_institution(address: str) -> str:
    """Text before the first comma (the whole string if there is none)."""
    a = trim(address)
    if not a:
        raise AddressError("empty address")
    head, _, _ = a.partition(",")
    return trim(head)


def extract_country(address: str) -> str:
    """Text after the last comma.

    US addresses end in ``"MA 02139 USA"``; the state/zip prefix is dropped.
    UK home nations stay as written (England, Scotland, Wales, North Ireland).
    """
    a = trim(address)
    if "," not in a:
        raise AddressError(f"no comma in address {address!r}")
    tail = trim(a.rpartition(",")[2])
    if not tail:
        raise AddressError(f"empty country segment in {address!r}")
    # split() also breaks on \r, \v etc. which trim() leaves alone
    tokens = tail.split()
    if tokens and tokens[-1].upper() == "USA":
        return tokens[-1]
    return tail


def _lower(s: str) -> str:
    # context-free per-character lowering; str.lower() applies final-sigma
    if "Σ" in s:
        return "".join(c.lower() for c in s)
    return s.lower()


def _cap_token(tok: str) -> str:
    first, rest = tok[0], tok[1:]
    up = first.upper()
    # multi-character uppercase (e.g. "ß" -> "SS") is not idempotent; keep as is
    head = up if len(up) == 1 else first
    return head + _lower(rest)


def fold_case(s: str, mode: FoldMode | str) -> str:
    mode = FoldMode.parse(mode)
    if mode is FoldMode.NONE:
        return s
    if mode is FoldMode.UPPER:
        return s.upper()
    if mode is FoldMode.LOWER:
        return _lower(s)
    parts = _WS_SPLIT.split(s)
    return "".join(p if (not p or p.isspace()) else _cap_token(p) for p in parts)
