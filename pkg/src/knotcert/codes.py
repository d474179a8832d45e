"""Raw diagram encodings and their text/JSON grammars.

Three encodings are supported:

* PD codes: ``X(a,b,c,d)`` terms, arc labels listed counterclockwise
  starting from the incoming under-strand, with an optional
  ``FREE_LOOPS=k`` header for crossing-free circles.
* Braid words: ``BR(n; w1 w2 ...)`` where ``i`` is sigma_i and ``-i`` its
  inverse.
* Gauss codes: ``O<label><sign>`` / ``U<label><sign>`` tokens, one component
  per ``;``-separated chunk.

Each encoding also has a JSON mirror (see :func:`parse_record_json`).
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from typing import Any


class DiagramError(ValueError):
    """Raised for diagrams that are malformed or cannot exist on the sphere."""


class ParseError(DiagramError):
    """Syntax error in a diagram encoding; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0

    def __post_init__(self):
        if self.free_loops < 0:
            raise DiagramError("free_loops must be non-negative")
        if not self.crossings and self.free_loops == 0:
            raise DiagramError("empty PD code describes no diagram")
        counts = Counter(label for x in self.crossings for label in x)
        bad = sorted(label for label, n in counts.items() if n != 2)
        if bad:
            raise DiagramError(
                "arc labels must occur exactly twice; offending labels: "
                + ",".join(map(str, bad)))
        if any(label < 1 for label in counts):
            raise DiagramError("arc labels must be positive integers")

    def to_text(self) -> str:
        terms = ["X(%d,%d,%d,%d)" % x for x in self.crossings]
        if self.free_loops:
            terms.insert(0, f"FREE_LOOPS={self.free_loops}")
        return " ".join(terms)

    def to_json(self) -> dict:
        return {"pd": [list(x) for x in self.crossings], "free_loops": self.free_loops}


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise DiagramError("a braid needs at least one strand")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strand_count:
                raise DiagramError(
                    f"generator {letter} out of range for {self.strand_count} strands")

    def to_text(self) -> str:
        return "BR(%d; %s)" % (self.strand_count, " ".join(map(str, self.letters)))

    def to_json(self) -> dict:
        return {"braid": list(self.letters), "strands": self.strand_count}


@dataclass(frozen=True)
class GaussToken:
    label: int
    over: bool
    sign: int  # +1 / -1

    def __str__(self):
        return "%s%d%s" % ("O" if self.over else "U", self.label,
                           "+" if self.sign > 0 else "-")


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[GaussToken, ...], ...]

    def __post_init__(self):
        if not self.components:
            raise DiagramError("Gauss code needs at least one component")
        seen: dict[int, list[GaussToken]] = {}
        for comp in self.components:
            for tok in comp:
                seen.setdefault(tok.label, []).append(tok)
        for label, toks in sorted(seen.items()):
            if len(toks) != 2:
                raise DiagramError(
                    f"crossing {label} occurs {len(toks)} times, expected 2")
            if toks[0].over == toks[1].over:
                raise DiagramError(
                    f"crossing {label} must occur once over and once under")
            if toks[0].sign != toks[1].sign:
                raise DiagramError(f"crossing {label} has inconsistent signs")

    def to_text(self) -> str:
        return ";".join("".join(map(str, comp)) for comp in self.components)

    def to_json(self) -> dict:
        return {"gauss": [[str(t) for t in comp] for comp in self.components]}


# -- text grammars ---------------------------------------------------------

_WS = re.compile(r"\s*")
_PD_TERM = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_FREE = re.compile(r"FREE_LOOPS\s*=\s*(\d+)")
_BRAID = re.compile(r"\s*BR\(\s*(-?\d+)\s*;([^)]*)\)\s*$")
_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-])")


def parse_pd(text: str, free_loops: int | None = None) -> PDCode:
    """Parse whitespace-separated ``X(a,b,c,d)`` terms.

    A ``FREE_LOOPS=k`` header may precede the terms; an explicit
    ``free_loops`` argument overrides it.
    """
    pos = _WS.match(text).end()
    header = _FREE.match(text, pos)
    loops = 0
    if header:
        loops = int(header.group(1))
        pos = _WS.match(text, header.end()).end()
    crossings = []
    while pos < len(text):
        m = _PD_TERM.match(text, pos)
        if not m:
            raise ParseError("expected a term X(a,b,c,d)", pos)
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = _WS.match(text, m.end()).end()
    if free_loops is not None:
        loops = free_loops
    return PDCode(tuple(crossings), loops)


def parse_braid(text: str) -> BraidWord:
    m = _BRAID.match(text)
    if not m:
        raise ParseError("expected BR(n; w1 w2 ...)", 0)
    letters = []
    for tok in m.group(2).split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise ParseError(f"bad braid letter {tok!r}", m.start(2)) from None
    return BraidWord(int(m.group(1)), tuple(letters))


def parse_gauss(text: str) -> GaussCode:
    comps = []
    offset = 0
    for chunk in text.split(";"):
        toks = []
        pos = _WS.match(chunk).end()
        while pos < len(chunk):
            m = _GAUSS_TOKEN.match(chunk, pos)
            if not m:
                raise ParseError("expected a token like O1+ or U2-", offset + pos)
            toks.append(GaussToken(int(m.group(2)), m.group(1) == "O",
                                   1 if m.group(3) == "+" else -1))
            pos = re.compile(r"[\s,]*").match(chunk, m.end()).end()
        comps.append(tuple(toks))
        offset += len(chunk) + 1
    return GaussCode(tuple(comps))


def parse_record_json(obj: Any) -> PDCode | BraidWord | GaussCode:
    """Decode one JSON diagram object.

    Accepted shapes::

        {"pd": [[1,4,2,5], ...], "free_loops": 0}
        {"braid": [1, 1, 1], "strands": 2}
        {"gauss": [["O1+", "U2+", ...], ...]}   # components may also be strings
    """
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise ParseError("JSON diagram must be an object")
    if "pd" in obj:
        try:
            crossings = tuple(tuple(int(v) for v in x) for x in obj["pd"])
        except (TypeError, ValueError):
            raise ParseError("pd must be a list of integer 4-tuples") from None
        if any(len(x) != 4 for x in crossings):
            raise ParseError("every PD crossing needs exactly 4 labels")
        return PDCode(crossings, int(obj.get("free_loops", 0)))
    if "braid" in obj:
        if "strands" not in obj:
            raise ParseError("braid object needs a 'strands' field")
        return BraidWord(int(obj["strands"]), tuple(int(v) for v in obj["braid"]))
    if "gauss" in obj:
        comps = obj["gauss"]
        if isinstance(comps, str):
            return parse_gauss(comps)
        text = ";".join(c if isinstance(c, str) else " ".join(c) for c in comps)
        return parse_gauss(text)
    raise ParseError("JSON diagram needs one of 'pd', 'braid', 'gauss'")


def detect_format(text: str) -> str:
    s = text.lstrip()
    if s.startswith(("{", "[")):
        return "json"
    if s.startswith("BR"):
        return "braid"
    if s.startswith(("X", "FREE_LOOPS")) or not s:
        return "pd"
    return "gauss"


def parse_any(text: str, fmt: str | None = None):
    fmt = fmt or detect_format(text)
    if fmt == "pd":
        return parse_pd(text)
    if fmt == "braid":
        return parse_braid(text)
    if fmt == "gauss":
        return parse_gauss(text)
    if fmt == "json":
        try:
            return parse_record_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    raise ValueError(f"unknown format {fmt!r}")
