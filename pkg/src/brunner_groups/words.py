"""Freely reduced words over the generators ``a``, ``b``, ``t``.

A word is stored as a tuple of syllables ``(gen, exp)`` with ``exp != 0``
and no two neighbouring syllables on the same generator.  The text format
is a whitespace separated list of tokens ``a``, ``b`` or ``t`` optionally
followed by ``^<signed integer>``::

    >>> str(parse("t^-1 a^-2 t a^18"))
    't^-1 a^-2 t a^18'
    >>> str(parse("a^2 a^-2"))
    ''
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import WordParseError

__all__ = [
    "GENERATORS",
    "GenWord",
    "parse",
    "format_word",
    "multiply",
    "invert",
    "exponent_sum",
    "word",
]

GENERATORS = ("a", "b", "t")

_TOKEN = re.compile(r"([abt])(?:\^([+-]?\d+))?\Z")


def _reduce(syllables: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    out: list[tuple[str, int]] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + exp
            if total:
                out[-1] = (gen, total)
            else:
                out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class GenWord:
    syllables: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", _reduce(self.syllables))

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "GenWord":
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        return cls(((name, exp),))

    def __mul__(self, other: "GenWord") -> "GenWord":
        return GenWord(self.syllables + other.syllables)

    def __pow__(self, n: int) -> "GenWord":
        if n < 0:
            return self.inverse() ** (-n)
        return GenWord(self.syllables * n)

    def inverse(self) -> "GenWord":
        return GenWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __len__(self):
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"GenWord({format_word(self)!r})"

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def t_length(self) -> int:
        """Number of stable letters, counted with multiplicity."""
        return sum(abs(e) for g, e in self.syllables if g == "t")

    def letters(self):
        """Yield ``(gen, ±1)`` one letter at a time."""
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step


def word(text: str = "") -> GenWord:
    """Shorthand for :func:`parse`."""
    return parse(text)


def parse(text: str) -> GenWord:
    syllables = []
    for match in re.finditer(r"\S+", text):
        tok = _TOKEN.match(match.group())
        if tok is None:
            raise WordParseError(f"malformed token {match.group()!r}", match.start())
        exp = 1 if tok.group(2) is None else int(tok.group(2))
        if exp == 0:
            raise WordParseError(f"zero exponent in {match.group()!r}", match.start())
        syllables.append((tok.group(1), exp))
    return GenWord(tuple(syllables))


def format_word(w: GenWord) -> str:
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w.syllables)


def multiply(*words: GenWord) -> GenWord:
    return GenWord(tuple(s for w in words for s in w.syllables))


def invert(w: GenWord) -> GenWord:
    return w.inverse()


def exponent_sum(w: GenWord, gen: str) -> int:
    return sum(e for g, e in w.syllables if g == gen)
