"""Free-group words, presentations, and evaluation into groups.

Words are kept freely reduced in run-length form: a tuple of
``(generator_index, exponent)`` pairs with neighbouring generators distinct
and no zero exponents.  Relators of large Dehn fillings run to thousands of
letters, but only a few thousand runs, and evaluation costs one
square-and-multiply per run.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Protocol, Sequence

from .errors import InputError, WordParseError

Run = tuple[int, int]


def _reduce(runs: Iterable[Run]) -> tuple[Run, ...]:
    stack: list[Run] = []
    for g, e in runs:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            e += stack.pop()[1]
            if e == 0:
                continue
        stack.append((g, e))
    return tuple(stack)


class Word:
    __slots__ = ("gens", "runs")

    def __init__(self, gens: Sequence[str], runs: Iterable[Run] = ()) -> None:
        self.gens = tuple(gens)
        runs = list(runs)
        for g, _ in runs:
            if not 0 <= g < len(self.gens):
                raise InputError(f"generator index {g} out of range for {self.gens}")
        self.runs = _reduce(runs)

    @classmethod
    def generator(cls, gens: Sequence[str], name: str, exponent: int = 1) -> Word:
        return cls(gens, [(tuple(gens).index(name), exponent)])

    def _check(self, other: Word) -> None:
        if self.gens != other.gens:
            raise InputError(f"alphabet mismatch: {self.gens} vs {other.gens}")

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        self._check(other)
        return Word(self.gens, self.runs + other.runs)

    def inverse(self) -> Word:
        return Word(self.gens, [(g, -e) for g, e in reversed(self.runs)])

    def __invert__(self) -> Word:
        return self.inverse()

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        # reduction of base*base only touches the seam, so this stays linear
        return Word(self.gens, base.runs * abs(n))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.runs)

    def __bool__(self) -> bool:
        return bool(self.runs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.gens == other.gens and self.runs == other.runs

    def __hash__(self) -> int:
        return hash((self.gens, self.runs))

    def exponent_sums(self) -> list[int]:
        sums = [0] * len(self.gens)
        for g, e in self.runs:
            sums[g] += e
        return sums

    def letters(self) -> list[tuple[int, int]]:
        """Expanded letter sequence of (generator, +1/-1)."""
        out = []
        for g, e in self.runs:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def __str__(self) -> str:
        if not self.runs:
            return "1"
        return " ".join(
            self.gens[g] if e == 1 else f"{self.gens[g]}^{e}" for g, e in self.runs
        )

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


_TOKEN = re.compile(r"\S+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def parse_word(text: str, gens: Sequence[str]) -> Word:
    """Parse ``"x y^-1 x^2"`` style text into a reduced word.

    ``1`` on its own denotes the empty word.
    """
    gens = tuple(gens)
    runs = []
    for m in _TOKEN.finditer(text):
        tok, pos = m.group(), m.start()
        if tok == "1":
            continue
        name, caret, exp = tok.partition("^")
        if not _NAME.fullmatch(name):
            raise WordParseError(f"malformed token {tok!r}", pos)
        if name not in gens:
            raise WordParseError(f"unknown generator {name!r}", pos)
        if caret:
            try:
                e = int(exp)
            except ValueError:
                raise WordParseError(f"malformed exponent {exp!r}", pos + len(name) + 1) from None
            if e == 0:
                raise WordParseError("zero exponent", pos + len(name) + 1)
        else:
            e = 1
        runs.append((gens.index(name), e))
    return Word(gens, runs)


@dataclass(frozen=True)
class Presentation:
    gens: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise InputError(f"duplicate generator names in {self.gens}")
        for r in self.relators:
            if r.gens != self.gens:
                raise InputError(f"relator {r} uses alphabet {r.gens}, expected {self.gens}")

    @classmethod
    def free(cls, gens: Sequence[str]) -> Presentation:
        return cls(tuple(gens), ())

    def exponent_matrix(self) -> list[list[int]]:
        return [r.exponent_sums() for r in self.relators]

    def __str__(self) -> str:
        return f"gens: {', '.join(self.gens)} ; rels: {' , '.join(str(r) for r in self.relators)}"


def parse_presentation(text: str) -> Presentation:
    """Parse ``gens: x, y ; rels: <word> , <word>``."""
    raw_head, sep, tail = text.partition(";")
    head = raw_head.strip()
    if not head.startswith("gens:"):
        raise WordParseError("expected 'gens:'", 0)
    gens = tuple(g.strip() for g in head[len("gens:"):].split(",") if g.strip())
    for g in gens:
        if not _NAME.fullmatch(g):
            raise WordParseError(f"bad generator name {g!r}", text.index(g))
    rels: list[Word] = []
    if sep:
        tail_stripped = tail.lstrip()
        offset = len(raw_head) + 1 + (len(tail) - len(tail_stripped))
        if not tail_stripped.startswith("rels:"):
            raise WordParseError("expected 'rels:'", offset)
        offset += len("rels:")
        body = tail_stripped[len("rels:"):]
        for chunk in body.split(","):
            if chunk.strip():
                try:
                    rels.append(parse_word(chunk, gens))
                except WordParseError as exc:
                    raise WordParseError(str(exc).rsplit(" (at", 1)[0], offset + exc.position) from None
            offset += len(chunk) + 1
    return Presentation(gens, tuple(rels))


# -- evaluation -------------------------------------------------------------


class GroupLike(Protocol):
    identity: Any

    def mul(self, a: Any, b: Any) -> Any: ...

    def inv(self, a: Any) -> Any: ...


class ObjectGroup:
    """Adapter for values that overload ``*`` and provide ``inverse()``."""

    def __init__(self, identity: Any, mul: Callable[[Any, Any], Any] = operator.mul,
                 inv: Callable[[Any], Any] = lambda a: a.inverse()):
        self.identity = identity
        self.mul = mul
        self.inv = inv


def power(group: GroupLike, g: Any, e: int) -> Any:
    if e < 0:
        g, e = group.inv(g), -e
    result = group.identity
    while e:
        if e & 1:
            result = group.mul(result, g)
        e >>= 1
        if e:
            g = group.mul(g, g)
    return result


def eval_word(word: Word, images: Sequence[Any], group: GroupLike) -> Any:
    if len(images) != len(word.gens):
        raise InputError(f"{len(images)} images given for {len(word.gens)} generators")
    result = group.identity
    for g, e in word.runs:
        result = group.mul(result, power(group, images[g], e))
    return result
