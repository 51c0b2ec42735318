"""Reduced words in the free group F_N.

A word is stored as a string: generator ``j`` is the ``j``-th lowercase
letter and its inverse the matching uppercase letter, so ``"aBa"`` is
g1 g2^-1 g1.  The identity is the empty string and serializes as ``"1"``.
Every constructor reduces eagerly, so equal group elements have equal text
and can be hashed directly.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .budget import DEFAULT_WORD_LIMIT, BudgetExceededError

MAX_GENERATORS = 26
IDENTITY_TEXT = "1"

_LOWER = string.ascii_lowercase


class Letter(NamedTuple):
    generator: int
    sign: int

    @property
    def symbol(self) -> str:
        ch = _LOWER[self.generator - 1]
        return ch if self.sign == 1 else ch.upper()

    @classmethod
    def from_symbol(cls, ch: str) -> "Letter":
        if len(ch) != 1 or not ch.isalpha() or not ch.isascii():
            raise ValueError(f"not a generator symbol: {ch!r}")
        return cls(_LOWER.index(ch.lower()) + 1, 1 if ch.islower() else -1)

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


def check_rank(N: int) -> None:
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    if N > MAX_GENERATORS:
        raise ValueError(f"at most {MAX_GENERATORS} generators are supported")


def reduce_text(text: str) -> str:
    out: list[str] = []
    for ch in text:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def concat_text(u: str, v: str) -> str:
    """Product of two reduced words, cancelling across the seam only."""
    i = 0
    m = min(len(u), len(v))
    while i < m and u[-1 - i] == v[i].swapcase():
        i += 1
    if i:
        return u[: len(u) - i] + v[i:]
    return u + v


def invert_text(u: str) -> str:
    return u[::-1].swapcase()


def symbol_rank(ch: str) -> tuple[int, int]:
    # g1 < g1^-1 < g2 < g2^-1 < ...
    return (ord(ch.lower()) - ord("a"), 1 if ch.isupper() else 0)


def word_sort_key(text: str) -> tuple:
    return (len(text), tuple(symbol_rank(ch) for ch in text))


@dataclass(frozen=True, order=False)
class ReducedWord:
    """An element of F_N in freely reduced form."""

    text: str = ""

    def __post_init__(self):
        for ch in self.text:
            if not (ch.isascii() and ch.isalpha()):
                raise ValueError(f"invalid letter {ch!r} in word {self.text!r}")
        if reduce_text(self.text) != self.text:
            raise ValueError(f"word {self.text!r} is not freely reduced")

    @classmethod
    def parse(cls, s: str) -> "ReducedWord":
        """Parse the serialized form, reducing if necessary (``"1"`` is e)."""
        s = s.strip()
        if s in ("", IDENTITY_TEXT):
            return cls("")
        return cls(reduce_text(s))

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "ReducedWord":
        return cls(reduce_text("".join(l.symbol for l in letters)))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_symbol(ch) for ch in self.text)

    @property
    def rank(self) -> int:
        """Smallest N for which this word makes sense."""
        return max((symbol_rank(ch)[0] + 1 for ch in self.text), default=1)

    def __len__(self) -> int:
        return len(self.text)

    def __mul__(self, other: "ReducedWord") -> "ReducedWord":
        return concat(self, other)

    def __lt__(self, other: "ReducedWord") -> bool:
        return word_sort_key(self.text) < word_sort_key(other.text)

    def inverse(self) -> "ReducedWord":
        return inverse(self)

    def __str__(self) -> str:
        return self.text or IDENTITY_TEXT


IDENTITY = ReducedWord("")


def concat(u: ReducedWord, v: ReducedWord) -> ReducedWord:
    return ReducedWord(concat_text(u.text, v.text))


def inverse(w: ReducedWord) -> ReducedWord:
    return ReducedWord(invert_text(w.text))


def generator_symbols(N: int) -> list[str]:
    """All 2N letters in canonical order."""
    check_rank(N)
    out = []
    for ch in _LOWER[:N]:
        out += [ch, ch.upper()]
    return out


def word_count(N: int, n: int) -> int:
    """Number of reduced words of length n in F_N."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        return 1
    return 2 * N * (2 * N - 1) ** (n - 1)


def iter_word_texts(N: int, n: int) -> Iterator[str]:
    """Reduced words of length n in canonical order, as raw text."""
    symbols = generator_symbols(N)
    if n == 0:
        yield ""
        return
    # Depth-first over the Cayley tree; each step skips the inverse of the
    # previous letter so every emitted word is already reduced.
    stack = [(ch,) for ch in reversed(symbols)]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n:
            yield "".join(prefix)
            continue
        back = prefix[-1].swapcase()
        for ch in reversed(symbols):
            if ch != back:
                stack.append(prefix + (ch,))


def enumerate_words(N: int, n: int, limit: int = DEFAULT_WORD_LIMIT) -> list[ReducedWord]:
    """Every reduced word of length ``n`` over ``N`` generators, in canonical order.

    Raises :class:`BudgetExceededError` when the count exceeds ``limit``.
    """
    check_rank(N)
    count = word_count(N, n)
    if count > limit:
        raise BudgetExceededError(f"enumerating words of length {n} in F_{N}", count, limit)
    return [ReducedWord(t) for t in iter_word_texts(N, n)]

