"""Words over the alphabet {0, ..., a-1}.

Positions in the public API are 1-based and inclusive, so ``factor(w, i, j)``
is the subword ``w_i ... w_j`` and ``factor(w, i, i - 1)`` is empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import DomainError, PreconditionError

WordLike = Union["Word", str, Sequence[int]]


class Word(tuple):
    """Immutable sequence of integer symbols.

    ``Word("00110")`` parses digit strings, ``Word("0,11,3")`` parses
    comma-separated integers and ``Word([0, 1, 1])`` takes symbols directly.
    """

    __slots__ = ()

    def __new__(cls, symbols: WordLike = ()):
        if isinstance(symbols, Word):
            return symbols
        if isinstance(symbols, str):
            return super().__new__(cls, _parse(symbols))
        values = tuple(int(s) for s in symbols)
        if any(s < 0 for s in values):
            raise DomainError("symbols must be non-negative")
        return super().__new__(cls, values)

    def __add__(self, other):
        return _wrap(tuple.__add__(self, Word(other)))

    def __mul__(self, k):
        return _wrap(tuple.__mul__(self, k))

    __rmul__ = __mul__

    def __getitem__(self, item):
        result = tuple.__getitem__(self, item)
        if isinstance(item, slice):
            return _wrap(result)
        return result

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Word({render(self)!r})"

    def check_alphabet(self, a: int) -> "Word":
        for s in self:
            if s >= a:
                raise DomainError(f"symbol {s} not in alphabet of size {a}")
        return self


def _wrap(values: tuple) -> Word:
    # values already validated
    return tuple.__new__(Word, values)


def _parse(text: str) -> tuple:
    text = text.strip()
    if not text or text == "ε":
        return ()
    try:
        if "," in text:
            return tuple(int(part) for part in text.split(","))
        return tuple(int(ch) for ch in text if not ch.isspace())
    except ValueError:
        raise DomainError(f"cannot parse word {text!r}") from None


def render(w: Sequence[int], a: int | None = None) -> str:
    """Canonical text form: digits when a <= 10, comma-separated otherwise.

    Without ``a`` the largest symbol decides.
    """
    if a is None:
        a = max(w, default=0) + 1
    if a <= 10:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def zeros(length: int) -> Word:
    return Word((0,) * length)


@dataclass(frozen=True)
class DbParams:
    """Alphabet size ``a``, shift ``m`` and order ``n``."""

    a: int
    m: int
    n: int

    def __post_init__(self):
        for name in ("a", "m", "n"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise DomainError(f"{name} must be a positive integer, got {value!r}")

    @property
    def k(self) -> int:
        return self.n // self.m

    @property
    def r(self) -> int:
        return self.n % self.m

    @property
    def length(self) -> int:
        """Length of every m-shift de Bruijn sequence of order n."""
        return self.m * self.a ** self.n + self.n - self.m

    @property
    def windows(self) -> int:
        return self.a ** self.n


def factor(w: WordLike, i: int, j: int) -> Word:
    """Subword at 1-based inclusive positions i..j."""
    w = Word(w)
    if not (1 <= i <= j + 1 <= len(w) + 1):
        raise IndexError(f"factor({i}, {j}) out of range for word of length {len(w)}")
    return w[i - 1:j]


def modulo_factors(w: WordLike, m: int, n: int) -> list[Word]:
    """Length-n factors starting at positions i*m + 1, in order of i."""
    w = Word(w)
    if m < 1 or n < 1:
        raise DomainError("m and n must be positive")
    if len(w) < n:
        raise PreconditionError(f"word of length {len(w)} has no factor of length {n}")
    return [w[s:s + n] for s in range(0, len(w) - n + 1, m)]


def rank(w: WordLike, a: int) -> int:
    """Radix-a value of w, first symbol most significant."""
    x = 0
    for s in Word(w):
        if s >= a:
            raise DomainError(f"symbol {s} not in alphabet of size {a}")
        x = x * a + s
    return x


def unrank(x: int, length: int, a: int) -> Word:
    if a < 1 or length < 0:
        raise DomainError("invalid alphabet size or length")
    if not 0 <= x < a ** length:
        raise DomainError(f"{x} is not the rank of a word of length {length} over {a} letters")
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        x, out[pos] = divmod(x, a)
    return _wrap(tuple(out))


def all_words(length: int, a: int) -> Iterator[Word]:
    """Every word of the given length, in lexicographic order."""
    for x in range(a ** length):
        yield unrank(x, length, a)


def window_ranks(w: Sequence[int], a: int, m: int, n: int) -> Iterator[int]:
    """Ranks of the modulo-m factors of length n, computed incrementally."""
    L = len(w)
    if L < n:
        return
    if m >= n:
        for s in range(0, L - n + 1, m):
            x = 0
            for c in w[s:s + n]:
                x = x * a + c
            yield x
        return
    mod = a ** n
    x = 0
    for c in w[:n]:
        x = x * a + c
    yield x
    for s in range(n, L - m + 1, m):
        for c in w[s:s + m]:
            x = x * a + c
        x %= mod
        yield x


def concat(parts: Iterable[WordLike]) -> Word:
    out: list[int] = []
    for p in parts:
        out.extend(Word(p))
    return Word(out)
