"""Deciding whether a word is an m-shift de Bruijn sequence."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GuardExceeded, PreconditionError
from .words import DbParams, Word, WordLike, factor, render, unrank, window_ranks

MAX_TALLY = 2 ** 28
SAMPLE_LIMIT = 16


@dataclass
class VerifyReport:
    ok: bool
    length_ok: bool
    missing_count: int
    duplicated_count: int
    missing: list = field(default_factory=list)
    duplicated: list = field(default_factory=list)
    a: int = 2

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "length_ok": self.length_ok,
            "missing_count": self.missing_count,
            "duplicated_count": self.duplicated_count,
            "missing_sample": [render(w, self.a) for w in self.missing],
            "duplicated_sample": [[render(w, self.a), c] for w, c in self.duplicated],
        }


def tally(w: WordLike, p: DbParams) -> np.ndarray:
    """Occurrence count of every length-n word at modulo-m positions, by rank."""
    w = Word(w).check_alphabet(p.a)
    size = p.a ** p.n
    if size > MAX_TALLY:
        raise GuardExceeded(f"a^n = {size} exceeds tally guard {MAX_TALLY}")
    if len(w) < p.n:
        return np.zeros(size, dtype=np.int64)
    ranks = np.fromiter(window_ranks(w, p.a, p.m, p.n), dtype=np.int64)
    return np.bincount(ranks, minlength=size)


def is_multishift_db(w: WordLike, p: DbParams) -> VerifyReport:
    w = Word(w)
    counts = tally(w, p)
    missing_idx = np.flatnonzero(counts == 0)
    dup_idx = np.flatnonzero(counts > 1)
    length_ok = len(w) == p.length
    return VerifyReport(
        ok=length_ok and missing_idx.size == 0 and dup_idx.size == 0,
        length_ok=length_ok,
        missing_count=int(missing_idx.size),
        duplicated_count=int(dup_idx.size),
        missing=[unrank(int(x), p.n, p.a) for x in missing_idx[:SAMPLE_LIMIT]],
        duplicated=[(unrank(int(x), p.n, p.a), int(counts[x])) for x in dup_idx[:SAMPLE_LIMIT]],
        a=p.a,
    )


def check_wrap(w: WordLike, p: DbParams) -> bool:
    """True when the length-(n-m) suffix equals the length-(n-m) prefix."""
    w = Word(w).check_alphabet(p.a)
    if p.n <= p.m:
        raise PreconditionError("wrap-around property needs n > m")
    if len(w) != p.length:
        raise PreconditionError(f"expected length {p.length}, got {len(w)}")
    d = p.n - p.m
    return factor(w, len(w) - d + 1, len(w)) == factor(w, 1, d)
