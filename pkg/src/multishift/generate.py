"""Constructions of m-shift de Bruijn sequences.

Every public generator verifies its output before returning it; a failed
self-check raises :class:`ConstructionError`.
"""

from __future__ import annotations

import enum
from typing import Optional, Sequence

from .errors import ConstructionError, DomainError, GuardExceeded, PreconditionError
from .verify import is_multishift_db
from .words import DbParams, Word, WordLike, concat, factor, unrank, zeros

MAX_SYMBOLS = 10 ** 8


class Algorithm(enum.Enum):
    AUTO = "auto"
    BLOCK = "block"
    MULTIPLE = "multiple"
    INTERLEAVE = "interleave"
    GREEDY = "greedy"


class Preference(enum.Enum):
    LARGEST = "largest"
    SMALLEST = "smallest"


def _guard(p: DbParams, max_symbols: int):
    if p.length > max_symbols:
        raise GuardExceeded(f"sequence would have {p.length} symbols (limit {max_symbols})")


def _checked(w: Word, p: DbParams, what: str) -> Word:
    report = is_multishift_db(w, p)
    if not report.ok:
        raise ConstructionError(
            f"{what} produced an invalid sequence for {p}: "
            f"length_ok={report.length_ok} missing={report.missing_count} "
            f"duplicated={report.duplicated_count}"
        )
    return w


def gen_block(p: DbParams, perm: Optional[Sequence[int]] = None,
              max_symbols: int = MAX_SYMBOLS) -> Word:
    """u_1 0^(m-n) u_2 0^(m-n) ... u_l for a permutation u of all length-n words.

    ``perm`` lists word ranks; the identity (lexicographic order) by default.
    """
    if p.n > p.m:
        raise PreconditionError("block construction needs n <= m")
    _guard(p, max_symbols)
    size = p.a ** p.n
    if perm is None:
        perm = range(size)
    perm = list(perm)
    if sorted(perm) != list(range(size)):
        raise DomainError(f"perm is not a permutation of range({size})")
    gap = zeros(p.m - p.n)
    parts = []
    for i, x in enumerate(perm):
        if i:
            parts.append(gap)
        parts.append(unrank(x, p.n, p.a))
    return _checked(concat(parts), p, "gen_block")


def gen_ordinary(a: int, n: int, pref: Preference = Preference.LARGEST,
                 max_symbols: int = MAX_SYMBOLS) -> Word:
    """Ordinary de Bruijn sequence by the prefer-largest rule.

    LARGEST starts from 0^n and always appends the largest letter that
    creates a new window.  SMALLEST is its mirror image: it starts from
    (a-1)^n and appends the smallest such letter.
    """
    p = DbParams(a, 1, n)
    _guard(p, max_symbols)
    if a == 1:
        return zeros(n)
    size = a ** n
    mod = a ** (n - 1)
    seen = bytearray(size)
    if pref is Preference.LARGEST:
        out = [0] * n
        letters = range(a - 1, -1, -1)
    else:
        out = [a - 1] * n
        letters = range(a)
    window = 0
    for c in out:
        window = window * a + c
    seen[window] = 1
    while True:
        base = (window % mod) * a
        for c in letters:
            if not seen[base + c]:
                window = base + c
                seen[window] = 1
                out.append(c)
                break
        else:
            break
    return _checked(Word(out), p, "gen_ordinary")


def gen_multiple(a: int, m: int, k: int, max_symbols: int = MAX_SYMBOLS) -> Word:
    """m-shift sequence of order k*m, lifted from an ordinary one over a^m letters."""
    if k < 1:
        raise DomainError("k must be positive")
    p = DbParams(a, m, k * m)
    _guard(p, max_symbols)
    blocks = [unrank(x, m, a) for x in range(a ** m)]
    big = gen_ordinary(a ** m, k, Preference.LARGEST, max_symbols=max_symbols)
    return _checked(concat(blocks[x] for x in big), p, "gen_multiple")


def gen_greedy(p: DbParams, pref: Preference = Preference.LARGEST,
               max_symbols: int = MAX_SYMBOLS) -> Word:
    """Greedy extension by whole length-m words.

    Starting from 0^n, append the lexicographically largest word of length m
    whose newly completed modulo-m window has not been seen yet, until no
    such word exists.  SMALLEST mirrors the rule and starts from (a-1)^n.
    """
    _guard(p, max_symbols)
    a, m, n = p.a, p.m, p.n
    if a == 1:
        return zeros(n)
    t = min(m, n)            # chunk symbols that land in the new window
    free = m - t             # chunk symbols before the window (m > n only)
    carry = a ** (n - t)     # states: last n - t symbols of the sequence
    span = a ** t
    seen = bytearray(a ** n)
    largest = pref is Preference.LARGEST
    fill = a - 1 if largest else 0
    start = 0 if largest else a - 1
    out = [start] * n
    first = 0
    for c in out:
        first = first * a + c
    seen[first] = 1
    # next candidate per state; everything already passed over is seen
    pointer = [span - 1 if largest else 0] * carry
    step = -1 if largest else 1
    state = first % carry
    prefix = [fill] * free
    while True:
        y = pointer[state]
        base = state * span
        while 0 <= y < span and seen[base + y]:
            y += step
        if not 0 <= y < span:
            pointer[state] = y
            break
        pointer[state] = y + step
        window = base + y
        seen[window] = 1
        out.extend(prefix)
        out.extend(unrank(y, t, a))
        state = window % carry
    return _checked(Word(out), p, "gen_greedy")


def gen_interleave(p: DbParams, max_symbols: int = MAX_SYMBOLS) -> Word:
    """Interleave blocks of two simpler sequences whose orders are multiples of their shifts.

    With n = k*m + r (0 < r < m), w1 = tau(r, (k+1)r) 0^r supplies the
    u-blocks of length r and w2 = tau(m-r, k(m-r)) 0^(m-r) the v-blocks of
    length m-r.  The last v-block is the trailing 0^(m-r) of w2.
    """
    a, m, n = p.a, p.m, p.n
    if a < 2:
        raise PreconditionError("interleave needs a >= 2")
    if not 0 < m < n or n % m == 0:
        raise PreconditionError("interleave needs m < n and n mod m != 0")
    _guard(p, max_symbols)
    k, r = p.k, p.r
    m1, n1 = r, (k + 1) * r
    m2, n2 = m - r, k * (m - r)
    w1, w2 = interleave_bases(p, max_symbols=max_symbols)
    N1, N2 = a ** n1, a ** n2
    u = [None] + [factor(w1, n1 + (i - 1) * m1 + 1, n1 + i * m1) for i in range(1, N1 + 1)]
    v = [None] + [factor(w2, n2 + (i - 1) * m2 + 1, n2 + i * m2) for i in range(1, N2 + 1)]

    def u_(i):
        return u[1 + i % (N1 - 1)]

    def v_(i):
        return v[1 + (i - 1) % N2]

    sep = zeros(m1)
    total = (N1 - 1) * N2
    parts = [zeros(n)]
    for i in range(1, N2):
        parts += [v[i], sep]
    parts += [v[N2], u_(total)]
    for i in range(1, total):
        parts += [v_(i), u_(i)]
    return _checked(concat(parts), p, "gen_interleave")


def interleave_bases(p: DbParams, max_symbols: int = MAX_SYMBOLS) -> tuple[Word, Word]:
    """The two padded base sequences (w1, w2) used by :func:`gen_interleave`."""
    k, r, m = p.k, p.r, p.m
    w1 = gen_multiple(p.a, r, k + 1, max_symbols=max_symbols) + zeros(r)
    w2 = gen_multiple(p.a, m - r, k, max_symbols=max_symbols) + zeros(m - r)
    return w1, w2


def choose_algorithm(p: DbParams) -> Algorithm:
    if p.n <= p.m:
        return Algorithm.BLOCK
    if p.n % p.m == 0:
        return Algorithm.MULTIPLE
    return Algorithm.GREEDY


def generate(p: DbParams, alg: Algorithm = Algorithm.AUTO,
             pref: Preference = Preference.LARGEST,
             max_symbols: int = MAX_SYMBOLS) -> Word:
    alg = Algorithm(alg)
    if alg is Algorithm.AUTO:
        alg = choose_algorithm(p)
    if alg is Algorithm.BLOCK:
        return gen_block(p, max_symbols=max_symbols)
    if alg is Algorithm.MULTIPLE:
        if p.n % p.m:
            raise PreconditionError("multiple construction needs m | n")
        return gen_multiple(p.a, p.m, p.k, max_symbols=max_symbols)
    if alg is Algorithm.INTERLEAVE:
        return gen_interleave(p, max_symbols=max_symbols)
    return gen_greedy(p, Preference(pref), max_symbols=max_symbols)


def rotate_zero_prefix(w: WordLike, p: DbParams) -> Word:
    """Move the leading 0^n of a sequence to the end of its circular form.

    For n > m the sequence is a circular word of length m*a^n followed by a
    copy of its first n - m symbols; the rotation is taken on the circle and
    the copy re-appended.  For n <= m the word is rotated as it stands.
    """
    w = Word(w)
    if p.n <= p.m:
        return w[p.n:] + w[:p.n]
    body = w[:p.m * p.a ** p.n]
    body = body[p.n:] + body[:p.n]
    return body + body[:p.n - p.m]
