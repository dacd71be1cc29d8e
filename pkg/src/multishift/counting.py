"""How many m-shift de Bruijn sequences of order n exist.

Closed forms, with a = alphabet size:

* n <= m:  (a^n)! * a^((m-n)(a^n - 1))
* m <= n:  ((a^m)!)^(a^(n-m))

Large instances are reported through log10 only; the exact integer is
computed when its estimated size fits the digit guard.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import EnumerationOverflow, GuardExceeded, PreconditionError
from .words import DbParams, Word

MAX_DIGITS = 10 ** 6
MAX_ENUM_LENGTH = 40
ENUM_CAP = 10 ** 7
SAMPLE_CAP = 1024
_SUMMATION_LIMIT = 10 ** 6


class Branch(enum.Enum):
    ORDER_AT_MOST_SHIFT = "order_at_most_shift"
    SHIFT_AT_MOST_ORDER = "shift_at_most_order"


@dataclass
class CountResult:
    branch: Branch
    log10: float
    exact: Optional[int] = None

    @property
    def digits(self) -> int:
        if self.exact is not None:
            return decimal_digits(self.exact)
        return math.floor(self.log10) + 1

    def to_dict(self) -> dict:
        out = {"branch": self.branch.value, "log10": self.log10, "digits": self.digits,
               "exact_available": self.exact is not None}
        if self.exact is not None:
            out["exact"] = big_str(self.exact)
        return out


def big_str(x: int) -> str:
    """Decimal string of x, lifting the interpreter's int-to-str digit limit if set."""
    get = getattr(sys, "get_int_max_str_digits", None)
    if get is None or get() == 0:
        return str(x)
    old = get()
    sys.set_int_max_str_digits(0)
    try:
        return str(x)
    finally:
        sys.set_int_max_str_digits(old)


def log10_factorial(x: int) -> float:
    if x <= _SUMMATION_LIMIT:
        return math.fsum(math.log10(i) for i in range(2, x + 1))
    return math.lgamma(x + 1) / math.log(10)


def log10_int(x: int) -> float:
    """log10 of a positive integer of any size."""
    bits = x.bit_length()
    if bits <= 1000:
        return math.log10(x)
    drop = bits - 60
    return math.log10(x >> drop) + drop * math.log10(2)


def decimal_digits(x: int) -> int:
    if x == 0:
        return 1
    d = int(log10_int(x)) + 1
    if 10 ** (d - 1) > x:
        d -= 1
    elif 10 ** d <= x:
        d += 1
    return d


def count_log10(p: DbParams) -> float:
    a, m, n = p.a, p.m, p.n
    if n <= m:
        return log10_factorial(a ** n) + (m - n) * (a ** n - 1) * math.log10(a)
    return a ** (n - m) * log10_factorial(a ** m)


def _order_at_most_shift(a, m, n) -> int:
    return math.factorial(a ** n) * a ** ((m - n) * (a ** n - 1))


def _shift_at_most_order(a, m, n) -> int:
    return math.factorial(a ** m) ** (a ** (n - m))


def count_formula(p: DbParams, max_digits: int = MAX_DIGITS) -> CountResult:
    a, m, n = p.a, p.m, p.n
    branch = Branch.ORDER_AT_MOST_SHIFT if n <= m else Branch.SHIFT_AT_MOST_ORDER
    log10 = count_log10(p)
    if log10 + 1 > max_digits:
        return CountResult(branch, log10)
    if n <= m:
        exact = _order_at_most_shift(a, m, n)
        if n == m:
            other = _shift_at_most_order(a, m, n)
            assert exact == other, "closed forms disagree at n == m"
    else:
        exact = _shift_at_most_order(a, m, n)
    return CountResult(branch, log10, exact)


def count_recursion(p: DbParams, max_digits: int = MAX_DIGITS) -> int:
    """Unwind #(m,n) = ((a^m)!)^(a^(n-2m)(a^m - 1)) #(m, n-m) down to m <= n < 2m."""
    a, m, n = p.a, p.m, p.n
    if m > n:
        raise PreconditionError("recursion needs m <= n")
    if count_log10(p) + 1 > max_digits:
        raise GuardExceeded(f"count has more than {max_digits} digits")
    block = math.factorial(a ** m)
    exponent = 0
    while n >= 2 * m:
        exponent += a ** (n - 2 * m) * (a ** m - 1)
        n -= m
    # base case m <= n < 2m
    base = block ** (a ** (n - m))
    return block ** exponent * base


def enumerate_all(p: DbParams, cap: int = ENUM_CAP, collect: bool = False,
                  max_length: int = MAX_ENUM_LENGTH):
    """Count m-shift de Bruijn sequences by depth-first search.

    Words grow from a first window of length n by m symbols at a time and a
    branch is cut as soon as a modulo-m window repeats.  Returns
    ``(count, words)``; ``words`` is the full list when ``collect`` is set
    and the count is at most 1024, otherwise None.
    """
    a, m, n = p.a, p.m, p.n
    if p.length > max_length:
        raise GuardExceeded(f"sequence length {p.length} exceeds enumeration limit {max_length}")
    total = p.windows
    mod = a ** n
    seen = bytearray(mod)
    word: list[int] = []
    found: list[Word] = []
    count = 0

    chunks = []
    for x in range(a ** m):
        digits = []
        for _ in range(m):
            x, d = divmod(x, a)
            digits.append(d)
        chunks.append(digits[::-1])

    def window_of(chunk, prev):
        if m >= n:
            w = 0
            for c in chunk[m - n:]:
                w = w * a + c
            return w
        w = prev
        for c in chunk:
            w = w * a + c
        return w % mod

    def dfs(prev, placed):
        nonlocal count
        if placed == total:
            count += 1
            if count > cap:
                raise EnumerationOverflow(f"more than {cap} sequences")
            if collect:
                if count <= SAMPLE_CAP:
                    found.append(Word(word))
            return
        for chunk in chunks:
            w = window_of(chunk, prev)
            if seen[w]:
                continue
            seen[w] = 1
            word.extend(chunk)
            dfs(w, placed + 1)
            del word[-m:]
            seen[w] = 0

    for first in range(mod):
        digits = []
        x = first
        for _ in range(n):
            x, d = divmod(x, a)
            digits.append(d)
        word[:] = digits[::-1]
        seen[first] = 1
        dfs(first, 1)
        seen[first] = 0

    words = found if collect and count <= SAMPLE_CAP else None
    return count, words
