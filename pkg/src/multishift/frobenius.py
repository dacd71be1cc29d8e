"""Word sets S of lengths m and n whose complement of S* is finite but long.

Take tau, an m-shift de Bruijn sequence of order n - m, and remove from
U = Sigma^m | Sigma^n the length-n words found at modulo-m positions of tau.
The longest words outside S* then have length g(m, l) = m*l - m - l with
l = m * a^(n-m) + n - m, and they are exactly the words
tau x_1 tau x_2 ... x_(m-2) tau with every x_i of length m.

Membership in S* is decided by a prefix dynamic program.  The longest
non-members are found with a finite automaton that tracks the last n - 1
symbols and which of the last n prefixes were representable.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .errors import DomainError, GuardExceeded, PreconditionError
from .generate import generate
from .verify import is_multishift_db
from .words import DbParams, Word, WordLike, all_words, concat, modulo_factors, rank, unrank

MAX_STATES = 1 << 22
MAX_LISTED = 4096
MAX_LANGUAGE = 4096


def frobenius_number(m: int, l: int) -> int:
    """Largest integer not a non-negative combination of m and l."""
    if m < 2 or l < 2:
        raise DomainError("need m, l >= 2")
    if gcd(m, l) != 1:
        raise DomainError(f"gcd({m}, {l}) != 1: no finite Frobenius number")
    return m * l - m - l


@dataclass(frozen=True)
class FrobeniusInstance:
    a: int
    m: int
    n: int
    tau: Word
    excluded: frozenset = field(repr=False)

    @property
    def l(self) -> int:
        return self.m * self.a ** (self.n - self.m) + self.n - self.m

    @property
    def g(self) -> int:
        return frobenius_number(self.m, self.l)

    def excluded_words(self) -> list[Word]:
        """Excluded words in the order they occur in tau."""
        return modulo_factors(self.tau, self.m, self.n)

    def excluded_ranks(self) -> set[int]:
        return {rank(w, self.a) for w in self.excluded}

    def generators(self):
        """Every word of S: all of Sigma^m, then Sigma^n minus the excluded words."""
        yield from all_words(self.m, self.a)
        for w in all_words(self.n, self.a):
            if w not in self.excluded:
                yield w


def build_instance(a: int, m: int, n: int, tau: Optional[WordLike] = None) -> FrobeniusInstance:
    if not 0 < m < n:
        raise PreconditionError("need 0 < m < n")
    if gcd(m, n - m) != 1:
        raise DomainError(f"gcd(m, n - m) = {gcd(m, n - m)} != 1")
    p = DbParams(a, m, n - m)
    if tau is None:
        tau = generate(p)
    tau = Word(tau)
    report = is_multishift_db(tau, p)
    if not report.ok:
        raise DomainError(f"tau is not a {m}-shift de Bruijn sequence of order {n - m}")
    if len(tau) < n:
        # only when a^(n-m) == 1; tau then has no length-n window
        excluded = frozenset()
    else:
        excluded = frozenset(modulo_factors(tau, m, n))
    return FrobeniusInstance(a, m, n, tau, excluded)


def is_representable(w: WordLike, inst: FrobeniusInstance) -> bool:
    """Whether w is a concatenation of words of S (the empty word is)."""
    w = Word(w).check_alphabet(inst.a)
    m, n = inst.m, inst.n
    ok = [False] * (len(w) + 1)
    ok[0] = True
    for i in range(1, len(w) + 1):
        if i >= m and ok[i - m]:
            ok[i] = True
        elif i >= n and ok[i - n] and w[i - n:i] not in inst.excluded:
            ok[i] = True
    return ok[-1]


class RepresentabilityAutomaton:
    """Deterministic automaton accepting exactly S*.

    A state is ``(history, bits)``: ``history`` is the rank of the last
    n - 1 symbols read (left-padded with zeros) and bit j of ``bits`` says
    whether the prefix ending j symbols back is representable.  Only states
    reachable from the start state are built.
    """

    def __init__(self, inst: FrobeniusInstance, max_states: int = MAX_STATES):
        a, m, n = inst.a, inst.m, inst.n
        bound = a ** (n - 1) * 2 ** n
        if bound > max_states:
            raise GuardExceeded(f"automaton may need {bound} states (limit {max_states})")
        self.inst = inst
        hist_mod = a ** (n - 1)
        bit_mask = (1 << n) - 1
        bad = bytearray(a ** n)
        for x in inst.excluded_ranks():
            bad[x] = 1

        def step(state, c):
            hist, bits = state
            window = hist * a + c
            now = bool(bits >> (m - 1) & 1) or (
                bool(bits >> (n - 1) & 1) and not bad[window])
            return window % hist_mod, ((bits << 1) | now) & bit_mask

        self.start = (0, 1)
        index = {self.start: 0}
        states = [self.start]
        delta = []
        todo = deque([self.start])
        while todo:
            s = todo.popleft()
            row = []
            for c in range(a):
                t = step(s, c)
                if t not in index:
                    index[t] = len(states)
                    states.append(t)
                    todo.append(t)
                row.append(index[t])
            delta.append(row)
        # rows are appended in BFS order, which matches state indices
        self.states = states
        self.delta = delta

    def __len__(self):
        return len(self.states)

    def accepting(self, i: int) -> bool:
        return bool(self.states[i][1] & 1)

    def accepts(self, w: WordLike) -> bool:
        s = 0
        for c in Word(w):
            s = self.delta[s][c]
        return self.accepting(s)


@dataclass
class LongestResult:
    finite: bool
    max_length: Optional[int]
    count: Optional[int]
    words: Optional[list]


def longest_nonrepresentable(inst: FrobeniusInstance, max_states: int = MAX_STATES,
                             max_listed: int = MAX_LISTED) -> LongestResult:
    """Longest words outside S*, by longest paths in the automaton.

    ``max_length`` is -1 when every word is representable.  ``finite`` is
    False when a cycle can still reach a rejecting state; lengths are then
    unbounded and reported as None.
    """
    aut = RepresentabilityAutomaton(inst, max_states=max_states)
    N = len(aut)
    a = inst.a
    preds = [[] for _ in range(N)]
    for s, row in enumerate(aut.delta):
        for t in row:
            preds[t].append(s)
    # states from which a rejecting state is reachable
    live = [False] * N
    todo = deque(i for i in range(N) if not aut.accepting(i))
    for i in todo:
        live[i] = True
    while todo:
        t = todo.popleft()
        for s in preds[t]:
            if not live[s]:
                live[s] = True
                todo.append(s)
    if not live[0]:
        return LongestResult(True, -1, 0, [])

    # Kahn's algorithm on the live subgraph, edges s -> t
    outdeg = [0] * N
    for s in range(N):
        if live[s]:
            outdeg[s] = sum(1 for t in aut.delta[s] if live[t])
    order = []
    todo = deque(s for s in range(N) if live[s] and outdeg[s] == 0)
    while todo:
        t = todo.popleft()
        order.append(t)
        for s in preds[t]:
            if live[s]:
                outdeg[s] -= 1
                if outdeg[s] == 0:
                    todo.append(s)
    if len(order) != sum(live):
        return LongestResult(False, None, None, None)

    # order lists sinks first, so successors are settled before predecessors
    best = [-1] * N
    ways = [0] * N
    for s in order:
        if not aut.accepting(s):
            best[s], ways[s] = 0, 1
        for t in aut.delta[s]:
            if live[t] and best[t] + 1 > best[s]:
                best[s], ways[s] = best[t] + 1, 0
        if best[s] > 0:
            # each symbol is a distinct word even when two symbols share a target
            ways[s] = sum(ways[t] for t in aut.delta[s] if live[t] and best[t] + 1 == best[s])
    max_length, count = best[0], ways[0]
    words = None
    if count <= max_listed:
        words = []
        path = []

        def walk(s):
            if best[s] == 0:
                words.append(Word(path))
                return
            for c in range(a):
                t = aut.delta[s][c]
                if live[t] and best[t] == best[s] - 1:
                    path.append(c)
                    walk(t)
                    path.pop()

        walk(0)
        words.sort()
    return LongestResult(True, max_length, count, words)


def theorem_language(inst: FrobeniusInstance, max_words: int = MAX_LANGUAGE) -> list[Word]:
    """All words tau x_1 tau ... x_(m-2) tau with |x_i| = m, sorted."""
    a, m = inst.a, inst.m
    if m < 2:
        raise PreconditionError("language is defined for m >= 2 only")
    size = a ** (m * (m - 2))
    if size > max_words:
        raise GuardExceeded(f"{size} words exceeds limit {max_words}")
    fillers = list(all_words(m, a))
    out = []
    for xs in itertools.product(fillers, repeat=m - 2):
        parts = [inst.tau]
        for x in xs:
            parts += [x, inst.tau]
        out.append(concat(parts))
    return sorted(out)
