import itertools
import random

import pytest

from multishift.errors import DomainError, GuardExceeded, PreconditionError
from multishift.generate import (Algorithm, Preference, choose_algorithm, gen_block,
                                 gen_greedy, gen_interleave, gen_multiple, gen_ordinary,
                                 generate, interleave_bases, rotate_zero_prefix)
from multishift.verify import check_wrap, is_multishift_db
from multishift.words import DbParams, Word, factor

from golden import (GREEDY_2_5, INTERLEAVE_2_5, INTERLEAVE_W1, INTERLEAVE_W2,
                    ORDINARY_2)


def test_block_examples():
    assert str(gen_block(DbParams(2, 2, 1))) == "001"
    assert str(gen_block(DbParams(2, 2, 2))) == "00011011"
    assert str(gen_block(DbParams(2, 3, 1))) == "0001"


def test_block_custom_permutation():
    w = gen_block(DbParams(2, 3, 2), perm=[3, 1, 0, 2])
    assert str(w) == "11" + "0" + "01" + "0" + "00" + "0" + "10"


def test_block_rejects():
    with pytest.raises(PreconditionError):
        gen_block(DbParams(2, 1, 2))
    with pytest.raises(DomainError):
        gen_block(DbParams(2, 2, 1), perm=[0, 0])


@pytest.mark.parametrize("a, n, expected", [
    (2, 2, "00110"),
    (2, 3, "0001110100"),
    (2, 1, "01"),
])
def test_ordinary(a, n, expected):
    assert str(gen_ordinary(a, n)) == expected


def test_ordinary_smallest_is_mirror():
    for a, n in [(2, 3), (3, 2), (4, 2)]:
        big = gen_ordinary(a, n)
        small = gen_ordinary(a, n, Preference.SMALLEST)
        assert small == Word(a - 1 - c for c in big)


def test_multiple():
    assert str(gen_multiple(2, 1, 2)) == "00110"
    assert str(gen_multiple(2, 1, 3)) == "0001110100"
    w = gen_multiple(2, 2, 2)
    assert len(w) == 34 and is_multishift_db(w, DbParams(2, 2, 4)).ok
    assert w[:4] == Word("0000")


def test_greedy_worked_example():
    assert len(GREEDY_2_5) == 67
    assert str(gen_greedy(DbParams(2, 2, 5))) == GREEDY_2_5


def test_greedy_first_steps():
    # 00000 -> append 11, 11, 11, 10, 11
    w = str(gen_greedy(DbParams(2, 2, 5)))
    assert [w[5 + 2 * i:7 + 2 * i] for i in range(5)] == ["11", "11", "11", "10", "11"]


def test_greedy_small():
    assert str(gen_greedy(DbParams(2, 1, 2))) == ORDINARY_2
    assert str(gen_greedy(DbParams(1, 3, 2))) == "00"
    assert str(gen_greedy(DbParams(1, 1, 4))) == "0000"


def test_greedy_matches_ordinary_for_shift_one():
    for a in (2, 3, 4):
        for n in range(1, 7):
            if a ** n > 5000:
                continue
            for pref in Preference:
                assert gen_greedy(DbParams(a, 1, n), pref) == gen_ordinary(a, n, pref)


def brute_greedy(p):
    """Literal transcription of the greedy rule, with string windows."""
    a, m, n = p.a, p.m, p.n
    w = [0] * n
    seen = {tuple(w)}
    chunks = sorted(itertools.product(range(a), repeat=m), reverse=True)
    while True:
        for x in chunks:
            cand = w + list(x)
            tail = tuple(cand[-n:])
            if tail not in seen:
                seen.add(tail)
                w = cand
                break
        else:
            return Word(w)


@pytest.mark.parametrize("a, m, n", [
    (2, 2, 3), (2, 2, 5), (2, 3, 4), (2, 3, 5), (3, 2, 3), (2, 3, 2), (3, 4, 2), (2, 1, 5),
])
def test_greedy_against_literal_rule(a, m, n):
    p = DbParams(a, m, n)
    assert gen_greedy(p) == brute_greedy(p)


def test_interleave_worked_example():
    p = DbParams(2, 2, 5)
    w1, w2 = interleave_bases(p)
    assert (str(w1), str(w2)) == (INTERLEAVE_W1, INTERLEAVE_W2)
    u = [factor(w1, 3 + i, 3 + i) for i in range(1, 9)]
    v = [factor(w2, 2 + i, 2 + i) for i in range(1, 5)]
    assert "".join(map(str, u)) == "11101000"
    assert "".join(map(str, v)) == "1100"
    w = gen_interleave(p)
    assert str(w) == INTERLEAVE_2_5 and len(w) == 67
    assert is_multishift_db(w, p).ok


def test_interleave_other():
    w = gen_interleave(DbParams(2, 3, 4))
    assert len(w) == 49


@pytest.mark.parametrize("a", [2, 3])
def test_interleave_sweep(a):
    for m in range(2, 6):
        for n in range(m + 1, 9):
            p = DbParams(a, m, n)
            if n % m == 0 or p.length > 200_000:
                continue
            w = gen_interleave(p)
            assert check_wrap(w, p)


def test_interleave_preconditions():
    with pytest.raises(PreconditionError):
        gen_interleave(DbParams(2, 2, 4))
    with pytest.raises(PreconditionError):
        gen_interleave(DbParams(2, 3, 2))
    with pytest.raises(PreconditionError):
        gen_interleave(DbParams(1, 2, 3))


def test_interleave_and_greedy_both_valid_but_differ():
    p = DbParams(2, 2, 5)
    assert gen_interleave(p) != gen_greedy(p)


def test_dispatch():
    assert choose_algorithm(DbParams(2, 4, 2)) is Algorithm.BLOCK
    assert choose_algorithm(DbParams(2, 2, 4)) is Algorithm.MULTIPLE
    assert choose_algorithm(DbParams(2, 2, 5)) is Algorithm.GREEDY
    assert len(generate(DbParams(2, 4, 2))) == 14
    assert generate(DbParams(2, 2, 5)) == gen_greedy(DbParams(2, 2, 5))
    assert generate(DbParams(2, 2, 4)) == gen_multiple(2, 2, 2)
    with pytest.raises(PreconditionError):
        generate(DbParams(2, 2, 5), Algorithm.MULTIPLE)
    with pytest.raises(PreconditionError):
        generate(DbParams(2, 2, 5), Algorithm.BLOCK)


def test_guard():
    with pytest.raises(GuardExceeded):
        generate(DbParams(2, 1, 30))
    with pytest.raises(GuardExceeded):
        gen_greedy(DbParams(2, 2, 5), max_symbols=66)


def test_deterministic():
    p = DbParams(3, 2, 5)
    assert gen_greedy(p) == gen_greedy(p)


def test_randomized_sweep_all_algorithms():
    rng = random.Random(2024)
    for _ in range(60):
        p = DbParams(rng.randint(1, 4), rng.randint(1, 5), rng.randint(1, 6))
        if p.length > 50_000:
            continue
        for alg in Algorithm:
            for pref in Preference:
                try:
                    w = generate(p, alg, pref)
                except PreconditionError:
                    continue
                assert len(w) == p.length
                assert is_multishift_db(w, p).ok
                if p.n > p.m:
                    assert check_wrap(w, p)


def test_rotation_holds_when_shift_divides_order():
    from multishift.counting import enumerate_all
    for a, m, n in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 1), (2, 3, 1)]:
        p = DbParams(a, m, n)
        _, words = enumerate_all(p, collect=True)
        assert rotate_zero_prefix(gen_greedy(p), p) == max(words)


def test_rotation_breaks_alignment_when_shift_does_not_divide_order():
    p = DbParams(2, 2, 3)
    rotated = rotate_zero_prefix(gen_greedy(p), p)
    r = is_multishift_db(rotated, p)
    assert not r.ok and r.duplicated_count > 0
