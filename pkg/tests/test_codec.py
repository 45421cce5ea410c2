import itertools

import pytest
from hypothesis import given, strategies as st

from kclab.codec import (
    MalformedCodeError, TruncatedCodeError, bar, length_lex_key, nat_length, nat_to_word,
    pair, read_self_delim, self_delim, self_delim_decode, self_delim_length,
    self_delim_nat, triple, unpair, untriple, word_to_nat,
)

bits = st.text(alphabet="01", max_size=40)


def all_words(max_len):
    for n in range(max_len + 1):
        for t in itertools.product("01", repeat=n):
            yield "".join(t)


def reference_nat_to_word(n):
    # count off words in length-lex order
    for i, w in enumerate(all_words(20)):
        if i == n:
            return w


@pytest.mark.parametrize("n,w", [(0, ""), (1, "0"), (2, "1"), (3, "00"), (5, "10"), (6, "11"),
                                 (7, "000")])
def test_bijection_values(n, w):
    assert nat_to_word(n) == w
    assert word_to_nat(w) == n


def test_bijection_matches_counting():
    for n in range(300):
        assert nat_to_word(n) == reference_nat_to_word(n)


def test_bijection_round_trip_words():
    for w in all_words(12):
        assert nat_to_word(word_to_nat(w)) == w


@given(st.integers(min_value=0, max_value=10**30))
def test_bijection_round_trip_large(n):
    assert word_to_nat(nat_to_word(n)) == n


@given(st.integers(0, 5000), st.integers(0, 5000))
def test_order_isomorphism(n, m):
    assert (n < m) == (length_lex_key(nat_to_word(n)) < length_lex_key(nat_to_word(m)))


def test_nat_length_is_floor_log():
    for n in range(2000):
        assert nat_length(n) == len(nat_to_word(n)) == (n + 1).bit_length() - 1


@pytest.mark.parametrize("x,code", [("01011", "1101001011"), ("", "0"), ("1", "1001")])
def test_self_delim_values(x, code):
    assert self_delim(x) == code
    assert self_delim_decode(code) == (x, "")


def test_bar():
    assert bar("") == "0"
    assert bar("10") == "11010"


def test_self_delim_length_law():
    for x in all_words(12):
        n = len(x)
        assert len(self_delim(x)) == n + 2 * nat_length(n) + 1 == self_delim_length(n)


@given(bits, bits)
def test_self_delim_decode_returns_rest(x, rest):
    assert self_delim_decode(self_delim(x) + rest) == (x, rest)


def test_self_delim_nat():
    for n in range(200):
        x, end = read_self_delim(self_delim_nat(n) + "1")
        assert word_to_nat(x) == n
        assert end == len(self_delim_nat(n))


def test_truncated_errors_name_the_field():
    with pytest.raises(TruncatedCodeError) as e:
        self_delim_decode("111")
    assert "terminator" in str(e.value)
    with pytest.raises(TruncatedCodeError):
        self_delim_decode(self_delim("0101")[:-1])


def test_pair_values():
    assert pair("", "") == 1
    assert pair("1", "0") == 49
    assert unpair(49) == ("1", "0")


@given(bits, bits)
def test_pair_round_trip(x, y):
    assert unpair(pair(x, y)) == (x, y)


@given(bits, bits, bits)
def test_triple_nests_right(x, y, z):
    n = triple(x, y, z)
    assert untriple(n) == (x, y, z)
    assert n == pair(x, nat_to_word(pair(y, z)))


def test_unpair_rejects_non_codes():
    # "111" -> no terminator; 6 <-> "11"
    with pytest.raises((MalformedCodeError, TruncatedCodeError)):
        unpair(word_to_nat("111"))


def test_pair_is_injective_on_small_words():
    seen = {}
    for x in all_words(5):
        for y in all_words(5):
            n = pair(x, y)
            assert n not in seen
            seen[n] = (x, y)
