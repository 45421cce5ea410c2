import json
import random
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from kclab import machines
from kclab.codec import nat_length, self_delim, self_delim_nat
from kclab.kolmogorov import (
    BudgetError, Characteristic, DecoderSuite, ResidualRank, a_n_census, base_decoders,
    bits_to_hex, compressible_count, default_suite, estimate_C, find_incompressible,
    hex_to_bits, install_residual_decoder, literal_ceiling, lz78_program,
    residual_constant, shared_suite, substring_bound_check, substring_overhead_bound,
    to_binary,
)
from kclab.zoo import LengthLex, nth_in_residual, oracle_from_dfa

FIXTURES = Path(__file__).parent / "fixtures"
bits = st.text("01", max_size=64)


def rand_word(rng, n):
    return "".join(rng.choice("01") for _ in range(n))


def test_tags_are_prefix_free_and_versioned():
    s = default_suite()
    assert s.version == "kc1"
    assert s.tags[:6] == ("0", "1000", "1001", "10100", "10101", "10110")
    for a in s.tags:
        for b in s.tags:
            assert a == b or not b.startswith(a)
    ext = s.with_decoder(Characteristic(machines.odd_ones_dfa(), "p"))
    assert ext.version == "kc1+characteristic[p]"
    assert ext.tags[-1] == "10111"


def test_empty_word():
    e = estimate_C("")
    assert e.value == len(shared_suite().literal_tag) + 1 == 2


def test_run_length_beats_literal():
    e = estimate_C("0" * 256)
    assert e.value < 50 and e.decoder == "run-length"
    assert shared_suite().replay(e) == "0" * 256


def test_witness_replay_random():
    rng = random.Random(2024)
    s = shared_suite()
    for _ in range(10_000):
        x = rand_word(rng, rng.randrange(65))
        e = s.estimate(x)
        assert s.replay(e) == x
        assert e.value == len(e.tag) + len(e.program)


@given(bits)
def test_literal_ceiling(x):
    assert estimate_C(x).value <= literal_ceiling(len(x))
    assert literal_ceiling(len(x)) == len(self_delim(x)) + 1


@given(bits)
def test_conditional_copy_bound(x):
    s = shared_suite()
    tag = s.tag_of("literal-given-length")
    assert s.C(x, side=len(x)) <= len(x) + len(tag)


@given(bits)
def test_conditional_dominance(x):
    s = shared_suite()
    # the unconditional witness is still valid given the length, except
    # for decoders that read the side; literal-given-length covers those
    assert s.C(x, side=len(x)) <= s.C(x) + len(s.tag_of("literal-given-length"))


def test_counting_floor():
    for n in range(15):
        assert compressible_count(n) < 2 ** n


def test_extension_is_monotone():
    rng = random.Random(5)
    base = shared_suite()
    ext = install_residual_decoder(base, machines.odd_ones_dfa(), label="p")
    ext = ext.with_decoder(Characteristic(machines.ends_with_1_dfa(), "e"))
    for _ in range(300):
        x = rand_word(rng, rng.randrange(40))
        assert ext.C(x) <= base.C(x)
        assert ext.C(x, side=len(x)) <= base.C(x, side=len(x))


def test_residual_decoder_examples():
    d = ResidualRank(machines.odd_ones_dfa(), "parity")
    assert d.nth(0, 1) == "1"
    assert d.nth(0, 2) == "01"


def test_residual_rank_agrees_with_scan():
    a = machines.odd_ones_dfa()
    L = oracle_from_dfa(a, "odd-ones")
    d = ResidualRank(a, "parity")
    for x in ("", "1", "0110"):
        q = a.state_after(x)
        for n in range(1, 40):
            y = nth_in_residual(L, x, n)
            assert d.nth(q, n) == y
            assert d.rank(q, y) == n


def test_residual_program_cost():
    a = machines.odd_ones_dfa()
    s = install_residual_decoder(shared_suite(), a, label="parity")
    name = s.decoders[-1].name
    c = residual_constant(s, name)
    assert c == len(s.tag_of(name)) + 1
    d = s.decoder(name)
    for n in range(1, 50):
        y = d.nth(0, n)
        assert s.decode(s.tag_of(name) + d.program(0, n)) == y
        assert s.C(y) <= len(self_delim_nat(n)) + c


def test_install_with_other_enumerator_scans():
    from kclab.zoo import PrimeEnumerator
    s = install_residual_decoder(shared_suite(), machines.ends_with_1_dfa(), PrimeEnumerator(),
                                 label="odd-numbers")
    d = s.decoders[-1]
    assert d.nth(0, 1) == "11"    # 2 = "10" is even; 3 = "11" is the first hit


def test_characteristic_decoder():
    a = machines.odd_ones_dfa()
    d = Characteristic(a, "p")
    L = oracle_from_dfa(a, "odd-ones")
    e = LengthLex("01")
    assert d.chi(0, 7) == "".join("1" if L.member(e(i)) else "0" for i in range(1, 8))


def test_find_incompressible():
    assert find_incompressible(1) in ("0", "1")
    w = find_incompressible(8)
    assert len(w) == 8 and estimate_C(w).value >= 8
    with pytest.raises(ValueError):
        find_incompressible(21)


def test_find_incompressible_conditional():
    w = find_incompressible(10, side=10)
    assert shared_suite().C(w, side=10) >= 10


def test_description_budget():
    s = shared_suite()
    with pytest.raises(BudgetError):
        s.descriptions(30, max_programs=1 << 10)


def test_substring_examples():
    x = "0" * 8 + "1" * 8
    r = substring_bound_check(x, ("", "0" * 8, "1" * 8))
    assert r.reproduced and r.holds and r.slack >= 0
    r = substring_bound_check(x, ("", x, ""))
    assert r.holds


def test_substring_of_incompressible():
    x = find_incompressible(12)
    r = substring_bound_check(x, (x[:4], x[4:8], x[8:]))
    assert r.holds
    assert r.C_v >= len(r.v) - r.log_term


def test_substring_bad_split():
    with pytest.raises(ValueError):
        substring_bound_check("0101", ("0", "1", "1"))


def test_substring_overhead():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randrange(1, 200)
        x = rand_word(rng, n)
        i = rng.randrange(n + 1)
        j = rng.randrange(i, n + 1)
        r = substring_bound_check(x, (x[:i], x[i:j], x[j:]))
        assert r.log_term <= substring_overhead_bound(n, 5)


def test_census_regression():
    data = json.loads((FIXTURES / "census_n16.json").read_text())
    r = a_n_census(16, range(13))
    assert r.suite_version == data["suite"]
    for c, curve in data["curves"].items():
        assert [r.get(n, int(c)).d_An for n in range(1, 17)] == curve["d_An"]
        assert [r.get(n, int(c)).prefix_closed for n in range(1, 17)] == curve["prefix_closed"]


def test_census_vacuous_when_threshold_reaches_literal():
    r = a_n_census(4, [40])
    assert [row.d_An for row in r.rows] == [2, 4, 8, 16]


def test_census_prefix_closed_bounded_by_count():
    r = a_n_census(10, range(15))
    for row in r.rows:
        assert row.prefix_closed <= row.d_An
        assert row.threshold == nat_length(row.n) + row.c


def test_hex_round_trip():
    for w in ("", "1", "0001", "101100111"):
        assert hex_to_bits(bits_to_hex(w)) == w


def test_lz78_program_decodes():
    s = shared_suite()
    x = "0110" * 20
    prog = lz78_program(x)
    assert s.decode(s.tag_of("dictionary") + prog) == x


def test_to_binary():
    assert to_binary("0101", "01") == "0101"
    assert to_binary("012", "012") == "000110"


def test_custom_suite_requires_literal():
    s = DecoderSuite(base_decoders())
    assert s.literal_tag == "0"
