from pathlib import Path

import pytest

from kclab import rec
from kclab.charseq import chi_prefix
from kclab.zoo import ZOO_NAMES, zoo_oracle

FIXTURES = Path(__file__).parent / "fixtures"


def test_toy_interpreter():
    assert rec.run_toy("", 5, 10) == 1
    assert rec.run_toy("+", 0, 10) == 2
    assert rec.run_toy("[]", 0, 10) == 2          # skip the loop, then halt
    assert rec.run_toy("[]", 1, 1000) is None      # spins forever
    assert rec.run_toy("[-]", 3, 100) == 1 + 3 * 2 + 1
    assert rec.run_toy("]", 0, 10) == 2            # unmatched bracket is a no-op


def test_toy_enumeration_is_length_lex():
    assert [rec.TOY.program(i) for i in range(1, 7)] == ["", "+", "-", ">", "[", "]"]


@pytest.mark.parametrize("name", ZOO_NAMES)
def test_lambda_equals_chi_of_empty(name):
    L = zoo_oracle(name)
    assert rec.lambda_prefix(L, 256).bits == chi_prefix(L, "", 256).bits


def test_lambda_examples():
    assert rec.lambda_prefix(zoo_oracle("sigma-star"), 9).bits == "1" * 9
    assert rec.lambda_prefix(zoo_oracle("odd-ones"), 7).bits == "0010110"


def test_halting_zero_budget():
    assert rec.halting_prefix(0, 40).bits == "0" * 40


def test_halting_monotone():
    grid = [rec.halting_prefix(T, 64).bits for T in (1, 10, 100, 1000)]
    for lo, hi in zip(grid, grid[1:]):
        assert all(a <= b for a, b in zip(lo, hi))


def test_halting_fixture():
    lines = (FIXTURES / "halting_T1000_n32.txt").read_text().split()
    assert rec.halting_prefix(1000, 32).bits == lines[-1]


def test_sparse_examples():
    assert rec.sparse_sequence("1" * 10, 9).bits == "100100001"
    assert rec.sparse_sequence("0" * 20, 100).bits == "0" * 100
    assert rec.sparse_positions(4) == [1, 4, 9, 18]


def test_sparse_recurrence_direct():
    n = 10_000
    k = rec.sparse_positions(20)
    kbits = "".join("1" if i % 3 else "0" for i in range(1, 21))
    direct = ""
    for i in range(1, 20):
        direct += kbits[i - 1] + "0" * (2 ** i)
    direct = direct[:n]
    assert rec.sparse_sequence(kbits, n).bits == direct
    assert all(direct[p - 1] == kbits[i] for i, p in enumerate(k) if p <= n)


def test_sparse_needs_enough_bits():
    with pytest.raises(rec.InsufficientBitsError):
        rec.sparse_sequence("1", 5)


@pytest.mark.parametrize("n", [16, 64, 256])
def test_reprobe_replays(n):
    r = rec.re_upperbound_probe(rec.bounded_halting(100), n)
    assert r.replayed
    assert r.C_conditional <= r.witness_cost == r.bound


def test_reprobe_empty_and_full():
    for n in (16, 64, 256):
        r = rec.re_upperbound_probe(rec.empty_semi(), n)
        assert r.m == 0 and r.replayed
        full = rec.re_upperbound_probe(rec.oracle_semi(zoo_oracle("sigma-star")), n)
        assert full.m == n and full.replayed
        assert full.witness_cost <= full.bound
    consts = {rec.re_upperbound_probe(rec.empty_semi(), n).C_conditional for n in (16, 64, 256)}
    assert len(consts) == 1


def test_reprobe_rejects_n0():
    with pytest.raises(ValueError):
        rec.re_upperbound_probe(rec.empty_semi(), 0)
