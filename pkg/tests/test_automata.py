import itertools
import random

import pytest
from hypothesis import given, strategies as st

from kclab import machines
from kclab.automata import (
    AlphabetError, AlphabetMismatchError, AutomatonError, Dfa, Dpda, EpsilonLoopError,
    LoadError, Move, dfa_combine, dfa_equiv, dfa_minimize, dfa_run, distinguishing_word,
    dpda_run, dumps, from_table, loads,
)


def words(max_len, alphabet="01"):
    for n in range(max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


def random_dfa(rng, n_states, alphabet="01"):
    trans = {(q, a): rng.randrange(n_states) for q in range(n_states) for a in alphabet}
    acc = {q for q in range(n_states) if rng.random() < 0.5}
    return Dfa(tuple(alphabet), n_states, trans, 0, acc)


def test_odd_ones_runs():
    a = machines.odd_ones_dfa()
    assert dfa_run(a, "") == (0, False)
    assert dfa_run(a, "101")[1] is False
    assert a.accepts("1011")


def test_even_length():
    assert dfa_run(machines.even_length_dfa(), "0110")[1] is True


def test_unknown_symbol():
    with pytest.raises(AlphabetError) as e:
        machines.odd_ones_dfa().run("01a")
    assert e.value.position == 2


def test_partial_dfa_rejected():
    with pytest.raises(AutomatonError):
        Dfa(("0", "1"), 2, {(0, "0"): 1}, 0, {1})


@given(st.integers(0, 10**6), st.text("01", max_size=20), st.sampled_from("01"))
def test_delta_recursion(seed, w, s):
    a = random_dfa(random.Random(seed), 5)
    q, _ = dfa_run(a, w + s)
    assert q == a.transitions[(dfa_run(a, w)[0], s)]


def test_right_invariance():
    rng = random.Random(7)
    for _ in range(5):
        a = random_dfa(rng, 4)
        by_state = {}
        for x in words(5):
            by_state.setdefault(a.state_after(x), []).append(x)
        for xs in by_state.values():
            x, y = xs[0], xs[-1]
            for z in words(6):
                assert a.accepts(x + z) == a.accepts(y + z)


@pytest.mark.parametrize("op,f", [
    ("union", lambda p, q: p or q),
    ("intersection", lambda p, q: p and q),
])
def test_product_correctness(op, f):
    a, b = machines.odd_ones_dfa(), machines.ends_with_1_dfa()
    c = dfa_combine(op, a, b)
    for w in words(10):
        assert c.accepts(w) == f(a.accepts(w), b.accepts(w))


def test_complement():
    a = machines.even_length_dfa()
    c = dfa_combine("complement", a)
    for w in words(10):
        assert c.accepts(w) != a.accepts(w)


def test_alphabet_mismatch():
    a = machines.odd_ones_dfa()
    b = from_table("ab", [[0, 0]], [0])
    with pytest.raises(AlphabetMismatchError):
        dfa_combine("union", a, b)


def test_minimize_redundant_parity():
    # parity with four copies of each class
    table = [[q, (q + 1) % 8] for q in range(8)]
    a = from_table("01", table, [q for q in range(8) if q % 2])
    m = dfa_minimize(a)
    assert m.n_states == 2
    assert dfa_equiv(m, machines.odd_ones_dfa())


def test_minimize_sigma_star():
    a = from_table("01", [[1, 2], [2, 0], [0, 1]], [0, 1, 2])
    assert dfa_minimize(a).n_states == 1


@pytest.mark.parametrize("name", sorted(machines.DFAS))
def test_minimize_preserves_language(name):
    a = machines.builtin(name)
    assert dfa_equiv(a, dfa_minimize(a))


def test_minimize_is_minimal_on_random_machines():
    rng = random.Random(3)
    for _ in range(30):
        a = random_dfa(rng, 6)
        m = dfa_minimize(a)
        assert dfa_equiv(a, m)
        # residual rows over short suffixes separate every pair of states
        sigs = {tuple(m.accepts(z, q) for z in words(6)) for q in range(m.n_states)}
        assert len(sigs) == m.n_states


def test_distinguishing_word():
    a, b = machines.odd_ones_dfa(), machines.even_length_dfa()
    w = distinguishing_word(a, b)
    assert w is not None and a.accepts(w) != b.accepts(w)
    assert distinguishing_word(a, a) is None


def test_dfa_text_round_trip():
    for name in machines.DFAS:
        a = machines.builtin(name)
        assert loads(dumps(a)) == a


def test_load_error_has_line():
    text = "type dfa\nalphabet 0 1\nstates 2\nstart 0\naccept 1\ntrans 0 0 5\n"
    with pytest.raises(LoadError) as e:
        loads(text)
    assert e.value.line == 6


# -- Dpda ---------------------------------------------------------------------


def test_eq01_dpda_accepts_and_heights():
    m = machines.eq01_dpda()
    tr = dpda_run(m, "0011")
    assert tr.accepted and not tr.stuck
    assert tr.heights_after_symbols == [2, 3, 2, 1]


def test_eq01_dpda_stuck():
    tr = dpda_run(machines.eq01_dpda(), "010")
    assert not tr.accepted and tr.stuck


def test_empty_input_acceptance_follows_start_closure():
    for name in machines.DPDAS:
        m = machines.builtin(name)
        tr = dpda_run(m, "")
        assert tr.accepted == (tr.final_state in m.accepting)


def test_eq01_dpda_matches_definition():
    m = machines.eq01_dpda()
    for w in words(10):
        k = len(w) // 2
        want = k >= 1 and w == "0" * k + "1" * k
        assert dpda_run(m, w).accepted == want


def test_determinism_rule_enforced():
    trans = {(0, None, "Z"): Move(0, "Z"), (0, "0", "Z"): Move(0, "ZA")}
    with pytest.raises(AutomatonError):
        Dpda(("0",), ("Z", "A"), 1, trans, 0, set())


def test_bottom_marker_rule():
    with pytest.raises(AutomatonError):
        Dpda(("0",), ("Z", "A"), 1, {(0, "0", "Z"): Move(0, "A")}, 0, set())


def test_determinism_rule_at_load_time():
    text = ("type dpda\nalphabet 0\nstates 1\nstart 0\naccept 0\nstack Z\nbottom Z\n"
            "trans 0 eps Z 0 Z\ntrans 0 0 Z 0 Z\n")
    with pytest.raises(LoadError) as e:
        loads(text)
    assert e.value.line == 9


def test_epsilon_loop_is_loud():
    m = Dpda(("0",), ("Z",), 1, {(0, None, "Z"): Move(0, "Z")}, 0, set())
    with pytest.raises(EpsilonLoopError):
        dpda_run(m, "0", eps_limit=50)


def test_checkpoints_and_push_order():
    m = machines.push_always_dpda("ab")
    tr = dpda_run(m, "ab", checkpoints=(0, 2))
    assert tr.final_stack.startswith("Z")
    assert set(tr.checkpoints) == {0, 2}
    assert tr.heights_after_symbols == [2, 3]


def test_dpda_text_round_trip():
    for name in machines.DPDAS:
        m = machines.builtin(name)
        assert loads(dumps(m)) == m
