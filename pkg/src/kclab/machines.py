"""Machines shipped with the package, written in the automaton text format."""

from __future__ import annotations

from .automata import Dfa, Dpda, loads

ODD_ONES = """\
type dfa
alphabet 0 1
states 2            # 0: even number of 1s, 1: odd
start 0
accept 1
trans 0 0 0
trans 0 1 1
trans 1 0 1
trans 1 1 0
"""

SIGMA_STAR = """\
type dfa
alphabet 0 1
states 1
start 0
accept 0
trans 0 0 0
trans 0 1 0
"""

EVEN_LENGTH = """\
type dfa
alphabet 0 1
states 2
start 0
accept 0
trans 0 0 1
trans 0 1 1
trans 1 0 0
trans 1 1 0
"""

ENDS_WITH_1 = """\
type dfa
alphabet 0 1
states 2
start 0
accept 1
trans 0 0 0
trans 0 1 1
trans 1 0 0
trans 1 1 1
"""

# {0^k 1^k : k >= 1}; one A per 0, popped per 1, epsilon move to accept on Z.
EQ01_DPDA = """\
type dpda
alphabet 0 1
stack Z A
bottom Z
states 3
start 0
accept 2
trans 0 0 Z 0 ZA
trans 0 0 A 0 AA
trans 0 1 A 1 -
trans 1 1 A 1 -
trans 1 eps Z 2 Z
"""

# never pushes: a two-state parity tracker with a constant stack
FINITE_STACK_DPDA = """\
type dpda
alphabet 0 1
stack Z
bottom Z
states 2
start 0
accept 1
trans 0 0 Z 0 Z
trans 0 1 Z 1 Z
trans 1 0 Z 1 Z
trans 1 1 Z 0 Z
"""

# pushes on every other symbol: state 0 pushes, state 1 skips
TWO_PERIOD_DPDA = """\
type dpda
alphabet 0 1
stack Z A
bottom Z
states 2
start 0
accept 0 1
trans 0 0 Z 1 ZA
trans 0 1 Z 1 ZA
trans 0 0 A 1 AA
trans 0 1 A 1 AA
trans 1 0 Z 0 Z
trans 1 1 Z 0 Z
trans 1 0 A 0 A
trans 1 1 A 0 A
"""


def push_always_dpda(alphabet: str = "01") -> Dpda:
    """One state; every input symbol pushes an ``A``.  Accepts everything."""
    lines = ["type dpda", "alphabet " + " ".join(alphabet), "stack Z A", "bottom Z",
             "states 1", "start 0", "accept 0"]
    for a in alphabet:
        lines.append(f"trans 0 {a} Z 0 ZA")
        lines.append(f"trans 0 {a} A 0 AA")
    return loads("\n".join(lines))


def odd_ones_dfa() -> Dfa:
    return loads(ODD_ONES)


def sigma_star_dfa() -> Dfa:
    return loads(SIGMA_STAR)


def even_length_dfa() -> Dfa:
    return loads(EVEN_LENGTH)


def ends_with_1_dfa() -> Dfa:
    return loads(ENDS_WITH_1)


def eq01_dpda() -> Dpda:
    return loads(EQ01_DPDA)


def finite_stack_dpda() -> Dpda:
    return loads(FINITE_STACK_DPDA)


def two_period_dpda() -> Dpda:
    return loads(TWO_PERIOD_DPDA)


DFAS = {
    "odd-ones": odd_ones_dfa,
    "sigma-star": sigma_star_dfa,
    "even-length": even_length_dfa,
    "ends-with-1": ends_with_1_dfa,
}

DPDAS = {
    "eq01": eq01_dpda,
    "push-always": push_always_dpda,
    "finite-stack": finite_stack_dpda,
    "two-period": two_period_dpda,
}

# machines whose stack grows without bound on repeated input
CASE2_DPDAS = ("push-always", "two-period")


def builtin(name: str) -> Dfa | Dpda:
    if name in DFAS:
        return DFAS[name]()
    if name in DPDAS:
        return DPDAS[name]()
    raise KeyError(f"unknown machine {name!r}; available: {', '.join([*DFAS, *DPDAS])}")
