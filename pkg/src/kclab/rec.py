"""Characteristic sequences of whole languages, bounded halting, sparse sequences.

The i-th "machine" is the i-th program (length-lex, ε first) of a tiny
two-register language, run on input ``i``:

    +  increment the active register      -  decrement it (floored at 0)
    >  switch the active register         [  jump past the matching ] if zero
    ]  jump back to the matching [ if nonzero

Register A holds the input, B starts at 0.  Unmatched brackets are no-ops.
Every executed instruction costs one step and halting (running off the end)
costs one more, so nothing halts in zero steps.  Only time-bounded halting
is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .charseq import chi_prefix
from .kolmogorov import Decoder, DecoderSuite, shared_suite
from .zoo import LanguageOracle, LengthLex

INTERPRETER = "toy-1"
INSTRUCTIONS = "+->[]"


class InsufficientBitsError(ValueError):
    def __init__(self, k_index: int, position: int):
        self.k_index = k_index
        self.position = position
        super().__init__(f"kbits exhausted: k_{k_index} is needed at position {position}")


@lru_cache(maxsize=4096)
def _brackets(program: str) -> tuple[int, ...]:
    match = list(range(len(program)))
    stack = []
    for i, c in enumerate(program):
        if c == "[":
            stack.append(i)
        elif c == "]" and stack:
            j = stack.pop()
            match[i], match[j] = j, i
    return tuple(match)


def run_toy(program: str, x: int, budget: int) -> int | None:
    """Steps until halting, or ``None`` if the program runs past ``budget`` steps."""
    match = _brackets(program)
    regs = [x, 0]
    active = 0
    pc = 0
    steps = 0
    n = len(program)
    while steps < budget:
        steps += 1
        if pc >= n:
            return steps
        c = program[pc]
        if c == "+":
            regs[active] += 1
        elif c == "-":
            if regs[active]:
                regs[active] -= 1
        elif c == ">":
            active ^= 1
        elif c == "[" and match[pc] != pc:
            if regs[active] == 0:
                pc = match[pc]
        elif c == "]" and match[pc] != pc:
            if regs[active] != 0:
                pc = match[pc]
        pc += 1
    return None


@dataclass(frozen=True)
class ToyProgramEnumeration:
    interpreter: str = INTERPRETER
    alphabet: str = INSTRUCTIONS

    def program(self, i: int) -> str:
        return LengthLex(self.alphabet)(i)

    def halts_within(self, i: int, T: int) -> int | None:
        return run_toy(self.program(i), i, T)


TOY = ToyProgramEnumeration()


@dataclass(frozen=True)
class BitSequencePrefix:
    bits: str
    provenance: str
    header: str = ""
    complexity: int | None = None

    def __str__(self):
        return self.bits

    def dump(self) -> str:
        lines = [f"# {self.header or self.provenance}"]
        if self.complexity is not None:
            lines.append(f"# Ĉ = {self.complexity}")
        lines.append(self.bits)
        return "\n".join(lines) + "\n"


def lambda_prefix(L: LanguageOracle, n: int, suite: DecoderSuite | None = None
                  ) -> BitSequencePrefix:
    suite = suite or shared_suite()
    bits = chi_prefix(L, "", n).bits
    return BitSequencePrefix(bits, "lambda", f"lambda({L.name}) n={n} suite={suite.version}",
                             suite.C(bits, side=n))


def halting_prefix(T: int, n: int, enumeration: ToyProgramEnumeration = TOY) -> BitSequencePrefix:
    bits = "".join("1" if enumeration.halts_within(i, T) is not None else "0"
                   for i in range(1, n + 1))
    return BitSequencePrefix(bits, "halting",
                             f"halting interpreter={enumeration.interpreter} T={T} n={n}")


def sparse_positions(count: int) -> list[int]:
    """1-based positions of k_1 .. k_count in h."""
    pos = [1]
    for i in range(1, count):
        pos.append(pos[-1] + 2 ** i + 1)
    return pos[:count]


def sparse_sequence(kbits: str, n: int, suite: DecoderSuite | None = None
                    ) -> BitSequencePrefix:
    """``h = k_1 0^2 k_2 0^4 ... k_i 0^(2^i) k_(i+1) ...`` cut to ``n`` symbols."""
    out = ["0"] * n
    i, pos = 1, 1
    while pos <= n:
        if i > len(kbits):
            raise InsufficientBitsError(i, pos)
        out[pos - 1] = kbits[i - 1]
        pos += 2 ** i + 1
        i += 1
    bits = "".join(out)
    suite = suite or shared_suite()
    return BitSequencePrefix(bits, "sparse", f"sparse n={n} suite={suite.version}",
                             suite.C(bits))


# ---------------------------------------------------------------------------
# bounded semi-deciders and the member-count decoder


@dataclass(frozen=True)
class SemiDecider:
    """Confirms membership of the i-th word after some number of steps."""

    name: str
    confirm: Callable[[int], int | None]   # steps to confirm v_i, or None
    T: int

    def confirmed_within(self, i: int, t: int) -> bool:
        s = self.confirm(i)
        return s is not None and s <= min(t, self.T)

    def bits(self, n: int) -> str:
        return "".join("1" if self.confirmed_within(i, self.T) else "0"
                       for i in range(1, n + 1))


def bounded_halting(T: int, enumeration: ToyProgramEnumeration = TOY) -> SemiDecider:
    return SemiDecider(f"halting[{enumeration.interpreter},T={T}]",
                       lambda i: enumeration.halts_within(i, T), T)


def empty_semi(T: int = 1) -> SemiDecider:
    return SemiDecider("empty", lambda i: None, T)


def oracle_semi(L: LanguageOracle, T: int = 1) -> SemiDecider:
    e = LengthLex(L.alphabet)
    return SemiDecider(L.name, lambda i: 1 if L.member(e(i)) else None, T)


class MemberCount(Decoder):
    """Rebuild the first ``n`` membership bits from the member count ``m``.

    Side value: ``n``.  Program: ``m`` in exactly ``n.bit_length()`` bits.
    Decoding runs the semi-decider on ``v_1 .. v_n`` with step budgets
    ``0, 1, ..., T`` and stops at the first budget confirming ``m`` members.
    """

    description = "m in bit_length(n) bits, side n -> membership bits of v_1..v_n"

    def __init__(self, semi: SemiDecider):
        self.semi = semi
        self.name = f"member-count[{semi.name}]"
        self._times: dict[int, int | None] = {}

    def _time(self, i):
        if i not in self._times:
            s = self.semi.confirm(i)
            self._times[i] = s if s is not None and s <= self.semi.T else None
        return self._times[i]

    def decode(self, program, side=None, limit=None):
        if side is None or side < 0 or len(program) != side.bit_length():
            return None
        if limit is not None and side > limit:
            return None
        m = int(program, 2) if program else 0
        if m > side:
            return None
        times = [self._time(i) for i in range(1, side + 1)]
        for t in range(self.semi.T + 1):
            found = [s is not None and s <= t for s in times]
            if sum(found) == m:
                return "".join("1" if f else "0" for f in found)
        return None

    def program(self, m: int, n: int) -> str:
        width = n.bit_length()
        return format(m, f"0{width}b") if width else ""

    def candidates(self, x, side=None):
        if side is not None and side == len(x):
            yield self.program(x.count("1"), side)


@dataclass
class ProbeReport:
    semi: str
    n: int
    bits: str
    m: int
    witness_cost: int       # tag + program of the member-count description
    constant: int           # tag + 1: witness_cost = floor(log2 n) + constant
    C_conditional: int      # Ĉ(lambda^T_1:n | n) over the extended suite
    replayed: bool
    suite_version: str

    @property
    def log_n(self) -> int:
        return self.n.bit_length() - 1

    @property
    def bound(self) -> int:
        return self.log_n + self.constant


def re_upperbound_probe(semi: SemiDecider, n: int, suite: DecoderSuite | None = None
                        ) -> ProbeReport:
    if n < 1:
        raise ValueError("n must be >= 1")
    base = suite or shared_suite()
    dec = MemberCount(semi)
    ext = base.with_decoder(dec)
    tag = ext.tag_of(dec.name)
    bits = semi.bits(n)
    m = bits.count("1")
    prog = dec.program(m, n)
    replayed = ext.decode(tag + prog, side=n) == bits
    return ProbeReport(semi.name, n, bits, m, len(tag) + len(prog), len(tag) + 1,
                       ext.C(bits, side=n), replayed, ext.version)
