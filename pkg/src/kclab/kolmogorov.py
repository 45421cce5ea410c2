"""Computable upper bounds on description length.

``Ĉ(x | side)`` is the length of the shortest ``tag + program`` that some
decoder in a fixed :class:`DecoderSuite` maps to ``x``.  Tags are the
self-delimiting codes of the decoders' registration indices, so the set of
descriptions is prefix-free across decoders.  All values are relative to
the suite and carry its version string.

Programs are found two ways: each decoder proposes direct encodings of the
target (``candidates``), and every description up to a small total length
is enumerated exhaustively.  Every reported value comes with a witness that
replays to the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .automata import Dfa
from .codec import (
    CodeError, nat_length, nat_to_word, read_self_delim, read_self_delim_nat,
    self_delim, self_delim_nat, word_to_nat,
)

BASE_VERSION = "kc1"
DEFAULT_EXHAUSTIVE_BITS = 12
MAX_PROGRAMS = 1 << 22


class BudgetError(RuntimeError):
    pass


def _is_binary(w: str) -> bool:
    return all(ch in "01" for ch in w)


def to_binary(w: str, alphabet: Iterable[str]) -> str:
    """Fixed-width binary image of ``w``; identity on {0,1} words."""
    alphabet = tuple(alphabet)
    if set(alphabet) <= {"0", "1"}:
        return w
    width = max(1, (len(alphabet) - 1).bit_length())
    pos = {s: i for i, s in enumerate(alphabet)}
    return "".join(format(pos[s], f"0{width}b") for s in w)


# ---------------------------------------------------------------------------
# decoders


class Decoder:
    """A total map from ``(program, side)`` to a word, or ``None`` on failure.

    ``limit`` caps the output length; decoders must fail fast rather than
    build longer outputs.  ``candidates`` proposes programs for a target.
    """

    name = "decoder"
    description = ""

    def decode(self, program: str, side: int | None = None,
               limit: int | None = None) -> str | None:
        raise NotImplementedError

    def candidates(self, x: str, side: int | None = None) -> Iterator[str]:
        return iter(())


def _too_long(n: int, limit: int | None) -> bool:
    return limit is not None and n > limit


class Literal(Decoder):
    name = "literal"
    description = "program = self_delim(x)"

    def decode(self, program, side=None, limit=None):
        try:
            x, end = read_self_delim(program)
        except CodeError:
            return None
        if end != len(program) or _too_long(len(x), limit):
            return None
        return x

    def candidates(self, x, side=None):
        yield self_delim(x)


class LiteralGivenLength(Decoder):
    name = "literal-given-length"
    description = "program = x itself, valid when the side value is l(x)"

    def decode(self, program, side=None, limit=None):
        if side is None or len(program) != side or _too_long(side, limit):
            return None
        return program

    def candidates(self, x, side=None):
        if side == len(x):
            yield x


def _periods(x: str) -> Iterator[int]:
    for p in range(1, len(x) + 1):
        if all(x[i] == x[i - p] for i in range(p, len(x))):
            yield p


class RunLength(Decoder):
    name = "run-length"
    description = "program = self_delim(unit) self_delim(count); output unit^count"

    def decode(self, program, side=None, limit=None):
        try:
            unit, pos = read_self_delim(program)
            count, pos = read_self_delim_nat(program, pos)
        except CodeError:
            return None
        if pos != len(program) or not unit or count < 1:
            return None
        if _too_long(len(unit) * count, limit):
            return None
        return unit * count

    def candidates(self, x, side=None):
        for p in _periods(x):
            if len(x) % p == 0:
                yield self_delim(x[:p]) + self_delim_nat(len(x) // p)


class Periodic(Decoder):
    name = "periodic-given-length"
    description = "program = self_delim(unit); output the first side symbols of unit^inf"

    def decode(self, program, side=None, limit=None):
        if side is None or _too_long(side, limit):
            return None
        try:
            unit, pos = read_self_delim(program)
        except CodeError:
            return None
        if pos != len(program) or not unit:
            return None
        return (unit * (side // len(unit) + 1))[:side]

    def candidates(self, x, side=None):
        if side == len(x) and x:
            for p in _periods(x):
                yield self_delim(x[:p])


def lz78_program(x: str, with_header: bool = True) -> str:
    phrases = {"": 0}
    bits = [self_delim_nat(len(x))] if with_header else []
    w = ""
    for c in x:
        if w + c in phrases:
            w += c
            continue
        width = (len(phrases) - 1).bit_length()
        bits.append(format(phrases[w], f"0{width}b") if width else "")
        bits.append(c)
        phrases[w + c] = len(phrases)
        w = ""
    if w:
        width = (len(phrases) - 1).bit_length()
        bits.append(format(phrases[w[:-1]], f"0{width}b") if width else "")
        bits.append(w[-1])
    return "".join(bits)


class Dictionary(Decoder):
    name = "dictionary"
    description = ("LZ78 parse: self_delim(length) then (index, bit) phrases; "
                   "the length header is omitted when the side value is given")

    def decode(self, program, side=None, limit=None):
        pos = 0
        if side is None:
            try:
                length, pos = read_self_delim_nat(program)
            except CodeError:
                return None
        else:
            length = side
        if _too_long(length, limit):
            return None
        phrases = [""]
        out = []
        produced = 0
        while produced < length:
            width = (len(phrases) - 1).bit_length()
            if pos + width + 1 > len(program):
                return None
            idx = int(program[pos:pos + width], 2) if width else 0
            if idx >= len(phrases):
                return None
            phrase = phrases[idx] + program[pos + width]
            pos += width + 1
            phrases.append(phrase)
            out.append(phrase)
            produced += len(phrase)
        if pos != len(program) or produced != length:
            return None
        return "".join(out)

    def candidates(self, x, side=None):
        if side is None:
            yield lz78_program(x)
        elif side == len(x):
            yield lz78_program(x, with_header=False)


class Rank(Decoder):
    name = "rank"
    description = "program = self_delim(n); output the word for n under the bijection"

    def decode(self, program, side=None, limit=None):
        try:
            n, pos = read_self_delim_nat(program)
        except CodeError:
            return None
        if pos != len(program) or _too_long(nat_length(n), limit):
            return None
        return nat_to_word(n)

    def candidates(self, x, side=None):
        yield self_delim_nat(word_to_nat(x))


# -- machine-backed decoders --------------------------------------------------


class _DfaCounts:
    """Numbers of words of each length accepted from each state."""

    def __init__(self, dfa: Dfa):
        self.dfa = dfa
        self.table = [[int(q in dfa.accepting) for q in dfa.states]]

    def upto(self, length: int) -> list[list[int]]:
        dfa = self.dfa
        while len(self.table) <= length:
            prev = self.table[-1]
            self.table.append([sum(prev[dfa.step(q, a)] for a in dfa.alphabet)
                               for q in dfa.states])
        return self.table

    def count(self, q: int, length: int) -> int:
        return self.upto(length)[length][q]


def _state_width(dfa: Dfa) -> int:
    return (dfa.n_states - 1).bit_length()


def _read_state(program: str, dfa: Dfa) -> tuple[int, int] | None:
    width = _state_width(dfa)
    if len(program) < width:
        return None
    q = int(program[:width], 2) if width else 0
    if q >= dfa.n_states:
        return None
    return q, width


def _state_bits(q: int, dfa: Dfa) -> str:
    width = _state_width(dfa)
    return format(q, f"0{width}b") if width else ""


class ResidualRank(Decoder):
    """The ``n``-th nonempty word (length-lex) accepted from a state.

    Program: the state index in fixed width ``ceil(log2 |Q|)``, then
    ``self_delim(n)``.  This is the reconstruction behind the bound
    ``Ĉ(y) <= Ĉ(n) + c`` for the ``n``-th word of a residual language.
    """

    description = "state (fixed width) self_delim(n) -> n-th word accepted from state"

    def __init__(self, dfa: Dfa, label: str = "dfa"):
        self.dfa = dfa
        self.name = f"residual-rank[{label}]"
        self._counts = _DfaCounts(dfa)

    @property
    def state_cost(self) -> int:
        return _state_width(self.dfa)

    def nth(self, q: int, n: int, limit: int | None = None) -> str | None:
        dfa = self.dfa
        max_len = limit if limit is not None else dfa.n_states * (n + 2)
        length = 1
        while True:
            if length > max_len:
                return None
            c = self._counts.count(q, length)
            if n <= c:
                break
            n -= c
            length += 1
        word = []
        state = q
        for remaining in range(length - 1, -1, -1):
            for a in dfa.alphabet:
                r = dfa.step(state, a)
                c = self._counts.count(r, remaining)
                if n <= c:
                    word.append(a)
                    state = r
                    break
                n -= c
        return "".join(word)

    def rank(self, q: int, y: str) -> int | None:
        """Position of ``y`` among nonempty words accepted from ``q``."""
        dfa = self.dfa
        if not y or not dfa.accepts(y, q):
            return None
        n = sum(self._counts.count(q, k) for k in range(1, len(y)))
        state = q
        order = {a: i for i, a in enumerate(dfa.alphabet)}
        for i, ch in enumerate(y):
            remaining = len(y) - i - 1
            for a in dfa.alphabet[:order[ch]]:
                n += self._counts.count(dfa.step(state, a), remaining)
            state = dfa.step(state, ch)
        return n + 1

    def decode(self, program, side=None, limit=None):
        head = _read_state(program, self.dfa)
        if head is None:
            return None
        q, pos = head
        try:
            n, end = read_self_delim_nat(program, pos)
        except CodeError:
            return None
        if end != len(program) or n < 1:
            return None
        return self.nth(q, n, limit)

    def program(self, q: int, n: int) -> str:
        return _state_bits(q, self.dfa) + self_delim_nat(n)

    def candidates(self, x, side=None):
        if not x or any(ch not in self.dfa.alphabet for ch in x):
            return
        for q in self.dfa.states:
            n = self.rank(q, x)
            if n is not None:
                yield self.program(q, n)


class ResidualScan(Decoder):
    """Like :class:`ResidualRank` but for an arbitrary enumerator (linear scan)."""

    description = "state (fixed width) self_delim(n) -> n-th enumerated word accepted from state"

    def __init__(self, dfa: Dfa, enumerator, label: str = "dfa", budget: int = 1 << 16):
        self.dfa = dfa
        self.enumerator = enumerator
        self.budget = budget
        self.name = f"residual-scan[{label},{enumerator.name}]"

    @property
    def state_cost(self) -> int:
        return _state_width(self.dfa)

    def nth(self, q, n, limit=None):
        found = 0
        for i in range(1, self.budget + 1):
            y = self.enumerator(i)
            if limit is not None and len(y) > limit and self.enumerator.name.startswith("length-lex"):
                return None
            if y and all(ch in self.dfa.alphabet for ch in y) and self.dfa.accepts(y, q):
                found += 1
                if found == n:
                    return None if _too_long(len(y), limit) else y
        return None

    def decode(self, program, side=None, limit=None):
        head = _read_state(program, self.dfa)
        if head is None:
            return None
        q, pos = head
        try:
            n, end = read_self_delim_nat(program, pos)
        except CodeError:
            return None
        if end != len(program) or n < 1:
            return None
        return self.nth(q, n, limit)

    def candidates(self, x, side=None):
        if not x or any(ch not in self.dfa.alphabet for ch in x):
            return
        for q in self.dfa.states:
            if not self.dfa.accepts(x, q):
                continue
            found = 0
            for i in range(1, self.budget + 1):
                y = self.enumerator(i)
                if y and all(ch in self.dfa.alphabet for ch in y) and self.dfa.accepts(y, q):
                    found += 1
                    if y == x:
                        yield _state_bits(q, self.dfa) + self_delim_nat(found)
                        break


class Characteristic(Decoder):
    """Characteristic sequence of the residual language of a state.

    Bit ``i`` is 1 when the ``i``-th length-lex word (ε first) is accepted
    from the state.  Program: the state in fixed width, followed by
    ``self_delim(n)`` unless the side value supplies ``n``.
    """

    description = "state (fixed width) [self_delim(n)] -> chi_1..chi_n of that state"

    def __init__(self, dfa: Dfa, label: str = "dfa"):
        self.dfa = dfa
        self.name = f"characteristic[{label}]"
        from .zoo import LengthLex
        self._enum = LengthLex(dfa.alphabet)

    @property
    def state_cost(self) -> int:
        return _state_width(self.dfa)

    @lru_cache(maxsize=None)
    def _prefix(self, q: int, n: int) -> str:
        if n == 0:
            return ""
        if n > 1:
            head = self._prefix(q, n // 2)
            tail = "".join("1" if self.dfa.accepts(self._enum(i), q) else "0"
                           for i in range(n // 2 + 1, n + 1))
            return head + tail
        return "1" if q in self.dfa.accepting else "0"

    def chi(self, q: int, n: int) -> str:
        return self._prefix(q, n)

    def decode(self, program, side=None, limit=None):
        head = _read_state(program, self.dfa)
        if head is None:
            return None
        q, pos = head
        if side is None:
            try:
                n, pos = read_self_delim_nat(program, pos)
            except CodeError:
                return None
        else:
            n = side
        if pos != len(program) or _too_long(n, limit):
            return None
        return self.chi(q, n)

    def candidates(self, x, side=None):
        if not _is_binary(x):
            return
        if side is not None and side != len(x):
            return
        for q in self.dfa.states:
            if self.chi(q, len(x)) == x:
                tail = "" if side is not None else self_delim_nat(len(x))
                yield _state_bits(q, self.dfa) + tail


# ---------------------------------------------------------------------------
# suites


def tag_for(index: int) -> str:
    return self_delim_nat(index)


@dataclass(frozen=True)
class ComplexityEstimate:
    value: int
    decoder: str
    tag: str
    program: str
    side: int | None
    suite_version: str

    @property
    def description(self) -> str:
        return self.tag + self.program

    def witness_hex(self) -> str:
        return f"{bits_to_hex(self.tag)} {bits_to_hex(self.program)}"

    def label(self) -> str:
        return f"Ĉ (suite {self.suite_version})"


def bits_to_hex(bits: str) -> str:
    """``<length>:<hex>``; the length keeps leading zeros recoverable."""
    return f"{len(bits)}:{int(bits, 2):x}" if bits else "0:"


def hex_to_bits(text: str) -> str:
    length, _, digits = text.partition(":")
    n = int(length)
    return format(int(digits, 16), f"0{n}b") if n else ""


class DecoderSuite:
    """An ordered, immutable family of decoders with prefix-free tags."""

    def __init__(self, decoders: Iterable[Decoder], version: str = BASE_VERSION,
                 exhaustive_bits: int = DEFAULT_EXHAUSTIVE_BITS):
        self.decoders = tuple(decoders)
        self.tags = tuple(tag_for(i) for i in range(len(self.decoders)))
        self.version = version
        self.exhaustive_bits = exhaustive_bits
        self._tables: dict[tuple, dict[str, tuple[int, int, str]]] = {}

    def __len__(self):
        return len(self.decoders)

    def __repr__(self):
        return f"DecoderSuite({self.version!r}, {len(self)} decoders)"

    def with_decoder(self, decoder: Decoder) -> "DecoderSuite":
        return DecoderSuite(self.decoders + (decoder,), f"{self.version}+{decoder.name}",
                            self.exhaustive_bits)

    def tag_of(self, name: str) -> str:
        for d, t in zip(self.decoders, self.tags):
            if d.name == name:
                return t
        raise KeyError(name)

    def decoder(self, name: str) -> Decoder:
        for d in self.decoders:
            if d.name == name:
                return d
        raise KeyError(name)

    @property
    def literal_tag(self) -> str:
        return self.tag_of("literal")

    def split(self, description: str) -> tuple[int, str]:
        tag, end = read_self_delim(description)
        index = word_to_nat(tag)
        if index >= len(self.decoders):
            raise CodeError(f"no decoder with index {index}")
        return index, description[end:]

    def decode(self, description: str, side: int | None = None,
               limit: int | None = None) -> str | None:
        try:
            index, program = self.split(description)
        except CodeError:
            return None
        return self.decoders[index].decode(program, side, limit)

    def replay(self, est: ComplexityEstimate) -> str | None:
        return self.decode(est.tag + est.program, est.side)

    # -- exhaustive enumeration ------------------------------------------

    def program_count(self, max_total: int) -> int:
        total = 0
        for t in self.tags:
            room = max_total - len(t)
            if room >= 0:
                total += (1 << (room + 1)) - 1
        return total

    def descriptions(self, max_total: int, side: int | None = None,
                     out_len: int | None = None, max_programs: int = MAX_PROGRAMS
                     ) -> dict[str, tuple[int, int, str]]:
        """Shortest description of every word reachable within ``max_total`` bits.

        Maps word -> (total length, decoder index, program).  With
        ``out_len`` only outputs of exactly that length are kept.
        """
        key = (max_total, side, out_len)
        if key in self._tables:
            return self._tables[key]
        if self.program_count(max_total) > max_programs:
            raise BudgetError(
                f"{self.program_count(max_total)} programs exceed the budget of {max_programs}"
            )
        best: dict[str, tuple[int, int, str]] = {}
        for length in range(max_total + 1):
            for index, (d, tag) in enumerate(zip(self.decoders, self.tags)):
                room = length - len(tag)
                if room < 0:
                    continue
                for bits in product("01", repeat=room):
                    p = "".join(bits)
                    out = d.decode(p, side, out_len)
                    if out is None or (out_len is not None and len(out) != out_len):
                        continue
                    if out not in best:
                        best[out] = (length, index, p)
        self._tables[key] = best
        return best

    # -- estimation --------------------------------------------------------

    def estimate(self, x: str, side: int | None = None) -> ComplexityEstimate:
        if not _is_binary(x):
            raise ValueError(f"Ĉ is defined on binary words; got {x!r}")
        best = None
        for index, (d, tag) in enumerate(zip(self.decoders, self.tags)):
            for p in d.candidates(x, side):
                cost = len(tag) + len(p)
                if best is not None and cost >= best[0]:
                    continue
                if d.decode(p, side) == x:
                    best = (cost, index, p)
        table = self.descriptions(self.exhaustive_bits, side)
        hit = table.get(x)
        if hit is not None and (best is None or hit[0] < best[0]):
            best = hit
        cost, index, p = best
        return ComplexityEstimate(cost, self.decoders[index].name, self.tags[index], p,
                                  side, self.version)

    def C(self, x: str, side: int | None = None) -> int:
        return self.estimate(x, side).value


def base_decoders() -> list[Decoder]:
    return [Literal(), LiteralGivenLength(), RunLength(), Periodic(), Dictionary(), Rank()]


def default_suite() -> DecoderSuite:
    return DecoderSuite(base_decoders())


_DEFAULT: DecoderSuite | None = None


def shared_suite() -> DecoderSuite:
    """A process-wide default suite, so exhaustive tables are built once."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = default_suite()
    return _DEFAULT


def estimate_C(x: str, side: int | None = None,
               suite: DecoderSuite | None = None) -> ComplexityEstimate:
    return (suite or shared_suite()).estimate(x, side)


def literal_ceiling(n: int, suite: DecoderSuite | None = None) -> int:
    """Cost of the literal description of any length-``n`` word."""
    suite = suite or shared_suite()
    return len(suite.literal_tag) + n + 2 * nat_length(n) + 1


def install_residual_decoder(suite: DecoderSuite, a: Dfa, e=None,
                             label: str = "dfa") -> DecoderSuite:
    """Add a decoder for the ``n``-th word accepted from any state of ``a``."""
    from .zoo import LengthLex
    if e is None or (isinstance(e, LengthLex) and e.alphabet == a.alphabet):
        return suite.with_decoder(ResidualRank(a, label))
    return suite.with_decoder(ResidualScan(a, e, label))


def install_characteristic_decoder(suite: DecoderSuite, a: Dfa,
                                   label: str = "dfa") -> DecoderSuite:
    return suite.with_decoder(Characteristic(a, label))


def residual_constant(suite: DecoderSuite, name: str) -> int:
    """Tag plus state-index cost of an installed residual decoder."""
    d = suite.decoder(name)
    return len(suite.tag_of(name)) + d.state_cost


# ---------------------------------------------------------------------------
# incompressibility, substrings, census


def find_incompressible(n: int, suite: DecoderSuite | None = None,
                        side: int | None = None) -> str:
    """Length-lex least word of length ``n`` with no description shorter than ``n``."""
    if not 0 <= n <= 20:
        raise ValueError(f"exhaustive search supports 0 <= n <= 20, got {n}")
    suite = suite or shared_suite()
    if n == 0:
        return ""
    marked = suite.descriptions(n - 1, side, out_len=n)
    for i in range(1 << n):
        w = format(i, f"0{n}b")
        if w not in marked:
            return w
    raise AssertionError("counting guarantees an undescribed word")  # pragma: no cover


def compressible_count(n: int, suite: DecoderSuite | None = None,
                       side: int | None = None) -> int:
    """Number of length-``n`` words with a description shorter than ``n``."""
    suite = suite or shared_suite()
    if n == 0:
        return 0
    return len(suite.descriptions(n - 1, side, out_len=n))


class Substring(Decoder):
    """``x = u v w`` from a suite description of ``v``, ``l(u)`` and ``uw``.

    Program: ``self_delim(description of v) self_delim(l(u)) uw``.
    """

    name = "substring"
    description = "self_delim(desc(v)) self_delim(l(u)) uw -> u v w"

    def __init__(self, inner: DecoderSuite):
        self.inner = inner

    def decode(self, program, side=None, limit=None):
        try:
            desc, pos = read_self_delim(program)
            lu, pos = read_self_delim_nat(program, pos)
        except CodeError:
            return None
        uw = program[pos:]
        if lu > len(uw):
            return None
        v = self.inner.decode(desc, None, None if limit is None else limit - len(uw))
        if v is None:
            return None
        out = uw[:lu] + v + uw[lu:]
        return None if _too_long(len(out), limit) else out

    @staticmethod
    def program(v_description: str, u: str, w: str) -> str:
        return self_delim(v_description) + self_delim_nat(len(u)) + u + w


@dataclass
class SubstringReport:
    x: str
    u: str
    v: str
    w: str
    C_x: int
    C_v: int
    composite_cost: int
    log_term: int
    reproduced: bool
    suite_version: str

    @property
    def rhs(self) -> int:
        return self.C_v + len(self.u) + len(self.w) + self.log_term

    @property
    def holds(self) -> bool:
        return self.reproduced and self.C_x <= self.rhs

    @property
    def slack(self) -> int:
        return self.rhs - self.C_x


def substring_overhead_bound(length: int, tag_len: int) -> int:
    """Ceiling on the composite log-term for ``l(x) = length``.

    With ``k = floor(log2 length)``: the description of ``v`` is at most the
    literal ceiling, so wrapping it costs ``<= 2k + 7``; ``self_delim(l(u))``
    costs ``<= 2k + 4``.  Hence ``4k + tag_len + 11``.
    """
    k = int(math.log2(length)) if length > 0 else 0
    return 4 * k + tag_len + 11


def substring_bound_check(x: str, split: tuple[str, str, str],
                          suite: DecoderSuite | None = None) -> SubstringReport:
    u, v, w = split
    if u + v + w != x:
        raise ValueError("split does not concatenate to x")
    base = suite or shared_suite()
    ev = base.estimate(v)
    composite = base.with_decoder(Substring(base))
    tag = composite.tag_of("substring")
    prog = Substring.program(ev.description, u, w)
    reproduced = composite.decode(tag + prog) == x
    composite_cost = len(tag) + len(prog)
    C_x = min(base.estimate(x).value, composite_cost)
    log_term = composite_cost - ev.value - len(u) - len(w)
    return SubstringReport(x, u, v, w, C_x, ev.value, composite_cost, log_term,
                           reproduced, composite.version)


def census_threshold(n: int, c: int) -> int:
    """``log n + c`` with ``log n`` read as ``l(n) = floor(log2(n + 1))``."""
    return nat_length(n) + c


@dataclass
class CensusRow:
    n: int
    c: int
    threshold: int
    d_An: int
    prefix_closed: int


@dataclass
class CensusReport:
    rows: list[CensusRow] = field(default_factory=list)
    suite_version: str = BASE_VERSION

    def get(self, n: int, c: int) -> CensusRow:
        for r in self.rows:
            if r.n == n and r.c == c:
                return r
        raise KeyError((n, c))


def a_n_census(n_max: int, c_values: Iterable[int],
               suite: DecoderSuite | None = None) -> CensusReport:
    """Count ``A_n = {x in {0,1}^n : Ĉ(x) <= l(n) + c}`` and its prefix-closed part."""
    if not 1 <= n_max <= 18:
        raise BudgetError(f"census supports 1 <= n_max <= 18, got {n_max}")
    suite = suite or shared_suite()
    report = CensusReport(suite_version=suite.version)
    for c in c_values:
        closed = {""}
        for n in range(1, n_max + 1):
            t = census_threshold(n, c)
            if t >= literal_ceiling(n, suite):
                members = None  # every word qualifies
                d = 1 << n
            else:
                members = {x for x in suite.descriptions(t, out_len=n)}
                d = len(members)
            if members is None:
                closed = {p + b for p in closed for b in "01"}
            else:
                closed = {p + b for p in closed for b in "01" if p + b in members}
            report.rows.append(CensusRow(n, c, t, d, len(closed)))
    return report
