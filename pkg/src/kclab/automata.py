"""Deterministic finite and pushdown automata.

States are the integers ``0 .. n_states - 1``.  Input and stack symbols are
single characters so that words stay plain strings.

A :class:`Dfa` carries an accepting *set* rather than a single final state.
A :class:`Dpda` accepts by final state once the whole input is consumed and
any forced epsilon moves have been taken.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence


class AutomatonError(ValueError):
    pass


class AlphabetError(AutomatonError):
    def __init__(self, symbol: str, position: int):
        self.symbol = symbol
        self.position = position
        super().__init__(f"symbol {symbol!r} at position {position} is not in the alphabet")


class AlphabetMismatchError(AutomatonError):
    pass


class EpsilonLoopError(AutomatonError):
    def __init__(self, limit: int, position: int, state: int):
        self.limit = limit
        self.position = position
        self.state = state
        super().__init__(
            f"{limit} consecutive epsilon moves at input position {position} (state {state})"
        )


class LoadError(AutomatonError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _check_symbols(symbols: Iterable[str], what: str) -> tuple[str, ...]:
    out = tuple(symbols)
    if not out:
        raise AutomatonError(f"{what} must be nonempty")
    for s in out:
        if not isinstance(s, str) or len(s) != 1:
            raise AutomatonError(f"{what} symbols must be single characters, got {s!r}")
    if len(set(out)) != len(out):
        raise AutomatonError(f"duplicate symbol in {what}")
    return out


@dataclass(frozen=True)
class Dfa:
    alphabet: tuple[str, ...]
    n_states: int
    transitions: Mapping[tuple[int, str], int]
    start: int = 0
    accepting: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_symbols(self.alphabet, "alphabet"))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "transitions", dict(self.transitions))
        if self.n_states < 1:
            raise AutomatonError("a Dfa needs at least one state")
        states = range(self.n_states)
        if self.start not in states:
            raise AutomatonError(f"start state {self.start} out of range")
        for q in self.accepting:
            if q not in states:
                raise AutomatonError(f"accepting state {q} out of range")
        for q, a in product(states, self.alphabet):
            target = self.transitions.get((q, a))
            if target is None:
                raise AutomatonError(f"missing transition for state {q} on {a!r}")
            if target not in states:
                raise AutomatonError(f"transition ({q}, {a!r}) targets unknown state {target}")
        extra = set(self.transitions) - set(product(states, self.alphabet))
        if extra:
            raise AutomatonError(f"transitions on unknown (state, symbol) pairs: {sorted(extra)}")

    @property
    def states(self) -> range:
        return range(self.n_states)

    def step(self, q: int, a: str) -> int:
        return self.transitions[(q, a)]

    def state_after(self, w: str, q: int | None = None) -> int:
        """Extended transition function: the state reached from ``q`` on ``w``."""
        q = self.start if q is None else q
        for i, a in enumerate(w):
            try:
                q = self.transitions[(q, a)]
            except KeyError:
                raise AlphabetError(a, i) from None
        return q

    def run(self, w: str) -> tuple[int, bool]:
        q = self.state_after(w)
        return q, q in self.accepting

    def accepts(self, w: str, q: int | None = None) -> bool:
        return self.state_after(w, q) in self.accepting

    def reachable(self) -> list[int]:
        seen = {self.start}
        order = [self.start]
        queue = deque(order)
        while queue:
            q = queue.popleft()
            for a in self.alphabet:
                r = self.transitions[(q, a)]
                if r not in seen:
                    seen.add(r)
                    order.append(r)
                    queue.append(r)
        return order


def dfa_run(a: Dfa, w: str) -> tuple[int, bool]:
    return a.run(w)


def complement(a: Dfa) -> Dfa:
    return Dfa(a.alphabet, a.n_states, a.transitions, a.start,
               frozenset(a.states) - a.accepting)


def _product(a: Dfa, b: Dfa, accept) -> Dfa:
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatchError(
            f"alphabets differ: {''.join(a.alphabet)!r} vs {''.join(b.alphabet)!r}"
        )
    start = (a.start, b.start)
    index = {start: 0}
    queue = deque([start])
    trans = {}
    while queue:
        p = queue.popleft()
        for s in a.alphabet:
            r = (a.step(p[0], s), b.step(p[1], s))
            if r not in index:
                index[r] = len(index)
                queue.append(r)
            trans[(index[p], s)] = index[r]
    acc = {i for (p, q), i in index.items() if accept(p in a.accepting, q in b.accepting)}
    return Dfa(a.alphabet, len(index), trans, 0, acc)


def union(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x or y)


def intersection(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x and y)


def dfa_combine(op: str, a: Dfa, b: Dfa | None = None) -> Dfa:
    if op == "complement":
        if b is not None:
            raise AutomatonError("complement takes a single machine")
        return complement(a)
    if b is None:
        raise AutomatonError(f"{op} needs two machines")
    if op == "union":
        return union(a, b)
    if op == "intersection":
        return intersection(a, b)
    raise AutomatonError(f"unknown operation {op!r}; expected complement, union or intersection")


def dfa_minimize(a: Dfa) -> Dfa:
    """Minimal equivalent machine (Moore partition refinement on reachable states).

    States of the result are numbered in breadth-first order from the start
    state, so two minimal machines for the same language are identical up to
    the ordering of the alphabet.
    """
    reach = a.reachable()
    block = {q: int(q in a.accepting) for q in reach}
    n_blocks = len(set(block.values()))
    while True:
        signature = {q: (block[q],) + tuple(block[a.step(q, s)] for s in a.alphabet)
                     for q in reach}
        ids: dict[tuple, int] = {}
        new_block = {q: ids.setdefault(signature[q], len(ids)) for q in reach}
        block = new_block
        if len(ids) == n_blocks:
            break
        n_blocks = len(ids)
    # renumber in BFS order over the quotient
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    order = {block[a.start]: 0}
    queue = deque([block[a.start]])
    trans = {}
    while queue:
        b = queue.popleft()
        q = rep[b]
        for s in a.alphabet:
            t = block[a.step(q, s)]
            if t not in order:
                order[t] = len(order)
                queue.append(t)
            trans[(order[b], s)] = order[t]
    acc = {order[block[q]] for q in reach if q in a.accepting}
    return Dfa(a.alphabet, len(order), trans, 0, acc)


def distinguishing_word(a: Dfa, b: Dfa) -> str | None:
    """Shortest (length-lex least) word on which ``a`` and ``b`` disagree."""
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatchError("alphabets differ")
    symbols = sorted(a.alphabet)
    start = (a.start, b.start)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        if (p[0] in a.accepting) != (p[1] in b.accepting):
            word = []
            while parent[p] is not None:
                p, s = parent[p]
                word.append(s)
            return "".join(reversed(word))
        for s in symbols:
            r = (a.step(p[0], s), b.step(p[1], s))
            if r not in parent:
                parent[r] = (p, s)
                queue.append(r)
    return None


def dfa_equiv(a: Dfa, b: Dfa) -> bool:
    return distinguishing_word(a, b) is None


# ---------------------------------------------------------------------------
# pushdown automata

EPS = None


@dataclass(frozen=True)
class Move:
    target: int
    push: str  # written top-last; "" pops


@dataclass(frozen=True)
class Dpda:
    alphabet: tuple[str, ...]
    stack_alphabet: tuple[str, ...]
    n_states: int
    transitions: Mapping[tuple[int, str | None, str], Move]
    start: int = 0
    accepting: frozenset[int] = field(default_factory=frozenset)
    bottom: str = "Z"

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_symbols(self.alphabet, "alphabet"))
        object.__setattr__(self, "stack_alphabet",
                           _check_symbols(self.stack_alphabet, "stack alphabet"))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        trans = {}
        for key, move in dict(self.transitions).items():
            if not isinstance(move, Move):
                move = Move(*move)
            trans[key] = move
        object.__setattr__(self, "transitions", trans)
        self._validate()

    def _validate(self):
        states = range(self.n_states)
        if self.n_states < 1:
            raise AutomatonError("a Dpda needs at least one state")
        if self.start not in states:
            raise AutomatonError(f"start state {self.start} out of range")
        if self.bottom not in self.stack_alphabet:
            raise AutomatonError(f"bottom marker {self.bottom!r} not in stack alphabet")
        for q in self.accepting:
            if q not in states:
                raise AutomatonError(f"accepting state {q} out of range")
        for (q, a, top), move in self.transitions.items():
            where = f"transition ({q}, {'eps' if a is None else a}, {top})"
            if q not in states or move.target not in states:
                raise AutomatonError(f"{where} uses an unknown state")
            if a is not None and a not in self.alphabet:
                raise AutomatonError(f"{where} reads a symbol outside the alphabet")
            if top not in self.stack_alphabet:
                raise AutomatonError(f"{where} has unknown stack top")
            for s in move.push:
                if s not in self.stack_alphabet:
                    raise AutomatonError(f"{where} pushes unknown symbol {s!r}")
            if top == self.bottom:
                if not move.push.startswith(self.bottom) or self.bottom in move.push[1:]:
                    raise AutomatonError(
                        f"{where} must keep the bottom marker and not push it again"
                    )
            elif self.bottom in move.push:
                raise AutomatonError(f"{where} pushes the bottom marker")
            if a is None:
                clash = [b for b in self.alphabet if (q, b, top) in self.transitions]
                if clash:
                    raise AutomatonError(
                        f"nondeterministic: {where} coexists with an input move on {clash[0]!r}"
                    )

    @property
    def default_eps_limit(self) -> int:
        return 10 * self.n_states * len(self.stack_alphabet)

    def run(self, w: str, eps_limit: int | None = None,
            checkpoints: Iterable[int] = ()) -> "RunTrace":
        return dpda_run(self, w, eps_limit, checkpoints)

    def accepts(self, w: str) -> bool:
        return dpda_run(self, w).accepted


@dataclass(frozen=True)
class Step:
    position: int     # input symbols consumed after this step
    state: int
    height: int
    consumed: bool    # False for epsilon moves


@dataclass
class RunTrace:
    input: str
    steps: list[Step]
    final_state: int
    accepted: bool
    stuck: bool
    final_stack: str  # bottom first
    checkpoints: dict[int, str] = field(default_factory=dict)
    # states/stacks right after each consuming move, indexed by position - 1
    consume_states: list[int] = field(default_factory=list)
    consume_tops: list[str] = field(default_factory=list)

    @property
    def consumed(self) -> int:
        return self.steps[-1].position if self.steps else 0

    @property
    def heights_after_symbols(self) -> list[int]:
        return [s.height for s in self.steps if s.consumed]


def dpda_run(m: Dpda, w: str, eps_limit: int | None = None,
             checkpoints: Iterable[int] = ()) -> RunTrace:
    """Run ``m`` on ``w`` deterministically, recording every move.

    ``checkpoints`` are input positions at which the full stack is copied
    into the trace (taken right after the consuming move that reaches the
    position; position 0 means the initial stack).  The final stack is
    always recorded.
    """
    for i, a in enumerate(w):
        if a not in m.alphabet:
            raise AlphabetError(a, i)
    limit = m.default_eps_limit if eps_limit is None else eps_limit
    wanted = set(checkpoints)
    stack = [m.bottom]
    q = m.start
    pos = 0
    steps = [Step(0, q, 1, False)]
    snaps = {0: m.bottom} if 0 in wanted else {}
    states, tops = [], []
    eps_run = 0
    stuck = False
    while True:
        top = stack[-1]
        move = m.transitions.get((q, None, top))
        if move is not None:
            eps_run += 1
            if eps_run > limit:
                raise EpsilonLoopError(limit, pos, q)
            consumed = False
        elif pos < len(w):
            move = m.transitions.get((q, w[pos], top))
            if move is None:
                stuck = True
                break
            pos += 1
            eps_run = 0
            consumed = True
        else:
            break
        stack.pop()
        stack.extend(move.push)
        q = move.target
        steps.append(Step(pos, q, len(stack), consumed))
        if consumed:
            states.append(q)
            tops.append(stack[-1])
            if pos in wanted:
                snaps[pos] = "".join(stack)
    accepted = (not stuck) and q in m.accepting
    return RunTrace(w, steps, q, accepted, stuck, "".join(stack), snaps, states, tops)


# ---------------------------------------------------------------------------
# text format

def _parse_int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise LoadError(f"{what} must be a decimal integer, got {tok!r}", line) from None


def loads(text: str) -> Dfa | Dpda:
    """Parse the line-oriented automaton format (see README)."""
    kind = None
    alphabet = stack = bottom = None
    n_states = start = None
    accept: list[int] = []
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        key, args = line[0], line[1:]
        if kind is None:
            if key != "type" or len(args) != 1 or args[0] not in ("dfa", "dpda"):
                raise LoadError("first directive must be 'type dfa' or 'type dpda'", lineno)
            kind = args[0]
        elif key == "alphabet":
            alphabet = args
        elif key == "states":
            if len(args) != 1:
                raise LoadError("'states' takes one count", lineno)
            n_states = _parse_int(args[0], lineno, "state count")
        elif key == "start":
            if len(args) != 1:
                raise LoadError("'start' takes one state", lineno)
            start = _parse_int(args[0], lineno, "start state")
        elif key == "accept":
            accept.extend(_parse_int(t, lineno, "accepting state") for t in args)
        elif key == "stack" and kind == "dpda":
            stack = args
        elif key == "bottom" and kind == "dpda":
            if len(args) != 1:
                raise LoadError("'bottom' takes one symbol", lineno)
            bottom = args[0]
        elif key == "trans":
            rows.append((lineno, args))
        else:
            raise LoadError(f"unknown directive {key!r}", lineno)
    if kind is None:
        raise LoadError("empty automaton description", 1)
    for name, val in (("alphabet", alphabet), ("states", n_states), ("start", start)):
        if val is None:
            raise LoadError(f"missing '{name}' directive", lineno)
    if kind == "dfa":
        trans = {}
        for ln, args in rows:
            if len(args) != 3:
                raise LoadError("dfa transitions are 'trans <q> <symbol> <q'>'", ln)
            q, a, r = _parse_int(args[0], ln, "state"), args[1], _parse_int(args[2], ln, "state")
            if (q, a) in trans:
                raise LoadError(f"duplicate transition for ({q}, {a})", ln)
            trans[(q, a)] = r
            try:
                _check_partial(q, a, r, n_states, alphabet)
            except AutomatonError as exc:
                raise LoadError(str(exc), ln) from None
        try:
            return Dfa(tuple(alphabet), n_states, trans, start, frozenset(accept))
        except AutomatonError as exc:
            raise LoadError(str(exc), lineno) from None
    if stack is None or bottom is None:
        raise LoadError("dpda needs 'stack' and 'bottom' directives", lineno)
    trans = {}
    for ln, args in rows:
        if len(args) != 5:
            raise LoadError("dpda transitions are 'trans <q> <symbol|eps> <top> <q'> <push|->'", ln)
        q, a, top, r, push = args
        key = (_parse_int(q, ln, "state"), None if a == "eps" else a, top)
        if key in trans:
            raise LoadError(f"duplicate transition for ({q}, {a}, {top})", ln)
        trans[key] = Move(_parse_int(r, ln, "state"), "" if push == "-" else push)
        try:
            Dpda(tuple(alphabet), tuple(stack), n_states, trans, start, frozenset(accept), bottom)
        except AutomatonError as exc:
            raise LoadError(str(exc), ln) from None
    try:
        return Dpda(tuple(alphabet), tuple(stack), n_states, trans, start,
                    frozenset(accept), bottom)
    except AutomatonError as exc:
        raise LoadError(str(exc), lineno) from None


def _check_partial(q, a, r, n_states, alphabet):
    if not 0 <= q < n_states or not 0 <= r < n_states:
        raise AutomatonError(f"transition ({q}, {a}) uses a state outside 0..{n_states - 1}")
    if a not in alphabet:
        raise AutomatonError(f"transition symbol {a!r} not in alphabet")


def load(path) -> Dfa | Dpda:
    with open(path) as fh:
        return loads(fh.read())


def dumps(machine: Dfa | Dpda) -> str:
    lines = []
    if isinstance(machine, Dfa):
        lines.append("type dfa")
    else:
        lines.append("type dpda")
    lines.append("alphabet " + " ".join(machine.alphabet))
    lines.append(f"states {machine.n_states}")
    lines.append(f"start {machine.start}")
    lines.append("accept " + " ".join(str(q) for q in sorted(machine.accepting)))
    if isinstance(machine, Dfa):
        for q in machine.states:
            for a in machine.alphabet:
                lines.append(f"trans {q} {a} {machine.step(q, a)}")
    else:
        lines.append("stack " + " ".join(machine.stack_alphabet))
        lines.append(f"bottom {machine.bottom}")
        for (q, a, top), mv in sorted(machine.transitions.items(),
                                      key=lambda kv: (kv[0][0], kv[0][1] or "", kv[0][2])):
            lines.append(f"trans {q} {'eps' if a is None else a} {top} "
                         f"{mv.target} {mv.push or '-'}")
    return "\n".join(lines) + "\n"


def from_table(alphabet: Sequence[str], table: Sequence[Sequence[int]],
               accepting: Iterable[int], start: int = 0) -> Dfa:
    """Build a Dfa from ``table[q][i]`` = target of state ``q`` on ``alphabet[i]``."""
    trans = {(q, a): row[i] for q, row in enumerate(table) for i, a in enumerate(alphabet)}
    return Dfa(tuple(alphabet), len(table), trans, start, frozenset(accepting))
