"""Characteristic sequences of residual languages and residual tables.

The row of a word ``x`` is ``chi_1 .. chi_n`` with ``chi_i = [x y_i in L]``
where ``y_i`` runs over Σ* in length-lex order starting from ε.  Distinct
rows lower-bound the number of Myhill-Nerode classes; a closed and
consistent table yields a hypothesis Dfa.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .automata import Dfa
from .kolmogorov import (
    DecoderSuite, install_characteristic_decoder, shared_suite,
)
from .zoo import LanguageOracle, LengthLex

DEFAULT_CELL_LIMIT = 1 << 22


class TableBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class CharSeq:
    x: str
    language: str
    bits: str

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return self.bits


def _columns(L: LanguageOracle, n: int) -> list[str]:
    e = LengthLex(L.alphabet)
    return [e(i) for i in range(1, n + 1)]


def chi_prefix(L: LanguageOracle, x: str, n: int) -> CharSeq:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bits = "".join("1" if L.member(x + y) else "0" for y in _columns(L, n))
    return CharSeq(x, L.name, bits)


def row_count(alphabet_size: int, P: int) -> int:
    return sum(alphabet_size ** k for k in range(P + 1))


@dataclass
class ResidualTable:
    language: str
    alphabet: tuple[str, ...]
    P: int
    n: int
    labels: list[str]
    rows: dict[str, str]

    @property
    def distinct_row_count(self) -> int:
        return len(set(self.rows[x] for x in self.labels))

    def distinct_upto(self, p: int) -> int:
        return len({self.rows[x] for x in self.labels if len(x) <= p})

    def classes(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for x in self.labels:
            out.setdefault(self.rows[x], []).append(x)
        return out


def _check_budget(n_rows: int, n: int, cell_limit: int):
    if n_rows * n > cell_limit:
        raise TableBudgetError(
            f"{n_rows} rows x {n} columns exceeds the cell limit {cell_limit}; "
            "use a smaller P or n"
        )


def residual_table(L: LanguageOracle, P: int, n: int,
                   cell_limit: int = DEFAULT_CELL_LIMIT, extend: bool = False) -> ResidualTable:
    """Rows for every word of length <= P (and <= P + 1 with ``extend``)."""
    depth = P + 1 if extend else P
    k = len(L.alphabet)
    _check_budget(row_count(k, depth), n, cell_limit)
    cols = _columns(L, n)
    labels = list(LengthLex(L.alphabet).words(depth))
    rows = {x: "".join("1" if L.member(x + y) else "0" for y in cols) for x in labels}
    return ResidualTable(L.name, L.alphabet, P, n, [x for x in labels if len(x) <= P], rows)


@dataclass
class Inconclusive:
    reason: str
    row: str
    detail: str = ""

    def __bool__(self):
        return False


def synthesize_from_table(L: LanguageOracle, table: ResidualTable) -> Dfa | Inconclusive:
    rows = table.rows
    access: dict[str, str] = {}
    for x in table.labels:
        access.setdefault(rows[x], x)
    # closedness: each one-symbol extension lands on a known row
    for x in table.labels:
        for a in L.alphabet:
            if rows[x + a] not in access:
                return Inconclusive("not closed", x + a,
                                    f"row of {x + a!r} matches no row of length <= {table.P}")
    # consistency: equal rows have equal extensions
    for x in table.labels:
        rep = access[rows[x]]
        for a in L.alphabet:
            if rows[x + a] != rows[rep + a]:
                return Inconclusive("not consistent", x,
                                    f"{x!r} and {rep!r} agree but differ after {a!r}")
    index = {}
    for x in table.labels:
        index.setdefault(rows[x], len(index))
    trans = {}
    for r, i in index.items():
        rep = access[r]
        for a in L.alphabet:
            trans[(i, a)] = index[rows[rep + a]]
    acc = {i for r, i in index.items() if r[0] == "1"}
    dfa = Dfa(L.alphabet, len(index), trans, index[rows[""]], acc)
    for w in LengthLex(L.alphabet).words(table.P + 1):
        if dfa.accepts(w) != L.member(w):
            return Inconclusive("disagrees with oracle", w,
                                f"hypothesis and oracle differ on {w!r}")
    return dfa


def synthesize_dfa(L: LanguageOracle, P: int, n: int,
                   cell_limit: int = DEFAULT_CELL_LIMIT) -> Dfa | Inconclusive:
    table = residual_table(L, P, n, cell_limit, extend=True)
    return synthesize_from_table(L, table)


REGULAR_EVIDENCE = "regular-evidence"
NONREGULAR_EVIDENCE = "nonregular-evidence"
INCONCLUSIVE = "inconclusive"


@dataclass
class VerdictReport:
    language: str
    P_max: int
    n: int
    distinct: dict[int, int]
    rows: dict[int, int]
    verdict: str
    states: int | None
    synthesis: Dfa | Inconclusive
    complexity: list[dict] = field(default_factory=list)
    suite_version: str = ""

    @property
    def label(self) -> str:
        if self.verdict == REGULAR_EVIDENCE:
            return f"{REGULAR_EVIDENCE} (hypothesis: {self.states} states)"
        return self.verdict

    def max_conditional(self) -> dict[int, int]:
        """Largest Ĉ(chi_1:m | m) over distinct rows, per prefix length m."""
        out: dict[int, int] = {}
        for rec in self.complexity:
            for m, v in rec["conditional"].items():
                out[m] = max(out.get(m, 0), v)
        return out

    def max_unconditional(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for rec in self.complexity:
            for m, v in rec["unconditional"].items():
                out[m] = max(out.get(m, 0), v)
        return out


def _strict_run(counts: list[int], run: int) -> bool:
    """True when ``run`` consecutive values increase strictly somewhere."""
    streak = 1
    for prev, cur in zip(counts, counts[1:]):
        streak = streak + 1 if cur > prev else 1
        if streak >= run:
            return True
    return run <= 1


def prefix_lengths(n: int) -> list[int]:
    out = []
    m = 8
    while m < n:
        out.append(m)
        m *= 2
    out.append(n)
    return out


def regularity_verdict(L: LanguageOracle, P_max: int = 8, n: int = 64,
                       growth_run: int = 3, stable_run: int = 3,
                       suite: DecoderSuite | None = None,
                       cell_limit: int = DEFAULT_CELL_LIMIT,
                       max_rows_estimated: int = 64) -> VerdictReport:
    """Heuristic regular/nonregular evidence from residual tables.

    Regular evidence: the last ``stable_run`` distinct-row counts agree and
    the table at ``P_max`` synthesizes a Dfa.  Nonregular evidence: counts
    rise strictly across ``growth_run`` consecutive values of P.  Anything
    else is inconclusive.
    """
    table = residual_table(L, P_max, n, cell_limit, extend=True)
    ps = list(range(1, P_max + 1))
    distinct = {p: table.distinct_upto(p) for p in ps}
    rows = {p: row_count(len(L.alphabet), p) for p in ps}
    synth = synthesize_from_table(L, table)
    counts = [distinct[p] for p in ps]
    tail = counts[-stable_run:]
    if synth and len(tail) == stable_run and len(set(tail)) == 1:
        verdict, states = REGULAR_EVIDENCE, synth.n_states
    elif _strict_run(counts, growth_run):
        verdict, states = NONREGULAR_EVIDENCE, None
    else:
        verdict, states = INCONCLUSIVE, None

    suite = suite or shared_suite()
    if synth:
        suite = install_characteristic_decoder(suite, synth, f"hypothesis:{L.name}")
    complexity = []
    for r, labels in list(table.classes().items())[:max_rows_estimated]:
        rec = {"row_of": labels[0], "conditional": {}, "unconditional": {}}
        for m in prefix_lengths(n):
            rec["conditional"][m] = suite.C(r[:m], side=m)
            rec["unconditional"][m] = suite.C(r[:m])
        complexity.append(rec)
    return VerdictReport(L.name, P_max, n, distinct, rows, verdict, states, synth,
                         complexity, suite.version)
