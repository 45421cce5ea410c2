"""Stack analysis of deterministic pushdown automata.

Heights count stack symbols including the bottom marker, so an empty
working stack has height 1.  Heights are sampled right after each
input-consuming move.

Reading-order convention: the left-infinite context ``... y y x`` is
simulated as the finite input ``y^k x`` for a chosen block count ``k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .automata import Dpda, dpda_run
from .codec import nat_to_word
from .kolmogorov import DecoderSuite, shared_suite, to_binary
from .zoo import LanguageOracle, LengthLex

READING_ORDER = "u = y^k x is read left to right (suffix of the left-infinite ...yyx), then v"


class HorizonExhaustedError(RuntimeError):
    def __init__(self, max_blocks: int, history: int):
        self.max_blocks = max_blocks
        self.history = history
        super().__init__(
            f"no repeated triple within {max_blocks} blocks ({history} triples recorded)"
        )


class ConstructionFailedError(RuntimeError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass
class StackProfile:
    word: str
    heights: list[int]
    suffix_minima: list[int]
    final_stack: str
    initial_height: int = 1
    stuck: bool = False

    def sparkline(self) -> str:
        digits = "0123456789abcdefghijklmnopqrstuvwxyz"
        return "".join(digits[h] if h < len(digits) else "+" for h in self.heights)


def _suffix_minima(heights: list[int]) -> list[int]:
    out = list(heights)
    for i in range(len(out) - 2, -1, -1):
        out[i] = min(out[i], out[i + 1])
    return out


def stack_profile(m: Dpda, w: str, eps_limit: int | None = None) -> StackProfile:
    trace = dpda_run(m, w, eps_limit)
    heights = trace.heights_after_symbols
    return StackProfile(w, heights, _suffix_minima(heights), trace.final_stack,
                        trace.steps[0].height, trace.stuck)


CASE1 = "Case1"
CASE2 = "Case2"


@dataclass
class Classification:
    case: str
    height_after_u: int
    position: int | None      # Case1: length of v'
    min_height: int           # over the v phase, including the start
    heights: list[int]        # heights at v positions 0..len(v) actually reached
    c1: int
    stuck: bool = False

    @property
    def v_prime_length(self) -> int | None:
        return self.position


def default_c1(m: Dpda) -> int:
    return len(m.stack_alphabet) + 1


def _height_after_prefix(trace, k: int) -> int:
    """Stack height at the moment the k-th input symbol is consumed."""
    if k == 0:
        return trace.steps[0].height
    hs = trace.heights_after_symbols
    return hs[k - 1]


def case_classify(m: Dpda, u: str, v: str, c1: int | None = None,
                  eps_limit: int | None = None) -> Classification:
    """Case1 once the stack height drops to ``c1`` or below while reading ``v``."""
    c1 = default_c1(m) if c1 is None else c1
    if c1 < 1:
        raise ValueError("c1 must be >= 1")
    trace = dpda_run(m, u + v, eps_limit)
    hs = trace.heights_after_symbols
    if len(hs) < len(u):
        raise PreconditionError(f"machine is stuck after {len(hs)} symbols of u")
    v_heights = [_height_after_prefix(trace, len(u))] + hs[len(u):]
    for j, h in enumerate(v_heights):
        if h <= c1:
            return Classification(CASE1, v_heights[0], j, min(v_heights), v_heights, c1,
                                  trace.stuck)
    return Classification(CASE2, v_heights[0], None, min(v_heights), v_heights, c1,
                          trace.stuck)


@dataclass
class CycleReport:
    preamble: int            # blocks read before the first occurrence
    period: int              # blocks between occurrences
    growth: int              # stack symbols added per period
    triple: tuple[int, int, str]
    first_step: int          # input positions (symbols consumed) of both occurrences
    second_step: int
    heights: tuple[int, int]

    def pigeonhole_bound(self, m: Dpda, y: str) -> int:
        return m.n_states * len(m.stack_alphabet) * len(y)


def cycle_detect(m: Dpda, x: str, y: str, max_blocks: int = 64,
                 eps_limit: int | None = None) -> CycleReport | None:
    """First repeated (state, offset-in-y, stack-top) at never-popped levels.

    Simulates ``y^max_blocks x``.  Returns ``None`` when the repetition has
    zero growth, i.e. the stack stays bounded on the repeated input.
    """
    if not y:
        raise ValueError("y must be nonempty")
    u = y * max_blocks + x
    trace = dpda_run(m, u, eps_limit)
    steps = trace.steps
    # minimum post-move height over all later moves
    later_min = [0] * len(steps)
    running = math.inf
    for i in range(len(steps) - 1, -1, -1):
        later_min[i] = running
        running = min(running, steps[i].height)
    region = len(y) * max_blocks
    seen: dict[tuple[int, int, str], tuple[int, int]] = {}
    k = 0
    for i, st in enumerate(steps):
        if not st.consumed:
            continue
        k += 1
        if k > region:
            break
        if later_min[i] < st.height:
            continue
        triple = (st.state, k % len(y), trace.consume_tops[k - 1])
        if triple in seen:
            k1, h1 = seen[triple]
            growth = st.height - h1
            if growth == 0:
                return None
            return CycleReport((k1 - 1) // len(y), (k - k1) // len(y), growth, triple,
                               k1, k, (h1, st.height))
        seen[triple] = (k, st.height)
    raise HorizonExhaustedError(max_blocks, len(seen))


@dataclass
class ExperimentReport:
    machine: str
    x: str
    y: str
    blocks: int
    v: str
    c1: int
    classification: Classification
    stack_u: str
    profile: StackProfile
    acceptance_bits: str
    cycle: CycleReport | None = None
    u_prime_blocks: int | None = None
    stack_u_prime: str | None = None
    same_state: bool | None = None
    same_top_segment: bool | None = None
    C_v: int | None = None
    C_lu_prime: int | None = None
    loglog_m: float | None = None
    w: str | None = None
    C_w: int | None = None
    suite_version: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        if self.classification.case == CASE2:
            return bool(self.same_state and self.same_top_segment)
        return True


def _state_after(m: Dpda, w: str, eps_limit=None) -> tuple[int, str, bool]:
    tr = dpda_run(m, w, eps_limit)
    return tr.final_state, tr.final_stack, tr.stuck


def top_segment(stack: str, height: int, c1: int) -> str:
    """Symbols of ``stack`` above level ``c1`` for a stack of the given height."""
    keep = max(0, height - c1)
    return stack[len(stack) - keep:] if keep else ""


def first_residual_word(m: Dpda, prefix: str, budget: int = 1 << 12,
                        include_empty: bool = True) -> str | None:
    e = LengthLex(m.alphabet)
    for i in range(1, budget + 1):
        y = e(i)
        if not y and not include_empty:
            continue
        if dpda_run(m, prefix + y).accepted:
            return y
    return None


def kcdcfl_experiment(m: Dpda, x: str, y: str, omega: str, n: int,
                      c1: int | None = None, blocks: int = 8, name: str = "dpda",
                      oracle: LanguageOracle | None = None, sample_len: int = 8,
                      max_blocks: int = 256, max_periods: int = 16,
                      suite: DecoderSuite | None = None) -> ExperimentReport:
    """Run the u/v dichotomy for ``u = y^blocks x`` and ``v = omega[:n]``."""
    if oracle is not None:
        diff = dpda_vs_oracle_diff(m, oracle, sample_len)
        if diff.disagreement is not None:
            raise PreconditionError(
                f"machine disagrees with {oracle.name} on {diff.disagreement!r}"
            )
    if n > len(omega):
        raise ValueError(f"omega prefix has only {len(omega)} symbols, n = {n}")
    c1 = default_c1(m) if c1 is None else c1
    suite = suite or shared_suite()
    u = y * blocks + x
    v = omega[:n]
    cls = case_classify(m, u, v, c1)
    q_u, stack_u, _ = _state_after(m, u)
    profile = stack_profile(m, u + v)
    acc = "".join("1" if dpda_run(m, u + v[:i]).accepted else "0" for i in range(len(v) + 1))
    report = ExperimentReport(name, x, y, blocks, v, c1, cls, stack_u, profile, acc,
                              suite_version=suite.version)
    report.notes.append(READING_ORDER)
    report.notes.append(f"stack measured in symbols; 1 symbol = "
                        f"{max(1, math.ceil(math.log2(len(m.stack_alphabet))))} bits")
    vb = to_binary(v, m.alphabet)
    report.C_v = suite.C(vb)
    if cls.case == CASE2:
        cyc = cycle_detect(m, x, y, max(max_blocks, blocks + 1))
        report.cycle = cyc
        if cyc is None:
            report.notes.append("stack bounded on repeated y: reduces to Case1 with v = ε")
        else:
            h_u = cls.height_after_u
            want = top_segment(stack_u, h_u, c1)
            for j in range(1, max_periods + 1):
                k2 = blocks + j * cyc.period
                q2, stack2, _ = _state_after(m, y * k2 + x)
                same_state = q2 == q_u
                same_top = stack2.endswith(want) and len(stack2) >= len(want)
                if same_state and same_top:
                    report.u_prime_blocks = k2
                    report.stack_u_prime = stack2
                    report.same_state = True
                    report.same_top_segment = True
                    break
            else:
                raise ConstructionFailedError(
                    f"no u' = y^(blocks + j*{cyc.period}) x with j <= {max_periods} "
                    "matches the state and top segment of u"
                )
            lu2 = len(y) * report.u_prime_blocks + len(x)
            report.C_lu_prime = suite.C(nat_to_word(lu2))
            report.loglog_m = math.log2(math.log2(len(u))) if len(u) > 2 else 0.0
    w = first_residual_word(m, u + v)
    report.w = w
    if w is not None:
        report.C_w = suite.C(to_binary(w, m.alphabet))
    return report


@dataclass
class DiffResult:
    disagreement: str | None
    checked: int
    machine_accepts: bool | None = None

    @property
    def agrees(self) -> bool:
        return self.disagreement is None


def dpda_vs_oracle_diff(m: Dpda, L: LanguageOracle, max_len: int) -> DiffResult:
    """Scan all words shorter than ``max_len`` in length-lex order."""
    if set(m.alphabet) != set(L.alphabet):
        raise PreconditionError(
            f"alphabets differ: {''.join(m.alphabet)!r} vs {''.join(L.alphabet)!r}"
        )
    checked = 0
    for w in LengthLex(L.alphabet).words(max_len - 1) if max_len > 0 else ():
        checked += 1
        got = dpda_run(m, w).accepted
        if got != L.member(w):
            return DiffResult(w, checked, got)
    return DiffResult(None, checked)
