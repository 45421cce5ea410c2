"""Command-line entry point: ``kclab <group> <command> ...``.

Exit status: 0 on success, 1 when an operation rejects its input, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import shlex
import sys
from typing import Sequence

from . import __version__
from . import automata, charseq, codec, dcfl, kolmogorov, machines, rec, zoo

# operation -> the one subcommand that reaches it
OPERATIONS = {
    "codec.nat_str_bijection": "encode bij",
    "codec.inverse": "decode bij",
    "codec.self_delim": "encode selfdelim",
    "codec.self_delim_decode": "decode selfdelim",
    "codec.pair": "encode pair",
    "codec.unpair": "decode pair",
    "automata.dfa_run": "dfa run",
    "automata.dfa_combine": "dfa combine",
    "automata.dfa_minimize": "dfa minimize",
    "automata.dfa_equiv": "dfa equiv",
    "automata.dpda_run": "dpda run",
    "zoo.zoo_oracle": "zoo member",
    "zoo.enumerate": "zoo enum",
    "zoo.nth_in_residual": "zoo nth",
    "charseq.chi_prefix": "chi",
    "charseq.residual_table": "table",
    "charseq.synthesize_dfa": "synth",
    "charseq.regularity_verdict": "verdict",
    "kolmogorov.estimate_C": "kc estimate",
    "kolmogorov.install_residual_decoder": "kc install",
    "kolmogorov.find_incompressible": "kc incompressible",
    "kolmogorov.substring_bound_check": "kc substring",
    "kolmogorov.a_n_census": "kc census",
    "dcfl.stack_profile": "dcfl profile",
    "dcfl.case_classify": "dcfl classify",
    "dcfl.cycle_detect": "dcfl cycle",
    "dcfl.kcdcfl_experiment": "dcfl experiment",
    "dcfl.dpda_vs_oracle_diff": "dcfl diff",
    "rec.lambda_prefix": "rec lambda",
    "rec.halting_prefix": "rec halting",
    "rec.sparse_sequence": "rec sparse",
    "rec.re_upperbound_probe": "rec reprobe",
}

# subcommands that expose no module operation
LISTINGS = ("zoo list",)

DOMAIN_ERRORS = (
    ValueError, KeyError, RuntimeError, automata.AutomatonError, codec.CodeError,
    OSError,
)


class Output:
    def __init__(self, argv: Sequence[str], stream):
        self.argv = list(argv)
        self.stream = stream

    def line(self, text: str = ""):
        self.stream.write(text + "\n")

    def header(self, suite_version: str | None = None):
        suite = suite_version or kolmogorov.shared_suite().version
        echo = " ".join(shlex.quote(a) for a in self.argv)
        self.line(f"# kclab {__version__} | Ĉ (suite {suite}) | {echo}")


def _machine(source: str):
    if source.startswith("builtin:"):
        return machines.builtin(source.split(":", 1)[1])
    return automata.load(source)


def _dfa(source: str) -> automata.Dfa:
    m = _machine(source)
    if not isinstance(m, automata.Dfa):
        raise ValueError(f"{source} is not a dfa")
    return m


def _dpda(source: str) -> automata.Dpda:
    m = _machine(source)
    if not isinstance(m, automata.Dpda):
        raise ValueError(f"{source} is not a dpda")
    return m


def _table(rows: list[list], out: Output):
    cells = [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    for r in cells:
        out.line("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())


def _csv(rows: list[list], out: Output):
    for r in rows:
        out.line(",".join(str(c) for c in r))


# -- handlers ---------------------------------------------------------------


def cmd_encode(args, out):
    if args.kind == "bij":
        out.line(codec.nat_to_word(int(args.values[0])))
    elif args.kind == "selfdelim":
        out.line(codec.self_delim(args.values[0]))
    elif args.kind == "pair":
        if len(args.values) == 2:
            out.line(str(codec.pair(*args.values)))
        elif len(args.values) == 3:
            out.line(str(codec.triple(*args.values)))
        else:
            raise ValueError("pair takes two or three words")


def cmd_decode(args, out):
    if args.kind == "bij":
        out.line(str(codec.word_to_nat(args.value)))
    elif args.kind == "selfdelim":
        x, rest = codec.self_delim_decode(args.value)
        out.line(f"x={x}")
        out.line(f"rest={rest}")
    elif args.kind == "pair":
        n = int(args.value)
        parts = codec.untriple(n) if args.triple else codec.unpair(n)
        for name, p in zip("xyz", parts):
            out.line(f"{name}={p}")


def cmd_dfa(args, out):
    a = _dfa(args.file)
    if args.action == "run":
        q, ok = a.run(args.input)
        out.line(f"state={q} {'accept' if ok else 'reject'}")
    elif args.action == "combine":
        b = _dfa(args.file2) if args.file2 else None
        out.stream.write(automata.dumps(automata.dfa_combine(args.op, a, b)))
    elif args.action == "minimize":
        out.stream.write(automata.dumps(automata.dfa_minimize(a)))
    elif args.action == "equiv":
        if not args.file2:
            raise ValueError("equiv needs --file2")
        w = automata.distinguishing_word(a, _dfa(args.file2))
        out.line("equivalent" if w is None else f"different on {w!r}")


def cmd_dpda(args, out):
    m = _dpda(args.file)
    tr = automata.dpda_run(m, args.input, args.eps_limit)
    out.line("pos state height move")
    for s in tr.steps:
        out.line(f"{s.position} {s.state} {s.height} {'read' if s.consumed else 'eps'}")
    status = "stuck" if tr.stuck else ("accept" if tr.accepted else "reject")
    out.line(f"result={status} state={tr.final_state} stack={tr.final_stack}")


def _enumerator(name: str, alphabet=("0", "1")):
    if name == "length-lex":
        return zoo.LengthLex(alphabet)
    if name == "prime":
        return zoo.PrimeEnumerator()
    raise ValueError(f"unknown enumerator {name!r}; expected length-lex or prime")


def cmd_zoo(args, out):
    if args.action == "list":
        for name in zoo.ZOO_NAMES:
            out.line(name)
    elif args.action == "member":
        L = zoo.zoo_oracle(args.lang)
        out.line("1" if L.member(args.word) else "0")
    elif args.action == "enum":
        out.line(zoo.enumerate_word(_enumerator(args.enumerator), args.i))
    elif args.action == "nth":
        L = zoo.zoo_oracle(args.lang)
        e = None if args.enumerator == "length-lex" else _enumerator(args.enumerator)
        out.line(zoo.nth_in_residual(L, args.x, args.n, e, args.complement,
                                     args.include_empty, args.budget))


def cmd_chi(args, out):
    out.line(charseq.chi_prefix(zoo.zoo_oracle(args.lang), args.x, args.n).bits)


def cmd_table(args, out):
    t = charseq.residual_table(zoo.zoo_oracle(args.lang), args.P, args.n)
    out.header()
    rows = [["row", "chi"]] + [[repr(x), t.rows[x]] for x in t.labels]
    (_csv if args.csv else _table)(rows, out)
    out.line(f"distinct_row_count={t.distinct_row_count}")


def cmd_synth(args, out):
    res = charseq.synthesize_dfa(zoo.zoo_oracle(args.lang), args.P, args.n)
    if res:
        out.stream.write(automata.dumps(res))
    else:
        out.line(f"inconclusive: {res.reason} at row {res.row!r} ({res.detail})")


def cmd_verdict(args, out):
    L = zoo.zoo_oracle(args.lang)
    r = charseq.regularity_verdict(L, args.P_max, args.n)
    out.header(r.suite_version)
    out.line("# heuristic evidence, not a proof")
    rows = [["P", "rows", "distinct", "verdict"]]
    for p in sorted(r.distinct):
        rows.append([p, r.rows[p], r.distinct[p], r.label if p == args.P_max else ""])
    if args.csv:
        _csv([[c for c in row] for row in rows], out)
    else:
        _table(rows, out)
        cond, uncond = r.max_conditional(), r.max_unconditional()
        out.line("max Ĉ(chi_1:m | m) over rows: "
                 + " ".join(f"m={m}:{v}" for m, v in cond.items()))
        out.line("max Ĉ(chi_1:m) over rows:     "
                 + " ".join(f"m={m}:{v}" for m, v in uncond.items()))
        out.line(f"verdict: {r.label}")


def _suite_from_args(args):
    suite = kolmogorov.shared_suite()
    for source in getattr(args, "residual_dfa", None) or []:
        suite = kolmogorov.install_residual_decoder(suite, _dfa(source), label=source)
    for source in getattr(args, "characteristic_dfa", None) or []:
        suite = kolmogorov.install_characteristic_decoder(suite, _dfa(source), label=source)
    return suite


def _estimate_lines(e, out):
    out.line(f"value={e.value}")
    out.line(f"decoder={e.decoder}")
    out.line(f"witness={e.witness_hex()}")


def cmd_kc(args, out):
    if args.action == "estimate":
        suite = _suite_from_args(args)
        e = suite.estimate(args.word, args.side)
        out.header(suite.version)
        _estimate_lines(e, out)
    elif args.action == "install":
        suite = kolmogorov.install_residual_decoder(
            kolmogorov.shared_suite(), _dfa(args.file), label=args.file)
        name = suite.decoders[-1].name
        out.header(suite.version)
        out.line(f"decoder={name}")
        out.line(f"tag={suite.tag_of(name)}")
        out.line(f"constant={kolmogorov.residual_constant(suite, name)}")
        if args.word is not None:
            _estimate_lines(suite.estimate(args.word), out)
    elif args.action == "incompressible":
        w = kolmogorov.find_incompressible(args.n, side=args.side)
        out.header()
        out.line(w)
    elif args.action == "substring":
        x = args.word
        i, j = args.split
        if not 0 <= i <= j <= len(x):
            raise ValueError(f"split points must satisfy 0 <= i <= j <= {len(x)}")
        r = kolmogorov.substring_bound_check(x, (x[:i], x[i:j], x[j:]))
        out.header(r.suite_version)
        for k in ("C_x", "C_v", "composite_cost", "log_term", "rhs", "slack",
                  "reproduced", "holds"):
            out.line(f"{k}={getattr(r, k)}")
    elif args.action == "census":
        rep = kolmogorov.a_n_census(args.n_max, args.c)
        out.header(rep.suite_version)
        out.line("# log n read as l(n) = floor(log2(n+1))")
        rows = [["n", "c", "threshold", "d_An", "prefix_closed"]]
        rows += [[r.n, r.c, r.threshold, r.d_An, r.prefix_closed] for r in rep.rows]
        (_csv if args.csv else _table)(rows, out)


def _profile_lines(p, out):
    out.line(f"heights={','.join(map(str, p.heights))}")
    out.line(f"sparkline={p.sparkline()}")
    out.line(f"suffix_minima={','.join(map(str, p.suffix_minima))}")
    out.line(f"final_stack={p.final_stack}")


def cmd_dcfl(args, out):
    if args.action == "diff":
        m = _dpda(args.file)
        r = dcfl.dpda_vs_oracle_diff(m, zoo.zoo_oracle(args.lang), args.max_len)
        out.header()
        if r.agrees:
            out.line(f"agreement checked={r.checked}")
        else:
            out.line(f"disagreement word={r.disagreement!r} checked={r.checked}")
        return
    m = _dpda(args.file)
    if args.action == "profile":
        out.header()
        _profile_lines(dcfl.stack_profile(m, args.input), out)
    elif args.action == "classify":
        c = dcfl.case_classify(m, args.u, args.v, args.c1)
        out.header()
        out.line(f"case={c.case}")
        out.line(f"c1={c.c1}")
        out.line(f"height_after_u={c.height_after_u}")
        out.line(f"min_height={c.min_height}")
        if c.position is not None:
            out.line(f"v_prime_length={c.position}")
    elif args.action == "cycle":
        c = dcfl.cycle_detect(m, args.x, args.y, args.max_blocks)
        out.header()
        if c is None:
            out.line("cycle=none (bounded stack)")
        else:
            for k in ("preamble", "period", "growth", "triple"):
                out.line(f"{k}={getattr(c, k)}")
    elif args.action == "experiment":
        oracle = zoo.zoo_oracle(args.lang) if args.lang else None
        r = dcfl.kcdcfl_experiment(m, args.x, args.y, args.omega, args.n, args.c1,
                                   args.blocks, name=args.file, oracle=oracle)
        out.header(r.suite_version)
        _experiment(r, out, args.csv)


def _experiment(r, out, csv):
    c = r.classification
    kv = [
        ("machine", r.machine), ("x", r.x), ("y", r.y), ("blocks", r.blocks),
        ("v", r.v), ("c1", r.c1), ("case", c.case),
        ("height_after_u", c.height_after_u), ("min_height", c.min_height),
        ("v_prime_length", c.position), ("stack_u", r.stack_u),
        ("acceptance_bits", r.acceptance_bits),
        ("cycle_period", r.cycle.period if r.cycle else None),
        ("cycle_growth", r.cycle.growth if r.cycle else None),
        ("u_prime_blocks", r.u_prime_blocks), ("stack_u_prime", r.stack_u_prime),
        ("same_state", r.same_state), ("same_top_segment", r.same_top_segment),
        ("C_v", r.C_v), ("C_l(u')", r.C_lu_prime),
        ("loglog_m", None if r.loglog_m is None else f"{r.loglog_m:.3f}"),
        ("w", r.w), ("C_w", r.C_w),
    ]
    if csv:
        for k, v in kv:
            out.line(f"{k},{'' if v is None else v}")
        return
    out.line("[machine]")
    out.line(f"  {r.machine}")
    out.line("[parameters]")
    for k, v in kv[1:6]:
        out.line(f"  {k} = {v}")
    for note in r.notes:
        out.line(f"  note: {note}")
    out.line("[profile]")
    out.line(f"  {r.profile.sparkline()}")
    out.line("[classification]")
    for k, v in kv[6:12]:
        out.line(f"  {k} = {v}")
    out.line("[verification]")
    for k, v in kv[12:18]:
        out.line(f"  {k} = {v}")
    out.line(f"[Ĉ (suite {r.suite_version})]")
    for k, v in kv[18:]:
        out.line(f"  {k} = {v}")


def _semi(name: str, T: int):
    if name == "halting":
        return rec.bounded_halting(T)
    if name == "empty":
        return rec.empty_semi(T)
    return rec.oracle_semi(zoo.zoo_oracle(name), T)


def cmd_rec(args, out):
    if args.action == "lambda":
        s = rec.lambda_prefix(zoo.zoo_oracle(args.lang), args.n)
    elif args.action == "halting":
        s = rec.halting_prefix(args.T, args.n)
    elif args.action == "sparse":
        kbits = args.kbits
        if kbits is None:
            kbits = rec.halting_prefix(args.T, args.n).bits
        s = rec.sparse_sequence(kbits, args.n)
    else:
        r = rec.re_upperbound_probe(_semi(args.semi, args.T), args.n)
        out.header(r.suite_version)
        for k in ("semi", "n", "m", "witness_cost", "constant", "bound",
                  "C_conditional", "replayed"):
            out.line(f"{k}={getattr(r, k)}")
        out.line(r.bits)
        return
    out.header()
    out.stream.write(s.dump())


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kclab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"kclab {__version__}")
    sub = p.add_subparsers(dest="group", required=True)

    enc = sub.add_parser("encode", help="bijection, self-delimiting code, pairing")
    enc.add_argument("kind", choices=["bij", "selfdelim", "pair"])
    enc.add_argument("values", nargs="+")
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="inverse of encode")
    dec.add_argument("kind", choices=["bij", "selfdelim", "pair"])
    dec.add_argument("value")
    dec.add_argument("--triple", action="store_true")
    dec.set_defaults(func=cmd_decode)

    dfa = sub.add_parser("dfa", help="finite automata")
    dfa.add_argument("action", choices=["run", "combine", "minimize", "equiv"])
    dfa.add_argument("--file", required=True, help="path or builtin:NAME")
    dfa.add_argument("--file2")
    dfa.add_argument("--input", default="")
    dfa.add_argument("--op", choices=["complement", "union", "intersection"])
    dfa.set_defaults(func=cmd_dfa)

    dpda = sub.add_parser("dpda", help="pushdown automata")
    dpda.add_argument("action", choices=["run"])
    dpda.add_argument("--file", required=True)
    dpda.add_argument("--input", default="")
    dpda.add_argument("--eps-limit", type=int)
    dpda.set_defaults(func=cmd_dpda)

    z = sub.add_parser("zoo", help="example languages")
    z.add_argument("action", choices=["list", "member", "nth", "enum"])
    z.add_argument("--lang")
    z.add_argument("--word", default="")
    z.add_argument("--x", default="")
    z.add_argument("--n", type=int, default=1)
    z.add_argument("--i", type=int, default=1)
    z.add_argument("--enumerator", default="length-lex")
    z.add_argument("--complement", action="store_true")
    z.add_argument("--include-empty", action="store_true")
    z.add_argument("--budget", type=int, default=1 << 16)
    z.set_defaults(func=cmd_zoo)

    chi = sub.add_parser("chi", help="characteristic sequence prefix")
    chi.add_argument("--lang", required=True)
    chi.add_argument("--x", default="")
    chi.add_argument("--n", type=int, required=True)
    chi.set_defaults(func=cmd_chi)

    tab = sub.add_parser("table", help="residual table")
    tab.add_argument("--lang", required=True)
    tab.add_argument("--P", type=int, required=True)
    tab.add_argument("--n", type=int, required=True)
    tab.add_argument("--csv", action="store_true")
    tab.set_defaults(func=cmd_table)

    syn = sub.add_parser("synth", help="Dfa from a residual table")
    syn.add_argument("--lang", required=True)
    syn.add_argument("--P", type=int, required=True)
    syn.add_argument("--n", type=int, required=True)
    syn.set_defaults(func=cmd_synth)

    ver = sub.add_parser("verdict", help="regularity evidence")
    ver.add_argument("--lang", required=True)
    ver.add_argument("--P-max", dest="P_max", type=int, default=8)
    ver.add_argument("--n", type=int, default=64)
    ver.add_argument("--csv", action="store_true")
    ver.set_defaults(func=cmd_verdict)

    kc = sub.add_parser("kc", help="description-length estimates")
    kc.add_argument("action", choices=["estimate", "install", "incompressible",
                                       "census", "substring"])
    kc.add_argument("--word")
    kc.add_argument("--side", type=int)
    kc.add_argument("--n", type=int)
    kc.add_argument("--n-max", dest="n_max", type=int, default=16)
    kc.add_argument("--c", type=int, nargs="+", default=[0, 1, 2, 3, 4])
    kc.add_argument("--split", type=int, nargs=2, metavar=("I", "J"))
    kc.add_argument("--file", help="dfa for 'install'")
    kc.add_argument("--residual-dfa", action="append")
    kc.add_argument("--characteristic-dfa", action="append")
    kc.add_argument("--csv", action="store_true")
    kc.set_defaults(func=cmd_kc)

    dc = sub.add_parser("dcfl", help="pushdown stack analysis")
    dc.add_argument("action", choices=["profile", "classify", "cycle", "experiment", "diff"])
    dc.add_argument("--file", required=True)
    dc.add_argument("--input", default="")
    dc.add_argument("--u", default="")
    dc.add_argument("--v", default="")
    dc.add_argument("--x", default="")
    dc.add_argument("--y", default="")
    dc.add_argument("--omega", default="")
    dc.add_argument("--n", type=int, default=0)
    dc.add_argument("--c1", type=int)
    dc.add_argument("--blocks", type=int, default=8)
    dc.add_argument("--max-blocks", dest="max_blocks", type=int, default=64)
    dc.add_argument("--lang")
    dc.add_argument("--max-len", dest="max_len", type=int, default=12)
    dc.add_argument("--csv", action="store_true")
    dc.set_defaults(func=cmd_dcfl)

    r = sub.add_parser("rec", help="sequences of recursive and r.e. flavour")
    r.add_argument("action", choices=["lambda", "halting", "sparse", "reprobe"])
    r.add_argument("--lang")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--T", type=int, default=100)
    r.add_argument("--kbits")
    r.add_argument("--semi", default="halting")
    r.set_defaults(func=cmd_rec)
    return p


REQUIRED = {
    ("encode", None): (),
    ("zoo", "member"): ("lang",),
    ("zoo", "nth"): ("lang",),
    ("rec", "lambda"): ("lang",),
    ("dcfl", "diff"): ("lang",),
    ("kc", "estimate"): ("word",),
    ("kc", "substring"): ("word", "split"),
    ("kc", "incompressible"): ("n",),
    ("kc", "install"): ("file",),
    ("dfa", "combine"): ("op",),
}


def subcommands() -> list[str]:
    """Every ``group action`` pair the parser accepts."""
    out = []
    parser = build_parser()
    for action in parser._subparsers._group_actions:
        for group, sp in action.choices.items():
            acts = [a for a in sp._actions if a.dest in ("action", "kind")]
            if acts:
                out.extend(f"{group} {c}" for c in acts[0].choices)
            else:
                out.append(group)
    return out


def main(argv: Sequence[str] | None = None, stream=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    action = getattr(args, "action", None)
    for name in REQUIRED.get((args.group, action), ()):
        if getattr(args, name, None) is None:
            parser.print_usage(sys.stderr)
            print(f"kclab: error: {args.group} {action} requires --{name.replace('_', '-')}",
                  file=sys.stderr)
            return 2
    out = Output(argv, stream)
    try:
        args.func(args, out)
    except DOMAIN_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"kclab: {msg}", file=sys.stderr)
        return 1
    return 0


def main_exit():  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
