"""Invocations exercised by the CLI tests and the determinism criterion."""

MATRIX = [
    ["encode", "bij", "3"],
    ["encode", "selfdelim", "01011"],
    ["encode", "pair", "1", "0"],
    ["encode", "pair", "1", "0", "11"],
    ["decode", "bij", "10"],
    ["decode", "selfdelim", "1101001011"],
    ["decode", "pair", "49"],
    ["dfa", "run", "--file", "builtin:odd-ones", "--input", "101"],
    ["dfa", "combine", "--op", "union", "--file", "builtin:odd-ones",
     "--file2", "builtin:ends-with-1"],
    ["dfa", "minimize", "--file", "builtin:even-length"],
    ["dfa", "equiv", "--file", "builtin:odd-ones", "--file2", "builtin:even-length"],
    ["dpda", "run", "--file", "builtin:eq01", "--input", "0011"],
    ["zoo", "list"],
    ["zoo", "member", "--lang", "gcd1", "--word", "0111"],
    ["zoo", "nth", "--lang", "unary-prime", "--x", "111", "--n", "1"],
    ["zoo", "enum", "--enumerator", "prime", "--i", "3"],
    ["chi", "--lang", "odd-ones", "--x", "", "--n", "7"],
    ["table", "--lang", "eq01", "--P", "3", "--n", "16"],
    ["table", "--lang", "odd-ones", "--P", "2", "--n", "8", "--csv"],
    ["synth", "--lang", "odd-ones", "--P", "2", "--n", "8"],
    ["synth", "--lang", "eq01", "--P", "4", "--n", "16"],
    ["verdict", "--lang", "eq01", "--P-max", "6", "--n", "32"],
    ["kc", "estimate", "--word", "0" * 64],
    ["kc", "estimate", "--word", "0110", "--side", "4"],
    ["kc", "install", "--file", "builtin:odd-ones", "--word", "01"],
    ["kc", "incompressible", "--n", "8"],
    ["kc", "census", "--n-max", "8", "--c", "4", "8"],
    ["kc", "substring", "--word", "0000000011111111", "--split", "0", "8"],
    ["dcfl", "profile", "--file", "builtin:eq01", "--input", "00001111"],
    ["dcfl", "classify", "--file", "builtin:eq01", "--u", "00000000",
     "--v", "11111111", "--c1", "1"],
    ["dcfl", "cycle", "--file", "builtin:two-period", "--y", "0"],
    ["dcfl", "experiment", "--file", "builtin:push-always", "--y", "0",
     "--omega", "0101", "--n", "4"],
    ["dcfl", "experiment", "--file", "builtin:eq01", "--x", "0", "--y", "0",
     "--omega", "11111111", "--n", "8", "--c1", "1", "--blocks", "7", "--lang", "eq01"],
    ["dcfl", "diff", "--file", "builtin:eq01", "--lang", "eq01", "--max-len", "8"],
    ["rec", "lambda", "--lang", "odd-ones", "--n", "16"],
    ["rec", "halting", "--T", "100", "--n", "32"],
    ["rec", "sparse", "--kbits", "1111111", "--n", "40"],
    ["rec", "reprobe", "--n", "64", "--T", "100"],
]
