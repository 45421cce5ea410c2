"""Resource-bounded description lengths, residual languages and pushdown stacks.

Submodules:

- ``codec``: length-lex bijection, self-delimiting codes, pairing
- ``automata``: Dfa and Dpda models, runners and a text format
- ``zoo``: membership oracles and enumerators
- ``charseq``: characteristic sequences, residual tables, regularity evidence
- ``kolmogorov``: decoder suites and the Ĉ upper bound
- ``dcfl``: stack profiles, the Case1/Case2 split, cycle detection
- ``rec``: whole-language sequences, bounded halting, member-count probes
- ``estimators``: scikit-learn style wrappers
"""

__version__ = "0.1.0"

from .codec import nat_to_word, word_to_nat, self_delim, self_delim_decode, pair, unpair
from .kolmogorov import estimate_C, DecoderSuite, default_suite
from .zoo import zoo_oracle, ZOO_NAMES

__all__ = [
    "__version__", "nat_to_word", "word_to_nat", "self_delim", "self_delim_decode",
    "pair", "unpair", "estimate_C", "DecoderSuite", "default_suite", "zoo_oracle",
    "ZOO_NAMES",
]
