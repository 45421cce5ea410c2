"""scikit-learn style wrappers around residual-table learning and Ĉ."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .charseq import synthesize_dfa
from .kolmogorov import DecoderSuite, shared_suite, to_binary
from .zoo import LanguageOracle, zoo_oracle


def check_words(X, alphabet=None) -> list[str]:
    """Validate a 1-d collection of words; returns a list of str."""
    if isinstance(X, str):
        raise ValueError("expected a collection of words, got a single string")
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d collection of words, got shape {arr.shape}")
    words = []
    for i, w in enumerate(arr):
        if not isinstance(w, str):
            raise ValueError(f"item {i} is {type(w).__name__}, not a word")
        if alphabet is not None:
            for j, c in enumerate(w):
                if c not in alphabet:
                    raise ValueError(f"item {i}: symbol {c!r} at {j} not in alphabet")
        words.append(w)
    return words


def check_labels(y, n: int) -> list[bool]:
    arr = np.asarray(y).ravel()
    if arr.shape[0] != n:
        raise ValueError(f"{arr.shape[0]} labels for {n} words")
    if not set(np.unique(arr).tolist()) <= {0, 1, True, False}:
        raise ValueError("labels must be 0/1")
    return [bool(v) for v in arr]


def _sample_oracle(words, labels, alphabet) -> LanguageOracle:
    positive = frozenset(w for w, v in zip(words, labels) if v)
    return LanguageOracle("sample", tuple(alphabet), positive.__contains__, "sample",
                          "labelled sample; unseen words are non-members")


class ResidualAutomatonClassifier(ClassifierMixin, BaseEstimator):
    """Learn a Dfa from a residual table and classify words with it.

    ``language`` may be a zoo name or a :class:`LanguageOracle`; the table
    is then filled by membership queries and ``fit`` ignores ``y``.  Without
    ``language``, the labelled sample is the oracle and every unseen word
    counts as a non-member.
    """

    def __init__(self, language=None, P: int = 6, n_columns: int = 64, alphabet="01"):
        self.language = language
        self.P = P
        self.n_columns = n_columns
        self.alphabet = alphabet

    def _oracle(self, X, y) -> LanguageOracle:
        if isinstance(self.language, LanguageOracle):
            return self.language
        if isinstance(self.language, str):
            return zoo_oracle(self.language)
        if self.language is not None:
            raise ValueError("language must be a zoo name, an oracle, or None")
        if X is None or y is None:
            raise ValueError("without a language, fit needs words X and labels y")
        words = check_words(X, self.alphabet)
        return _sample_oracle(words, check_labels(y, len(words)), self.alphabet)

    def fit(self, X=None, y=None):
        if self.P < 0 or self.n_columns < 1:
            raise ValueError("P must be >= 0 and n_columns >= 1")
        oracle = self._oracle(X, y)
        result = synthesize_dfa(oracle, self.P, self.n_columns)
        if not result:
            raise ValueError(f"synthesis inconclusive: {result.reason} at {result.row!r}")
        self.dfa_ = result
        self.alphabet_ = oracle.alphabet
        self.classes_ = np.array([0, 1])
        self.n_states_ = result.n_states
        return self

    def predict(self, X):
        check_is_fitted(self, "dfa_")
        words = check_words(X, self.alphabet_)
        return np.array([int(self.dfa_.accepts(w)) for w in words])


class ComplexityTransformer(TransformerMixin, BaseEstimator):
    """Map words to Ĉ(x), or Ĉ(x | l(x)) when ``conditional`` is set.

    Non-binary words are recoded with ``alphabet`` before estimating.
    """

    def __init__(self, conditional: bool = False, suite: DecoderSuite | None = None,
                 alphabet=None):
        self.conditional = conditional
        self.suite = suite
        self.alphabet = alphabet

    def fit(self, X, y=None):
        check_words(X, self.alphabet)
        self.suite_ = self.suite or shared_suite()
        self.suite_version_ = self.suite_.version
        return self

    def transform(self, X):
        check_is_fitted(self, "suite_")
        words = check_words(X, self.alphabet)
        if self.alphabet is not None:
            words = [to_binary(w, self.alphabet) for w in words]
        out = [self.suite_.C(w, side=len(w) if self.conditional else None) for w in words]
        return np.array(out, dtype=np.int64).reshape(-1, 1)
