"""Membership oracles for the example languages, enumerators, and residuals.

Every oracle decides membership directly from the definition of its
language; the reference machines in :mod:`kclab.machines` are only used to
cross-check the regular ones.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterator

from .automata import Dfa
from . import machines

REGULAR = "regular"
NONREGULAR = "nonregular"
CFL_NOT_DCFL = "cfl-not-dcfl"
CS_NOT_CFL = "cs-not-cfl"
RECURSIVE = "recursive"
RE_BOUNDED = "re-bounded"


class UnknownLanguageError(KeyError):
    def __str__(self):
        return self.args[0]


class BudgetExhaustedError(RuntimeError):
    def __init__(self, message: str, found: int = 0):
        self.found = found
        super().__init__(message)


class OutOfSieveError(ValueError):
    pass


@dataclass(frozen=True)
class LanguageOracle:
    name: str
    alphabet: tuple[str, ...]
    member: Callable[[str], bool] = field(repr=False)
    certified_class: str
    description: str = ""
    reference_dfa: Callable[[], Dfa] | None = field(default=None, repr=False)

    def __call__(self, w: str) -> bool:
        return self.member(w)

    @property
    def is_regular(self) -> bool:
        return self.certified_class == REGULAR


# ---------------------------------------------------------------------------
# primes

class Sieve:
    """Deterministic Eratosthenes sieve; trial division beyond it."""

    def __init__(self, bound: int = 1 << 20):
        self.bound = bound
        flags = bytearray([1]) * (bound + 1)
        flags[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(bound) + 1):
            if flags[p]:
                flags[p * p::p] = bytes(len(range(p * p, bound + 1, p)))
        self._flags = flags
        self.primes = [i for i in range(bound + 1) if flags[i]]

    def is_prime(self, n: int) -> bool:
        if n <= self.bound:
            return n >= 2 and bool(self._flags[n])
        for p in self.primes:
            if p * p > n:
                return True
            if n % p == 0:
                return False
        d = self.primes[-1] + 2
        while d * d <= n:
            if n % d == 0:
                return False
            d += 2
        return True

    def nth(self, i: int) -> int:
        if not 1 <= i <= len(self.primes):
            raise OutOfSieveError(
                f"prime index {i} outside the sieve (1..{len(self.primes)}, bound {self.bound})"
            )
        return self.primes[i - 1]

    def count_upto(self, n: int) -> int:
        return bisect_right(self.primes, n)


_SIEVES: dict[int, Sieve] = {}


def sieve(bound: int = 1 << 20) -> Sieve:
    if bound not in _SIEVES:
        _SIEVES[bound] = Sieve(bound)
    return _SIEVES[bound]


# ---------------------------------------------------------------------------
# decision procedures


def _block_counts(w: str, symbols: str) -> list[int] | None:
    """Exponents (i, j, ...) if ``w = symbols[0]^i symbols[1]^j ...``, else None."""
    counts = []
    pos = 0
    for s in symbols:
        start = pos
        while pos < len(w) and w[pos] == s:
            pos += 1
        counts.append(pos - start)
    return counts if pos == len(w) else None


def _eq01(w):
    c = _block_counts(w, "01")
    return c is not None and c[0] == c[1] >= 1


def _neq01(w):
    c = _block_counts(w, "01")
    return c is not None and c[0] != c[1]


def _gcd1(w):
    c = _block_counts(w, "01")
    return c is not None and math.gcd(c[0], c[1]) == 1


def _unary_prime(w):
    return set(w) <= {"1"} and sieve().is_prime(len(w))


def _binary_prime(w):
    return w[:1] == "1" and sieve().is_prime(int(w, 2))


def _xxrw(w):
    # x nonempty, w nonempty: an even palindrome prefix of length 2k, 2k < len
    for k in range(1, (len(w) - 1) // 2 + 1):
        if w[:k] == w[k:2 * k][::-1]:
            return True
    return False


def _palindrome(w):
    return w == w[::-1]


def _xxr(w):
    return len(w) % 2 == 0 and w == w[::-1]


def _xx(w):
    h = len(w) // 2
    return len(w) % 2 == 0 and w[:h] == w[h:]


def _eq_or_double(w):
    c = _block_counts(w, "01")
    return c is not None and c[0] >= 1 and c[1] in (c[0], 2 * c[0])


def _halfmark(w):
    h = len(w) // 2
    return len(w) % 2 == 0 and "1" in w[h:]


def _ijk(w):
    c = _block_counts(w, "012")
    return c is not None and (c[0] == c[1] or c[1] == c[2])


def _pattern_match(w):
    if w.count("#") != 1:
        return False
    x, t = w.split("#")
    return x[::-1] in t


def _odd_ones(w):
    return w.count("1") % 2 == 1


_ZOO: dict[str, tuple] = {
    # name: (alphabet, member, class, description, reference dfa)
    "eq01": ("01", _eq01, NONREGULAR, "{0^k 1^k : k >= 1}", None),
    "unary-prime": ("1", _unary_prime, NONREGULAR, "{1^p : p prime}", None),
    "binary-prime": ("01", _binary_prime, NONREGULAR,
                     "standard binary representations of primes", None),
    "xxrw": ("01", _xxrw, NONREGULAR, "{x x^R w : x, w nonempty}", None),
    "neq01": ("01", _neq01, NONREGULAR, "{0^i 1^j : i != j}", None),
    "gcd1": ("01", _gcd1, NONREGULAR, "{0^i 1^j : gcd(i, j) = 1}, gcd(0, j) = j", None),
    "sigma-star": ("01", lambda w: True, REGULAR, "{0,1}*", machines.sigma_star_dfa),
    "odd-ones": ("01", _odd_ones, REGULAR, "odd number of 1s", machines.odd_ones_dfa),
    "palindrome": ("01", _palindrome, CFL_NOT_DCFL, "{x : x = x^R}", None),
    "xxr": ("01", _xxr, CFL_NOT_DCFL, "{x x^R}", None),
    "xx": ("01", _xx, CS_NOT_CFL, "{x x}", None),
    "eq-or-double": ("01", _eq_or_double, CFL_NOT_DCFL,
                     "{0^n 1^m : n >= 1, m = n or m = 2n}", None),
    "halfmark": ("01", _halfmark, CFL_NOT_DCFL,
                 "{xy : l(x) = l(y), y contains a 1}", None),
    "ijk": ("012", _ijk, CFL_NOT_DCFL, "{0^i 1^j 2^k : i = j or j = k}", None),
    "pattern-match": ("01#", _pattern_match, CFL_NOT_DCFL, "{x # y x^R z}", None),
}

ZOO_NAMES = tuple(_ZOO)


def zoo_oracle(name: str) -> LanguageOracle:
    try:
        alphabet, member, cls, desc, ref = _ZOO[name]
    except KeyError:
        raise UnknownLanguageError(
            f"unknown language {name!r}; available: {', '.join(ZOO_NAMES)}"
        ) from None
    return LanguageOracle(name, tuple(alphabet), member, cls, desc, ref)


def all_oracles() -> list[LanguageOracle]:
    return [zoo_oracle(n) for n in ZOO_NAMES]


def oracle_from_dfa(a: Dfa, name: str = "dfa") -> LanguageOracle:
    return LanguageOracle(name, a.alphabet, a.accepts, REGULAR, "language of a Dfa", lambda: a)


# ---------------------------------------------------------------------------
# enumerators


class Enumerator:
    """A total injective map from 1, 2, ... to words."""

    name = "enumerator"

    def __call__(self, i: int) -> str:
        if i < 1:
            raise ValueError(f"enumeration is 1-indexed, got {i}")
        return self._word(i)

    def _word(self, i: int) -> str:  # pragma: no cover - abstract
        raise NotImplementedError

    def iter_from(self, i: int = 1) -> Iterator[str]:
        while True:
            yield self(i)
            i += 1


class LengthLex(Enumerator):
    """Σ* ordered by length, then lexicographically; ``LengthLex()(1)`` is ε."""

    def __init__(self, alphabet: str | tuple[str, ...] = "01"):
        self.alphabet = tuple(alphabet)
        self.name = "length-lex" + ("" if self.alphabet == ("0", "1")
                                    else f"[{''.join(self.alphabet)}]")

    def _word(self, i):
        k = len(self.alphabet)
        if k == 1:
            return self.alphabet[0] * (i - 1)
        # bijective base-k numeral of i - 1 with digits shifted by one
        n = i - 1
        out = []
        while n > 0:
            n -= 1
            n, r = divmod(n, k)
            out.append(self.alphabet[r])
        return "".join(reversed(out))

    def index(self, w: str) -> int:
        k = len(self.alphabet)
        if k == 1:
            return len(w) + 1
        pos = {s: j for j, s in enumerate(self.alphabet)}
        n = 0
        for s in w:
            n = n * k + pos[s] + 1
        return n + 1

    def words(self, max_len: int) -> Iterator[str]:
        """All words of length ``< max_len + 1`` in order."""
        i = 1
        while True:
            w = self(i)
            if len(w) > max_len:
                return
            yield w
            i += 1

    def count_upto(self, max_len: int) -> int:
        k = len(self.alphabet)
        return sum(k ** j for j in range(max_len + 1))


class PrimeEnumerator(Enumerator):
    """``i`` maps to the binary representation of the ``i``-th prime."""

    name = "prime"

    def __init__(self, bound: int = 1 << 20):
        self.bound = bound

    @cached_property
    def _sieve(self):
        return sieve(self.bound)

    def _word(self, i):
        return bin(self._sieve.nth(i))[2:]


def enumerate_word(e: Enumerator, i: int) -> str:
    return e(i)


def enumerator_for(L: LanguageOracle) -> LengthLex:
    return LengthLex(L.alphabet)


def nth_in_residual(L: LanguageOracle, x: str, n: int, e: Enumerator | None = None,
                    complement: bool = False, include_empty: bool = False,
                    budget: int = 1 << 16) -> str:
    """The ``n``-th enumerated ``y`` with ``xy`` in ``L`` (or not in ``L``).

    Only the first ``budget`` enumeration indices are inspected.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    e = enumerator_for(L) if e is None else e
    found = 0
    for i in range(1, budget + 1):
        y = e(i)
        if not y and not include_empty:
            continue
        if L.member(x + y) != complement:
            found += 1
            if found == n:
                return y
    raise BudgetExhaustedError(
        f"only {found} of {n} residual words found within {budget} enumeration steps", found
    )


def residual_hits(L: LanguageOracle, x: str, count: int, e: Enumerator | None = None,
                  complement: bool = False, include_empty: bool = False,
                  budget: int = 1 << 16) -> list[tuple[int, str]]:
    """``(enumeration index, y)`` for the first ``count`` residual words."""
    e = enumerator_for(L) if e is None else e
    out = []
    for i in range(1, budget + 1):
        y = e(i)
        if not y and not include_empty:
            continue
        if L.member(x + y) != complement:
            out.append((i, y))
            if len(out) == count:
                return out
    raise BudgetExhaustedError(
        f"only {len(out)} of {count} residual words found within {budget} steps", len(out)
    )
