"""Binary words, the natural-number bijection and self-delimiting codes.

Words are plain ``str`` objects over ``"0"`` and ``"1"``.  Naturals are
Python ints, so composed encodings never overflow.

The bijection identifies ``n`` with the ``n``-th word in length-lex order,
counting the empty word as 0::

    0 -> ""   1 -> "0"   2 -> "1"   3 -> "00"   4 -> "01" ...
"""

from __future__ import annotations


class CodeError(ValueError):
    """Malformed input to a decoder in this module."""


class TruncatedCodeError(CodeError):
    """The input ended while a field was still being read."""

    def __init__(self, field: str, position: int):
        self.field = field
        self.position = position
        super().__init__(f"code truncated in {field} at bit {position}")


class MalformedCodeError(CodeError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at bit {position}")


def _check_bits(w: str) -> str:
    if not isinstance(w, str):
        raise TypeError(f"expected a str of bits, got {type(w).__name__}")
    for i, ch in enumerate(w):
        if ch != "0" and ch != "1":
            raise ValueError(f"non-binary symbol {ch!r} at position {i}")
    return w


def nat_to_word(n: int) -> str:
    """Return the word whose value under the length-lex bijection is ``n``."""
    if n < 0:
        raise ValueError(f"naturals are nonnegative, got {n}")
    return bin(n + 1)[3:]


def word_to_nat(w: str) -> int:
    """Inverse of :func:`nat_to_word`: ``2**l - 1 + int(w, 2)``."""
    _check_bits(w)
    return int("1" + w, 2) - 1


def nat_length(n: int) -> int:
    """Length of the word for ``n``, i.e. ``floor(log2(n + 1))``."""
    if n < 0:
        raise ValueError(f"naturals are nonnegative, got {n}")
    return (n + 1).bit_length() - 1


def bar(x: str) -> str:
    """``1^l(x) 0 x``."""
    _check_bits(x)
    return "1" * len(x) + "0" + x


def self_delim(x: str) -> str:
    """Self-delimiting code ``bar(l(x)) x`` where ``l(x)`` is read as a word."""
    _check_bits(x)
    return bar(nat_to_word(len(x))) + x


def self_delim_nat(n: int) -> str:
    """Self-delimiting code of the word for ``n``."""
    return self_delim(nat_to_word(n))


def self_delim_length(payload_len: int) -> int:
    """Length of ``self_delim(x)`` for any ``x`` of length ``payload_len``."""
    return payload_len + 2 * nat_length(payload_len) + 1


def self_delim_decode(s: str, pos: int = 0) -> tuple[str, str]:
    """Split ``s`` into ``(x, rest)`` where ``s = self_delim(x) + rest``."""
    x, end = read_self_delim(s, pos)
    return x, s[end:]


def read_self_delim(s: str, pos: int = 0) -> tuple[str, int]:
    """Read one self-delimited word starting at ``pos``.

    Returns the payload and the index just past it.
    """
    _check_bits(s)
    k = 0
    while pos + k < len(s) and s[pos + k] == "1":
        k += 1
    if pos + k >= len(s):
        raise TruncatedCodeError("length-prefix terminator", pos + k)
    start = pos + k + 1
    if start + k > len(s):
        raise TruncatedCodeError("length field", len(s))
    length = word_to_nat(s[start:start + k])
    body = start + k
    if body + length > len(s):
        raise TruncatedCodeError("payload", len(s))
    return s[body:body + length], body + length


def read_self_delim_nat(s: str, pos: int = 0) -> tuple[int, int]:
    w, end = read_self_delim(s, pos)
    return word_to_nat(w), end


def pair(x: str, y: str) -> int:
    """``<x, y>`` as the natural whose word is ``self_delim(x) + y``."""
    return word_to_nat(self_delim(x) + _check_bits(y))


def unpair(n: int) -> tuple[str, str]:
    w = nat_to_word(n)
    try:
        x, end = read_self_delim(w)
    except TruncatedCodeError as exc:
        raise MalformedCodeError(
            f"{n} is not a pair code ({exc.field} missing)", exc.position
        ) from exc
    return x, w[end:]


def triple(x: str, y: str, z: str) -> int:
    """``<x, y, z> = <x, <y, z>>``."""
    return pair(x, nat_to_word(pair(y, z)))


def untriple(n: int) -> tuple[str, str, str]:
    x, rest = unpair(n)
    y, z = unpair(word_to_nat(rest))
    return x, y, z


def length_lex_key(w: str) -> tuple[int, str]:
    return (len(w), w)
