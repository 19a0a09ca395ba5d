"""Bijective codings of pairs and finite sequences by natural numbers."""

from __future__ import annotations

from math import isqrt
from typing import Optional, Sequence, Tuple

#: Branching value used for trees over the full alphabet of naturals.
OMEGA = None

Branching = Optional[int]


def pair_encode(a: int, b: int) -> int:
    """Code of the increasing pair ``(a, b)``; enumerates pairs by ``b`` then ``a``."""
    if a < 0 or not a < b:
        raise ValueError(f"pair_encode needs 0 <= a < b, got ({a}, {b})")
    return b * (b - 1) // 2 + a


def pair_decode(n: int) -> Tuple[int, int]:
    if n < 0:
        raise ValueError(f"negative code {n}")
    b = (1 + isqrt(1 + 8 * n)) // 2
    # isqrt rounding can overshoot by one at triangular boundaries
    while b * (b - 1) // 2 > n:
        b -= 1
    a = n - b * (b - 1) // 2
    return a, b


def diag_encode(i: int, j: int) -> int:
    """Cantor's diagonal pairing of all of N x N onto N."""
    if i < 0 or j < 0:
        raise ValueError(f"diag_encode needs naturals, got ({i}, {j})")
    s = i + j
    return s * (s + 1) // 2 + j


def diag_decode(n: int) -> Tuple[int, int]:
    if n < 0:
        raise ValueError(f"negative code {n}")
    s = (isqrt(8 * n + 1) - 1) // 2
    j = n - s * (s + 1) // 2
    return s - j, j


def _check_branching(branching: Branching) -> None:
    if branching is not OMEGA and (not isinstance(branching, int) or branching < 2):
        raise ValueError(f"branching must be an int >= 2 or OMEGA, got {branching!r}")


def _level_offset(n: int, length: int) -> int:
    # number of sequences over n letters shorter than `length`
    return (n ** length - 1) // (n - 1)


def seq_encode(branching: Branching, seq: Sequence[int]) -> int:
    """Code of a finite sequence; the empty sequence is 0.

    Finite alphabets use length-lexicographic order. Over the naturals the
    entry ``a_i`` contributes the bit at position ``a_0 + ... + a_i + i``.
    """
    _check_branching(branching)
    if branching is OMEGA:
        code, pos = 0, -1
        for x in seq:
            if x < 0:
                raise ValueError(f"negative entry {x} in {tuple(seq)}")
            pos += x + 1
            code |= 1 << pos
        return code
    n = branching
    value = 0
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"entry {x} outside alphabet 0..{n - 1}")
        value = value * n + x
    return _level_offset(n, len(seq)) + value


def seq_decode(branching: Branching, code: int) -> Tuple[int, ...]:
    _check_branching(branching)
    if code < 0:
        raise ValueError(f"negative code {code}")
    if branching is OMEGA:
        out = []
        prev = -1
        while code:
            low = code & -code
            pos = low.bit_length() - 1
            out.append(pos - prev - 1)
            prev = pos
            code ^= low
        return tuple(out)
    n = branching
    length = 0
    while _level_offset(n, length + 1) <= code:
        length += 1
    value = code - _level_offset(n, length)
    digits = [0] * length
    for i in range(length - 1, -1, -1):
        value, digits[i] = divmod(value, n)
    return tuple(digits)


def block_encode(seq: Sequence[int], width: int) -> Tuple[int, ...]:
    """Replace each entry ``k`` by ``k`` ones padded on the right with zeros to ``width``."""
    out = []
    for k in seq:
        if not 0 <= k <= width:
            raise ValueError(f"entry {k} does not fit a block of width {width}")
        out.extend([1] * k + [0] * (width - k))
    return tuple(out)


def block_decode(bits: Sequence[int], width: int) -> Tuple[int, ...]:
    """Sum successive blocks of ``width`` bits; a trailing partial block is dropped."""
    full = len(bits) // width
    return tuple(sum(bits[i * width:(i + 1) * width]) for i in range(full))
