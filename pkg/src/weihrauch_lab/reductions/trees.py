"""Weak Koenig's lemma: n-ary trees to binary ones, binary trees to parallel LLPO."""

from __future__ import annotations

from typing import Tuple

from ..encodings import (TreeCode, derived, has_extension, seq_decode, seq_encode,
                         tree_member)
from ..problems import (LLPO, WKL, AllZero, CertificateError, Finite, FirstNonzero, Hat,
                        Instance, PathGen, WKLn, first_nonzero, hat_lazy)
from .core import Reduction


def _monotone_block(bits: Tuple[int, ...]) -> bool:
    """``1^a 0^b``: no one after a zero."""
    return all(not (bits[i] == 0 and bits[i + 1] == 1) for i in range(len(bits) - 1))


def block_tree(t: TreeCode, n: int) -> TreeCode:
    """Binary tree of block encodings (width ``n - 1``) of members of the ``n``-ary tree ``t``.

    A partial last block is kept only when it can still be completed to the
    block of some child that is itself a member.
    """
    w = n - 1

    def fn(code: int) -> int:
        bits = seq_decode(2, code)
        q, r = divmod(len(bits), w)
        blocks = [bits[i * w:(i + 1) * w] for i in range(q)]
        if not all(_monotone_block(b) for b in blocks):
            return 0
        sigma = tuple(sum(b) for b in blocks)
        if not tree_member(t, sigma):
            return 0
        if r == 0:
            return 1
        part = bits[q * w:]
        if not _monotone_block(part):
            return 0
        ones = sum(part)
        # an unfinished run of ones can still grow; a zero fixes the value
        values = range(ones, n) if ones == r else (ones,)
        return 1 if any(tree_member(t, sigma + (a,)) for a in values) else 0

    return TreeCode(2, derived("block_tree", {"tree": t.describe(), "n": n}, fn))


def block_path(path, n: int):
    w = n - 1
    return derived("block_path", {"path": path.describe(), "n": n},
                   lambda i: 1 if i % w < path(i // w) else 0)


def wkln_to_wkl(n: int) -> Reduction:
    """Value ``a`` becomes a block of ``a`` ones padded with zeros to width ``n - 1``;
    summing consecutive blocks of a binary path gives back an ``n``-ary path."""
    w = n - 1

    def forward(u):
        cert = u.certificate
        if isinstance(cert, PathGen):
            horizon = cert.horizon * w + w if cert.horizon is not None else None
            cert = PathGen(block_path(cert.path, n), horizon)
        elif isinstance(cert, Finite):
            cert = Finite(cert.depth * w)
        return Instance(WKL, block_tree(u.payload, n), cert)

    def back(u, y):
        return derived("block_sums", {"y": y.describe(), "n": n},
                       lambda i: sum(y(i * w + j) for j in range(w)))

    return Reduction(f"red_wkln_to_wkl[{n}]", WKLn(n), WKL, forward, back, True, "Lemma GCL0")


def llpo_row(t: TreeCode, sigma: Tuple[int, ...]):
    """The LLPO instance watching which child of ``sigma`` keeps extending.

    ``p(2n) = 1`` when only ``sigma^1`` has an extension of length ``n``;
    ``p(2n+1) = 1`` when only ``sigma^0`` has one; zero otherwise, and zero
    everywhere when ``sigma`` is not in the tree.
    """
    member = tree_member(t, sigma)

    def ext(b: int, n: int) -> bool:
        child = sigma + (b,)
        return n >= len(child) and has_extension(t, child, n)

    def fn(j: int) -> int:
        if not member or j < 2:
            return 0
        n, odd = divmod(j, 2)
        e0, e1 = ext(0, n), ext(1, n)
        if e0 and not e1:
            return 1 if odd else 0
        if e1 and not e0:
            return 0 if odd else 1
        return 0

    return derived("llpo_row", {"tree": t.describe(), "sigma": list(sigma)}, fn)


def wkl_to_hat_llpo() -> Reduction:
    """Row ``i`` is the LLPO instance of the binary sequence with code ``i``; the
    answers steer a path, always into a child that still extends forever."""

    def forward(u):
        t = u.payload
        cert = u.certificate
        if cert is not None and not (isinstance(cert, PathGen) and cert.horizon is not None):
            raise CertificateError("transport needs a PathGen certificate with a horizon")

        def row(i: int) -> Instance:
            sigma = seq_decode(2, i)
            p = llpo_row(t, sigma)
            return Instance(LLPO, p, None if cert is None else _row_certificate(p, cert.horizon, len(sigma)))

        return hat_lazy(LLPO, row, {"llpo_rows": u.describe()})

    def back(u, y):
        bits = []

        def fn(i: int) -> int:
            while len(bits) <= i:
                bits.append(y.row(seq_encode(2, bits)))
            return bits[i]

        return derived("llpo_walk", {"y": y.describe()}, fn)

    return Reduction("red_wkl_to_hat_llpo", WKL, Hat(LLPO), forward, back, True, "Lemma BGP")


def _row_certificate(p, horizon: int, depth: int):
    # off the path nothing is longer than the horizon, so a sibling of the path
    # dies by length max(horizon, depth) + 1 and the row is settled by then
    j = first_nonzero(p, 2 * max(horizon, depth) + 4)
    return AllZero() if j is None else FirstNonzero(j)
