"""Compact node state for tree walks: a gcd plus a shrunken semigroup.

A non-ordinary numerical semigroup with conductor c is determined by c and
its members below the Frobenius number.  Those members are all multiples of
their gcd ``omega``, and dividing them by ``omega`` generates a second,
smaller semigroup (the shrink).  The pair (omega, shrink) plus the walk
context is everything the walker needs, and both pieces transfer cheaply
from a parent to its children and between consecutive siblings.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional

from ._bits import bit_range, close_under, iter_bits, mask


class OutOfRange(ValueError):
    """Candidate generator lies outside the window conductor..conductor+m-1."""


class NotARightGenerator(ValueError):
    """Strong/weak classification asked for a non right generator."""


class PreconditionViolated(ValueError):
    """Sibling transfer attempted from an unsuitable predecessor."""


class ShrinkEncoding(NamedTuple):
    omega: int
    shrink_membership: int
    shrink_conductor: int
    shrink_genus: int

    def shrink_contains(self, x: int) -> bool:
        if x >= self.shrink_conductor:
            return True
        return x >= 0 and bool(self.shrink_membership >> x & 1)


class NodeContext(NamedTuple):
    g: int
    c: int
    m: int
    u: int
    r: int


def _is_right_generator(e: ShrinkEncoding, sigma: int) -> bool:
    w = e.omega
    if w == 1:
        return not e.shrink_contains(sigma)
    q, rem = divmod(sigma, w)
    return rem != 0 or not e.shrink_contains(q)


def check_right_generator(e: ShrinkEncoding, ctx: NodeContext, sigma: int) -> bool:
    """Is sigma a minimal generator above the Frobenius number?"""
    if not ctx.c <= sigma <= ctx.c + ctx.m - 1:
        raise OutOfRange(f"sigma={sigma} outside window [{ctx.c}, {ctx.c + ctx.m - 1}]")
    return _is_right_generator(e, sigma)


def check_strong_generator(e_child: ShrinkEncoding, ctx: NodeContext, sigma: int,
                           case_a: bool) -> bool:
    """Does removing sigma create the fresh right generator sigma+m?

    In case (a), sigma is not a multiple of the parent's omega and the answer
    depends only on the window test sigma < c+u.  In case (b), e_child must be
    the encoding of the child at sigma, and sigma+m is strong exactly when it
    is a right generator of that child.
    """
    if not ctx.c <= sigma <= ctx.c + ctx.m - 1:
        raise NotARightGenerator(f"sigma={sigma} outside window [{ctx.c}, {ctx.c + ctx.m - 1}]")
    if case_a:
        return sigma < ctx.c + ctx.u
    return _is_right_generator(e_child, sigma + ctx.m)


def _scaled_window(e: ShrinkEncoding, scale: int, hi: int) -> int:
    """Membership of scale * shrink on 0..hi."""
    n = hi // scale if scale > 1 else hi
    bits = e.shrink_membership
    if n > e.shrink_conductor:
        bits |= bit_range(e.shrink_conductor + 1, n)
    bits &= mask(n)
    if scale == 1:
        return bits
    out = 0
    for i in iter_bits(bits):
        out |= 1 << (i * scale)
    return out


def _finish(omega: int, bits: int, hi: int) -> ShrinkEncoding:
    gaps = ~bits & mask(hi)
    conductor = gaps.bit_length()
    return ShrinkEncoding(omega, bits & mask(conductor), conductor, gaps.bit_count())


def _efp(e: ShrinkEncoding, c: int, sigma: int) -> ShrinkEncoding:
    # removing sigma = c leaves the left elements, hence the encoding, unchanged
    if sigma == c:
        return e
    w = e.omega
    if sigma == c + 1:
        # left elements gain c; new gcd divides both omega and c
        new_w = math.gcd(w, c)
        scale = w // new_w
        q = c // new_w
        hi = e.shrink_conductor * scale + (q - 1) * (scale - 1)
        bits = _scaled_window(e, scale, hi)
        if q <= hi:
            bits = close_under(bits | 1 << q, q, hi)
        return _finish(new_w, bits, hi)
    # left elements gain c..sigma-1, two consecutive values, so the gcd drops to 1
    hi = e.shrink_conductor * w + ((w - 2) // (sigma - c - 1) + 1) * c
    bits = _scaled_window(e, w, hi)
    for gen in range(c, min(sigma, hi + 1)):
        bits = close_under(bits | 1 << gen, gen, hi)
    return _finish(1, bits, hi)


def encoding_from_parent(e: ShrinkEncoding, ctx: NodeContext, sigma: int) -> ShrinkEncoding:
    """Encoding of the child obtained by removing the right generator sigma."""
    assert ctx.c <= sigma <= ctx.c + ctx.m - 1, "sigma outside the generator window"
    assert _is_right_generator(e, sigma), "sigma is not a right generator"
    return _efp(e, ctx.c, sigma)


def _efps(e_prev: ShrinkEncoding, sigma_prev: int, sigma: int) -> ShrinkEncoding:
    # the predecessor's shrink absorbs sigma_prev..sigma-1; conductor cannot grow
    hi = e_prev.shrink_conductor
    bits = e_prev.shrink_membership
    for gen in range(sigma_prev, min(sigma, hi + 1)):
        bits = close_under(bits | 1 << gen, gen, hi)
    return _finish(1, bits, hi)


def encoding_from_predecessor_sibling(e_prev: ShrinkEncoding, ctx: NodeContext,
                                      sigma_prev: int, sigma: int) -> ShrinkEncoding:
    """Encoding of the sibling at sigma from the sibling at sigma_prev < sigma."""
    if e_prev.omega != 1:
        raise PreconditionViolated("predecessor encoding must have omega = 1")
    if sigma_prev == ctx.c:
        raise PreconditionViolated("predecessor must not be the conductor child")
    assert ctx.c < sigma_prev < sigma <= ctx.c + ctx.m - 1, "bad sibling pair"
    return _efps(e_prev, sigma_prev, sigma)


def interval_conductor(i: int, j: int) -> int:
    """Conductor of the semigroup generated by the interval i..j."""
    if not 2 <= i < j:
        raise ValueError("need 2 <= i < j")
    return i * ((j - 2) // (j - i))


def interval_genus(i: int, j: int) -> int:
    """Genus of the semigroup generated by the interval i..j."""
    if not 2 <= i < j:
        raise ValueError("need 2 <= i < j")
    k_c = (j - 2) // (j - i)
    return sum(i + (k - 1) * (i - j) - 1 for k in range(1, k_c + 1))


def _interval_membership(i: int, j: int, hi: int) -> int:
    bits = 1
    k = 1
    while k * i <= hi:
        bits |= bit_range(k * i, min(k * j, hi))
        k += 1
    return bits


def encode_pseudo_ordinary(m: int, u: int) -> ShrinkEncoding:
    """Encoding of the semigroup with gaps 1..m-1 and m+1..m+u-1."""
    if not 2 <= u <= m:
        raise ValueError("need 2 <= u <= m")
    return ShrinkEncoding(m, 1, 0, 0)


def encode_quasi_ordinary(m: int, frobenius: int) -> ShrinkEncoding:
    """Encoding of the semigroup with gaps 1..m-1 and frobenius."""
    if not m + 1 <= frobenius <= 2 * m - 1:
        raise ValueError("need m+1 <= frobenius <= 2m-1")
    if frobenius == m + 1:
        return encode_pseudo_ordinary(m, 2)
    conductor = interval_conductor(m, frobenius - 1)
    genus = interval_genus(m, frobenius - 1)
    return ShrinkEncoding(1, _interval_membership(m, frobenius - 1, conductor),
                          conductor, genus)


def member_window(e: ShrinkEncoding, conductor: int, hi: int) -> int:
    """Membership bits 0..hi of the semigroup with this encoding and conductor."""
    if conductor == 0:
        return mask(hi)
    out = bit_range(conductor, hi) if hi >= conductor else 0
    top = min(conductor - 2, hi)
    if top >= 0:
        out |= _scaled_window(e, e.omega, top)
    return out
