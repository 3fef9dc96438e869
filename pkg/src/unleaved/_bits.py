"""Bitset helpers for subsets of the nonnegative integers.

A set S of nonnegative integers is stored as a Python int whose bit k is
set iff k is in S.  All windowed operations take an inclusive upper bound
``hi`` and guarantee no bits above ``hi`` in the result.
"""

from __future__ import annotations


def mask(hi: int) -> int:
    """All-ones mask covering bits 0..hi inclusive."""
    return (1 << (hi + 1)) - 1


def bit_range(lo: int, hi: int) -> int:
    """Bits lo..hi inclusive; 0 when hi < lo."""
    if hi < lo:
        return 0
    return ((1 << (hi - lo + 1)) - 1) << lo


def close_under(bits: int, step: int, hi: int) -> int:
    """Saturate ``bits`` under repeated addition of ``step``, within 0..hi.

    Doubling trick: after k rounds every multiple of step up to
    step * 2**k has been folded in, so the loop runs O(log(hi/step)).
    """
    m = mask(hi)
    bits &= m
    shift = step
    while shift <= hi:
        bits |= (bits << shift) & m
        shift <<= 1
    return bits


def close_under_each(bits: int, steps, hi: int) -> int:
    """Close ``bits`` under addition of every step in ``steps``, within 0..hi."""
    for step in steps:
        bits = close_under(bits, step, hi)
    return bits


def monoid_window(generators, hi: int) -> int:
    """Window 0..hi of the additive monoid generated by ``generators``.

    Always contains 0.  Generators larger than hi are ignored.
    """
    bits = 1
    for g in sorted(set(generators)):
        if 0 < g <= hi:
            bits |= 1 << g
            bits = close_under(bits, g, hi)
    return bits


def interval_monoid_window(i: int, j: int, hi: int) -> int:
    """Window 0..hi of the monoid generated by the integers i..j inclusive."""
    if not 2 <= i <= j:
        raise ValueError("need 2 <= i <= j")
    bits = 1
    k = 1
    while k * i <= hi:
        bits |= bit_range(k * i, min(k * j, hi))
        k += 1
    return bits


def iter_bits(x: int):
    """Yield the indices of set bits of x in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low
