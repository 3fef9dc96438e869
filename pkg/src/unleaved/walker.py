"""Tree walks over numerical semigroups.

The complete walk (explore_tree) enumerates every semigroup of genus at most
gamma.  The trimmed walk (explore_unleaved_tree) counts genus-gamma
semigroups while pruning every branch that provably cannot reach that genus,
replacing whole families of branches by closed-form counts.
"""

from __future__ import annotations

import enum
from math import comb
from typing import Callable, NamedTuple, Optional

from .encoding import (
    NodeContext,
    ShrinkEncoding,
    _efp,
    _efps,
    _is_right_generator,
    encode_pseudo_ordinary,
    encode_quasi_ordinary,
    interval_genus,
)

Visitor = Callable[[int, int, int, int, Optional[ShrinkEncoding]], None]


class ExplorationStats(NamedTuple):
    """Workload counters for one walk.

    leaf_count is the number of genus-gamma semigroups found.  visited_nodes
    counts the tree nodes the walk is responsible for, whether stepped on or
    settled by a closed form.  encoded_nodes counts the nodes charged with an
    encoding: every child handed one by parent or sibling transfer (the
    conductor child and the depth gamma-2 window probes included), every
    interval root built for a descent, the boundary root at which each
    multiplicity's interval scan stops, and the exploration root.
    trimmed_nodes counts subtree roots discarded as unable to reach gamma.
    """

    leaf_count: int
    visited_nodes: int
    encoded_nodes: int
    trimmed_nodes: int

    def __add__(self, other):
        return ExplorationStats(*(a + b for a, b in zip(self, other)))


ZERO_STATS = ExplorationStats(0, 0, 0, 0)


class TrimVerdict(enum.Enum):
    KEEP_DESCENDING = "keep-descending"
    COUNT_ONE_LEAF_AND_STOP = "count-one-leaf-and-stop"
    TRIM = "trim"


def trim_verdict(e: ShrinkEncoding, gamma: int) -> TrimVerdict:
    """Decide a subtree's fate from the child's encoding alone.

    With omega > 1 the subtree is unbounded and must be walked.  With
    omega = 1 the subtree reaches exactly the genera up to the shrink's
    genus, so the target is reached nowhere, once, or in many branches.
    """
    if e.omega != 1 or e.shrink_genus > gamma:
        return TrimVerdict.KEEP_DESCENDING
    if e.shrink_genus == gamma:
        return TrimVerdict.COUNT_ONE_LEAF_AND_STOP
    return TrimVerdict.TRIM


class _Acc:
    __slots__ = ("visited", "leaves", "internal", "encoded", "trimmed")

    def __init__(self):
        self.visited = 0
        self.leaves = 0
        self.internal = 0
        self.encoded = 0
        self.trimmed = 0


class _SiblingEncoder:
    """Child encodings along one scan of a parent's right generators.

    Uses the cheap predecessor-sibling transfer whenever the predecessor has
    omega = 1 and was not the conductor child, else falls back to the
    parent-to-child transfer.  Removing the conductor itself reuses the
    parent encoding object, but the child is still a node that received an
    encoding, so the stats charge it like any other.
    """

    __slots__ = ("parent", "c", "acc", "prev_sigma", "prev_enc")

    def __init__(self, parent: ShrinkEncoding, c: int, acc: _Acc):
        self.parent = parent
        self.c = c
        self.acc = acc
        self.prev_sigma = -1
        self.prev_enc: Optional[ShrinkEncoding] = None

    def child(self, sigma: int) -> ShrinkEncoding:
        prev = self.prev_enc
        if prev is None or self.prev_sigma == self.c or prev.omega != 1:
            enc = _efp(self.parent, self.c, sigma)
        else:
            enc = _efps(prev, self.prev_sigma, sigma)
        self.acc.encoded += 1
        self.prev_sigma = sigma
        self.prev_enc = enc
        return enc


# Complete walk.

def _descend(e, g, c, m, u, r, gamma, visitor, acc):
    acc.visited += 1
    if g == gamma:
        acc.leaves += 1
    if visitor is not None:
        visitor(g, c, m, u, e)
    if g >= gamma or r <= 0:
        return
    enc = _SiblingEncoder(e, c, acc)
    rt = r
    sigma = c
    while sigma < c + u and rt > 0:
        if _is_right_generator(e, sigma):
            child = enc.child(sigma)
            if sigma % e.omega != 0 or _is_right_generator(child, sigma + m):
                _descend(child, g + 1, sigma + 1, m, u, rt, gamma, visitor, acc)
                rt -= 1
            else:
                rt -= 1
                _descend(child, g + 1, sigma + 1, m, u, rt, gamma, visitor, acc)
        sigma += 1
    while rt > 0:
        assert sigma < c + m, "right generators exhausted inside the window"
        if _is_right_generator(e, sigma):
            rt -= 1
            child = enc.child(sigma)
            _descend(child, g + 1, sigma + 1, m, u, rt, gamma, visitor, acc)
        sigma += 1


def descend(e: ShrinkEncoding, ctx: NodeContext, gamma: int,
            visitor: Optional[Visitor] = None) -> ExplorationStats:
    """Visit the subtree rooted at the node described by ctx."""
    acc = _Acc()
    _descend(e, ctx.g, ctx.c, ctx.m, ctx.u, ctx.r, gamma, visitor, acc)
    return ExplorationStats(acc.leaves, acc.visited, acc.encoded, acc.trimmed)


def _pseudo_descend(m, u, r, gamma, visitor, acc):
    # children of the pseudo-ordinary node with multiplicity m and jump u;
    # the node itself and its chain child at sigma = c are the caller's job
    c = m + u
    e = encode_pseudo_ordinary(m, u)
    enc = _SiblingEncoder(e, c, acc)
    rt = r
    for sigma in range(c + 1, c + u):
        if sigma % m == 0:
            continue
        child = enc.child(sigma)
        _descend(child, c - 1, sigma + 1, m, u, rt, gamma, visitor, acc)
        rt -= 1
    sigma = c + u
    while rt > 0:
        assert sigma < c + m, "right generators exhausted inside the window"
        if sigma % m != 0:
            rt -= 1
            child = enc.child(sigma)
            _descend(child, c - 1, sigma + 1, m, u, rt, gamma, visitor, acc)
        sigma += 1


def pseudo_descend(ctx: NodeContext, gamma: int,
                   visitor: Optional[Visitor] = None) -> ExplorationStats:
    """Visit the non-chain subtrees below a pseudo-ordinary node."""
    acc = _Acc()
    _pseudo_descend(ctx.m, ctx.u, ctx.r, gamma, visitor, acc)
    return ExplorationStats(acc.leaves, acc.visited, acc.encoded, acc.trimmed)


def explore_tree(gamma: int, visitor: Optional[Visitor] = None) -> ExplorationStats:
    """Walk every semigroup of genus at most gamma."""
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    acc = _Acc()

    def visit(g, c, m, u, e):
        acc.visited += 1
        if g == gamma:
            acc.leaves += 1
        if visitor is not None:
            visitor(g, c, m, u, e)

    visit(0, 0, 1, 1, None)
    if gamma == 0:
        return ExplorationStats(acc.leaves, acc.visited, acc.encoded, acc.trimmed)
    visit(1, 2, 2, 1, None)
    for g in range(2, gamma + 1):
        visit(g, 2 * g, 2, 2, ShrinkEncoding(2, 1, 0, 0))
    for m in range(3, gamma + 1):
        visit(m - 1, m, m, 1, None)
        for u in range(2, min(m, gamma + 2 - m) + 1):
            visit(m + u - 2, m + u, m, u, encode_pseudo_ordinary(m, u))
            if m + u - 2 < gamma:
                _pseudo_descend(m, u, m - 1 if u == m else m - 2, gamma, visitor, acc)
        for fro in range(m + 2, 2 * m):
            _descend(encode_quasi_ordinary(m, fro), m, fro + 1, m, 1,
                     2 * m - 1 - fro, gamma, visitor, acc)
    if gamma >= 2:
        visit(gamma, gamma + 1, gamma + 1, 1, None)
    return ExplorationStats(acc.leaves, acc.visited, acc.encoded, acc.trimmed)


# Trimmed walk.

def _dat(e, g, c, m, u, r, gamma, acc):
    # genus-gamma leaf count strictly below a kept node
    if g == gamma - 1:
        return r
    if g == gamma - 2:
        # every child is one level above the target: it contributes exactly
        # its own child count, which the efficacy bookkeeping gives for free
        count = 0
        rt = r
        enc = _SiblingEncoder(e, c, acc)
        for sigma in range(c, c + u):
            if rt == 0:
                break
            if not _is_right_generator(e, sigma):
                continue
            if sigma % e.omega != 0:
                # strength is decided by divisibility alone; charge the child
                # encoding anyway, since only that shortcut makes it skippable
                acc.encoded += 1
                strong = True
            else:
                strong = _is_right_generator(enc.child(sigma), sigma + m)
            if strong:
                count += rt
                acc.internal += 1
                rt -= 1
            else:
                rt -= 1
                count += rt
                if rt:
                    acc.internal += 1
                else:
                    acc.trimmed += 1
        count += rt * (rt - 1) // 2
        acc.internal += max(rt - 1, 0)
        if rt:
            acc.trimmed += 1
        return count
    count = 0
    rt = r
    enc = _SiblingEncoder(e, c, acc)
    sigma = c
    while sigma < c + u and rt > 0:
        if _is_right_generator(e, sigma):
            child = enc.child(sigma)
            if sigma % e.omega != 0 or _is_right_generator(child, sigma + m):
                child_r = rt
                rt -= 1
            else:
                rt -= 1
                child_r = rt
            verdict = trim_verdict(child, gamma)
            if verdict is TrimVerdict.KEEP_DESCENDING:
                acc.internal += 1
                count += _dat(child, g + 1, sigma + 1, m, u, child_r, gamma, acc)
            elif verdict is TrimVerdict.COUNT_ONE_LEAF_AND_STOP:
                # later siblings have strictly smaller shrink genus: all trimmed
                count += 1
                acc.internal += gamma - g - 1
                acc.trimmed += rt
                return count
            else:
                acc.trimmed += 1 + rt
                return count
        sigma += 1
    while rt > 1:
        assert sigma < c + m, "right generators exhausted inside the window"
        if _is_right_generator(e, sigma):
            rt -= 1
            child = enc.child(sigma)
            verdict = trim_verdict(child, gamma)
            if verdict is TrimVerdict.KEEP_DESCENDING:
                acc.internal += 1
                count += _dat(child, g + 1, sigma + 1, m, u, rt, gamma, acc)
            elif verdict is TrimVerdict.COUNT_ONE_LEAF_AND_STOP:
                count += 1
                acc.internal += gamma - g - 1
                acc.trimmed += rt
                return count
            else:
                acc.trimmed += 1 + rt
                return count
        sigma += 1
    if rt == 1:
        # the last right generator yields an efficacy-0 child: always leafless
        acc.trimmed += 1
    return count


def _pdat(m, u, r, gamma, acc):
    # genus-gamma leaf count below the non-chain children of a pseudo-ordinary node
    c = m + u
    g = c - 2
    if g == gamma - 1:
        return r
    if g == gamma - 2:
        count = 0
        rt = r
        for sigma in range(c + 1, c + u):
            if sigma % m == 0:
                continue
            acc.encoded += 1
            count += rt
            acc.internal += 1
            rt -= 1
        count += rt * (rt - 1) // 2
        acc.internal += max(rt - 1, 0)
        if rt:
            acc.trimmed += 1
        return count
    e = encode_pseudo_ordinary(m, u)
    enc = _SiblingEncoder(e, c, acc)
    count = 0
    rt = r
    for sigma in range(c + 1, c + u):
        if sigma % m == 0:
            continue
        child = enc.child(sigma)
        child_r = rt
        rt -= 1
        verdict = trim_verdict(child, gamma)
        if verdict is TrimVerdict.KEEP_DESCENDING:
            acc.internal += 1
            count += _dat(child, c - 1, sigma + 1, m, u, child_r, gamma, acc)
        elif verdict is TrimVerdict.COUNT_ONE_LEAF_AND_STOP:
            count += 1
            acc.internal += gamma - c + 1
            acc.trimmed += rt
            return count
        else:
            acc.trimmed += 1 + rt
            return count
    sigma = c + u
    while rt > 1:
        assert sigma < c + m, "right generators exhausted inside the window"
        if sigma % m != 0:
            rt -= 1
            child = enc.child(sigma)
            verdict = trim_verdict(child, gamma)
            if verdict is TrimVerdict.KEEP_DESCENDING:
                acc.internal += 1
                count += _dat(child, c - 1, sigma + 1, m, u, rt, gamma, acc)
            elif verdict is TrimVerdict.COUNT_ONE_LEAF_AND_STOP:
                count += 1
                acc.internal += gamma - c + 1
                acc.trimmed += rt
                return count
            else:
                acc.trimmed += 1 + rt
                return count
        sigma += 1
    if rt == 1:
        acc.trimmed += 1
    return count


def descend_and_trim(e: ShrinkEncoding, ctx: NodeContext,
                     gamma: int) -> tuple[int, ExplorationStats]:
    """Count genus-gamma leaves below a kept node, trimming as it goes.

    The returned visited figure covers the subtree only; the caller accounts
    for the node itself.  The node must sit above the target genus and must
    have at least two positive members below its Frobenius number, so that
    its jump stays fixed all the way down.
    """
    if ctx.g >= gamma:
        raise ValueError("node genus must be below the target genus")
    acc = _Acc()
    count = _dat(e, ctx.g, ctx.c, ctx.m, ctx.u, ctx.r, gamma, acc)
    return count, ExplorationStats(count, count + acc.internal, acc.encoded, acc.trimmed)


def pseudo_descend_and_trim(m: int, u: int, gamma: int) -> tuple[int, ExplorationStats]:
    """Count genus-gamma leaves below a pseudo-ordinary node's non-chain children."""
    if m + u - 2 >= gamma:
        raise ValueError("node genus must be below the target genus")
    acc = _Acc()
    count = _pdat(m, u, m - 1 if u == m else m - 2, gamma, acc)
    return count, ExplorationStats(count, count + acc.internal, acc.encoded, acc.trimmed)


# Closed forms for the extreme multiplicities.

def closed_form_low_multiplicity(gamma: int) -> int:
    """Genus-gamma semigroups with multiplicity at most 3."""
    if gamma < 1:
        raise ValueError("gamma must be positive")
    if gamma == 1:
        return 1
    return 1 + gamma - (2 * gamma - 1) // 3


def closed_form_high_multiplicity(gamma: int) -> int:
    """Genus-gamma semigroups with multiplicity at least gamma - 3."""
    if gamma < 8:
        raise ValueError("gamma must be at least 8")
    total = comb(gamma - 4, 4) + comb(gamma - 2, 3) + comb(gamma - 5, 2) + 6 * gamma - 14
    if gamma == 8:
        # the general expression overcounts once per clash between the four
        # families, which only happens this close to the lower bound
        total -= 4
    return total


def grandchildren_of_pseudo_ordinary(m: int, u: int) -> int:
    """Grandchild count of the pseudo-ordinary node (m, u)."""
    if not 2 <= u <= m:
        raise ValueError("need 2 <= u <= m")
    return comb(m - 1, 2) + u - (1 if 2 * u > m else 0)


def _nc1(m, u):
    # children of the pseudo-ordinary node (m, u) that have children themselves
    if u == m:
        return m - 1
    return m - 2 - (1 if m - u - (1 if 2 * u <= m else 0) >= 1 else 0)


def _m3_internal(gamma):
    # multiplicity-3 nodes above depth gamma that still reach it
    total = gamma - 3
    for t in range(gamma + 1, 2 * gamma):
        if t % 3:
            delta = 4 if t % 3 == 1 else 5
            total += max(0, (3 * gamma - 2 * t - delta) // 3 + 1)
    return total


def _quasi_tail(m, gamma, acc):
    # bookkeeping for the quasi-ordinary roots that are never descended
    for fro in range(m + 2, 2 * m - 1):
        sg = interval_genus(m, fro - 1)
        if sg < gamma:
            acc.trimmed += 2 * m - fro
            return
        if sg == gamma:
            acc.trimmed += 2 * m - 1 - fro
            return
    acc.trimmed += 1


def _high_region_walk(gamma, acc):
    # small subtrees of multiplicity gamma-3..gamma-1; their leaf total is
    # re-derived here so the closed form can be asserted against it
    total = 0
    for m in range(gamma - 3, gamma):
        acc.internal += gamma - m
        for u in range(2, gamma - m + 1):
            total += _pdat(m, u, m - 2, gamma, acc)
        total += m - 1
        for fro in range(m + 2, 2 * m - 1):
            sg = interval_genus(m, fro - 1)
            if sg < gamma:
                break
            acc.internal += 1
            if sg == gamma:
                total += 1
                acc.internal += gamma - m - 1
                break
            total += _dat(encode_quasi_ordinary(m, fro), m, fro + 1, m, 1,
                          2 * m - 1 - fro, gamma, acc)
    return total


def _closed_seed(gamma, acc):
    count = closed_form_low_multiplicity(gamma) + closed_form_high_multiplicity(gamma)
    acc.encoded += 1  # the root of the exploration
    # the trivial spine: N0, the ordinary chain, the hyperelliptic chain
    acc.internal += 2 * gamma - 2
    acc.internal += _m3_internal(gamma)
    walk = _Acc()
    high = _high_region_walk(gamma, walk)
    assert high + gamma == closed_form_high_multiplicity(gamma), \
        "high-multiplicity closed form out of sync with the walk"
    acc.internal += walk.internal
    for m in range(4, gamma - 3):
        acc.internal += min(m, gamma + 1 - m) - 1
        if m >= gamma - m:
            count += grandchildren_of_pseudo_ordinary(m, gamma - m)
            acc.internal += _nc1(m, gamma - m)
        # the scan over quasi-ordinary roots stops at the first one with too
        # few gaps left; that boundary root is paid for before it is rejected
        acc.encoded += 1
        _quasi_tail(m, gamma, acc)
    for m in range(gamma - 3, gamma):
        _quasi_tail(m, gamma, acc)
    return count


def _pseudo_chain_item(m, u, gamma, acc):
    return _pdat(m, u, m - 1 if u == m else m - 2, gamma, acc)


def _quasi_root_item(m, fro, gamma, acc):
    sg = interval_genus(m, fro - 1)
    assert sg >= gamma, "work item built for a trimmed quasi-ordinary root"
    acc.internal += 1
    if sg == gamma:
        # leaf total below this root is known without building its encoding
        acc.internal += gamma - m - 1
        return 1
    acc.encoded += 1
    return _dat(encode_quasi_ordinary(m, fro), m, fro + 1, m, 1,
                2 * m - 1 - fro, gamma, acc)


def middle_multiplicities(gamma):
    """(m, u) pseudo-ordinary nodes and (m, F) quasi-ordinary roots to walk."""
    chains = []
    quasi = []
    for m in range(4, gamma - 3):
        minv = min(m, gamma - m)
        for u in range(2, minv):
            chains.append((m, u))
        if minv < gamma - m:
            chains.append((m, m))
        for fro in range(m + 2, 2 * m - 1):
            sg = interval_genus(m, fro - 1)
            if sg < gamma:
                break
            quasi.append((m, fro))
            if sg == gamma:
                break
    return chains, quasi


def explore_unleaved_tree(gamma: int) -> tuple[int, ExplorationStats]:
    """Count genus-gamma semigroups by walking only branches that reach gamma."""
    if gamma < 8:
        raise ValueError("the trimmed walk needs gamma >= 8; use explore_tree")
    acc = _Acc()
    count = _closed_seed(gamma, acc)
    chains, quasi = middle_multiplicities(gamma)
    for m, u in chains:
        count += _pseudo_chain_item(m, u, gamma, acc)
    for m, fro in quasi:
        count += _quasi_root_item(m, fro, gamma, acc)
    return count, ExplorationStats(count, count + acc.internal, acc.encoded, acc.trimmed)
