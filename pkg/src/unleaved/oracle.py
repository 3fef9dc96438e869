"""Brute-force numerical semigroup arithmetic used as ground truth.

Everything here favors obvious correctness over speed: semigroups carry an
explicit membership window, children are recomputed from scratch, and tree
walks enumerate every node.  The optimized walker is validated against this
module, never the other way around.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from ._bits import bit_range, iter_bits, mask, monoid_window

NODE_BUDGET_ENV = "NSG_ORACLE_NODE_BUDGET"
_DEFAULT_NODE_BUDGET = 20_000_000


class ClosureViolation(ValueError):
    """Raised when a gap set's complement is not closed under addition."""


class ResourceLimit(RuntimeError):
    """Raised when an exhaustive walk exceeds the configured node budget."""


def node_budget() -> int:
    raw = os.environ.get(NODE_BUDGET_ENV, "")
    return int(raw) if raw else _DEFAULT_NODE_BUDGET


@dataclass(frozen=True, slots=True)
class CanonicalSemigroup:
    """A numerical semigroup held as an explicit membership window.

    ``bits`` records membership of 0..bound as a bitset; every integer above
    ``bound`` is a member.  ``bound`` is normalized to conductor plus
    multiplicity, so equal semigroups compare equal as dataclasses.
    """

    bits: int
    bound: int
    conductor: int
    genus: int
    multiplicity: int
    jump: int
    frobenius: int

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.bound:
            return True
        return bool(self.bits >> x & 1)

    def members_upto(self, hi: int) -> int:
        """Membership bitset for 0..hi."""
        out = self.bits & mask(hi)
        if hi > self.bound:
            out |= bit_range(self.bound + 1, hi)
        return out

    def gap_list(self) -> list[int]:
        return list(iter_bits(~self.bits & mask(self.bound)))

    def left_elements(self) -> list[int]:
        """Members strictly below the Frobenius number."""
        if self.frobenius < 1:
            return []
        return list(iter_bits(self.bits & mask(self.frobenius - 1)))


def _from_window(bits: int, hi: int) -> CanonicalSemigroup:
    # bits must be the exact membership of 0..hi with hi >= conductor + multiplicity
    if not bits & 1:
        raise ValueError("0 must be a member")
    gaps = ~bits & mask(hi)
    conductor = gaps.bit_length()
    genus = gaps.bit_count()
    positive = bits & ~1 & mask(hi)
    if positive == 0:
        raise ValueError("window holds no positive member")
    multiplicity = (positive & -positive).bit_length() - 1
    bound = conductor + multiplicity
    if hi < bound:
        raise ValueError("window too small for the canonical bound")
    rest = positive & (positive - 1)
    if rest:
        second = (rest & -rest).bit_length() - 1
    else:
        second = multiplicity + 1
    return CanonicalSemigroup(
        bits=bits & mask(bound),
        bound=bound,
        conductor=conductor,
        genus=genus,
        multiplicity=multiplicity,
        jump=second - multiplicity,
        frobenius=conductor - 1,
    )


def from_member_window(bits: int, hi: int) -> CanonicalSemigroup:
    """Build from an exact membership window covering conductor + multiplicity."""
    return _from_window(bits, hi)


def _pairwise_sums(posbits: int, hi: int) -> int:
    """Bitset of x+y with x, y positive members, clipped to 0..hi."""
    out = 0
    window = mask(hi)
    for e in iter_bits(posbits):
        if 2 * e > hi:
            break
        out |= (posbits << e) & window
    return out


def from_gaps(gaps) -> CanonicalSemigroup:
    gapset = {int(x) for x in gaps}
    if not gapset:
        return _from_window(0b11, 1)
    if min(gapset) < 1:
        raise ClosureViolation("gaps must be positive integers")
    fro = max(gapset)
    gapbits = 0
    for x in gapset:
        gapbits |= 1 << x
    members = ~gapbits & mask(fro)
    if _pairwise_sums(members & ~1, fro) & gapbits:
        raise ClosureViolation("complement of the gap set is not additively closed")
    positive = members & ~1
    if positive:
        m = (positive & -positive).bit_length() - 1
    else:
        m = fro + 1
    hi = fro + 1 + m
    return _from_window(~gapbits & mask(hi), hi)


def from_generators(gens) -> CanonicalSemigroup:
    gl = sorted({int(g) for g in gens})
    if not gl or gl[0] < 1:
        raise ValueError("generators must be positive integers")
    if math.gcd(*gl) != 1:
        raise ValueError("generators must be globally coprime")
    m = gl[0]
    hi = max(2 * gl[-1], 2 * m + 2)
    while True:
        bits = monoid_window(gl, hi)
        conductor = (~bits & mask(hi)).bit_length()
        if hi >= conductor + m:
            return _from_window(bits, hi)
        hi *= 2


def minimal_generators(s: CanonicalSemigroup) -> list[int]:
    """Positive members not expressible as a sum of two positive members."""
    if s.conductor == 0:
        return [1]
    hi = s.conductor + s.multiplicity - 1
    pos = s.members_upto(hi) & ~1
    return list(iter_bits(pos & ~_pairwise_sums(pos, hi)))


def omega_and_shrink(s: CanonicalSemigroup):
    """Gcd of the positive left elements and the semigroup they generate.

    Returns (0, None) when there are no positive left elements; the gcd of
    the empty set is taken to be 0 and the quotient semigroup is undefined.
    """
    positive_left = [x for x in s.left_elements() if x > 0]
    if not positive_left:
        return 0, None
    w = math.gcd(*positive_left)
    return w, from_generators([x // w for x in positive_left])


def oracle_children(s: CanonicalSemigroup) -> list[CanonicalSemigroup]:
    """Children in the semigroup tree: remove one minimal generator > Frobenius."""
    out = []
    gaps = set(s.gap_list())
    for sigma in minimal_generators(s):
        if sigma > s.frobenius:
            out.append(from_gaps(gaps | {sigma}))
    return out


# Raw stack walks.  A node is (bits, conductor, multiplicity, hi); bits is the
# exact membership of 0..hi and hi covers conductor + multiplicity - 1.

_O2_RAW = (0b1101, 2, 2, 3)


def _right_generators_raw(bits, c, m, hi):
    top = c + m - 1
    pos = bits & ~1 & mask(top)
    window = mask(top)
    sums = 0
    for e in iter_bits(pos):
        if e > c - 1:
            break
        sums |= (pos << e) & window
    return iter_bits(pos & ~sums & bit_range(c, top))


def _child_raw(bits, c, m, hi, sigma):
    newm = m + 1 if sigma == m else m
    need = sigma + newm
    if hi < need:
        bits |= bit_range(hi + 1, need)
        hi = need
    return bits & ~(1 << sigma), sigma + 1, newm, hi


def genus_histogram(gamma: int) -> list[int]:
    """Count semigroups of each genus 0..gamma by walking the whole tree."""
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    budget = node_budget()
    hist = [0] * (gamma + 1)
    hist[0] = 1
    if gamma == 0:
        return hist
    seen = 1
    stack = [(_O2_RAW, 1)]
    while stack:
        (bits, c, m, hi), g = stack.pop()
        seen += 1
        if seen > budget:
            raise ResourceLimit(f"oracle walk exceeded {budget} nodes")
        hist[g] += 1
        if g == gamma:
            continue
        for sigma in _right_generators_raw(bits, c, m, hi):
            stack.append((_child_raw(bits, c, m, hi, sigma), g + 1))
    return hist


def genus_multiplicity_histogram(gamma: int) -> dict[tuple[int, int], int]:
    """Count semigroups keyed by (genus, multiplicity) up to genus gamma."""
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    budget = node_budget()
    hist: dict[tuple[int, int], int] = {(0, 1): 1}
    if gamma == 0:
        return hist
    seen = 1
    stack = [(_O2_RAW, 1)]
    while stack:
        (bits, c, m, hi), g = stack.pop()
        seen += 1
        if seen > budget:
            raise ResourceLimit(f"oracle walk exceeded {budget} nodes")
        key = (g, m)
        hist[key] = hist.get(key, 0) + 1
        if g == gamma:
            continue
        for sigma in _right_generators_raw(bits, c, m, hi):
            stack.append((_child_raw(bits, c, m, hi, sigma), g + 1))
    return hist


def oracle_count(gamma: int) -> tuple[int, int]:
    """(number of semigroups of genus gamma, nodes walked up to that depth)."""
    hist = genus_histogram(gamma)
    return hist[gamma], sum(hist)


def _count_genus_below(raw, g, gamma, budget, seen):
    bits, c, m, hi = raw
    seen[0] += 1
    if seen[0] > budget:
        raise ResourceLimit(f"oracle walk exceeded {budget} nodes")
    if g == gamma:
        return 1
    total = 0
    for sigma in _right_generators_raw(bits, c, m, hi):
        total += _count_genus_below(_child_raw(bits, c, m, hi, sigma), g + 1, gamma, budget, seen)
    return total


def _surviving_below(raw, g, gamma, budget, seen):
    # nodes of the subtree that still have a depth-gamma descendant
    bits, c, m, hi = raw
    seen[0] += 1
    if seen[0] > budget:
        raise ResourceLimit(f"oracle walk exceeded {budget} nodes")
    if g == gamma:
        return 1
    total = 0
    for sigma in _right_generators_raw(bits, c, m, hi):
        total += _surviving_below(_child_raw(bits, c, m, hi, sigma), g + 1, gamma, budget, seen)
    return total + 1 if total else 0


def _raw_from_semigroup(s: CanonicalSemigroup):
    hi = s.conductor + s.multiplicity
    return (s.members_upto(hi), s.conductor, s.multiplicity, hi)


def descendant_count(s: CanonicalSemigroup, gamma: int) -> int:
    """Number of genus-gamma semigroups in the subtree rooted at s."""
    if s.genus > gamma:
        return 0
    if s.conductor == 0:
        return oracle_count(gamma)[0]
    seen = [0]
    return _count_genus_below(_raw_from_semigroup(s), s.genus, gamma, node_budget(), seen)


def unleaved_node_count(gamma: int) -> int:
    """Nodes, up to depth gamma, that have at least one depth-gamma descendant."""
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    if gamma == 0:
        return 1
    seen = [0]
    below = _surviving_below(_O2_RAW, 1, gamma, node_budget(), seen)
    return below + 1


def surviving_multiplicity_histogram(gamma: int) -> dict[tuple[int, int], int]:
    """Like unleaved_node_count but keyed by (genus, multiplicity)."""
    budget = node_budget()
    seen = [0]
    hist: dict[tuple[int, int], int] = {}

    def rec(raw, g):
        bits, c, m, hi = raw
        seen[0] += 1
        if seen[0] > budget:
            raise ResourceLimit(f"oracle walk exceeded {budget} nodes")
        if g == gamma:
            hist[(g, m)] = hist.get((g, m), 0) + 1
            return True
        keep = False
        for sigma in _right_generators_raw(bits, c, m, hi):
            if rec(_child_raw(bits, c, m, hi, sigma), g + 1):
                keep = True
        if keep:
            hist[(g, m)] = hist.get((g, m), 0) + 1
        return keep

    if gamma == 0:
        return {(0, 1): 1}
    if rec(_O2_RAW, 1):
        hist[(0, 1)] = 1
    return hist
