"""Shared fixtures: oracle-driven enumeration of small trees."""

from unleaved import oracle
from unleaved._bits import mask
from unleaved.encoding import NodeContext, ShrinkEncoding


def encoding_of(s: oracle.CanonicalSemigroup) -> ShrinkEncoding:
    """Ground-truth encoding of a non-ordinary semigroup, built the slow way."""
    omega, shrink = oracle.omega_and_shrink(s)
    if shrink is None:
        # one positive left element at most: the walker never encodes these
        raise ValueError("ordinary-shaped node has no shrink encoding")
    return ShrinkEncoding(omega, shrink.bits & mask(shrink.conductor),
                          shrink.conductor, shrink.genus)


def context_of(s: oracle.CanonicalSemigroup) -> NodeContext:
    right = [x for x in oracle.minimal_generators(s) if x > s.frobenius]
    return NodeContext(s.genus, s.conductor, s.multiplicity, s.jump, len(right))


def iter_tree(gamma: int):
    """Yield every semigroup of genus at most gamma, parents before children."""
    stack = [oracle.from_gaps([])]
    while stack:
        s = stack.pop()
        yield s
        if s.genus < gamma:
            stack.extend(oracle.oracle_children(s))


def iter_edges(gamma: int):
    """Yield (parent, removed generator, child) for all edges up to genus gamma."""
    stack = [oracle.from_gaps([])]
    while stack:
        s = stack.pop()
        if s.genus >= gamma:
            continue
        right = [x for x in oracle.minimal_generators(s) if x > s.frobenius]
        for sigma, child in zip(right, oracle.oracle_children(s)):
            yield s, sigma, child
            stack.append(child)


def has_shrink(s: oracle.CanonicalSemigroup) -> bool:
    return any(0 < x for x in s.left_elements())


def jump_locked(s: oracle.CanonicalSemigroup) -> bool:
    """True when removing right generators can never change the jump.

    Needs two positive members below the Frobenius number; with only one,
    the second member is the conductor and the chain child shifts it up.
    """
    return len([x for x in s.left_elements() if x > 0]) >= 2
