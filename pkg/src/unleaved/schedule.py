"""Partition the trimmed walk into independent work items and run them.

Every genus-gamma semigroup is counted by exactly one item: the closed-form
item covers both multiplicity extremes plus all per-multiplicity bookkeeping,
each pseudo-ordinary chain node gets one item for its non-chain subtrees, and
each surviving quasi-ordinary root gets one item for its subtree.  Merging is
a plain sum, so results are identical for any worker count and any completion
order.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import walker
from .walker import ExplorationStats, ZERO_STATS


class WorkKind(enum.Enum):
    CLOSED_FORM = "closed-form"
    PSEUDO_CHAIN = "pseudo-chain"
    QUASI_ROOT = "quasi-root"


@dataclass(frozen=True, slots=True)
class WorkItem:
    kind: WorkKind
    gamma: int
    m: int = 0
    u: int = 0
    frobenius: int = 0


class WorkerFailure(RuntimeError):
    """A parallel work item raised; the original error is the cause."""


def build_schedule(gamma: int) -> list[WorkItem]:
    if gamma < 8:
        raise ValueError("the trimmed walk needs gamma >= 8")
    items = [WorkItem(WorkKind.CLOSED_FORM, gamma)]
    chains, quasi = walker.middle_multiplicities(gamma)
    items.extend(WorkItem(WorkKind.PSEUDO_CHAIN, gamma, m=m, u=u) for m, u in chains)
    items.extend(WorkItem(WorkKind.QUASI_ROOT, gamma, m=m, frobenius=fro)
                 for m, fro in quasi)
    return items


def run_item(item: WorkItem) -> tuple[int, ExplorationStats]:
    gamma = item.gamma
    acc = walker._Acc()
    if item.kind is WorkKind.CLOSED_FORM:
        count = walker._closed_seed(gamma, acc)
    elif item.kind is WorkKind.PSEUDO_CHAIN:
        count = walker._pseudo_chain_item(item.m, item.u, gamma, acc)
    else:
        count = walker._quasi_root_item(item.m, item.frobenius, gamma, acc)
    return count, ExplorationStats(count, count + acc.internal, acc.encoded, acc.trimmed)


def run_parallel(schedule: list[WorkItem], workers: int) -> tuple[int, ExplorationStats]:
    """Run a schedule and merge the results order-independently."""
    if workers < 1:
        raise ValueError("need at least one worker")
    total = 0
    stats = ZERO_STATS
    if workers == 1 or len(schedule) <= 1:
        for item in schedule:
            count, sub = run_item(item)
            total += count
            stats = stats + sub
        return total, stats
    try:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for count, sub in pool.map(run_item, schedule, chunksize=8):
                total += count
                stats = stats + sub
    except Exception as exc:
        raise WorkerFailure(f"work item failed: {exc}") from exc
    return total, stats
