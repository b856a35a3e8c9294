"""Range, essential contribution and word-metric bounds on Delta, with a BFS oracle."""

from __future__ import annotations

import logging
from collections import deque
from math import ceil
from typing import Literal

from .element import DeltaElement, DeltaGroup
from .errors import DistanceModeError

logger = logging.getLogger(__name__)

METRIC_FACTOR = 500
LEVEL_FACTOR = 9
INTERVAL_FACTOR = 3

Interval = tuple[int, int]
DistanceMode = Literal["interval", "level"]


def range_interval(delta: DeltaGroup, x: DeltaElement) -> Interval:
    """Smallest interval holding 0, t, supp f0 and both x and x - k_m for x in supp f'_m."""
    sites = [0, x.t, *(s for s, _ in x.f0)]
    for m, level in enumerate(x.fprime, start=1):
        k = delta.params.k(m)
        for s, _ in level:
            sites.extend((s, s - k))
    return min(sites), max(sites)


def range_size(delta: DeltaGroup, x: DeltaElement) -> int:
    """Number of sites of the range interval; 0 for the identity."""
    if x == delta.identity():
        return 0
    lo, hi = range_interval(delta, x)
    return hi - lo + 1


def window_width(k: int) -> int:
    """Length of the half-open windows [j k / 2, (j + 1) k / 2 - 1], floored and at least 1."""
    return max(1, k // 2)


def essential_contribution(delta: DeltaGroup, x: DeltaElement, m: int) -> int:
    """k_m times the sum over windows meeting the range of max (|f_m(s)| - 1)_+."""
    if m == 0:
        return 0
    k = delta.params.k(m)
    gamma = delta.params.gamma(m)
    width = window_width(k)
    lo, hi = range_interval(delta, x)
    peaks: dict[int, int] = {}
    for site, value in delta.full_map(x, m).items():
        window = site // width
        if window * width > hi or (window + 1) * width - 1 < lo:
            continue
        peaks[window] = max(peaks.get(window, 0), gamma.word_lengths[value] - 1)
    return k * sum(peaks.values())


def word_length_upper(delta: DeltaGroup, x: DeltaElement) -> int:
    size = range_size(delta, x)
    if size == 0:
        return 0
    top = delta.params.level_index(size)
    total = sum(
        LEVEL_FACTOR * (size + essential_contribution(delta, x, m)) for m in range(top + 1)
    )
    return METRIC_FACTOR * total


def ball_distances(
    delta: DeltaGroup,
    radius: int,
    window: Interval,
    *,
    target: DeltaElement | None = None,
) -> dict[DeltaElement, int]:
    """BFS from the identity over generator words keeping the cursor inside ``window``.

    Stops early once ``target`` is reached.
    """
    lo, hi = window
    start = delta.identity()
    distances = {start: 0}
    if target == start:
        return distances
    queue = deque([start])
    labels = delta.generator_labels
    while queue:
        current = queue.popleft()
        depth = distances[current]
        if depth >= radius:
            continue
        for label in labels:
            nxt = delta.apply_generator(current, label)
            if not lo <= nxt.t <= hi or nxt in distances:
                continue
            distances[nxt] = depth + 1
            if nxt == target:
                return distances
            queue.append(nxt)
    return distances


def word_length_exact(
    delta: DeltaGroup,
    x: DeltaElement,
    limit: int,
    *,
    pad: int = 1,
    window: Interval | None = None,
) -> int | None:
    """Word length of ``x`` found by windowed BFS, or ``None`` past ``limit``.

    The window defaults to the range interval widened by ``pad`` sites.
    """
    if window is None:
        lo, hi = range_interval(delta, x)
        window = (lo - pad, hi + pad)
    found = ball_distances(delta, limit, window, target=x).get(x)
    if found is None:
        logger.debug("word length search truncated limit=%s window=%s", limit, window)
    return found


def distance_exact(
    delta: DeltaGroup, x: DeltaElement, y: DeltaElement, limit: int, *, pad: int = 1
) -> int | None:
    return word_length_exact(delta, delta.multiply(delta.inverse(x), y), limit, pad=pad)


def _level_term(delta: DeltaGroup, m: int, sites: int) -> int:
    if m == 0:
        return LEVEL_FACTOR * sites
    k = delta.params.k(m)
    windows = ceil(sites / window_width(k)) + 2
    return LEVEL_FACTOR * (sites + delta.params.gamma(m).diameter_l * k * windows)


def level_bound(delta: DeltaGroup, sites: int, top: int = 0) -> int:
    """Per-level metric estimate for elements whose ranges fit in [0, sites - 1].

    Sums up to the higher of ``top`` and the level where ``sites`` lives, plus
    sites - 1 for the cursor.
    """
    highest = max(top, delta.params.level_index(sites))
    total = sum(_level_term(delta, m, sites) for m in range(highest + 1))
    return METRIC_FACTOR * total + sites - 1


def distance_upper(
    delta: DeltaGroup, x: DeltaElement, y: DeltaElement, mode: DistanceMode
) -> int:
    """Certified upper bound on d(x, y).

    ``interval``: f' agree and f0 differ only inside an interval I holding both
    cursors; the bound is 3 |I| with |I| counted in sites.
    ``level``: both ranges lie in [0, D]; the bound sums the per-level metric
    estimate up to the highest level where f' differ, plus D for the cursor.
    """
    if mode == "interval":
        if x.fprime != y.fprime:
            raise DistanceModeError("interval bound needs equal derived data", mode=mode)
        left, right = x.f0_map(), y.f0_map()
        differing = [s for s in left.keys() | right.keys() if left.get(s, 0) != right.get(s, 0)]
        sites = [x.t, y.t, *differing]
        return INTERVAL_FACTOR * (max(sites) - min(sites) + 1)
    if mode != "level":
        raise DistanceModeError(f"unknown distance mode {mode!r}", mode=str(mode))

    x_lo, x_hi = range_interval(delta, x)
    y_lo, y_hi = range_interval(delta, y)
    if min(x_lo, y_lo) < 0:
        raise DistanceModeError("level bound needs both ranges inside [0, D]", mode=mode)
    reach = max(x_hi, y_hi)
    differing_levels = [
        m for m in range(1, delta.depth + 1) if x.fprime[m - 1] != y.fprime[m - 1]
    ]
    return level_bound(delta, reach + 1, max(differing_levels, default=0))


__all__ = [
    "INTERVAL_FACTOR",
    "LEVEL_FACTOR",
    "METRIC_FACTOR",
    "DistanceMode",
    "Interval",
    "ball_distances",
    "distance_exact",
    "distance_upper",
    "essential_contribution",
    "level_bound",
    "range_interval",
    "range_size",
    "word_length_exact",
    "word_length_upper",
]
