"""Removal of isolated edge pixels."""

from __future__ import annotations

import numpy as np

from .core_types import EdgeMap


def neighbor_counts(mask: np.ndarray) -> np.ndarray:
    """Number of set pixels among the 8 neighbors; outside the image counts as unset."""
    m = np.pad(np.asarray(mask, dtype=np.int32), 1)
    rows, cols = mask.shape
    total = np.zeros((rows, cols), dtype=np.int32)
    for dr in (0, 1, 2):
        for dc in (0, 1, 2):
            if dr == 1 and dc == 1:
                continue
            total += m[dr : dr + rows, dc : dc + cols]
    return total


def eliminate_isolated(edges: EdgeMap) -> EdgeMap:
    """Drop every edge pixel with no edge among its 8 neighbors.

    Decisions read the input map only, so the result does not depend on visiting order.
    """
    mask = edges.mask
    return EdgeMap.from_mask(mask & (neighbor_counts(mask) > 0))
