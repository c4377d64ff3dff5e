"""Scan-line edge detector.

Every row (horizontal pass) and every column (vertical pass) is treated as a
1-D line. For a line ``a`` of length n::

    diffs[i] = a[i+1] - a[i]                 (n-1 values)
    smd[i]   = |diffs[i]| + |diffs[i+1]|     (n-2 values)

Per line, the mean ``mgsmd`` and sample standard deviation ``dpg`` of smd are
computed once. A window of three consecutive smd values (five pixels) slides
along the line; its mean ``mlsmd`` and population standard deviation ``dpl``
are compared against the window's first smd. When all four conditions of
:func:`decide_edge` hold, the second pixel of the window is an edge and the
window start jumps by ``advance_on_edge``; otherwise it moves by one.

The horizontal and vertical results are OR-ed into one :class:`EdgeMap`.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .core_types import DetectorParams, EdgeMap, GlobalStats, GrayImage, LocalWindowStats
from .postprocess import eliminate_isolated
from .preprocess import gaussian_blur, make_kernel

WINDOW_PIXELS = 5


def compute_differences(line: Sequence[int]) -> np.ndarray:
    a = np.asarray(line, dtype=np.int64)
    if a.ndim != 1 or a.size < 2:
        raise ValueError(f"need a line of at least 2 pixels, got {a.size}")
    return a[1:] - a[:-1]


def compute_smd(diffs: Sequence[int]) -> np.ndarray:
    d = np.abs(np.asarray(diffs, dtype=np.int64))
    if d.ndim != 1 or d.size < 2:
        raise ValueError(f"need at least 2 differences, got {d.size}")
    return d[:-1] + d[1:]


# Array kernels shared by the scalar API and the batched scan so that both
# produce bit-identical statistics.


def _global_arrays(smds: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-row (mgsmd, dpg) for a 2-D int array of smd rows."""
    count = smds.shape[1]
    mean = smds.sum(axis=1) / count
    dev = mean[:, None] - smds
    std = np.sqrt((dev * dev).sum(axis=1) / (count - 1))
    return mean, std


def _local_arrays(smds: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(mlsmd, dpl) for every window start of each row of a 2-D smd array."""
    s0 = smds[:, :-2].astype(np.float64)
    s1 = smds[:, 1:-1].astype(np.float64)
    s2 = smds[:, 2:].astype(np.float64)
    mean = (s0 + s1 + s2) / 3.0
    d0, d1, d2 = mean - s0, mean - s1, mean - s2
    std = np.sqrt((d0 * d0 + d1 * d1 + d2 * d2) / 3.0)
    return mean, std


def _fires(smd0, mlsmd, dpl, mgsmd, dpg, params: DetectorParams):
    return (
        (smd0 > mlsmd + dpl)
        & (smd0 > mgsmd + params.thres * dpg)
        & (mgsmd > params.thres2)
        & (mlsmd > params.thres3)
    )


def global_stats(smds: Sequence[int]) -> GlobalStats:
    s = np.asarray(smds, dtype=np.int64)
    if s.ndim != 1 or s.size < 2:
        raise ValueError(f"global statistics need at least 2 smd values, got {s.size}")
    mean, std = _global_arrays(s[None, :])
    return GlobalStats(float(mean[0]), float(std[0]))


def local_stats(smds: Sequence[int], start: int) -> LocalWindowStats:
    s = np.asarray(smds, dtype=np.int64)
    if start < 0 or start + 2 >= s.size:
        raise ValueError(f"window at {start} exceeds {s.size} smd values")
    mean, std = _local_arrays(s[None, start : start + 3])
    return LocalWindowStats(float(mean[0, 0]), float(std[0, 0]))


def decide_edge(
    smd0: float, local: LocalWindowStats, glob: GlobalStats, params: DetectorParams
) -> bool:
    return bool(_fires(smd0, local.mlsmd, local.dpl, glob.mgsmd, glob.dpg, params))


@dataclass(frozen=True)
class LineScanResult:
    edge_indices: tuple[int, ...]


@dataclass(frozen=True)
class WindowEvaluation:
    start: int
    smd0: int
    local: LocalWindowStats
    fired: bool


def iter_windows(line: Sequence[int], params: DetectorParams) -> Iterator[WindowEvaluation]:
    """Walk the evaluation windows of one line in scan order, one record per window visited."""
    a = np.asarray(line, dtype=np.int64)
    if a.size < WINDOW_PIXELS:
        return
    smds = compute_smd(compute_differences(a))
    glob = global_stats(smds)
    w = 0
    while w + 2 <= smds.size - 1:
        loc = local_stats(smds, w)
        fired = decide_edge(smds[w], loc, glob, params)
        yield WindowEvaluation(w, int(smds[w]), loc, fired)
        w += params.advance_on_edge if fired else 1


def _walk(fire_row: np.ndarray, advance: int) -> np.ndarray:
    # a window's decision does not depend on the walk, only which windows get visited
    hits = np.flatnonzero(fire_row)
    if advance == 1 or hits.size == 0:
        return hits
    kept = []
    nxt = 0
    for w in hits.tolist():
        if w >= nxt:
            kept.append(w)
            nxt = w + advance
    return np.asarray(kept, dtype=np.intp)


def scan_lines(lines: np.ndarray, params: DetectorParams) -> list[np.ndarray]:
    """Edge pixel indices for each row of a 2-D array of equal-length lines."""
    lines = np.asarray(lines, dtype=np.int64)
    n_lines, n = lines.shape
    if n < WINDOW_PIXELS:
        return [np.zeros(0, dtype=np.intp) for _ in range(n_lines)]
    diffs = np.abs(lines[:, 1:] - lines[:, :-1])
    smds = diffs[:, :-1] + diffs[:, 1:]
    mgsmd, dpg = _global_arrays(smds)
    mlsmd, dpl = _local_arrays(smds)
    fire = _fires(smds[:, :-2], mlsmd, dpl, mgsmd[:, None], dpg[:, None], params)
    return [_walk(fire[i], params.advance_on_edge) + 1 for i in range(n_lines)]


def scan_line(line: Sequence[int], params: DetectorParams) -> LineScanResult:
    a = np.asarray(line, dtype=np.int64)
    if a.ndim != 1:
        raise ValueError(f"expected a 1-D line, got shape {a.shape}")
    if a.size < WINDOW_PIXELS:
        return LineScanResult(())
    (idx,) = scan_lines(a[None, :], params)
    return LineScanResult(tuple(int(i) for i in idx))


def _scan_mask(data: np.ndarray, params: DetectorParams, workers: Optional[int]) -> np.ndarray:
    """Boolean mask of edges found scanning each row of ``data``."""
    mask = np.zeros(data.shape, dtype=bool)
    n_rows = data.shape[0]

    def run(lo: int, hi: int) -> None:
        for off, idx in enumerate(scan_lines(data[lo:hi], params)):
            mask[lo + off, idx] = True

    if not workers or workers <= 1 or n_rows < 2 * workers:
        run(0, n_rows)
    else:
        bounds = np.linspace(0, n_rows, workers + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, bounds[:-1], bounds[1:]))
    return mask


@dataclass(frozen=True)
class DetectionResult:
    edges: EdgeMap
    raw_edge_count: int
    isolated_removed: int
    timings_ms: dict = field(default_factory=dict)


def detect_timed(
    img: GrayImage, params: DetectorParams = DetectorParams(), workers: Optional[int] = None
) -> DetectionResult:
    timings = {}
    t0 = time.perf_counter()
    if params.blur_kernel > 1:
        img = gaussian_blur(img, make_kernel(params.blur_kernel, params.blur_sigma))
    t1 = time.perf_counter()
    timings["blur"] = (t1 - t0) * 1e3

    data = img.pixels
    hmask = _scan_mask(data, params, workers)
    t2 = time.perf_counter()
    timings["hscan"] = (t2 - t1) * 1e3

    # columns become contiguous rows of the transpose
    vmask = _scan_mask(np.ascontiguousarray(data.T), params, workers).T
    t3 = time.perf_counter()
    timings["vscan"] = (t3 - t2) * 1e3

    edges = EdgeMap.from_mask(hmask | vmask)
    raw = edges.edge_count
    if params.eliminate_isolated:
        edges = eliminate_isolated(edges)
    timings["elim"] = (time.perf_counter() - t3) * 1e3
    return DetectionResult(edges, raw, raw - edges.edge_count, timings)


def detect(
    img: GrayImage, params: DetectorParams = DetectorParams(), workers: Optional[int] = None
) -> EdgeMap:
    return detect_timed(img, params, workers).edges
