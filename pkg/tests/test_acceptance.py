"""Exit criteria. Each test is one criterion (or one clause of it); the
terminal summary prints a PASS/FAIL line per test, see conftest.py."""

import json
import time

import numpy as np
import pytest

from oracles import blur2d_oracle, isolated_oracle, reachable_from, scan_line_oracle
from scanedge.canny import CannyParams, canny, hysteresis, non_max_suppression, quantize_direction, sobel
from scanedge.cli import run_cli
from scanedge.core_types import DetectorParams, EdgeMap, GrayImage
from scanedge.detector import (
    compute_differences,
    compute_smd,
    detect,
    global_stats,
    iter_windows,
    scan_line,
)
from scanedge.experiments import bundled_image, hard_step, mean_horizontal_run, run_detect, soft_ramps
from scanedge.io import write_pgm
from scanedge.postprocess import eliminate_isolated
from scanedge.preprocess import convolve_separable, gaussian_blur, make_kernel

FIG01_ROW = [2, 2, 2, 2, 2, 5, 8, 8, 8, 8, 8]
WORKED = DetectorParams(thres=1, thres2=1, thres3=2, advance_on_edge=4, blur_kernel=1)
# (mlsmd, dpl) for window starts 1..4 as printed in the worked example
PRINTED_WINDOWS = {1: (1.0, 1.41), 2: (3.0, 2.44), 3: (4.0, 1.41), 4: (4.0, 1.41)}


def test_criterion_01a_golden_example_scan():
    diffs = compute_differences(FIG01_ROW)
    smds = compute_smd(diffs)
    assert diffs.tolist() == [0, 0, 0, 0, 3, 3, 0, 0, 0, 0]
    assert smds.tolist() == [0, 0, 0, 3, 6, 3, 0, 0, 0]
    assert global_stats(smds).mgsmd == pytest.approx(1.333, abs=0.005)
    assert scan_line(FIG01_ROW, WORKED).edge_indices == (5,)
    visited = list(iter_windows(FIG01_ROW, WORKED))
    # edge at start 4, jump to 8, fewer than three smds left: no more windows
    assert [w.start for w in visited] == [0, 1, 2, 3, 4]
    assert visited[-1].fired


@pytest.mark.parametrize("start", [1, 2, 3, 4])
def test_criterion_01b_golden_window_stats(start):
    windows = {w.start: w.local for w in iter_windows(FIG01_ROW, WORKED)}
    mean, std = PRINTED_WINDOWS[start]
    assert windows[start].mlsmd == pytest.approx(mean, abs=0.01)
    assert windows[start].dpl == pytest.approx(std, abs=0.01)


def test_criterion_02_oracle_equivalence():
    rng = np.random.default_rng(20240502)
    p = DetectorParams()
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(1000):
        line = rng.integers(0, 256, rng.integers(5, 65)).tolist()
        got = list(scan_line(line, p).edge_indices)
        mismatches += got != scan_line_oracle(line, p.thres, p.thres2, p.thres3, p.advance_on_edge)
    elapsed = time.perf_counter() - t0
    assert mismatches == 0
    assert elapsed < 1.0


def test_criterion_03_offset_invariance():
    rng = np.random.default_rng(3)
    params = DetectorParams()
    for _ in range(50):
        img = rng.integers(10, 201, (64, 64))
        for k in (1, -1, 10, -10, 50, -50):
            base = img if img.min() + k >= 0 else img - k
            shifted = base + k
            assert shifted.min() >= 0 and shifted.max() <= 255
            a = detect(GrayImage.from_array(base), params)
            b = detect(GrayImage.from_array(shifted), params)
            assert np.array_equal(a.values, b.values)


@pytest.mark.parametrize("shape", [(1, 1), (1, 5), (5, 1), (4, 4), (7, 19), (64, 64), (200, 133)])
@pytest.mark.parametrize("value", [0, 1, 128, 255])
def test_criterion_04_quiet_image(shape, value):
    img = GrayImage.from_array(np.full(shape, value, np.uint8))
    assert detect(img, DetectorParams()).edge_count == 0
    assert detect(img, DetectorParams(blur_kernel=1, eliminate_isolated=False)).edge_count == 0


def test_criterion_05_isolated_elimination():
    rng = np.random.default_rng(5)
    for _ in range(100):
        m = EdgeMap.from_mask(rng.random((32, 32)) < rng.uniform(0.01, 0.5))
        once = eliminate_isolated(m)
        assert eliminate_isolated(once) == once
        assert not np.any(once.mask & ~m.mask)
        assert once.values.tolist() == isolated_oracle(m.values.tolist())


def test_criterion_06_blur_fidelity():
    assert make_kernel(7).sigma == 1.4
    for size in (1, 3, 5, 7, 9, 11):
        assert abs(make_kernel(size).weights.sum() - 1.0) < 1e-12
    rng = np.random.default_rng(6)
    w = make_kernel(7).weights
    for _ in range(20):
        arr = rng.integers(0, 256, (rng.integers(1, 17), rng.integers(1, 17)))
        fast = convolve_separable(arr, w)
        slow = np.array(blur2d_oracle(arr.tolist(), list(w)))
        assert np.max(np.abs(fast - slow)) < 0.5


def test_criterion_07_thres_trend():
    img = bundled_image()
    counts = [run_detect(img, DetectorParams(thres=t)).metrics.edge_pixel_count for t in (0.4, 0.8, 1.6)]
    print("edge counts at thres 0.4/0.8/1.6:", counts)
    assert counts[0] >= counts[1] >= counts[2]
    assert counts[2] < counts[0]


def test_criterion_08_advance_thickness():
    img = soft_ramps()
    runs = {
        adv: mean_horizontal_run(detect(img, DetectorParams(advance_on_edge=adv)))
        for adv in (1, 4)
    }
    print("mean horizontal run length:", runs)
    assert runs[1] > runs[4]


def test_criterion_09_canny_baseline():
    p = CannyParams(low_threshold=50, high_threshold=150, aperture=3)
    out = canny(hard_step(), p)
    assert set(np.unique(out.values)) <= {0, 255}
    interior = out.mask[1:-1]
    assert interior[:, 7].all()
    assert interior.sum(axis=1).tolist() == [1] * 14

    rng = np.random.default_rng(9)
    for _ in range(20):
        img = GrayImage.from_array(rng.integers(0, 256, (24, 24)))
        img = gaussian_blur(img, make_kernel(3))
        gx, gy = sobel(img.pixels, 3)
        mag = np.abs(gx) + np.abs(gy)
        thin = non_max_suppression(mag, quantize_direction(gx, gy))
        strong = thin & (mag > 150)
        weak = thin & (mag > 50) & ~strong
        assert not hysteresis(np.zeros_like(strong), weak).any()
        edges = canny(img, p).mask
        reach = np.array(reachable_from(list(zip(*np.nonzero(strong))), edges.tolist()), bool)
        assert np.array_equal(reach, edges)


def test_criterion_10_performance(tmp_path):
    rng = np.random.default_rng(10)
    base = np.kron(rng.integers(0, 256, (32, 32)), np.ones((16, 16))) + rng.normal(0, 4, (512, 512))
    img = GrayImage.from_array(np.clip(np.rint(base), 0, 255).astype(np.uint8))
    detect(img)  # warm-up
    t0 = time.perf_counter()
    detect(img, DetectorParams(), workers=None)
    elapsed = time.perf_counter() - t0
    print(f"512x512 detect: {elapsed * 1e3:.1f} ms")
    assert elapsed < 1.0

    src, met = tmp_path / "big.pgm", tmp_path / "m.json"
    src.write_bytes(write_pgm(img))
    assert run_cli(["detect", "--input", str(src), "--metrics", str(met)]) == 0
    doc = json.loads(met.read_text())
    for stage in ("blur", "hscan", "vscan", "elim"):
        assert doc[f"wall_time_ms_{stage}"] >= 0
