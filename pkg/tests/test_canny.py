import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from oracles import reachable_from
from scanedge.canny import (
    CannyParams,
    canny,
    hysteresis,
    non_max_suppression,
    quantize_direction,
    sobel,
    sobel_kernels,
)
from scanedge.core_types import GrayImage
from scanedge.experiments import hard_step

PAPER = CannyParams(low_threshold=50, high_threshold=150, aperture=3)

images = st.tuples(st.integers(3, 20), st.integers(3, 20)).flatmap(lambda s: hnp.arrays(np.uint8, s))


@pytest.mark.parametrize(
    "aperture,smooth,deriv",
    [
        (3, [1, 2, 1], [-1, 0, 1]),
        (5, [1, 4, 6, 4, 1], [-1, -2, 0, 2, 1]),
        (7, [1, 6, 15, 20, 15, 6, 1], [-1, -4, -5, 0, 5, 4, 1]),
    ],
)
def test_sobel_kernels(aperture, smooth, deriv):
    s, d = sobel_kernels(aperture)
    assert s.tolist() == smooth
    assert d.tolist() == deriv


@pytest.mark.parametrize(
    "kwargs", [{"low_threshold": 200, "high_threshold": 100}, {"aperture": 4}, {"low_threshold": -1}]
)
def test_invalid_params(kwargs):
    with pytest.raises(ValueError):
        CannyParams(**kwargs)


def test_sobel_on_step():
    gx, gy = sobel(hard_step().pixels)
    # columns 7 and 8 straddle the 0 -> 255 step
    assert gx[5, 7] == gx[5, 8] == 4 * 255
    assert gx[5, 6] == 0
    assert np.all(gy == 0)


@pytest.mark.parametrize(
    "gx,gy,sector",
    [(1, 0, 0), (-1, 0, 0), (0, 1, 90), (0, -1, 90), (1, 1, 45), (-1, -1, 45), (-1, 1, 135), (1, 0.3, 0), (1, 0.5, 45)],
)
def test_quantize_direction(gx, gy, sector):
    assert quantize_direction(np.array([gx]), np.array([gy]))[0] == sector


def test_nms_plateau_keeps_one():
    mag = np.array([[0, 5, 5, 0]], float)
    keep = non_max_suppression(mag, np.zeros_like(mag, int))
    assert keep.tolist() == [[False, True, False, False]]


def test_constant_image():
    assert canny(GrayImage.from_array(np.full((10, 10), 90, np.uint8)), PAPER).edge_count == 0


def test_hard_step_single_line():
    out = canny(hard_step(), PAPER).mask
    expected = np.zeros((16, 16), bool)
    expected[:, 7] = True
    assert np.array_equal(out[1:-1], expected[1:-1])


def test_horizontal_step_single_line():
    img = GrayImage.from_array(hard_step().pixels.T.copy())
    out = canny(img, PAPER).mask
    assert out[1:-1, 1:-1].sum(axis=0).tolist() == [1] * 14


def test_nms_thinness_on_vertical_steps():
    for at in range(3, 13):
        for low, high in [(0, 255), (40, 90), (200, 10)]:
            out = canny(hard_step(16, low, high, at), CannyParams(10, 30)).mask
            assert out[1:-1].sum(axis=1).max() <= 2


@settings(max_examples=60, deadline=None)
@given(images, st.sampled_from([3, 5, 7]))
def test_output_binary(arr, ap):
    out = canny(GrayImage.from_array(arr), CannyParams(50, 150, ap))
    assert set(np.unique(out.values)) <= {0, 255}


@settings(max_examples=60, deadline=None)
@given(images)
def test_weak_pixels_connect_to_strong(arr):
    img = GrayImage.from_array(arr)
    gx, gy = sobel(img.pixels)
    mag = np.abs(gx) + np.abs(gy)
    thin = non_max_suppression(mag, quantize_direction(gx, gy))
    strong = thin & (mag > 150)
    out = canny(img, PAPER).mask
    seeds = list(zip(*np.nonzero(strong)))
    reach = np.array(reachable_from(seeds, out.tolist()), bool)
    assert np.array_equal(reach, out)


@settings(max_examples=60, deadline=None)
@given(hnp.arrays(bool, (12, 12)), hnp.arrays(bool, (12, 12)))
def test_hysteresis_matches_bfs(strong, weak):
    weak = weak & ~strong
    seeds = list(zip(*np.nonzero(strong)))
    expected = np.array(reachable_from(seeds, (strong | weak).tolist()), bool)
    assert np.array_equal(hysteresis(strong, weak), expected)


@settings(max_examples=60, deadline=None)
@given(hnp.arrays(bool, (12, 12)))
def test_hysteresis_without_strong_is_empty(weak):
    assert not hysteresis(np.zeros_like(weak), weak).any()
