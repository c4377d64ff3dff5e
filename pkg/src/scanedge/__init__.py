"""Edge detection from per-line global and sliding-window local statistics of intensity differences."""

from .canny import CannyParams, canny
from .core_types import (
    DetectorParams,
    EdgeMap,
    GlobalStats,
    GrayImage,
    LocalWindowStats,
    ScanBuffer,
    image_new,
)
from .detector import (
    DetectionResult,
    LineScanResult,
    compute_differences,
    compute_smd,
    decide_edge,
    detect,
    detect_timed,
    global_stats,
    iter_windows,
    local_stats,
    scan_line,
)
from .io import MalformedImageError, read_pgm, read_png, write_pgm, write_png
from .postprocess import eliminate_isolated
from .preprocess import GaussianKernel, gaussian_blur, make_kernel

__all__ = [
    "CannyParams", "canny", "DetectorParams", "EdgeMap", "GlobalStats", "GrayImage",
    "LocalWindowStats", "ScanBuffer", "image_new", "DetectionResult", "LineScanResult",
    "compute_differences", "compute_smd", "decide_edge", "detect", "detect_timed",
    "global_stats", "iter_windows", "local_stats", "scan_line", "MalformedImageError",
    "read_pgm", "read_png", "write_pgm", "write_png", "eliminate_isolated",
    "GaussianKernel", "gaussian_blur", "make_kernel",
]
