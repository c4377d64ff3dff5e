"""Scan-line detector (thres 0.8) next to Canny (50/150, aperture 3), same 7x7 pre-blur."""

from _common import parse

from scanedge.canny import CannyParams
from scanedge.core_types import DetectorParams
from scanedge.experiments import run_canny, run_detect
from scanedge.io import save_image

if __name__ == "__main__":
    img, out = parse(__doc__)
    run = run_detect(img, DetectorParams(thres=0.8))
    cedges, cm = run_canny(img, CannyParams(50, 150, 3))
    save_image(run.edges.to_image(), out / "scanline.pgm")
    save_image(cedges.to_image(), out / "canny.pgm")
    both = (run.edges.mask & cedges.mask).sum()
    print(f"scan-line edges: {run.metrics.edge_pixel_count}")
    print(f"canny edges:     {cm['edge_pixel_count']}")
    print(f"coincident:      {both}")
