"""Edge maps for thres in {0.4, 0.8, 1.1, 1.4, 1.6, 2.0} at the standard configuration."""

from _common import parse

from scanedge.experiments import sweep
from scanedge.io import save_image

THRES = [0.4, 0.8, 1.1, 1.4, 1.6, 2.0]

if __name__ == "__main__":
    img, out = parse(__doc__)
    print(f"{'thres':>6} {'edges':>7} {'density':>8}")
    for t, run in sweep(img, THRES):
        save_image(run.edges.to_image(), out / f"thres_{t:g}.pgm")
        print(f"{t:6.1f} {run.metrics.edge_pixel_count:7d} {run.metrics.edge_density:8.4f}")
