"""Window jump of 1 vs 4 pixels after an edge: edge count and mean horizontal run length."""

from _common import parse

from scanedge.core_types import DetectorParams
from scanedge.experiments import mean_horizontal_run, run_detect, soft_ramps
from scanedge.io import save_image

if __name__ == "__main__":
    img, out = parse(__doc__)
    for name, src in (("input", img), ("ramps", soft_ramps())):
        for adv in (1, 4):
            run = run_detect(src, DetectorParams(advance_on_edge=adv))
            save_image(run.edges.to_image(), out / f"{name}_advance{adv}.pgm")
            print(f"{name:6} advance={adv}  edges={run.metrics.edge_pixel_count:6d}  "
                  f"mean run={mean_horizontal_run(run.edges):.3f}")
