import argparse
from pathlib import Path

from scanedge.experiments import bundled_image
from scanedge.io import load_image


def parse(description):
    ap = argparse.ArgumentParser(description=description)
    ap.add_argument("--input", help="grayscale PGM/PNG (default: bundled cameraman)")
    ap.add_argument("--out", default="results", help="output directory")
    args = ap.parse_args()
    img = load_image(args.input) if args.input else bundled_image()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return img, out
