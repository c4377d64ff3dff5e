"""Command-line entry point: ``scanedge detect | compare | sweep``.

Exit codes: 0 success, 2 usage error, 3 I/O error, 4 malformed image.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .canny import CannyParams
from .core_types import DetectorParams
from .experiments import run_canny, run_detect, sweep
from .io import MalformedImageError, load_image, save_image

log = logging.getLogger("scanedge")

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_MALFORMED = 0, 2, 3, 4


def _nonneg(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v >= 0 or v == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a finite nonnegative number, got {text}")
    return v


def _odd_kernel(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1 or v % 2 == 0:
        raise argparse.ArgumentTypeError(f"kernel size must be odd and >= 1, got {v}")
    return v


def _sigma(text: str):
    if text == "auto":
        return "auto"
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("sigma must be positive or 'auto'")
    return v


def _aperture(text: str) -> int:
    v = int(text)
    if v not in (3, 5, 7):
        raise argparse.ArgumentTypeError(f"aperture must be 3, 5 or 7, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="input image (binary PGM, or PNG with Pillow)")
    common.add_argument("--thres2", type=_nonneg, default=1.0, help="per-line mean floor (default 1)")
    common.add_argument("--thres3", type=_nonneg, default=6.0, help="local window mean floor (default 6)")
    common.add_argument("--advance", type=int, choices=(1, 4), default=4,
                        help="window jump after an edge (default 4)")
    common.add_argument("--no-isolated-elimination", action="store_true",
                        help="keep edge pixels without edge neighbors")
    common.add_argument("--blur-kernel", type=_odd_kernel, default=7, help="Gaussian size, 1 = off (default 7)")
    common.add_argument("--no-blur", action="store_true", help="same as --blur-kernel 1")
    common.add_argument("--blur-sigma", type=_sigma, default="auto")
    common.add_argument("--metrics", help="write metrics JSON here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="scanedge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[common], help="run the scan-line detector")
    p.add_argument("--thres", type=_nonneg, default=0.8, help="global std multiplier (default 0.8)")
    p.add_argument("--output", help="edge map path (.pgm or .png)")

    p = sub.add_parser("compare", parents=[common], help="scan-line detector next to Canny")
    p.add_argument("--thres", type=_nonneg, default=0.8)
    p.add_argument("--output", help="detector edge map (default <stem>_edges.pgm)")
    p.add_argument("--canny-output", help="Canny edge map (default <stem>_canny.pgm)")
    p.add_argument("--canny-low", type=_nonneg, default=50.0)
    p.add_argument("--canny-high", type=_nonneg, default=150.0)
    p.add_argument("--canny-aperture", type=_aperture, default=3)

    p = sub.add_parser("sweep", parents=[common], help="one detection per thres value")
    p.add_argument("--thres-list", type=_nonneg, nargs="+", required=True, metavar="THRES")
    p.add_argument("--output-dir", help="write <stem>_thres<value>.pgm maps here")
    return parser


def _params(args: argparse.Namespace, thres: float) -> DetectorParams:
    return DetectorParams(
        thres=thres,
        thres2=args.thres2,
        thres3=args.thres3,
        advance_on_edge=args.advance,
        eliminate_isolated=not args.no_isolated_elimination,
        blur_kernel=1 if args.no_blur else args.blur_kernel,
        blur_sigma=args.blur_sigma,
    )


def _emit(doc, dest: Optional[str]) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if dest:
        Path(dest).write_text(text)
    else:
        sys.stdout.write(text)


def _dispatch(args: argparse.Namespace) -> int:
    img = load_image(args.input)
    stem = Path(args.input).stem
    log.info("loaded %s: %dx%d", args.input, img.rows, img.cols)

    if args.command == "detect":
        out = run_detect(img, _params(args, args.thres))
        if args.output:
            save_image(out.edges.to_image(), args.output)
        _emit(out.metrics.to_dict(), args.metrics)

    elif args.command == "compare":
        params = _params(args, args.thres)
        cp = CannyParams(args.canny_low, args.canny_high, args.canny_aperture)
        out = run_detect(img, params)
        cedges, cmetrics = run_canny(img, cp, params.blur_kernel, params.blur_sigma)
        save_image(out.edges.to_image(), args.output or f"{stem}_edges.pgm")
        save_image(cedges.to_image(), args.canny_output or f"{stem}_canny.pgm")
        _emit({"detector": out.metrics.to_dict(), "canny": cmetrics}, args.metrics)

    elif args.command == "sweep":
        rows = []
        outdir = Path(args.output_dir) if args.output_dir else None
        if outdir:
            outdir.mkdir(parents=True, exist_ok=True)
        for thres, out in sweep(img, args.thres_list, _params(args, args.thres_list[0])):
            rows.append({"thres": thres, **out.metrics.to_dict()})
            if outdir:
                save_image(out.edges.to_image(), outdir / f"{stem}_thres{thres:g}.pgm")
        _emit(rows, args.metrics)
    return EXIT_OK


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.command == "compare" and args.canny_low > args.canny_high:
        parser.print_usage(sys.stderr)
        print("scanedge: error: --canny-low exceeds --canny-high", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return _dispatch(args)
    except MalformedImageError as exc:
        print(f"scanedge: malformed image: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"scanedge: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
