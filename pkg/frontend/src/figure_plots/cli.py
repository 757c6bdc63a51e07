"""Command line entry point: `figure-plots render --in DIR --out DIR`."""

from __future__ import annotations

import argparse
import sys

from .artifacts import ArtifactError
from .plots import DEFAULT_B_SLICES, DEFAULT_QM_SLICES, render_all

__all__ = ["main"]


def _floats(spec: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in spec.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {spec!r}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="figure-plots",
        description="Render the figure catalogue from solve CSV artifacts.")
    sub = parser.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("render", help="render every catalogue figure")
    p.add_argument("--in", dest="artifact_dir", required=True,
                   help="solve artifact directory (CSV files)")
    p.add_argument("--out", dest="out_dir", required=True,
                   help="directory for the rendered PNGs")
    p.add_argument("--qm", type=_floats, default=DEFAULT_QM_SLICES,
                   help="q_m conditioning values, e.g. -80,0,80")
    p.add_argument("--b", type=_floats, default=DEFAULT_B_SLICES,
                   help="b conditioning values, e.g. -2,0,2")
    args = parser.parse_args(argv)
    try:
        written = render_all(args.artifact_dir, args.out_dir,
                             qm_slices=args.qm, b_slices=args.b)
    except ArtifactError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(f"rendered {len(written)} figure(s) in {args.out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
