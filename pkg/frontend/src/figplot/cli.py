import argparse
import sys

from .plot import plot


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="figplot",
        description="Render the JDV bound-curve figure from a bounds CSV.",
    )
    parser.add_argument("csv", help="bounds CSV produced by `jdvtools bounds`")
    parser.add_argument("out", help="output image path (format by extension; default SVG)")
    parser.add_argument(
        "--overlay-figure-variant",
        action="store_true",
        help="additionally draw the c*n/(n-1) curve variant",
    )
    args = parser.parse_args(argv)
    try:
        _, out = plot(args.csv, args.out, overlay_figure_variant=args.overlay_figure_variant)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
