"""Command line: canonize, compare, decompose, generate, decode and recognize circle graphs"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from . import __version__
from .core.config import settings
from .core.exceptions import CircleCanonError, FormatError
from .core.logging import setup_logging
from .services.chord_service import chord_service
from .services.oracle_service import oracle_service
from .services.pipeline_service import pipeline_service
from .utils.dot import tree_to_dot
from .utils.formats import (
    GRAPH_HEADER,
    detect_kind,
    format_encoding,
    format_graph,
    format_rep,
    parse_encoding,
    parse_graph,
    parse_input,
    read_text,
)

logger = logging.getLogger(__name__)

EXIT_ISOMORPHIC = 0
EXIT_NON_ISOMORPHIC = 1
EXIT_ERROR = 2


def _write(args: argparse.Namespace, text: str, stdout: TextIO) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        stdout.write(text)


def cmd_canon(args: argparse.Namespace, stdout: TextIO) -> int:
    encoding = pipeline_service.canon_graph(parse_input(read_text(args.file)))
    _write(args, format_encoding(encoding), stdout)
    return 0


def cmd_iso(args: argparse.Namespace, stdout: TextIO) -> int:
    first = parse_input(read_text(args.first))
    second = parse_input(read_text(args.second))
    if pipeline_service.isomorphic(first, second):
        stdout.write("isomorphic\n")
        return EXIT_ISOMORPHIC
    stdout.write("non-isomorphic\n")
    return EXIT_NON_ISOMORPHIC


def cmd_tree(args: argparse.Namespace, stdout: TextIO) -> int:
    tree = pipeline_service.minimal_split_tree(parse_input(read_text(args.file)))
    _write(args, tree_to_dot(tree), stdout)
    return 0


def cmd_gen(args: argparse.Namespace, stdout: TextIO) -> int:
    if args.n < 1:
        raise FormatError(f"gen needs at least one chord, got {args.n}")
    _write(args, format_rep(chord_service.random_rep(args.n, args.seed)), stdout)
    return 0


def cmd_decode(args: argparse.Namespace, stdout: TextIO) -> int:
    graph = pipeline_service.decode_graph(parse_encoding(read_text(args.file)))
    _write(args, format_graph(graph), stdout)
    return 0


def cmd_recognize(args: argparse.Namespace, stdout: TextIO) -> int:
    text = read_text(args.file)
    if detect_kind(text) != GRAPH_HEADER:
        raise FormatError("recognize expects a graph file")
    rep = oracle_service.brute_find_rep(parse_graph(text))
    _write(args, format_rep(rep) if rep is not None else "not a circle graph\n", stdout)
    return 0


COMMANDS: Dict[str, Callable[[argparse.Namespace, TextIO], int]] = {
    "canon": cmd_canon,
    "iso": cmd_iso,
    "tree": cmd_tree,
    "gen": cmd_gen,
    "decode": cmd_decode,
    "recognize": cmd_recognize,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Canonical encodings of circle graphs via minimal split decomposition.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress (-v) or every decomposition step (-vv)")
    commands = parser.add_subparsers(dest="command", required=True)

    canon = commands.add_parser("canon", help="print the canonical encoding of a graph or rep file")
    canon.add_argument("file")
    canon.add_argument("-o", "--output", help="write to this file instead of standard output")

    iso = commands.add_parser("iso", help="compare two graph or rep files (exit 0 isomorphic, 1 not)")
    iso.add_argument("first")
    iso.add_argument("second")

    tree = commands.add_parser("tree", help="print the minimal split tree as DOT")
    tree.add_argument("file")
    tree.add_argument("-o", "--output", help="write to this file instead of standard output")

    gen = commands.add_parser("gen", help="print a random chord diagram on n chords")
    gen.add_argument("n", type=int)
    gen.add_argument("--seed", type=int, default=None, help="seed of the random generator")
    gen.add_argument("-o", "--output", help="write to this file instead of standard output")

    decode = commands.add_parser("decode", help="rebuild a graph file from an encoding line")
    decode.add_argument("file")
    decode.add_argument("-o", "--output", help="write to this file instead of standard output")

    recognize = commands.add_parser(
        "recognize", help="search a circle representation of a small graph file"
    )
    recognize.add_argument("file")
    recognize.add_argument("-o", "--output", help="write to this file instead of standard output")
    return parser


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    if args.verbose >= 2:
        setup_logging("DEBUG")
    elif args.verbose == 1:
        setup_logging("INFO")
    else:
        setup_logging()

    try:
        return COMMANDS[args.command](args, stdout)
    except (CircleCanonError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        if settings.DEBUG:
            logger.exception(f"{args.command} failed")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
