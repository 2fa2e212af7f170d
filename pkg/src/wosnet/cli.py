"""Command-line front end.

    wosnet ingest savedrecs*.txt --out-dir tables/
    wosnet network tables/ --kind institution --project columns --out-dir nets/
    wosnet run savedrecs*.txt --kind country --out-dir out/      # both in one go
    wosnet convert pairs.txt --sep tab                           # -> pairs.net

Exit codes: 0 success, 1 error, 2 usage error, 3 projection cap exceeded.
Defaults can be overridden with WOSNET_KIND, WOSNET_FOLD, WOSNET_PROJECT,
WOSNET_MAX_PAIRS, WOSNET_ENCODING, WOSNET_SEP and WOSNET_OUT_DIR.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__, graph, pajek, pipeline
from ._io import atomic_write
from .graph import ProjectionCapError
from .ingest import ParseOptions, WosFormatError, parse_files
from .normalize import FoldMode
from .pajek import PajekError
from .tabular import PairFormatError, TableSet, build_tables, import_pairs

log = logging.getLogger("wosnet")

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
_SEPARATORS = {",": ",", "comma": ",", "tab": "\t", "\\t": "\t", "\t": "\t", ";": ";"}


class UsageError(Exception):
    pass


def _env(name: str, default):
    return os.environ.get(f"WOSNET_{name}", default)


def _sep(value: str) -> str:
    try:
        return _SEPARATORS[value]
    except KeyError:
        raise argparse.ArgumentTypeError(f"unsupported separator {value!r}") from None


def _max_pairs(value: str) -> int | None:
    if str(value).lower() in ("none", "0", "off"):
        return None
    try:
        return int(str(value).replace("_", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None


def _add_strictness(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--strict", dest="strict", action="store_true", default=None,
                   help="abort on the first malformed line")
    g.add_argument("--lenient", dest="strict", action="store_false",
                   help="skip malformed lines with a warning")


def _add_network_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", default=_env("KIND", "institution"), choices=sorted(pipeline.KINDS),
                   help="attribute used as the second mode (default: %(default)s)")
    p.add_argument("--fold", default=_env("FOLD", "UPPER"), type=str.upper,
                   choices=[m.value for m in FoldMode], help="case folding (default: %(default)s)")
    p.add_argument("--project", default=_env("PROJECT", "columns"), choices=pipeline.PROJECTIONS,
                   help="1-mode projection (default: %(default)s)")
    p.add_argument("--stem", default=None, help="output file stem (default: the kind)")
    p.add_argument("--encoding", default=_env("ENCODING", "utf-8"),
                   help="encoding of Pajek output, e.g. cp1252 for old Pajek builds")
    p.add_argument("--max-pairs", type=_max_pairs, default=_env("MAX_PAIRS", str(graph.DEFAULT_MAX_PAIRS)),
                   help="refuse projections estimated above this many pair updates ('none' disables)")
    p.add_argument("--edge-list", action="store_true", help="also write <stem>.edges.csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wosnet", description=__doc__.split("\n")[0] or None,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse WoS exports into CSV tables")
    p.add_argument("files", nargs="+")
    p.add_argument("--out-dir", default=_env("OUT_DIR", "."))
    p.add_argument("--input-encoding", default="auto")
    _add_strictness(p)

    p = sub.add_parser("network", help="build Pajek networks from ingested tables")
    p.add_argument("tables", help="directory written by 'wosnet ingest'")
    p.add_argument("--out-dir", default=_env("OUT_DIR", "."))
    _add_network_opts(p)

    p = sub.add_parser("run", help="ingest and network in one step")
    p.add_argument("files", nargs="+")
    p.add_argument("--out-dir", default=_env("OUT_DIR", "."))
    p.add_argument("--input-encoding", default="auto")
    _add_strictness(p)
    _add_network_opts(p)

    p = sub.add_parser("convert", help="two-column text file to a 2-mode Pajek file")
    p.add_argument("pairs", help="pair file, or '-' for stdin")
    p.add_argument("-o", "--output", help="default: input name with .net (stdout for '-')")
    p.add_argument("--sep", type=_sep, default=_env("SEP", ","), help="',' or 'tab'")
    p.add_argument("--fold", default=_env("FOLD", "UPPER"), type=str.upper,
                   choices=[m.value for m in FoldMode])
    p.add_argument("--header", action="store_true", help="skip the first line")
    p.add_argument("--encoding", default=_env("ENCODING", "utf-8"))
    _add_strictness(p)
    return parser


def _config(args) -> pipeline.PipelineConfig:
    try:
        return pipeline.PipelineConfig(kind=args.kind, fold=args.fold, project=args.project,
                                       out_dir=args.out_dir, stem=args.stem, encoding=args.encoding,
                                       max_pairs=args.max_pairs, edge_list=args.edge_list)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _ingest(args):
    strict = True if args.strict is None else args.strict
    corpus = parse_files(args.files, ParseOptions(encoding=args.input_encoding, strict=strict))
    tables = build_tables(corpus)
    for w in corpus.warnings + tables.warnings:
        log.warning("%s", w)
    return corpus, tables


def cmd_ingest(args) -> int:
    corpus, tables = _ingest(args)
    outputs = pipeline.write_ingest_outputs(corpus, tables, args.out_dir)
    pipeline.write_manifest(Path(args.out_dir) / "ingest.manifest.json", "ingest", args.files,
                            {"input_encoding": args.input_encoding, "strict": args.strict is not False},
                            outputs)
    print(f"{len(corpus)} documents, {len(tables.addresses)} address rows -> {args.out_dir}")
    return EXIT_OK


def _network(tables: TableSet, config: pipeline.PipelineConfig, inputs) -> dict:
    outputs = pipeline.run_network(tables, config)
    pipeline.write_manifest(Path(config.out_dir) / f"{config.file_stem}.manifest.json", "network",
                            inputs, config.as_dict(), outputs)
    for role, path in outputs.items():
        print(f"{role}: {path}")
    return outputs


def cmd_network(args) -> int:
    config = _config(args)
    tdir = Path(args.tables)
    if not tdir.is_dir():
        raise UsageError(f"{tdir} is not a directory of ingested tables")
    tables = TableSet.load(tdir)
    inputs = [tdir / f"{name}.csv" for name in ("documents", "authors", "addresses", "citations")]
    _network(tables, config, inputs)
    return EXIT_OK


def cmd_run(args) -> int:
    config = _config(args)
    corpus, tables = _ingest(args)
    outputs = pipeline.write_ingest_outputs(corpus, tables, args.out_dir)
    pipeline.write_manifest(Path(args.out_dir) / "ingest.manifest.json", "ingest", args.files,
                            {"input_encoding": args.input_encoding, "strict": args.strict is not False},
                            outputs)
    # same tables the split route would read back from CSV
    _network(TableSet.load(args.out_dir), config, args.files)
    return EXIT_OK


def cmd_convert(args) -> int:
    strict = False if args.strict is None else args.strict
    warnings: list[str] = []
    source = sys.stdin if args.pairs == "-" else args.pairs
    if source is not sys.stdin and not os.path.exists(source):
        raise FileNotFoundError(f"no such file: {source}")
    pairs = import_pairs(Path(source) if source is not sys.stdin else source, sep=args.sep,
                         fold=args.fold, strict=strict, header=args.header, warnings=warnings)
    for w in warnings:
        log.warning("%s", w)
    doc = pajek.from_bipartite(graph.build_bipartite(pairs))
    data = pajek.format_net(doc).encode(args.encoding)
    if args.output:
        atomic_write(args.output, data)
    elif source is sys.stdin:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return EXIT_OK
    else:
        out = Path(source).with_suffix(".net")
        atomic_write(out, data)
        args.output = out
    print(f"{len(pairs)} pairs -> {args.output}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {"ingest": cmd_ingest, "network": cmd_network, "run": cmd_run, "convert": cmd_convert}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except ProjectionCapError as exc:
        print(f"wosnet: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (WosFormatError, PajekError, PairFormatError, OSError, UnicodeError, ValueError) as exc:
        print(f"wosnet: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception:
        log.exception("internal error")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
