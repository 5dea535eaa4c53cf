"""Command line shell: ``lodlink import|eval|serve``."""

from __future__ import annotations

import argparse
import shutil
import sys
from pathlib import Path

from .config import ServiceConfig, load_config
from .engine import (
    ANCHORS_FILE,
    DECLARATIONS_FILE,
    Engine,
    LOCAL_FILE,
    PREFIXES_FILE,
    TARGET_FILE,
)
from .errors import LodlinkError
from .evaluation import format_report_table, load_gold_standard, run_benchmark
from .linking import Algorithm
from .ntriples import serialize_triples
from .repository import parse_ntriples
from .terms import Origin
from .wikistat import build_anchor_table, load_anchor_table, parse_link_dump, save_anchor_table


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lodlink", description=__doc__)
    parser.add_argument("--config", help="key=value configuration file")
    parser.add_argument("--data-dir", help="workspace directory (default: lodlink-data)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_import = sub.add_parser("import", help="validate and index data files")
    p_import.add_argument("--local", help="local repository N-Triples file")
    p_import.add_argument("--target", help="target repository N-Triples file")
    p_import.add_argument("--anchors", help="anchor table file (sorted flat format)")
    p_import.add_argument("--link-dump", help="tab-separated (source, target, anchor) records")
    p_import.add_argument("--prefixes", help="prefix<TAB>namespace table")
    p_import.add_argument("--declarations", help="type disjointness declarations file")

    p_eval = sub.add_parser("eval", help="benchmark an algorithm against a gold standard")
    p_eval.add_argument("--gold", required=True, help="localIRI<TAB>targetIRI gold file")
    p_eval.add_argument(
        "--algorithm",
        default="endpoint-al",
        choices=[a.value for a in Algorithm] + ["all"],
    )
    p_eval.add_argument("--k", type=int, default=10)
    p_eval.add_argument("--report", help="write the JSON report here")

    p_serve = sub.add_parser("serve", help="start the HTTP JSON API")
    p_serve.add_argument("--listen", help="host:port (default from config)")

    return parser


def _config_from_args(args: argparse.Namespace) -> ServiceConfig:
    overrides = {}
    if args.data_dir:
        overrides["data_dir"] = args.data_dir
    return load_config(args.config, overrides)


def _cmd_import(args: argparse.Namespace, config: ServiceConfig) -> int:
    data_dir = Path(config.data_dir)
    data_dir.mkdir(parents=True, exist_ok=True)
    did_anything = False

    if args.prefixes:
        shutil.copyfile(args.prefixes, data_dir / PREFIXES_FILE)
        print(f"prefixes: copied {args.prefixes}")
        did_anything = True
    if args.declarations:
        shutil.copyfile(args.declarations, data_dir / DECLARATIONS_FILE)
        print(f"declarations: copied {args.declarations}")
        did_anything = True

    for flag, filename, origin in (
        (args.local, LOCAL_FILE, Origin.LOCAL),
        (args.target, TARGET_FILE, Origin.TARGET),
    ):
        if not flag:
            continue
        repo = parse_ntriples(Path(flag), origin=origin)
        (data_dir / filename).write_text(serialize_triples(repo), encoding="utf-8")
        print(f"{filename}: {len(repo)} triples from {flag}")
        did_anything = True

    if args.anchors:
        table = load_anchor_table(args.anchors)
        save_anchor_table(table, data_dir / ANCHORS_FILE)
        print(f"{ANCHORS_FILE}: {len(table)} rows, {table.total_links} links from {args.anchors}")
        did_anything = True
    if args.link_dump:
        table = build_anchor_table(parse_link_dump(Path(args.link_dump)))
        save_anchor_table(table, data_dir / ANCHORS_FILE)
        print(f"{ANCHORS_FILE}: {len(table)} rows, {table.total_links} links from {args.link_dump}")
        did_anything = True

    if not did_anything:
        print("nothing to import; pass --local/--target/--anchors/--link-dump", file=sys.stderr)
        return 1
    return 0


def _cmd_eval(args: argparse.Namespace, config: ServiceConfig) -> int:
    engine = Engine.from_config(config)
    gold = load_gold_standard(args.gold)
    algorithms = (
        [a.value for a in Algorithm] if args.algorithm == "all" else [args.algorithm]
    )
    reports = []
    for name in algorithms:
        reports.append(
            run_benchmark(
                gold,
                name,
                engine.local,
                k=args.k,
                target_source=engine.target_source,
                anchor_table=engine.anchor_table,
                endpoint_config=engine.target_source.cfg if engine.target_source else None,
                declarations=engine.declarations,
            )
        )
    print(format_report_table(reports), end="")
    if args.report:
        import json

        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        Path(args.report).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        print(f"report written to {args.report}")
    return 0


def _cmd_serve(args: argparse.Namespace, config: ServiceConfig) -> int:
    import uvicorn

    from .service import create_app

    engine = Engine.from_config(config)
    app = create_app(engine)
    listen = args.listen or config.listen_address
    host, _, port = listen.partition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000))
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.command == "import":
            return _cmd_import(args, config)
        if args.command == "eval":
            return _cmd_eval(args, config)
        if args.command == "serve":
            return _cmd_serve(args, config)
    except LodlinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
