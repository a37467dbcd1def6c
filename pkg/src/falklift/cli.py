"""Command-line front end.

A thin client over the bundled FastAPI service: by default requests are
answered in-process through an ASGI transport (no server required);
``--server URL`` targets a running instance instead.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 validation
failure, 4 internal disagreement.
"""

from __future__ import annotations

import argparse
import asyncio
import sys
from pathlib import Path

import httpx

from .families import FAMILIES

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_DISAGREE = 4

_ERROR_EXITS = {
    "parse_error": EXIT_PARSE,
    "validation_error": EXIT_VALIDATION,
    "disagreement": EXIT_DISAGREE,
}


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; we reserve 2 for
    parse errors, so usage errors exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _post(path: str, payload: dict, server: str | None) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.post(path, json=payload)

    from .service.app import app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://falklift.local", timeout=600.0
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _source_payload(args) -> dict:
    if args.file is not None:
        return {"graph_text": Path(args.file).read_text(encoding="utf-8")}
    return {"family": args.family, "ell": args.ell}


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _fail(resp: httpx.Response) -> int:
    """Print the service error verbatim and map it to an exit code."""
    detail = None
    try:
        detail = resp.json().get("detail")
    except ValueError:
        pass
    if not isinstance(detail, dict):
        print(f"error: HTTP {resp.status_code}: {resp.text}", file=sys.stderr)
        return EXIT_USAGE
    print(f"error: {detail.get('message', resp.text)}", file=sys.stderr)
    for violation in detail.get("violations", []):
        print(f"  {violation.get('message')}", file=sys.stderr)
    return _ERROR_EXITS.get(detail.get("code"), EXIT_USAGE)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _format_circuits(circuits) -> str:
    return " ".join("{%d,%d,%d}" % tuple(c) for c in circuits)


def _cmd_phi3(args) -> int:
    payload = _source_payload(args)
    payload["method"] = args.method
    resp = _post("/phi3", payload, args.server)
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    lines = [
        f"{key}={data[key]}"
        for key in ("phi3_census", "phi3_falk", "phi3_kernel")
        if key in data
    ]
    if args.method == "all":
        lines.append(f"agreement={_bool(data['agreement'])}")
        if not args.machine:
            lines.append("VERIFIED" if data["agreement"] else "DISAGREE")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if data.get("agreement", True) else EXIT_DISAGREE


def _cmd_census(args) -> int:
    resp = _post("/census", _source_payload(args), args.server)
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    counts = data["counts"]
    count_items = [f"{k}={counts[k]}" for k in ("k3", "k4", "d2", "g_circ", "s3")]
    if args.machine:
        lines = count_items
    else:
        lines = [" ".join(count_items)]
    lines.append(f"w2={data['w2']}")
    lines.append(f"circuits={_format_circuits(data['circuits'])}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_diag(args) -> int:
    resp = _post("/diag", _source_payload(args), args.server)
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    items = [
        ("f3_count" if args.machine else "|F3|", data["f3_count"]),
        ("dim_span_F3", data["dim_span_f3"]),
        ("dim_I2_3", data["dim_i2_3"]),
    ]
    kv = [f"{k}={v}" for k, v in items]
    _emit(("\n".join(kv) if args.machine else " ".join(kv)) + "\n", args.output)
    return EXIT_OK


def _cmd_gen(args) -> int:
    resp = _post("/gen", {"family": args.family, "ell": args.ell}, args.server)
    if resp.status_code != 200:
        return _fail(resp)
    _emit(resp.json()["graph_text"], args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    resp = _post("/verify", _source_payload(args), args.server)
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    ok = data["agreement"] and data["identities_hold"]
    lines = [
        f"phi3_census={data['phi3_census']}",
        f"phi3_falk={data['phi3_falk']}",
        f"phi3_kernel={data['phi3_kernel']}",
        f"agreement={_bool(data['agreement'])}",
        f"w2_geometric={data['w2_geometric']}",
        f"w2_formula={data['w2_formula']}",
        f"dim_I2_3={data['dim_i2_3']}",
        f"dim_I2_3_formula={data['dim_i2_3_formula']}",
        f"identities={_bool(data['identities_hold'])}",
    ]
    if not args.machine:
        lines.append("VERIFIED" if ok else "DISAGREE")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if ok else EXIT_DISAGREE


def _add_source_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--file", metavar="PATH", help="gain-graph text file")
    sub.add_argument(
        "--family", choices=FAMILIES, help="generate a named family instead of reading a file"
    )
    sub.add_argument("--ell", type=int, metavar="N", help="family size (vertices)")


def _add_common_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--machine", action="store_true", help="emit only key=value lines"
    )
    sub.add_argument("-o", "--output", metavar="PATH", help="write output to a file")
    sub.add_argument("--server", metavar="URL", help="use a running service instead of in-process")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="falklift",
        description="Exact Falk invariant phi3 of complete-lift arrangements "
        "of rational gain graphs.",
    )
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_phi3 = subs.add_parser("phi3", help="compute phi3 by the selected method(s)")
    _add_source_args(p_phi3)
    p_phi3.add_argument(
        "--method",
        choices=("census", "falk", "kernel", "all"),
        default="all",
        help="computation path (default: all, which cross-verifies)",
    )
    _add_common_args(p_phi3)
    p_phi3.set_defaults(func=_cmd_phi3)

    p_census = subs.add_parser("census", help="print the five counts, w2 and 3-circuits")
    _add_source_args(p_census)
    _add_common_args(p_census)
    p_census.set_defaults(func=_cmd_census)

    p_diag = subs.add_parser("diag", help="print degree-3 generator diagnostics")
    _add_source_args(p_diag)
    _add_common_args(p_diag)
    p_diag.set_defaults(func=_cmd_diag)

    p_gen = subs.add_parser("gen", help="write a named family as a gain-graph file")
    p_gen.add_argument("family", choices=FAMILIES)
    p_gen.add_argument("--ell", type=int, required=True, metavar="N")
    p_gen.add_argument("-o", "--output", metavar="PATH", help="write to a file")
    p_gen.add_argument("--server", metavar="URL")
    p_gen.set_defaults(func=_cmd_gen)

    p_verify = subs.add_parser(
        "verify", help="phi3 by all methods plus the w2 / dim identities"
    )
    _add_source_args(p_verify)
    _add_common_args(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def _check_source(parser: _Parser, args) -> None:
    if not hasattr(args, "file"):
        return
    if (args.file is None) == (args.family is None):
        parser.error("provide exactly one of --file or --family")
    if args.family is not None and args.ell is None:
        parser.error("--family requires --ell")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_source(parser, args)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: cannot read {exc.filename}", file=sys.stderr)
        return EXIT_USAGE
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
