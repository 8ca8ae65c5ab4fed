"""Command line client for the toolkit service.

Every subcommand drives the same FastAPI app that `tempograph serve`
exposes; by default the app runs in-process, with --server it talks to a
remote instance instead.  Inputs read stdin when no file is given and
results go to stdout (or -o PATH), so subcommands compose in pipelines;
JSON output is canonical and byte-stable.

Exit codes: 0 success, 1 asserted property false, 2 malformed input,
3 search guard exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import InvalidGraphError
from .serialize import dumps, loads

_STRICTNESS = ["strict", "nonstrict"]
_SETTINGS = ["strict", "non-strict", "proper", "simple-strict", "simple-non-strict", "happy"]
_ASSERT_KEYS = {
    "proper": "proper",
    "simple": "simple",
    "happy": "happy",
    "tc-strict": "tc_strict",
    "tc-nonstrict": "tc_nonstrict",
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tempograph",
        description="Temporal graph toolkit: closures, transforms, spanners, "
                    "components, and realizability searches.")
    p.add_argument("--server", metavar="URL",
                   help="send requests to a running service instead of computing in-process")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="report structural classes and temporal connectivity")
    _add_io(sp)
    sp.add_argument("--assert", dest="assert_prop", choices=sorted(_ASSERT_KEYS),
                    help="exit 1 unless the property holds")

    sp = sub.add_parser("closure", help="reachability closure of a temporal graph")
    _add_io(sp)
    sp.add_argument("--strictness", "-s", required=True, choices=_STRICTNESS)
    sp.add_argument("--dot", action="store_true", help="emit GraphViz DOT instead of JSON")

    sp = sub.add_parser("transform", help="rewrite a graph into another setting class")
    sp.add_argument("kind", choices=["dilate", "saturate", "semaphore"])
    _add_io(sp)
    sp.add_argument("--method", default="fan", choices=["fan", "greedy"],
                    help="edge coloring backend where one is used")

    sp = sub.add_parser("spanner", help="size of a minimal temporally connected subgraph")
    _add_io(sp)
    sp.add_argument("--strictness", "-s", required=True, choices=_STRICTNESS)
    sp.add_argument("--mode", required=True, choices=["contacts", "edges"])
    sp.add_argument("--guard", type=int, help="largest contact count the search accepts")
    sp.add_argument("--json", action="store_true", help="print size and witness as JSON")

    sp = sub.add_parser("component", help="largest set of mutually reachable vertices")
    _add_io(sp)
    sp.add_argument("--strictness", "-s", required=True, choices=_STRICTNESS)
    sp.add_argument("--mode", required=True, choices=["open", "closed"])
    sp.add_argument("--guard", type=int, help="largest vertex count the search accepts")
    sp.add_argument("--json", action="store_true", help="print size and vertices as JSON")

    sp = sub.add_parser("reduce-clique",
                        help="build the happy graph whose largest component answers "
                             "a maximum clique question")
    _add_io(sp)
    sp.add_argument("--method", default="fan", choices=["fan", "greedy"])

    sp = sub.add_parser("realize", help="search a setting class for a graph with this closure")
    _add_io(sp)
    sp.add_argument("--setting", required=True, choices=_SETTINGS)

    sp = sub.add_parser("verify-separations",
                        help="exhaustively certify the four closure separations")
    sp.add_argument("-o", "--output", metavar="PATH")

    sp = sub.add_parser("fixture", help="built-in example graphs")
    fsub = sp.add_subparsers(dest="fixture_command", required=True)
    fsub.add_parser("list", help="fixture names")
    fg = fsub.add_parser("get", help="emit one fixture graph as JSON")
    fg.add_argument("name")
    fg.add_argument("--full", action="store_true",
                    help="include description and expected closures")
    fg.add_argument("-o", "--output", metavar="PATH")

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    return p


def _add_io(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("file", nargs="?", default="-", help="input JSON path, - or absent for stdin")
    sp.add_argument("-o", "--output", metavar="PATH", help="write result here instead of stdout")


def _load_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        p = Path(path)
        if not p.exists():
            raise InvalidGraphError(f"no such file: {path}")
        try:
            text = p.read_text()  # plain files, FIFOs, process substitution
        except OSError as exc:
            raise InvalidGraphError(f"cannot read {path}: {exc}") from exc
    obj = loads(text)
    # reports wrap their result graph, so pipelines unwrap transparently
    if isinstance(obj, dict) and "graph" in obj:
        return obj["graph"]
    return obj


def _emit(text: str, output: str | None) -> None:
    if output and output != "-":
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _fail(resp) -> int:
    try:
        body = resp.json()
    except ValueError:
        body = {}
    message = body.get("message") or body.get("detail") or resp.text
    print(f"error: {message}", file=sys.stderr)
    return 3 if body.get("code") == "guard-exceeded" else 2


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server)
    import warnings

    with warnings.catch_warnings():
        # this starlette wants the not-yet-published httpx2 and warns on httpx
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _cmd_check(args, client) -> int:
    resp = client.post("/check", json=_load_json(args.file))
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    _emit(dumps(body), args.output)
    if args.assert_prop is not None and not body[_ASSERT_KEYS[args.assert_prop]]:
        return 1
    return 0


def _cmd_closure(args, client) -> int:
    payload = {"graph": _load_json(args.file), "strictness": args.strictness, "dot": args.dot}
    resp = client.post("/closure", json=payload)
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    _emit(body["dot"] if args.dot else dumps(body["closure"]), args.output)
    return 0


def _cmd_transform(args, client) -> int:
    payload = {"graph": _load_json(args.file), "method": args.method}
    resp = client.post(f"/transform/{args.kind}", json=payload)
    if resp.status_code != 200:
        return _fail(resp)
    _emit(dumps(resp.json()), args.output)
    return 0


def _cmd_spanner(args, client) -> int:
    payload = {"graph": _load_json(args.file), "strictness": args.strictness,
               "mode": args.mode, "guard": args.guard}
    resp = client.post("/spanner", json=payload)
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    _emit(dumps(body) if args.json else f"{body['size']}\n", args.output)
    return 0


def _cmd_component(args, client) -> int:
    payload = {"graph": _load_json(args.file), "strictness": args.strictness,
               "mode": args.mode, "guard": args.guard}
    resp = client.post("/component", json=payload)
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    _emit(dumps(body) if args.json else f"{body['size']}\n", args.output)
    return 0


def _cmd_reduce(args, client) -> int:
    payload = {"graph": _load_json(args.file), "method": args.method}
    resp = client.post("/reduce-clique", json=payload)
    if resp.status_code != 200:
        return _fail(resp)
    _emit(dumps(resp.json()), args.output)
    return 0


def _cmd_realize(args, client) -> int:
    payload = {"target": _load_json(args.file), "setting": args.setting}
    resp = client.post("/realize", json=payload)
    if resp.status_code != 200:
        return _fail(resp)
    _emit(dumps(resp.json()), args.output)
    return 0


def _cmd_separations(args, client) -> int:
    resp = client.get("/separations")
    if resp.status_code != 200:
        return _fail(resp)
    _emit(dumps(resp.json()), args.output)
    return 0


def _cmd_fixture(args, client) -> int:
    if args.fixture_command == "list":
        resp = client.get("/fixtures")
        if resp.status_code != 200:
            return _fail(resp)
        _emit(dumps(resp.json()), None)
        return 0
    resp = client.get(f"/fixtures/{args.name}")
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    _emit(dumps(body if args.full else body["graph"]), args.output)
    return 0


_HANDLERS = {
    "check": _cmd_check,
    "closure": _cmd_closure,
    "transform": _cmd_transform,
    "spanner": _cmd_spanner,
    "component": _cmd_component,
    "reduce-clique": _cmd_reduce,
    "realize": _cmd_realize,
    "verify-separations": _cmd_separations,
    "fixture": _cmd_fixture,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        from .service.app import serve

        serve(args.host, args.port)
        return 0
    client = _client(args.server)
    try:
        return _HANDLERS[args.command](args, client)
    except InvalidGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        client.close()


if __name__ == "__main__":
    sys.exit(main())
