"""Command-line client for the verification service.

By default the CLI talks to an in-process instance of the service (no network,
no running server needed); pass ``--server URL`` to target a live one instead.
Exit codes: 0 success, 1 verification or certification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from .suites import SUITES
from .tables import TABLE_NAMES

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _request(server: str | None, method: str, path: str, **kwargs) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.request(method, path, **kwargs)

    from .service import app

    async def run() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://foulkes.internal", timeout=None
        ) as client:
            response = await client.request(method, path, **kwargs)
            await response.aread()
            return response

    return asyncio.run(run())



def _fail(response: httpx.Response) -> int:
    try:
        detail = response.json().get("detail", response.text)
    except ValueError:
        detail = response.text
    print(f"error ({response.status_code}): {detail}", file=sys.stderr)
    return USAGE_ERROR if response.status_code == 422 else CHECK_FAILURE


def cmd_verify(args) -> int:
    payload = {"suite": args.suite, "n_max": args.n_max}
    if args.cap_brute is not None:
        print(
            f"warning: overriding brute-force caps to n <= {args.cap_brute}", file=sys.stderr
        )
        payload["cap_brute"] = args.cap_brute
    response = _request(args.server, "POST", "/verify", json=payload)
    if response.status_code != 200:
        return _fail(response)
    report = response.json()
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        for check in report["checks"]:
            status = "PASS" if check["passed"] else "FAIL"
            line = f"{status} {check['name']} [{check['scope']}] ({check['seconds']:.2f}s)"
            if check.get("witness"):
                line += f" :: {check['witness']}"
            print(line)
        print(f"suite {report['suite']}: {'PASS' if report['passed'] else 'FAIL'}")
    return 0 if report["passed"] else CHECK_FAILURE


def cmd_enumerate(args) -> int:
    path = f"/enumerate/{args.n}"
    if args.server:
        with httpx.Client(base_url=args.server, timeout=None) as client:
            with client.stream("GET", path) as response:
                if response.status_code != 200:
                    response.read()
                    return _fail(response)
                for line in response.iter_lines():
                    if line:
                        print(line)
        return 0
    response = _request(None, "GET", path)
    if response.status_code != 200:
        return _fail(response)
    for line in response.text.splitlines():
        if line:
            print(line)
    return 0


def _parse_int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip() != ""]


def cmd_param(args) -> int:
    if args.direction == "to-theta":
        body = {"n": args.n, "a": _parse_int_list(args.a)}
        response = _request(args.server, "POST", "/param/to-theta", json=body)
    else:
        body = {"n": args.n, "coords": [c.strip() for c in args.coords.split(",")]}
        response = _request(args.server, "POST", "/param/from-theta", json=body)
    if response.status_code != 200:
        return _fail(response)
    print(json.dumps(response.json(), sort_keys=True))
    return 0


def cmd_export(args) -> int:
    params = {"n": args.n, "format": args.format}
    if args.src:
        params["src"] = args.src
    if args.dst:
        params["dst"] = args.dst
    response = _request(args.server, "GET", f"/export/{args.table}", params=params)
    if response.status_code != 200:
        return _fail(response)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(response.text)
    else:
        sys.stdout.write(response.text)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("foulkes.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foulkes",
        description="Verify and export the characters of S_n that depend only on cycle count.",
    )
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("--suite", required=True, choices=SUITES)
    verify.add_argument("--n-max", type=int, required=True)
    verify.add_argument("--cap-brute", type=int, default=None)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    enumerate_cmd = sub.add_parser(
        "enumerate", help="stream the fundamental-domain characters as JSON lines"
    )
    enumerate_cmd.add_argument("--n", type=int, required=True)
    enumerate_cmd.set_defaults(func=cmd_enumerate)

    param = sub.add_parser("param", help="convert between parameter vectors and coordinates")
    param.add_argument("direction", choices=("to-theta", "from-theta"))
    param.add_argument("--n", type=int, required=True)
    param.add_argument("--a", help="comma-separated non-negative integers (to-theta)")
    param.add_argument("--coords", help="comma-separated rationals p/q (from-theta)")
    param.set_defaults(func=cmd_param)

    export = sub.add_parser("export", help="export a table deterministically")
    export.add_argument("--table", required=True, choices=TABLE_NAMES)
    export.add_argument("--n", type=int, required=True)
    export.add_argument("--format", choices=("json", "csv"), default="json")
    export.add_argument("--src", help="source basis for matrix/gram tables")
    export.add_argument("--dst", help="target basis for the matrix table")
    export.add_argument("--output", "-o", help="write to a file instead of stdout")
    export.set_defaults(func=cmd_export)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "param":
        if args.direction == "to-theta" and not args.a:
            parser.error("param to-theta requires --a")
        if args.direction == "from-theta" and not args.coords:
            parser.error("param from-theta requires --coords")
    try:
        return args.func(args)
    except httpx.HTTPError as exc:
        print(f"transport error: {exc}", file=sys.stderr)
        return CHECK_FAILURE


if __name__ == "__main__":
    sys.exit(main())
