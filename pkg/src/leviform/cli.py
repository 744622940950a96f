"""Command-line front end, a thin client of the HTTP service.

By default every subcommand drives the service in-process (no network, no
running server needed), so scripted runs are deterministic; pass --server to
talk to a remote instance instead.  ``leviform serve`` starts the service.

Exit codes: 0 success, 1 domain error (machine-readable category on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .localbasis import DEFAULT_DEGREE_CAP

_EXPR_COMMANDS = {
    "milnor": "/api/milnor",
    "basis": "/api/basis",
    "weights": "/api/weights",
    "split": "/api/split",
    "jet": "/api/jet",
    "complexify": "/api/complexify",
    "levicheck": "/api/levicheck",
    "singcheck": "/api/singcheck",
    "normalform": "/api/normalform",
    "arnold": "/api/arnold",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leviform",
        description="Exact Levi-flatness certificates and normal-form templates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_expr_command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-n", "--nvars", type=int, required=True,
                       help="ambient variable count (z3 unused in the expression still counts)")
        p.add_argument("expr", nargs="?", help="expression; omit when using --file")
        p.add_argument("--file", help="read the expression from a file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--degree-cap", type=int, default=None,
                       help=f"total-degree resource cap (default {DEFAULT_DEGREE_CAP}, "
                            "env LEVIFORM_DEGREE_CAP)")
        p.add_argument("--server", default=None,
                       help="base URL of a running service (default: in-process)")
        return p

    add_expr_command("milnor", "Milnor number of a holomorphic polynomial")
    add_expr_command("basis", "monomial basis of the local algebra")
    add_expr_command("weights", "quasihomogeneous weights of the Newton support")
    add_expr_command("split", "semiquasihomogeneous decomposition Q + F'")
    jet_cmd = add_expr_command("jet", "truncate to total degree <= k")
    jet_cmd.add_argument("-k", type=int, required=True, help="jet order")
    add_expr_command("complexify", "complexification of a defining function")
    add_expr_command("levicheck", "Levi-flatness certificate of a defining function")
    add_expr_command("singcheck", "is the complexified singular locus at most the origin")
    nf_cmd = add_expr_command("normalform", "normal-form template of a flat hypersurface")
    nf_cmd.add_argument("--shape", choices=["auto", "homogeneous", "quasihomogeneous"],
                        default="auto",
                        help="template shape: degree-bound slots for a homogeneous "
                             "principal part, weighted-diagonal slots, or auto-detect")
    add_expr_command("arnold", "weighted-diagonal template of a quasihomogeneous germ")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _read_expression(args, parser: argparse.ArgumentParser) -> str:
    if args.file is not None and args.expr is not None:
        parser.error("give an expression or --file, not both")
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as fh:
            return fh.read().strip()
    if args.expr is None:
        parser.error("an expression (or --file) is required")
    return args.expr


def _degree_cap(args) -> int | None:
    if args.degree_cap is not None:
        return args.degree_cap
    env = os.environ.get("LEVIFORM_DEGREE_CAP")
    try:
        return int(env) if env else None
    except ValueError:
        return None


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server)
    import warnings

    with warnings.catch_warnings():
        # the in-process test transport import warns about its httpx pin
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    expr = _read_expression(args, parser)
    payload = {"nvars": args.nvars, "expr": expr}
    cap = _degree_cap(args)
    if cap is not None:
        payload["degree_cap"] = cap
    if args.command == "jet":
        payload["k"] = args.k
    if args.command == "normalform":
        payload["shape"] = args.shape

    with _client(args.server) as client:
        response = client.post(_EXPR_COMMANDS[args.command], json=payload)

    if response.status_code == 400:
        body = response.json()
        print(f"error: {body['category']}: {body['message']}", file=sys.stderr)
        return 1
    if response.status_code == 422:
        print("error: USAGE: invalid request", file=sys.stderr)
        return 2
    response.raise_for_status()
    body = response.json()

    if args.command == "milnor" and body["mu"] == "INFINITE":
        # an infinite local algebra is a failed hypothesis for every caller
        print("error: NON_ISOLATED: the singularity is not isolated", file=sys.stderr)
        return 1

    if args.json:
        body.pop("pretty", None)
        print(json.dumps(body, sort_keys=True))
    else:
        for line in body.get("pretty", []):
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
