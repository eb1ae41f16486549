"""Batch command-line front end.

The CLI is a thin client of the HTTP service: every command serializes its
inputs to the service's JSON wire format and parses the response.  By default
the requests run against an in-process instance of the app (no socket, no
separate server); ``--server URL`` targets a running instance instead.

Exit codes: 0 success, 1 verification failure, 2 usage/validation errors.
Failures print one machine-parsable line ``ERROR <code>: <message>`` on
stderr.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

from .sigio import fmt, read_signal_csv, write_signal_csv
from .errors import SignalFormatError

USAGE_EXIT = 2
VERIFY_FAIL_EXIT = 1


class ServiceError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class ServiceClient:
    """Speaks the service wire format, in-process or over the network."""

    def __init__(self, server: str | None = None):
        self.server = server.rstrip("/") if server else None

    def _request(self, method: str, path: str, payload: dict | None) -> dict:
        if self.server:
            with httpx.Client(base_url=self.server, timeout=600.0) as client:
                resp = client.request(method, path, json=payload)
        else:
            resp = asyncio.run(self._request_inprocess(method, path, payload))
        if resp.status_code >= 400:
            try:
                body = resp.json()
            except ValueError:
                raise ServiceError("http", f"status {resp.status_code}")
            if "error" in body:
                raise ServiceError(body["error"], body.get("message", ""))
            raise ServiceError("validation", json.dumps(body.get("detail", body)))
        return resp.json()

    async def _request_inprocess(
        self, method: str, path: str, payload: dict | None
    ) -> httpx.Response:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://fracdecomp", timeout=600.0
        ) as client:
            return await client.request(method, path, json=payload)

    def post(self, path: str, payload: dict) -> dict:
        return self._request("POST", path, payload)

    def get(self, path: str) -> dict:
        return self._request("GET", path, None)


def _signal_payload(path: str) -> dict:
    signal = read_signal_csv(path)
    return {
        "grid": {"x_min": signal.grid.x_min, "dx": signal.grid.dx, "n": signal.grid.n},
        "values": signal.values.tolist(),
    }


def _write_signal(path: str, payload: dict) -> None:
    from .grids import SampledSignal, UniformGrid

    grid = UniformGrid(
        payload["grid"]["x_min"], payload["grid"]["dx"], payload["grid"]["n"]
    )
    write_signal_csv(path, SampledSignal(grid, payload["values"]))


def _variant_payload(args: argparse.Namespace) -> dict:
    return {"s": args.s, "kind": args.variant, "p": args.p, "q": args.q}


# ------------------------------------------------------------------ commands


def _cmd_apply(client: ServiceClient, args: argparse.Namespace) -> int:
    out = client.post(
        "/apply",
        {
            "signal": _signal_payload(args.input),
            "order": args.order,
            "side": args.side,
            "method": args.method,
        },
    )
    _write_signal(args.output, out["signal"])
    return 0


def _cmd_decompose(client: ServiceClient, args: argparse.Namespace) -> int:
    out = client.post(
        "/decompose",
        {"signal": _signal_payload(args.input), "variant": _variant_payload(args)},
    )
    _write_signal(args.output, out["u"])
    diagnostics = {
        "s": args.s,
        "kind": args.variant,
        "p": args.p,
        "q": args.q,
        "residual_l2": out["residual_l2"],
        "dc_defect": out["dc_defect"],
        "symbol_min_modulus": out["symbol_min_modulus"],
        "u_csv": str(args.output),
    }
    if args.report:
        Path(args.report).write_text(
            json.dumps(diagnostics, indent=2, sort_keys=True) + "\n"
        )
    for key in ("residual_l2", "dc_defect", "symbol_min_modulus"):
        print(f"{key} {fmt(out[key])}")
    return 0


def _cmd_reconstruct(client: ServiceClient, args: argparse.Namespace) -> int:
    out = client.post(
        "/reconstruct",
        {"u": _signal_payload(args.input), "variant": _variant_payload(args)},
    )
    _write_signal(args.output, out["signal"])
    return 0


def _cmd_norms(client: ServiceClient, args: argparse.Namespace) -> int:
    orders = [float(v) for v in args.mu.split(",") if v.strip()]
    out = client.post(
        "/norms", {"signal": _signal_payload(args.input), "orders": orders}
    )
    lines = ["mu,seminorm,norm"]
    lines += [
        f"{fmt(row['mu'])},{fmt(row['seminorm'])},{fmt(row['norm'])}"
        for row in out["rows"]
    ]
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_decay(client: ServiceClient, args: argparse.Namespace) -> int:
    payload: dict = {"signal": _signal_payload(args.input)}
    if args.xi_lo is not None:
        payload["xi_lo"] = args.xi_lo
    if args.xi_hi is not None:
        payload["xi_hi"] = args.xi_hi
    out = client.post("/decay", payload)
    text = json.dumps(out, indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_corpus(client: ServiceClient, args: argparse.Namespace) -> int:
    if args.corpus_command == "list":
        out = client.get("/corpus")
        for entry in out["entries"]:
            params = " ".join(
                f"{k}={fmt(v)}" for k, v in sorted(entry["params"].items())
            )
            print(f"{entry['name']} {params}".rstrip())
        return 0
    # emit
    params = {}
    for item in args.param or []:
        key, _, value = item.partition("=")
        if not _:
            raise ServiceError("usage", f"--param expects key=value, got {item!r}")
        params[key] = float(value)
    out = client.post(
        "/corpus/sample",
        {
            "name": args.name,
            "x_min": args.window[0],
            "x_max": args.window[1],
            "n": args.n,
            "params": params,
        },
    )
    _write_signal(args.output, out["signal"])
    return 0


def _cmd_verify(client: ServiceClient, args: argparse.Namespace) -> int:
    payload: dict = {
        "suites": args.suite or ["all"],
        "x_min": args.window[0],
        "x_max": args.window[1],
        "n": args.n,
        "seed": args.seed,
    }
    if args.s:
        payload["s_values"] = args.s
    if args.tolerance:
        overrides = {}
        for item in args.tolerance:
            key, _, value = item.partition("=")
            if not _:
                raise ServiceError("usage", f"--tolerance expects key=value, got {item!r}")
            overrides[key] = float(value)
        payload["tolerances"] = overrides
    if args.inject:
        payload["inject_suite"] = args.inject
    report = client.post("/verify", payload)
    for suite in report["suites"]:
        for case in suite["cases"]:
            status = "PASS" if case["passed"] else "FAIL"
            extras = "".join(
                f" {k}={fmt(v)}" for k, v in sorted(case["info"].items())
            )
            print(
                f"{suite['name']} {case['label']} defect={fmt(case['defect'])} "
                f"tolerance={fmt(case['tolerance'])}{extras} {status}"
            )
        print(
            f"# suite {suite['name']}: "
            f"{'PASS' if suite['passed'] else 'FAIL'} "
            f"worst_defect={fmt(suite['worst_defect'])}"
        )
    if args.output:
        Path(args.output).write_text(
            json.dumps(report, indent=2, sort_keys=True) + "\n"
        )
    return 0 if report["passed"] else VERIFY_FAIL_EXIT


def _cmd_serve(client: ServiceClient, args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracdecomp",
        description="Fractional Riemann-Liouville operators and the "
        "integral-plus-derivative decomposition, as a batch tool.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="URL of a running fracdecomp service (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_variant_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--s", type=float, required=True, help="order, |s| < 1/2")
        p.add_argument(
            "--variant", choices=("symmetric", "onesided"), default="symmetric"
        )
        p.add_argument("--p", type=float, default=1.0)
        p.add_argument("--q", type=float, default=1.0)

    p = sub.add_parser("apply", help="apply a fractional operator to a signal file")
    p.add_argument("--order", type=float, required=True)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--method", choices=("spectral", "grunwald"), default="spectral")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(handler=_cmd_apply)

    p = sub.add_parser("decompose", help="solve f = p D^-s u + q D^s(*) u for u")
    add_variant_args(p)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="CSV for the solution u")
    p.add_argument("--report", default=None, help="JSON diagnostics path")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("reconstruct", help="apply the forward map to a solution u")
    add_variant_args(p)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(handler=_cmd_reconstruct)

    p = sub.add_parser("norms", help="Sobolev seminorms/norms of a signal")
    p.add_argument("--input", required=True)
    p.add_argument("--mu", default="0,0.5,1", help="comma-separated orders")
    p.add_argument("--output", default=None, help="CSV path (default: stdout)")
    p.set_defaults(handler=_cmd_norms)

    p = sub.add_parser("decay", help="spectral decay exponent fit")
    p.add_argument("--input", required=True)
    p.add_argument("--xi-lo", type=float, default=None)
    p.add_argument("--xi-hi", type=float, default=None)
    p.add_argument("--output", default=None, help="JSON path (default: stdout)")
    p.set_defaults(handler=_cmd_decay)

    p = sub.add_parser("corpus", help="analytic test-function corpus")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)
    corpus_sub.add_parser("list", help="print descriptor names and parameters")
    pe = corpus_sub.add_parser("emit", help="write a sampled descriptor to CSV")
    pe.add_argument("name")
    pe.add_argument("--output", required=True)
    pe.add_argument("--window", type=float, nargs=2, default=(-20.0, 20.0),
                    metavar=("XMIN", "XMAX"))
    pe.add_argument("--n", type=int, default=4096)
    pe.add_argument("--param", action="append", metavar="KEY=VALUE",
                    help="override a descriptor parameter")
    p.set_defaults(handler=_cmd_corpus)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", help="suite name (repeatable); default all")
    p.add_argument("--s", type=float, action="append", help="override the s sweep")
    p.add_argument("--seed", type=int, default=20180627)
    p.add_argument("--n", type=int, default=4096)
    p.add_argument("--window", type=float, nargs=2, default=(-20.0, 20.0),
                   metavar=("XMIN", "XMAX"))
    p.add_argument("--tolerance", action="append", metavar="KEY=VALUE",
                   help="override a named tolerance")
    p.add_argument("--output", default=None, help="JSON report path")
    p.add_argument("--inject", default=None, help=argparse.SUPPRESS)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    client = ServiceClient(args.server)
    try:
        return args.handler(client, args)
    except ServiceError as exc:
        print(f"ERROR {exc.code}: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except SignalFormatError as exc:
        print(f"ERROR {exc.code}: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except httpx.HTTPError as exc:
        print(f"ERROR connection: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except OSError as exc:
        print(f"ERROR io: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
