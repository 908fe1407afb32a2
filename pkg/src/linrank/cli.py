"""Command line front end.

    linrank rank --field "p=2 s=1 n=3" --poly "f=[0,1,1]"

Every subcommand prints one JSON document.  Exit status is 0 on success,
1 on a domain error and 2 on a malformed or invalid request.  Field
elements appear as decimal strings of their integer encodings.
"""

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field

from . import checks
from .apps import mrd_search_9, scattered_check, weight_spectrum
from .dickson import _minor_of, dickson_sigma, rank_via_minor_chain, rank_via_minor_chain_sigma
from .errors import LinRankError, ParseError, ValidationError
from .field import GF, prime_power
from .formats import format_field_spec, parse_field_spec, parse_poly_spec
from .linpoly import lp_gcrd, lp_kernel_brute
from .matrix import det
from .subres import gcd_qdeg_via_subres, padded_chain

DEFAULT_SEED = 20190101

COMMANDS = ("field", "rank", "kernel", "gcrd", "subres-chain", "dickson-chain",
            "scattered", "weights", "mrd-search", "selftest")
NEEDS_FIELD = set(COMMANDS) - {"selftest", "mrd-search"}
POLY_COUNT = {"rank": 1, "kernel": 1, "gcrd": 2, "subres-chain": (1, 2),
              "dickson-chain": 1, "scattered": 1, "weights": 1}


@dataclass
class Request:
    command: str
    ctx: object = None
    polys: list = field(default_factory=list)
    options: dict = field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser():
    parser = _Parser(prog="linrank", description="Rank of linearized polynomials "
                     "via Dickson minors and q-subresultants.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--field", help='e.g. "p=2 s=1 n=3 [mod=1,1,0,1]"')
    parser.add_argument("--poly", action="append", default=[],
                        help='e.g. "f=[0,1,1] stride=1"; repeat for two polynomials')
    parser.add_argument("--q", type=int, help="base field size for mrd-search")
    parser.add_argument("--verify", choices=("none", "brute"), default="none")
    parser.add_argument("--list", action="store_true", help="list kernel elements")
    parser.add_argument("--budget", type=int, help="sweep budget (field order cap)")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--level", choices=("quick", "full"), default="quick")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--output", help="write JSON here instead of stdout")
    parser.add_argument("--pretty", action="store_true", help="human-readable table")
    parser.add_argument("--timing", action="store_true",
                        help="include wall-clock runtime (breaks byte-determinism)")
    return parser


def parse_request(argv):
    args = _build_parser().parse_args(argv)
    req = Request(args.command, options=vars(args))
    if args.command in NEEDS_FIELD or (args.command == "mrd-search" and args.q is None):
        if args.field is None:
            raise ParseError(f"{args.command} needs --field", "--field")
        req.ctx = parse_field_spec(args.field)
    elif args.command == "mrd-search":
        try:
            req.ctx = GF(*prime_power(args.q), 9)
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
    if args.command == "mrd-search" and req.ctx.n != 9:
        raise ValidationError("mrd-search needs a field with n=9")
    wanted = POLY_COUNT.get(args.command, 0)
    lo, hi = wanted if isinstance(wanted, tuple) else (wanted, wanted)
    if not lo <= len(args.poly) <= hi:
        raise ParseError(f"{args.command} takes {lo if lo == hi else f'{lo} or {hi}'} "
                         f"--poly argument(s), got {len(args.poly)}", "--poly")
    req.polys = [parse_poly_spec(text, req.ctx)[1] for text in args.poly]
    if args.threads < 1:
        raise ValidationError("--threads must be positive")
    return req


def _s(values):
    return [str(v) for v in values]


def _field_doc(ctx):
    return {"spec": format_field_spec(ctx), "p": ctx.p, "s": ctx.s, "n": ctx.n,
            "q": ctx.q, "order": ctx.order, "modulus": list(ctx.modulus)}


def _rank(req):
    f = req.polys[0]
    cert = rank_via_minor_chain(f) if f.stride == 1 else rank_via_minor_chain_sigma(f)
    doc = cert.to_json()
    if req.options["verify"] == "brute":
        doc["verified"] = lp_kernel_brute(f, budget=req.options["budget"]).dim == cert.mu
    return doc


def _kernel(req):
    rep = lp_kernel_brute(req.polys[0], materialize=req.options["list"],
                          budget=req.options["budget"])
    doc = {"dim": rep.dim, "rank": rep.rank}
    if rep.kernel_elements is not None:
        doc["kernel_elements"] = _s(rep.kernel_elements)
    return doc


def _gcrd(req):
    h = lp_gcrd(*req.polys)
    return {"gcrd": _s(h.coeffs), "qdeg": h.qdeg, "stride": h.stride}


def _subres(req):
    if len(req.polys) == 1:
        return padded_chain(req.polys[0]).to_json()
    return gcd_qdeg_via_subres(*req.polys).to_json()


def _dickson_chain(req):
    f = req.polys[0]
    D = dickson_sigma(f)
    dets = [det(_minor_of(D, m)) for m in range(D.rows + 1)]
    mu = next(m for m, d in enumerate(dets) if d)
    return {"mu": mu, "rank": D.rows - mu, "minors": _s(dets), "stride": f.stride}


def _scattered(req):
    return scattered_check(req.polys[0], budget=req.options["budget"]).to_json()


def _weights(req):
    return weight_spectrum(req.polys[0], budget=req.options["budget"]).to_json()


def _mrd(req):
    ctx = req.ctx
    hits = mrd_search_9(ctx, threads=req.options["threads"], budget=req.options["budget"])
    return {"field": _field_doc(ctx), "count": len(hits),
            "witnesses": [dict(c=str(c), **cert.to_json()) for c, cert in hits]}


def selftest(level="quick", seed=DEFAULT_SEED, threads=1):
    rng = random.Random(seed)
    quick = level == "quick"
    F8, F16, F32 = GF(2, 1, 3), GF(2, 1, 4), GF(2, 1, 5)
    results = [checks.conn_polys(F8, checks.all_polys(F8)),
               checks.conn_polys(GF(3, 1, 2), checks.all_polys(GF(3, 1, 2))),
               checks.dm_equals_rm(F8, checks.all_polys(F8))]
    if not quick:
        F64 = GF(2, 1, 6)
        results.append(checks.conn_polys(F64, checks.random_polys(F64, 1000, rng)))
        results.append(checks.dm_equals_rm(F32, checks.random_polys(F32, 200, rng)))
    results.extend(checks.subres_pairs(F16, 40 if quick else 200, rng))
    results.append(checks.gcrd_vs_gcd(F8, 30 if quick else 100, rng))
    results.extend(checks.sigma_minors(F32, 2, 30 if quick else 200, rng))
    results.extend(checks.spectra(F8, 20 if quick else 100, rng))
    results.extend(checks.spectra(F16, 10 if quick else 100, rng))
    for F in (GF(5), F8):
        results.append(checks.schur_blocks(F, 100 if quick else 500, rng))
        results.append(checks.bordered(F, 100 if quick else 500, rng))
    results.append(checks.classical(GF(5), 50 if quick else 200, rng))
    if not quick:
        results.append(checks.mrd(2, threads)[0])
    return results


def _selftest(req):
    results = selftest(req.options["level"], req.options["seed"], req.options["threads"])
    return {"level": req.options["level"], "seed": req.options["seed"],
            "passed": sum(r.passed for r in results), "total": sum(r.total for r in results),
            "ok": all(r.ok for r in results), "suites": [r.to_json() for r in results]}


HANDLERS = {"field": lambda req: _field_doc(req.ctx), "rank": _rank, "kernel": _kernel,
            "gcrd": _gcrd, "subres-chain": _subres, "dickson-chain": _dickson_chain,
            "scattered": _scattered, "weights": _weights, "mrd-search": _mrd,
            "selftest": _selftest}


def run(req):
    """Execute a parsed request; returns (document, exit code)."""
    start = time.perf_counter()
    try:
        doc = {"command": req.command, "result": HANDLERS[req.command](req)}
    except LinRankError as exc:
        return _error_doc(exc), 1
    if req.ctx is not None:
        doc["field"] = format_field_spec(req.ctx)
    if req.options.get("timing"):
        doc["runtime_s"] = round(time.perf_counter() - start, 6)
    code = 0
    if req.command == "selftest" and not doc["result"]["ok"]:
        code = 1
    return doc, code


def _error_doc(exc):
    err = {"kind": exc.kind, "message": str(exc)}
    if isinstance(exc, ParseError):
        err["token"] = exc.token
        err["position"] = exc.position
    return {"error": err}


def _pretty(doc, indent=0):
    lines = []
    pad = "  " * indent
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_pretty(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.extend(_pretty(item, indent + 1))
                lines.append("")
        else:
            shown = " ".join(map(str, value)) if isinstance(value, list) else value
            lines.append(f"{pad}{key:<16} {shown}")
    return lines


def render(doc, pretty=False):
    if pretty:
        return "\n".join(_pretty(doc)) + "\n"
    return json.dumps(doc, sort_keys=True) + "\n"


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_request(argv)
    except (ParseError, ValidationError) as exc:
        sys.stdout.write(render(_error_doc(exc)))
        return 2
    except LinRankError as exc:
        sys.stdout.write(render(_error_doc(exc)))
        return 1
    doc, code = run(req)
    text = render(doc, req.options["pretty"])
    if req.options["output"]:
        with open(req.options["output"], "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
