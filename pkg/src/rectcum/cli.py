"""``rectcum`` command line.

Exit codes: 0 success, 1 a verification failed, 2 usage/input error.
Paths given as ``-`` mean stdin/stdout; file outputs are written atomically.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import __version__, combin, experiments, finitefree as ff, rectfree as rf, verify
from .exactalg import T, U, SymPoly, format_rational, from_json_value, parse_rational, to_json_value
from .kernels import BACKEND
from .transforms import (
    CoeffSeq,
    CumulantSeq,
    MomentSeq,
    TUParams,
    coeffs_from_cumulants,
    coeffs_from_moments,
    cumulants_from_coeffs,
    cumulants_from_moments,
    moments_from_coeffs,
    moments_from_cumulants,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

MANIFEST = (
    ("generic (t,u) generating-series identities", "transform --method series"),
    ("set-partition moment/cumulant formulas", "transform --method partitions"),
    ("operator constant-term formula", "transform --method operator"),
    ("weighted odd Lukasiewicz path sums", "transform --method paths, combin --what paths"),
    ("NC^even / odd path bijection", "combin --what nc-even, verify"),
    ("symmetric additive convolution and finite free cumulants", "conv --kind symmetric, cumulants --kind finite"),
    ("rectangular convolution and rectangular cumulants", "conv --kind rectangular, cumulants --kind rectangular"),
    ("rectangular convolution as a differential operator", "verify"),
    ("heat-flow operator and its cumulant shift", "asymptotics --experiment heatflow, verify"),
    ("q-rectangular free cumulants and convolution", "rectfree --op cumulants|moments|convolve"),
    ("rectangular Gaussian moments and density", "rectfree --op gaussian|density-check"),
    ("limits of scaled rectangular cumulants", "asymptotics --experiment cumulants"),
    ("limits of rectangular convolutions", "asymptotics --experiment convolution"),
    ("q-derivative, q-symbolic powers, q-composition", "qcheck"),
    ("q-deformed coefficients, operator and path formulas", "qcheck"),
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- I/O ------------------------------------------------------------------


def read_text(path, field):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{field}: cannot read {path!r}: {exc.strerror}") from exc


def read_json(path, field):
    text = read_text(path, field)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{field}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def write_text(path, text, field="--out"):
    """Write ``text`` to ``path`` via a temporary file and rename."""
    if path == "-" or path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".rectcum-", suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise UsageError(f"{field}: cannot write {path!r}: {exc.strerror}") from exc


def dump_json(obj):
    return json.dumps(obj, indent=2) + "\n"


# -- value parsing --------------------------------------------------------


def parse_rat(text, field):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise UsageError(f"{field}: not a rational number: {text!r}") from exc


def parse_param(text, field, symbol):
    if text == "sym":
        return symbol
    return parse_rat(text, field)


def parse_int(text, field, lo=None):
    try:
        v = int(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{field}: not an integer: {text!r}") from exc
    if lo is not None and v < lo:
        raise UsageError(f"{field}: must be >= {lo}, got {v}")
    return v


def parse_entries(data, field, prefix):
    """Entries of a sequence JSON; ``"sym"`` becomes the generic symbol."""
    if isinstance(data, dict):
        entries = data.get("entries")
    else:
        entries = data
    if not isinstance(entries, list):
        raise UsageError(f"{field}: expected {{\"entries\": [...]}}")
    out = []
    for i, e in enumerate(entries, start=1):
        if e == "sym":
            out.append(SymPoly.symbol(f"{prefix}{2 * i}"))
            continue
        try:
            out.append(from_json_value(e))
        except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
            raise UsageError(f"{field}: entry {i} is not a rational or polynomial: {e!r}") from exc
    return out


def render(x):
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, SymPoly):
        c = x.constant_value() if x.is_constant() else None
        if c is not None:
            return render(c)
        return str(x)
    try:
        return to_json_value(x) if getattr(x, "is_rational", lambda: False)() else str(x)
    except TypeError:
        return str(x)


def read_poly(path, field):
    data = read_json(path, field)
    try:
        return ff.MonicPoly.from_json(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{field}: {exc}") from exc


# -- subcommands ----------------------------------------------------------

KINDS = {"cumulants": ("k", CumulantSeq), "moments": ("m", MomentSeq), "coeffs": ("a", CoeffSeq)}


def cmd_transform(args, cfg):
    if args.source == args.target:
        raise UsageError("--from and --to must differ")
    p = TUParams(parse_param(args.t, "--t", T), parse_param(args.u, "--u", U))
    prefix, cls = KINDS[args.source]
    data = read_json(args.input, "--in")
    if isinstance(data, dict) and data.get("kind") not in (None, args.source):
        raise UsageError(f"--in: kind is {data.get('kind')!r} but --from is {args.source!r}")
    entries = parse_entries(data, "--in", prefix)
    K = args.order if args.order is not None else len(entries)
    if K < 1:
        raise UsageError("--order: must be >= 1")
    if len(entries) < K:
        raise UsageError(f"--order: {K} exceeds the {len(entries)} input entries")
    seq = cls(tuple(entries[:K]))
    method = args.method
    pair = (args.source, args.target)
    if method in ("operator", "paths") and pair != ("cumulants", "moments"):
        raise UsageError(f"--method: {method!r} only computes moments from cumulants")
    rec = "recursion" if method == "series" else method
    if pair == ("cumulants", "moments"):
        out = moments_from_cumulants(seq, p, K, method).m
    elif pair == ("moments", "cumulants"):
        out = cumulants_from_moments(seq, p, K, method).kappa
    elif pair == ("cumulants", "coeffs"):
        out = coeffs_from_cumulants(seq, p, K, method).a
    elif pair == ("coeffs", "cumulants"):
        out = cumulants_from_coeffs(seq, p, K, method).kappa
    elif pair == ("moments", "coeffs"):
        out = coeffs_from_moments(seq, p, K, rec).a
    else:
        out = moments_from_coeffs(seq, p, K, rec).m
    write_text(args.out, dump_json({"kind": args.target, "entries": [render(x) for x in out]}))
    return EXIT_OK


def cmd_conv(args, cfg):
    p = read_poly(args.p, "--p")
    r = read_poly(args.r, "--r")
    if p.degree != r.degree:
        raise UsageError(f"--r: degree {r.degree} does not match --p degree {p.degree}")
    if args.kind == "symmetric":
        out = ff.symmetric_additive_convolution(p, r)
    else:
        if args.n is None:
            raise UsageError("--n: required for --kind rectangular")
        out = ff.rectangular_convolution(p, r, parse_int(args.n, "--n", 0))
    write_text(args.out, dump_json(out.to_json()))
    return EXIT_OK


def cmd_cumulants(args, cfg):
    p = read_poly(args.p, "--p")
    if args.kind == "finite":
        out = ff.finite_free_cumulants(p)
    else:
        if args.n is None:
            raise UsageError("--n: required for --kind rectangular")
        out = ff.rect_cumulants(p, parse_int(args.n, "--n", 0))
    kind = "finite_cumulants" if args.kind == "finite" else "rect_cumulants"
    write_text(args.out, dump_json({"kind": kind, "entries": [format_rational(x) for x in out]}))
    return EXIT_OK


def cmd_combin(args, cfg):
    n = args.n
    what = args.what
    if what == "partitions":
        obj = [combin.partition_to_json(x) for x in combin.enumerate_partitions(n)]
    elif what == "even":
        obj = [combin.partition_to_json(x) for x in combin.enumerate_even_partitions(n)]
    elif what == "nc-even":
        obj = [combin.partition_to_json(x) for x in combin.enumerate_nc_even(n)]
    elif what == "paths":
        obj = [combin.path_to_json(x) for x in combin.enumerate_luk_odd(n)]
    else:
        obj = [{"partition": combin.partition_to_json(x), "path": combin.path_to_json(combin.nc_to_path(x))}
               for x in combin.enumerate_nc_even(n)]
    if args.count:
        write_text(args.out, f"{len(obj)}\n")
    else:
        write_text(args.out, json.dumps(obj) + "\n")
    return EXIT_OK


def cmd_rectfree(args, cfg):
    q = parse_param(args.q, "--q", rf.symbolic_q())
    op = args.op
    if op in ("gaussian", "density-check"):
        if args.sigma2 is None:
            raise UsageError("--sigma2: required for --op " + op)
        s2 = parse_rat(args.sigma2, "--sigma2")
        K = args.order or 4
        if op == "gaussian":
            out = rf.rect_gaussian_moments(q, s2, K).m
            write_text(args.out, dump_json({"kind": "moments", "entries": [render(x) for x in out]}))
            return EXIT_OK
        if isinstance(q, SymPoly):
            raise UsageError("--q: density-check needs a rational q")
        rep = rf.rect_gaussian_density_check(q, s2, K)
        obj = {
            "q": format_rational(rep.q),
            "sigma2": format_rational(rep.sigma2),
            "support": [repr(x) for x in rep.support],
            "mass": repr(rep.mass),
            "moments": [repr(x) for x in rep.moments],
            "exact_moments": [format_rational(x) for x in rep.exact_moments],
            "max_abs_error": repr(rep.max_abs_error),
            "passed": rep.passed(),
        }
        write_text(args.out, dump_json(obj))
        return EXIT_OK if rep.passed() else EXIT_FAIL
    if args.input is None:
        raise UsageError("--in: required for --op " + op)
    src_prefix = "k" if op == "moments" else "m"
    entries = parse_entries(read_json(args.input, "--in"), "--in", src_prefix)
    K = args.order or len(entries)
    entries = entries[:K]
    if op == "cumulants":
        out, kind = rf.qrect_cumulants_from_moments(entries, q), "cumulants"
    elif op == "moments":
        out, kind = rf.moments_from_qrect_cumulants(entries, q).m, "moments"
    else:
        if args.input2 is None:
            raise UsageError("--in2: required for --op convolve")
        other = parse_entries(read_json(args.input2, "--in2"), "--in2", "n")[:K]
        if len(other) != len(entries):
            raise UsageError(f"--in2: {len(other)} entries but --in has {len(entries)}")
        out, kind = rf.qrect_free_convolution(entries, other, q).m, "moments"
    write_text(args.out, dump_json({"kind": kind, "entries": [render(x) for x in out]}))
    return EXIT_OK


def cmd_qcheck(args, cfg):
    points = tuple(verify.parse_point(p) for p in args.point) if args.point else verify.DEFAULT_Q_POINTS
    results = verify.q_checks(points)
    write_text(args.out, verify.format_table(results) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_verify(args, cfg):
    results = verify.run_all(cfg.seed)
    write_text(args.out, verify.format_table(results) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_asymptotics(args, cfg):
    fams = [f.strip() for f in args.family.split(",") if f.strip()]
    for f in fams:
        if f not in experiments.FAMILIES:
            raise UsageError(f"--family: unknown family {f!r}; expected one of {experiments.FAMILIES}")
    q = parse_rat(args.q, "--q")
    dmax = parse_int(args.dmax, "--dmax", 1)
    if dmax > experiments.DMAX_OPT_IN:
        raise UsageError(f"--dmax: {dmax} exceeds the cap {experiments.DMAX_OPT_IN}")
    try:
        ds = experiments.parse_ds(args.ds, dmax)
    except ValueError as exc:
        raise UsageError(f"--ds: {exc}") from exc
    if any(d > dmax for d in ds):
        raise UsageError(f"--ds: entries must not exceed --dmax {dmax}")
    K = args.order
    try:
        if args.experiment == "cumulants":
            rep = experiments.cumulant_convergence(fams[0], q, K, ds, jobs=cfg.jobs)
        elif args.experiment == "convolution":
            if len(fams) != 2:
                raise UsageError("--family: convolution needs two comma-separated families")
            rep = experiments.convolution_convergence(fams[0], fams[1], q, K, ds, jobs=cfg.jobs)
        else:
            s = parse_rat(args.s, "--s")
            rep = experiments.heat_flow_convergence(fams[0], q, s, K, ds, jobs=cfg.jobs)
    except ValueError as exc:
        raise UsageError(f"--q: {exc}") from exc
    write_text(args.out, rep.to_csv(cfg.precision))
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser():
    parser = _Parser(prog="rectcum", description="Exact rectangular finite free probability calculus.")
    parser.add_argument("--seed", type=int, default=0, help="seed for fixture point selection (default 0)")
    parser.add_argument("--precision", type=int, default=20, help="decimal digits when rendering (default 20)")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    parser.add_argument("--version", action="store_true", help="print version and formula coverage")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    t = sub.add_parser("transform", help="convert between cumulants, moments and coefficients")
    t.add_argument("--from", dest="source", required=True, choices=sorted(KINDS))
    t.add_argument("--to", dest="target", required=True, choices=sorted(KINDS))
    t.add_argument("--method", default="series", choices=["series", "partitions", "operator", "paths"])
    t.add_argument("--t", default="sym")
    t.add_argument("--u", default="sym")
    t.add_argument("--order", type=int)
    t.add_argument("--in", dest="input", default="-")
    t.add_argument("--out", default="-")
    t.set_defaults(func=cmd_transform)

    c = sub.add_parser("conv", help="convolve two monic polynomials")
    c.add_argument("--kind", required=True, choices=["symmetric", "rectangular"])
    c.add_argument("--n")
    c.add_argument("--p", required=True)
    c.add_argument("--r", required=True)
    c.add_argument("--out", default="-")
    c.set_defaults(func=cmd_conv)

    k = sub.add_parser("cumulants", help="finite free or rectangular cumulants of a polynomial")
    k.add_argument("--kind", required=True, choices=["finite", "rectangular"])
    k.add_argument("--n")
    k.add_argument("--p", required=True)
    k.add_argument("--out", default="-")
    k.set_defaults(func=cmd_cumulants)

    b = sub.add_parser("combin", help="dump partitions or paths as JSON")
    b.add_argument("--what", required=True, choices=["partitions", "even", "nc-even", "paths", "bijection"])
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--count", action="store_true", help="print only the number of objects")
    b.add_argument("--out", default="-")
    b.set_defaults(func=cmd_combin)

    r = sub.add_parser("rectfree", help="q-rectangular free cumulants, convolution, Gaussian")
    r.add_argument("--op", required=True, choices=["cumulants", "moments", "convolve", "gaussian", "density-check"])
    r.add_argument("--q", required=True)
    r.add_argument("--sigma2")
    r.add_argument("--order", type=int)
    r.add_argument("--in", dest="input")
    r.add_argument("--in2", dest="input2")
    r.add_argument("--out", default="-")
    r.set_defaults(func=cmd_rectfree)

    qc = sub.add_parser("qcheck", help="run the q-deformation checks")
    qc.add_argument("--point", action="append", help="t=..,u=..,s=.. (repeatable)")
    qc.add_argument("--out", default="-")
    qc.set_defaults(func=cmd_qcheck)

    a = sub.add_parser("asymptotics", help="finite-d convergence tables as CSV")
    a.add_argument("--experiment", required=True, choices=["cumulants", "convolution", "heatflow"])
    a.add_argument("--family", required=True)
    a.add_argument("--q", required=True)
    a.add_argument("--s", default="1")
    a.add_argument("--dmax", default=str(experiments.DMAX_DEFAULT))
    a.add_argument("--ds", help="comma-separated degrees (default 25,50,100,200 up to --dmax)")
    a.add_argument("--order", type=int, default=2, help="largest index l or k (default 2)")
    a.add_argument("--out", default="-")
    a.set_defaults(func=cmd_asymptotics)

    v = sub.add_parser("verify", help="run the full identity suite")
    v.add_argument("--out", default="-")
    v.set_defaults(func=cmd_verify)
    return parser


def version_text():
    lines = [f"rectcum {__version__} (kernels: {BACKEND})", "formula coverage:"]
    width = max(len(name) for name, _ in MANIFEST)
    lines += [f"  {name:<{width}}  -> {cmds}" for name, cmds in MANIFEST]
    return "\n".join(lines) + "\n"


def run(argv=None):
    parser = build_parser()
    try:
        cfg = parser.parse_args(argv)
        if cfg.version:
            sys.stdout.write(version_text())
            return EXIT_OK
        if not cfg.command:
            raise UsageError("a subcommand is required")
        if cfg.jobs < 1:
            raise UsageError("--jobs: must be >= 1")
        if cfg.precision < 1:
            raise UsageError("--precision: must be >= 1")
        return cfg.func(cfg, cfg)
    except UsageError as exc:
        sys.stderr.write(f"rectcum: error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        sys.stderr.write(f"rectcum: error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
