"""Command-line front end: ``hodgelocus <command> [options]``.

Every command writes one JSON report (stdout or ``--out``).  Exit status is
0 when every check passes, 1 on a failed check or computation failure, and
2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cycles import (ci_class_rep, ci_from_polys, linked_class_rep, make_ci_hypersurface,
                     make_link, meeting_vs_skew_lines, twisted_cubic_ideal, twisted_cubic_link,
                     verify_ci_tangent)
from .divisor import DivisorData, divisor_degree_bound, expected_codim_table, hilbert_scheme_dim
from .errors import HodgeLocusError, ParseError, UsageError
from .field import FieldSpec
from .formats import format_polys, parse_polys, parse_sections
from .ideal import IdealGens, ci_hilbert_series, hilbert_function, ideal_codim, regularity_failure
from .jacobian import JacobianRing, macaulay_verify, smoothness_check
from .poly import MAX_DIM, dimension_cap
from .report import Report
from .tangent import HodgeClassRep, duality_check, nl_codim

COMMANDS = ("dims", "macaulay", "smooth", "jacobian", "tangent", "ci-verify", "class-rep",
            "link", "lines-experiment", "divisor-bound", "table")


def _field_arg(text):
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed_arg(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=argparse.SUPPRESS,
                        help="rational | prime:<p> (default prime:2147483647)")
    common.add_argument("--seed", type=_seed_arg, default=argparse.SUPPRESS,
                        help="seed for random instances (default 0)")
    common.add_argument("--max-dim", type=int, default=argparse.SUPPRESS,
                        help=f"largest graded piece to enumerate (default {MAX_DIM})")
    common.add_argument("--out", type=Path, default=argparse.SUPPRESS,
                        help="write the JSON report here instead of stdout")

    parser = argparse.ArgumentParser(prog="hodgelocus", parents=[common],
                                     description="Jacobian rings and Hodge locus tangent spaces.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("dims", parents=[common], help="Hilbert function of S/I or of R_F")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ideal", type=Path)
    src.add_argument("--surface", type=Path)
    p.add_argument("--up-to", type=int)

    p = sub.add_parser("macaulay", parents=[common], help="Macaulay duality for a regular sequence")
    p.add_argument("--ideal", type=Path, required=True)

    p = sub.add_parser("smooth", parents=[common], help="smoothness of a hypersurface")
    p.add_argument("--surface", type=Path, required=True)

    p = sub.add_parser("jacobian", parents=[common], help="Jacobian ring summary")
    p.add_argument("--surface", type=Path, required=True)

    p = sub.add_parser("tangent", parents=[common], help="T_1 pieces and tangent codimension")
    p.add_argument("--surface", type=Path, required=True)
    p.add_argument("--class", dest="rep", type=Path, required=True)
    p.add_argument("--degrees", type=_int_list)
    p.add_argument("--expect-codim", type=int)

    for name, text in (("ci-verify", "class representative and T_1 = I check for a CI cycle"),
                       ("class-rep", "class representative of a CI cycle")):
        p = sub.add_parser(name, parents=[common], help=text)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--instance", type=Path, help="sections [P], [Q] and optional [F]")
        src.add_argument("--cycle", type=Path, help="the P's; Q's are drawn from --seed")
        p.add_argument("--d", type=int, help="surface degree (with --cycle)")
        if name == "ci-verify":
            p.add_argument("--expect-codim", type=int)
        else:
            p.add_argument("--rep-out", type=Path, help="write P in the polynomial format")

    p = sub.add_parser("link", parents=[common], help="class of a curve by one linkage step")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--instance", type=Path,
                     help="sections [P] (A, B), [CURVE], [LINK], and [Q] (U, W) or [F]")
    src.add_argument("--twisted-cubic", action="store_true")
    p.add_argument("--d", type=int)
    p.add_argument("--expect-codim", type=int)

    p = sub.add_parser("lines-experiment", parents=[common], help="two lines: skew vs meeting")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--configuration", choices=("skew", "meeting", "both"), default="both")
    p.add_argument("--ratios", type=_int_list)

    p = sub.add_parser("divisor-bound", parents=[common], help="degree bound for a divisor")
    p.add_argument("--data", type=Path, required=True)
    p.add_argument("--d", type=int)

    p = sub.add_parser("table", parents=[common], help="expected codimensions and family dims")
    p.add_argument("--d-min", type=int, default=5)
    p.add_argument("--d-max", type=int, default=8)
    return parser


def _read(report: Report, name: str, path: Path) -> str:
    data = path.read_bytes()
    report.add_input(name, data)
    return data.decode("utf-8")


def _single(polys, name):
    if len(polys) != 1:
        raise ParseError(f"{name}: expected exactly one polynomial, found {len(polys)}")
    return polys[0]


# commands


def cmd_dims(args, report):
    if args.surface is not None:
        ring = JacobianRing(_single(parse_polys(_read(report, "surface", args.surface),
                                                field=args.field), "surface"))
        sigma = ring.sigma
        up_to = sigma + 1 if args.up_to is None else args.up_to
        dims = [ring.dim(k) for k in range(up_to + 1)]
        series = ci_hilbert_series([ring.d - 1] * ring.ideal.nvars, ring.ideal.nvars, up_to)
        report.results.update(d=ring.d, n=ring.n, N=ring.N, sigma=sigma, dims=dims)
        report.check("ci_series_agreement", dims == series, expected=series)
        report.check("symmetry", all(ring.dim(k) == ring.dim(sigma - k)
                                     for k in range(min(up_to, sigma) + 1)))
        return
    ideal = IdealGens(parse_polys(_read(report, "ideal", args.ideal), field=args.field))
    regular = len(ideal) == ideal.nvars and regularity_failure(ideal) is None
    if args.up_to is None:
        if not regular:
            raise UsageError("--up-to is required unless the ideal is a regular sequence")
        up_to = sum(ideal.degrees) - ideal.nvars + 1
    else:
        up_to = args.up_to
    data = hilbert_function(ideal, up_to)
    report.results.update(n=ideal.n, degrees=ideal.degrees, dims=data.values,
                          socle_degree=data.socle_degree)
    if regular:
        series = ci_hilbert_series(ideal.degrees, ideal.nvars, up_to)
        report.check("ci_series_agreement", list(data.values) == series, expected=series)


def cmd_macaulay(args, report):
    ideal = IdealGens(parse_polys(_read(report, "ideal", args.ideal), field=args.field))
    res = macaulay_verify(ideal)
    report.results.update(N=res.socle_degree, dims=res.dims, degrees=ideal.degrees)
    report.check("top_dimension", res.top_dim == 1, dim=res.top_dim)
    failed = dict(res.failures)
    for k in range(res.socle_degree // 2 + 1):
        report.check(f"pairing_{k:02d}", k not in failed and k in res.pairing_ranks,
                     rank=res.pairing_ranks.get(k), dims=[res.dims[k], res.dims[-1 - k]],
                     reason=failed.get(k))


def cmd_smooth(args, report):
    F = _single(parse_polys(_read(report, "surface", args.surface), field=args.field), "surface")
    ok = smoothness_check(F)
    report.results.update(d=F.degree, n=F.n)
    report.check("smooth", ok)


def cmd_jacobian(args, report):
    F = _single(parse_polys(_read(report, "surface", args.surface), field=args.field), "surface")
    ring = JacobianRing(F)
    dims = [ring.dim(k) for k in range(ring.sigma + 2)]
    report.results.update(d=ring.d, n=ring.n, N=ring.N, sigma=ring.sigma, dims=dims,
                          partials=[str(g) for g in ring.ideal],
                          socle_monomial=list(ring.socle_functional().anchor))
    report.check("sigma_is_2N", ring.sigma == 2 * ring.N)
    report.check("socle_dimension", dims[ring.sigma] == 1, dim=dims[ring.sigma])
    report.check("vanishes_above_socle", dims[ring.sigma + 1] == 0)
    report.check("symmetry", all(dims[k] == dims[ring.sigma - k] for k in range(ring.sigma + 1)))


def _tangent_checks(report, rep, degrees=None, expect=None, label="codim"):
    N, d = rep.N, rep.ring.d
    degrees = list(range(N + 1)) if degrees is None else degrees
    report.results["t1_codims"] = {str(t): rep.t1(t).codim for t in degrees}
    report.results["degenerate"] = rep.is_degenerate()
    if d <= N:
        codim = nl_codim(rep)
        report.results[label] = codim
        if expect is not None:
            report.check("expected_codim", codim == expect, codim=codim, expected=expect)
    for k in sorted({k for k in (1, d - 4, d) if 0 <= k <= N}):
        res = duality_check(rep, k)
        report.check(f"duality_k{k:02d}", res.passed, codim=res.codim,
                     dual_codim=res.dual_codim, vacuous=res.vacuous)


def cmd_tangent(args, report):
    F = _single(parse_polys(_read(report, "surface", args.surface), field=args.field), "surface")
    ring = JacobianRing(F)
    P = _single(parse_polys(_read(report, "class", args.rep), n=F.n, field=args.field), "class")
    rep = HodgeClassRep(ring, P)
    report.results.update(d=ring.d, n=ring.n, N=ring.N)
    for t in args.degrees or ():
        if not 0 <= t <= ring.N:
            raise UsageError(f"degree {t} outside 0..N={ring.N}")
    _tangent_checks(report, rep, args.degrees, args.expect_codim)
    for t in args.degrees or range(ring.N + 1):
        report.check(f"jacobian_inside_t1_{t:02d}", rep.t1(t).contains(ring.relations(t)))


def _ci_input(args, report):
    if args.instance is not None:
        secs = parse_sections(_read(report, "instance", args.instance), field=args.field)
        if "P" not in secs or "Q" not in secs:
            raise UsageError("instance file needs [P] and [Q] sections")
        F = _single(secs["F"], "[F]") if "F" in secs else None
        return ci_from_polys(secs["P"], secs["Q"], F)
    if args.d is None:
        raise UsageError("--cycle needs --d")
    Ps = parse_polys(_read(report, "cycle", args.cycle), field=args.field)
    return make_ci_hypersurface(Ps, d=args.d, seed=args.seed)


def _ci_results(report, ci, rep):
    report.results.update(d=ci.d, n=ci.F.n, N=ci.N, F=str(ci.F), P=[str(p) for p in ci.Ps],
                          Q=[str(q) for q in ci.Qs], attempt=ci.attempt,
                          representative=str(rep.P))


def cmd_ci_verify(args, report):
    ci = _ci_input(args, report)
    rep = ci_class_rep(ci)
    _ci_results(report, ci, rep)
    res = verify_ci_tangent(ci, rep, strict=False)
    report.results["per_degree"] = [{"k": k, "dim_t1": a, "dim_ideal": b} for k, a, b in res.rows]
    report.check("t1_equals_ideal", res.passed, mismatched_degrees=res.mismatches)
    _tangent_checks(report, rep, [], args.expect_codim)


def cmd_class_rep(args, report):
    ci = _ci_input(args, report)
    rep = ci_class_rep(ci)
    _ci_results(report, ci, rep)
    report.check("unique_representative", True)
    if args.rep_out is not None:
        args.rep_out.write_text(format_polys([rep.P], "class representative"), encoding="utf-8")


def cmd_link(args, report):
    if args.twisted_cubic:
        if args.d is None:
            raise UsageError("--twisted-cubic needs --d")
        link, ring = twisted_cubic_link(args.d, args.seed, args.field)
        report.results["attempt"] = link.attempt
        expect = 3 * args.d - 11 if args.expect_codim is None else args.expect_codim
    else:
        secs = parse_sections(_read(report, "instance", args.instance), field=args.field)
        for name in ("P", "CURVE", "LINK"):
            if name not in secs:
                raise UsageError(f"link file needs a [{name}] section")
        if len(secs["P"]) != 2:
            raise UsageError("[P] must hold exactly the two surfaces A, B")
        A, B = secs["P"]
        if "F" in secs:
            F = _single(secs["F"], "[F]")
        elif "Q" in secs and len(secs["Q"]) == 2:
            F = A * secs["Q"][0] + B * secs["Q"][1]
        else:
            raise UsageError("link file needs [F] or a two-polynomial [Q] section")
        link = make_link(secs["CURVE"], A, B, secs["LINK"], F)
        ring = JacobianRing(F)
        expect = args.expect_codim
    rep = linked_class_rep(link, ring)
    d = ring.d
    report.results.update(d=d, n=ring.n, N=ring.N, F=str(link.F), representative=str(rep.P))
    if d - 4 >= 0:
        report.results["curve_ideal_codim_d_minus_4"] = ideal_codim(link.curve, d - 4)
    _tangent_checks(report, rep, sorted({k for k in (1, d - 4, d) if 0 <= k <= ring.N}), expect)
    report.check("t1_contains_curve_ideal",
                 all(rep.t1(k).contains(link.curve.piece(k)) for k in range(ring.N + 1)))


def cmd_lines(args, report):
    configs = ("skew", "meeting") if args.configuration == "both" else (args.configuration,)
    for conf in configs:
        res = meeting_vs_skew_lines(args.d, args.seed, conf, args.ratios, args.field)
        report.results[conf] = {"attempt": res.attempt, "ratios": res.ratios,
                                "codims": res.codims, "single_codims": res.single_codims}
        report.check(f"{conf}_single_lines", res.single_codims == (args.d - 3, args.d - 3),
                     codims=res.single_codims, expected=args.d - 3)
        if conf == "skew":
            report.check("skew_at_benchmark", res.all_at_benchmark, codims=res.codims,
                         benchmark=res.benchmark)
        else:
            report.check("meeting_below_benchmark", res.all_below_benchmark,
                         codims=res.codims, benchmark=res.benchmark)
    report.results["benchmark"] = 2 * (args.d - 3)


def cmd_divisor(args, report):
    try:
        raw = json.loads(_read(report, "data", args.data))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(raw, dict) or "components" not in raw:
        raise UsageError("divisor data needs a 'components' list")
    d = args.d if args.d is not None else raw.get("d")
    if d is None:
        raise UsageError("surface degree missing: give 'd' in the data or --d")
    try:
        data = DivisorData.build(d, raw["components"], raw.get("intersections", []))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"malformed divisor data: {exc}") from None
    res = divisor_degree_bound(data)
    report.results.update(d=data.d, degree=data.degree, values=res.values,
                          first_bounds=res.first_bounds, second_bounds=res.second_bounds)
    for i, v in enumerate(res.values):
        report.check(f"component_{i:02d}_negative", v < 0, value=v)
    report.check("bound_chain", res.chain_holds)


def cmd_table(args, report):
    if args.d_min > args.d_max:
        raise UsageError("--d-min exceeds --d-max")
    rows = expected_codim_table(range(args.d_min, args.d_max + 1))
    report.results["expected_codims"] = [
        {"d": r.d, "line": r.line, "conic": r.conic, "twisted_cubic": r.twisted_cubic}
        for r in rows]
    dims = [hilbert_scheme_dim(e) for e in (1, 2, 3)]
    report.results["hilbert_scheme_dims"] = dims
    report.check("hilbert_scheme_dims", dims == [4, 8, 12], dims=dims)
    cubic = twisted_cubic_ideal(args.field)
    for r in rows:
        c = ideal_codim(cubic, r.d - 4)
        report.check(f"twisted_cubic_ideal_codim_d{r.d:02d}", c == r.twisted_cubic,
                     codim=c, expected=r.twisted_cubic)


HANDLERS = {
    "dims": cmd_dims, "macaulay": cmd_macaulay, "smooth": cmd_smooth,
    "jacobian": cmd_jacobian, "tangent": cmd_tangent, "ci-verify": cmd_ci_verify,
    "class-rep": cmd_class_rep, "link": cmd_link, "lines-experiment": cmd_lines,
    "divisor-bound": cmd_divisor, "table": cmd_table,
}


def _error_dict(exc) -> dict:
    out = {"type": type(exc).__name__, "message": str(exc)}
    for attr in ("line", "column", "degree", "dimension", "seed"):
        value = getattr(exc, attr, None)
        if value is not None:
            out[attr] = value
    return out


def run(argv=None) -> tuple[int, Report | None]:
    """Parse ``argv``, execute the command and return ``(exit code, report)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    args.field = getattr(args, "field", FieldSpec.prime())
    args.seed = getattr(args, "seed", 0)
    args.max_dim = getattr(args, "max_dim", MAX_DIM)
    args.out = getattr(args, "out", None)
    report = Report(args.command, str(args.field), args.seed, __version__)
    try:
        with dimension_cap(args.max_dim), report.timed("total"):
            HANDLERS[args.command](args, report)
        code = 0 if report.passed else 1
    except UsageError as exc:
        report.error, code = _error_dict(exc), 2
    except OSError as exc:
        report.error, code = {"type": type(exc).__name__, "message": str(exc)}, 2
    except HodgeLocusError as exc:
        report.error, code = _error_dict(exc), 1
    text = report.to_json()
    if args.out is not None:
        try:
            args.out.write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"hodgelocus: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2, report
    else:
        sys.stdout.write(text)
    if report.error is not None:
        print(f"hodgelocus: {report.error['type']}: {report.error['message']}", file=sys.stderr)
    return code, report


def main(argv=None) -> int:
    return run(argv)[0]
