"""Command-line front end.

Exit codes: 0 all assertions passed, 1 a mathematical assertion failed,
2 usage or expression parse error.  Every run is deterministic given argv;
reports render as aligned text or as versioned JSON with sorted keys and
no floating-point values.
"""

import argparse
import sys
from math import gcd

from kummerlab import charsum, monoid, quadorder
from kummerlab.cyclotomic import conjugate, cyclotomic_ring, gaussian_periods
from kummerlab.exprparse import ElementParseError, parse_element, render_element
from kummerlab.idealprimes import enumerate_jacobi_maps
from kummerlab.reports import render_json, render_text
from kummerlab.reproduce import Config, reproduce_all
from kummerlab.valuation import (
    UniformizerSearchError,
    divides,
    factorize,
    find_uniformizer,
    multiplicity,
    valuation_oracle,
)

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummerlab",
        description="Exact ideal-prime arithmetic, character sums, and "
        "their failure modes in singular rings.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON reports")
    common.add_argument(
        "--uniformizer-bound",
        type=int,
        default=3,
        metavar="N",
        help="starting max-norm for uniformizer searches (default 3)",
    )
    common.add_argument(
        "--enum-cap",
        type=int,
        default=10000,
        metavar="N",
        help="cap for exhaustive monoid enumerations (default 10000)",
    )
    common.add_argument(
        "--trial-div",
        type=int,
        default=10**6,
        metavar="N",
        help="trial-division bound for norm factorizations (default 10^6)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_maps = sub.add_parser("maps", parents=[common], help="list Jacobi maps")
    p_maps.add_argument("--lambda", dest="lam", type=int, required=True)
    p_maps.add_argument("--p", type=int, required=True)
    p_maps.add_argument("--periods", type=int, default=None, metavar="E")

    p_factor = sub.add_parser(
        "factor", parents=[common], help="ideal prime factorization"
    )
    p_factor.add_argument("--lambda", dest="lam", type=int, required=True)
    p_factor.add_argument("expr")

    p_val = sub.add_parser(
        "valuation", parents=[common], help="multiplicity at one ideal prime"
    )
    p_val.add_argument("--lambda", dest="lam", type=int, required=True)
    p_val.add_argument("--p", type=int, required=True)
    p_val.add_argument(
        "--xi", required=True, help="root label: residue, or comma list for f>1"
    )
    p_val.add_argument("expr")

    p_div = sub.add_parser("divides", parents=[common], help="divisibility test")
    p_div.add_argument("--lambda", dest="lam", type=int, required=True)
    p_div.add_argument("divisor")
    p_div.add_argument("element")

    p_js = sub.add_parser("jacobi-sum", parents=[common], help="Jacobi sum")
    p_js.add_argument("--p", type=int, required=True)
    p_js.add_argument("--order", type=int, required=True)
    p_js.add_argument("--i", type=int, required=True)
    p_js.add_argument("--k", type=int, required=True)

    p_gs = sub.add_parser(
        "gauss-sum", parents=[common], help="Gauss-sum power descent"
    )
    p_gs.add_argument("--p", type=int, required=True)
    p_gs.add_argument("--order", type=int, required=True)
    p_gs.add_argument("--i", type=int, default=1)

    p_fc = sub.add_parser(
        "fc-check", parents=[common], help="fundamental congruence"
    )
    p_fc.add_argument("--p", type=int, required=True)
    p_fc.add_argument("--all", action="store_true")
    p_fc.add_argument("--i", type=int)
    p_fc.add_argument("--k", type=int)

    p_st = sub.add_parser(
        "stickelberger", parents=[common], help="support of J(chi,chi)"
    )
    p_st.add_argument("--lambda", dest="lam", type=int, required=True)
    p_st.add_argument("--p", type=int, required=True)

    p_q = sub.add_parser(
        "quartic", parents=[common], help="p = a^2 + b^2 via J(chi,chi)"
    )
    p_q.add_argument("--p", type=int, required=True)

    p_b = sub.add_parser(
        "binomial", parents=[common], help="Gauss binomial congruence"
    )
    p_b.add_argument("--p", type=int, required=True)

    p_mon = sub.add_parser("monoid", parents=[common], help="Hilbert monoids")
    p_mon.add_argument("--m", type=int, default=4)
    p_mon.add_argument("--subgroup", default="1", help="comma-separated residues")
    mon_sub = p_mon.add_subparsers(dest="action", required=True)
    mon_factor = mon_sub.add_parser("factor", parents=[common])
    mon_factor.add_argument("a", type=int)
    mon_sub.add_parser("classgroup", parents=[common])
    mon_def = mon_sub.add_parser("defined-at", parents=[common])
    mon_def.add_argument("p", type=int)
    mon_def.add_argument("a", type=int)
    mon_def.add_argument("b", type=int)
    mon_sub.add_parser("demo-singular", parents=[common])

    p_quad = sub.add_parser("quad", parents=[common], help="quadratic orders")
    p_quad.add_argument(
        "--theta", required=True, metavar="u,v", help="theta^2 + u theta + v = 0"
    )
    quad_sub = p_quad.add_subparsers(dest="action", required=True)
    quad_maps = quad_sub.add_parser("maps", parents=[common])
    quad_maps.add_argument("--p", type=int, required=True)
    quad_b2 = quad_sub.add_parser("check-b2", parents=[common])
    quad_b2.add_argument("--p", type=int, required=True)
    quad_b2.add_argument("numerator")
    quad_b2.add_argument("denominator")
    quad_sub.add_parser("conductor", parents=[common])
    quad_gl = quad_sub.add_parser("gauss-lemma", parents=[common])
    quad_gl.add_argument("poly", help="c1,c0 for T^2 + c1 T + c0")

    p_rep = sub.add_parser(
        "reproduce", parents=[common], help="run the full claim suite"
    )
    p_rep.add_argument("--filter", default=None, help="substring claim filter")

    return parser


def _map_report(phi, periods=None) -> dict:
    report = {
        "p": phi.p,
        "f": phi.f,
        "xi": phi.label(),
        "factor": list(phi.factor),
        "kernel_hnf": [list(r) for r in phi.kernel().rows],
    }
    if periods is not None:
        report["u_vector"] = list(phi.period_residues(periods))
    return report


def _find_map(lam: int, p: int, xi_text: str):
    parts = [int(c) for c in xi_text.split(",")]
    for phi in enumerate_jacobi_maps(lam, p):
        if phi.f == 1 and len(parts) == 1 and phi.xi.residue() == parts[0] % p:
            return phi
        if phi.f > 1 and list(phi.xi.coeffs) == parts:
            return phi
    raise UsageError(f"no Jacobi map with xi = {xi_text} for lambda={lam}, p={p}")


def _emit(args, command: str, result, failed: bool = False) -> int:
    if args.json:
        sys.stdout.write(render_json(command, result))
    else:
        sys.stdout.write(render_text(result))
    return EXIT_ASSERTION if failed else EXIT_OK


def _cmd_maps(args) -> int:
    periods = None
    if args.periods is not None:
        periods = gaussian_periods(args.lam, args.periods)
    maps = [
        _map_report(phi, periods) for phi in enumerate_jacobi_maps(args.lam, args.p)
    ]
    return _emit(args, "maps", {"lambda": args.lam, "p": args.p, "maps": maps})


def _cmd_factor(args) -> int:
    ring = cyclotomic_ring(args.lam)
    x = parse_element(args.expr, ring)
    fact = factorize(x, args.trial_div, max(2 * args.uniformizer_bound, 6))
    records = [
        {
            "p": r.map.p,
            "f": r.map.f,
            "xi": r.map.label(),
            "u": list(
                r.kummer.map.period_residues(r.kummer.periods)
            )
            if r.kummer
            else None,
            "psi": render_element(r.kummer.psi) if r.kummer else None,
            "mu": r.mu,
        }
        for r in fact.records
    ]
    result = {
        "element": render_element(x),
        "norm": fact.norm_value,
        "records": records,
        "remark": "the records determine the element up to a unit multiple",
    }
    return _emit(args, "factor", result)


def _cmd_valuation(args) -> int:
    ring = cyclotomic_ring(args.lam)
    x = parse_element(args.expr, ring)
    if x.is_zero():
        raise UsageError("valuation of 0 is infinite")
    phi = _find_map(args.lam, args.p, args.xi)
    K = find_uniformizer(phi, bound=args.uniformizer_bound)
    mu = multiplicity(x, K)
    oracle = valuation_oracle(x, phi)
    result = {
        "element": render_element(x),
        "p": args.p,
        "xi": phi.label(),
        "psi": render_element(K.psi),
        "mu": mu,
        "oracle": oracle,
        "agree": mu == oracle,
    }
    return _emit(args, "valuation", result, failed=mu != oracle)


def _cmd_divides(args) -> int:
    ring = cyclotomic_ring(args.lam)
    d = parse_element(args.divisor, ring)
    x = parse_element(args.element, ring)
    verdict = divides(d, x, args.trial_div)
    result = {
        "divisor": render_element(d),
        "element": render_element(x),
        "divides": verdict,
    }
    return _emit(args, "divides", result)


def _cmd_jacobi_sum(args) -> int:
    chi = charsum.character(args.p, args.order)
    j = charsum.jacobi_sum(chi, args.i, args.k)
    result = {
        "p": args.p,
        "order": args.order,
        "i": args.i,
        "k": args.k,
        "J": render_element(j),
        "psi": render_element(-j),
        "J_coeffs": list(j.coeffs),
    }
    degenerate = (
        args.i % args.order == 0
        or args.k % args.order == 0
        or (args.i + args.k) % args.order == 0
    )
    if not degenerate:
        product = j * conjugate(j, -1)
        result["reflection_product"] = render_element(product)
        result["reflection_holds"] = product == chi.ring.element(args.p)
        return _emit(args, "jacobi-sum", result, failed=not result["reflection_holds"])
    result["degenerate"] = True
    return _emit(args, "jacobi-sum", result)


def _cmd_gauss_sum(args) -> int:
    report = charsum.gauss_power_descent(args.order, args.p, args.i)
    ring = cyclotomic_ring(args.order)
    report["element_expr"] = render_element(ring.element(report["element"]))
    return _emit(args, "gauss-sum", report)


def _cmd_fc_check(args) -> int:
    if args.all:
        checks = []
        failed = False
        for i in range(1, args.p - 1):
            for k in range(1, args.p - 1):
                if i + k == args.p - 1:
                    continue
                rep = charsum.fundamental_congruence_check(args.p, i, k)
                failed = failed or not rep["holds"]
                checks.append(rep)
        result = {"p": args.p, "cases": len(checks), "all_hold": not failed}
        if failed:
            result["failures"] = [c for c in checks if not c["holds"]]
        return _emit(args, "fc-check", result, failed=failed)
    if args.i is None or args.k is None:
        raise UsageError("fc-check requires --all or both --i and --k")
    rep = charsum.fundamental_congruence_check(args.p, args.i, args.k)
    return _emit(args, "fc-check", rep, failed=not rep["holds"])


def _cmd_stickelberger(args) -> int:
    rep = charsum.stickelberger_check(
        args.lam, args.p, max(2 * args.uniformizer_bound, 6)
    )
    return _emit(args, "stickelberger", rep, failed=not rep["holds"])


def _cmd_quartic(args) -> int:
    rep = charsum.quartic_decomposition(args.p)
    return _emit(args, "quartic", rep, failed=not rep["congruence_holds"])


def _cmd_binomial(args) -> int:
    rep = charsum.binomial_congruence(args.p)
    return _emit(args, "binomial", rep, failed=not rep["congruence_holds"])


def _parse_monoid(args) -> monoid.HilbertMonoid:
    residues = [int(c) for c in args.subgroup.split(",") if c.strip()]
    return monoid.HilbertMonoid(args.m, residues)


def _cmd_monoid(args) -> int:
    if args.action == "demo-singular":
        rep = monoid.singular_monoid_report()
        return _emit(args, "monoid", rep, failed=not rep["holds"])
    M = _parse_monoid(args)
    if args.action == "factor":
        if args.a > args.enum_cap:
            raise UsageError(
                f"{args.a} exceeds --enum-cap {args.enum_cap} for exhaustive "
                f"factorization search"
            )
        factorizations = monoid.factor_into_irreducibles(
            M, args.a, all_factorizations=True
        )
        ideal = (
            [[pr.p, e] for pr, e in monoid.ideal_factorization(M, args.a)]
            if gcd(args.a, M.m) == 1
            else None
        )
        result = {
            "monoid": repr(M),
            "a": args.a,
            "irreducible_factorizations": [list(f) for f in factorizations],
            "ideal_factorization": ideal,
        }
        return _emit(args, "monoid", result)
    if args.action == "classgroup":
        return _emit(args, "monoid", monoid.class_group(M))
    if args.action == "defined-at":
        rep = monoid.defined_at(M, args.p, args.a, args.b)
        result = {
            "monoid": repr(M),
            "p": args.p,
            "fraction": f"{args.a}/{args.b}",
            **rep,
        }
        return _emit(args, "monoid", result)
    raise UsageError(f"unknown monoid action {args.action!r}")


def _cmd_quad(args) -> int:
    u, v = (int(c) for c in args.theta.split(","))
    order = quadorder.QuadOrder(u, v)
    if args.action == "maps":
        maps = [
            {
                "p": phi.p,
                "f": phi.f,
                "theta_image": phi.label(),
                "kernel_hnf": [list(r) for r in phi.kernel().rows],
            }
            for phi in quadorder.enumerate_quad_maps(order, args.p)
        ]
        return _emit(args, "quad", {"order": repr(order), "maps": maps})
    if args.action == "check-b2":
        num = parse_element(args.numerator, order)
        den = parse_element(args.denominator, order)
        reports = []
        for phi in quadorder.enumerate_quad_maps(order, args.p):
            rep = quadorder.dichotomy_check(order, phi, num, den)
            reports.append(
                {
                    "theta_image": phi.label(),
                    "at_fraction": rep["at_fraction"],
                    "at_inverse": rep["at_inverse"],
                    "dichotomy_holds": rep["at_fraction"] or rep["at_inverse"],
                }
            )
        result = {
            "order": repr(order),
            "fraction": f"({render_element(num)}) / ({render_element(den)})",
            "maps": reports,
        }
        return _emit(args, "quad", result)
    if args.action == "conductor":
        result = {
            "order": repr(order),
            "conductor": quadorder.conductor(order),
            "integrally_closed": quadorder.is_integrally_closed(order),
        }
        return _emit(args, "quad", result)
    if args.action == "gauss-lemma":
        left, right = args.poly.split(",", 1)
        b = parse_element(left, order)
        c = parse_element(right, order)
        rep = quadorder.gauss_lemma_check(order, b, c)
        rep["polynomial"] = (
            f"T^2 + ({render_element(b)}) T + ({render_element(c)})"
        )
        return _emit(args, "quad", rep)
    raise UsageError(f"unknown quad action {args.action!r}")


def _cmd_reproduce(args) -> int:
    cfg = Config(
        uniformizer_bound=args.uniformizer_bound,
        enum_cap=args.enum_cap,
        trial_division_bound=args.trial_div,
    )
    out, code = reproduce_all(cfg, args.filter, args.json)
    sys.stdout.write(out)
    return code


_DISPATCH = {
    "maps": _cmd_maps,
    "factor": _cmd_factor,
    "valuation": _cmd_valuation,
    "divides": _cmd_divides,
    "jacobi-sum": _cmd_jacobi_sum,
    "gauss-sum": _cmd_gauss_sum,
    "fc-check": _cmd_fc_check,
    "stickelberger": _cmd_stickelberger,
    "quartic": _cmd_quartic,
    "binomial": _cmd_binomial,
    "monoid": _cmd_monoid,
    "quad": _cmd_quad,
    "reproduce": _cmd_reproduce,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ElementParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UniformizerSearchError as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return EXIT_ASSERTION
    except ArithmeticError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return EXIT_ASSERTION


if __name__ == "__main__":
    sys.exit(main())
