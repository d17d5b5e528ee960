"""Command-line front end.

One invocation writes one structured document (JSON by default, CSV with
--format csv) to stdout; diagnostics go to stderr.  Exit codes: 0 success,
1 verification failure, 2 for input/domain/precision problems.  Output is
byte-identical across repeated invocations: fixed seeds, fixed key order,
floats at 17 significant digits.
"""

import argparse
import sys

from . import acceptance, landen, modulus, monodromy, products
from .elliptic import EllipticContext, cd, cn, dn, k_modulus, omega1, sn, sqrt_k
from .errors import (
    ChebdiskError,
    DenominatorNearZero,
    DomainError,
    NoCriticalValues,
    NotTransitiveError,
    NotTreeError,
    ParseError,
    PoleError,
    PrecisionError,
    RootFindingError,
    SingularSystemError,
    SizeLimitError,
)
from .jsonio import flatten_for_csv, render_csv, render_json
from .theta import DEFAULT_CONFIG, SeriesConfig, UpperHalfPoint, theta

_EXIT_OK = 0
_EXIT_VERIFY = 1
_EXIT_INPUT = 2


class CommandResult:
    def __init__(self, status, payload, exit_code):
        self.status = status
        self.payload = payload
        self.exit_code = exit_code


def parse_complex(text):
    """Complex literal as "re" or "re,im"."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ParseError(f"expected complex literal 're' or 're,im', got {text!r}")


def _cpx(value):
    return {"re": float(value.real), "im": float(value.imag)}


def _tau_from(args):
    if getattr(args, "tau", None) is not None:
        return UpperHalfPoint(parse_complex(args.tau))
    if getattr(args, "tau_im", None) is not None:
        return UpperHalfPoint(complex(0.0, args.tau_im))
    raise ParseError("one of --tau-im or --tau is required")


def _cfg_from(args):
    rel_tol = getattr(args, "tol", None)
    max_terms = getattr(args, "max_terms", None)
    if rel_tol is None and max_terms is None:
        return DEFAULT_CONFIG
    return SeriesConfig(
        rel_tol=rel_tol if rel_tol is not None else DEFAULT_CONFIG.rel_tol,
        max_index=max_terms if max_terms is not None else DEFAULT_CONFIG.max_index,
    )


def _add_tau_flags(p):
    p.add_argument("--tau-im", type=float, help="Im(tau) for tau on the imaginary axis")
    p.add_argument("--tau", help="complex tau as re,im")
    p.add_argument("--tol", type=float, help="series relative tolerance")
    p.add_argument("--max-terms", type=int, help="series index cap")


def _report_payload(rep):
    return {
        "identity_id": rep.identity_id,
        "tau_im": rep.tau.value.imag,
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "residual": rep.residual,
        "tolerance": rep.tolerance,
        "pass": rep.passed,
    }


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------

def _cmd_theta(args):
    tau = _tau_from(args)
    value = theta(args.j, parse_complex(args.v), tau, _cfg_from(args))
    payload = {"re": value.real, "im": value.imag}
    if tau.degraded:
        payload["degraded"] = True
    return payload, _EXIT_OK


def _cmd_elliptic(args):
    tau = _tau_from(args)
    ctx = EllipticContext(tau, _cfg_from(args))
    u = parse_complex(args.v)
    payload = {
        "tau_im": tau.value.imag,
        "u": _cpx(u),
        "omega1": omega1(ctx),
        "k": k_modulus(ctx),
        "sqrt_k": sqrt_k(ctx),
        "sn": sn(u, ctx),
        "cn": cn(u, ctx),
        "dn": dn(u, ctx),
        "cd": cd(u, ctx),
    }
    return payload, _EXIT_OK


def _cmd_cb_build(args):
    tau = _tau_from(args)
    cb = products.build(args.n, tau, _cfg_from(args))
    payload = {
        "n": cb.n,
        "tau_im": tau.value.imag,
        "parity": cb.parity,
        "b": list(cb.b),
        "S": list(cb.S),
        "record": products.serialize(cb),
    }
    return payload, _EXIT_OK


def _cmd_cb_eval(args):
    tau = _tau_from(args)
    cb = products.build(args.n, tau, _cfg_from(args))
    z = parse_complex(args.z)
    fz_product = products.eval_product(cb, z)
    fz_expanded = products.eval_expanded(cb, z)
    payload = {
        "n": cb.n,
        "tau_im": tau.value.imag,
        "z": _cpx(z),
        "product": fz_product,
        "expanded": fz_expanded,
        "agreement": abs(fz_product - fz_expanded),
    }
    return payload, _EXIT_OK


def _cmd_cb_coeffs(args):
    tau = _tau_from(args)
    cb = products.build(args.n, tau, _cfg_from(args))
    s_der = products.coefficients_from_derivatives(args.n, tau)
    residual = max(
        abs(a - b) / abs(a) for a, b in zip(cb.S, s_der)
    )
    payload = {
        "n": cb.n,
        "tau_im": tau.value.imag,
        "S": list(cb.S),
        "S_derivative_route": [float(x) for x in s_der],
        "cross_check_residual": residual,
    }
    return payload, _EXIT_OK


def _cmd_cb_derivs(args):
    tau = _tau_from(args)
    vals = products.derivatives_at_zero(args.n, tau, args.order, _cfg_from(args))
    payload = {
        "n": args.n,
        "tau_im": tau.value.imag,
        "orders": list(range(args.order + 1)),
        "values": [vals.get(i, 0j) for i in range(args.order + 1)],
    }
    return payload, _EXIT_OK


def _cmd_cb_critical(args):
    tau = _tau_from(args)
    cfg = _cfg_from(args)
    cb = products.build(args.n, tau, cfg)
    vals = products.critical_values(cb)
    ntau = tau.scaled(args.n)
    ref = (theta(2, 0.0, ntau, cfg) / theta(3, 0.0, ntau, cfg)).real
    payload = {
        "n": cb.n,
        "tau_im": tau.value.imag,
        "values": list(vals),
        "sqrt_k_ntau": ref,
    }
    return payload, _EXIT_OK


def _cmd_cb_modulus(args):
    tau = _tau_from(args)
    cb = products.build(args.n, tau, _cfg_from(args))
    payload = {
        "n": cb.n,
        "tau_im": tau.value.imag,
        "lambda": products.modulus_lambda(cb),
        "normalized_modulus": products.normalized_modulus(cb),
    }
    return payload, _EXIT_OK


def _cmd_cb_compose(args):
    tau = _tau_from(args)
    payload = products.compose_check(args.m, args.n, tau, _cfg_from(args))
    return payload, _EXIT_OK


def _parse_rep(sigma1_text, sigma2_text, n):
    s1 = monodromy.parse_permutation(sigma1_text, n)
    s2 = monodromy.parse_permutation(sigma2_text, n)
    size = max(s1.n, s2.n) if n is None else n
    if s1.n < size:
        s1 = monodromy.parse_permutation(sigma1_text, size)
    if s2.n < size:
        s2 = monodromy.parse_permutation(sigma2_text, size)
    return monodromy.MonodromyRep(size, s1, s2)


def _cmd_monodromy_analyze(args):
    rep = _parse_rep(args.sigma1, args.sigma2, args.n)
    transitive = monodromy.is_transitive(rep)
    payload = {
        "n": rep.n,
        "sigma1": rep.sigma1.to_cycle_string(),
        "sigma2": rep.sigma2.to_cycle_string(),
        "transitive": transitive,
        "c1": monodromy.cycle_count(rep.sigma1),
        "c2": monodromy.cycle_count(rep.sigma2),
        "c3": monodromy.face_cycles(rep),
    }
    if transitive:
        payload["euler_characteristic_disk"] = monodromy.euler_characteristic_disk(rep)
        payload["tree"] = monodromy.is_tree(rep)
        if payload["tree"]:
            stats = monodromy.dessin_stats(rep)
            payload["dessin"] = {"vertices": stats.vertices, "edges": stats.edges}
    return payload, _EXIT_OK


def _cmd_monodromy_equiv(args):
    rep1 = _parse_rep(args.sigma1, args.sigma2, args.n)
    rep2 = _parse_rep(args.other_sigma1, args.other_sigma2, args.n or rep1.n)
    payload = {
        "n": rep1.n,
        "equivalent": monodromy.are_equivalent(rep1, rep2),
    }
    return payload, _EXIT_OK


def _cmd_monodromy_chebyshev(args):
    rep = monodromy.chebyshev_monodromy(args.n)
    stats = monodromy.dessin_stats(rep)
    payload = {
        "n": rep.n,
        "sigma1": rep.sigma1.to_cycle_string(),
        "sigma2": rep.sigma2.to_cycle_string(),
        "tree": True,
        "dessin": {"vertices": stats.vertices, "edges": stats.edges},
    }
    return payload, _EXIT_OK


def _cmd_modulus_annulus(args):
    return {"r": args.r, "modulus": modulus.annulus_modulus(args.r)}, _EXIT_OK


def _cmd_modulus_grotzsch(args):
    return {"t": args.t, "modulus": modulus.grotzsch_modulus(args.t)}, _EXIT_OK


def _cmd_modulus_geodesic(args):
    a = parse_complex(args.a)
    b = parse_complex(args.b)
    seg = modulus.GeodesicSegment(a, b)
    payload = {
        "a": _cpx(a),
        "b": _cpx(b),
        "pseudo_hyperbolic_distance": modulus.pseudo_hyperbolic_distance(a, b),
        "poincare_distance": modulus.poincare_distance(a, b),
        "modulus": modulus.disk_minus_geodesic_modulus(seg),
    }
    return payload, _EXIT_OK


def _cmd_modulus_dessin_size(args):
    tau = _tau_from(args)
    cb = products.build(args.n, tau, _cfg_from(args))
    payload = {
        "n": args.n,
        "tau_im": tau.value.imag,
        "dessin_size": modulus.dessin_size(cb),
        "expected": tau.value.imag / 4.0,
    }
    return payload, _EXIT_OK


def _cmd_landen_verify(args):
    rep = landen.verify_identity(args.id, _tau_from(args), _cfg_from(args))
    return _report_payload(rep), _EXIT_OK if rep.passed else _EXIT_VERIFY


def _cmd_landen_limit(args):
    rep = landen.trig_limit(args.id, args.y_large, _cfg_from(args))
    return _report_payload(rep), _EXIT_OK if rep.passed else _EXIT_VERIFY


def _cmd_landen_all(args):
    cfg = _cfg_from(args)
    records = [_report_payload(r) for r in landen.run_catalog(cfg=cfg)]
    records += [_report_payload(r) for r in landen.run_trig_limits(cfg=cfg)]
    ok = all(r["pass"] for r in records)
    payload = {"records": records, "all_passed": ok}
    return payload, _EXIT_OK if ok else _EXIT_VERIFY


def _cmd_verify_all(args):
    results = acceptance.run_all(seed=args.seed)
    records = [
        {
            "criterion": r.number,
            "name": r.name,
            "pass": r.passed,
            "worst": r.worst,
            "tolerance": r.tolerance,
            "detail": r.detail,
        }
        for r in results
    ]
    ok = all(r.passed for r in results)
    for r in results:
        print(r.line(), file=sys.stderr)
    payload = {"records": records, "all_passed": ok}
    return payload, _EXIT_OK if ok else _EXIT_VERIFY


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="chebdisk",
        description="Chebyshev-Blaschke products, theta kernels, dessin moduli",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="evaluate a Jacobi theta function")
    p.add_argument("--j", type=int, required=True, choices=(0, 1, 2, 3))
    p.add_argument("--v", default="0", help="argument as re or re,im")
    _add_tau_flags(p)
    p.set_defaults(handler=_cmd_theta)

    p = sub.add_parser("elliptic", help="sn/cn/dn/cd and derived quantities")
    p.add_argument("--v", default="0", help="elliptic argument u as re or re,im")
    _add_tau_flags(p)
    p.set_defaults(handler=_cmd_elliptic)

    cb = sub.add_parser("cb", help="Chebyshev-Blaschke products").add_subparsers(
        dest="cb_command", required=True
    )
    for name, handler, extra in (
        ("build", _cmd_cb_build, ()),
        ("eval", _cmd_cb_eval, ("z",)),
        ("coeffs", _cmd_cb_coeffs, ()),
        ("derivs", _cmd_cb_derivs, ("order",)),
        ("critical", _cmd_cb_critical, ()),
        ("modulus", _cmd_cb_modulus, ()),
        ("compose", _cmd_cb_compose, ("m",)),
    ):
        p = cb.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        if "m" in extra:
            p.add_argument("--m", type=int, required=True)
        if "z" in extra:
            p.add_argument("--z", required=True, help="evaluation point re,im")
        if "order" in extra:
            p.add_argument("--order", type=int, default=5)
        _add_tau_flags(p)
        p.set_defaults(handler=handler)

    mono = sub.add_parser("monodromy", help="permutation-pair analysis").add_subparsers(
        dest="monodromy_command", required=True
    )
    p = mono.add_parser("analyze")
    p.add_argument("--sigma1", required=True, help='cycles "(1 2)(3 4)" or one-line "2 1 4 3"')
    p.add_argument("--sigma2", required=True)
    p.add_argument("--n", type=int, help="degree (default: largest point mentioned)")
    p.set_defaults(handler=_cmd_monodromy_analyze)
    p = mono.add_parser("equiv")
    p.add_argument("--sigma1", required=True)
    p.add_argument("--sigma2", required=True)
    p.add_argument("--other-sigma1", required=True)
    p.add_argument("--other-sigma2", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(handler=_cmd_monodromy_equiv)
    p = mono.add_parser("chebyshev")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_monodromy_chebyshev)

    mod = sub.add_parser("modulus", help="conformal moduli").add_subparsers(
        dest="modulus_command", required=True
    )
    p = mod.add_parser("annulus")
    p.add_argument("--r", type=float, required=True)
    p.set_defaults(handler=_cmd_modulus_annulus)
    p = mod.add_parser("grotzsch")
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(handler=_cmd_modulus_grotzsch)
    p = mod.add_parser("geodesic")
    p.add_argument("--a", required=True, help="endpoint re,im")
    p.add_argument("--b", required=True, help="endpoint re,im")
    p.set_defaults(handler=_cmd_modulus_geodesic)
    p = mod.add_parser("dessin-size")
    p.add_argument("--n", type=int, required=True)
    _add_tau_flags(p)
    p.set_defaults(handler=_cmd_modulus_dessin_size)

    lan = sub.add_parser("landen", help="Landen-type identity checks").add_subparsers(
        dest="landen_command", required=True
    )
    p = lan.add_parser("verify")
    p.add_argument("--id", required=True, choices=sorted(landen.CATALOG))
    _add_tau_flags(p)
    p.set_defaults(handler=_cmd_landen_verify)
    p = lan.add_parser("limit")
    p.add_argument("--id", required=True, choices=sorted(landen.CATALOG))
    p.add_argument("--y-large", type=float, default=30.0)
    _add_tau_flags(p)
    p.set_defaults(handler=_cmd_landen_limit)
    p = lan.add_parser("all")
    _add_tau_flags(p)
    p.set_defaults(handler=_cmd_landen_all)

    p = sub.add_parser("verify-all", help="run the acceptance criteria")
    p.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p.set_defaults(handler=_cmd_verify_all)

    return parser


_STATUS_BY_ERROR = (
    (ParseError, "parse_error", _EXIT_INPUT),
    (PrecisionError, "precision_error", _EXIT_INPUT),
    (
        (
            DomainError,
            PoleError,
            SingularSystemError,
            NoCriticalValues,
            RootFindingError,
            NotTransitiveError,
            NotTreeError,
            SizeLimitError,
            DenominatorNearZero,
        ),
        "domain_error",
        _EXIT_INPUT,
    ),
)


def run(argv):
    """Execute one invocation; returns a CommandResult without printing."""
    argv = list(argv)
    # `landen --id ... --tau-im ...` sugar for `landen verify ...`
    if argv and argv[0] == "landen" and len(argv) > 1 and argv[1].startswith("--"):
        argv.insert(1, "verify")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, exit_code = args.handler(args)
    except ChebdiskError as exc:
        for types, status, code in _STATUS_BY_ERROR:
            if isinstance(exc, types):
                return CommandResult(status, {"error": str(exc)}, code)
        return CommandResult("domain_error", {"error": str(exc)}, _EXIT_INPUT)
    status = "ok" if exit_code == _EXIT_OK else "verification_failure"
    return CommandResult(status, payload, exit_code)


def render(result, fmt):
    document = {"status": result.status, "payload": result.payload}
    if fmt == "csv":
        header, rows = flatten_for_csv(
            result.payload if isinstance(result.payload, dict) else {"value": result.payload}
        )
        return render_csv(["status"] + list(header), [[result.status] + row for row in rows])
    return render_json(document) + "\n"


def main(argv=None):
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    fmt = "json"
    if "--format" in argv:
        idx = argv.index("--format")
        if idx + 1 < len(argv):
            fmt = argv[idx + 1]
            del argv[idx : idx + 2]
    result = run(argv)
    sys.stdout.write(render(result, fmt))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
