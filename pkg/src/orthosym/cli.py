"""Command-line front end.  Every subcommand prints one JSON document.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import oracle
from .bases import (
    charlier_degeneration,
    eps_limit_certificate,
    family_name,
    operator_matrix,
    ortho_function,
)
from .errors import DegenerateNormalization, DegreeOverflow, DomainError, ParameterError
from .measures import level_sum_closed_form, norm_closed_form, orthogonality_check, phi, thm5_moment_limit, zmeasure_table
from .partitions import parse as parse_partition
from .scalars import ParamPoint, format_rational, rational
from .sym import DEFAULT_DEGREE_CAP, SymElement, convert
from .verify import SUITES, Context, run_suite

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from exc


def _eps_arg(text: str) -> tuple[str, ...]:
    items = tuple(t.strip() for t in text.split(",") if t.strip())
    for t in items:
        _rational_arg(t)
    return items


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_params(p: argparse.ArgumentParser):
    g = p.add_argument_group("parameters")
    for flag in ("--z", "--zp", "--s", "--v", "--xi", "--theta", "--b"):
        g.add_argument(flag, type=_rational_arg)
    g.add_argument("--N", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orthosym", description="Exact symmetric-function orthogonal bases and z-measures.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _add_params(p)
        p.add_argument("--cap", type=int)
        p.add_argument("--float", action="store_true", help="print numbers as floats")
        p.add_argument("--out", help="write JSON here instead of stdout")
        return p

    p = add("expand", "expand a basis element in Schur (or another) basis")
    p.add_argument("--family", default="schur", help="schur, fs, laguerre, meixner, charlier")
    p.add_argument("--nu", type=_partition_arg, default="")
    p.add_argument("--basis", default=None, help="output basis (default: schur)")

    p = add("operator", "matrix of D on the native basis up to degree --cap")
    p.add_argument("--family", required=True)

    p = add("functional", "phi(F_nu) or phi(F_mu F_nu) with its closed form")
    p.add_argument("--family", required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg)

    add("measure", "relative z-measure weights on diagrams of size <= --cap")

    p = add("verify", "run a named verification suite")
    p.add_argument("--suite")
    p.add_argument("--list", action="store_true")
    p.add_argument("--seed", type=int, default=2026)
    p.add_argument("--horizon", type=float, default=50.0)
    p.add_argument("--burn-in", type=float, default=10.0)
    p.add_argument("--trajectories", type=int, default=10_000)
    p.add_argument("--eps", type=_eps_arg)

    p = add("oracle", "classical and N-variate checks")
    p.add_argument("--check", required=True, choices=["uni", "norm", "nvariate", "expansion", "specialization", "inner-product", "scaling"])
    p.add_argument("--family", default="laguerre")
    p.add_argument("--nu", type=_partition_arg, default="")
    p.add_argument("--mu", type=_partition_arg)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--eps", type=_eps_arg)

    p = add("sample", "simulate the jump process; JSON lines output")
    p.add_argument("--nu", type=_partition_arg, default="", help="start diagram")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--horizon", type=float, default=10.0)
    p.add_argument("--trajectories", type=int, default=1)

    p = add("limits", "eps-scaling, moment limit and Charlier degeneration diagnostics")
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.add_argument("--eps", type=_eps_arg)
    return parser


def params_from(args, required: bool = False) -> ParamPoint | None:
    z, zp, s, v = args.z, args.zp, args.s, args.v
    if (z is None) != (zp is None):
        raise UsageError("--z and --zp must be given together")
    if (s is None) != (v is None):
        raise UsageError("--s and --v must be given together")
    if z is not None and s is not None:
        raise UsageError("give either --z/--zp or --s/--v")
    if z is not None:
        p = ParamPoint.split(z, zp, xi=args.xi, theta=args.theta)
    elif s is not None:
        p = ParamPoint.symmetric(s, v, xi=args.xi, theta=args.theta)
    elif args.b is not None and args.N is not None:
        p = ParamPoint.degenerate(args.N, args.b, xi=args.xi)
        if args.theta is not None:
            p = ParamPoint.split(p.z, p.zp, xi=p.xi, theta=args.theta)
    elif args.theta is not None:
        p = ParamPoint.charlier(args.theta)
    elif args.xi is not None:
        raise UsageError("--xi needs --z/--zp, --s/--v or --b/--N")
    else:
        p = None
    if p is None and required:
        raise UsageError("parameters are required (--z/--zp, --s/--v, --b/--N or --theta)")
    return p


def _family_params(family: str, p: ParamPoint | None) -> ParamPoint:
    if p is None:
        raise UsageError("parameters are required for this family")
    if family == "charlier":
        if p.theta is None:
            raise UsageError("charlier needs --theta")
        return ParamPoint.charlier(p.theta)
    return p


def _cap(args, default=DEFAULT_DEGREE_CAP) -> int:
    return default if args.cap is None else args.cap


def cmd_expand(args) -> tuple[dict, int]:
    if args.cap is not None and args.cap < args.nu.size:
        raise DegreeOverflow(f"|nu| = {args.nu.size} exceeds --cap {args.cap}")
    cap = max(_cap(args), args.nu.size)
    family = args.family.lower()
    if family in ("schur", "fs", "e", "h", "p"):
        f = SymElement.basis_element(family, args.nu, cap)
    else:
        family = family_name(family)
        f = ortho_function(family, args.nu, _family_params(family, params_from(args)), cap).in_schur
    return convert(f, args.basis or "schur").to_json(), 0


def cmd_operator(args) -> tuple[dict, int]:
    family = family_name(args.family)
    p = _family_params(family, params_from(args, required=True))
    return operator_matrix(family, p, _cap(args, 4)).to_json(), 0


def cmd_functional(args) -> tuple[dict, int]:
    family = family_name(args.family)
    p = _family_params(family, params_from(args, required=True))
    if args.mu is None:
        f = ortho_function(family, args.nu, p, max(8, args.nu.size)).in_schur
        value = phi(family, f, p)
        want = Fraction(1) if args.nu.size == 0 else Fraction(0)
        out = {"family": family, "nu": list(args.nu), "value": format_rational(value), "expected": format_rational(want)}
    else:
        value = orthogonality_check(family, args.mu, args.nu, p)
        want = norm_closed_form(family, args.nu, p) if args.mu == args.nu else Fraction(0)
        out = {
            "family": family,
            "mu": list(args.mu),
            "nu": list(args.nu),
            "value": format_rational(value),
            "expected": format_rational(want),
        }
    out["params"] = p.to_json()
    out["equal"] = value == want
    return out, 0 if value == want else 1


def cmd_measure(args) -> tuple[dict, int]:
    p = params_from(args, required=True)
    L = _cap(args, 6)
    table = zmeasure_table(p, L)
    out = table.to_json(as_float=args.float)
    if p.s is not None:
        out["level_sums"] = [
            {"n": n, "sum": format_rational(table.level_sum(n)), "closed_form": format_rational(level_sum_closed_form(p, n))}
            for n in range(L + 1)
        ]
    out["p_empty"] = table.normalizer()
    return out, 0


def cmd_verify(args) -> tuple[dict, int]:
    if args.list:
        return {"suites": [{"name": k, "description": d} for k, (_, d) in SUITES.items()]}, 0
    if not args.suite:
        raise UsageError("--suite or --list is required")
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; see --list")
    ctx = Context(
        params=params_from(args),
        cap=args.cap,
        seed=args.seed,
        horizon=args.horizon,
        burn_in=args.burn_in,
        trajectories=args.trajectories,
    )
    if args.eps:
        ctx.eps = args.eps
    res = run_suite(args.suite, ctx)
    return res.to_json(), 0 if res.ok else 1


def _poly_json(f: oracle.NVarPoly) -> dict:
    return {
        "N": f.N,
        "terms": [{"exponent": list(k), "coeff": format_rational(c)} for k, c in sorted(f.terms.items(), reverse=True)],
    }


def _uni_params(args) -> ParamPoint:
    if args.theta is not None and args.b is None:
        return ParamPoint.charlier(args.theta)
    if args.b is None:
        raise UsageError("--b is required")
    N = args.N or 1
    p = ParamPoint.degenerate(N, args.b, xi=args.xi)
    if args.theta is not None:
        p = ParamPoint.split(p.z, p.zp, xi=p.xi, theta=args.theta)
    return p


def cmd_oracle(args) -> tuple[dict, int]:
    check = args.check
    family = args.family.lower()
    if check == "uni":
        p = _uni_params(args) if family not in ("monomial", "falling") else None
        f = oracle.uni(family, args.n, p)
        return {"family": family, "n": args.n, "coeffs": [format_rational(c) for c in f.coeffs]}, 0
    if check == "norm":
        closed, moment = oracle.uni_norm(family, args.n, _uni_params(args))
        ok = closed == moment
        return {"family": family, "n": args.n, "closed_form": format_rational(closed), "moments": format_rational(moment), "equal": ok}, 0 if ok else 1
    if check == "scaling":
        cert = oracle.uni_scaling_limit_check(args.n, _uni_params(args).b, args.eps or ("1/10", "1/100", "1/1000"))
        return cert, 0 if cert["divisible"] else 1
    N = args.N or 2
    if check == "nvariate":
        p = None if family in ("schur", "factorial") else _uni_params(args)
        return {"family": family, "nu": list(args.nu), **_poly_json(oracle.nvariate(family, args.nu, N, p))}, 0
    p = _uni_params(args)
    p = ParamPoint.degenerate(N, p.b, xi=p.xi)
    if check == "expansion":
        ok, info = oracle.expansion_check(family, args.nu, N, p)
        return {"family": family, "nu": list(args.nu), "N": N, "equal": ok, **info}, 0 if ok else 1
    if check == "specialization":
        out = oracle.specialization_check(args.nu, N, p)
        return out, 0 if out["ok"] else 1
    mu = args.nu if args.mu is None else args.mu
    f, g = oracle.nvariate(family, mu, N, p), oracle.nvariate(family, args.nu, N, p)
    got = oracle.nvariate_inner_product(family, f, g, N, p)
    want = oracle.nvariate_norm_closed(family, args.nu, N, p) if mu == args.nu else Fraction(0)
    out = {"family": family, "mu": list(mu), "nu": list(args.nu), "N": N, "value": format_rational(got), "closed_form": format_rational(want), "equal": got == want}
    return out, 0 if got == want else 1


def cmd_sample(args) -> tuple[str, int]:
    from .dynamics import DEFAULT_SIZE_CAP, simulate_many

    p = params_from(args, required=True)
    lines = []
    trajs = simulate_many(args.nu, args.horizon, p, args.seed, args.trajectories, _cap(args, DEFAULT_SIZE_CAP))
    for i, traj in enumerate(trajs):
        for t, lam in traj.states:
            rec = {"t": t, "lambda": list(lam)}
            if args.trajectories > 1:
                rec = {"trajectory": i, **rec}
            lines.append(json.dumps(rec))
        if traj.cap_hit:
            lines.append(json.dumps({"trajectory": i, "cap_hit": True}))
    return "\n".join(lines) + "\n", 0


def cmd_limits(args) -> tuple[dict, int]:
    p = params_from(args, required=True)
    eps = args.eps or ("1/10", "1/100", "1/1000")
    out: dict = {"nu": list(args.nu), "params": p.to_json()}
    ok = True
    if p.s is not None:
        cert = eps_limit_certificate(args.nu, p, eps)
        out["eps_certificate"] = cert
        ok &= cert["divisible"]
        la = phi("laguerre", SymElement.basis_element("schur", args.nu, max(8, args.nu.size)), p)
        moments = thm5_moment_limit(args.nu, eps, p)
        out["moment_limit"] = [
            {"eps": e, "value": format_rational(m), "ratio": format_rational(m / la) if la else None} for e, m in zip(eps, moments)
        ]
    if p.theta is not None:
        devs = charlier_degeneration(args.nu, p.theta)
        out["charlier_degeneration"] = {"n": [10, 100, 1000], "max_deviation": [format_rational(d) for d in devs]}
    return out, 0 if ok else 1


COMMANDS = {
    "expand": cmd_expand,
    "operator": cmd_operator,
    "functional": cmd_functional,
    "measure": cmd_measure,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "sample": cmd_sample,
    "limits": cmd_limits,
}


def floatify(x):
    """Turn exact rational strings into floats, leaving everything else alone."""
    if isinstance(x, str) and _RATIONAL.match(x):
        return float(Fraction(x))
    if isinstance(x, dict):
        return {k: floatify(v) for k, v in x.items()}
    if isinstance(x, list):
        return [floatify(v) for v in x]
    return x


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        payload, code = COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(json.dumps({"error": "usage", "message": str(exc)}) + "\n")
        return 2
    except (DomainError, ParameterError, DegreeOverflow, DegenerateNormalization, ValueError, TypeError, KeyError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2
    if isinstance(payload, str):
        text = payload
    else:
        if args.float:
            payload = floatify(payload)
        text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
