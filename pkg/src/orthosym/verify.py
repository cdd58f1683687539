"""Named verification suites.

Each suite maps to one block of checkable claims and returns a
``SuiteResult``.  Exact suites compare Fractions; only ``stationarity`` is
statistical.  ``Context`` carries optional overrides from the command line;
when a field is left unset the suite uses its built-in parameter points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import oracle
from .bases import (
    apply_diffop_laguerre,
    apply_operator,
    autoduality_check,
    autoduality_formula,
    charlier,
    charlier_degeneration,
    eps_limit_certificate,
    laguerre,
    meixner,
    ortho_function,
)
from .fs import fs_in_schur, fs_value
from .measures import (
    certify_orthogonality,
    coherency_check,
    detailed_balance_defects,
    eq33_level,
    gram_defects,
    level_sum_closed_form,
    norm_closed_form,
    phi,
    rates,
    thm5_moment_limit,
    zmeasure_table,
)
from .partitions import Partition, partitions_up_to, partitions_with_length, transpose
from .scalars import ParamPoint, format_rational
from .sym import (
    S,
    ThomaPoint,
    convert,
    evaluate_at_thoma,
    generator_in_p,
    lr_via_p,
    multiply,
    schur_to_eh,
    schur_to_p,
    sigma,
    monomial_to_p_newton,
)

LA_POINTS = (
    ParamPoint.split("5/2", "11/4"),
    ParamPoint.split("1/3", "-2/5"),
    ParamPoint.symmetric(1, 3),
)
ME_POINTS = (
    ParamPoint.split("5/2", "11/4", xi="1/2"),
    ParamPoint.split("1/3", "7/5", xi="1/3"),
    ParamPoint.symmetric(1, 3, xi="2/7"),
)
THETAS = (Fraction(1), Fraction(5, 2), Fraction(1, 7))
B_XI_POINTS = ((Fraction(3), Fraction(1, 3)), (Fraction(1, 2), Fraction(1, 2)), (Fraction(7, 3), Fraction(3, 4)))
EPS = ("1/10", "1/100", "1/1000")
MAX_FAILURES = 20


@dataclass
class Context:
    params: ParamPoint | None = None
    cap: int | None = None
    seed: int = 2026
    horizon: float = 50.0
    burn_in: float = 10.0
    trajectories: int = 10_000
    eps: tuple[str, ...] = EPS


@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, **info):
        self.checks += 1
        if not condition and len(self.failures) < MAX_FAILURES:
            self.failures.append(_jsonable(info))
        elif not condition:
            self.details["truncated_failures"] = self.details.get("truncated_failures", 0) + 1

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checks": self.checks,
            "failures": self.failures,
            "details": _jsonable(self.details),
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Partition):
        return list(x)
    if isinstance(x, ParamPoint):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _family_points(ctx: Context, family: str):
    p = ctx.params
    if family == "charlier":
        if p is not None and p.theta is not None:
            return (ParamPoint.charlier(p.theta),)
        return tuple(ParamPoint.charlier(t) for t in THETAS)
    if p is not None and p.s is not None:
        if family == "laguerre":
            return (p,)
        if p.xi is not None:
            return (p,)
    return LA_POINTS if family == "laguerre" else ME_POINTS


def _labels(n: int):
    return partitions_up_to(n)


# ------------------------------------------------------------------ suites


def suite_eigen(ctx: Context) -> SuiteResult:
    res = SuiteResult("eigen")
    n = ctx.cap or 6
    for family in ("laguerre", "meixner", "charlier"):
        for p in _family_points(ctx, family):
            for nu in _labels(n):
                f = ortho_function(family, nu, p, max(8, n)).in_native
                res.check(apply_operator(family, p, f) == -nu.size * f, family=family, params=p, nu=nu)
    return res


def suite_orthogonality(ctx: Context) -> SuiteResult:
    res = SuiteResult("orthogonality")
    if ctx.params is not None:
        n = ctx.cap or 4
        for family in ("laguerre", "meixner", "charlier"):
            p = ctx.params
            if family == "meixner" and (p.s is None or p.xi is None):
                continue
            if family == "laguerre" and p.s is None:
                continue
            if family == "charlier" and p.theta is None:
                continue
            bad = gram_defects(family, ParamPoint.charlier(p.theta) if family == "charlier" else p, n)
            res.checks += len(_labels(n)) ** 2
            for mu, nu, diff in bad[:MAX_FAILURES]:
                res.failures.append(_jsonable({"family": family, "mu": mu, "nu": nu, "diff": diff}))
        return res
    n = ctx.cap or 4
    for family in ("laguerre", "meixner"):
        cert = certify_orthogonality(family, n)
        res.checks += cert["points"]
        res.details[family] = {"points": cert["points"], "degree_bound": cert["degree_bound"]}
        res.failures.extend(cert["failures"][:MAX_FAILURES])
    m = max(n, 5)
    thetas = [Fraction(k + 1, 3) for k in range(4 * m + 1)]
    cert = certify_orthogonality("charlier", m, theta_values=thetas)
    res.checks += cert["points"]
    res.details["charlier"] = {"points": cert["points"], "n": m}
    res.failures.extend(cert["failures"][:MAX_FAILURES])
    return res


def suite_forms(ctx: Context) -> SuiteResult:
    res = SuiteResult("forms")
    n = ctx.cap or 6
    for p in _family_points(ctx, "laguerre"):
        for nu in _labels(n):
            f = S(*nu, degree_cap=max(8, n))
            target = convert(apply_operator("laguerre", p, f), "schur")
            for form in ("e", "h", "p"):
                got = convert(apply_diffop_laguerre(convert(f, form), p, form), "schur")
                res.check(got == target, form=form, params=p, nu=nu)
    return res


def _b_xi_points(ctx: Context):
    p = ctx.params
    if p is not None and p.z is not None and p.xi is not None:
        return ((p.b, p.xi),)
    return B_XI_POINTS


def suite_specialization(ctx: Context) -> SuiteResult:
    res = SuiteResult("specialization")
    n = ctx.cap or 4
    for b, xi in _b_xi_points(ctx):
        for N in (1, 2, 3):
            q = ParamPoint.degenerate(N, b, xi=xi)
            for nu in _labels(n):
                out = oracle.specialization_check(nu, N, q)
                res.check(out["ok"], b=b, xi=xi, N=N, nu=nu, report=out)
    return res


def suite_nvariate_orthogonality(ctx: Context) -> SuiteResult:
    res = SuiteResult("nvariate-orthogonality")
    n = ctx.cap or 3
    for b, xi in _b_xi_points(ctx):
        for N in (1, 2, 3):
            q = ParamPoint.degenerate(N, b, xi=xi)
            one = oracle.NVarPoly.constant(N, 1)
            for family in ("laguerre", "meixner"):
                res.check(oracle.nvariate_inner_product(family, one, one, N, q) == 1, family=family, N=N, claim="(1,1)=1")
                labels = [nu for nu in _labels(n) if len(nu) <= N]
                polys = {nu: oracle.nvariate(family, nu, N, q) for nu in labels}
                for i, mu in enumerate(labels):
                    for nu in labels[i:]:
                        got = oracle.nvariate_inner_product(family, polys[mu], polys[nu], N, q)
                        want = oracle.nvariate_norm_closed(family, nu, N, q) if mu == nu else 0
                        res.check(got == want, family=family, b=b, xi=xi, N=N, mu=mu, nu=nu, got=got, want=want)
    return res


def suite_univariate(ctx: Context) -> SuiteResult:
    res = SuiteResult("univariate")
    n_max = ctx.cap or 8
    for b, xi in _b_xi_points(ctx):
        p = ParamPoint.degenerate(1, b, xi=xi)
        for family in ("laguerre", "meixner"):
            for n in range(n_max + 1):
                closed, moment = oracle.uni_norm(family, n, p)
                res.check(closed == moment, family=family, b=b, xi=xi, n=n, closed=closed, moment=moment)
                f = oracle.uni(family, n, p)
                res.check(oracle.uni_operator_apply(family, f, p) == -n * f, family=family, n=n, claim="eigen")
        for n in range(n_max + 1):
            cert = oracle.uni_scaling_limit_check(n, b, ctx.eps)
            res.check(cert["divisible"], b=b, n=n, certificate=cert)
    for theta in THETAS:
        p = ParamPoint.charlier(theta)
        for n in range(n_max + 1):
            closed, moment = oracle.uni_norm("charlier", n, p)
            res.check(closed == moment, family="charlier", theta=theta, n=n)
    return res


def suite_zmeasure(ctx: Context) -> SuiteResult:
    res = SuiteResult("zmeasure")
    n = ctx.cap or 4
    for p in _family_points(ctx, "meixner"):
        table = zmeasure_table(p, 8)
        for level in range(9):
            res.check(table.level_sum(level) == level_sum_closed_form(p, level), params=p, level=level, claim="level sum")
        for nu in _labels(n):
            for l in range(nu.size, 7):
                lhs, rhs = coherency_check(nu, l, p)
                res.check(lhs == rhs, params=p, nu=nu, l=l, claim="coherency")
                lhs, rhs = eq33_level(nu, l, p)
                res.check(lhs == rhs, params=p, nu=nu, l=l, claim="per-level expectation")
        for d in detailed_balance_defects(p, 7):
            res.check(False, params=p, claim="detailed balance", **d)
        res.checks += 1
        for lam in partitions_up_to(6):
            res.check(rates(lam, p).balance() == 0, params=p, lam=lam, claim="Kerov identity")
    return res


def suite_autoduality(ctx: Context) -> SuiteResult:
    res = SuiteResult("autoduality")
    n = ctx.cap or 4
    for p in _family_points(ctx, "meixner"):
        labels = _labels(n)
        for i, nu in enumerate(labels):
            for lam in labels[i:]:
                a, b = autoduality_check(nu, lam, p)
                res.check(a == b, params=p, nu=nu, lam=lam, left=a, right=b)
                res.check(a == autoduality_formula(nu, lam, p), params=p, nu=nu, lam=lam, claim="double sum")
    return res


def suite_limits(ctx: Context) -> SuiteResult:
    res = SuiteResult("limits")
    n = ctx.cap or 4
    for p in _family_points(ctx, "laguerre"):
        for nu in _labels(n):
            cert = eps_limit_certificate(nu, p, ctx.eps)
            res.check(cert["divisible"], params=p, nu=nu, claim="eps divisibility", certificate=cert)
            ratios = thm5_moment_limit(nu, ctx.eps, p)
            la = phi("laguerre", S(*nu), p)
            for eps, val in zip(ctx.eps, ratios):
                e = Fraction(eps)
                if la != 0:
                    res.check(val / la == (1 - e) ** nu.size, params=p, nu=nu, eps=e, claim="moment ratio")
                else:
                    res.check(val == 0, params=p, nu=nu, eps=e, claim="moment ratio")
    for theta in THETAS:
        for nu in _labels(n):
            devs = charlier_degeneration(nu, theta)
            shrinking = all(a >= b for a, b in zip(devs, devs[1:])) and (devs[-1] < devs[0] or devs[0] == 0)
            res.check(shrinking, theta=theta, nu=nu, deviations=devs)
    return res


def random_thoma_point(rng: random.Random) -> ThomaPoint:
    k, m = rng.randint(0, 3), rng.randint(0, 3)
    alpha = sorted((Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(k)), reverse=True)
    beta = sorted((Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(m)), reverse=True)
    gamma = Fraction(rng.randint(0, 9), rng.randint(1, 9))
    return ThomaPoint(tuple(alpha), tuple(beta), sum(alpha) + sum(beta) + gamma)


def suite_thoma(ctx: Context) -> SuiteResult:
    res = SuiteResult("thoma")
    n = ctx.cap or 5
    rng = random.Random(ctx.seed)
    schur = {nu: convert(S(*nu), "p") for nu in _labels(n)}
    for _ in range(100):
        w = random_thoma_point(rng)
        for nu, f in schur.items():
            val = evaluate_at_thoma(f, w)
            res.check(val >= 0, nu=nu, alpha=w.alpha, beta=w.beta, r=w.r, value=val)
    return res


def suite_stationarity(ctx: Context) -> SuiteResult:
    from .dynamics import stationarity_run

    res = SuiteResult("stationarity")
    p = ctx.params if ctx.params is not None else ParamPoint.split(2, 3, xi="1/2")
    report = stationarity_run(p, ctx.trajectories, ctx.horizon, ctx.burn_in, ctx.seed, L=ctx.cap or 12)
    res.details = report.to_json()
    res.check(report.ok, error=report.error)
    res.check(report.tv is not None and report.tv < 0.03, tv=report.tv, threshold=0.03)
    res.check(report.size_tv is not None and report.size_tv < 0.02, size_tv=report.size_tv, threshold=0.02)
    return res


def suite_nvariate_operators(ctx: Context) -> SuiteResult:
    res = SuiteResult("nvariate-operators")
    for b, xi in _b_xi_points(ctx):
        q2 = ParamPoint.degenerate(2, b, xi=xi)
        for nu in _labels(3):
            if len(nu) <= 2:
                res.check(oracle.difference_eigen_check(nu, 2, q2), b=b, xi=xi, nu=nu, claim="difference eigenrelation")
        for N in (1, 2, 3):
            q = ParamPoint.degenerate(N, b, xi=xi)
            for nu in _labels(ctx.cap or 4):
                if len(nu) > N:
                    continue
                for family in ("laguerre", "meixner"):
                    res.check(oracle.schur_action_check(family, nu, N, q), family=family, N=N, nu=nu, claim="row lowering")
                    res.check(oracle.sym_operator_check(family, nu, N, q), family=family, N=N, nu=nu, claim="Sym operator")
            for lam in partitions_up_to(6):
                if len(lam) <= N:
                    res.check(oracle.restricted_rates_check(lam, N, q), N=N, lam=lam, claim="restricted rates")
    for N in (1, 2, 3, 4):
        for lam in partitions_up_to(6):
            if len(lam) <= N:
                a, c = oracle.frobenius_dimension_check(lam, N)
                res.check(a == c, N=N, lam=lam, claim="dimension formula")
    return res


def suite_sym(ctx: Context) -> SuiteResult:
    res = SuiteResult("sym")
    n = ctx.cap or 6
    for a in range(n + 1):
        for mu in partitions_up_to(a):
            for nu in partitions_up_to(n - mu.size):
                if mu.size == a:
                    got = multiply(S(*mu), S(*nu))
                    res.check(got == lr_via_p(mu, nu), mu=mu, nu=nu, claim="LR vs power sums")
    for nu in _labels(n):
        sp = schur_to_p(nu)
        for which in ("e", "h"):
            res.check(monomial_to_p_newton(schur_to_eh(nu, which)) == sp, nu=nu, which=which, claim="Jacobi-Trudi")
        res.check(sigma(S(*nu)) == S(*transpose(nu)), nu=nu, claim="sigma transposes")
        res.check(sigma(sigma(sp)) == sp, nu=nu, claim="sigma involution")
    for k in range(1, n + 1):
        res.check(sigma(generator_in_p("e", k)) == generator_in_p("h", k), k=k, claim="sigma swaps e and h")
    return res


def suite_fs(ctx: Context) -> SuiteResult:
    from .sym import evaluate_at_diagram

    res = SuiteResult("fs")
    n = ctx.cap or 5
    for nu in _labels(n):
        f = fs_in_schur(nu).in_schur
        for lam in partitions_up_to(n + 2):
            res.check(evaluate_at_diagram(f, lam) == fs_value(nu, lam), nu=nu, lam=lam)
        res.check(sigma(f) == fs_in_schur(transpose(nu)).in_schur, nu=nu, claim="sigma symmetry")
    return res


SUITES: dict[str, tuple[Callable[[Context], SuiteResult], str]] = {
    "eigen": (suite_eigen, "D F_nu = -|nu| F_nu for Laguerre, Meixner, Charlier"),
    "orthogonality": (suite_orthogonality, "Gram matrices of the three bases are diagonal with closed-form norms"),
    "forms": (suite_forms, "E-, H- and P-form differential operators agree with the Schur-basis matrix"),
    "specialization": (suite_specialization, "pi_N / pi'_N images equal N-variate Laguerre / Meixner polynomials"),
    "nvariate-orthogonality": (suite_nvariate_orthogonality, "N-variate inner products by moments equal closed forms"),
    "univariate": (suite_univariate, "classical norms, eigenrelations and the Meixner-to-Laguerre scaling"),
    "zmeasure": (suite_zmeasure, "level sums, coherency, per-level expectations, detailed balance"),
    "autoduality": (suite_autoduality, "M'_nu(lam) = M'_lam(nu)"),
    "limits": (suite_limits, "eps-divisibility, moment ratio (1-eps)^|nu|, Charlier degeneration"),
    "thoma": (suite_thoma, "Schur functions are nonnegative on random Thoma-cone points"),
    "stationarity": (suite_stationarity, "sampler occupation law vs z-measure (statistical)"),
    "nvariate-operators": (suite_nvariate_operators, "N-variate operators, dimension formula, restricted rates"),
    "sym": (suite_sym, "LR products, Jacobi-Trudi, involution sigma"),
    "fs": (suite_fs, "Frobenius-Schur interpolation and sigma symmetry"),
}


def run_suite(name: str, ctx: Context | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name][0](ctx or Context())
