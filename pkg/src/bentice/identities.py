"""Global partition-function identities: divisibility, products, symmetry.

The six bent families each come with an explicit factor list, in two
regimes: symbolic a/b weights ("generic") and the x/t parametrization
("deformation").  At lambda = rho the factor product IS the partition
function; for larger lambda it divides, with a quotient symmetric under
the spectral index actions.  Family A is carried along via its own
deformed-denominator factors (one shared t), whose quotient is the Schur
function.

A randomized Gaussian-integer evaluation runs before each exact division;
a point refuting divisibility while exact division succeeds would mean
the suite itself is broken, and raises.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .laurent import GI, GInt, GRat, LaurentPoly, Var, monomial_sort_key
from .models import build_model
from .states import partition_function
from .weights import make_scheme, regular_row_count

ONE = LaurentPoly.const(1)
I = LaurentPoly.const(GI)

BENT_FAMILIES = ("B", "Bstar", "C", "Cstar", "D", "BC")


class DivisibilityError(ArithmeticError):
    """A stated factor fails to divide a partition function exactly."""


class SuiteSelfCheckError(AssertionError):
    """Probabilistic and exact divisibility verdicts disagree."""


def _v(var):
    return LaurentPoly.var(var)


def _pair_factors_generic(j: int, k: int) -> list:
    a1k, a2j = _v(Var.a1(k)), _v(Var.a2(j))
    b1j, b2k = _v(Var.b1(j)), _v(Var.b2(k))
    a2k, b1k = _v(Var.a2(k)), _v(Var.b1(k))
    return [a1k * a2j + b1j * b2k, a2j * a2k + b1k * b1j]


def _pair_factors_deformation(j: int, k: int) -> list:
    def t(idx):
        return LaurentPoly.term(1, [(Var.q(idx), 2)])

    def x(idx, e=2):
        return LaurentPoly.term(1, [(Var.x(idx), e)])

    tt = t(j) * t(k)
    return [ONE - tt * x(j) * x(k, -2), ONE - tt * x(j) * x(k)]


def known_factor(family: str, n: int, regime: str, lambda_has_1: bool = True) -> list:
    """The stated factor list for Z of the family, as exact polynomials."""
    if regime not in ("generic", "deformation"):
        raise ValueError(f"unknown regime {regime!r}")
    if family == "A":
        return _type_a_factors(n)
    if family not in BENT_FAMILIES:
        raise ValueError(f"no factor list for family {family!r}")
    m = regular_row_count(family, n)
    gen = regime == "generic"
    factors: list = []

    def t(idx):
        return LaurentPoly.term(1, [(Var.q(idx), 2)])

    def x(idx, e=2):
        return LaurentPoly.term(1, [(Var.x(idx), e)])

    for j in range(1, m + 1):
        a2j, b1j = _v(Var.a2(j)), _v(Var.b1(j))
        if family == "B":
            factors.append(a2j + I * b1j if gen else ONE - t(j) * x(j))
        elif family == "Bstar":
            a0, b0 = _v(Var.a0(0)), _v(Var.b0(0))
            factors.append(a0 * a2j + b1j * b0 if gen
                           else ONE - t(0) * t(j) * x(0) * x(j))
        elif family == "C":
            a0, b0 = _v(Var.a0(0)), _v(Var.b0(0))
            if gen:
                factors.append(a2j + I * b1j)
                factors.append(a0 * a2j + b1j * b0)
            else:
                factors.append(ONE - t(j) * x(j))
                factors.append(ONE - t(j) * t(0) * x(0) * x(j))
        elif family == "Cstar":
            factors.append(a2j * a2j + b1j * b1j if gen
                           else ONE - t(j) * t(j) * x(j) * x(j))
        elif family == "D":
            if not lambda_has_1:
                factors.append(a2j * a2j + b1j * b1j if gen
                               else ONE - t(j) * t(j) * x(j) * x(j))
        elif family == "BC":
            an, bn = _v(Var.a0(n)), _v(Var.b0(n))
            if gen:
                factors.append(an * a2j + b1j * bn)
                factors.append(a2j * a2j + b1j * b1j)
            else:
                factors.append(ONE - t(n) * t(j) * x(n) * x(j))
                factors.append(ONE - t(j) * t(j) * x(j) * x(j))
    for j in range(1, m + 1):
        for k in range(j + 1, m + 1):
            factors.extend(_pair_factors_generic(j, k) if gen
                           else _pair_factors_deformation(j, k))
    return factors


def _type_a_factors(n: int) -> list:
    """Root factors of the deformed type-A denominator, one shared t.

    The monomial x^rho also divides (it is handled as an exponent shift
    in divisibility_check, since monomials fail plain division).
    """
    t = LaurentPoly.term(1, [(Var.qshared(), 2)])
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            factors.append(ONE + t * LaurentPoly.term(1, [(Var.x(j), 2), (Var.x(i), -2)]))
    return factors


def _x_rho_shift(n: int) -> LaurentPoly:
    return LaurentPoly.term(1, [(Var.x(j), -2 * (n + 1 - j)) for j in range(1, n + 1)])


@dataclass(frozen=True)
class IndexAction:
    """swap(j,k) or bar(j), realized per regime as a substitution."""

    kind: str
    j: int
    k: int = 0

    def substitution(self, regime: str) -> dict:
        if self.kind == "swap":
            j, k = self.j, self.k
            if regime == "generic":
                out = {}
                for mk in (Var.a1, Var.a2, Var.b1, Var.b2):
                    out[mk(j)] = _v(mk(k))
                    out[mk(k)] = _v(mk(j))
                return out
            return {Var.x(j): _v(Var.x(k)), Var.x(k): _v(Var.x(j)),
                    Var.q(j): _v(Var.q(k)), Var.q(k): _v(Var.q(j))}
        if self.kind == "bar":
            j = self.j
            if regime == "generic":
                return {Var.a1(j): _v(Var.a2(j)), Var.a2(j): _v(Var.a1(j)),
                        Var.b1(j): _v(Var.b2(j)), Var.b2(j): _v(Var.b1(j))}
            return {Var.x(j): LaurentPoly.term(1, [(Var.x(j), -1)])}
        raise ValueError(f"unknown action {self.kind!r}")

    def apply(self, p: LaurentPoly, regime: str) -> LaurentPoly:
        return p.substitute(self.substitution(regime))


def spectral_actions(family: str, n: int) -> list:
    m = regular_row_count(family, n) if family != "A" else n
    acts = [IndexAction("swap", j, j + 1) for j in range(1, m)]
    if family != "A":
        acts.extend(IndexAction("bar", j) for j in range(1, m + 1))
    return acts


# ---------------------------------------------------------------------------
# divisibility


def _eval_gauss(p: LaurentPoly, point: dict) -> GRat:
    return p.evaluate(point)


def _random_point(variables, rng: random.Random) -> dict:
    pool = [GInt(a, b) for a in range(-3, 4) for b in range(-3, 4)
            if (a, b) != (0, 0)]
    return {v: GRat.of(rng.choice(pool)) for v in variables}


def probabilistic_divides(num: LaurentPoly, den: LaurentPoly,
                          rng: random.Random, trials: int = 5):
    """False only with a witness point: cleared-value non-divisibility.

    Clears negative exponents from both polynomials, evaluates at random
    Gaussian-integer points, and tests exact value divisibility in Z[i].
    Divisibility of the cleared polynomials implies value divisibility,
    so a refuting point is conclusive; True is only probabilistic.
    """
    def cleared(p):
        monos = [dict(m) for m in p.terms]
        all_vars = {v for m in monos for v in m}
        mins = {v: min(m.get(v, 0) for m in monos) for v in all_vars}
        shift = tuple((v, -e) for v, e in mins.items() if e < 0)
        return p * LaurentPoly.term(1, shift)

    nc, dc = cleared(num), cleared(den)
    variables = nc.variables() | dc.variables()
    done = 0
    while done < trials:
        point = _random_point(variables, rng)
        dval = _eval_gauss(dc, point)
        if dval.is_zero():
            continue
        nval = _eval_gauss(nc, point)
        # both values are Gaussian integers since the cleared polys are plain
        n_int = GInt(int(nval.re), int(nval.im))
        d_int = GInt(int(dval.re), int(dval.im))
        if n_int.exact_div(d_int) is None:
            return False, point
        done += 1
    return True, None


def divisibility_check(family: str, lam, regime: str,
                       seed: int = 0, pre_check: bool = True) -> LaurentPoly:
    """Divide Z sequentially by every stated factor; return the quotient.

    Raises DivisibilityError naming the offending factor if any division
    leaves a remainder (which would refute the identity at this instance).
    """
    spec = build_model(family, lam)
    scheme_name = "generic" if regime == "generic" else (
        "tokuyama" if family == "A" else "deformation")
    scheme = make_scheme(scheme_name, family, spec.n)
    z = partition_function(spec, scheme)
    factors = known_factor(family, spec.n, regime, lambda_has_1=(1 in spec.lam))
    factors = sorted(factors, key=lambda f: monomial_sort_key(f.leading()[0]))
    rng = random.Random(seed)
    quotient = z
    for f in factors:
        if pre_check:
            ok, point = probabilistic_divides(quotient, f, rng)
        else:
            ok, point = True, None
        q = quotient.exact_divide(f)
        if q is None:
            raise DivisibilityError(
                f"factor {f.to_latex()} does not divide Z({family}^{list(lam)}) [{regime}]")
        if not ok:
            raise SuiteSelfCheckError(
                f"value check refuted divisibility at {point} but exact division succeeded")
        quotient = q
    if family == "A":
        # strip x^rho; the result must be an honest polynomial in the x's
        quotient = quotient * _x_rho_shift(spec.n)
        monos = [dict(m) for m in quotient.terms]
        if any(e < 0 for m in monos for e in m.values()):
            raise DivisibilityError(
                f"x^rho does not divide Z(A^{list(lam)}) [{regime}]")
    return quotient


def quotient_symmetry_check(quotient: LaurentPoly, family: str, n: int,
                            regime: str) -> dict:
    """Invariance of the quotient under all spectral index actions."""
    failures = []
    for act in spectral_actions(family, n):
        if act.apply(quotient, regime) != quotient:
            failures.append(f"{act.kind}({act.j}{',' + str(act.k) if act.kind == 'swap' else ''})")
    return {"ok": not failures, "failed_actions": failures}


def rho_check(family: str, n: int, regime: str) -> dict:
    """At lambda = rho the divisibility is equality: Z == product."""
    rho = list(range(n, 0, -1))
    spec = build_model(family, rho)
    scheme_name = "generic" if regime == "generic" else (
        "tokuyama" if family == "A" else "deformation")
    scheme = make_scheme(scheme_name, family, n)
    z = partition_function(spec, scheme)
    product = ONE
    for f in known_factor(family, n, regime, lambda_has_1=True):
        product = product * f
    ok = z == product
    return {"ok": ok, "z": z, "product": product}


# ---------------------------------------------------------------------------
# the shared-t specializations


def okada_products(family: str, n: int) -> LaurentPoly:
    """Published deformed-denominator product, with t carried as q**2."""
    t = LaurentPoly.term(1, [(Var.qshared(), 2)])

    def x(idx, e=2):
        return LaurentPoly.term(1, [(Var.x(idx), e)])

    out = ONE
    if family == "B":
        for j in range(1, n + 1):
            out = out * (ONE - t * x(j))
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                out = out * (ONE - t * t * x(j) * x(k, -2)) * (ONE - t * t * x(j) * x(k))
    elif family == "Bstar":
        for j in range(1, n + 1):
            out = out * (ONE + t * x(j))
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                out = out * (ONE + t * x(j) * x(k, -2)) * (ONE + t * x(j) * x(k))
    elif family == "C":
        for j in range(1, n + 1):
            out = out * (ONE - t * x(j)) * (ONE + t * t * x(j))
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                out = out * (ONE - t * t * x(j) * x(k, -2)) * (ONE - t * t * x(j) * x(k))
    elif family == "Cstar":
        for j in range(1, n + 1):
            out = out * (ONE + t * x(j, 4))
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                out = out * (ONE + t * x(j) * x(k, -2)) * (ONE + t * x(j) * x(k))
    elif family == "D":
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                out = out * (ONE + t * x(j) * x(k, -2)) * (ONE + t * x(j) * x(k))
    elif family == "BC":
        for j in range(1, n):
            out = out * (ONE + t * x(j)) * (ONE + t * x(j, 4))
        for j in range(1, n):
            for k in range(j + 1, n):
                out = out * (ONE + t * x(j) * x(k, -2)) * (ONE + t * x(j) * x(k))
    else:
        raise ValueError(f"no okada product for family {family!r}")
    return out


def okada_product_check(family: str, n: int) -> dict:
    """Z at lambda = rho under the shared-t weights vs the published product."""
    rho = list(range(n, 0, -1))
    spec = build_model(family, rho)
    z = partition_function(spec, make_scheme("okada", family, n))
    product = okada_products(family, n)
    ok = z == product
    diff = z - product
    return {"ok": ok, "z": z, "product": product,
            "diff": None if ok else diff}
