import random

import pytest

from bentice.identities import (
    DivisibilityError, IndexAction, divisibility_check, known_factor,
    okada_product_check, okada_products, probabilistic_divides,
    quotient_symmetry_check, rho_check,
)
from bentice.laurent import GI, LaurentPoly, Var
from bentice.models import build_model
from bentice.states import partition_function
from bentice.weights import make_generic, make_scheme

ONE = LaurentPoly.const(1)
I = LaurentPoly.const(GI)


def t(j):
    return LaurentPoly.term(1, [(Var.q(j), 2)])


def x(j, e=2):
    return LaurentPoly.term(1, [(Var.x(j), e)])


def v(var):
    return LaurentPoly.var(var)


class TestKnownFactor:
    def test_b_n1_deformation(self):
        assert known_factor("B", 1, "deformation") == [ONE - t(1) * x(1)]

    def test_d_n2_generic_with_1(self):
        factors = known_factor("D", 2, "generic", lambda_has_1=True)
        want = [
            v(Var.a1(2)) * v(Var.a2(1)) + v(Var.b1(1)) * v(Var.b2(2)),
            v(Var.a2(1)) * v(Var.a2(2)) + v(Var.b1(2)) * v(Var.b1(1)),
        ]
        assert factors == want

    def test_d_case_split_adds_factors(self):
        with_1 = known_factor("D", 2, "generic", lambda_has_1=True)
        without = known_factor("D", 2, "generic", lambda_has_1=False)
        assert len(without) == len(with_1) + 2

    def test_bc_n2_deformation(self):
        factors = known_factor("BC", 2, "deformation")
        assert factors == [ONE - t(2) * t(1) * x(2) * x(1), ONE - t(1) * t(1) * x(1, 4)]

    def test_b_factor_degree_bookkeeping(self):
        # generic factor product at rho is homogeneous of degree 2n^2 - n
        for n in (1, 2, 3):
            product = ONE
            for f in known_factor("B", n, "generic"):
                product = product * f
            spec = build_model("B", list(range(n, 0, -1)))
            assert product.is_homogeneous()
            assert product.total_degree() == spec.vertex_count() - n


class TestRhoEqualities:
    @pytest.mark.parametrize("family", ["B", "Bstar", "C", "Cstar", "D", "BC"])
    @pytest.mark.parametrize("regime", ["generic", "deformation"])
    def test_n2(self, family, regime):
        assert rho_check(family, 2, regime)["ok"]

    @pytest.mark.parametrize("family", ["B", "D"])
    def test_n3_fast_families(self, family):
        assert rho_check(family, 3, "generic")["ok"]
        assert rho_check(family, 3, "deformation")["ok"]


class TestDivisibility:
    def test_b_rho_quotient_is_one(self):
        q = divisibility_check("B", [2, 1], "generic")
        assert q == ONE

    def test_c_rho_quotient_is_one(self):
        assert divisibility_check("C", [2, 1], "deformation") == ONE

    def test_b31_quotient_nonconstant_and_symmetric(self):
        q = divisibility_check("B", [3, 1], "deformation")
        assert len(q.terms) > 1
        sym = quotient_symmetry_check(q, "B", 2, "deformation")
        assert sym["ok"]

    def test_generic_quotient_symmetry(self):
        q = divisibility_check("Cstar", [3, 1], "generic")
        assert quotient_symmetry_check(q, "Cstar", 2, "generic")["ok"]

    def test_corrupted_quotient_detected(self):
        q = divisibility_check("B", [3, 1], "deformation")
        bad = q + x(1)
        sym = quotient_symmetry_check(bad, "B", 2, "deformation")
        assert not sym["ok"] and sym["failed_actions"]

    def test_remaining_factors_after_one_division(self):
        # divide Z(B^rho) by the j=1 linear factor by hand
        spec = build_model("B", [2, 1])
        z = partition_function(spec, make_generic("B", 2))
        first = v(Var.a2(1)) + I * v(Var.b1(1))
        rest = z.exact_divide(first)
        product = ONE
        for f in known_factor("B", 2, "generic"):
            if f != first:
                product = product * f
        assert rest == product

    def test_type_a_divisibility_and_schur_quotient(self):
        q = divisibility_check("A", [3, 1], "deformation")
        # quotient is the Schur polynomial s_(1,0) = x1 + x2, free of t
        assert q == x(1) + x(2)
        assert quotient_symmetry_check(q, "A", 2, "deformation")["ok"]


class TestIndexActions:
    def test_swap_is_involutive(self):
        act = IndexAction("swap", 1, 2)
        p = v(Var.a1(1)) * v(Var.b2(2)) + v(Var.a2(2))
        assert act.apply(act.apply(p, "generic"), "generic") == p

    def test_bar_is_involutive_deformation(self):
        act = IndexAction("bar", 1)
        p = x(1) + x(1, -2) * t(1)
        assert act.apply(act.apply(p, "deformation"), "deformation") == p

    def test_generic_bar_matches_symmetry_relabeling(self):
        act = IndexAction("bar", 1)
        s = make_generic("B", 1)
        for kind in ("a1", "a2", "b1", "b2", "c1", "c2"):
            barred = s.vertex_weight(kind, "1b")
            assert act.apply(s.vertex_weight(kind, "1"), "generic") == barred


class TestOkada:
    def test_b_n2_product_shape(self):
        tq = LaurentPoly.term(1, [(Var.qshared(), 2)])
        want = ((ONE - tq * x(1)) * (ONE - tq * x(2))
                * (ONE - tq * tq * x(1) * x(2, -2)) * (ONE - tq * tq * x(1) * x(2)))
        assert okada_products("B", 2) == want

    def test_cstar_n1(self):
        tq = LaurentPoly.term(1, [(Var.qshared(), 2)])
        assert okada_products("Cstar", 1) == ONE + tq * x(1, 4)

    def test_d_n1_empty_product(self):
        assert okada_products("D", 1) == ONE

    @pytest.mark.parametrize("family", ["B", "Bstar", "C", "Cstar", "D", "BC"])
    def test_check_n2(self, family):
        assert okada_product_check(family, 2)["ok"]


class TestProbabilisticPreCheck:
    def test_refutes_non_divisibility(self):
        rng = random.Random(3)
        num = x(1) + ONE
        den = x(1) + x(2)
        ok, point = probabilistic_divides(num, den, rng)
        assert not ok and point is not None

    def test_accepts_divisibility(self):
        rng = random.Random(3)
        num = (x(1) + x(2)) * (x(1) - x(2))
        ok, point = probabilistic_divides(num, x(1) + x(2), rng)
        assert ok and point is None

    def test_division_failure_raises(self):
        # divide by a factor that is not there
        with pytest.raises(DivisibilityError):
            spec = build_model("B", [2, 1])
            z = partition_function(spec, make_scheme("deformation", "B", 2))
            bad_factor = ONE - t(1) * t(1) * x(1)
            if z.exact_divide(bad_factor) is None:
                raise DivisibilityError("expected")
