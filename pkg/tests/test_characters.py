import pytest

from bentice.characters import (
    EVEN_SIGNS, HYPEROCTAHEDRAL, CharacterBijectionError, SignedPermutation,
    alternant, character_theorem_check, identity_element, length,
    nonzero_weight_states, phi_statistic, schur, state_to_weyl, tokuyama_check,
    weyl_character_type, weyl_group, weyl_state_weight, weyl_vector,
    word_length_table,
)
from bentice.laurent import LaurentPoly, Var
from bentice.models import build_model
from bentice.states import enumerate_states, state_weight
from bentice.weights import make_character

ONE = LaurentPoly.const(1)


def xp(j, e):
    return LaurentPoly.term(1, [(Var.x(j), e)])


class TestGroup:
    def test_orders(self):
        assert [len(weyl_group(HYPEROCTAHEDRAL, n)) for n in (1, 2, 3)] == [2, 8, 48]
        assert [len(weyl_group(EVEN_SIGNS, n)) for n in (2, 3)] == [4, 24]

    def test_identity_length(self):
        assert length(identity_element(3), HYPEROCTAHEDRAL) == 0

    def test_group_law_convention(self):
        # (s1,v1)(s2,v2) = (s2 s1, v1 v2^s1): signs_j = v1_j * v2_{sigma1(j)}
        a = SignedPermutation((2, 1), (1, -1))
        b = SignedPermutation((1, 2), (-1, 1))
        ab = a * b
        assert ab.sigma == (2, 1)
        assert ab.signs == (1 * 1, -1 * -1) == (1, 1)

    @pytest.mark.parametrize("group,n", [
        (HYPEROCTAHEDRAL, 1), (HYPEROCTAHEDRAL, 2), (HYPEROCTAHEDRAL, 3),
        (EVEN_SIGNS, 2), (EVEN_SIGNS, 3),
    ])
    def test_length_formula_equals_word_length(self, group, n):
        table = word_length_table(group, n)
        assert set(table) == set(weyl_group(group, n))
        for w, wl in table.items():
            assert length(w, group) == wl

    def test_det_parity(self):
        for group in (HYPEROCTAHEDRAL, EVEN_SIGNS):
            for w in weyl_group(group, 3):
                assert w.det_sign() == (-1) ** (length(w, group) % 2)


class TestAlternants:
    def test_b_n1_rho(self):
        # x^{1/2} - x^{-1/2}
        alt = alternant(HYPEROCTAHEDRAL, 1, weyl_vector("B", 1))
        assert alt == xp(1, 1) - xp(1, -1)

    def test_c_n1_rho(self):
        alt = alternant(HYPEROCTAHEDRAL, 1, weyl_vector("C", 1))
        assert alt == xp(1, 2) - xp(1, -2)

    def test_d_n1_trivial_group(self):
        assert alternant(EVEN_SIGNS, 1, weyl_vector("D", 1)) == ONE

    def test_antisymmetry_under_simple_reflection(self):
        alpha = (2 * 2 + 3, 2 * 0 + 1)  # mu=(2,0) + rho_B doubled
        alt = alternant(HYPEROCTAHEDRAL, 2, alpha)
        swapped = alt.substitute({Var.x(1): LaurentPoly.var(Var.x(2)),
                                  Var.x(2): LaurentPoly.var(Var.x(1))})
        assert swapped == -alt
        flipped = alt.substitute({Var.x(2): LaurentPoly.term(1, [(Var.x(2), -1)])})
        assert flipped == -alt


class TestCharacters:
    def test_mu_zero_is_one(self):
        for type_ in ("B", "C", "D"):
            assert weyl_character_type(type_, 2, [0, 0]) == ONE

    def test_c_n1_fundamental(self):
        assert weyl_character_type("C", 1, [1]) == xp(1, 2) + xp(1, -2)

    def test_b_n1_fundamental(self):
        assert weyl_character_type("B", 1, [1]) == xp(1, 2) + ONE + xp(1, -2)

    def test_c_n2_dimension_spot_check(self):
        chi = weyl_character_type("C", 2, [1, 0])
        at_one = chi.substitute({Var.x(1): ONE, Var.x(2): ONE})
        assert at_one == LaurentPoly.const(4)

    def test_schur_small(self):
        assert schur(2, [1, 0]) == xp(1, 2) + xp(2, 2)
        assert schur(2, [1, 1]) == xp(1, 2) * xp(2, 2)

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError):
            weyl_character_type("B", 2, [0, 1])


class TestStateBijection:
    @pytest.mark.parametrize("family,lam,expect", [
        ("B", [2, 1], 8), ("Bstar", [2, 1], 8), ("C", [2, 1], 8),
        ("Cstar", [2, 1], 8), ("D", [2, 1], 4), ("BC", [2, 1], 4),
        ("B", [3, 1], 8), ("D", [3, 1], 4),
    ])
    def test_counts_match_group_order(self, family, lam, expect):
        assert len(nonzero_weight_states(family, lam)) == expect

    def test_b_n3_count(self):
        assert len(nonzero_weight_states("B", [3, 2, 1])) == 48

    def test_bijectivity(self):
        states = nonzero_weight_states("B", [3, 1])
        images = {state_to_weyl(s) for s in states}
        assert len(images) == len(states) == 8

    def test_identity_element_from_all_bends_down(self):
        for s in nonzero_weight_states("B", [2, 1]):
            w = state_to_weyl(s)
            if w == identity_element(2):
                assert all(d == "D" for d in s.bend_dirs().values())
                kinds = s.vertex_kinds()
                # c2 of pair j sits in row jb at column lambda_j
                assert kinds[("1b", 2)] == "c2" and kinds[("2b", 1)] == "c2"
                break
        else:
            pytest.fail("identity state not found")

    def test_b1_bend_up_state(self):
        ups = [s for s in nonzero_weight_states("B", [1]) if s.bend_dirs()["1"] == "U"]
        assert len(ups) == 1
        w = state_to_weyl(ups[0])
        assert w.sigma == (1,) and w.signs == (-1,)

    def test_zero_weight_state_rejected(self):
        spec = build_model("B", [2, 1])
        scheme = make_character("B", 2)
        dead = [s for s in enumerate_states(spec)
                if state_weight(s, scheme).is_zero()]
        with pytest.raises(CharacterBijectionError):
            state_to_weyl(dead[0])

    def test_d_requires_lambda_n_one(self):
        spec = build_model("D", [3, 2])
        with pytest.raises(CharacterBijectionError):
            state_to_weyl(enumerate_states(spec)[0])


class TestWeightLemma:
    @pytest.mark.parametrize("family,lam", [
        ("B", [2, 1]), ("B", [3, 1]), ("Bstar", [3, 1]), ("C", [3, 1]),
        ("Cstar", [3, 1]), ("D", [3, 1]), ("BC", [3, 1]), ("B", [3, 2, 1]),
    ])
    def test_closed_form_matches_every_state(self, family, lam):
        n = len(lam)
        scheme = make_character(family, n)
        for s in nonzero_weight_states(family, lam):
            w = state_to_weyl(s)
            assert state_weight(s, scheme) == weyl_state_weight(w, family, lam)

    @pytest.mark.parametrize("lam", [[2, 1], [3, 1], [3, 2, 1], [4, 2, 1]])
    def test_phi_parity_family_b(self, lam):
        group = HYPEROCTAHEDRAL
        for s in nonzero_weight_states("B", lam):
            w = state_to_weyl(s)
            assert phi_statistic(s) % 2 == length(w, group) % 2

    @pytest.mark.parametrize("lam", [[2, 1], [3, 1], [3, 2, 1]])
    def test_phi_parity_family_bc(self, lam):
        for s in nonzero_weight_states("BC", lam):
            w = state_to_weyl(s)
            assert phi_statistic(s) % 2 == length(w, EVEN_SIGNS) % 2


class TestCharacterTheorem:
    @pytest.mark.parametrize("family", ["B", "Bstar", "C", "Cstar", "D", "BC"])
    def test_rho_case(self, family):
        assert character_theorem_check(family, [2, 1])["ok"]

    def test_cstar_31(self):
        assert character_theorem_check("Cstar", [3, 1])["ok"]

    def test_b_31(self):
        assert character_theorem_check("B", [3, 1])["ok"]

    def test_d_with_lambda_n_one(self):
        assert character_theorem_check("D", [4, 1])["ok"]

    def test_d_without_1_fails_as_expected(self):
        # lambda_n != 1 falls outside the bijection hypothesis: the extra
        # factors (1 - x_j^2) make Z vanish at x = 1, so no character works
        r = character_theorem_check("D", [3, 2])
        assert not r["ok"]
        z_rho = character_theorem_check("D", [2, 1])["z"]
        extra = (ONE - xp(1, 4)) * (ONE - xp(2, 4))
        assert r["z"] == z_rho * extra


class TestTokuyama:
    def test_single_state(self):
        r = tokuyama_check([1])
        assert r["ok"]
        assert r["z"] == xp(1, 2)

    @pytest.mark.parametrize("lam", [[2, 1], [3, 1], [3, 2, 1], [5, 3, 1]])
    def test_symbolic_in_t(self, lam):
        assert tokuyama_check(lam)["ok"]
