"""Weyl-group machinery and the character specialization checks.

Signed permutations are pairs (sigma, v) acting on exponent vectors by
(w.alpha)_j = v_j * alpha_sigma(j), multiplied by
(s1,v1)(s2,v2) = (s2 s1, v1 * v2^s1).  Lengths come from the classical
inversion formulas on one-line notation (validated against word length
over the generators: adjacent swaps, plus a last-coordinate sign flip for
the full hyperoctahedral group or the two-coordinate flip for its even
subgroup).

Characters are alternant ratios, with exponents kept doubled so type-B
half-integer weights stay integral.  Everything downstream is an exact
polynomial identity: the per-state closed forms, the bijection between
nonzero-weight states and group elements, the character factorization of
the partition function, and the type-A anchor identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from .laurent import GInt, LaurentPoly, Var, gpow_i
from .models import ModelSpec, build_model, check_strict_partition
from .states import IceState, enumerate_states, partition_function, state_weight
from .weights import make_character, make_tokuyama, regular_row_count

ONE = LaurentPoly.const(1)

HYPEROCTAHEDRAL = "BC"      # S_n x (+-1)^n
EVEN_SIGNS = "D"            # even number of -1 entries


@dataclass(frozen=True)
class SignedPermutation:
    sigma: tuple           # images sigma(1..n), one-based values
    signs: tuple           # +1 / -1 per position

    @property
    def n(self) -> int:
        return len(self.sigma)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        # group law: (s1,v1)(s2,v2) = (s2 s1, v1 * v2^s1)
        v1, s2, v2 = self.signs, other.sigma, other.signs
        sigma = tuple(s2[self.sigma[j] - 1] for j in range(self.n))
        signs = tuple(v1[j] * v2[self.sigma[j] - 1] for j in range(self.n))
        return SignedPermutation(sigma, signs)

    def act(self, alpha: tuple) -> tuple:
        """(w.alpha)_j = v_j alpha_sigma(j); alpha in doubled units."""
        return tuple(self.signs[j] * alpha[self.sigma[j] - 1] for j in range(self.n))

    def det_sign(self) -> int:
        sign = 1
        for j in range(self.n):
            for k in range(j + 1, self.n):
                if self.sigma[j] > self.sigma[k]:
                    sign = -sign
        for v in self.signs:
            sign *= 1 if v > 0 else -1
        return sign

    def minus_count(self) -> int:
        return sum(1 for v in self.signs if v < 0)


def identity_element(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)), (1,) * n)


def generators(group: str, n: int) -> list:
    gens = []
    for i in range(1, n):
        sigma = list(range(1, n + 1))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        gens.append(SignedPermutation(tuple(sigma), (1,) * n))
    if group == HYPEROCTAHEDRAL:
        signs = [1] * n
        signs[-1] = -1
        gens.append(SignedPermutation(tuple(range(1, n + 1)), tuple(signs)))
    elif group == EVEN_SIGNS:
        if n >= 2:
            sigma = list(range(1, n + 1))
            sigma[-2], sigma[-1] = sigma[-1], sigma[-2]
            signs = [1] * n
            signs[-2] = signs[-1] = -1
            gens.append(SignedPermutation(tuple(sigma), tuple(signs)))
    else:
        raise ValueError(f"unknown group {group!r}")
    return gens


def _bb_oneline(w: SignedPermutation) -> list:
    """One-line form in the convention whose sign flip sits on coordinate 1.

    The element is read as the map j -> v_j sigma(j) and conjugated by the
    coordinate reversal, which carries our generator set to the classical
    one and so preserves length.
    """
    n = w.n
    f = [w.signs[j] * w.sigma[j] for j in range(n)]
    out = []
    for k in range(1, n + 1):
        val = f[n - k]
        mag = n + 1 - abs(val)
        out.append(mag if val > 0 else -mag)
    return out


def length(w: SignedPermutation, group: str) -> int:
    """Coxeter length by inversion counting."""
    u = _bb_oneline(w)
    n = len(u)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])
    if group == HYPEROCTAHEDRAL:
        return inv + sum(-v for v in u if v < 0)
    if group == EVEN_SIGNS:
        return inv + sum(-v - 1 for v in u if v < 0)
    raise ValueError(f"unknown group {group!r}")


def word_length_table(group: str, n: int) -> dict:
    """Breadth-first minimal word lengths; the brute-force oracle."""
    gens = generators(group, n)
    start = identity_element(n)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = g * w
                if u not in dist:
                    dist[u] = dist[w] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def weyl_group(group: str, n: int) -> list:
    """The full group, with the expected order, in a deterministic order."""
    elements = []
    for sigma in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if group == EVEN_SIGNS and sum(1 for v in signs if v < 0) % 2:
                continue
            elements.append(SignedPermutation(sigma, signs))
    return elements


# ---------------------------------------------------------------------------
# alternants and characters


def _x_monomial(exponents) -> LaurentPoly:
    return LaurentPoly.term(1, [(Var.x(j + 1), e) for j, e in enumerate(exponents)])


def alternant(group: str, n: int, alpha_doubled) -> LaurentPoly:
    """Signed orbit sum over the group, exponents in doubled units."""
    alpha = tuple(alpha_doubled)
    total = LaurentPoly.zero()
    for w in weyl_group(group, n):
        total = total + LaurentPoly.const((-1) ** (length(w, group) % 2)) \
            * _x_monomial(w.act(alpha))
    return total


def alternant_sym(n: int, alpha_doubled) -> LaurentPoly:
    """Type-A alternant: ordinary antisymmetrization over S_n."""
    alpha = tuple(alpha_doubled)
    total = LaurentPoly.zero()
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        total = total + LaurentPoly.const(sign) \
            * _x_monomial(tuple(alpha[perm[j]] for j in range(n)))
    return total


def weyl_vector(type_: str, n: int) -> tuple:
    if type_ == "B":
        return tuple(2 * (n - j) - 1 for j in range(n))        # doubled [n-1/2..1/2]
    if type_ == "C":
        return tuple(2 * (n - j) for j in range(n))            # doubled [n..1]
    if type_ == "D":
        return tuple(2 * (n - 1 - j) for j in range(n))        # doubled [n-1..0]
    raise ValueError(f"unknown type {type_!r}")


FAMILY_CHARACTER = {
    "B": (HYPEROCTAHEDRAL, "B"),
    "Bstar": (HYPEROCTAHEDRAL, "B"),
    "C": (HYPEROCTAHEDRAL, "C"),
    "Cstar": (HYPEROCTAHEDRAL, "C"),
    "D": (EVEN_SIGNS, "D"),
    "BC": (EVEN_SIGNS, "B"),      # type-D group with the type-B vector
}


def _check_dominant(mu, n):
    mu = tuple(int(m) for m in mu)
    if len(mu) != n or any(m < 0 for m in mu) or any(a < b for a, b in zip(mu, mu[1:])):
        raise ValueError("mu must be a weakly decreasing nonnegative n-tuple")
    return mu


def weyl_character_type(type_: str, n: int, mu) -> LaurentPoly:
    """Highest-weight character of classical type as an alternant ratio."""
    mu = _check_dominant(mu, n)
    group = EVEN_SIGNS if type_ == "D" else HYPEROCTAHEDRAL
    rho = weyl_vector(type_, n)
    alpha = tuple(2 * m + r for m, r in zip(mu, rho))
    num = alternant(group, n, alpha)
    den = alternant(group, n, rho)
    chi = num.exact_divide(den)
    if chi is None:
        raise ArithmeticError("alternant ratio failed to divide exactly")
    return chi


def family_character(family: str, n: int, mu) -> LaurentPoly:
    """The character the family's partition function factors through.

    Family BC uses the even-sign group with the type-B vector, evaluated
    at x_n = 1, matching the specialization baked into its weights.
    """
    mu = _check_dominant(mu, n)
    group, vec = FAMILY_CHARACTER[family]
    rho = weyl_vector(vec, n)
    alpha = tuple(2 * m + r for m, r in zip(mu, rho))
    num = alternant(group, n, alpha)
    den = alternant(group, n, rho)
    if family == "BC":
        # the odd-symplectic character lives at x_n = 1; the unspecialized
        # alternant ratio need not be polynomial
        num = num.substitute({Var.x(n): ONE})
        den = den.substitute({Var.x(n): ONE})
    chi = num.exact_divide(den)
    if chi is None:
        raise ArithmeticError("alternant ratio failed to divide exactly")
    return chi


def schur(n: int, mu) -> LaurentPoly:
    """Type-A character via the bialternant."""
    mu = _check_dominant(mu, n)
    delta = tuple(2 * (n - 1 - j) for j in range(n))
    alpha = tuple(2 * m + d for m, d in zip(mu, delta))
    s = alternant_sym(n, alpha).exact_divide(alternant_sym(n, delta))
    if s is None:
        raise ArithmeticError("Schur bialternant failed to divide exactly")
    return s


# ---------------------------------------------------------------------------
# states <-> group elements under the character weights


class CharacterBijectionError(ValueError):
    pass


def nonzero_weight_states(family: str, lam) -> list:
    spec = build_model(family, lam)
    scheme = make_character(family, spec.n)
    out = []
    for state in enumerate_states(spec):
        if not state_weight(state, scheme).is_zero():
            out.append(state)
    return out


def state_to_weyl(state: IceState) -> SignedPermutation:
    """The group element encoded by the c2 positions and bend directions."""
    spec = state.spec
    family, lam, n = spec.family, spec.lam, spec.n
    if family == "A":
        raise CharacterBijectionError("type A states do not carry sign data")
    if family == "D" and lam[-1] != 1:
        raise CharacterBijectionError("the D-family bijection needs lambda_n = 1")
    scheme = make_character(family, n)
    if state_weight(state, scheme).is_zero():
        raise CharacterBijectionError("state has weight zero under character weights")
    kinds = state.vertex_kinds()
    part_index = {part: k + 1 for k, part in enumerate(lam)}
    sigma = [0] * n
    signs = [0] * n
    m = regular_row_count(family, n)
    for j in range(1, m + 1):
        locations = [(r, c) for (r, c), kind in kinds.items()
                     if kind == "c2" and r in (str(j), str(j) + "b")]
        if len(locations) != 1:
            raise CharacterBijectionError(f"row pair {j} must hold exactly one c2")
        row, col = locations[0]
        if col not in part_index:
            raise CharacterBijectionError(f"c2 in column {col} outside lambda")
        sigma[j - 1] = part_index[col]
        if family == "D" and col == 1:
            signs[j - 1] = 0          # resolved by parity below
        else:
            signs[j - 1] = -1 if row == str(j) else 1
    if family == "BC":
        locations = [(r, c) for (r, c), kind in kinds.items()
                     if kind == "c2" and r == str(n)]
        if len(locations) != 1:
            raise CharacterBijectionError("central row must hold exactly one c2")
        sigma[n - 1] = part_index[locations[0][1]]
        signs[n - 1] = 0
    # parity completion for the even-sign families
    if 0 in signs:
        slot = signs.index(0)
        minus = sum(1 for v in signs if v == -1)
        signs[slot] = -1 if minus % 2 else 1
    if sorted(sigma) != list(range(1, n + 1)):
        raise CharacterBijectionError("c2 columns do not encode a permutation")
    return SignedPermutation(tuple(sigma), tuple(signs))


def weyl_state_weight(w: SignedPermutation, family: str, lam) -> LaurentPoly:
    """Closed form for the weight of the state encoding w."""
    lam = check_strict_partition(lam)
    n = len(lam)
    mu = tuple(lam[j] - (n - j) for j in range(n))
    group, vec = FAMILY_CHARACTER[family]
    rho = weyl_vector(vec, n)
    alpha = tuple(2 * m + r for m, r in zip(mu, rho))
    sign = (-1) ** (length(w, group) % 2)
    if family in ("B", "Bstar", "C", "Cstar"):
        sign *= (-1) ** (n % 2)
    coeff = gpow_i(sum(mu)) * GInt(sign)
    out = LaurentPoly.const(coeff) * _x_monomial(rho) * _x_monomial(w.act(alpha))
    if family == "BC":
        out = out.substitute({Var.x(n): ONE})
    return out


# ---------------------------------------------------------------------------
# the sign statistic phi, read off the state


def _row_gap_edge(spec: ModelSpec, row_label: str, above: bool):
    idx = spec.rows.index(row_label)
    return idx if above else idx + 1


def phi_statistic(state: IceState) -> int:
    """The per-row sign exponent of the weight computation (families B, BC)."""
    spec = state.spec
    family, lam, n = spec.family, spec.lam, spec.n
    if family not in ("B", "BC"):
        raise ValueError("phi is defined for the B and BC families")
    w = state_to_weyl(state)
    kinds = state.vertex_kinds()
    bends = state.bend_dirs()
    total = 0
    m = regular_row_count(family, n)
    for j in range(1, m + 1):
        lam_sig = lam[w.sigma[j - 1] - 1]
        if bends[str(j)] == "U":
            gap = _row_gap_edge(spec, str(j), above=True)
            s_j = [p for p in lam if state.bit(("v", p, gap))]
            ell_plus = sum(1 for p in s_j if p > lam_sig)
            total += ell_plus - n
        else:
            gap = _row_gap_edge(spec, str(j) + "b", above=False)
            s_jb = [p for p in lam if state.bit(("v", p, gap))]
            ell_plus = sum(1 for p in s_jb if p > lam_sig)
            total += ell_plus - j + 1
    if family == "BC":
        # central row: the unbarred-row convention counts parts weakly below
        lam_sig = lam[w.sigma[n - 1] - 1]
        gap = _row_gap_edge(spec, str(n), above=True)
        s_n = [p for p in lam if state.bit(("v", p, gap))]
        ell_minus = sum(1 for p in s_n if p <= lam_sig)
        total += -ell_minus + 1
    return total


# ---------------------------------------------------------------------------
# global checks


def character_theorem_check(family: str, lam) -> dict:
    """Z(lambda) == i^{|mu|} Z(rho) chi_mu under the character weights."""
    lam = check_strict_partition(lam)
    n = len(lam)
    rho = tuple(range(n, 0, -1))
    mu = tuple(a - b for a, b in zip(lam, rho))
    scheme = make_character(family, n)
    z_lam = partition_function(build_model(family, list(lam)), scheme)
    z_rho = partition_function(build_model(family, list(rho)), scheme)
    chi = family_character(family, n, mu)
    rhs = LaurentPoly.const(gpow_i(sum(mu))) * z_rho * chi
    ok = z_lam == rhs
    return {"ok": ok, "z": z_lam, "rhs": rhs, "chi": chi,
            "diff": None if ok else z_lam - rhs}


def tokuyama_check(lam) -> dict:
    """The type-A anchor: Z == x^rho prod(1 + t x_j/x_i) s_mu, t symbolic."""
    lam = check_strict_partition(lam)
    n = len(lam)
    rho = tuple(range(n, 0, -1))
    mu = tuple(a - b for a, b in zip(lam, rho))
    z = partition_function(build_model("A", list(lam)), make_tokuyama(n))
    t = LaurentPoly.term(1, [(Var.qshared(), 2)])
    rhs = _x_monomial(tuple(2 * r for r in rho))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rhs = rhs * (ONE + t * LaurentPoly.term(1, [(Var.x(j), 2), (Var.x(i), -2)]))
    rhs = rhs * schur(n, mu)
    ok = z == rhs

    # t = -1 collapses to the classical alternant: q -> i is exact
    z_at = z.substitute({Var.qshared(): LaurentPoly.const(GInt(0, 1))})
    delta = tuple(2 * (n - 1 - j) for j in range(n))
    alpha = tuple(2 * m + d for m, d in zip(mu, delta))
    denom_identity = _x_monomial((2,) * n) * alternant_sym(n, alpha)
    ok_weyl = z_at == denom_identity
    return {"ok": ok and ok_weyl, "symbolic_ok": ok, "t_minus_one_ok": ok_weyl,
            "z": z, "rhs": rhs}
