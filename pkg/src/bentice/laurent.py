"""Sparse multivariate Laurent polynomials over the Gaussian integers.

Everything downstream (Boltzmann weights, partition functions, alternants)
is a value of this ring, so arithmetic here is exact by construction: no
floats anywhere, coefficients are pairs of arbitrary-precision integers.

Conventions baked into the representation:

- Variables live in one of two banks, ``generic`` (the a/b weight symbols)
  and ``deformation`` (the x/q spectral parameters).  Mixing banks in one
  polynomial is an error.
- Exponents of ``x`` variables are stored doubled, so the half-integer
  exponents arising from type-B Weyl vectors stay integral.  Rendering
  divides by two.
- ``t`` parameters are never variables themselves: ``t_j`` is carried as
  ``q_j**2`` so that square roots of ``t`` demanded by specializations
  remain inside the ring.  LaTeX rendering folds even ``q`` powers back
  into ``t``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

GENERIC = 0
DEFORMATION = 1

_BANK_NAMES = {GENERIC: "generic", DEFORMATION: "deformation"}

# Symbol ranks fix the global variable enumeration (bank, symbol, index).
_SYM_A0, _SYM_A1, _SYM_A2, _SYM_B0, _SYM_B1, _SYM_B2 = range(6)
_SYM_Q, _SYM_QSHARED, _SYM_X = range(3)


class MixedBankError(ValueError):
    """Raised when arithmetic would combine generic and deformation variables."""


class ZeroDivisorError(ZeroDivisionError):
    """Division by the zero polynomial; distinct from 'not divisible'."""


@dataclass(frozen=True, order=True)
class Var:
    """A named variable with a fixed position in the global ordering."""

    bank: int
    sym: int
    idx: int

    # -- generic bank ------------------------------------------------
    @staticmethod
    def a1(j: int) -> "Var":
        return Var(GENERIC, _SYM_A1, j)

    @staticmethod
    def a2(j: int) -> "Var":
        return Var(GENERIC, _SYM_A2, j)

    @staticmethod
    def b1(j: int) -> "Var":
        return Var(GENERIC, _SYM_B1, j)

    @staticmethod
    def b2(j: int) -> "Var":
        return Var(GENERIC, _SYM_B2, j)

    @staticmethod
    def a0(idx: int = 0) -> "Var":
        """Central-row a symbol (written a^(0), or a^(n) in the BC family)."""
        return Var(GENERIC, _SYM_A0, idx)

    @staticmethod
    def b0(idx: int = 0) -> "Var":
        return Var(GENERIC, _SYM_B0, idx)

    # -- deformation bank --------------------------------------------
    @staticmethod
    def x(j: int) -> "Var":
        return Var(DEFORMATION, _SYM_X, j)

    @staticmethod
    def q(j: int) -> "Var":
        """Formal square root of the row parameter: q_j**2 == t_j."""
        return Var(DEFORMATION, _SYM_Q, j)

    @staticmethod
    def qshared() -> "Var":
        """The single q used when all rows share one t (q**2 == t)."""
        return Var(DEFORMATION, _SYM_QSHARED, 0)

    @property
    def is_x(self) -> bool:
        return self.bank == DEFORMATION and self.sym == _SYM_X

    @property
    def is_q(self) -> bool:
        return self.bank == DEFORMATION and self.sym in (_SYM_Q, _SYM_QSHARED)

    def name(self) -> str:
        if self.bank == GENERIC:
            base = {_SYM_A0: "a", _SYM_A1: "a1", _SYM_A2: "a2",
                    _SYM_B0: "b", _SYM_B1: "b1", _SYM_B2: "b2"}[self.sym]
            return f"{base}_{self.idx}"
        if self.sym == _SYM_X:
            return f"x_{self.idx}"
        if self.sym == _SYM_Q:
            return f"q_{self.idx}"
        return "q"

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return self.name()


@dataclass(frozen=True)
class GInt:
    """Gaussian integer re + im*i with exact arbitrary-precision parts."""

    re: int
    im: int = 0

    def __add__(self, other):
        if not isinstance(other, GInt):
            return NotImplemented
        return GInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, GInt):
            return NotImplemented
        return GInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GInt":
        return GInt(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, GInt):
            return NotImplemented
        return GInt(self.re * other.re - self.im * other.im,
                    self.re * other.im + self.im * other.re)

    def __pow__(self, k: int) -> "GInt":
        if k < 0:
            raise ValueError("negative powers of Gaussian integers are not integral")
        out = GONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return (self.re, self.im) in ((1, 0), (-1, 0), (0, 1), (0, -1))

    def exact_div(self, d: "GInt") -> Optional["GInt"]:
        """self / d when the quotient is again a Gaussian integer, else None."""
        norm = d.re * d.re + d.im * d.im
        if norm == 0:
            raise ZeroDivisorError("division by zero Gaussian integer")
        re = self.re * d.re + self.im * d.im
        im = self.im * d.re - self.re * d.im
        if re % norm or im % norm:
            return None
        return GInt(re // norm, im // norm)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}i"
        return f"({self.re} {sign} {istr})"


GZERO = GInt(0, 0)
GONE = GInt(1, 0)
GI = GInt(0, 1)


@dataclass(frozen=True)
class GRat:
    """Gaussian rational, used only for point evaluation."""

    re: Fraction
    im: Fraction = Fraction(0)

    @staticmethod
    def of(value) -> "GRat":
        if isinstance(value, GRat):
            return value
        if isinstance(value, GInt):
            return GRat(Fraction(value.re), Fraction(value.im))
        if isinstance(value, (int, Fraction)):
            return GRat(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} to GRat")

    def __add__(self, other: "GRat") -> "GRat":
        return GRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GRat") -> "GRat":
        return GRat(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GRat":
        return GRat(-self.re, -self.im)

    def __mul__(self, other: "GRat") -> "GRat":
        return GRat(self.re * other.re - self.im * other.im,
                    self.re * other.im + self.im * other.re)

    def inv(self) -> "GRat":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverting zero Gaussian rational")
        return GRat(self.re / norm, -self.im / norm)

    def __pow__(self, k: int) -> "GRat":
        if k < 0:
            return self.inv() ** (-k)
        out = GRat(Fraction(1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


# A monomial is a tuple of (Var, exponent) pairs, sorted by Var, no zeros.
Monomial = tuple


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        ne = exps.get(v, 0) + e
        if ne:
            exps[v] = ne
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def _mono_pow(m: Monomial, k: int) -> Monomial:
    if k == 0:
        return ()
    return tuple((v, e * k) for v, e in m)


def _mono_divides(d: Monomial, m: Monomial) -> bool:
    exps = dict(m)
    return all(exps.get(v, 0) >= e for v, e in d)


def _mono_div(m: Monomial, d: Monomial) -> Monomial:
    return _mono_mul(m, tuple((v, -e) for v, e in d))


def _mono_cmp(m1: Monomial, m2: Monomial) -> int:
    """Lexicographic comparison over the global variable order."""
    i = j = 0
    while i < len(m1) or j < len(m2):
        if i < len(m1) and (j >= len(m2) or m1[i][0] < m2[j][0]):
            v, e1, e2 = m1[i][0], m1[i][1], 0
            i += 1
        elif j < len(m2) and (i >= len(m1) or m2[j][0] < m1[i][0]):
            v, e1, e2 = m2[j][0], 0, m2[j][1]
            j += 1
        else:
            v, e1, e2 = m1[i][0], m1[i][1], m2[j][1]
            i += 1
            j += 1
        if e1 != e2:
            return 1 if e1 > e2 else -1
    return 0


_mono_key = functools.cmp_to_key(_mono_cmp)

#: public handle for sorting monomials by the global order
monomial_sort_key = _mono_key


def _coerce_coeff(c) -> GInt:
    if isinstance(c, GInt):
        return c
    if isinstance(c, int):
        return GInt(c)
    raise TypeError(f"cannot use {c!r} as a coefficient")


class LaurentPoly:
    """Immutable sparse Laurent polynomial; term map Monomial -> GInt."""

    __slots__ = ("terms", "bank")

    def __init__(self, terms: Mapping[Monomial, GInt]):
        clean = {m: c for m, c in terms.items() if not c.is_zero()}
        bank = None
        for m in clean:
            for v, _ in m:
                if bank is None:
                    bank = v.bank
                elif bank != v.bank:
                    raise MixedBankError(
                        f"monomial mixes {_BANK_NAMES[bank]} and {_BANK_NAMES[v.bank]} variables")
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "bank", bank)

    def __setattr__(self, *args):  # keep values shareable across workers
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({(): _coerce_coeff(c)})

    @staticmethod
    def var(v: Var, exp: int = 1) -> "LaurentPoly":
        if exp == 0:
            return LaurentPoly.const(1)
        return LaurentPoly({((v, exp),): GONE})

    @staticmethod
    def term(c, pairs: Iterable) -> "LaurentPoly":
        mono = tuple(sorted((v, e) for v, e in pairs if e))
        return LaurentPoly({mono: _coerce_coeff(c)})

    # -- ring operations ----------------------------------------------
    def _check_bank(self, other: "LaurentPoly"):
        if self.bank is not None and other.bank is not None and self.bank != other.bank:
            raise MixedBankError(
                f"cannot combine {_BANK_NAMES[self.bank]} and {_BANK_NAMES[other.bank]} polynomials")

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, GInt)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_bank(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, GZERO) + c
            if nc.is_zero():
                out.pop(m, None)
            else:
                out[m] = nc
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_bank(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                nc = out.get(m, GZERO) + c
                if nc.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = nc
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self.terms) == 1:
                m, c = next(iter(self.terms.items()))
                if c.is_unit():
                    return LaurentPoly({_mono_pow(m, k): c ** (-k % 4)})
            raise ValueError("negative power of a non-unit polynomial")
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): GONE}

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def total_degree(self) -> Optional[int]:
        """Max total degree over terms; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e for _, e in m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e for _, e in m) for m in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda it: _mono_key(it[0]))

    def leading(self) -> tuple:
        m = max(self.terms, key=_mono_key)
        return m, self.terms[m]

    def coeff(self, pairs: Iterable) -> GInt:
        mono = tuple(sorted((v, e) for v, e in pairs if e))
        return self.terms.get(mono, GZERO)

    # -- substitution / evaluation --------------------------------------
    def substitute(self, images: Mapping[Var, "LaurentPoly"]) -> "LaurentPoly":
        """Simultaneous substitution of variables by polynomials.

        Images replace one *stored* unit of the variable, so for x
        variables (doubled exponents) the image describes x**(1/2); in
        practice x variables are only ever mapped to monomials in other
        x variables, which keeps the convention consistent.

        A variable that occurs with a negative exponent must map to a
        single-term polynomial with unit coefficient, so the image stays
        in the ring.
        """
        for v in images:
            if any(e < 0 for m in self.terms for w, e in m if w == v):
                img = images[v]
                if len(img.terms) != 1:
                    raise ValueError(
                        f"{v.name()} occurs with negative exponent; image must be a single term")
                _, c = next(iter(img.terms.items()))
                if not c.is_unit():
                    raise ValueError(
                        f"{v.name()} occurs with negative exponent; image coefficient must be a unit")
        out = LaurentPoly.zero()
        for m, c in self.terms.items():
            piece = LaurentPoly.const(c)
            rest = []
            for v, e in m:
                if v in images:
                    piece = piece * (images[v] ** e)
                else:
                    rest.append((v, e))
            piece = piece * LaurentPoly.term(1, rest)
            out = out + piece
        return out

    def evaluate(self, point: Mapping[Var, GRat]) -> GRat:
        """Exact value at a Gaussian-rational point covering all variables."""
        total = GRat(Fraction(0))
        for m, c in self.terms.items():
            val = GRat.of(c)
            for v, e in m:
                if v not in point:
                    raise KeyError(f"no value for {v.name()}")
                base = GRat.of(point[v])
                if e < 0 and base.is_zero():
                    raise ZeroDivisionError(f"{v.name()} = 0 with negative exponent")
                val = val * (base ** e)
            total = total + val
        return total

    # -- division --------------------------------------------------------
    def exact_divide(self, d: "LaurentPoly") -> Optional["LaurentPoly"]:
        """Quotient self/d when d divides exactly, else None.

        Both operands are shifted by monomials to clear negative
        exponents, then single-divisor multivariate division runs under
        the lexicographic order; remainder zero iff divisible (for one
        divisor the leading term of d must divide the leading term of
        the remainder at every step).  The quotient is shifted back, so
        Laurent operands whose cleared forms stay divisible (the case
        for every partition-function factor here) work transparently.
        """
        if d.is_zero():
            raise ZeroDivisorError("division by the zero polynomial")
        if self.is_zero():
            return _ZERO
        self._check_bank(d)

        def neg_clearing(p: "LaurentPoly") -> Monomial:
            all_vars = {v for m in p.terms for v, _ in m}
            monos = [dict(m) for m in p.terms]
            mins = {v: min(m.get(v, 0) for m in monos) for v in all_vars}
            return tuple(sorted((v, -e) for v, e in mins.items() if e < 0))

        mp, md = neg_clearing(self), neg_clearing(d)
        num = {_mono_mul(m, mp): c for m, c in self.terms.items()}
        den = {_mono_mul(m, md): c for m, c in d.terms.items()}

        dlead = max(den, key=_mono_key)
        dlc = den[dlead]
        rem = dict(num)
        quo: dict = {}
        while rem:
            rlead = max(rem, key=_mono_key)
            if not _mono_divides(dlead, rlead):
                return None
            qc = rem[rlead].exact_div(dlc)
            if qc is None:
                return None
            qm = _mono_div(rlead, dlead)
            quo[qm] = qc
            for m, c in den.items():
                key = _mono_mul(m, qm)
                nc = rem.get(key, GZERO) - qc * c
                if nc.is_zero():
                    rem.pop(key, None)
                else:
                    rem[key] = nc
        # undo the clearing shifts: quotient picks up md / mp
        shift = _mono_div(md, mp)
        return LaurentPoly({_mono_mul(m, shift): c for m, c in quo.items()})

    # -- rendering ---------------------------------------------------------
    def to_json(self) -> dict:
        terms = [{"coeff": [c.re, c.im],
                  "monomial": {v.name(): e for v, e in m}}
                 for m, c in self.sorted_terms()]
        return {"exponent_unit": "half", "terms": terms}

    def to_latex(self) -> str:
        """Human rendering: q_j^2 prints as t_j, x exponents halved."""
        if self.is_zero():
            return "0"
        chunks = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in m:
                factors.append(_render_var_power(v, e))
            body = " ".join(f for f in factors if f)
            coeff = _render_coeff(c, bool(body))
            chunks.append((coeff, body))
        out = ""
        for k, (coeff, body) in enumerate(chunks):
            piece = (coeff + " " + body).strip() if body else coeff
            if k == 0:
                out = piece
            elif piece.startswith("-"):
                out += " - " + piece[1:].lstrip()
            else:
                out += " + " + piece
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"LaurentPoly({self.to_latex()})"


def _render_var_power(v: Var, e: int) -> str:
    if v.is_x:
        # stored exponents are doubled
        if e % 2 == 0:
            e = e // 2
            name = f"x_{{{v.idx}}}"
        else:
            return f"x_{{{v.idx}}}^{{{e}/2}}"
    elif v.is_q:
        # even powers of q are powers of t
        label = "t" if v.sym == _SYM_QSHARED else f"t_{{{v.idx}}}"
        if e % 2 == 0:
            e, name = e // 2, label
        else:
            name = "q" if v.sym == _SYM_QSHARED else f"q_{{{v.idx}}}"
    else:
        base = v.name()
        stem, _, idx = base.partition("_")
        name = f"{stem}_{{{idx}}}" if len(stem) == 1 else f"{stem}^{{({idx})}}"
    if e == 1:
        return name
    return f"{name}^{{{e}}}"


def _render_coeff(c: GInt, has_body: bool) -> str:
    s = str(c)
    if has_body:
        if s == "1":
            return ""
        if s == "-1":
            return "-"
    return s


_ZERO = LaurentPoly({})

ONE = LaurentPoly.const(1)
I_POLY = LaurentPoly.const(GI)


def gpow_i(k: int) -> GInt:
    """i**k for any integer k."""
    return (GI ** (k % 4))
