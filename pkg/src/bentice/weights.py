"""The Boltzmann weight regimes and their structural constraints.

Four built-in schemes share one shape: an entry table (kind, row) -> value,
u-turn weights per bend row, and corner weights for the C family.

* generic: free symbols a1,a2,b1,b2 per unbarred row, c2 normalized to 1,
  c1 forced to a1*a2 + b1*b2 so the free-fermion condition holds
  identically; barred rows filled in by the first symmetry assumption.
* deformation: a1=a2=1, b1 = i*t_j*x_j, b2 = i*t_j/x_j, c1 = 1 - t_j^2,
  with t_j carried as q_j^2.
* okada: the deformation weights with one shared t, where four families
  take t_j = i*sqrt(t); sqrt(t) is the shared q variable.
* character: the deformation weights at t_j = 1, killing c1 everywhere
  (and the corner L weight in family C).

Bend weights follow the summary table: U = 1, R = 1 everywhere, D = i in
families B and C and 1 elsewhere, L = a0 - i*b0 in family C.  Overrides
exist so the necessity direction of each local relation can be probed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .laurent import GI, LaurentPoly, Var
from .models import FAMILIES, ModelSpec, bar

ONE = LaurentPoly.const(1)
ZERO = LaurentPoly.zero()
I = LaurentPoly.const(GI)

KINDS = ("a1", "a2", "b1", "b2", "c1", "c2")

TABLE_BEND_DOWN = {"B": I, "Bstar": ONE, "C": I, "Cstar": ONE, "D": ONE, "BC": ONE}


def regular_row_count(family: str, n: int) -> int:
    """Number of bend row pairs (j, jb)."""
    return n - 1 if family == "BC" else n


def central_label(family: str, n: int) -> Optional[str]:
    if family in ("Bstar", "C"):
        return "0"
    if family == "BC":
        return str(n)
    return None


@dataclass(frozen=True)
class WeightScheme:
    name: str
    family: str
    n: int
    vertex: Mapping               # (kind, row label) -> LaurentPoly
    bend_up: Mapping = field(default_factory=dict)      # row label -> weight
    bend_down: Mapping = field(default_factory=dict)
    corner_r: Optional[LaurentPoly] = None
    corner_l: Optional[LaurentPoly] = None

    def vertex_weight(self, kind: str, row: str) -> Optional[LaurentPoly]:
        return self.vertex.get((kind, row))

    def row_weights(self, row: str) -> dict:
        return {k: self.vertex[(k, row)] for k in KINDS if (k, row) in self.vertex}

    def delta(self, row: str) -> LaurentPoly:
        w = self.row_weights(row)
        return w["a1"] * w["a2"] + w["b1"] * w["b2"] - w["c1"] * w["c2"]

    def rows(self) -> list:
        return sorted({r for _, r in self.vertex})

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "family": self.family,
            "n": self.n,
            "vertex": {f"{k}:{r}": self.vertex[(k, r)].to_json()
                       for k, r in sorted(self.vertex)},
            "bend_up": {r: w.to_json() for r, w in sorted(self.bend_up.items())},
            "bend_down": {r: w.to_json() for r, w in sorted(self.bend_down.items())},
            "corner_r": self.corner_r.to_json() if self.corner_r is not None else None,
            "corner_l": self.corner_l.to_json() if self.corner_l is not None else None,
        }


def _with_barred_rows(entries: dict, m: int) -> dict:
    """Fill barred-row entries from the symmetry assumption."""
    for j in range(1, m + 1):
        r, rb = str(j), str(j) + "b"
        entries[("a1", rb)] = entries[("a2", r)]
        entries[("a2", rb)] = entries[("a1", r)]
        entries[("b1", rb)] = entries[("b2", r)]
        entries[("b2", rb)] = entries[("b1", r)]
        entries[("c1", rb)] = entries[("c1", r)]
        entries[("c2", rb)] = entries[("c2", r)]
    return entries


def _bend_maps(family: str, n: int, bend_down_override=None, bend_up_override=None):
    m = regular_row_count(family, n)
    up, down = {}, {}
    default_down = TABLE_BEND_DOWN.get(family, ONE)
    for j in range(1, m + 1):
        for r in (str(j), str(j) + "b"):
            up[r] = ONE
            down[r] = default_down
    for src, dst in ((bend_up_override, up), (bend_down_override, down)):
        if src is None:
            continue
        if isinstance(src, LaurentPoly):
            for r in dst:
                dst[r] = src
        else:
            for r, w in src.items():
                dst[r] = w
                if bar(r) not in src:
                    dst[bar(r)] = w
    return up, down


def _scheme(name, family, n, entries, central_ab=None,
            bend_down_override=None, bend_up_override=None, corner_l_override=None):
    up, down = _bend_maps(family, n, bend_down_override, bend_up_override)
    corner_r = corner_l = None
    if family == "C":
        a0, b0 = central_ab
        corner_r = ONE
        corner_l = (a0 - I * b0) if corner_l_override is None else corner_l_override
    return WeightScheme(name=name, family=family, n=n, vertex=entries,
                        bend_up=up, bend_down=down,
                        corner_r=corner_r, corner_l=corner_l)


def make_generic(family: str, n: int, bend_down_override=None,
                 bend_up_override=None, corner_l_override=None) -> WeightScheme:
    """Free-fermion weights with independent symbols per unbarred row."""
    _check(family, n)
    m = regular_row_count(family, n)
    entries: dict = {}
    for j in range(1, m + 1):
        r = str(j)
        a1, a2 = LaurentPoly.var(Var.a1(j)), LaurentPoly.var(Var.a2(j))
        b1, b2 = LaurentPoly.var(Var.b1(j)), LaurentPoly.var(Var.b2(j))
        entries[("a1", r)] = a1
        entries[("a2", r)] = a2
        entries[("b1", r)] = b1
        entries[("b2", r)] = b2
        entries[("c1", r)] = a1 * a2 + b1 * b2
        entries[("c2", r)] = ONE
    _with_barred_rows(entries, m)
    central_ab = None
    c = central_label(family, n)
    if c is not None:
        idx = 0 if c == "0" else n
        a0, b0 = LaurentPoly.var(Var.a0(idx)), LaurentPoly.var(Var.b0(idx))
        central_ab = (a0, b0)
        for k, w in (("a1", a0), ("a2", a0), ("b1", b0), ("b2", b0),
                     ("c1", a0 * a0 + b0 * b0), ("c2", ONE)):
            entries[(k, c)] = w
    return _scheme("generic", family, n, entries, central_ab,
                   bend_down_override, bend_up_override, corner_l_override)


def _deformation_entries(family, n, tj, central_t, central_x):
    """Shared builder: tj(j) gives the t-value polynomial of row j."""
    m = regular_row_count(family, n)
    entries: dict = {}
    for j in range(1, m + 1):
        r = str(j)
        t = tj(j)
        xj = LaurentPoly.term(1, [(Var.x(j), 2)])
        xj_inv = LaurentPoly.term(1, [(Var.x(j), -2)])
        entries[("a1", r)] = ONE
        entries[("a2", r)] = ONE
        entries[("b1", r)] = I * t * xj
        entries[("b2", r)] = I * t * xj_inv
        entries[("c1", r)] = ONE - t * t
        entries[("c2", r)] = ONE
    _with_barred_rows(entries, m)
    central_ab = None
    c = central_label(family, n)
    if c is not None:
        t, x = central_t, central_x
        a0, b0 = ONE, I * t * x
        central_ab = (a0, b0)
        for k, w in (("a1", a0), ("a2", a0), ("b1", b0), ("b2", b0),
                     ("c1", ONE - t * t * x * x), ("c2", ONE)):
            entries[(k, c)] = w
    return entries, central_ab


def make_deformation(family: str, n: int, **overrides) -> WeightScheme:
    """Row parameters t_j (as q_j^2) and x_j; the workhorse regime."""
    _check(family, n)
    star = 0 if central_label(family, n) == "0" else n

    def tj(j):
        return LaurentPoly.term(1, [(Var.q(j), 2)])

    entries, central_ab = _deformation_entries(
        family, n, tj,
        central_t=LaurentPoly.term(1, [(Var.q(star), 2)]),
        central_x=LaurentPoly.term(1, [(Var.x(star), 2)]))
    return _scheme("deformation", family, n, entries, central_ab, **overrides)


def make_okada(family: str, n: int, **overrides) -> WeightScheme:
    """One shared t; families Bstar, Cstar, D, BC take t_j = i*sqrt(t).

    sqrt(t) is the shared q variable, so per-state weights stay in the
    ring; partition functions come out in even powers of q, i.e. in t.
    """
    _check(family, n)
    if family == "A":
        raise ValueError("family A has no okada weights")
    q = LaurentPoly.var(Var.qshared())
    if family in ("B", "C"):
        t_row = q * q
    else:
        t_row = I * q
    central_x = {"Bstar": ONE, "C": -ONE, "BC": ONE}.get(family)
    entries, central_ab = _deformation_entries(
        family, n, lambda j: t_row, central_t=t_row, central_x=central_x)
    return _scheme("okada", family, n, entries, central_ab, **overrides)


def make_character(family: str, n: int, **overrides) -> WeightScheme:
    """Deformation weights at every t_j = 1; c1 vanishes identically."""
    _check(family, n)
    central_x = {"Bstar": ONE, "C": -ONE, "BC": ONE}.get(family)
    entries, central_ab = _deformation_entries(
        family, n, lambda j: ONE, central_t=ONE, central_x=central_x)
    return _scheme("character", family, n, entries, central_ab, **overrides)


def make_tokuyama(n: int) -> WeightScheme:
    """Type-A weights whose partition function deforms the Weyl formula.

    Row j carries a1 = 1, a2 = b2 = c2 = x_j, b1 = t, c1 = 1 + t with the
    shared t = q^2; the free-fermion condition holds identically.
    """
    t = LaurentPoly.term(1, [(Var.qshared(), 2)])
    entries = {}
    for j in range(1, n + 1):
        r = str(j)
        xj = LaurentPoly.term(1, [(Var.x(j), 2)])
        entries[("a1", r)] = ONE
        entries[("a2", r)] = xj
        entries[("b1", r)] = t
        entries[("b2", r)] = xj
        entries[("c1", r)] = ONE + t
        entries[("c2", r)] = xj
    return WeightScheme(name="tokuyama", family="A", n=n, vertex=entries)


def all_ones_scheme(spec: ModelSpec) -> WeightScheme:
    """Every weight 1: the partition function counts states."""
    entries = {(k, r): ONE for r in spec.rows for k in KINDS}
    up = {r: ONE for b in spec.bends for r in (b.row, b.row + "b")}
    return WeightScheme(name="ones", family=spec.family, n=spec.n,
                        vertex=entries, bend_up=dict(up), bend_down=dict(up),
                        corner_r=ONE, corner_l=ONE)


BUILTIN_SCHEMES = {
    "generic": make_generic,
    "deformation": make_deformation,
    "okada": make_okada,
    "character": make_character,
}


def make_scheme(name: str, family: str, n: int) -> WeightScheme:
    if family == "A":
        if name in ("tokuyama", "deformation"):
            return make_tokuyama(n)
        if name == "generic":
            return make_generic("A", n)
        raise ValueError(f"family A supports tokuyama/generic weights, not {name!r}")
    try:
        return BUILTIN_SCHEMES[name](family, n)
    except KeyError:
        raise ValueError(f"unknown scheme {name!r}") from None


def _check(family: str, n: int):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("n must be at least 1")


def check_scheme(scheme: WeightScheme) -> list:
    """Every violated structural constraint, as human-readable strings."""
    report = []
    m = regular_row_count(scheme.family, scheme.n)
    rows = [str(j) for j in range(1, m + 1)]
    c = central_label(scheme.family, scheme.n)
    for r in rows + ([c] if c else []):
        if not scheme.delta(r).is_zero():
            report.append(f"free-fermion violated in row {r}: delta != 0")
    for j in rows:
        jb = j + "b"
        for a, b in (("a1", "a2"), ("a2", "a1"), ("b1", "b2"), ("b2", "b1"),
                     ("c1", "c1"), ("c2", "c2")):
            if scheme.vertex.get((a, jb)) != scheme.vertex.get((b, j)):
                report.append(f"symmetry-1 violated: {a}^({jb}) != {b}^({j})")
    for j in rows:
        jb = j + "b"
        if j in scheme.bend_up and scheme.bend_up.get(j) != scheme.bend_up.get(jb):
            report.append(f"symmetry-2 violated: U^({j}) != U^({jb})")
        if j in scheme.bend_down and scheme.bend_down.get(j) != scheme.bend_down.get(jb):
            report.append(f"symmetry-2 violated: D^({j}) != D^({jb})")
    if c is not None:
        a0 = scheme.vertex.get(("a1", c))
        b0 = scheme.vertex.get(("b1", c))
        if scheme.vertex.get(("a2", c)) != a0 or scheme.vertex.get(("b2", c)) != b0:
            report.append("central-row degeneracy violated: a1/a2 or b1/b2 differ")
        if scheme.vertex.get(("c1", c)) != a0 * a0 + b0 * b0:
            report.append("central-row degeneracy violated: c1 != a^2 + b^2")
    expected_down = TABLE_BEND_DOWN.get(scheme.family)
    for r, w in scheme.bend_up.items():
        if w != ONE:
            report.append(f"bend convention violated: U^({r}) != 1")
    if expected_down is not None:
        for r, w in scheme.bend_down.items():
            if w != expected_down:
                report.append(f"bend convention violated: D^({r}) != table value")
    if scheme.family == "C":
        if scheme.corner_r != ONE:
            report.append("corner convention violated: R != 1")
        a0 = scheme.vertex.get(("a1", c))
        b0 = scheme.vertex.get(("b1", c))
        if scheme.corner_l != a0 - I * b0:
            report.append("corner convention violated: L != a0 - i b0")
    return report
