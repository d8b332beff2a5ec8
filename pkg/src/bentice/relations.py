"""Local relation checks: exhaustive verification over boundary fillings.

Each check builds the two sides of a local identity as tiny unit graphs
(crossings, six-vertex cells, bends, corners), enumerates every interior
filling for every assignment of the free boundary arrows with the same
engine that drives full models, and compares exact polynomials.

A crossing of strands j (entering top-left, leaving bottom-right) and k
carries the interpolating weights

    in at NW,SW:  a1(k) a2(j) + b1(j) b2(k)
    in at NE,SE:  a1(j) a2(k) + b1(k) b2(j)
    in at SW,NE:  c1(j) c2(k)
    in at NW,SE:  c1(k) c2(j)
    in at NW,NE:  a1(j) b2(k) - a1(k) b2(j)
    in at SW,SE:  a2(j) b1(k) - a2(k) b1(j)

which satisfy the star-triangle identity exactly when both rows are
free-fermionic.  Verdicts are exact polynomial statements; a failing
assignment is reported as a witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .laurent import GI, LaurentPoly
from .states import (
    bend_unit, corner_unit, cross_unit, enumerate_orientations, make_graph,
    unit_tag, vertex_unit,
)
from .weights import WeightScheme

ONE = LaurentPoly.const(1)
I = LaurentPoly.const(GI)


@dataclass
class LocalWeights:
    """Weight lookups for local diagrams, independent of full models."""

    row: Callable[[str], dict]
    bend_up: Callable[[str], LaurentPoly]
    bend_down: Callable[[str], LaurentPoly]
    corner_r: Optional[LaurentPoly] = None
    corner_l: Optional[LaurentPoly] = None

    @staticmethod
    def from_scheme(scheme: WeightScheme) -> "LocalWeights":
        return LocalWeights(
            row=scheme.row_weights,
            bend_up=lambda r: scheme.bend_up[r],
            bend_down=lambda r: scheme.bend_down[r],
            corner_r=scheme.corner_r,
            corner_l=scheme.corner_l,
        )

    @staticmethod
    def from_rows(rows: dict, bend_up=None, bend_down=None,
                  corner_r=None, corner_l=None) -> "LocalWeights":
        ups = bend_up or {}
        downs = bend_down or {}
        return LocalWeights(
            row=lambda r: rows[r],
            bend_up=lambda r: ups.get(r, ONE),
            bend_down=lambda r: downs.get(r, ONE),
            corner_r=corner_r, corner_l=corner_l,
        )


def cross_weights(wj: dict, wk: dict) -> dict:
    return {
        frozenset({"NW", "SW"}): wk["a1"] * wj["a2"] + wj["b1"] * wk["b2"],
        frozenset({"NE", "SE"}): wj["a1"] * wk["a2"] + wk["b1"] * wj["b2"],
        frozenset({"SW", "NE"}): wj["c1"] * wk["c2"],
        frozenset({"NW", "SE"}): wk["c1"] * wj["c2"],
        frozenset({"NW", "NE"}): wj["a1"] * wk["b2"] - wk["a1"] * wj["b2"],
        frozenset({"SW", "SE"}): wj["a2"] * wk["b1"] - wk["a2"] * wj["b1"],
    }


def local_z(units, fixed: dict, w: LocalWeights) -> LaurentPoly:
    """Partition function of a local diagram with the given fixed arrows."""
    graph = make_graph(units, fixed)
    total = LaurentPoly.zero()
    for orientation in enumerate_orientations(graph):
        weight = ONE
        for u in graph.units:
            tag = unit_tag(u, orientation)
            if u.kind == "vertex":
                weight = weight * w.row(u.label[0])[tag]
            elif u.kind == "bend":
                weight = weight * (w.bend_down(u.label[0]) if tag == "D"
                                   else w.bend_up(u.label[0]))
            elif u.kind == "corner":
                weight = weight * (w.corner_r if tag == "R" else w.corner_l)
            else:  # cross
                j, k = u.label
                weight = weight * cross_weights(w.row(j), w.row(k))[tag]
        total = total + weight
    return total


@dataclass
class Verdict:
    ok: bool
    checked: int = 0
    witness: Optional[dict] = None
    ratio: Optional[LaurentPoly] = None
    closed_form_ok: Optional[bool] = None
    per_assignment: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "witness": self.witness,
            "ratio": self.ratio.to_latex() if self.ratio is not None else None,
            "closed_form_ok": self.closed_form_ok,
        }


def _assignments(names):
    for bits in itertools.product([False, True], repeat=len(names)):
        yield dict(zip(names, bits))


# ---------------------------------------------------------------------------
# star-triangle identity


def ybe_check(wj: dict, wk: dict, bend_up=None, bend_down=None) -> Verdict:
    """Compare both sides of the crossing identity on all 64 boundaries."""
    weights = LocalWeights.from_rows({"j": wj, "k": wk})
    lhs_units = [
        cross_unit("j", "k", nw="al", ne="top", sw="be", se="bot"),
        vertex_unit("k", 0, n_edge="phi", e_edge="eps", s_edge="mid", w_edge="top"),
        vertex_unit("j", 0, n_edge="mid", e_edge="del", s_edge="gam", w_edge="bot"),
    ]
    rhs_units = [
        vertex_unit("j", 0, n_edge="phi", e_edge="t2", s_edge="mid", w_edge="al"),
        vertex_unit("k", 0, n_edge="mid", e_edge="b2", s_edge="gam", w_edge="be"),
        cross_unit("j", "k", nw="t2", ne="eps", sw="b2", se="del"),
    ]
    names = ("al", "be", "gam", "del", "eps", "phi")
    verdict = Verdict(ok=True)
    for fixed in _assignments(names):
        zl = local_z(lhs_units, fixed, weights)
        zr = local_z(rhs_units, fixed, weights)
        verdict.checked += 1
        equal = zl == zr
        verdict.per_assignment.append({"assignment": dict(fixed), "equal": equal})
        if not equal and verdict.witness is None:
            verdict.ok = False
            verdict.witness = dict(fixed)
    return verdict


# ---------------------------------------------------------------------------
# the identity along the bend


def bend_ybe_check(scheme: WeightScheme, j: int, k: int) -> Verdict:
    w = LocalWeights.from_scheme(scheme)
    jl, kl = str(j), str(k)
    jb, kb = jl + "b", kl + "b"
    lhs_units = [
        cross_unit(jl, kl, nw="A", ne="E1", sw="B", se="E2"),
        bend_unit(kl, top_edge="E1", bottom_edge="D"),
        bend_unit(jl, top_edge="E2", bottom_edge="C"),
    ]
    rhs_units = [
        cross_unit(jb, kb, nw="C", ne="F1", sw="D", se="F2"),
        bend_unit(jl, top_edge="A", bottom_edge="F2"),
        bend_unit(kl, top_edge="B", bottom_edge="F1"),
    ]
    names = ("A", "B", "C", "D")
    verdict = Verdict(ok=True)
    for fixed in _assignments(names):
        zl = local_z(lhs_units, fixed, w)
        zr = local_z(rhs_units, fixed, w)
        verdict.checked += 1
        equal = zl == zr
        verdict.per_assignment.append({"assignment": dict(fixed), "equal": equal})
        if not equal and verdict.witness is None:
            verdict.ok = False
            verdict.witness = dict(fixed)
    return verdict


# ---------------------------------------------------------------------------
# fish relations: one twist absorbed into a bend


def _fish_sides(scheme: WeightScheme, j: int, variant: str):
    w = LocalWeights.from_scheme(scheme)
    jl, jb = str(j), str(j) + "b"
    if variant == "B":
        lhs_units = [
            cross_unit(jb, jl, nw="A", ne="E1", sw="B", se="E2"),
            bend_unit(jl, top_edge="E1", bottom_edge="E2"),
        ]
        rhs_units = [bend_unit(jb, top_edge="A", bottom_edge="B")]
        names, lhs_fixed, rhs_fixed = ("A", "B"), {}, {}
    elif variant in ("Cstar_D_no1", "D_with1"):
        top_bit = variant == "D_with1"   # half-column top edge: out iff 1 in lambda
        lhs_units = [
            cross_unit(jb, jl, nw="A", ne="E1", sw="B", se="E2"),
            vertex_unit(jb, 0, n_edge="HN", e_edge="E3", s_edge="G", w_edge="E2"),
            bend_unit(jl, top_edge="E1", bottom_edge="E3"),
        ]
        rhs_units = [
            vertex_unit(jl, 0, n_edge="HN", e_edge="E4", s_edge="G", w_edge="B"),
            bend_unit(jb, top_edge="A", bottom_edge="E4"),
        ]
        names = ("A", "B", "G")
        lhs_fixed = rhs_fixed = {"HN": top_bit}
    else:
        raise ValueError(f"unknown fish variant {variant!r}")
    return w, lhs_units, rhs_units, names, lhs_fixed, rhs_fixed


def fish_closed_form(scheme: WeightScheme, j: int, variant: str) -> LaurentPoly:
    r = scheme.row_weights(str(j))
    if variant == "B":
        return (r["a1"] - I * r["b2"]) * (r["a2"] + I * r["b1"])
    if variant == "Cstar_D_no1":
        return r["a2"] * r["a2"] + r["b1"] * r["b1"]
    return r["a1"] * r["a1"] + r["b2"] * r["b2"]


def fish_check(scheme: WeightScheme, j: int, variant: str) -> Verdict:
    """Ratio of twisted diagram to bare bend: constant, with a closed form."""
    _require_bends(scheme, j)
    w, lhs_units, rhs_units, names, lf, rf = _fish_sides(scheme, j, variant)
    return _ratio_verdict(w, lhs_units, rhs_units, names, lf, rf,
                          fish_closed_form(scheme, j, variant))


# ---------------------------------------------------------------------------
# jellyfish relations: a twist through the central row and the bend


def _jellyfish_sides(scheme: WeightScheme, j: int, variant: str):
    w = LocalWeights.from_scheme(scheme)
    jl, jb = str(j), str(j) + "b"
    if variant == "C":
        star = "0"
        lhs_units = [
            cross_unit(jb, star, nw="A", ne="M1", sw="B", se="M2"),
            cross_unit(jb, jl, nw="M2", ne="M3", sw="G", se="M4"),
            cross_unit(star, jl, nw="M1", ne="M5", sw="M3", se="M6"),
            corner_unit(h_edge="M6", v_edge="V1"),
            vertex_unit(jb, 0, n_edge="V1", e_edge="M7", s_edge="D", w_edge="M4"),
            bend_unit(jl, top_edge="M5", bottom_edge="M7"),
        ]
        rhs_units = [
            corner_unit(h_edge="B", v_edge="V2"),
            vertex_unit(jl, 0, n_edge="V2", e_edge="E8", s_edge="D", w_edge="G"),
            bend_unit(jb, top_edge="A", bottom_edge="E8"),
        ]
        names = ("A", "B", "G", "D")
        lhs_fixed = rhs_fixed = {}
    elif variant in ("Bstar", "BC"):
        star = "0" if variant == "Bstar" else str(scheme.n)
        inward = variant == "Bstar"      # Bstar central row: west in, east out
        lhs_units = [
            cross_unit(jb, star, nw="A", ne="M1", sw="MW", se="M2"),
            cross_unit(jb, jl, nw="M2", ne="M3", sw="G", se="M4"),
            cross_unit(star, jl, nw="M1", ne="M5", sw="M3", se="M6"),
            bend_unit(jl, top_edge="M5", bottom_edge="M4"),
        ]
        rhs_units = [bend_unit(jb, top_edge="A", bottom_edge="G")]
        names = ("A", "G")
        lhs_fixed = {"MW": inward, "M6": inward}
        rhs_fixed = {}
    else:
        raise ValueError(f"unknown jellyfish variant {variant!r}")
    return w, lhs_units, rhs_units, names, lhs_fixed, rhs_fixed


def jellyfish_closed_form(scheme: WeightScheme, j: int, variant: str) -> LaurentPoly:
    r = scheme.row_weights(str(j))
    star = "0" if variant in ("C", "Bstar") else str(scheme.n)
    a0 = scheme.vertex_weight("a1", star)
    b0 = scheme.vertex_weight("b1", star)
    pair = (a0 * r["a2"] + r["b1"] * b0) * (r["a1"] * a0 + b0 * r["b2"])
    if variant == "C":
        return (r["a1"] - I * r["b2"]) * (r["a2"] + I * r["b1"]) * pair
    if variant == "Bstar":
        return pair * (r["a1"] * r["a1"] + r["b2"] * r["b2"])
    return pair * (r["a2"] * r["a2"] + r["b1"] * r["b1"])


def jellyfish_check(scheme: WeightScheme, j: int, variant: str) -> Verdict:
    _require_bends(scheme, j)
    w, lhs_units, rhs_units, names, lf, rf = _jellyfish_sides(scheme, j, variant)
    return _ratio_verdict(w, lhs_units, rhs_units, names, lf, rf,
                          jellyfish_closed_form(scheme, j, variant))


# ---------------------------------------------------------------------------
# caduceus


def caduceus_check(scheme: WeightScheme, j: int) -> Verdict:
    """Three-strand braid identity over all 256 boundary assignments."""
    w = LocalWeights.from_scheme(scheme)
    jl, jb = str(j), str(j) + "b"
    star = "0" if scheme.family in ("Bstar", "C") else str(scheme.n)
    lhs_units = [
        cross_unit(jb, star, nw="A", ne="M1", sw="B", se="M2"),
        cross_unit(jb, jl, nw="M2", ne="M3", sw="G", se="M4"),
        cross_unit(star, jl, nw="M1", ne="M5", sw="M3", se="M6"),
        vertex_unit(jl, 0, n_edge="L", e_edge="K", s_edge="C1", w_edge="M5"),
        vertex_unit(star, 0, n_edge="C1", e_edge="F", s_edge="C2", w_edge="M6"),
        vertex_unit(jb, 0, n_edge="C2", e_edge="E", s_edge="D", w_edge="M4"),
    ]
    rhs_units = [
        vertex_unit(jb, 0, n_edge="L", e_edge="P1", s_edge="C1", w_edge="A"),
        vertex_unit(star, 0, n_edge="C1", e_edge="P2", s_edge="C2", w_edge="B"),
        vertex_unit(jl, 0, n_edge="C2", e_edge="P3", s_edge="D", w_edge="G"),
        cross_unit(jb, star, nw="P1", ne="P4", sw="P2", se="P5"),
        cross_unit(jb, jl, nw="P5", ne="P6", sw="P3", se="E"),
        cross_unit(star, jl, nw="P4", ne="K", sw="P6", se="F"),
    ]
    names = ("A", "B", "G", "D", "E", "F", "K", "L")
    verdict = Verdict(ok=True)
    for fixed in _assignments(names):
        zl = local_z(lhs_units, fixed, w)
        zr = local_z(rhs_units, fixed, w)
        verdict.checked += 1
        if zl != zr and verdict.witness is None:
            verdict.ok = False
            verdict.witness = dict(fixed)
    return verdict


# ---------------------------------------------------------------------------
# shared helpers


def _require_bends(scheme: WeightScheme, j: int):
    for r in (str(j), str(j) + "b"):
        if scheme.bend_up.get(r) is None or scheme.bend_up[r].is_zero():
            raise ValueError(f"U^({r}) must be nonzero")
        if scheme.bend_down.get(r) is None or scheme.bend_down[r].is_zero():
            raise ValueError(f"D^({r}) must be nonzero")


def _ratio_verdict(w, lhs_units, rhs_units, names, lhs_fixed, rhs_fixed,
                   closed_form: LaurentPoly) -> Verdict:
    """Constancy via cross-multiplication, then closed-form comparison."""
    verdict = Verdict(ok=True)
    sides = []
    for fixed in _assignments(names):
        zl = local_z(lhs_units, {**fixed, **lhs_fixed}, w)
        zr = local_z(rhs_units, {**fixed, **rhs_fixed}, w)
        if zl.is_zero() and zr.is_zero():
            continue
        sides.append((dict(fixed), zl, zr))
    verdict.checked = len(sides)
    for (f1, l1, r1), (f2, l2, r2) in itertools.combinations(sides, 2):
        if l1 * r2 != l2 * r1:
            verdict.ok = False
            verdict.witness = {"first": f1, "second": f2}
            break
    if verdict.ok and sides:
        _, l1, r1 = sides[0]
        verdict.ratio = l1.exact_divide(r1) if not r1.is_zero() else None
        verdict.closed_form_ok = all(l == closed_form * r for _, l, r in sides)
    return verdict
