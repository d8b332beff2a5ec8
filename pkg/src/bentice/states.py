"""Admissible-state enumeration and partition functions.

One backtracking engine serves both full lattice models and the small
local diagrams used by the relation checks.  A graph is a list of units
(tetravalent vertices, u-turn bends, corner joints, and strand crossings
for the local diagrams), each listing its edges together with a polarity
bit: polarity True means "edge bit True points into this unit".

Admissibility is local: a vertex needs two arrows in and two out, the
degree-two units need one each.  Enumeration fills units in a fixed order
(bends and rightmost columns first, which prunes hardest), trying local
configurations in a fixed sequence, so the resulting state list is
deterministic and stable across runs.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterable, Optional

from .laurent import LaurentPoly
from .models import ModelSpec, build_model

DEFAULT_MAX_N = 4
DEFAULT_MAX_COLS = 8

# vertex kind -> orientation bits in N,E,S,W order (True = up / east)
VERTEX_CONFIGS = {
    "a1": (False, True, False, True),
    "a2": (True, False, True, False),
    "b1": (True, True, True, True),
    "b2": (False, False, False, False),
    "c1": (False, True, True, False),
    "c2": (True, False, False, True),
}
KIND_ORDER = ("a1", "a2", "b1", "b2", "c1", "c2")

_INSET_TO_KIND = {
    frozenset({"N", "W"}): "a1",
    frozenset({"S", "E"}): "a2",
    frozenset({"S", "W"}): "b1",
    frozenset({"N", "E"}): "b2",
    frozenset({"N", "S"}): "c1",
    frozenset({"E", "W"}): "c2",
}


class EnumerationCapError(RuntimeError):
    """Raised instead of silently attempting a too-large enumeration."""


@dataclass(frozen=True)
class Unit:
    """One local constraint: a vertex, bend, corner, or crossing.

    ``edges`` pairs each edge id with its polarity; ``configs`` is the
    tuple of admissible local assignments (bit per edge, in edge order),
    and ``tags`` names each config (vertex kind, U/D, R/L, crossing
    in-set) for weighting.
    """

    kind: str
    label: tuple
    edges: tuple          # ((edge_id, polarity_bool), ...)
    configs: tuple        # ((bit, ...), ...)
    tags: tuple


def vertex_unit(row, col, n_edge, e_edge, s_edge, w_edge) -> Unit:
    edges = ((n_edge, False), (e_edge, False), (s_edge, True), (w_edge, True))
    configs = tuple(VERTEX_CONFIGS[k] for k in KIND_ORDER)
    return Unit("vertex", (row, col), edges, configs, KIND_ORDER)


def bend_unit(row, top_edge, bottom_edge) -> Unit:
    # both edges point east into the bend when their bit is True
    return Unit("bend", (row,), ((top_edge, True), (bottom_edge, True)),
                ((True, False), (False, True)), ("D", "U"))


def corner_unit(h_edge, v_edge) -> Unit:
    # horizontal-in/vertical-out is R, the reverse is L
    return Unit("corner", (), ((h_edge, True), (v_edge, True)),
                ((True, False), (False, True)), ("R", "L"))


CROSS_INSETS = (
    frozenset({"NW", "SW"}), frozenset({"NE", "SE"}),
    frozenset({"SW", "NE"}), frozenset({"NW", "SE"}),
    frozenset({"NW", "NE"}), frozenset({"SW", "SE"}),
)


def cross_unit(j, k, nw, ne, sw, se) -> Unit:
    """Crossing of strands j (enters NW, leaves SE) and k (SW to NE)."""
    ports = ("NW", "NE", "SW", "SE")
    polarity = {"NW": True, "SW": True, "NE": False, "SE": False}
    edges = tuple((e, polarity[p]) for p, e in zip(ports, (nw, ne, sw, se)))
    configs = []
    for inset in CROSS_INSETS:
        bits = tuple((p in inset) == polarity[p] for p in ports)
        configs.append(bits)
    return Unit("cross", (j, k), edges, tuple(configs), CROSS_INSETS)


@dataclass(frozen=True)
class Graph:
    units: tuple
    fixed: dict            # EdgeId -> bool
    edges: tuple


def make_graph(units: Iterable[Unit], fixed: dict) -> Graph:
    units = tuple(units)
    edge_set = set(fixed)
    for u in units:
        edge_set.update(e for e, _ in u.edges)
    return Graph(units=units, fixed=dict(fixed),
                 edges=tuple(sorted(edge_set, key=repr)))


def enumerate_orientations(graph: Graph):
    """Yield every total orientation consistent with all units, depth first."""
    units = graph.units
    n_units = len(units)
    assignment = dict(graph.fixed)

    def dfs(i: int):
        if i == n_units:
            yield dict(assignment)
            return
        unit = units[i]
        for bits in unit.configs:
            touched = []
            ok = True
            for (edge, _pol), bit in zip(unit.edges, bits):
                cur = assignment.get(edge)
                if cur is None:
                    assignment[edge] = bit
                    touched.append(edge)
                elif cur != bit:
                    ok = False
                    break
            if ok:
                yield from dfs(i + 1)
            for edge in touched:
                del assignment[edge]

    yield from dfs(0)


def unit_tag(unit: Unit, orientation: dict) -> object:
    bits = tuple(orientation[e] for e, _ in unit.edges)
    for cfg, tag in zip(unit.configs, unit.tags):
        if cfg == bits:
            return tag
    raise ValueError(f"orientation not admissible at {unit.kind}{unit.label}")


# ---------------------------------------------------------------------------
# full models


@dataclass(frozen=True)
class IceState:
    """One admissible orientation of a model, with derived vertex kinds."""

    spec: ModelSpec
    orientation: tuple     # bits aligned with spec.edges

    def bit(self, edge) -> bool:
        return self.orientation[self._index()[edge]]

    def _index(self):
        key = (self.spec.family, self.spec.lam)
        cache = _EDGE_INDEX.get(key)
        if cache is None or len(cache) != len(self.spec.edges):
            cache = {e: i for i, e in enumerate(self.spec.edges)}
            _EDGE_INDEX[key] = cache
        return cache

    def vertex_kinds(self) -> dict:
        """Map (row, col) -> kind for every tetravalent vertex."""
        out = {}
        for v in self.spec.vertices:
            inset = set()
            if not self.bit(v.n_edge):
                inset.add("N")
            if not self.bit(v.e_edge):
                inset.add("E")
            if self.bit(v.s_edge):
                inset.add("S")
            if self.bit(v.w_edge):
                inset.add("W")
            out[v.vid] = _INSET_TO_KIND[frozenset(inset)]
        return out

    def bend_dirs(self) -> dict:
        """Map unbarred row label -> 'U' or 'D'."""
        out = {}
        for b in self.spec.bends:
            out[b.row] = "D" if self.bit(b.top_edge) else "U"
        return out

    def corner_dir(self) -> Optional[str]:
        c = self.spec.corner
        if c is None:
            return None
        return "R" if self.bit(c.h_edge) else "L"

    def to_json(self) -> dict:
        return {
            "family": self.spec.family,
            "lambda": list(self.spec.lam),
            "edges": {f"{e[0]}:{e[1]}:{e[2]}": bool(b)
                      for e, b in zip(self.spec.edges, self.orientation)},
            "kinds": {f"{r}:{c}": k for (r, c), k in sorted(self.vertex_kinds().items())},
            "bends": self.bend_dirs(),
            "corner": self.corner_dir(),
        }


_EDGE_INDEX: dict = {}


def _caps_from_env():
    max_n = int(os.environ.get("BENTICE_MAX_N", DEFAULT_MAX_N))
    max_cols = int(os.environ.get("BENTICE_MAX_COLS", DEFAULT_MAX_COLS))
    return max_n, max_cols


def model_units(spec: ModelSpec) -> list:
    """Units in enumeration order: bends/corner, then columns right to left."""
    units = [bend_unit(b.row, b.top_edge, b.bottom_edge) for b in spec.bends]
    if spec.corner is not None:
        units.append(corner_unit(spec.corner.h_edge, spec.corner.v_edge))
    xpos = {col: i for i, col in enumerate(spec.full_cols)}
    if spec.half_col is not None:
        xpos[spec.half_col] = len(spec.full_cols)
    row_pos = {r: i for i, r in enumerate(spec.rows)}
    for v in sorted(spec.vertices, key=lambda v: (-xpos[v.col], row_pos[v.row])):
        units.append(vertex_unit(v.row, v.col, v.n_edge, v.e_edge, v.s_edge, v.w_edge))
    return units


def enumerate_states(spec: ModelSpec, max_n: int = None, max_cols: int = None) -> list:
    """All admissible states, complete and in a stable deterministic order."""
    env_n, env_cols = _caps_from_env()
    max_n = env_n if max_n is None else max_n
    max_cols = env_cols if max_cols is None else max_cols
    if spec.n > max_n or spec.lam[0] > max_cols:
        raise EnumerationCapError(
            f"model {spec.family}^{list(spec.lam)} exceeds caps n<={max_n}, lambda_1<={max_cols}")
    graph = make_graph(model_units(spec), spec.boundary)
    index = {e: i for i, e in enumerate(spec.edges)}
    states = []
    for orientation in enumerate_orientations(graph):
        bits = [False] * len(spec.edges)
        for e, b in orientation.items():
            bits[index[e]] = b
        states.append(IceState(spec=spec, orientation=tuple(bits)))
    return states


def state_weight(state: IceState, scheme) -> LaurentPoly:
    """Product of Boltzmann weights over all vertices, bends, and corner."""
    total = LaurentPoly.const(1)
    kinds = state.vertex_kinds()
    for (row, col), kind in sorted(kinds.items()):
        w = scheme.vertex_weight(kind, row)
        if w is None:
            raise KeyError(f"scheme has no weight for kind {kind} in row {row}")
        total = total * w
        if total.is_zero():
            return total
    for row, direction in sorted(state.bend_dirs().items()):
        total = total * (scheme.bend_down[row] if direction == "D" else scheme.bend_up[row])
    cd = state.corner_dir()
    if cd == "R":
        total = total * scheme.corner_r
    elif cd == "L":
        total = total * scheme.corner_l
    return total


def partition_function(spec: ModelSpec, scheme, states=None) -> LaurentPoly:
    """Sum of state weights; associative merge, order independent."""
    if states is None:
        states = enumerate_states(spec)
    total = LaurentPoly.zero()
    for s in states:
        total = total + state_weight(s, scheme)
    return total


def state_count(family: str, lam) -> int:
    return len(enumerate_states(build_model(family, lam)))


# ---------------------------------------------------------------------------
# exports


def state_json(state: IceState) -> str:
    return json.dumps(state.to_json(), indent=2)


def state_tikz(state: IceState) -> str:
    """TikZ in the style of the figures: arrow tips at edge midpoints."""
    spec = state.spec
    xof = {col: i + 1.0 for i, col in enumerate(spec.full_cols)}
    if spec.half_col is not None:
        xof[spec.half_col] = len(spec.full_cols) + 1.0
    yof = {row: float(len(spec.rows) - i) for i, row in enumerate(spec.rows)}
    lines = ["\\begin{tikzpicture}[scale=.75]"]
    for row in spec.rows:
        lines.append(f"\\node [label=left:${_row_tex(row)}$] at ({0.0},{yof[row]}) {{}};")
    for col in spec.full_cols:
        lines.append(f"\\node [label=above:${col}$] at ({xof[col]},{len(spec.rows) + 0.5}) {{}};")
    if spec.half_col is not None:
        lines.append(
            f"\\node [label=above:${spec.half_col}$] at ({xof[spec.half_col]},{len(spec.rows) + 0.5}) {{}};")

    def tip_h(bit):
        return ">" if bit else "<"

    def tip_v(bit):
        return "<" if bit else ">"   # path is drawn downward; up-arrow is a back-tip

    for v in spec.vertices:
        x, y = xof[v.col], yof[v.row]
        w, e = state.bit(v.w_edge), state.bit(v.e_edge)
        n, s = state.bit(v.n_edge), state.bit(v.s_edge)
        lines.append(f"\\draw [{tip_h(w)}-{tip_h(e)}] ({x - 0.5},{y}) -- ({x + 0.5},{y});")
        lines.append(f"\\draw [{tip_v(n)}-{tip_v(s)}] ({x},{y + 0.5}) -- ({x},{y - 0.5});")
    for b in spec.bends:
        yt, yb = yof[b.row], yof[b.row + "b"]
        x = max(xof.values()) + 0.5
        r = (yt - yb) / 2
        tag = "D" if state.bit(b.top_edge) else "U"
        lines.append(f"% bend {b.row}: {tag}")
        lines.append(f"\\draw ({x},{yt}) arc (90:-90:{r});")
    if spec.corner is not None:
        tag = state.corner_dir()
        lines.append(f"% corner: {tag}")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)


def _row_tex(row: str) -> str:
    return f"\\overline{{{row[:-1]}}}" if row.endswith("b") else row
