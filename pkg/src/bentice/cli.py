"""Batch command-line surface with machine-readable reports.

Every invocation prints one JSON report

    {"verb": ..., "inputs": ..., "verdict": ..., "data": ..., "elapsed_ms": ...}

and exits 0 on pass, 2 on verification failure, 3 on input errors, and 4
when the enumeration caps would be exceeded.  Reports are byte-identical
across runs for a fixed seed, up to the elapsed_ms field.

Caps default to n <= 4 and lambda_1 <= 8 and can be widened per run with
--max-n/--max-cols or the BENTICE_MAX_N / BENTICE_MAX_COLS environment
variables.  --workers fans independent subcases (only present with
--family all) over a process pool; results are merged in a fixed order so
the report does not depend on scheduling.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .asm import bijection_check, matrix_text, okada_stats, state_to_matrix
from .characters import character_theorem_check, family_character, tokuyama_check
from .identities import (
    BENT_FAMILIES, DivisibilityError, divisibility_check, okada_product_check,
    quotient_symmetry_check, rho_check,
)
from .models import FAMILIES, ModelError, build_model
from .relations import (
    bend_ybe_check, caduceus_check, fish_check, jellyfish_check, ybe_check,
)
from .states import (
    EnumerationCapError, enumerate_states, partition_function, state_tikz,
)
from .weights import make_scheme

EXIT_PASS = 0
EXIT_FAIL = 2
EXIT_INPUT = 3
EXIT_CAP = 4

FISH_VARIANTS = {"B": "B", "Cstar": "Cstar_D_no1", "D": "D_with1"}
JELLY_VARIANTS = {"C": "C", "Bstar": "Bstar", "BC": "BC"}


class InputError(ValueError):
    pass


def _parse_partition(text):
    if not text:
        raise InputError("--lambda is required: comma-separated strictly decreasing parts")
    try:
        parts = [int(p) for p in text.split(",") if p != ""]
    except ValueError:
        raise InputError(f"cannot parse partition {text!r}") from None
    if any(a <= b for a, b in zip(parts, parts[1:])) or (parts and parts[-1] < 1):
        raise InputError(
            f"partition {text!r} must be strictly decreasing with smallest part >= 1")
    if not parts:
        raise InputError("partition must be nonempty")
    return parts


def _need(args, name):
    value = getattr(args, name.strip("-").replace("-", "_"), None)
    if value is None:
        raise InputError(f"--{name} is required for this verb")
    return value


def _families(args):
    fam = _need(args, "family")
    if fam == "all":
        return list(BENT_FAMILIES)
    if fam not in FAMILIES:
        raise InputError(f"unknown family {fam!r}; choose from {FAMILIES} or 'all'")
    return [fam]


def _pool_map(fn, items, workers):
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


# one top-level worker per parallel verb so the pool can pickle it
def _rho_case(case):
    family, n, regime = case
    return family, regime, rho_check(family, n, regime)["ok"]


def _okada_case(case):
    family, n = case
    return family, okada_product_check(family, n)["ok"]


def run(args) -> tuple:
    """Dispatch one parsed invocation; returns (verdict, data)."""
    verb = args.verb
    if verb == "enumerate":
        fam = _families(args)[0]
        lam = _parse_partition(_need(args, "lambda"))
        states = enumerate_states(build_model(fam, lam), args.max_n, args.max_cols)
        if args.emit == "count":
            return None, {"count": len(states)}
        if args.emit == "tikz":
            return None, {"count": len(states),
                          "tikz": [state_tikz(s) for s in states]}
        return None, {"count": len(states), "states": [s.to_json() for s in states]}

    if verb == "partition":
        fam = _families(args)[0]
        lam = _parse_partition(_need(args, "lambda"))
        scheme = make_scheme(args.scheme or "deformation", fam, len(lam))
        spec = build_model(fam, lam)
        states = enumerate_states(spec, args.max_n, args.max_cols)
        z = partition_function(spec, scheme, states=states)
        data = {"scheme": scheme.name, "states": len(states)}
        if args.emit == "latex":
            data["z"] = z.to_latex()
        else:
            data["z"] = z.to_json()
        return None, data

    if verb == "asm":
        fam = _families(args)[0]
        lam = _parse_partition(_need(args, "lambda"))
        spec = build_model(fam, lam)
        states = enumerate_states(spec, args.max_n, args.max_cols)
        matrices = [state_to_matrix(s) for s in states]
        data = {"count": len(matrices)}
        if args.emit == "text":
            data["matrices"] = [matrix_text(m) for m in matrices]
        else:
            data["matrices"] = [[list(row) for row in m] for m in matrices]
        rho = list(range(len(lam), 0, -1))
        if fam == "B" and lam == rho:
            data["stats"] = [okada_stats(m).to_json() for m in matrices]
        return None, data

    if verb == "character":
        fam = _families(args)[0]
        mu = [int(p) for p in _need(args, "mu").split(",")]
        chi = family_character(fam, len(mu), mu)
        data = {"mu": mu}
        data["chi"] = chi.to_latex() if args.emit == "latex" else chi.to_json()
        return None, data

    if verb == "verify":
        return _verify(args)

    raise InputError(f"unknown verb {verb!r}")


def _verify(args) -> tuple:
    check = args.check
    workers = args.workers

    if check == "ybe":
        fam = _families(args)[0]
        scheme = make_scheme(args.scheme or "deformation", fam, 2)
        v = ybe_check(scheme.row_weights("1"), scheme.row_weights("2"))
        return v.ok, {"checked": v.checked, "witness": v.witness}

    if check == "bend":
        fam = _families(args)[0]
        scheme = make_scheme(args.scheme or "generic", fam, 2)
        v = bend_ybe_check(scheme, 1, 2)
        return v.ok, {"checked": v.checked, "witness": v.witness}

    if check == "fish":
        fam = _families(args)[0]
        if fam not in FISH_VARIANTS:
            raise InputError(f"fish variants exist for families {sorted(FISH_VARIANTS)}")
        scheme = make_scheme(args.scheme or "generic", fam, 1)
        v = fish_check(scheme, 1, FISH_VARIANTS[fam])
        return v.ok and bool(v.closed_form_ok), v.to_json()

    if check == "jellyfish":
        fam = _families(args)[0]
        if fam not in JELLY_VARIANTS:
            raise InputError(f"jellyfish variants exist for families {sorted(JELLY_VARIANTS)}")
        n = 2 if fam == "BC" else 1
        scheme = make_scheme(args.scheme or "generic", fam, n)
        v = jellyfish_check(scheme, 1, JELLY_VARIANTS[fam])
        return v.ok and bool(v.closed_form_ok), v.to_json()

    if check == "caduceus":
        fam = _families(args)[0]
        if fam not in ("Bstar", "C", "BC"):
            raise InputError("caduceus needs a central row: families Bstar, C, BC")
        n = 2 if fam == "BC" else 1
        scheme = make_scheme(args.scheme or "generic", fam, n)
        v = caduceus_check(scheme, 1)
        return v.ok, {"checked": v.checked, "witness": v.witness}

    if check == "divisibility":
        fam = _families(args)[0]
        lam = _parse_partition(_need(args, "lambda"))
        regime = args.scheme or "deformation"
        try:
            q = divisibility_check(fam, lam, regime, seed=args.seed)
        except DivisibilityError as exc:
            return False, {"error": str(exc)}
        sym = quotient_symmetry_check(q, fam, len(lam), regime)
        return sym["ok"], {"quotient": q.to_latex(), "symmetry": sym}

    if check == "rho":
        n = args.n or 2
        fams = _families(args)
        cases = [(f, n, regime) for f in fams for regime in ("generic", "deformation")]
        results = _pool_map(_rho_case, cases, workers)
        data = {f"{f}:{regime}": ok for f, regime, ok in results}
        return all(data.values()), data

    if check == "okada":
        n = args.n or 2
        fams = [f for f in _families(args)]
        results = _pool_map(_okada_case, [(f, n) for f in fams], workers)
        data = {f: ok for f, ok in results}
        return all(data.values()), data

    if check == "bijection":
        n = args.n or 2
        fam = args.family or "B"
        r = bijection_check(fam, n)
        return r["ok"], {"checked": r["checked"]}

    if check == "character":
        fam = _families(args)[0]
        lam = _parse_partition(_need(args, "lambda"))
        r = character_theorem_check(fam, lam)
        return r["ok"], {"chi": r["chi"].to_latex()}

    if check == "tokuyama":
        lam = _parse_partition(_need(args, "lambda"))
        r = tokuyama_check(lam)
        return r["ok"], {"symbolic_ok": r["symbolic_ok"],
                         "t_minus_one_ok": r["t_minus_one_ok"]}

    raise InputError(f"unknown verification {check!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bentice", description=__doc__)
    sub = parser.add_subparsers(dest="verb")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", help="A, B, Bstar, C, Cstar, D, BC, or all")
    common.add_argument("--lambda", dest="lam", help="comma-separated strict partition")
    common.add_argument("--mu", help="comma-separated dominant weight")
    common.add_argument("--scheme", help="generic, deformation, okada, character, tokuyama")
    common.add_argument("--emit", default="json",
                        choices=["json", "latex", "tikz", "count", "text"])
    common.add_argument("--n", type=int, help="rank for rho/okada/bijection checks")
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--max-cols", type=int, default=None)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    for verb in ("enumerate", "partition", "asm", "character"):
        sub.add_parser(verb, parents=[common])
    verify = sub.add_parser("verify", parents=[common])
    verify.add_argument("check", choices=[
        "ybe", "bend", "fish", "jellyfish", "caduceus", "divisibility",
        "rho", "okada", "bijection", "character", "tokuyama"])
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0,) else 0
    if args.verb is None:
        build_parser().print_usage()
        return EXIT_INPUT
    # expose --lambda under the name the verbs use
    setattr(args, "lambda", getattr(args, "lam", None))
    started = time.monotonic()
    try:
        verdict, data = run(args)
    except (InputError, ModelError, ValueError) as exc:
        report = {"verb": args.verb, "error": str(exc)}
        print(json.dumps(report, indent=2))
        return EXIT_INPUT
    except EnumerationCapError as exc:
        report = {"verb": args.verb, "error": str(exc)}
        print(json.dumps(report, indent=2))
        return EXIT_CAP
    elapsed = int((time.monotonic() - started) * 1000)
    inputs = {
        "family": args.family, "lambda": getattr(args, "lambda"),
        "mu": args.mu, "scheme": args.scheme, "emit": args.emit,
        "n": args.n, "seed": args.seed, "workers": args.workers,
    }
    report = {
        "verb": args.verb if args.verb != "verify" else f"verify {args.check}",
        "inputs": {k: v for k, v in inputs.items() if v is not None},
        "verdict": None if verdict is None else ("pass" if verdict else "fail"),
        "data": data,
        "elapsed_ms": elapsed,
    }
    print(json.dumps(report, indent=2))
    if verdict is False:
        return EXIT_FAIL
    return EXIT_PASS


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
