"""Command-line front end with a stable JSON matrix format.

Matrices travel as JSON documents ``{"rows": r, "cols": c, "data": [[re, im],
...]}`` with row-major data; ``-`` reads the document from standard input.
Floats are emitted with 17 significant digits so values round-trip
bit-exactly, and output for a fixed command line and seed is byte-identical
run to run.

Exit codes: 0 on success, 1 on a domain error (the error name is echoed in
the ``error`` field), 2 on malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import geodesics, loci, pluecker, schubert, verify
from .angles import stationary_angles
from .core import ChartPoint, GrassmannError, Signature, Tolerance
from .loci import CartanVector
from .schubert import JumpSequence, SchubertSymbol

_ENV_TOL = "GRASSGEO_TOL"


# ---------------------------------------------------------------------------
# deterministic JSON with 17-significant-digit floats

def _emit(obj, out: list[str], indent: int | None, level: int) -> None:
    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    end_pad = "" if indent is None else "\n" + " " * (indent * level)
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        val = float(obj)
        out.append(format(val, ".17g") if math.isfinite(val) else "null")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append("," if indent is None else ",")
            out.append(pad)
            _emit(item, out, indent, level + 1)
        out.append(end_pad + "]")
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(pad)
            out.append(json.dumps(str(key)) + (": " if indent is not None else ":"))
            _emit(value, out, indent, level + 1)
        out.append(end_pad + "}")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, pretty: bool = False) -> str:
    out: list[str] = []
    _emit(obj, out, 2 if pretty else None, 0)
    return "".join(out)


# ---------------------------------------------------------------------------
# matrix documents

def matrix_to_doc(M: np.ndarray) -> dict:
    M = np.asarray(M, dtype=complex)
    return {
        "rows": int(M.shape[0]),
        "cols": int(M.shape[1]),
        "data": [[float(v.real), float(v.imag)] for v in M.ravel()],
    }


def doc_to_matrix(doc: dict) -> np.ndarray:
    try:
        rows, cols, data = int(doc["rows"]), int(doc["cols"]), doc["data"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"matrix document needs rows/cols/data: {exc}") from exc
    if len(data) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
    flat = np.empty(rows * cols, dtype=complex)
    for k, pair in enumerate(data):
        re, im = float(pair[0]), float(pair[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValueError("matrix entries must be finite")
        flat[k] = re + 1j * im
    return flat.reshape(rows, cols)


def _load_doc(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_matrix(path: str) -> np.ndarray:
    return doc_to_matrix(_load_doc(path))


def _parse_ints(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip() != ""]


def _parse_floats(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip() != ""]


# ---------------------------------------------------------------------------
# command bodies

def _cmd_distance(args, sig, tol):
    z1 = ChartPoint(_load_matrix(args.z1), sig)
    z2 = ChartPoint(_load_matrix(args.z2), sig)
    d, spectrum = geodesics.distance(z1, z2)
    return {"d": d, "angles": [float(t) for t in spectrum.theta]}


def _cmd_angles(args, sig, tol):
    z1 = ChartPoint(_load_matrix(args.z1), sig)
    z2 = ChartPoint(_load_matrix(args.z2), sig)
    spectrum = stationary_angles(z1, z2, tol)
    return {"angles": [float(t) for t in spectrum.theta]}


def _cmd_exp(args, sig, tol):
    b = _load_matrix(args.b if args.b else args.json)
    z = geodesics.exp_map(b, args.t, sig)
    return {"z": matrix_to_doc(z.Z)}


def _cmd_log(args, sig, tol):
    z = ChartPoint(_load_matrix(args.z if args.z else args.json), sig)
    return {"b": matrix_to_doc(geodesics.log_map(z))}


def _cmd_pluecker(args, sig, tol):
    f = _load_matrix(args.frame if args.frame else args.json)
    p = pluecker.pluecker_coords(f, tol)
    return {
        "n": p.n,
        "N": p.N,
        "symbols": [list(s) for s in p.index_sets()],
        "coords": [[float(c.real), float(c.imag)] for c in p.coords],
    }


def _cmd_relations(args, sig, tol):
    doc = _load_doc(args.input if args.input else args.json)
    if "coords" in doc:
        coords = np.array([complex(re, im) for re, im in doc["coords"]])
        p = pluecker.PlueckerCoords(int(doc["N"]), int(doc["n"]), coords)
    else:
        p = pluecker.pluecker_coords(doc_to_matrix(doc), tol)
    return {"residual": pluecker.pluecker_relations_residual(p)}


def _cmd_transition(args, sig, tol):
    f = _load_matrix(args.frame if args.frame else args.json)
    sigma = SchubertSymbol(tuple(_parse_ints(args.sigma)))
    return {"z": matrix_to_doc(pluecker.chart_transition(f, sigma, tol))}


def _cmd_overlap(args, sig, tol):
    z1 = ChartPoint(_load_matrix(args.z1), sig)
    z2 = ChartPoint(_load_matrix(args.z2), sig)
    val = geodesics.coherent_overlap(z1, z2)
    return {"overlap": [float(val.real), float(val.imag)]}


def _cmd_diastasis(args, sig, tol):
    z1 = ChartPoint(_load_matrix(args.z1), sig)
    z2 = ChartPoint(_load_matrix(args.z2), sig)
    return {"diastasis": geodesics.diastasis(z1, z2)}


def _cmd_cells(args, sig, tol):
    f = _load_matrix(args.frame if args.frame else args.json)
    symbol, reduced = schubert.echelon_form(f, tol)
    return {
        "sigma": list(symbol.sigma),
        "omega": list(symbol.omega),
        "dimension": symbol.dimension(),
        "echelon": matrix_to_doc(reduced),
    }


def _cmd_schubert_member(args, sig, tol):
    f = _load_matrix(args.frame if args.frame else args.json)
    omega = JumpSequence.from_omega(_parse_ints(args.omega))
    return {"member": schubert.schubert_membership(f, omega, tol)}


def _cmd_stratify(args, sig, tol):
    result = schubert.stratify(args.p, args.n, args.m)
    return {
        "p": result.p,
        "n": result.n,
        "m": result.m,
        "strata": [{"l": s.l, "description": s.description} for s in result.strata],
    }


def _cmd_counts(args, sig, tol):
    binom, cells, euler, poincare = schubert.characteristic_counts(args.n, args.m)
    return {"N_n": binom, "cells": cells, "euler": euler, "poincare": list(poincare)}


def _cmd_cut(args, sig, tol):
    M = _load_matrix(args.input if args.input else args.json)
    target = ChartPoint(M, sig) if args.chart else M
    return {"in_cut_locus": loci.in_cut_locus(target, tol)}


def _cmd_conjugate(args, sig, tol):
    f = _load_matrix(args.frame if args.frame else args.json)
    cls = loci.classify_conjugate(f, tol)
    return {
        "kind": cls.kind.value,
        "zero_angles": cls.zero_angles,
        "right_angles": cls.right_angles,
        "coincidences": cls.coincidences,
    }


def _cmd_conjtimes(args, sig, tol):
    h = CartanVector.normalized(_parse_floats(args.h))
    times = loci.tangent_conjugate_times(h, args.n, args.m, args.lambda_max)
    families: dict[str, list[float]] = {"t1": [], "t2": [], "t3": []}
    for ct in times:
        families[ct.family].append(ct.t)
    return {
        "families": {k: v for k, v in families.items() if v},
        "times": [
            {"t": ct.t, "multiplicity": ct.multiplicity, "family": ct.family}
            for ct in times
        ],
    }


def _cmd_roots_verify(args, sig, tol):
    if args.h:
        h = CartanVector.normalized(_parse_floats(args.h))
    else:
        r = min(args.n, args.m)
        h = CartanVector.normalized([1.0 / (i + 2.0) ** 0.5 for i in range(r)])
    result = loci.restricted_roots_verify(args.n, args.m, h, tol)
    mult = {
        format(k, ".9g"): {"rank": v[0], "expected": v[1]}
        for k, v in sorted(result.multiplicities.items())
    }
    return {
        "ok": result.ok,
        "max_residual": result.max_residual,
        "failures": list(result.failures),
        "multiplicities": mult,
    }


def _cmd_verify_suite(args, sig, tol):
    report = verify.run_suite(seed=args.seed, samples=args.samples)
    print(f"verify-suite: {report.elapsed_s:.2f}s", file=sys.stderr)
    payload = {
        "seed": report.seed,
        "samples": report.samples,
        "all_passed": report.all_passed,
        "properties": [
            {
                "name": p.name,
                "passed": p.passed,
                "worst": p.worst,
                "threshold": p.threshold,
                "detail": p.detail,
            }
            for p in report.properties
        ],
    }
    return payload, (0 if report.all_passed else 1)


_COMMANDS = {
    "distance": _cmd_distance,
    "angles": _cmd_angles,
    "exp": _cmd_exp,
    "log": _cmd_log,
    "pluecker": _cmd_pluecker,
    "relations": _cmd_relations,
    "transition": _cmd_transition,
    "overlap": _cmd_overlap,
    "diastasis": _cmd_diastasis,
    "cells": _cmd_cells,
    "schubert-member": _cmd_schubert_member,
    "stratify": _cmd_stratify,
    "counts": _cmd_counts,
    "cut": _cmd_cut,
    "conjugate": _cmd_conjugate,
    "conjtimes": _cmd_conjtimes,
    "roots-verify": _cmd_roots_verify,
    "verify-suite": _cmd_verify_suite,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--epsilon", choices=["compact", "noncompact"], default="compact")
    common.add_argument("--tol", type=float, default=None,
                        help=f"relative tolerance (default 1e-9, env {_ENV_TOL})")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", default=None, metavar="PATH",
                        help="matrix input path for single-matrix commands ('-' = stdin)")
    common.add_argument("--pretty", action="store_true")

    parser = argparse.ArgumentParser(prog="grassgeo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", parents=[common])
    p.add_argument("z1")
    p.add_argument("z2")
    p = sub.add_parser("angles", parents=[common])
    p.add_argument("z1")
    p.add_argument("z2")
    p = sub.add_parser("exp", parents=[common])
    p.add_argument("b", nargs="?")
    p.add_argument("--t", type=float, default=1.0)
    p = sub.add_parser("log", parents=[common])
    p.add_argument("z", nargs="?")
    p = sub.add_parser("pluecker", parents=[common])
    p.add_argument("frame", nargs="?")
    p = sub.add_parser("relations", parents=[common])
    p.add_argument("input", nargs="?")
    p = sub.add_parser("transition", parents=[common])
    p.add_argument("frame", nargs="?")
    p.add_argument("--sigma", required=True, help="comma-separated pivot columns, 1-based")
    p = sub.add_parser("overlap", parents=[common])
    p.add_argument("z1")
    p.add_argument("z2")
    p = sub.add_parser("diastasis", parents=[common])
    p.add_argument("z1")
    p.add_argument("z2")
    p = sub.add_parser("cells", parents=[common])
    p.add_argument("frame", nargs="?")
    p = sub.add_parser("schubert-member", parents=[common])
    p.add_argument("frame", nargs="?")
    p.add_argument("--omega", required=True, help="comma-separated monotone offsets")
    p = sub.add_parser("stratify", parents=[common])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = sub.add_parser("counts", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = sub.add_parser("cut", parents=[common])
    p.add_argument("input", nargs="?")
    p.add_argument("--chart", action="store_true",
                   help="interpret the matrix as chart coordinates instead of a frame")
    p = sub.add_parser("conjugate", parents=[common])
    p.add_argument("frame", nargs="?")
    p = sub.add_parser("conjtimes", parents=[common])
    p.add_argument("--h", required=True, help="comma-separated flat-direction coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda-max", type=int, default=1, dest="lambda_max")
    p = sub.add_parser("roots-verify", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--h", default=None)
    p = sub.add_parser("verify-suite", parents=[common])
    p.add_argument("--samples", type=int, default=50)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    tol_value = args.tol
    if tol_value is None:
        env = os.environ.get(_ENV_TOL)
        if env is not None:
            try:
                tol_value = float(env)
            except ValueError:
                print(dumps({"error": "BadEnvironment",
                             "message": f"{_ENV_TOL}={env!r} is not a number"}))
                return 2
    tol = Tolerance(rel=tol_value) if tol_value is not None else Tolerance()
    sig = Signature.parse(args.epsilon)

    try:
        outcome = _COMMANDS[args.command](args, sig, tol)
    except GrassmannError as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}, args.pretty))
        return 1
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}, args.pretty))
        return 2

    if isinstance(outcome, tuple):
        payload, code = outcome
    else:
        payload, code = outcome, 0
    print(dumps(payload, args.pretty))
    return code


if __name__ == "__main__":
    sys.exit(main())
