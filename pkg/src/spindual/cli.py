"""Batch command-line front end with machine-readable JSON output.

Subcommands: ``classify``, ``decompose``, ``representative``, ``fpk``,
``invert``.  Each invocation reads at most one self-describing JSON
document (file path or ``-`` for stdin) and writes one result envelope.
Complex numbers are ``[re, im]`` pairs throughout; floats are printed with
17 significant digits so identical inputs produce byte-identical output.

Exit codes: 0 success, 2 malformed input, 3 internal contract violation,
4 diagnosed infeasibility.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .algebra import CONVENTIONS
from .bilinears import BilinearSet, bilinears, transformed_bilinears
from .classify import ZeroPolicy, extended_class, lounesto_class, zero_pattern
from .duals import DualCoefficients
from .fierz import check_fpk
from .multivector import Multivector, matrix_of, multivector_of
from .reconstruct import invert as invert_bilinears
from .representatives import TARGETS, representative, verify_representative

SCHEMA = "spindual/1"


class InputError(Exception):
    """Malformed input document; maps to exit code 2."""


class InfeasibleError(Exception):
    """Diagnosed recipe infeasibility; maps to exit code 4."""


# ---------------------------------------------------------------- encoding

def _fmt_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError("non-finite value in output")
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(float(x), ".17g")


def _encode(obj) -> str:
    """Canonical JSON with fixed float formatting (17 significant digits)."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return f"[{_fmt_float(obj.real)}, {_fmt_float(obj.imag)}]"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = obj.tolist() if isinstance(obj, np.ndarray) else list(obj)
        return "[" + ", ".join(_encode(v) for v in seq) + "]"
    raise TypeError(f"cannot encode {type(obj)!r}")


def _complex_out(z: complex):
    return complex(z)


def _vector_out(v: np.ndarray):
    return [complex(z) for z in np.asarray(v).ravel()]


def _bilinears_out(B: BilinearSet) -> dict:
    return {
        "phi": _complex_out(B.phi),
        "theta": _complex_out(B.theta),
        "u": _vector_out(B.u),
        "s": _vector_out(B.s),
        "m": _vector_out(B.m_pairs()),
        "sigma": _vector_out(
            np.array([B.sigma[a, b] for a, b in ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1))])
        ),
    }


def _envelope(command: str, payload: dict, residuals: dict) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "conventions": CONVENTIONS.fingerprint(),
        "payload": payload,
        "residuals": residuals,
    }


# ---------------------------------------------------------------- decoding

def _load_document(path: str) -> dict:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read input document: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON (line {exc.lineno}, column {exc.colno})") from exc
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    return doc


def _parse_complex(value, where: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(x, (int, float)) for x in value)
    ):
        z = complex(value[0], value[1])
    else:
        raise InputError(f"field {where!r} must be a number or an [re, im] pair")
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise InputError(f"field {where!r} must be finite")
    return z


def _parse_cvector(value, where: str, length: int) -> np.ndarray:
    if not isinstance(value, list) or len(value) != length:
        raise InputError(f"field {where!r} must be a list of {length} complex entries")
    return np.array([_parse_complex(v, f"{where}[{i}]") for i, v in enumerate(value)])


def _parse_spinor(doc: dict) -> np.ndarray:
    rec = doc.get("spinor")
    if not isinstance(rec, dict) or "components" not in rec:
        raise InputError("document must contain spinor.components")
    return _parse_cvector(rec["components"], "spinor.components", 4)


def _parse_dual(rec, where: str = "dual") -> DualCoefficients:
    if not isinstance(rec, dict):
        raise InputError(f"field {where!r} must be an object")
    kw = {}
    for name, default in (("a", 0.0), ("b", 0.0), ("c", 1.0), ("d", 1.0), ("e", 1.0)):
        kw[name] = _parse_complex(rec.get(name, default), f"{where}.{name}")
    kw["v"] = _parse_cvector(rec.get("v", [0.0] * 4), f"{where}.v", 4)
    kw["n"] = _parse_cvector(rec.get("n", [0.0] * 4), f"{where}.n", 4)
    kw["h"] = _parse_cvector(rec.get("h", [0.0] * 6), f"{where}.h", 6)
    return DualCoefficients(**kw)


def _parse_bilinears(doc: dict) -> BilinearSet:
    rec = doc.get("bilinears")
    if not isinstance(rec, dict):
        raise InputError("document must contain a bilinears object")
    for key in ("phi", "theta", "u", "s", "m"):
        if key not in rec:
            raise InputError(f"bilinears.{key} is missing")
    from .multivector import pairs_to_tensor

    return BilinearSet(
        _parse_complex(rec["phi"], "bilinears.phi"),
        _parse_complex(rec["theta"], "bilinears.theta"),
        _parse_cvector(rec["u"], "bilinears.u", 4),
        _parse_cvector(rec["s"], "bilinears.s", 4),
        pairs_to_tensor(_parse_cvector(rec["m"], "bilinears.m", 6)),
    )


def _parse_policy(doc: dict, args) -> ZeroPolicy:
    policy = ZeroPolicy()
    rec = doc.get("policy") if isinstance(doc, dict) else None
    if isinstance(rec, dict):
        policy = ZeroPolicy(
            abs_floor=float(rec.get("abs_floor", policy.abs_floor)),
            rel_factor=float(rec.get("rel_factor", policy.rel_factor)),
        )
    if args.policy_abs is not None:
        policy = ZeroPolicy(abs_floor=args.policy_abs, rel_factor=policy.rel_factor)
    if args.policy_rel is not None:
        policy = ZeroPolicy(abs_floor=policy.abs_floor, rel_factor=args.policy_rel)
    return policy


# ---------------------------------------------------------------- commands

def _cmd_classify(args) -> dict:
    doc = _load_document(args.input)
    psi = _parse_spinor(doc)
    policy = _parse_policy(doc, args)
    dirac = bilinears(psi)
    seed_fpk = check_fpk(dirac)

    payload = {
        "policy": {"abs_floor": policy.abs_floor, "rel_factor": policy.rel_factor},
        "dirac_bilinears": _bilinears_out(dirac),
        "seed_fpk": dict(seed_fpk.residuals),
    }
    residuals = {"seed_fpk_max": seed_fpk.max_residual}

    if "dual" in doc:
        dual = _parse_dual(doc["dual"])
        first = bilinears(psi, dual.to_multivector())
        closed = transformed_bilinears(dirac, dual)
        deviation = max(
            abs(first.phi - closed.phi),
            abs(first.theta - closed.theta),
            float(np.abs(first.u - closed.u).max()),
            float(np.abs(first.s - closed.s).max()),
            float(np.abs(first.m - closed.m).max()),
        )
        target = first
        payload["generalized_bilinears"] = _bilinears_out(first)
        residuals["route_deviation"] = float(deviation)
    else:
        target = dirac

    payload["zero_pattern"] = dict(
        zip(("phi", "theta", "u", "s", "m"), zero_pattern(target, policy))
    )
    payload["standard_class"] = lounesto_class(target, policy)
    payload["extended_class"] = extended_class(target, policy)
    payload["seed_fpk_passes"] = seed_fpk.passes
    return _envelope("classify", payload, residuals)


def _cmd_decompose(args) -> dict:
    doc = _load_document(args.input)
    if args.direction == "to-multivector":
        rec = doc.get("matrix")
        if not isinstance(rec, list) or len(rec) != 4:
            raise InputError("document must contain a 4x4 matrix field")
        rows = [_parse_cvector(row, f"matrix[{i}]", 4) for i, row in enumerate(rec)]
        D = np.stack(rows)
        mv = multivector_of(D)
        round_trip = float(np.abs(matrix_of(mv) - D).max())
        comps = np.concatenate(
            [[mv.scalar, mv.pseudoscalar], mv.vector, mv.pseudovector, mv.bivector]
        )
        payload = {
            "multivector": {
                "scalar": _complex_out(mv.scalar),
                "pseudoscalar": _complex_out(mv.pseudoscalar),
                "vector": _vector_out(mv.vector),
                "pseudovector": _vector_out(mv.pseudovector),
                "bivector": _vector_out(mv.bivector),
            },
            "all_real": bool(np.abs(comps.imag).max() <= 1e-12),
        }
        if not payload["all_real"]:
            payload["warning"] = "non-real coefficients: matrix is not self-adjoint under gamma^0"
        return _envelope(
            "decompose", payload, {"round_trip": round_trip, "max_imag": float(np.abs(comps.imag).max())}
        )

    rec = doc.get("multivector")
    if not isinstance(rec, dict):
        raise InputError("document must contain a multivector object")
    mv = Multivector(
        scalar=_parse_complex(rec.get("scalar", 0.0), "multivector.scalar"),
        pseudoscalar=_parse_complex(rec.get("pseudoscalar", 0.0), "multivector.pseudoscalar"),
        vector=_parse_cvector(rec.get("vector", [0.0] * 4), "multivector.vector", 4),
        pseudovector=_parse_cvector(rec.get("pseudovector", [0.0] * 4), "multivector.pseudovector", 4),
        bivector=_parse_cvector(rec.get("bivector", [0.0] * 6), "multivector.bivector", 6),
    )
    D = matrix_of(mv)
    mv2 = multivector_of(D)
    round_trip = float(np.abs(matrix_of(mv2) - D).max())
    payload = {"matrix": [_vector_out(D[i]) for i in range(4)]}
    return _envelope("decompose", payload, {"round_trip": round_trip})


def _cmd_representative(args) -> dict:
    if args.target not in TARGETS:
        raise InputError(
            f"unknown class label {args.target!r}; valid labels: {', '.join(TARGETS)}"
        )
    try:
        rep = representative(args.target)
    except AssertionError as exc:  # construction invariant failed
        raise InfeasibleError(str(exc)) from exc
    result = verify_representative(rep)
    payload = {
        "target": rep.target,
        "achieved": rep.achieved,
        "route": rep.route,
        "evaluation_block": rep.block,
        "seed": {"components": _vector_out(rep.seed)},
        "dual": {
            "a": _complex_out(rep.dual.a),
            "b": _complex_out(rep.dual.b),
            "c": _complex_out(rep.dual.c),
            "d": _complex_out(rep.dual.d),
            "e": _complex_out(rep.dual.e),
            "v": _vector_out(rep.dual.v),
            "n": _vector_out(rep.dual.n),
            "h": _vector_out(rep.dual.h),
        },
        "modifications": [m.describe() for m in rep.modifications],
        "redefinitions": list(rep.redefinitions),
        "fpk_consistent_modification": rep.fpk_consistent_modification,
        "bilinears": _bilinears_out(rep.bilinear_set),
        "verified": result.ok,
        "notes": rep.notes,
    }
    residuals = {
        "seed_fpk_max": result.seed_fpk.max_residual,
        "modified_fpk_max": result.modified_fpk_max_residual,
    }
    if result.first_principles_deviation is not None:
        residuals["route_deviation"] = result.first_principles_deviation
    return _envelope("representative", payload, residuals)


def _cmd_fpk(args) -> dict:
    doc = _load_document(args.input)
    B = _parse_bilinears(doc)
    tol = float(doc.get("tol", 1e-10))
    report = check_fpk(B, tol=tol)
    payload = {
        "passes": report.passes,
        "tol": tol,
        "identities": dict(report.residuals),
        "worst_identity": report.worst_identity(),
    }
    return _envelope("fpk", payload, {"max_residual": report.max_residual})


def _cmd_invert(args) -> dict:
    doc = _load_document(args.input)
    B = _parse_bilinears(doc)
    try:
        psi = invert_bilinears(B)
    except ValueError as exc:
        raise InfeasibleError(str(exc)) from exc
    B2 = bilinears(psi)
    residual = max(
        abs(B.phi - B2.phi),
        abs(B.theta - B2.theta),
        float(np.abs(B.u - B2.u).max()),
        float(np.abs(B.s - B2.s).max()),
        float(np.abs(B.m - B2.m).max()),
    )
    payload = {"spinor": {"components": _vector_out(psi)}}
    return _envelope("invert", payload, {"bilinear_round_trip": float(residual)})


# ---------------------------------------------------------------- wiring

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spindual",
        description="Bilinear covariants, Fierz checks, extended spinor classes and "
        "dual-structure tools over the spacetime Clifford algebra.",
    )
    parser.add_argument("--policy-abs", type=float, default=None, help="zero-policy absolute floor")
    parser.add_argument("--policy-rel", type=float, default=None, help="zero-policy relative factor")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized searches (reserved; current recipes are closed-form)")
    parser.add_argument("--output", default=None, help="write the result envelope to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a spinor, optionally under a general dual")
    p.add_argument("input", nargs="?", default="-", help="JSON document (default: stdin)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("decompose", help="convert between 4x4 matrices and multivector coefficients")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--direction", choices=("to-multivector", "to-matrix"), default="to-multivector")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("representative", help="construct a representative of an extended class")
    p.add_argument("target", help="class label, e.g. 2 or 4.1")
    p.set_defaults(func=_cmd_representative)

    p = sub.add_parser("fpk", help="evaluate the Fierz identities on a bilinear set")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=_cmd_fpk)

    p = sub.add_parser("invert", help="recover a spinor from a Fierz-consistent bilinear set")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=_cmd_invert)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        envelope = args.func(args)
        text = _encode(envelope) + "\n"
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 4
    except Exception as exc:  # noqa: BLE001 - contract violations surface as exit 3
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
