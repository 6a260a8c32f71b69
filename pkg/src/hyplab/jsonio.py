"""JSON schemas for scalars, vectors, matrices, series, plus deterministic emission.

Accepted scalar forms::

    {"e1": [re, im], "e2": [re, im]}      idempotent components
    {"w": [a, b, c, d]}                   a + b*i + c*j + d*k
    {"h": [b1, b2]}                       hyperbolic b1 + k*b2

Vectors: {"dim": n, "e1": [[re, im], ...], "e2": [[re, im], ...]}
Matrices: {"rows": r, "cols": c, "e1": [[[re, im], ...], ...], "e2": ...}
          or the cartesian alternative {"w": [[[a, b, c, d], ...], ...]}
Series: a JSON array of vectors, or
        {"kind": "geometric", "ratio": <scalar>, "seed_vector": <vector>}

Emission always uses idempotent components (cartesian on request) and
prints every float with 17 significant digits, so correctly rounded
platforms produce byte-identical documents.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

import numpy as np

from .dmodule import BCVector, geometric_terms
from .dop import BCMatrix
from .errors import InvalidInput
from .hyperscalar import Bicomplex, DPlus, Hyperbolic


def format_float(x: float) -> str:
    """17-significant-digit decimal, enough to round-trip any double."""
    return format(float(x), ".17g")


def dumps(obj: Any) -> str:
    """Serialize to JSON with deterministic float formatting.

    Dict keys keep insertion order (reports are built with stable field
    order); floats go through :func:`format_float`.
    """
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, dict):
        parts = []
        for k, v in obj.items():
            if not isinstance(k, str):
                raise InvalidInput(f"JSON object keys must be strings, got {k!r}")
            parts.append(json.dumps(k) + ":" + dumps(v))
        return "{" + ",".join(parts) + "}"
    raise InvalidInput(f"cannot serialize {type(obj).__name__}")


def digest(obj: Any) -> str:
    """SHA-256 of the canonical serialization; used as the inputs digest."""
    return hashlib.sha256(dumps(obj).encode("utf-8")).hexdigest()


def _num(x, *, what: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InvalidInput(f"{what}: expected a number, got {x!r}")
    return float(x)


def _pair(x, *, what: str) -> complex:
    if not isinstance(x, (list, tuple)) or len(x) != 2:
        raise InvalidInput(f"{what}: expected [re, im], got {x!r}")
    return complex(_num(x[0], what=what), _num(x[1], what=what))


def parse_scalar(obj) -> Bicomplex:
    """Read a scalar in any accepted form; always returns a Bicomplex."""
    if not isinstance(obj, dict):
        raise InvalidInput(f"scalar must be a JSON object, got {type(obj).__name__}")
    if "e1" in obj and "e2" in obj:
        return Bicomplex(_pair(obj["e1"], what="e1"), _pair(obj["e2"], what="e2"))
    if "w" in obj:
        w = obj["w"]
        if not isinstance(w, (list, tuple)) or len(w) != 4:
            raise InvalidInput(f"cartesian scalar must be [a, b, c, d], got {w!r}")
        return Bicomplex.from_reals(*(_num(v, what="w") for v in w))
    if "h" in obj:
        h = obj["h"]
        if not isinstance(h, (list, tuple)) or len(h) != 2:
            raise InvalidInput(f"hyperbolic scalar must be [b1, b2], got {h!r}")
        return Bicomplex.from_hyperbolic(
            Hyperbolic.from_cartesian(_num(h[0], what="h"), _num(h[1], what="h"))
        )
    raise InvalidInput(f"scalar object needs e1/e2, w, or h keys, got {sorted(obj)}")


def scalar_to_json(z, form: str = "idempotent") -> dict:
    """Emit a Bicomplex or Hyperbolic scalar."""
    if isinstance(z, Hyperbolic):
        z = Bicomplex.from_hyperbolic(z)
    if form == "idempotent":
        return {"e1": [z.z1.real, z.z1.imag], "e2": [z.z2.real, z.z2.imag]}
    if form == "cartesian":
        a, b, c, d = z.to_reals()
        return {"w": [a, b, c, d]}
    raise InvalidInput(f"unknown scalar form {form!r}")


def parse_vector(obj) -> BCVector:
    if not isinstance(obj, dict) or "e1" not in obj or "e2" not in obj:
        raise InvalidInput("vector must be an object with e1 and e2 entry lists")
    for key in ("e1", "e2"):
        if not isinstance(obj[key], (list, tuple)):
            raise InvalidInput(f"vector {key} must be a list of [re, im] pairs")
    v1 = [_pair(e, what="vector e1 entry") for e in obj["e1"]]
    v2 = [_pair(e, what="vector e2 entry") for e in obj["e2"]]
    v = BCVector(v1, v2)
    if "dim" in obj and int(obj["dim"]) != v.dim:
        raise InvalidInput(f"declared dim {obj['dim']} but {v.dim} entries")
    return v


def vector_to_json(v: BCVector) -> dict:
    return {
        "dim": v.dim,
        "e1": [[z.real, z.imag] for z in v.v1],
        "e2": [[z.real, z.imag] for z in v.v2],
    }


def parse_matrix(obj) -> BCMatrix:
    if not isinstance(obj, dict):
        raise InvalidInput("matrix must be a JSON object")
    if "w" in obj:
        rows = obj["w"]
        if not isinstance(rows, (list, tuple)) or not rows:
            raise InvalidInput("cartesian matrix must be a nonempty list of rows")
        m1 = []
        m2 = []
        for row in rows:
            r1 = []
            r2 = []
            for entry in row:
                if not isinstance(entry, (list, tuple)) or len(entry) != 4:
                    raise InvalidInput(f"cartesian entry must be [a, b, c, d], got {entry!r}")
                z = Bicomplex.from_reals(*(_num(v, what="matrix w") for v in entry))
                r1.append(z.z1)
                r2.append(z.z2)
            m1.append(r1)
            m2.append(r2)
        mat = BCMatrix(m1, m2)
    elif "e1" in obj and "e2" in obj:
        m1 = [[_pair(e, what="matrix e1 entry") for e in row] for row in obj["e1"]]
        m2 = [[_pair(e, what="matrix e2 entry") for e in row] for row in obj["e2"]]
        mat = BCMatrix(m1, m2)
    else:
        raise InvalidInput(f"matrix object needs e1/e2 or w keys, got {sorted(obj)}")
    if "rows" in obj and int(obj["rows"]) != mat.rows:
        raise InvalidInput(f"declared rows {obj['rows']} but matrix has {mat.rows}")
    if "cols" in obj and int(obj["cols"]) != mat.cols:
        raise InvalidInput(f"declared cols {obj['cols']} but matrix has {mat.cols}")
    return mat


def matrix_to_json(T: BCMatrix) -> dict:
    return {
        "rows": T.rows,
        "cols": T.cols,
        "e1": [[[z.real, z.imag] for z in row] for row in T.m1],
        "e2": [[[z.real, z.imag] for z in row] for row in T.m2],
    }


def parse_series(obj):
    """An explicit list of vectors, or a generator spec (infinite)."""
    if isinstance(obj, list):
        if not obj:
            raise InvalidInput("series array must be nonempty")
        return [parse_vector(v) for v in obj]
    if isinstance(obj, dict) and obj.get("kind") == "geometric":
        if "ratio" not in obj or "seed_vector" not in obj:
            raise InvalidInput("geometric series spec needs ratio and seed_vector")
        return geometric_terms(parse_scalar(obj["ratio"]), parse_vector(obj["seed_vector"]))
    raise InvalidInput("series must be a vector array or a geometric generator spec")


def parse_hyp_literal(text: str) -> DPlus:
    """Parse the CLI literal "a1,a2" (or a single value used for both)."""
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) == 1:
        parts = [parts[0], parts[0]]
    if len(parts) != 2:
        raise InvalidInput(f"expected 'a1,a2' literal, got {text!r}")
    try:
        a1, a2 = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise InvalidInput(f"bad numeric literal in {text!r}") from exc
    return DPlus(a1, a2)


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read JSON from {path}: {exc}") from exc
