"""JSON formats for algebras, bivectors, cocycles and forms.

Scalars travel as strings ("-3/2"); an algebra spec lists only the
brackets with i < j; a bivector lists only nonzero entries with i < j.
``{"oscillator": {"lambda": ["1", "2"]}}`` expands to the full algebra
with the fixed basis order (e_-1, e_0, e_1, e~_1, ...).  ``dumps`` is the
single canonical writer, so parse -> serialize round-trips byte-exactly
on files it produced.
"""

import json

from .algebra import LieAlgebra
from .bialgebra import Cocycle
from .errors import ParseError
from .multivector import Bivector
from .oscillator import OscillatorAlgebra, build_oscillator
from .scalar import scalar, scalar_str


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def parse_scalar(s):
    try:
        return scalar(s)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {s!r}: {exc}") from exc


def algebra_to_spec(g: LieAlgebra) -> dict:
    brackets = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            if any(g.c[i][j]):
                brackets.append({"i": i, "j": j, "coeffs": [scalar_str(x) for x in g.c[i][j]]})
    return {"dim": g.dim, "labels": list(g.labels), "brackets": brackets}


def spec_to_algebra(d: dict):
    """Returns an OscillatorAlgebra for the shorthand, else a LieAlgebra.
    Validation errors (antisymmetry, Jacobi) propagate to the caller."""
    if "oscillator" in d:
        osc = d["oscillator"]
        if not isinstance(osc, dict) or "lambda" not in osc:
            raise ParseError("oscillator shorthand needs a 'lambda' list")
        return build_oscillator([parse_scalar(x) for x in osc["lambda"]])
    try:
        dim = d["dim"]
        labels = d.get("labels")
        brackets = d["brackets"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"algebra spec needs 'dim' and 'brackets': {exc}") from exc
    if not isinstance(dim, int) or dim <= 0:
        raise ParseError(f"bad dimension {dim!r}")
    c = [[[scalar(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for row in brackets:
        try:
            i, j, coeffs = row["i"], row["j"], row["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad bracket row {row!r}") from exc
        if not (0 <= i < dim and 0 <= j < dim and i != j) or len(coeffs) != dim:
            raise ParseError(f"bad bracket row indices {row!r}")
        vec = [parse_scalar(x) for x in coeffs]
        c[i][j] = vec
        c[j][i] = [-x for x in vec]
    return LieAlgebra(c, labels=labels)


def bivector_to_spec(r: Bivector) -> dict:
    return {
        "entries": [{"i": i, "j": j, "value": scalar_str(v)} for i, j, v in r.entries()]
    }


def spec_to_bivector(d: dict, dim: int) -> Bivector:
    try:
        entries = d["entries"]
    except (KeyError, TypeError) as exc:
        raise ParseError("bivector spec needs 'entries'") from exc
    out = {}
    for row in entries:
        try:
            i, j, v = row["i"], row["j"], row["value"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad bivector entry {row!r}") from exc
        if not (0 <= i < j < dim):
            raise ParseError(f"bivector entry needs 0 <= i < j < {dim}, got {row!r}")
        out[(i, j)] = parse_scalar(v)
    return Bivector.from_entries(dim, out)


def cocycle_to_spec(xi: Cocycle) -> list:
    return [bivector_to_spec(img) for img in xi.images]


def spec_to_cocycle(lst, dim: int) -> Cocycle:
    if not isinstance(lst, list) or len(lst) != dim:
        raise ParseError(f"cocycle spec must list {dim} bivectors")
    return Cocycle(tuple(spec_to_bivector(d, dim) for d in lst))


def form_to_spec(m) -> dict:
    dim = len(m)
    entries = []
    for i in range(dim):
        for j in range(i, dim):
            if m[i][j]:
                entries.append({"i": i, "j": j, "value": scalar_str(m[i][j])})
    return {"entries": entries}


def spec_to_form(d: dict, dim: int) -> list:
    try:
        entries = d["entries"]
    except (KeyError, TypeError) as exc:
        raise ParseError("form spec needs 'entries'") from exc
    m = [[scalar(0)] * dim for _ in range(dim)]
    for row in entries:
        try:
            i, j, v = row["i"], row["j"], row["value"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad form entry {row!r}") from exc
        if not (0 <= i <= j < dim):
            raise ParseError(f"form entry needs 0 <= i <= j < {dim}, got {row!r}")
        m[i][j] = m[j][i] = parse_scalar(v)
    return m


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON in {path}: {exc}") from exc


def load_input(path: str) -> dict:
    """Parse a composite input file: an algebra spec (or oscillator
    shorthand), optionally under an 'algebra' key, plus optional
    'bivector', 'cocycle' and 'form' sections."""
    doc = load_json(path)
    if not isinstance(doc, dict):
        raise ParseError("input file must be a JSON object")
    alg_spec = doc.get("algebra", doc)
    g = spec_to_algebra(alg_spec)
    lie = g.algebra if isinstance(g, OscillatorAlgebra) else g
    out = {"algebra": g, "document": doc}
    if "bivector" in doc:
        out["bivector"] = spec_to_bivector(doc["bivector"], lie.dim)
    if "cocycle" in doc:
        out["cocycle"] = spec_to_cocycle(doc["cocycle"], lie.dim)
    if "form" in doc:
        out["form"] = spec_to_form(doc["form"], lie.dim)
    return out


def roundtrip_document(doc: dict) -> dict:
    """Re-emit a parsed composite document through the canonical writers
    (used by the byte-exact round-trip check)."""
    out = {}
    for key, value in doc.items():
        if key == "algebra":
            if "oscillator" in value:
                out[key] = {"oscillator": {"lambda": [scalar_str(parse_scalar(x)) for x in value["oscillator"]["lambda"]]}}
            else:
                out[key] = algebra_to_spec(spec_to_algebra(value))
        elif key == "bivector":
            dim = _doc_dim(doc)
            out[key] = bivector_to_spec(spec_to_bivector(value, dim))
        elif key == "cocycle":
            dim = _doc_dim(doc)
            out[key] = cocycle_to_spec(spec_to_cocycle(value, dim))
        elif key == "form":
            dim = _doc_dim(doc)
            out[key] = form_to_spec(spec_to_form(value, dim))
        else:
            out[key] = value
    return out


def _doc_dim(doc: dict) -> int:
    alg = doc.get("algebra", doc)
    if "oscillator" in alg:
        return 2 * len(alg["oscillator"]["lambda"]) + 2
    return alg["dim"]
