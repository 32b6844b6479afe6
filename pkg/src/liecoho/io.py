"""JSON documents for algebras and cochains, and the family-spec grammar.

Documents use 1-based basis indices and rationals as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import LieAlgebra, jacobi_check
from .cohomology import Cochain
from .families import FamilyError, FamilySpec, JacobiError
from .linalg import format_rational, parse_rational


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def algebra_to_document(g: LieAlgebra) -> dict:
    brackets = []
    for (i, j), coeffs in g.constants.items():
        brackets.append({
            "i": i + 1,
            "j": j + 1,
            "coeffs": {str(k + 1): format_rational(c) for k, c in coeffs.items()},
        })
    return {"dim": g.dim, "labels": list(g.labels), "brackets": brackets}


def serialize_algebra(g: LieAlgebra) -> str:
    return dumps(algebra_to_document(g))


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def algebra_from_document(doc, check_jacobi: bool = True) -> LieAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be a JSON object")
    for key in ("dim", "brackets"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    dim = _int(doc["dim"], "dim")
    if dim < 0:
        raise ParseError("dim must be non-negative")
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != dim):
        raise ParseError(f"labels must be a list of {dim} names")
    brackets = {}
    for n, rec in enumerate(doc["brackets"]):
        if not isinstance(rec, dict) or not {"i", "j", "coeffs"} <= rec.keys():
            raise ParseError(f"bracket record {n} needs fields i, j, coeffs")
        i, j = _int(rec["i"], "i"), _int(rec["j"], "j")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ParseError(f"bracket record {n}: index out of range 1..{dim}")
        if i >= j:
            raise ParseError(f"bracket record {n}: need i < j, got i={i}, j={j}")
        if (i - 1, j - 1) in brackets:
            raise ParseError(f"bracket record {n}: pair ({i}, {j}) repeated")
        if not isinstance(rec["coeffs"], dict):
            raise ParseError(f"bracket record {n}: coeffs must be an object")
        coeffs = {}
        for key, val in rec["coeffs"].items():
            try:
                k = int(key)
                q = parse_rational(val)
            except (TypeError, ValueError) as exc:
                raise ParseError(f"bracket record {n}: {exc}") from None
            if not 1 <= k <= dim:
                raise ParseError(f"bracket record {n}: coefficient index {k} out of range")
            coeffs[k - 1] = q
        brackets[(i - 1, j - 1)] = coeffs
    g = LieAlgebra(dim, brackets, labels)
    if check_jacobi:
        bad = jacobi_check(g)
        if bad:
            triples = ", ".join(str(tuple(x + 1 for x in v.triple)) for v in bad)
            raise JacobiError(f"Jacobi identity fails on {triples}", bad)
    return g


def parse_algebra(text: str, check_jacobi: bool = True) -> LieAlgebra:
    return algebra_from_document(_load(text), check_jacobi)


def cochain_to_document(c: Cochain) -> dict:
    entries = []
    for t, val in c.coeffs.items():
        for k, q in val.items():
            entries.append([[a + 1 for a in t], k + 1, format_rational(q)])
    return {"degree": c.degree, "dim": c.algebra.dim, "entries": entries}


def serialize_cochain(c: Cochain) -> str:
    return dumps(cochain_to_document(c))


def parse_cochain(text: str, g: LieAlgebra) -> Cochain:
    doc = _load(text)
    if not isinstance(doc, dict) or "degree" not in doc or "entries" not in doc:
        raise ParseError("cochain document needs degree and entries")
    p = _int(doc["degree"], "degree")
    if doc.get("dim", g.dim) != g.dim:
        raise ParseError(f"cochain is for dimension {doc['dim']}, algebra has {g.dim}")
    values: dict = {}
    for n, entry in enumerate(doc["entries"]):
        try:
            t, k, q = entry
            key = tuple(_int(a, "tuple index") - 1 for a in t)
            k = _int(k, "target") - 1
            q = parse_rational(q)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"cochain entry {n}: {exc}") from None
        if len(key) != p or any(not 0 <= a < g.dim for a in key) or not 0 <= k < g.dim:
            raise ParseError(f"cochain entry {n}: index out of range")
        values.setdefault(key, {})
        values[key][k] = values[key].get(k, 0) + q
    try:
        return Cochain.from_values(g, p, values)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


_TAG_ALIASES = {
    "l": "L", "q": "Q", "a": "A", "b": "B", "c": "C",
    "rh": "Rh", "r": "Rh", "semidirect": "Semidirect",
}


def parse_family_spec(text: str | list[str]) -> FamilySpec:
    """Parse ``"A n=10 k=4 lambda=1,0"``, ``"rh k=4 h=3 lambda=1,1"``, ``"semidirect L n=6"``."""
    tokens = text.split() if isinstance(text, str) else list(text)
    if not tokens:
        raise ParseError("empty family spec")
    tag = _TAG_ALIASES.get(tokens[0].lower())
    if tag is None:
        raise ParseError(f"unknown family {tokens[0]!r}")
    if tag == "Semidirect":
        return FamilySpec("Semidirect", base=parse_family_spec(tokens[1:]))
    fields: dict = {}
    for tok in tokens[1:]:
        key, sep, val = tok.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {tok!r}")
        key = key.lower()
        if key in fields:
            raise ParseError(f"repeated key {key!r}")
        try:
            if key in ("n", "k", "h"):
                fields[key] = int(val)
            elif key in ("lambda", "lam"):
                fields["lam"] = tuple(parse_rational(x) for x in val.split(",") if x != "")
            else:
                raise ParseError(f"unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad value for {key}: {val!r}") from None
    spec = FamilySpec(tag, **fields)
    try:
        spec.validate()
    except FamilyError as exc:
        raise ParseError(str(exc)) from None
    return spec


def normalize_lambda(spec: FamilySpec) -> FamilySpec:
    """Scale lambda so that its first nonzero entry is 1.

    Only A, B and rh specs are rescaled: there ``Yj -> c Yj`` (``j >= 2``)
    multiplies every lambda by ``c``. Other specs are returned unchanged.
    """
    if spec.tag == "Semidirect":
        return FamilySpec("Semidirect", base=normalize_lambda(spec.base))
    lead = next((x for x in spec.lam if x), None)
    if lead is None or spec.tag not in ("A", "B", "Rh"):
        return spec
    return FamilySpec(spec.tag, spec.n, spec.k, spec.h, tuple(Fraction(x) / lead for x in spec.lam), spec.base)


def vector_to_strings(v) -> list[str]:
    return [format_rational(x) for x in v]


def matrix_to_document(m) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.to_lists()]
