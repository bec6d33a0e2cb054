"""Exact JSON encoding of linear Lie algebras and reports.

Entries are ``"p/q"`` strings for real values and ``{"re": "p/q", "im": "p/q"}``
otherwise; no floating point value ever enters an authoritative field.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .exactmat import Matrix
from .exactmat.scalar import Scalar, format_rational
from .liecore import LinRep

SCHEMA_VERSION = "1.0"

__all__ = [
    "SCHEMA_VERSION", "ParseError", "matrix_to_grid", "grid_to_matrix", "linrep_to_dict",
    "linrep_from_dict", "dumps", "write_linrep", "read_linrep", "jsonable", "approx", "load_schema",
]


class ParseError(ValueError):
    """Malformed algebra file."""


def matrix_to_grid(M: Matrix) -> list[list]:
    return [[Scalar(M[i, j].re, M[i, j].im).to_json() for j in range(M.shape[1])]
            for i in range(M.shape[0])]


def grid_to_matrix(grid, n: int) -> Matrix:
    if not isinstance(grid, list) or len(grid) != n or any(
            not isinstance(r, list) or len(r) != n for r in grid):
        raise ParseError(f"grid must be {n}x{n}")
    try:
        return Matrix.from_rows([[Scalar.from_json(x) for x in r] for r in grid])
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise ParseError(f"bad matrix entry: {exc}") from None


def _meta_str(v) -> str:
    return v if isinstance(v, str) else json.dumps(jsonable(v), sort_keys=True, separators=(",", ":"))


def linrep_to_dict(h: LinRep) -> dict:
    d = {
        "schema_version": SCHEMA_VERSION,
        "name": h.name,
        "space_dim": h.space_dim,
        "generators": [matrix_to_grid(g) for g in h.gens],
        "metadata": {str(k): _meta_str(v) for k, v in sorted(h.meta.items())},
    }
    if h.complex_structure is not None:
        d["complex_structure"] = matrix_to_grid(h.complex_structure)
    return d


def linrep_from_dict(d: dict, check: bool = True) -> LinRep:
    """Inverse of :func:`linrep_to_dict`; generators are reduced to an independent set."""
    if not isinstance(d, dict):
        raise ParseError("algebra file must hold a JSON object")
    try:
        n = int(d["space_dim"])
        raw = d["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"missing or bad field: {exc}") from None
    if n < 1 or not isinstance(raw, list):
        raise ParseError("space_dim must be positive and generators a list")
    gens = [grid_to_matrix(g, n) for g in raw]
    if any(not g.is_real() for g in gens):
        raise ParseError("generators must be real")
    J = d.get("complex_structure")
    J = grid_to_matrix(J, n) if J is not None else None
    meta = d.get("metadata", {})
    if not isinstance(meta, dict) or any(not isinstance(v, str) for v in meta.values()):
        raise ParseError("metadata must be a string map")
    try:
        return LinRep.from_matrices(n, gens, complex_structure=J, meta=dict(meta),
                                    name=str(d.get("name", "")), check=check)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def jsonable(x):
    """Recursively convert exact values into JSON-ready data.

    Floats pass through only because the ``--approx`` shadow contains them.
    """
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, complex):
        return {"re_approx": x.real, "im_approx": x.imag}
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Scalar):
        return x.to_json()
    if isinstance(x, Matrix):
        return matrix_to_grid(x)
    if hasattr(x, "to_dict"):
        return jsonable(x.to_dict())
    if hasattr(x, "value") and isinstance(getattr(x, "value"), str):
        return x.value
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    raise TypeError(f"cannot serialise {type(x).__name__}")


def approx(x):
    """Decimal shadow of an exact report; labelled non-authoritative by the caller."""
    if isinstance(x, dict):
        if set(x) == {"re", "im"}:
            return complex(float(Fraction(x["re"])), float(Fraction(x["im"])))
        return {k: approx(v) for k, v in x.items()}
    if isinstance(x, list):
        return [approx(v) for v in x]
    if isinstance(x, str) and "/" in x:
        try:
            return float(Fraction(x))
        except (ValueError, ZeroDivisionError):
            return x
    return x


def dumps(obj) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_linrep(h: LinRep, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(linrep_to_dict(h)))


def read_linrep(path, check: bool = True) -> LinRep:
    try:
        with open(path, encoding="utf-8") as fh:
            d = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(str(exc)) from None
    return linrep_from_dict(d, check=check)


def load_schema(name: str) -> dict:
    """Shipped JSON schema: ``"algebra"`` or ``"report"``."""
    from importlib.resources import files
    return json.loads(files("holokit").joinpath("schemas", f"{name}.schema.json").read_text("utf-8"))
