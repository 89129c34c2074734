"""Deterministic text and JSON renderings, and the JSON schemas they follow."""

from __future__ import annotations

import json
from fractions import Fraction

from .ringcore import Poly, TruncatedSeries
from .schurbasis import SchurSeries

COEFF_PATTERN = r"^-?[0-9]+(/[0-9]+)?$"

SCHUR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Schur expansion",
    "type": "object",
    "required": ["basis", "cap", "terms"],
    "additionalProperties": False,
    "properties": {
        "basis": {"const": "schur"},
        "cap": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["lambda", "coeff"],
                "additionalProperties": False,
                "properties": {
                    "lambda": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "coeff": {"type": "string", "pattern": COEFF_PATTERN},
                },
            },
        },
    },
}

POLY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Polynomial",
    "type": "object",
    "required": ["vars", "terms"],
    "additionalProperties": False,
    "properties": {
        "vars": {"type": "array", "items": {"type": "string", "pattern": "^[A-Za-z_]+[0-9]*$"}},
        "cap": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["exp", "coeff"],
                "additionalProperties": False,
                "properties": {
                    "exp": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "coeff": {"type": "string", "pattern": COEFF_PATTERN},
                },
            },
        },
    },
}


def coeff_str(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def poly_json(p, cap: int | None = None) -> dict:
    if isinstance(p, TruncatedSeries):
        p, cap = p.poly, p.cap
    out = {"vars": list(p.vars)}
    if cap is not None:
        out["cap"] = cap
    out["terms"] = [{"exp": list(e), "coeff": coeff_str(p.terms[e])} for e in p.sorted_exponents()]
    return out


def schur_json(s: SchurSeries) -> dict:
    return {
        "basis": "schur",
        "cap": s.cap,
        "terms": [{"lambda": list(lam), "coeff": coeff_str(c)} for lam, c in s.items()],
    }


def render(value, fmt: str) -> str:
    if fmt == "json":
        if isinstance(value, SchurSeries):
            data = schur_json(value)
        elif isinstance(value, (Poly, TruncatedSeries)):
            data = poly_json(value)
        else:
            data = value
        return json.dumps(data, sort_keys=False, separators=(",", ":"))
    if isinstance(value, TruncatedSeries):
        return value.poly.to_str()
    if isinstance(value, (Poly, SchurSeries)):
        return value.to_str()
    return str(value)
