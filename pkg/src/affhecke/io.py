"""
JSON forms of scalars, group elements and algebra elements.

    scalar           {"2": 1, "0": -1}                      (v^2 - 1)
    ExtAffElt        {"x": [1, 0], "w": [1, 2]}              (w as any word)
    IM element       {"model": "im",   "terms": [{"x": .., "w": .., "c": scalar}]}
    Bernstein elt    {"model": "bern", "terms": [{"x": .., "w": .., "c": scalar}]}
    group algebra    {"terms": [{"x": .., "c": {"num": scalar, "den": scalar}}]}

Terms are written in lexicographic order of ``(x, canonical word of w)``, where
the canonical word is the lexicographically least reduced word, so output is
canonical and diff-able.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .coeffring import LaurentScalar, ScalarFraction, specialize, specialize_q
from .extweyl import ExtAffElt
from .heckebern import BernAlgebra, BernElement
from .heckeim import IMAlgebra, ImElement
from .rootdata import RootDatum
from .satake import GroupAlgElement

__all__ = [
    "ParseError",
    "ext_to_json",
    "ext_from_json",
    "element_to_json",
    "element_from_json",
    "groupalg_to_json",
    "groupalg_from_json",
    "dumps",
    "scalar_to_json",
]


class ParseError(ValueError):
    pass


def _vec(rd: RootDatum, data) -> tuple:
    if not isinstance(data, list) or len(data) != rd.dim or not all(isinstance(c, int) for c in data):
        raise ParseError(f"expected an integer list of length {rd.dim}, got {data!r}")
    return tuple(data)


def _word(rd: RootDatum, data):
    if not isinstance(data, list) or not all(isinstance(i, int) for i in data):
        raise ParseError(f"expected a word (list of simple indices), got {data!r}")
    try:
        return rd.from_word(data)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def ext_to_json(rd: RootDatum, a: ExtAffElt) -> dict:
    return {"x": list(a.x), "w": list(rd.reduced_word(a.w))}


def ext_from_json(rd: RootDatum, data) -> ExtAffElt:
    if not isinstance(data, dict) or "x" not in data:
        raise ParseError(f"bad element {data!r}")
    return ExtAffElt(_vec(rd, data["x"]), _word(rd, data.get("w", [])))


def scalar_to_json(c, q0=None):
    """Formal scalars as exponent maps; with ``q0`` an exact rational string."""
    if q0 is None:
        return c.to_json()
    if isinstance(c, ScalarFraction):
        num, den = scalar_to_json(c.num, q0), scalar_to_json(c.den, q0)
        return str(Fraction(num) / Fraction(den))
    q0 = Fraction(q0)
    try:
        return str(specialize_q(c, q0))
    except ValueError:
        n, d = q0.numerator, q0.denominator
        rn, rd_ = _isqrt(n), _isqrt(d)
        if rn is None or rd_ is None:
            raise ParseError(f"{c!r} has odd powers of v and q = {q0} is not a rational square") from None
        return str(specialize(c, Fraction(rn, rd_)))


def _isqrt(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


def _sort_key(rd: RootDatum, key):
    x, w = key
    return (tuple(x), rd.reduced_word(w))


def element_to_json(f, q0=None) -> dict:
    if isinstance(f, ImElement):
        rd, model = f.alg.rd, "im"
        items = [((u.x, u.w), c) for u, c in f.terms.items()]
    elif isinstance(f, BernElement):
        rd, model = f.alg.rd, "bern"
        items = list(f.terms.items())
    else:
        raise TypeError(f"not an algebra element: {type(f).__name__}")
    items.sort(key=lambda kc: _sort_key(rd, kc[0]))
    terms = [
        {"x": list(x), "w": list(rd.reduced_word(w)), "c": scalar_to_json(c, q0)}
        for (x, w), c in items
    ]
    return {"model": model, "terms": terms}


def element_from_json(data, im: IMAlgebra | None = None, bern: BernAlgebra | None = None):
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or data.get("model") not in ("im", "bern"):
        raise ParseError("element must be an object with model 'im' or 'bern'")
    if not isinstance(data.get("terms"), list):
        raise ParseError("element needs a 'terms' list")
    model = data["model"]
    alg = im if model == "im" else bern
    if alg is None:
        raise ParseError(f"no algebra supplied for model {model!r}")
    rd = alg.rd
    terms = []
    for t in data["terms"]:
        if not isinstance(t, dict):
            raise ParseError(f"bad term {t!r}")
        x = _vec(rd, t.get("x"))
        w = _word(rd, t.get("w", []))
        try:
            raw = t.get("c", {"0": 1})
            if isinstance(raw, dict) and "num" in raw:
                if model == "im":
                    raise ParseError("IM coefficients must be Laurent polynomials")
                c = ScalarFraction.from_json(raw)
            else:
                c = LaurentScalar.from_json(raw)
        except (ValueError, TypeError) as exc:
            raise ParseError(str(exc)) from None
        terms.append((x, w, c))
    if model == "im":
        return ImElement(alg, [(ExtAffElt(x, w), c) for x, w, c in terms])
    return BernElement(alg, [((x, w), c) for x, w, c in terms])


def groupalg_to_json(g: GroupAlgElement, q0=None) -> dict:
    return {"terms": [{"x": list(x), "c": (g.terms[x].to_json() if q0 is None else scalar_to_json(g.terms[x], q0))}
                      for x in sorted(g.terms)]}


def groupalg_from_json(rd: RootDatum, data) -> GroupAlgElement:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
        raise ParseError("group algebra element needs a 'terms' list")
    out = []
    for t in data["terms"]:
        try:
            out.append((_vec(rd, t.get("x")), ScalarFraction.from_json(t.get("c", {"0": 1}))))
        except (ValueError, TypeError, AttributeError) as exc:
            raise ParseError(str(exc)) from None
    return GroupAlgElement(rd, out)


def dumps(obj) -> str:
    return json.dumps(obj, indent=None, separators=(", ", ": "))
