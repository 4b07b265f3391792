"""JSON form of decompositions. Big integers are written as decimal strings."""
from __future__ import annotations

import json
from fractions import Fraction

from .decompose import Decomposition, NotFound, ProblemSpec


def _frac(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _c_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def decomposition_to_dict(d: Decomposition) -> dict:
    s = d.spec
    return {
        "a": str(s.a),
        "q": str(s.q),
        "Q": str(s.Q),
        "n": s.n,
        "c": _c_str(s.c),
        "path": d.path,
        "terms": [{"num": str(a), "den": str(b)} for a, b in d.terms],
        "b": str(d.b),
        "product": str(d.product),
        "error": _frac(d.error),
        "hypothesis_Q_ge_q2eps": s.hypothesis_holds,
    }


def not_found_to_dict(nf: NotFound) -> dict:
    s = nf.spec
    return {
        "a": str(s.a),
        "q": str(s.q),
        "Q": str(s.Q),
        "n": s.n,
        "c": _c_str(s.c),
        "path": "not-found",
        "R": str(nf.R),
        "family_sizes": dict(nf.family_sizes),
        "reason": nf.reason,
        "hypothesis_Q_ge_q2eps": s.hypothesis_holds,
    }


def to_json(result: Decomposition | NotFound) -> str:
    if isinstance(result, NotFound):
        payload = not_found_to_dict(result)
    else:
        payload = decomposition_to_dict(result)
    return json.dumps(payload, indent=2) + "\n"


def decomposition_from_dict(data: dict, epsilon=Fraction(1, 10)) -> Decomposition:
    """Rebuild a :class:`Decomposition`; the spec is re-normalized from ``a``, ``q``."""
    spec = ProblemSpec.create(int(data["a"]), int(data["q"]), int(data["Q"]), int(data["n"]),
                              Fraction(data["c"]), epsilon=epsilon)
    terms = tuple((int(t["num"]), int(t["den"])) for t in data["terms"])
    err = Fraction(int(data["error"]["num"]), int(data["error"]["den"]))
    return Decomposition(spec, terms, int(data["b"]), int(data["product"]), err, data["path"])


def from_json(text: str, epsilon=Fraction(1, 10)) -> Decomposition:
    return decomposition_from_dict(json.loads(text), epsilon=epsilon)
