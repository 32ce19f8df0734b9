"""JSON (de)serialization for polynomials and ideals.

Format: {"vars": [...], "polys": [[{"c": "-3", "e": [0,1,...]}, ...], ...]}
with coefficient strings "num" or "num/den".
"""

from __future__ import annotations

import json

from ..modring import rational_from_str, rational_to_str
from .groebner import Ideal
from .multipoly import MultiPoly, VarTable


def poly_to_obj(f: MultiPoly):
    out = []
    for e, c in sorted(f.terms.items()):
        if f.domain == "Q":
            cs = rational_to_str(c)
        else:
            cs = str(c)
        out.append({"c": cs, "e": list(e)})
    return out


def poly_from_obj(obj, table: VarTable, domain="Q") -> MultiPoly:
    terms = {}
    for term in obj:
        e = tuple(term["e"])
        if len(e) != len(table):
            raise ValueError("exponent length does not match variable table")
        c = rational_from_str(term["c"])
        if domain != "Q":
            c = (c.numerator % domain) * pow(c.denominator % domain, -1, domain) % domain
            if c == 0:
                continue
        if c:
            terms[e] = c
    return MultiPoly(table, domain, terms)


def ideal_to_json(I: Ideal) -> dict:
    return {
        "vars": list(I.vars.names),
        "polys": [poly_to_obj(g) for g in I.generators],
    }


def ideal_from_json(doc: dict, domain="Q") -> Ideal:
    table = VarTable(tuple(doc["vars"]))
    gens = [poly_from_obj(p, table, domain) for p in doc["polys"]]
    return Ideal(gens, table, domain)


def load_ideal(path, domain="Q") -> Ideal:
    with open(path) as fh:
        return ideal_from_json(json.load(fh), domain)


def dump_ideal(I: Ideal, path):
    with open(path, "w") as fh:
        json.dump(ideal_to_json(I), fh, indent=1)
        fh.write("\n")
