"""Buchberger Groebner bases and ideal operations over Q and Z_p.

Only small systems ever reach this code (toy certificates, elimination on a
handful of generators); the heavy objects of the pipeline (the E/F
elimination, the enumeration) deliberately avoid Groebner computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .multipoly import ORDERS, MultiPoly, VarTable, leading_term


@dataclass
class Ideal:
    generators: list
    vars: VarTable
    domain: object = "Q"

    def __post_init__(self):
        self.generators = [g for g in self.generators if not g.is_zero()]


def _monomial_divides(e1, e2) -> bool:
    return all(a <= b for a, b in zip(e1, e2))


def _term(vars, domain, e, c):
    return MultiPoly(vars, domain, {tuple(e): c})


def normal_form(f: MultiPoly, basis, order="grevlex") -> MultiPoly:
    """Remainder of f on multivariate division by the list ``basis``."""
    key = ORDERS[order]
    r = MultiPoly.zero(f.vars, f.domain)
    work = f
    lts = [leading_term(g, order) for g in basis]
    while not work.is_zero():
        we, wc = leading_term(work, order)
        for g, (ge, gc) in zip(basis, lts):
            if _monomial_divides(ge, we):
                if f.domain == "Q":
                    coeff = wc / gc
                else:
                    coeff = wc * pow(gc, -1, f.domain) % f.domain
                diff = tuple(a - b for a, b in zip(we, ge))
                work = work - _term(f.vars, f.domain, diff, coeff) * g
                break
        else:
            t = _term(f.vars, f.domain, we, wc)
            r = r + t
            work = work - t
    return r


def _s_poly(f, g, order="grevlex"):
    fe, fc = leading_term(f, order)
    ge, gc = leading_term(g, order)
    lcm = tuple(max(a, b) for a, b in zip(fe, ge))
    if f.domain == "Q":
        tf = _term(f.vars, f.domain, tuple(a - b for a, b in zip(lcm, fe)), Fraction(1) / fc)
        tg = _term(f.vars, f.domain, tuple(a - b for a, b in zip(lcm, ge)), Fraction(1) / gc)
    else:
        p = f.domain
        tf = _term(f.vars, p, tuple(a - b for a, b in zip(lcm, fe)), pow(fc, -1, p))
        tg = _term(f.vars, p, tuple(a - b for a, b in zip(lcm, ge)), pow(gc, -1, p))
    return tf * f - tg * g


def _make_monic(f, order="grevlex"):
    _, c = leading_term(f, order)
    if f.domain == "Q":
        return f.scaled(Fraction(1) / c)
    return f.scaled(pow(c, -1, f.domain))


def buchberger(gens, order="grevlex"):
    """A Groebner basis (not yet reduced) of the ideal generated by ``gens``."""
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        return []
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        fe, _ = leading_term(basis[i], order)
        ge, _ = leading_term(basis[j], order)
        # Buchberger's first criterion: coprime leading monomials reduce to 0
        if all(a == 0 or b == 0 for a, b in zip(fe, ge)):
            continue
        s = _s_poly(basis[i], basis[j], order)
        r = normal_form(s, basis, order)
        if not r.is_zero():
            basis.append(r)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return basis


def reduced_basis(basis, order="grevlex"):
    """Minimal reduced monic Groebner basis; canonical for the ideal."""
    key = ORDERS[order]
    # minimalize: process by ascending leading monomial, dropping any element
    # whose LT is divisible by an already-kept LT
    minimal = []
    for g in sorted(basis, key=lambda f: key(leading_term(f, order)[0])):
        ge, _ = leading_term(g, order)
        if any(_monomial_divides(leading_term(h, order)[0], ge) for h in minimal):
            continue
        minimal.append(g)
    # inter-reduce
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = normal_form(g, others, order) if others else g
        if not r.is_zero():
            out.append(_make_monic(r, order))
    out.sort(key=lambda f: key(leading_term(f, order)[0]))
    return out


def groebner(I: Ideal, order="grevlex") -> Ideal:
    """Reduced Groebner basis of I under the given monomial order."""
    gb = reduced_basis(buchberger(I.generators, order), order)
    return Ideal(gb, I.vars, I.domain)


def ideal_member(f: MultiPoly, I: Ideal, order="grevlex") -> bool:
    gb = groebner(I, order)
    if not gb.generators:
        return f.is_zero()
    return normal_form(f, gb.generators, order).is_zero()


def _extend_table(vars: VarTable, new_name="_t") -> VarTable:
    return VarTable((new_name,) + vars.names)


def _lift(f: MultiPoly, ext: VarTable) -> MultiPoly:
    return MultiPoly(ext, f.domain, {(0,) + e: c for e, c in f.terms.items()})


def _project(f: MultiPoly, vars: VarTable) -> MultiPoly:
    return MultiPoly(vars, f.domain, {e[1:]: c for e, c in f.terms.items()})


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I meet J via the auxiliary-variable construction t*I + (1-t)*J,
    eliminating t with a lex basis (t greatest)."""
    if I.vars != J.vars or I.domain != J.domain:
        raise ValueError("ideals must share a variable table and domain")
    ext = _extend_table(I.vars)
    t = MultiPoly.variable(ext, "_t", I.domain)
    one = MultiPoly.const(ext, 1, I.domain)
    gens = [t * _lift(g, ext) for g in I.generators]
    gens += [(one - t) * _lift(g, ext) for g in J.generators]
    gb = reduced_basis(buchberger(gens, "lex"), "lex")
    kept = [g for g in gb if all(e[0] == 0 for e in g.terms)]
    return Ideal([_project(g, I.vars) for g in kept], I.vars, I.domain)


def ideal_mod_p(I: Ideal, p: int) -> Ideal:
    """Reduce a Q-coefficient ideal mod an odd prime p.

    Raises ZeroDivisionError if any generator has a denominator divisible
    by p (cannot happen for Z[1/2]-scaled certificate inputs and odd p).
    """
    gens = []
    for g in I.generators:
        terms = {}
        for e, c in g.terms.items():
            cv = (c.numerator % p) * pow(c.denominator % p, -1, p) % p
            if cv:
                terms[e] = cv
        gens.append(MultiPoly(I.vars, p, terms))
    return Ideal(gens, I.vars, p)


# -- cofactor-tracked reduction (optional exact Z[1/2] mode) ----------------

def buchberger_with_cofactors(gens, order="grevlex"):
    """Groebner basis where each element carries its expression in ``gens``.

    Returns a list of (poly, cofactors) with poly = sum(cofactors[i]*gens[i]).
    """
    vars, domain = gens[0].vars, gens[0].domain
    zero = MultiPoly.zero(vars, domain)
    one = MultiPoly.const(vars, 1, domain)

    def unit(i):
        return [one if j == i else zero for j in range(len(gens))]

    basis = [(g, unit(i)) for i, g in enumerate(gens) if not g.is_zero()]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        (f, cf), (g, cg) = basis[i], basis[j]
        fe, fc = leading_term(f, order)
        ge, gc = leading_term(g, order)
        if all(a == 0 or b == 0 for a, b in zip(fe, ge)):
            continue
        lcm = tuple(max(a, b) for a, b in zip(fe, ge))
        tf = _term(vars, domain, tuple(a - b for a, b in zip(lcm, fe)), Fraction(1) / fc)
        tg = _term(vars, domain, tuple(a - b for a, b in zip(lcm, ge)), Fraction(1) / gc)
        s = tf * f - tg * g
        cs = [tf * a - tg * b for a, b in zip(cf, cg)]
        r, dcofs = reduce_with_cofactors(s, basis, order)
        if not r.is_zero():
            # s = sum(dcofs*gens) + r, so r = sum((cs - dcofs)*gens)
            basis.append((r, [a - b for a, b in zip(cs, dcofs)]))
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return basis


def reduce_with_cofactors(f, tracked_basis, order="grevlex"):
    """Normal form of f against [(g, cof)] pairs, propagating cofactors.

    Returns (remainder, cofs) with f = sum(cofs[i]*gens[i]) + remainder.
    """
    vars, domain = f.vars, f.domain
    n = len(tracked_basis[0][1]) if tracked_basis else 0
    cofs = [MultiPoly.zero(vars, domain) for _ in range(n)]
    r = MultiPoly.zero(vars, domain)
    work = f
    while not work.is_zero():
        we, wc = leading_term(work, order)
        for g, cg in tracked_basis:
            ge, gc = leading_term(g, order)
            if _monomial_divides(ge, we):
                t = _term(vars, domain, tuple(a - b for a, b in zip(we, ge)), wc / gc)
                work = work - t * g
                for k in range(len(cofs)):
                    cofs[k] = cofs[k] + t * cg[k]
                break
        else:
            t = _term(vars, domain, we, wc)
            r = r + t
            work = work - t
    return r, cofs


def _den_is_power_of_two(c: Fraction) -> bool:
    den = c.denominator
    return den & (den - 1) == 0


def member_over_z_half(f: MultiPoly, I: Ideal, order="grevlex"):
    """Membership with explicit cofactors in Z[1/2][x].

    Returns (is_member_over_Q, cofactors_in_z_half) where the second flag is
    True when every cofactor denominator found is a power of two.  The search
    is one particular reduction path, so a False flag is inconclusive; it is
    a sufficient certificate, not a complete decision procedure.
    """
    tracked = buchberger_with_cofactors(I.generators, order)
    r, cofs = reduce_with_cofactors(f, tracked, order)
    if not r.is_zero():
        return False, False
    ok = all(_den_is_power_of_two(c) for cof in cofs for c in cof.terms.values())
    return True, ok
