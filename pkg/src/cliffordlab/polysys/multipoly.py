"""Sparse exact-coefficient multivariate polynomials.

Coefficients live either in Q (``fractions.Fraction``) or in Z_p for an odd
prime p; the domain is carried on every polynomial and mixing domains or
variable tables raises.  Terms are stored as a dict from exponent tuples to
nonzero coefficients, so the zero polynomial is the empty dict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


class DomainMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class VarTable:
    """An ordered tuple of unique variable names."""

    names: tuple

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


# domain tags: "Q" for rationals, an int p for Z_p
def _coerce(domain, c):
    if domain == "Q":
        return c if isinstance(c, Fraction) else Fraction(c)
    return int(c) % domain


@dataclass
class MultiPoly:
    vars: VarTable
    domain: object
    terms: dict = field(default_factory=dict)

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, vars: VarTable, domain="Q"):
        return cls(vars, domain, {})

    @classmethod
    def const(cls, vars: VarTable, c, domain="Q"):
        c = _coerce(domain, c)
        if c == 0:
            return cls.zero(vars, domain)
        return cls(vars, domain, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars: VarTable, name: str, domain="Q"):
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, domain, {tuple(e): _coerce(domain, 1)})

    def _check(self, other: "MultiPoly"):
        if self.vars is not other.vars and self.vars != other.vars:
            raise DomainMismatchError("different variable tables")
        if self.domain != other.domain:
            raise DomainMismatchError("different coefficient domains")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            nc = terms.get(e, 0) + c
            if self.domain != "Q":
                nc %= self.domain
            if nc:
                terms[e] = nc
            else:
                terms.pop(e, None)
        return MultiPoly(self.vars, self.domain, terms)

    def __neg__(self):
        if self.domain == "Q":
            return MultiPoly(self.vars, self.domain, {e: -c for e, c in self.terms.items()})
        return MultiPoly(
            self.vars, self.domain, {e: (-c) % self.domain for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nc = terms.get(e, 0) + c1 * c2
                if self.domain != "Q":
                    nc %= self.domain
                if nc:
                    terms[e] = nc
                else:
                    terms.pop(e, None)
        return MultiPoly(self.vars, self.domain, terms)

    def scaled(self, k):
        k = _coerce(self.domain, k)
        if k == 0:
            return MultiPoly.zero(self.vars, self.domain)
        if self.domain == "Q":
            return MultiPoly(self.vars, self.domain, {e: c * k for e, c in self.terms.items()})
        return MultiPoly(
            self.vars, self.domain, {e: (c * k) % self.domain for e, c in self.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.domain == other.domain
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    # -- evaluation -------------------------------------------------------

    def eval_exact(self, point):
        """Exact evaluation; point is a sequence aligned with the var table."""
        acc = _coerce(self.domain, 0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * _coerce(self.domain, x) ** k
            acc = acc + v
        if self.domain != "Q":
            acc %= self.domain
        return acc

    def eval_mod(self, point, d: int) -> int:
        """Evaluation mod an odd prime d.

        Q-coefficients are reduced via modular inverse of the denominator;
        raises ZeroDivisionError if a denominator vanishes mod d.
        """
        acc = 0
        for e, c in self.terms.items():
            if self.domain == "Q":
                cv = (c.numerator % d) * pow(c.denominator % d, -1, d) % d
            else:
                cv = c % d
            for x, k in zip(point, e):
                if k:
                    cv = cv * pow(x % d, k, d) % d
            acc = (acc + cv) % d
        return acc

    # -- integer normalization (Q domain) ---------------------------------

    def integer_content_removed(self) -> "MultiPoly":
        """Scale so coefficients are coprime integers (Q domain only)."""
        if self.domain != "Q" or not self.terms:
            return self
        den_lcm = 1
        for c in self.terms.values():
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        nums = [c.numerator * (den_lcm // c.denominator) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, v)
        scale = Fraction(den_lcm, g)
        return self.scaled(scale)

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for e, c in sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True):
            mono = "*".join(
                f"{n}^{k}" if k > 1 else n
                for n, k in zip(self.vars.names, e)
                if k
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


# -- monomial orders ------------------------------------------------------

def lex_key(e):
    return tuple(e)


def grevlex_key(e):
    # graded reverse lexicographic: compare by total degree, then by the
    # reversed exponent vector with reversed sign
    return (sum(e), tuple(-x for x in reversed(e)))


ORDERS = {"lex": lex_key, "grevlex": grevlex_key}


def leading_term(f: MultiPoly, order="grevlex"):
    """(exponent, coeff) of the leading term; f must be nonzero."""
    key = ORDERS[order]
    e = max(f.terms, key=key)
    return e, f.terms[e]


def leading_coeff_sign_normalized(f: MultiPoly, order="grevlex") -> MultiPoly:
    """Flip sign so the leading coefficient is positive (Q domain)."""
    if f.is_zero() or f.domain != "Q":
        return f
    _, c = leading_term(f, order)
    return -f if c < 0 else f


def exact_divide(f: MultiPoly, g: MultiPoly, order="grevlex") -> MultiPoly:
    """f / g when the division is exact; raises ArithmeticError otherwise."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q = MultiPoly.zero(f.vars, f.domain)
    r = f
    ge, gc = leading_term(g, order)
    while not r.is_zero():
        re, rc = leading_term(r, order)
        diff = tuple(a - b for a, b in zip(re, ge))
        if any(x < 0 for x in diff):
            raise ArithmeticError("inexact polynomial division")
        if f.domain == "Q":
            coeff = rc / gc
        else:
            coeff = rc * pow(gc, -1, f.domain) % f.domain
        t = MultiPoly(f.vars, f.domain, {diff: coeff})
        q = q + t
        r = r - t * g
    return q
