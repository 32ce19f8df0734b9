"""Verification of ideal-decomposition certificates.

A certificate claims I = I_1 cap ... cap I_m.  It is checked by mutual
generator membership: every generator of I must lie in each component (so
I is contained in the intersection), and every generator of the computed
intersection must lie in I.  The check runs over Q and again over Z_p for a
list of odd primes; passing all of them is the working surrogate for equality
over Z[1/2].  The optional exact mode additionally reduces each generator of
I with cofactor tracking and certifies the cofactors lie in Z[1/2][x].
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import (
    Ideal,
    ideal_intersect,
    ideal_member,
    ideal_mod_p,
    member_over_z_half,
)

DEFAULT_PRIMES = (3, 5, 7, 11, 13)


@dataclass
class MembershipFailure:
    domain: str
    direction: str  # "I-in-components" or "intersection-in-I"
    witness: str    # repr of the offending polynomial

    def to_json(self):
        return {
            "domain": self.domain,
            "direction": self.direction,
            "witness": self.witness,
        }


@dataclass
class CertificateReport:
    passed: bool
    failures: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    domains_checked: list = field(default_factory=list)

    def to_json(self):
        return {
            "passed": self.passed,
            "failures": [f.to_json() for f in self.failures],
            "warnings": list(self.warnings),
            "domains_checked": list(self.domains_checked),
        }


def _check_domain(I: Ideal, components, tag: str, failures):
    for comp in components:
        for g in I.generators:
            if not ideal_member(g, comp):
                failures.append(MembershipFailure(tag, "I-in-components", repr(g)))
    inter = components[0]
    for comp in components[1:]:
        inter = ideal_intersect(inter, comp)
    for g in inter.generators:
        if not ideal_member(g, I):
            failures.append(MembershipFailure(tag, "intersection-in-I", repr(g)))


def verify_decomposition_certificate(
    I: Ideal,
    components,
    primes=DEFAULT_PRIMES,
    exact_cofactors: bool = False,
) -> CertificateReport:
    """Check I = intersection(components) over Q and over Z_p for each prime.

    Verification failure is a report outcome, never an exception; only
    malformed inputs raise.
    """
    if not components:
        raise ValueError("at least one component ideal is required")
    for comp in components:
        if comp.vars != I.vars:
            raise ValueError("all ideals must share one variable table")
    for p in primes:
        if p % 2 == 0:
            raise ValueError("certificate primes must be odd")

    failures = []
    domains = ["Q"]
    _check_domain(I, components, "Q", failures)
    for p in primes:
        domains.append(f"Z{p}")
        _check_domain(
            ideal_mod_p(I, p),
            [ideal_mod_p(c, p) for c in components],
            f"Z{p}",
            failures,
        )

    warnings = []
    if exact_cofactors and not failures:
        for comp in components:
            for g in I.generators:
                _, in_z_half = member_over_z_half(g, comp)
                if not in_z_half:
                    warnings.append(
                        f"cofactors for {g!r} not certified over Z[1/2] "
                        "(reduction path found odd denominators; inconclusive)"
                    )
    return CertificateReport(
        passed=not failures,
        failures=failures,
        warnings=warnings,
        domains_checked=domains,
    )
