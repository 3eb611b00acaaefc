"""Certification that p/q-surgery on every nontrivial knot admits an
irreducible SU(2) representation.

``certify`` runs a fixed chain of sufficient conditions over the reduced
slope and returns a :class:`Certificate`.  Each rule that applies is
recorded with its witnesses (all recomputable from the slope by the other
modules); the first applicable rule determines the verdict.  Slopes not
covered by any rule are ``open`` -- with the single exception of slope 5,
where the universal statement is actually false, since 5-surgery on the
right-handed trefoil is a lens space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import prime_power
from .knots import framed_instanton_dim
from .simple_knots import branched_cover_order, simple_knot_genus
from .slopes import Slope

CERTIFIED = "certified"
OPEN = "open"
FAILS_IN_GENERAL = "fails_in_general"


@dataclass(frozen=True)
class RuleRecord:
    """One applied rule: its name, the result it invokes, its witnesses."""

    rule: str
    citation: str
    witnesses: dict


@dataclass(frozen=True)
class Certificate:
    """Verdict for a slope plus the ordered chain of rules that apply.

    The chain is nonempty exactly when the verdict is ``certified``; the
    top-level witnesses merge those of the chain together with any
    context computed along the way.
    """

    slope: Slope
    verdict: str
    chain: tuple
    witnesses: dict


def is_prime_power(n):
    """(prime, exponent) if n >= 2 is a prime power, else None."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return prime_power(n)


def _rule_interval_0_2(slope):
    if slope.p > 2 * slope.q:
        return None
    return RuleRecord(
        rule="interval-0-2",
        citation="every slope in [0,2] on a nontrivial knot admits an "
        "irreducible SU(2) representation",
        witnesses={"slope_value": str(slope.as_fraction())},
    )


def _rule_prime_power_2_3(slope):
    p, q = slope.p, slope.q
    if not (2 * q < p < 3 * q) or p < 2:
        return None
    decomposition = prime_power(p)
    if decomposition is None:
        return None
    prime, exponent = decomposition
    return RuleRecord(
        rule="prime-power-in-(2,3)",
        citation="slopes in (2,3) with prime-power numerator only admit "
        "SU(2)-abelian surgeries on genus-1 fibered strongly quasipositive "
        "knots, and the trefoil has none in this range",
        witnesses={"prime": prime, "exponent": exponent},
    )


def _rule_power_of_two(slope):
    p, q = slope.p, slope.q
    if p < 2 or p >= 7 * q:
        return None
    decomposition = prime_power(p)
    if decomposition is None or decomposition[0] != 2:
        return None
    delta = abs(6 * q - p)
    assert delta >= 2, "a power-of-two numerator below 7 keeps |6q - p| >= 2"
    return RuleRecord(
        rule="power-of-two-numerator",
        citation="for 4 | p the binary dihedral representations of the knot "
        "group descend to the surgery; the trefoil is excluded because its "
        "p/q-surgery is Seifert fibered over S^2(2,3,|6q-p|) with |6q-p| >= 2",
        witnesses={
            "exponent": decomposition[1],
            "trefoil_base_multiplicity": delta,
            "genus_le_3_determinants": [5, 7, 3],
            "binary_dihedral_counts": [2, 3, 1],
        },
    )


def _eligible_odd(slope):
    p = slope.p
    if p % 2 == 0 or p % 5 == 0 or p < 3:
        return None
    return prime_power(p)


def _rule_cover_order(slope):
    p, q = slope.p, slope.q
    if not (4 * q <= p < 5 * q):
        return None
    decomposition = _eligible_odd(slope)
    if decomposition is None:
        return None
    order = branched_cover_order(slope)
    assert order == 5 * p
    return RuleRecord(
        rule="branched-cover-order",
        citation="the double cover branched over the homologous simple knot "
        "has first homology of order 5p, but p/q-surgery has order p",
        witnesses={
            "prime": decomposition[0],
            "exponent": decomposition[1],
            "cover_order": str(order),
            "surgery_order": str(p),
        },
    )


def _rule_simple_knot_genus(slope):
    p, q = slope.p, slope.q
    if not (3 * q <= p < 4 * q):
        return None
    decomposition = _eligible_odd(slope)
    if decomposition is None:
        return None
    genus = simple_knot_genus(slope)
    if 4 * genus > p + 1:
        return None
    return RuleRecord(
        rule="simple-knot-genus",
        citation="the homologous simple knot has genus at most (p+1)/4, so "
        "an SU(2)-abelian surgery would be the Seifert-fibered branched "
        "double cover of that simple knot",
        witnesses={
            "prime": decomposition[0],
            "exponent": decomposition[1],
            "genus": genus,
            "genus_bound": str(Fraction(p + 1, 4)),
            "inequality": f"{23 * p - 9} <= {80 * q} <= {25 * p + 9}",
        },
    )


_RULES = (
    _rule_interval_0_2,
    _rule_prime_power_2_3,
    _rule_power_of_two,
    _rule_cover_order,
    _rule_simple_knot_genus,
)


def _context_witnesses(slope):
    """Simple-knot data for any slope where it is defined, certified or not."""
    p, q = slope.p, slope.q
    out = {"framed_instanton_dim": framed_instanton_dim(slope, 3)}
    if p % 2 == 1 and p % 5 != 0 and p >= 3 and 3 * q <= p <= 6 * q:
        genus = simple_knot_genus(slope)
        out["genus"] = genus
        out["genus_bound"] = str(Fraction(p + 1, 4))
        out["cover_order"] = str(branched_cover_order(slope))
        if 3 * q <= p < 4 * q:
            out["inequality"] = f"{23 * p - 9} <= {80 * q} <= {25 * p + 9}"
            out["inequality_holds"] = bool(23 * p - 9 <= 80 * q <= 25 * p + 9)
    return out


def certify(slope):
    """Classify a slope as certified / open / fails_in_general.

    All applicable rules are recorded in the chain; the first one sets the
    headline.  A ``fails_in_general`` or ``open`` certificate has an empty
    chain, with the explanation carried in the witnesses.
    """
    if not isinstance(slope, Slope):
        raise TypeError("expected a Slope")
    chain = tuple(r for r in (rule(slope) for rule in _RULES) if r is not None)
    witnesses = _context_witnesses(slope)
    for record in chain:
        witnesses.update(record.witnesses)
    if chain:
        return Certificate(slope, CERTIFIED, chain, witnesses)
    if slope.p == 5 * slope.q:
        witnesses["counterexample"] = (
            "5-surgery on the right-handed trefoil is the lens space L(5,1)"
        )
        return Certificate(slope, FAILS_IN_GENERAL, (), witnesses)
    return Certificate(slope, OPEN, (), witnesses)


def enumerate_certified(max_p, lo, hi):
    """Certificates for every reduced slope in [lo, hi) with p <= max_p,
    sorted by slope value.

    For lo > 0 the denominator range is exact (q <= p/lo); for lo = 0 the
    slope set is infinite, so denominators are capped at max_p.
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    if lo < 0 or hi <= lo:
        raise ValueError("need 0 <= lo < hi")
    if max_p < 2:
        raise ValueError("max_p must be at least 2")
    slopes = []
    if lo == 0:
        slopes.append(Slope(0, 1))
    for p in range(1, max_p + 1):
        q_cap = int(Fraction(p) / lo) if lo > 0 else max_p
        for q in range(1, q_cap + 1):
            try:
                slope = Slope(p, q)
            except ValueError:
                continue
            if lo <= slope.as_fraction() < hi:
                slopes.append(slope)
    slopes.sort(key=Slope.as_fraction)
    return [certify(s) for s in slopes]


def summarize(certificates):
    """Counts per verdict, for reporting alongside an enumeration."""
    counts = {CERTIFIED: 0, OPEN: 0, FAILS_IN_GENERAL: 0}
    for cert in certificates:
        counts[cert.verdict] += 1
    return counts


EXIT_CODES = {CERTIFIED: 0, OPEN: 2, FAILS_IN_GENERAL: 3}


def certificate_to_dict(cert):
    """JSON-ready form of a certificate (large integers as strings)."""
    return {
        "slope": str(cert.slope),
        "verdict": cert.verdict,
        "chain": [
            {"rule": r.rule, "citation": r.citation, "witnesses": dict(r.witnesses)}
            for r in cert.chain
        ],
        "witnesses": dict(cert.witnesses),
    }
