"""The implicitization core.

de Jonquieres parametrizations, the closed-form monoid equation, degree
predictions, case classification, syzygetic polynomials, the Eulerian
equation of a polar Cremona map, and the independent elimination oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from jonq.birational import RationalMapData, VerifiedCremona, verify_cremona
from jonq.errors import HypothesisViolation, StructuralError
from jonq.groebner import (
    IdealHandle,
    buchberger,
    colon,
    eliminate,
    ideal_equal,
    is_unit_ideal,
    normal_form,
)
from jonq.ring import Polynomial, VariableSet, divide_exact, poly_gcd


def monoid_ring_for(target):
    """The target variables plus one fresh monoid variable (y_{n+1})."""
    fresh = target.fresh_name(f"y{len(target)}")
    return target.extended(fresh), fresh


@dataclass(frozen=True)
class JonquieresData:
    """A de Jonquieres parametrization (g_0 f : ... : g_n f : g)."""

    cremona: VerifiedCremona
    f: Polynomial
    g: Polynomial
    monoid_ring: VariableSet
    last_var: str

    @classmethod
    def build(cls, cremona, f, g):
        ring = cremona.source
        if f.ring != ring or g.ring != ring:
            raise StructuralError("f and g must live over the source variables")
        if f.is_zero() or g.is_zero():
            raise HypothesisViolation("f and g must be nonzero forms")
        if not f.is_homogeneous() or not g.is_homogeneous():
            raise HypothesisViolation("f and g must be homogeneous forms")
        if f.total_degree() < 1:
            raise HypothesisViolation("deg(f) >= 1 is required")
        if g.total_degree() != cremona.degree + f.total_degree():
            raise HypothesisViolation(
                "the degree relation deg(g) = deg(G) + deg(f) fails: "
                f"{g.total_degree()} != {cremona.degree} + {f.total_degree()}"
            )
        if not poly_gcd(f, g).is_constant():
            raise HypothesisViolation("f and g are not relatively prime")
        mring, last = monoid_ring_for(cremona.target)
        return cls(cremona, f, g, mring, last)

    @property
    def source(self):
        return self.cremona.source

    @property
    def n(self):
        return len(self.source) - 1

    def coordinates(self):
        """The parametrizing forms (g_0 f, ..., g_n f, g)."""
        return tuple(gi * self.f for gi in self.cremona.forward.coords) + (self.g,)

    def as_map(self):
        return RationalMapData(self.source, self.monoid_ring, self.coordinates())

    def base_ideal_I(self):
        return IdealHandle(self.source, self.cremona.forward.coords)

    def ideal_J(self):
        return IdealHandle(self.source, self.coordinates())


@dataclass(frozen=True)
class ImplicitMonoid:
    """F = F_delta - y_{n+1} * F_{delta-1}, with the stripped denominator."""

    F: Polynomial
    F_delta: Polynomial
    F_delta_minus_1: Polynomial
    stripped_gcd: Polynomial
    last_var: str

    @property
    def delta(self):
        return self.F.total_degree()


@dataclass(frozen=True)
class CaseTag:
    kind: str  # inclusion | non_zero_divisor | general
    conductor: IdealHandle


def _evaluations(P, budget=None):
    ginv = list(P.cremona.inverse.coords)
    fg = P.f.substitute(ginv)
    gg = P.g.substitute(ginv)
    if fg.is_zero():
        raise HypothesisViolation("hypothesis f(g') != 0 fails")
    if gg.is_zero():
        raise HypothesisViolation("hypothesis g(g') != 0 fails")
    return fg, gg


def implicitize(P, budget=None):
    """The implicit monoid equation in closed form.

    F = (g(g') - y_{n+1} f(g') D) / gcd(g(g'), f(g') D); irreducible by
    construction since the two components end up relatively prime.
    """
    fg, gg = _evaluations(P)
    D = P.cremona.target_factor
    prod = fg * D
    stripped = poly_gcd(gg, prod)
    F_delta = divide_exact(gg, stripped)
    F_dm1 = divide_exact(prod, stripped)
    mring = P.monoid_ring
    y_last = Polynomial.variable(mring, P.last_var)
    F = F_delta.map_ring(mring) - y_last * F_dm1.map_ring(mring)
    if not poly_gcd(F_delta, F_dm1).is_constant():
        raise StructuralError("monoid components fail to be relatively prime")
    return ImplicitMonoid(F, F_delta, F_dm1, stripped, P.last_var)


@dataclass(frozen=True)
class DegreeReport:
    deg_F: int
    via_deg_g: int
    via_deg_f: int
    upper_bound: int
    stripped_gcd_degree: int
    evaluations_coprime: bool
    window: tuple | None
    window_holds: bool | None
    via_target_factor_gcd: int | None


def predicted_degree(P, monoid=None, budget=None):
    """Both degree expressions of the closed form, plus the coprime window."""
    fg, gg = _evaluations(P)
    monoid = monoid or implicitize(P, budget)
    D = P.cremona.target_factor
    dprime = P.cremona.inverse_degree
    df = P.f.total_degree()
    dg = P.g.total_degree()
    sdeg = monoid.stripped_gcd.total_degree()
    via_g = dg * dprime - sdeg
    via_f = df * dprime + D.total_degree() + 1 - sdeg
    coprime = poly_gcd(fg, gg).is_constant()
    window = None
    window_holds = None
    via_D = None
    if coprime:
        # upper end attained exactly when gcd(g(g'), D) is constant (then
        # deg F = deg(g) deg(G^-1)), e.g. over the identity Cremona
        window = (df * dprime + 1, dg * dprime)
        window_holds = window[0] <= monoid.delta <= window[1]
        via_D = dg * dprime - poly_gcd(gg, D).total_degree()
    return DegreeReport(
        deg_F=monoid.delta,
        via_deg_g=via_g,
        via_deg_f=via_f,
        upper_bound=dg * dprime,
        stripped_gcd_degree=sdeg,
        evaluations_coprime=coprime,
        window=window,
        window_holds=window_holds,
        via_target_factor_gcd=via_D,
    )


def classify_case(P, budget=None):
    """inclusion (g in I), non_zero_divisor (I:g = I), or general."""
    I = P.base_ideal_I()
    cond = colon(I, P.g, budget=budget)
    if is_unit_ideal(cond, budget):
        return CaseTag("inclusion", cond)
    if ideal_equal(cond, I, budget):
        return CaseTag("non_zero_divisor", cond)
    return CaseTag("general", cond)


@dataclass(frozen=True)
class SyzygeticPolynomial:
    conductor_gen: Polynomial  # c_j, over the source variables
    content_column: tuple  # h_ij with c_j*g = sum h_ij g_i
    polynomial: Polynomial  # the evaluated form in the monoid ring
    extraneous_factor: Polynomial  # polynomial / F


def syzygetic_polynomials(P, monoid=None, conductor=None, budget=None):
    """One syzygetic polynomial per minimal conductor generator.

    Each is sum h_ij(g') y_i - f(g') c_j(g') y_{n+1}; all are exact
    multiples of F, and the quotients (extraneous factors) are returned.
    """
    from jonq.syzygies import conductor_data

    monoid = monoid or implicitize(P, budget)
    data = conductor or conductor_data(P.base_ideal_I(), P.g, budget=budget)
    ginv = list(P.cremona.inverse.coords)
    mring = P.monoid_ring
    y_last = Polynomial.variable(mring, P.last_var)
    fg = P.f.substitute(ginv)
    out = []
    for j, cj in enumerate(data.conductors):
        col = [data.content.entries[i][j] for i in range(len(ginv))]
        acc = Polynomial.zero(mring)
        for i, h in enumerate(col):
            if h.is_zero():
                continue
            acc = acc + h.substitute(ginv).map_ring(mring) * Polynomial.variable(
                mring, P.cremona.target.names[i]
            )
        acc = acc - y_last * (fg * cj.substitute(ginv)).map_ring(mring)
        factor = divide_exact(acc, monoid.F)
        out.append(SyzygeticPolynomial(cj, tuple(col), acc, factor))
    return out


@dataclass(frozen=True)
class InclusionReport:
    applicable: bool
    side_inclusion: bool | None
    side_degree_and_principal: bool | None
    equivalent: bool | None


def inclusion_case_equivalence(P, budget=None):
    """The inclusion-case biconditional, evaluated from both ends.

    g lies in I if and only if deg F = deg(f)*deg(G^-1) + 1 and some
    syzygetic polynomial generates (F).

    Applicable only when gcd(f(g'), g(g')) = 1; otherwise reported as
    not-applicable.
    """
    fg, gg = _evaluations(P)
    if not poly_gcd(fg, gg).is_constant():
        return InclusionReport(False, None, None, None)
    monoid = implicitize(P, budget)
    side_i = P.base_ideal_I().contains(P.g, budget)
    target_deg = P.f.total_degree() * P.cremona.inverse_degree + 1
    side_ii = False
    if monoid.delta == target_deg:
        for syz in syzygetic_polynomials(P, monoid, budget=budget):
            if syz.polynomial.proportional_to(monoid.F):
                side_ii = True
                break
    return InclusionReport(True, side_i, side_ii, side_i == side_ii)


@dataclass(frozen=True)
class NzdReport:
    candidate: Polynomial
    principal_match: bool  # (P) = (F)
    coprime_gcd: bool  # gcd(g(g'), f(g') D) = 1
    degree_match: bool  # deg F = deg(f) deg(G^-1) + deg(D) + 1
    agree: bool
    degree_bound_holds: bool


def nzd_case(P, monoid=None, budget=None):
    """The three equivalent conditions of the non-zero-divisor case."""
    tag = classify_case(P, budget)
    if tag.kind != "non_zero_divisor":
        raise HypothesisViolation(
            "g is not a non-zero-divisor on R/I (case classified as "
            f"{tag.kind})"
        )
    fg, gg = _evaluations(P)
    D = P.cremona.target_factor
    monoid = monoid or implicitize(P, budget)
    mring = P.monoid_ring
    y_last = Polynomial.variable(mring, P.last_var)
    cand = gg.map_ring(mring) - y_last * (fg * D).map_ring(mring)
    a = cand.proportional_to(monoid.F)
    b = poly_gcd(gg, fg * D).is_constant()
    rhs = P.f.total_degree() * P.cremona.inverse_degree + D.total_degree() + 1
    c = monoid.delta == rhs
    return NzdReport(
        candidate=cand,
        principal_match=a,
        coprime_gcd=b,
        degree_match=c,
        agree=(a == b == c),
        degree_bound_holds=monoid.delta <= rhs,
    )


def eulerian_equation(g, grad_inverse, lam):
    """The general Eulerian equation of a polar Cremona map.

    `g` reduced homaloidal of degree d+1: its partials must verify as a
    Cremona map against `grad_inverse`.  `lam` gives f = sum lam_i x_i.
    F = sum (y_i - (d+1) lam_i y_{n+1}) g'_i(y).
    """
    ring = g.ring
    partials = [g.derivative(nm) for nm in ring.names]
    if any(p.is_zero() for p in partials):
        raise HypothesisViolation(
            "not homaloidal / wrong inverse: a partial derivative vanishes"
        )
    polar = RationalMapData(ring, grad_inverse.source, tuple(partials))
    try:
        cremona = verify_cremona(polar, grad_inverse)
    except HypothesisViolation as exc:
        raise HypothesisViolation(f"not homaloidal / wrong inverse: {exc}") from None
    if len(lam) != len(ring):
        raise StructuralError("one lambda per variable is required")
    f = Polynomial.zero(ring)
    for li, nm in zip(lam, ring.names):
        f = f + Polynomial.variable(ring, nm) * li
    if f.is_zero():
        raise HypothesisViolation("f = sum lam_i x_i must be nonzero")
    P = JonquieresData.build(cremona, f, g)
    fg, gg = _evaluations(P)
    if not poly_gcd(fg, gg).is_constant():
        raise HypothesisViolation(
            "gcd(f(g'), g(g')) != 1: lambda is not general enough"
        )
    dplus1 = g.total_degree()
    mring, last = P.monoid_ring, P.last_var
    y_last = Polynomial.variable(mring, last)
    target = cremona.target
    F = Polynomial.zero(mring)
    F_delta = Polynomial.zero(target)
    F_dm1 = Polynomial.zero(target)
    for i, nm in enumerate(target.names):
        gp = cremona.inverse.coords[i]
        F_delta = F_delta + Polynomial.variable(target, nm) * gp
        F_dm1 = F_dm1 + gp * (dplus1 * lam[i])
        F = F + (
            Polynomial.variable(mring, nm) - y_last * (dplus1 * lam[i])
        ) * gp.map_ring(mring)
    if not poly_gcd(F_delta, F_dm1).is_constant():
        raise HypothesisViolation(
            "Eulerian components share a factor: lambda is not general enough"
        )
    return ImplicitMonoid(F, F_delta, F_dm1, Polynomial.constant(target, 1), last)


def verify_inverse_representative(P, monoid, budget=None):
    """Check (g'_0 : ... : g'_n) represents the inverse, modulo (F).

    All 2x2 minors of the 2 x (n+2) matrix with rows (coords evaluated at
    g') and (y_0, ..., y_{n+1}) must reduce to zero modulo F.
    """
    ginv = list(P.cremona.inverse.coords)
    mring = P.monoid_ring
    top = [c.substitute(ginv).map_ring(mring) for c in P.coordinates()]
    bottom = [Polynomial.variable(mring, nm) for nm in mring.names]
    gb = buchberger([monoid.F], ring=mring, budget=budget)
    n2 = len(top)
    for i in range(n2):
        for j in range(i + 1, n2):
            minor = top[i] * bottom[j] - top[j] * bottom[i]
            if not normal_form(minor, gb, budget).is_zero():
                return False
    return True


def oracle_implicitize(coords, target_ring=None, budget=None):
    """Independent elimination oracle for the implicit equation.

    Eliminates the source variables from (y_i - coord_i); requires the
    image to be a hypersurface (principal nonzero elimination ideal) and
    returns the canonical generator.
    """
    if not coords:
        raise StructuralError("no coordinates")
    ring = coords[0].ring
    if len(coords) != len(ring) + 1:
        raise StructuralError(
            "hypersurface oracle needs n+2 coordinates over n+1 variables"
        )
    degs = set()
    for c in coords:
        if c.ring != ring:
            raise StructuralError("coordinates over mixed variable sets")
        if not c.is_zero():
            if not c.is_homogeneous():
                raise StructuralError("coordinates must be homogeneous")
            degs.add(c.total_degree())
    if len(degs) != 1:
        raise StructuralError("coordinates of unequal degrees")
    if target_ring is None:
        target_ring = VariableSet([f"y{i}" for i in range(len(coords))])
    if len(target_ring) != len(coords):
        raise StructuralError("target ring size must match coordinate count")
    big = ring.union(target_ring)
    gens = [
        Polynomial.variable(big, nm) - c.map_ring(big)
        for nm, c in zip(target_ring.names, coords)
    ]
    elim = eliminate(IdealHandle(big, gens), ring.names, budget=budget)
    gb = elim.gb(budget=budget)
    if len(gb.generators) != 1 or gb.generators[0].is_zero():
        raise HypothesisViolation(
            "the image is not a hypersurface: elimination ideal is not "
            f"principal ({len(gb.generators)} generators)"
        )
    return gb.generators[0].canonical()
