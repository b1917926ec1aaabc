"""Rees presentations, birational downgrading, and monoid association.

The Rees ideal of a tuple of forms is computed by eliminating the Rees
parameter; membership of a candidate in the *kernel* presentation is
decided by substitution (y_i -> t*g_i), which is cheap and exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from jonq.birational import RationalMapData, compose, projectively_equal
from jonq.errors import BudgetExceeded, StructuralError
from jonq.groebner import (
    Budget,
    IdealHandle,
    dim_and_codim,
    eliminate,
    ideal_equal,
    saturate,
)
from jonq.implicitize import implicitize, oracle_implicitize
from jonq.ring import Polynomial, VariableSet, divide_exact, poly_gcd


@dataclass(frozen=True)
class ReesPresentation:
    """Bigraded generators of a Rees-type ideal in k[x; y].

    `carrier` holds the parametrizing forms when the presentation is a
    full kernel (roles other than 'downgraded'); kernel membership is then
    a substitution test.
    """

    ambient: VariableSet
    x_names: tuple
    y_names: tuple
    generators: tuple
    role: str
    carrier: tuple | None = None

    def __post_init__(self):
        split = (
            tuple(self.ambient.index(n) for n in self.x_names),
            tuple(self.ambient.index(n) for n in self.y_names),
        )
        for g in self.generators:
            info = g.degree_info(split)
            if not info.bihomogeneous:
                raise StructuralError(f"Rees generator is not bihomogeneous: {g}")

    def handle(self):
        return IdealHandle(self.ambient, self.generators)

    def x_indices(self):
        return tuple(self.ambient.index(n) for n in self.x_names)

    def kernel_contains(self, h, budget=None):
        """Membership in the presented kernel via substitution.

        Valid because the presentation is ker(y_i -> t*carrier_i); for the
        'downgraded' role (not a kernel) this is unavailable.
        """
        if self.carrier is None:
            raise StructuralError(
                "kernel membership needs a carrier parametrization"
            )
        xring = self.carrier[0].ring
        aux = xring.extended(xring.fresh_name("t"))
        t = Polynomial.variable(aux, aux.names[-1])
        images = []
        by_name = {}
        for nm in xring.names:
            by_name[nm] = Polynomial.variable(aux, nm)
        for nm, c in zip(self.y_names, self.carrier):
            by_name[nm] = t * c.map_ring(aux)
        for nm in self.ambient.names:
            images.append(by_name[nm])
        return h.substitute(images).is_zero()


def rees_ideal(gens, y_names=None, role="rees_ideal", budget=None):
    """Defining ideal of the Rees algebra of (gens), by eliminating t."""
    gens = list(gens)
    if not gens:
        raise StructuralError("rees_ideal needs generators")
    xring = gens[0].ring
    degs = set()
    for g in gens:
        if g.ring != xring:
            raise StructuralError("Rees generators over mixed variable sets")
        if g.is_zero() or not g.is_homogeneous():
            raise StructuralError("Rees generators must be nonzero homogeneous forms")
        degs.add(g.total_degree())
    if len(degs) != 1:
        raise StructuralError("Rees generators must share one degree")
    if y_names is None:
        y_names = tuple(f"y{i}" for i in range(len(gens)))
    y_names = tuple(y_names)
    if len(y_names) != len(gens):
        raise StructuralError("one y variable per generator")
    yring = VariableSet(y_names)
    ambient = xring.union(yring)
    tname = ambient.fresh_name("t")
    big = ambient.extended(tname)
    t = Polynomial.variable(big, tname)
    rel = [
        Polynomial.variable(big, nm) - t * g.map_ring(big)
        for nm, g in zip(y_names, gens)
    ]
    elim = eliminate(IdealHandle(big, rel), (tname,), budget=budget)
    out = tuple(g.map_ring(ambient) for g in elim.gens)
    return ReesPresentation(
        ambient, xring.names, y_names, out, role, carrier=tuple(gens)
    )


# -- framing and downgrading --------------------------------------------------


def x_framing(Q, x_indices, seed=None):
    """Write Q = sum x_i Q_i; deterministic lowest-index rule by default.

    With a seed, each term is assigned to a seeded-random x variable with
    positive exponent (framings are only stable modulo Koszul relations,
    so membership conclusions must not depend on the choice).
    """
    ring = Q.ring
    x_indices = tuple(x_indices)
    rng = random.Random(seed) if seed is not None else None
    buckets = {i: {} for i in x_indices}
    for mono, c in sorted(Q.items()):
        positive = [i for i in x_indices if mono[i] > 0]
        if not positive:
            raise StructuralError(
                "x-framing: a term has x-degree 0 and cannot be framed"
            )
        pick = positive[0] if rng is None else rng.choice(positive)
        m2 = list(mono)
        m2[pick] -= 1
        bucket = buckets[pick]
        key = tuple(m2)
        bucket[key] = bucket.get(key, 0) + c
    return [Polynomial(ring, buckets[i]) for i in x_indices]


def downgrade(Q, H, x_indices, seed=None):
    """One birational downgrading step D_H(Q) = sum H_i Q_i.

    `H` lists the inverse-map forms, already living in Q's ring (pure-y).
    A polynomial with x-degree 0 passes through unchanged.
    """
    if len(H) != len(tuple(x_indices)):
        raise StructuralError("downgrade needs one H form per x variable")
    if Q.degree_in(x_indices) == 0:
        return Q
    parts = x_framing(Q, x_indices, seed=seed)
    acc = Polynomial.zero(Q.ring)
    for h, part in zip(H, parts):
        if not part.is_zero():
            acc = acc + h * part
    return acc


def iterated_downgrades(Q, H, x_indices, seed=None):
    """[Q, D(Q), D^2(Q), ...] down to the fully downgraded pure-y stage."""
    chain = [Q]
    cur = Q
    for _ in range(Q.degree_in(x_indices)):
        cur = downgrade(cur, H, x_indices, seed=seed)
        chain.append(cur)
        if cur.is_zero():
            break
    return chain


# -- the downgraded Rees ideal -------------------------------------------------


@dataclass(frozen=True)
class DowngradeReport:
    contained_in_rees: bool
    codim: int
    codim_expected: int
    codim_matches: bool
    fully_downgraded: tuple
    all_divisible_by_F: bool
    chains: tuple  # tuple of downgrade chains (tuples of Polynomial)


def downgraded_rees_ideal(P, monoid=None, conductor=None, budget=None):
    """Assemble D = (I_rees, all iterated downgrades) and verify its facts.

    Verifies: every generator lies in the Rees kernel of (If, g); the
    codimension is n+1; every fully downgraded element is a multiple of F.
    """
    from jonq.syzygies import conductor_data

    budget = budget or Budget()
    monoid = monoid or implicitize(P, budget)
    n = P.n
    xring = P.source
    ambient = xring.union(P.monoid_ring)
    x_idx = tuple(ambient.index(nm) for nm in xring.names)
    cre = rees_ideal(
        list(P.cremona.forward.coords),
        y_names=P.cremona.target.names,
        role="cremona_rees",
        budget=budget,
    )
    gens = [g.map_ring(ambient) for g in cre.generators]
    data = conductor or conductor_data(P.base_ideal_I(), P.g, budget=budget)
    H = [h.map_ring(ambient) for h in P.cremona.inverse.coords]
    y_last = Polynomial.variable(ambient, P.last_var)
    chains = []
    for j, cj in enumerate(data.conductors):
        Q = Polynomial.zero(ambient)
        for i, nm in enumerate(P.cremona.target.names):
            h = data.content.entries[i][j]
            if not h.is_zero():
                Q = Q + h.map_ring(ambient) * Polynomial.variable(ambient, nm)
        Q = Q - (P.f * cj).map_ring(ambient) * y_last
        chains.append(tuple(iterated_downgrades(Q, H, x_idx)))
    for chain in chains:
        gens.extend(chain)
    pres = ReesPresentation(
        ambient, xring.names, P.monoid_ring.names, tuple(gens), "downgraded"
    )
    # (i) containment in the Rees kernel of (If, g)
    J_rees_stub = ReesPresentation(
        ambient,
        xring.names,
        P.monoid_ring.names,
        (),
        "rees_ideal",
        carrier=P.coordinates(),
    )
    contained = all(J_rees_stub.kernel_contains(g) for g in pres.generators)
    # (ii) codimension
    _, codim = dim_and_codim(pres.handle(), budget)
    # (iii) fully downgraded elements are multiples of F
    F_amb = monoid.F.map_ring(ambient)
    fully = tuple(chain[-1] for chain in chains)
    divisible = True
    for q in fully:
        if q.degree_in(x_idx) != 0:
            divisible = False
            continue
        try:
            divide_exact(q, F_amb)
        except Exception:
            divisible = False
    report = DowngradeReport(
        contained_in_rees=contained,
        codim=codim,
        codim_expected=n + 1,
        codim_matches=(codim == n + 1),
        fully_downgraded=fully,
        all_divisible_by_F=divisible,
        chains=tuple(chains),
    )
    return pres, report


def extraneous_factors(P, monoid=None, report=None, budget=None):
    """Quotients (fully downgraded element) / F, for inspection."""
    budget = budget or Budget()
    monoid = monoid or implicitize(P, budget)
    if report is None:
        _, report = downgraded_rees_ideal(P, monoid, budget=budget)
    out = []
    for q in report.fully_downgraded:
        restricted = q.restrict_to(P.monoid_ring)
        factor = divide_exact(restricted, monoid.F)
        out.append((restricted, factor))
    return out


# -- monoid association --------------------------------------------------------


@dataclass(frozen=True)
class MonoidParametrization:
    h_delta: Polynomial
    h_delta_minus_1: Polynomial
    coords: tuple
    sign: int
    K: IdealHandle


@dataclass(frozen=True)
class MonoidAssociationReport:
    sign: int
    paper_sign_vanishes: bool
    chosen_sign_vanishes: bool
    same_implicit_equation: bool
    composition_order: str | None  # which order reproduced the parametrization
    composition_holds: bool


def monoid_association(P, monoid=None, budget=None, check_oracle=True):
    """Build the standard monoid parametrization M sharing F, and verify.

    (a) M has the same implicit equation F (elimination oracle);
    (b) the de Jonquieres map factors as the Cremona map followed by M,
    testing both composition orders and recording which one holds.
    The last coordinate's sign is chosen so that F(M) = 0; the report also
    records whether the opposite (paper display) sign vanishes.
    """
    budget = budget or Budget()
    monoid = monoid or implicitize(P, budget)
    xring = P.source
    h_delta = monoid.F_delta.rename(xring)
    h_dm1 = monoid.F_delta_minus_1.rename(xring)
    if not poly_gcd(h_delta, h_dm1).is_constant():
        raise StructuralError("monoid components share a factor after renaming")
    xs = Polynomial.gens(xring)

    def coords_for(sign):
        return tuple(h_dm1 * x for x in xs) + (h_delta * sign,)

    def f_vanishes(sign):
        subs = [c.map_ring(xring) for c in coords_for(sign)]
        return monoid.F.substitute(list(subs)).is_zero()

    plus, minus = f_vanishes(1), f_vanishes(-1)
    if not (plus or minus):
        raise StructuralError("no sign makes F vanish on the monoid tuple")
    sign = 1 if plus else -1
    coords = coords_for(sign)
    K = IdealHandle(xring, tuple(h_dm1 * x for x in xs) + (h_delta,))
    M = MonoidParametrization(h_delta, h_dm1, coords, sign, K)

    same_F = True
    if check_oracle:
        F2 = oracle_implicitize(list(coords), P.monoid_ring, budget=budget)
        same_F = F2.proportional_to(monoid.F)

    M_map = RationalMapData(xring, P.monoid_ring, coords)
    j_coords = P.coordinates()
    order = None
    holds = False
    try:
        comp = compose(P.cremona.forward, M_map, strip=True)
        if projectively_equal(list(comp.coords), list(j_coords)):
            order = "cremona_then_monoid"
            holds = True
    except StructuralError:
        pass
    if not holds:
        try:
            comp = compose(M_map, P.cremona.forward, strip=True)
            if projectively_equal(list(comp.coords), list(j_coords)):
                order = "monoid_then_cremona"
                holds = True
        except StructuralError:
            pass
    report = MonoidAssociationReport(
        sign=sign,
        paper_sign_vanishes=minus,
        chosen_sign_vanishes=True,
        same_implicit_equation=same_F,
        composition_order=order,
        composition_holds=holds,
    )
    return M, report


@dataclass(frozen=True)
class SaturationReport:
    status: str  # holds | fails | skipped
    forward_equal: bool | None  # I_F == I_M(G) : C^inf
    backward_equal: bool | None  # I_M == I_F(G^-1) : D^inf
    forward_exponents: tuple | None
    backward_exponents: tuple | None
    reason: str = ""


def saturation_identities(P, M=None, monoid=None, budget=None):
    """Transported Rees ideals agree after saturating by C / D.

    The transport substitutes the x variables (by g, resp. g'); the second
    saturation uses D written in the x variables, which is what the
    inversion identity g_i(g'(x)) = x_i * D(x) produces.
    """
    budget = budget or Budget()
    monoid = monoid or implicitize(P, budget)
    if M is None:
        M, _ = monoid_association(P, monoid, budget, check_oracle=False)
    xring = P.source
    try:
        I_F = rees_ideal(
            list(P.coordinates()),
            y_names=P.monoid_ring.names,
            role="jonquieres_rees",
            budget=budget,
        )
        I_M = rees_ideal(
            list(M.coords),
            y_names=P.monoid_ring.names,
            role="monoid_rees",
            budget=budget,
        )
        ambient = I_F.ambient
        x_named = {nm: Polynomial.variable(ambient, nm) for nm in ambient.names}

        def transport(pres, images_for_x):
            images = []
            for nm in ambient.names:
                if nm in xring:
                    images.append(images_for_x[nm].map_ring(ambient))
                else:
                    images.append(x_named[nm])
            return [h.substitute(images) for h in pres.generators]

        g_map = dict(zip(xring.names, P.cremona.forward.coords))
        ginv_x = [c.rename(xring) for c in P.cremona.inverse.coords]
        ginv_map = dict(zip(xring.names, ginv_x))

        fwd_gens = transport(I_M, g_map)
        C_amb = P.cremona.source_factor.map_ring(ambient)
        fwd_sat, fwd_exp = saturate(
            IdealHandle(ambient, tuple(fwd_gens)), IdealHandle.of(C_amb), budget
        )
        forward_equal = ideal_equal(fwd_sat, I_F.handle(), budget)

        bwd_gens = transport(I_F, ginv_map)
        D_x = P.cremona.target_factor.rename(xring).map_ring(ambient)
        bwd_sat, bwd_exp = saturate(
            IdealHandle(ambient, tuple(bwd_gens)), IdealHandle.of(D_x), budget
        )
        backward_equal = ideal_equal(bwd_sat, I_M.handle(), budget)
    except BudgetExceeded as exc:
        return SaturationReport("skipped", None, None, None, None, f"budget: {exc}")
    status = "holds" if (forward_equal and backward_equal) else "fails"
    return SaturationReport(
        status, forward_equal, backward_equal, tuple(fwd_exp), tuple(bwd_exp)
    )
