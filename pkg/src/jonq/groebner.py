"""Buchberger-based ideal arithmetic.

Normal forms, membership, intersection, colon, saturation, elimination,
lifting, and dimension/graded-piece computations.  The engine works on
integer-primitive term lists keyed by additive order keys (see
`jonq.orders`), with Gebauer-Moeller pair pruning and normal selection
(lcm degree, sugar tie-break).  Reduced bases are unique per (ideal,
order), generators stored integer-primitive with positive lead.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as int_gcd

from jonq import kernel
from jonq.errors import BudgetExceeded, MembershipError, StructuralError
from jonq.orders import Block, DegRevLex, MonomialOrder
from jonq.ring import Polynomial, VariableSet, monomials_of_degree, poly_divmod


@dataclass
class Budget:
    """Resource limits shared across one computation.

    `max_pairs` caps processed S-pairs cumulatively; `sat_cap` caps colon
    chain length in saturations; `deg_bound` is consumed by the syzygy
    verifier.  Exhaustion raises BudgetExceeded.
    """

    max_pairs: int | None = None
    sat_cap: int = 32
    deg_bound: int | None = None
    pairs_used: int = 0

    def charge_pair(self):
        self.pairs_used += 1
        if self.max_pairs is not None and self.pairs_used > self.max_pairs:
            raise BudgetExceeded("Groebner S-pair limit", self.max_pairs)


_NO_BUDGET = Budget()


class _GBPoly:
    __slots__ = ("terms", "lm_okey", "lm_exps", "lm_mask", "lc", "sugar")

    def __init__(self, terms, order, sugar=None):
        self.terms = terms
        self.lm_okey, self.lc = terms[0]
        self.lm_exps = order.exponents(self.lm_okey)
        self.lm_mask = _mask(self.lm_exps)
        self.sugar = sugar if sugar is not None else sum(self.lm_exps)


def _mask(exps):
    m = 0
    for i, e in enumerate(exps):
        if e:
            m |= 1 << i
    return m


def _normalize_terms(terms):
    """Divide by integer content; make the lead coefficient positive."""
    if not terms:
        return terms
    g = 0
    for _, c in terms:
        g = int_gcd(g, c)
        if g == 1:
            break
    if terms[0][1] < 0:
        g = -g
    if g != 1:
        terms = [(k, c // g) for k, c in terms]
    return terms


def _to_internal(p, order):
    """Polynomial -> primitive integer term list sorted descending."""
    if p.is_zero():
        return []
    den = p.denominator_lcm()
    items = [(order.key(m), int(c * den)) for m, c in p.items()]
    items.sort(reverse=True)
    return _normalize_terms(items)


def _to_polynomial(terms, order, ring, scale=1):
    out = {}
    for okey, c in terms:
        out[order.exponents(okey)] = c * scale if scale != 1 else c
    return Polynomial(ring, out)


def _reduce(terms, elems, lead_data, order, budget=_NO_BUDGET, early_nonzero=False):
    """Fully reduce a term list; returns (reduced_terms, scale).

    The invariant is reduced_terms == scale * normal_form(input) with
    `scale` a positive rational, so dividing out `scale` recovers the
    exact normal form.  `early_nonzero` aborts on the first irreducible
    lead (enough for membership tests).
    """
    out = []
    cur = terms
    i = 0
    num, den = 1, 1
    steps = 0
    exponents = order.exponents
    find = kernel.find_reducer
    merge = kernel.merge_linear
    while i < len(cur):
        okey, c = cur[i]
        exps = exponents(okey)
        j = find(exps, _mask(exps), lead_data)
        if j < 0:
            if early_nonzero:
                return [(okey, c)], Fraction(num, den)
            out.append((okey, c))
            i += 1
            continue
        g = elems[j]
        shift = tuple(a - b for a, b in zip(okey, g.lm_okey))
        gamma = int_gcd(c, g.lc)
        a = g.lc // gamma
        b = c // gamma
        cur = merge(cur, i + 1, a, None, g.terms, 1, -b, shift)
        i = 0
        if a != 1:
            num *= a
            if out:
                out = [(k, a * v) for k, v in out]
        steps += 1
        if steps % 64 == 0 and cur:
            content = 0
            for _, v in out:
                content = int_gcd(content, v)
            for _, v in cur:
                content = int_gcd(content, v)
            if content > 1:
                out = [(k, v // content) for k, v in out]
                cur = [(k, v // content) for k, v in cur]
                den *= content
    if not out:
        return [], Fraction(num, den)
    content = 0
    for _, v in out:
        content = int_gcd(content, v)
        if content == 1:
            break
    if content > 1:
        out = [(k, v // content) for k, v in out]
        den *= content
    return out, Fraction(num, den)


def _lead_data(elems):
    order_idx = sorted(range(len(elems)), key=lambda k: elems[k].lm_okey)
    return [(elems[k].lm_mask, elems[k].lm_exps, k) for k in order_idx]


def _spoly(f, g, order):
    lcm_exps = tuple(max(a, b) for a, b in zip(f.lm_exps, g.lm_exps))
    lcm_okey = order.key(lcm_exps)
    uf = tuple(a - b for a, b in zip(lcm_okey, f.lm_okey))
    ug = tuple(a - b for a, b in zip(lcm_okey, g.lm_okey))
    gamma = int_gcd(f.lc, g.lc)
    a = g.lc // gamma
    b = f.lc // gamma
    terms = kernel.merge_linear(f.terms, 1, a, uf, g.terms, 1, -b, ug)
    deg_lcm = sum(lcm_exps)
    sugar = max(
        f.sugar + deg_lcm - sum(f.lm_exps), g.sugar + deg_lcm - sum(g.lm_exps)
    )
    return terms, sugar


def _pair_entry(G, i, j, order):
    f, g = G[i], G[j]
    lcm_exps = tuple(max(a, b) for a, b in zip(f.lm_exps, g.lm_exps))
    deg = sum(lcm_exps)
    sugar = max(
        f.sugar + deg - sum(f.lm_exps), g.sugar + deg - sum(g.lm_exps)
    )
    return (deg, sugar, order.key(lcm_exps), i, j)


def _buchberger_core(inputs, order, budget, seed=None):
    """Run Buchberger; `seed` is an existing basis whose mutual pairs are done."""
    G: list[_GBPoly] = list(seed) if seed else []
    heap: list = []
    alive: set = set()

    def lcm_of(i, j):
        return tuple(max(a, b) for a, b in zip(G[i].lm_exps, G[j].lm_exps))

    def update(h):
        # Gebauer-Moeller: prune old pairs, build a minimal new pair set.
        k = len(G)
        G.append(h)
        lmh = h.lm_exps
        new_lcm = {}
        for i in range(k):
            new_lcm[i] = tuple(max(a, b) for a, b in zip(G[i].lm_exps, lmh))
        # B criterion on surviving old pairs
        for (i, j) in list(alive):
            lij = lcm_of(i, j)
            if (
                all(e >= f for e, f in zip(lij, lmh))
                and lij != new_lcm[i]
                and lij != new_lcm[j]
            ):
                alive.discard((i, j))
        # M criterion: keep only minimal lcms among the new pairs
        groups: dict = {}
        for i in range(k):
            groups.setdefault(new_lcm[i], []).append(i)
        keys = sorted(groups.keys(), key=order.key)
        minimal = []
        for L in keys:
            if not any(all(e >= f for e, f in zip(L, M)) for M in minimal):
                minimal.append(L)
        for L in minimal:
            members = groups[L]
            # F criterion / Buchberger's coprime criterion
            if any(
                new_lcm[i]
                == tuple(a + b for a, b in zip(G[i].lm_exps, lmh))
                for i in members
            ):
                continue
            i = min(members)
            alive.add((i, k))
            heapq.heappush(heap, _pair_entry(G, i, k, order))

    prepared = []
    for terms in inputs:
        if terms:
            prepared.append(_GBPoly(terms, order))
    prepared.sort(key=lambda e: (sum(e.lm_exps), e.lm_okey))
    for h in prepared:
        lead = _lead_data(G)
        r, _ = _reduce(h.terms, G, lead, order, budget)
        if r:
            update(_GBPoly(_normalize_terms(r), order, h.sugar))
    while heap:
        entry = heapq.heappop(heap)
        i, j = entry[3], entry[4]
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        budget.charge_pair()
        sterms, sugar = _spoly(G[i], G[j], order)
        if not sterms:
            continue
        lead = _lead_data(G)
        r, _ = _reduce(sterms, G, lead, order, budget)
        if r:
            update(_GBPoly(_normalize_terms(r), order, sugar))
    return G


def _reduced_basis(G, order, budget):
    """Minimalize then tail-reduce: the unique reduced basis (primitive)."""
    if not G:
        return []
    elems = sorted(G, key=lambda e: e.lm_okey)
    minimal = []
    for e in elems:
        if not any(
            not (m.lm_mask & ~e.lm_mask)
            and all(a <= b for a, b in zip(m.lm_exps, e.lm_exps))
            for m in minimal
        ):
            minimal.append(e)
    reduced = []
    for idx, e in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        lead = _lead_data(others)
        r, _ = _reduce(e.terms, others, lead, order, budget)
        reduced.append(_GBPoly(_normalize_terms(r), order, e.sugar))
    reduced.sort(key=lambda e: e.lm_okey)
    return reduced


class GroebnerBasis:
    """A reduced Groebner basis; generators are primitive with positive lead."""

    __slots__ = ("generators", "order", "reduced", "ring", "_elems", "_lead")

    def __init__(self, generators, order, ring, elems):
        self.generators = tuple(generators)
        self.order = order
        self.ring = ring
        self.reduced = True
        self._elems = elems
        self._lead = _lead_data(elems)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.generators))

    def lead_exponents(self):
        return [e.lm_exps for e in self._elems]

    def contains_unit(self):
        return any(not any(e.lm_exps) for e in self._elems)


def buchberger(gens, order=None, budget=None, ring=None):
    """Reduced Groebner basis of the given generators; deterministic."""
    gens = [g for g in gens if isinstance(g, Polynomial)]
    nonzero = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise StructuralError("buchberger needs a ring or generators")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise StructuralError("generators over mixed variable sets")
    order = order or DegRevLex(len(ring))
    if order.nvars != len(ring):
        raise StructuralError("order arity does not match the variable set")
    budget = budget or Budget()
    internal = [_to_internal(g, order) for g in nonzero]
    G = _buchberger_core(internal, order, budget)
    reduced = _reduced_basis(G, order, budget)
    polys = [_to_polynomial(e.terms, order, ring) for e in reduced]
    return GroebnerBasis(polys, order, ring, reduced)


def normal_form(p, gb, budget=None):
    """The unique remainder of p modulo the basis; zero iff p is a member."""
    if p.ring != gb.ring:
        raise StructuralError("polynomial and basis over different variable sets")
    if p.is_zero():
        return p
    budget = budget or Budget()
    den = p.denominator_lcm()
    terms = sorted(
        ((gb.order.key(m), int(c * den)) for m, c in p.items()), reverse=True
    )
    r, scale = _reduce(terms, gb._elems, gb._lead, gb.order, budget)
    if not r:
        return Polynomial.zero(p.ring)
    restore = Fraction(1, den) / scale
    out = {}
    for okey, c in r:
        out[gb.order.exponents(okey)] = c * restore
    return Polynomial(p.ring, out)


def is_member(p, gb, budget=None):
    if p.is_zero():
        return True
    budget = budget or Budget()
    terms = _to_internal(p, gb.order)
    r, _ = _reduce(terms, gb._elems, gb._lead, gb.order, budget, early_nonzero=True)
    return not r


class IdealHandle:
    """An ideal presented by generators, with cached Groebner bases."""

    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring, gens=()):
        self.ring = ring
        clean = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise StructuralError("ideal generators must be polynomials")
            if g.ring != ring:
                raise StructuralError("ideal generators over mixed variable sets")
            if not g.is_zero():
                clean.append(g)
        self.gens = tuple(clean)
        self._cache = {}

    @classmethod
    def of(cls, *gens):
        if not gens:
            raise StructuralError("IdealHandle.of needs at least one generator")
        return cls(gens[0].ring, gens)

    def is_zero_ideal(self):
        return not self.gens

    def homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def gb(self, order=None, budget=None):
        order = order or DegRevLex(len(self.ring))
        sig = order.signature()
        got = self._cache.get(sig)
        if got is not None:
            return got
        basis = buchberger(self.gens, order, budget, ring=self.ring)
        self._cache[sig] = basis
        return basis

    def contains(self, p, budget=None):
        if p.is_zero():
            return True
        if self.is_zero_ideal():
            return False
        return is_member(p, self.gb(budget=budget), budget)

    def contains_ideal(self, other, budget=None):
        return all(self.contains(g, budget) for g in other.gens)

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens[:4])
        more = ", ..." if len(self.gens) > 4 else ""
        return f"Ideal({inside}{more})"


def ideal_equal(I, J, budget=None):
    """Equality via reduced degrevlex Groebner bases."""
    if I.ring != J.ring:
        raise StructuralError("ideals over different variable sets")
    if I.is_zero_ideal() or J.is_zero_ideal():
        return I.is_zero_ideal() and J.is_zero_ideal()
    return I.gb(budget=budget).generators == J.gb(budget=budget).generators


def unit_ideal(ring):
    return IdealHandle(ring, (Polynomial.constant(ring, 1),))


def is_unit_ideal(I, budget=None):
    if I.is_zero_ideal():
        return False
    return I.gb(budget=budget).contains_unit()


def multiply_ideal(I, f):
    """The ideal f*I."""
    return IdealHandle(I.ring, tuple(g * f for g in I.gens))


def minimalize_generators(gens, budget=None, ring=None):
    """Drop generators lying in the ideal of the earlier ones (degree order).

    For homogeneous input this produces a minimal generating set; the
    processing order (degree, then degrevlex key of the lead) makes the
    output deterministic.
    """
    if ring is None:
        if not gens:
            return []
        ring = gens[0].ring
    order = DegRevLex(len(ring))
    budget = budget or Budget()
    items = [g.canonical() for g in gens if not g.is_zero()]
    items.sort(key=lambda g: (g.total_degree(), order.key(g.lead_term(order)[0])))
    kept = []
    elems = []
    for g in items:
        terms = _to_internal(g, order)
        if elems:
            r, _ = _reduce(terms, elems, _lead_data(elems), order, budget, early_nonzero=True)
            if not r:
                continue
        kept.append(g)
        elems = _buchberger_core([terms], order, budget, seed=elems)
    return kept


def _aux_ring(ring, base="t"):
    name = ring.fresh_name(base)
    aux = VariableSet((name,) + ring.names)
    return aux, name


def intersect(I, J, budget=None):
    """I intersect J via the auxiliary-variable elimination construction."""
    if I.ring != J.ring:
        raise StructuralError("ideals over different variable sets")
    if I.is_zero_ideal() or J.is_zero_ideal():
        return IdealHandle(I.ring, ())
    ring = I.ring
    aux, tname = _aux_ring(ring)
    t = Polynomial.variable(aux, tname)
    one = Polynomial.constant(aux, 1)
    gens = [t * g.map_ring(aux) for g in I.gens]
    gens += [(one - t) * g.map_ring(aux) for g in J.gens]
    K = IdealHandle(aux, gens)
    elim = eliminate(K, (tname,), budget=budget)
    return IdealHandle(ring, tuple(g.restrict_to(ring) for g in elim.gens))


def colon(I, g, budget=None, minimalize=True):
    """The conductor I : (g), via intersect(I, (g)) / g, minimalized."""
    if not isinstance(g, Polynomial):
        raise StructuralError("colon denominator must be a polynomial")
    if g.is_zero():
        raise StructuralError("colon by zero")
    if g.ring != I.ring:
        raise StructuralError("colon: mixed variable sets")
    if g.is_constant():
        return IdealHandle(I.ring, I.gens)
    if I.is_zero_ideal():
        return IdealHandle(I.ring, ())
    meet = intersect(I, IdealHandle.of(g), budget=budget)
    quots = [q / g for q in meet.gens]
    if minimalize:
        quots = minimalize_generators(quots, budget=budget, ring=I.ring)
    return IdealHandle(I.ring, tuple(quots))


def colon_ideal(I, J, budget=None):
    """I : J = intersection of I : (b) over the generators b of J."""
    if J.is_zero_ideal():
        raise StructuralError("colon by the zero ideal")
    result = None
    for b in J.gens:
        step = colon(I, b, budget=budget, minimalize=False)
        result = step if result is None else intersect(result, step, budget=budget)
    gens = minimalize_generators(result.gens, budget=budget, ring=I.ring)
    return IdealHandle(I.ring, tuple(gens))


def saturate(I, J, budget=None):
    """I : J^infinity with per-generator stabilization exponents.

    Computed as the intersection over generators b of J of the stabilized
    chains I : (b)^k; returns (ideal, exponents) where exponents[j] is the
    k at which the chain for the j-th generator stabilized.
    """
    if J.is_zero_ideal():
        raise StructuralError("saturation by the zero ideal")
    budget = budget or Budget()
    pieces = []
    exponents = []
    for b in J.gens:
        K = IdealHandle(I.ring, I.gens)
        k = 0
        while True:
            if k >= budget.sat_cap:
                raise BudgetExceeded("saturation chain length", budget.sat_cap)
            K2 = colon(K, b, budget=budget)
            if ideal_equal(K2, K, budget=budget):
                break
            K = K2
            k += 1
        pieces.append(K)
        exponents.append(k)
    result = pieces[0]
    for piece in pieces[1:]:
        result = intersect(result, piece, budget=budget)
    gens = minimalize_generators(result.gens, budget=budget, ring=I.ring)
    return IdealHandle(I.ring, tuple(gens)), exponents


def eliminate(I, drop_names, budget=None):
    """I intersect k[remaining variables], via a block order."""
    drop = tuple(drop_names)
    if not drop:
        return I
    ring = I.ring
    drop_idx = tuple(ring.index(n) for n in drop)
    if len(drop_idx) >= len(ring):
        raise StructuralError("cannot eliminate every variable")
    order = Block(len(ring), drop_idx)
    gb = I.gb(order, budget=budget)
    drop_set = set(drop_idx)
    keep_names = tuple(n for i, n in enumerate(ring.names) if i not in drop_set)
    small = VariableSet(keep_names)
    kept = []
    for g in gb.generators:
        if all(all(m[i] == 0 for i in drop_idx) for m in g.terms()):
            kept.append(g.restrict_to(small))
    return IdealHandle(small, tuple(kept))


# -- lift (division with tracking) ------------------------------------------


def _track_reduce(p, basis, order):
    """Divide p by tracked basis; returns (remainder, quotients)."""
    quots = [Polynomial.zero(p.ring) for _ in basis]
    rem_terms = dict(p.items())
    out = {}
    ring = p.ring
    lead_cache = [(b[0].lead_term(order)) for b in basis]
    while rem_terms:
        m = max(rem_terms, key=order.key)
        c = rem_terms.pop(m)
        hit = -1
        for idx, (lm, lc) in enumerate(lead_cache):
            if all(a >= b for a, b in zip(m, lm)):
                hit = idx
                break
        if hit < 0:
            out[m] = c
            continue
        lm, lc = lead_cache[hit]
        u = tuple(a - b for a, b in zip(m, lm))
        qc = Fraction(c, 1) / lc
        mono = Polynomial.monomial(ring, u, qc)
        quots[hit] = quots[hit] + mono
        for mm, cc in basis[hit][0].items():
            if mm == lm:
                continue
            key = tuple(a + b for a, b in zip(u, mm))
            s = rem_terms.get(key, 0) - qc * cc
            if s:
                rem_terms[key] = s
            else:
                rem_terms.pop(key, None)
    return Polynomial(ring, out), quots


def lift(p, gens, budget=None):
    """Write p = sum h_i * gens_i; raises MembershipError if impossible.

    Tracked Buchberger plus division-with-tracking; for homogeneous data
    each h_i is homogeneous of degree deg(p) - deg(gens_i) (or zero).
    """
    if not gens:
        raise MembershipError("no generators to lift against")
    ring = gens[0].ring
    if p.ring != ring:
        raise StructuralError("lift: mixed variable sets")
    if p.is_zero():
        return [Polynomial.zero(ring) for _ in gens]
    order = DegRevLex(len(ring))
    basis = []
    for i, g in enumerate(gens):
        if g.ring != ring:
            raise StructuralError("lift: mixed variable sets")
        if g.is_zero():
            continue
        reps = [Polynomial.zero(ring) for _ in gens]
        reps[i] = Polynomial.constant(ring, 1)
        basis.append((g, reps))
    if not basis:
        raise MembershipError("cannot lift a nonzero polynomial over zeros")
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    pairs.sort(key=lambda ij: _lift_pair_key(basis, ij, order))
    while pairs:
        pairs.sort(key=lambda ij: _lift_pair_key(basis, ij, order))
        i, j = pairs.pop(0)
        f, frep = basis[i]
        g, grep = basis[j]
        lmf, lcf = f.lead_term(order)
        lmg, lcg = g.lead_term(order)
        lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
        if lcm == tuple(a + b for a, b in zip(lmf, lmg)):
            continue  # coprime leads
        mf = Polynomial.monomial(ring, tuple(a - b for a, b in zip(lcm, lmf)), Fraction(1, 1) / lcf)
        mg = Polynomial.monomial(ring, tuple(a - b for a, b in zip(lcm, lmg)), Fraction(1, 1) / lcg)
        s = f * mf - g * mg
        srep = [a * mf - b * mg for a, b in zip(frep, grep)]
        r, quots = _track_reduce(s, basis, order)
        if r.is_zero():
            continue
        rrep = [
            srep[k] - sum((q * basis[t][1][k] for t, q in enumerate(quots)), Polynomial.zero(ring))
            for k in range(len(gens))
        ]
        new_idx = len(basis)
        basis.append((r, rrep))
        pairs.extend((t, new_idx) for t in range(new_idx))
    r, quots = _track_reduce(p, basis, order)
    if not r.is_zero():
        raise MembershipError("polynomial is not in the ideal of the generators")
    out = []
    for k in range(len(gens)):
        h = Polynomial.zero(ring)
        for t, q in enumerate(quots):
            if not q.is_zero():
                h = h + q * basis[t][1][k]
        out.append(h)
    return out


def _lift_pair_key(basis, ij, order):
    i, j = ij
    lmf, _ = basis[i][0].lead_term(order)
    lmg, _ = basis[j][0].lead_term(order)
    lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
    return (sum(lcm), order.key(lcm), i, j)


# -- combinatorics on leading terms ------------------------------------------


def dim_and_codim(I, budget=None):
    """Krull dimension of R/I and the codimension of I.

    Combinatorial algorithm on the leading-term ideal: the dimension is
    the largest size of a variable subset containing no lead-monomial
    support.  Errors on the unit ideal.
    """
    n = len(I.ring)
    if I.is_zero_ideal():
        return n, 0
    gb = I.gb(budget=budget)
    if gb.contains_unit():
        raise StructuralError("dimension of the unit ideal is undefined")
    supports = []
    for exps in gb.lead_exponents():
        supports.append(frozenset(i for i, e in enumerate(exps) if e))
    from itertools import combinations

    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if not any(sup <= sset for sup in supports):
                return size, n - size
    return 0, n


def graded_piece_dim(I, mu, budget=None):
    """dim_k of the degree-mu piece of a homogeneous ideal."""
    if mu < 0:
        return 0
    n = len(I.ring)
    if I.is_zero_ideal():
        return 0
    if not I.homogeneous():
        raise StructuralError("graded_piece_dim needs a homogeneous ideal")
    gb = I.gb(budget=budget)
    lms = gb.lead_exponents()
    total = 0
    standard = 0
    for mono in monomials_of_degree(n, mu):
        total += 1
        if not any(all(a >= b for a, b in zip(mono, lm)) for lm in lms):
            standard += 1
    return total - standard
