"""Buchberger's algorithm, normal forms, intersections and colon ideals.

The engine keeps basis elements monic and applies the two classical pair
criteria (coprime leading terms, chain criterion) with normal selection,
then interreduces, so the returned basis is the unique reduced Groebner
basis for the (ideal, order) pair.  Elimination runs in an extended ring
with one auxiliary variable in front under a two-block order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .polyring import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    RingSpec,
    elimination_order,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    parse_polynomial,
)


class IdealPresentation:
    """A homogeneous ideal given by generators in a fixed ring.

    Zero generators are dropped; inhomogeneous generators are rejected.
    Groebner bases and Hilbert data are cached on the instance.
    """

    __slots__ = ("ring", "gens", "_gb_cache", "_hilbert_cache", "__weakref__")

    def __init__(self, ring: RingSpec, generators):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError(f"generator must be homogeneous: {g!r}")
            gens.append(g)
        self.ring = ring
        self.gens = tuple(gens)
        self._gb_cache = {}
        self._hilbert_cache = {}

    @classmethod
    def from_strings(cls, ring: RingSpec, texts) -> "IdealPresentation":
        return cls(ring, [parse_polynomial(t, ring) for t in texts])

    def is_zero_ideal(self) -> bool:
        return not self.gens

    def __repr__(self):
        from .polyring import poly_to_str

        body = ", ".join(poly_to_str(g) for g in self.gens) or "0"
        return f"Ideal({body})"


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingSpec
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    @cached_property
    def leading_exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.leading(self.order)[0] for g in self.elements)

    @property
    def is_unit_ideal(self) -> bool:
        return any(sum(e) == 0 for e in self.leading_exponents)


def _reduce_terms(terms, reducers, order, p):
    """Full normal form of a coefficient dict against (lt, lc_inv, terms) reducers."""
    work = dict(terms)
    out = {}
    key = order.key
    while work:
        mu = max(work, key=key)
        c = work.pop(mu)
        hit = None
        for lt, lc_inv, gterms in reducers:
            if monomial_divides(lt, mu):
                hit = (lt, lc_inv, gterms)
                break
        if hit is None:
            out[mu] = c
            continue
        lt, lc_inv, gterms = hit
        shift = monomial_div(mu, lt)
        factor = (c * lc_inv) % p
        for e, a in gterms.items():
            if e == lt:
                continue
            tgt = monomial_mul(e, shift)
            v = (work.get(tgt, 0) - factor * a) % p
            if v:
                work[tgt] = v
            elif tgt in work:
                del work[tgt]
    return out


def _reducers_of(polys, order):
    out = []
    for g in polys:
        lt, lc = g.leading(order)
        out.append((lt, g.ring.field.inv(lc), g.terms))
    return out


def _spoly(f, g, order, p):
    lt_f, lc_f = f.leading(order)
    lt_g, lc_g = g.leading(order)
    lcm = monomial_lcm(lt_f, lt_g)
    a = f.term_mul(monomial_div(lcm, lt_f), f.ring.field.inv(lc_f))
    b = g.term_mul(monomial_div(lcm, lt_g), g.ring.field.inv(lc_g))
    return a - b


def buchberger(
    generators,
    order: MonomialOrder = GREVLEX,
    strategy: str = "normal",
    groebner_prefix: int = 0,
) -> list[Polynomial]:
    """Reduced Groebner basis of the generated ideal.

    strategy "normal" picks the pending pair with the smallest lcm in the
    order; "first" processes pairs in creation order.  Both give the same
    reduced basis.  ``groebner_prefix`` marks the first k generators as
    already a Groebner basis, so their mutual pairs are skipped (used when
    extending a cached basis by new elements).
    """
    if strategy not in ("normal", "first"):
        raise ValueError(f"unknown strategy {strategy!r}")
    basis = [g.monic(order) for g in generators if not g.is_zero()]
    if not basis:
        return []
    ring = basis[0].ring
    p = ring.field.p
    key = order.key
    lts = [g.leading(order)[0] for g in basis]

    pending = set()
    for j in range(len(basis)):
        for i in range(j):
            if j >= groebner_prefix:
                pending.add((i, j))

    def lcm_key(pair):
        return key(monomial_lcm(lts[pair[0]], lts[pair[1]]))

    while pending:
        if strategy == "normal":
            pair = min(pending, key=lambda pr: (lcm_key(pr), pr))
        else:
            pair = min(pending, key=lambda pr: (pr[1], pr[0]))
        pending.discard(pair)
        i, j = pair
        lt_i, lt_j = lts[i], lts[j]
        lcm = monomial_lcm(lt_i, lt_j)
        # coprime leading terms: S-polynomial reduces to zero
        if lcm == monomial_mul(lt_i, lt_j):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not monomial_divides(lts[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                skip = True
                break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], order, p)
        reduced = _reduce_terms(s.terms, _reducers_of(basis, order), order, p)
        if not reduced:
            continue
        h = Polynomial(ring, reduced).monic(order)
        basis.append(h)
        lts.append(h.leading(order)[0])
        new = len(basis) - 1
        for m in range(new):
            pending.add((m, new))
    return _interreduce(basis, order)


def _interreduce(basis, order):
    if not basis:
        return []
    ring = basis[0].ring
    p = ring.field.p
    # minimal leading terms, smallest first; duplicates drop
    ordered = sorted(basis, key=lambda g: order.key(g.leading(order)[0]))
    kept = []
    for g in ordered:
        lt = g.leading(order)[0]
        if any(monomial_divides(h.leading(order)[0], lt) for h in kept):
            continue
        kept.append(g)
    out = []
    for idx, g in enumerate(kept):
        others = kept[:idx] + kept[idx + 1 :]
        if others:
            reduced = _reduce_terms(g.terms, _reducers_of(others, order), order, p)
            g = Polynomial(ring, reduced)
        out.append(g.monic(order))
    out.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return out


def groebner_basis(
    ideal: IdealPresentation, order: MonomialOrder = GREVLEX, strategy: str = "normal"
) -> GroebnerBasis:
    token = order.cache_token()
    cached = ideal._gb_cache.get(token)
    if cached is not None:
        return cached
    gb = GroebnerBasis(ideal.ring, order, tuple(buchberger(ideal.gens, order, strategy)))
    ideal._gb_cache[token] = gb
    return gb


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of f modulo the Groebner basis."""
    if f.is_zero() or not gb.elements:
        return f
    reduced = _reduce_terms(
        f.terms, _reducers_of(gb.elements, gb.order), gb.order, f.ring.field.p
    )
    return Polynomial(f.ring, reduced)


def ideal_contains(ideal: IdealPresentation, other: IdealPresentation, order=GREVLEX) -> bool:
    """True iff every generator of ``other`` lies in ``ideal``."""
    gb = groebner_basis(ideal, order)
    return all(normal_form(g, gb).is_zero() for g in other.gens)


def ideals_equal(a: IdealPresentation, b: IdealPresentation, order=GREVLEX) -> bool:
    return ideal_contains(a, b, order) and ideal_contains(b, a, order)


def _lift(f: Polynomial, ext: RingSpec, w_degree: int = 0) -> Polynomial:
    return Polynomial._raw(ext, {(w_degree,) + e: c for e, c in f.terms.items()})


def _monomial_generators(ideal: IdealPresentation):
    """Exponent tuples when every generator is a single term, else None."""
    monos = []
    for g in ideal.gens:
        if len(g.terms) != 1:
            return None
        monos.append(next(iter(g.terms)))
    return monos


def _minimalize_monomials(monos):
    kept = []
    for e in sorted(set(monos), key=lambda e: (sum(e), e)):
        if not any(monomial_divides(k, e) for k in kept):
            kept.append(e)
    return kept


def intersect(a: IdealPresentation, b: IdealPresentation) -> IdealPresentation:
    """Ideal intersection via a single auxiliary elimination variable.

    Two monomial ideals short-circuit to the pairwise lcm generators.
    """
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    ring = a.ring
    if a.is_zero_ideal() or b.is_zero_ideal():
        return IdealPresentation(ring, [])
    am = _monomial_generators(a)
    bm = _monomial_generators(b)
    if am is not None and bm is not None:
        lcms = _minimalize_monomials(
            [monomial_lcm(e, f) for e in am for f in bm]
        )
        gens = [
            Polynomial.monomial(ring, e)
            for e in sorted(lcms, key=GREVLEX.key, reverse=True)
        ]
        return IdealPresentation(ring, gens)
    ext = ring.prepend_variable("w")
    w = Polynomial.variable(ext, 0)
    one = Polynomial.one(ext)
    mixed = [w * _lift(f, ext) for f in a.gens]
    mixed += [(one - w) * _lift(g, ext) for g in b.gens]
    basis = buchberger(mixed, elimination_order(1))
    kept = []
    for g in basis:
        if all(e[0] == 0 for e in g.terms):
            kept.append(Polynomial._raw(ring, {e[1:]: c for e, c in g.terms.items()}))
    return IdealPresentation(ring, kept)


def exact_divide(g: Polynomial, f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Quotient g / f; raises if f does not divide g exactly."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = g.ring
    p = ring.field.p
    lt_f, lc_f = f.leading(order)
    inv = ring.field.inv(lc_f)
    work = dict(g.terms)
    quotient = {}
    key = order.key
    while work:
        mu = max(work, key=key)
        c = work.pop(mu)
        if not monomial_divides(lt_f, mu):
            raise ValueError("polynomial is not an exact multiple")
        shift = monomial_div(mu, lt_f)
        factor = (c * inv) % p
        quotient[shift] = factor
        for e, a in f.terms.items():
            if e == lt_f:
                continue
            tgt = monomial_mul(e, shift)
            v = (work.get(tgt, 0) - factor * a) % p
            if v:
                work[tgt] = v
            elif tgt in work:
                del work[tgt]
    return Polynomial(ring, quotient)


def colon_single(ideal: IdealPresentation, f: Polynomial) -> IdealPresentation:
    """(I : f) through (I intersect (f)) with each generator divided by f."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    ring = ideal.ring
    principal = IdealPresentation(ring, [f])
    meet = intersect(ideal, principal)
    return IdealPresentation(ring, [exact_divide(g, f) for g in meet.gens])


def colon(ideal: IdealPresentation, polys) -> IdealPresentation:
    """(I : (f_1..f_k)) as the intersection of the single colon ideals."""
    polys = list(polys)
    if not polys:
        raise ValueError("colon needs at least one polynomial")
    result = None
    for f in polys:
        single = colon_single(ideal, f)
        result = single if result is None else intersect(result, single)
    return result


def sum_ideal(ideal: IdealPresentation, extra) -> IdealPresentation:
    """I + (extra generators), reusing the cached basis of I as a seed."""
    return IdealPresentation(ideal.ring, list(ideal.gens) + list(extra))


def groebner_basis_extending(
    gb: GroebnerBasis, extra, order: MonomialOrder = GREVLEX
) -> GroebnerBasis:
    """Groebner basis of (gb) + (extra), skipping pairs inside gb."""
    seed = list(gb.elements)
    basis = buchberger(seed + list(extra), order, groebner_prefix=len(seed))
    return GroebnerBasis(gb.ring, order, tuple(basis))
