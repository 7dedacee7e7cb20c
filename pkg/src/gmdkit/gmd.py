"""Generalized minimum distance function of a graded quotient.

For degree t and count l, the function measures e(S/I) minus the largest
multiplicity e(S/(I + (F))) over sets F of l linearly independent degree-t
elements of S/I whose annihilator is nonzero; when no such F exists the
value is e(S/I) itself.

Two routes are implemented and kept independent:

* ``delta_bruteforce`` enumerates l-dimensional subspaces of the degree-t
  piece, tests the annihilator, and computes each multiplicity from a fresh
  Groebner/Hilbert computation of I + (F).
* ``delta_fast`` (certified reduced profiles, fixed-dimension convention)
  maximizes the sum of top-prime multiplicities over subsets of the minimal
  primes whose intersection is large enough in degree t, which is what
  multiplicity additivity over the primes predicts.

Multiplicity conventions: "fixed-dim" always measures e at dim(S/I), so a
quotient whose dimension drops contributes 0; "own-dim" measures each
quotient at its own dimension.  The default everywhere is fixed-dim.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .errors import HypothesisError
from .gflinalg import FieldMatrix, SubspaceIterator, subspace_count
from .groebner import (
    IdealPresentation,
    colon,
    groebner_basis,
    groebner_basis_extending,
    ideal_contains,
    normal_form,
)
from .hilbert import graded_piece_of_quotient, hilbert_data, multiplicity_at_dim
from .polyring import Polynomial, monomial_to_str
from .schemes import RingProfile

FIXED_DIM = "fixed-dim"
OWN_DIM = "own-dim"
CONVENTIONS = (FIXED_DIM, OWN_DIM)


@dataclass(frozen=True)
class GmdQuery:
    """One distance evaluation request."""

    profile: RingProfile
    t: int
    ell: int
    convention: str = FIXED_DIM
    method: str = "both"

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("degree t must be at least 1")
        if self.ell < 1:
            raise ValueError("count l must be at least 1")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.method not in ("brute", "fast", "both"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class DeltaResult:
    value: int
    t: int
    ell: int
    convention: str
    method: str
    status: str  # "ok" | "empty"  (empty: no qualifying F exists)
    witness: dict | None


def subspace_to_polys(profile: RingProfile, basis_monomials, matrix: FieldMatrix):
    """Lift the rows of an RREF coefficient matrix to polynomials in S."""
    ring = profile.ring
    polys = []
    for row in matrix.to_lists():
        terms = {}
        for c, mono in zip(row, basis_monomials):
            if c:
                terms[mono] = c
        polys.append(Polynomial(ring, terms))
    return polys


def ann_nonzero(profile: RingProfile, polys, mode: str = "auto") -> bool:
    """Whether the annihilator of (the images of) the polynomials is nonzero.

    "colon" decides via (I : (F)) != I from the definition; "prime" checks
    containment in some minimal prime and needs a certified profile.  "auto"
    uses the prime route when available.  Both routes agree on certified
    reduced profiles.
    """
    if mode not in ("auto", "colon", "prime"):
        raise ValueError(f"unknown annihilator mode {mode!r}")
    if mode == "auto":
        mode = "prime" if profile.reduced_certified else "colon"
    if mode == "prime":
        if not profile.reduced_certified:
            raise HypothesisError("prime-based annihilator test needs a certified profile")
        for prime in profile.primes:
            gb = groebner_basis(prime.ideal)
            if all(normal_form(f, gb).is_zero() for f in polys):
                return True
        return False
    quotient = colon(profile.ideal, polys)
    return not ideal_contains(profile.ideal, quotient)


def _quotient_multiplicity(profile: RingProfile, polys, convention: str) -> int:
    gb = groebner_basis(profile.ideal)
    extended = groebner_basis_extending(gb, polys)
    shell = IdealPresentation(profile.ring, list(extended.elements))
    # reuse the just-computed basis rather than recomputing it
    shell._gb_cache[extended.order.cache_token()] = extended
    if convention == FIXED_DIM:
        return multiplicity_at_dim(shell, profile.dim)
    data = hilbert_data(shell)
    return data.multiplicity


def _brute_scan(profile, t, ell, convention, ann_mode, basis_monomials, start, stop):
    """Scan a contiguous index range of subspaces; return (best, index, count)."""
    it = SubspaceIterator(len(basis_monomials), ell, profile.ring.field, start, stop)
    best = None
    best_index = None
    qualifying = 0
    for index in range(start, stop):
        matrix = it.matrix_at(index)
        polys = subspace_to_polys(profile, basis_monomials, matrix)
        if not ann_nonzero(profile, polys, ann_mode):
            continue
        qualifying += 1
        value = _quotient_multiplicity(profile, polys, convention)
        if best is None or value > best:
            best = value
            best_index = index
    return best, best_index, qualifying


def _brute_scan_star(args):
    return _brute_scan(*args)


def delta_bruteforce(query: GmdQuery, jobs: int = 1, ann_mode: str = "auto") -> DeltaResult:
    """Distance value by direct subspace enumeration.

    Walks every l-dimensional subspace of the degree-t piece of S/I (the
    value only depends on the span), keeps those with nonzero annihilator,
    and takes the maximum quotient multiplicity.  ``jobs`` partitions the
    index range; results are identical for any worker count.
    """
    profile = query.profile
    e_total = profile.multiplicity
    basis_monomials = tuple(graded_piece_of_quotient(profile.ideal, query.t))
    m = len(basis_monomials)
    if query.ell > m:
        return DeltaResult(
            e_total, query.t, query.ell, query.convention, "brute", "empty", None
        )
    total = subspace_count(m, query.ell, profile.ring.field)
    chunks = SubspaceIterator(m, query.ell, profile.ring.field).split(max(1, jobs))
    tasks = [
        (profile, query.t, query.ell, query.convention, ann_mode, basis_monomials, c.start, c.stop)
        for c in chunks
        if c.stop > c.start
    ]
    if jobs <= 1 or len(tasks) <= 1:
        partials = [_brute_scan_star(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_brute_scan_star, tasks))
    best = None
    best_index = None
    for value, index, _count in partials:
        if value is None:
            continue
        if best is None or value > best or (value == best and index < best_index):
            best = value
            best_index = index
    if best is None:
        return DeltaResult(
            e_total, query.t, query.ell, query.convention, "brute", "empty", None
        )
    matrix = SubspaceIterator(m, query.ell, profile.ring.field).matrix_at(best_index)
    witness = {
        "subspace_index": best_index,
        "matrix": matrix.to_lists(),
        "basis_monomials": [monomial_to_str(profile.ring, mo) for mo in basis_monomials],
        "quotient_multiplicity": best,
        "searched": total,
    }
    return DeltaResult(
        e_total - best, query.t, query.ell, query.convention, "brute", "ok", witness
    )


def delta_fast(query: GmdQuery) -> DeltaResult:
    """Distance value through the minimal primes (fixed-dim, certified only).

    Maximizes the top-prime multiplicity sum of a subset of minimal primes
    whose intersection still has at least l independent degree-t elements
    modulo I.  Subsets are scanned in bitmask order; the first maximizer is
    the witness.
    """
    profile = query.profile
    if not profile.reduced_certified:
        raise HypothesisError("fast path needs a certified reduced profile")
    if query.convention != FIXED_DIM:
        raise HypothesisError("fast path is defined for the fixed-dim convention")
    e_total = profile.multiplicity
    a = len(profile.primes)
    best = None
    best_tau = None
    for mask in range(1, 1 << a):
        indices = tuple(i for i in range(a) if mask & (1 << i))
        family = profile.intersect_family(indices)
        if family.quotient_dim(query.t) < query.ell:
            continue
        value = sum(profile.primes[i].mult for i in indices if profile.primes[i].is_top)
        if best is None or value > best:
            best = value
            best_tau = indices
    if best is None:
        return DeltaResult(
            e_total, query.t, query.ell, query.convention, "fast", "empty", None
        )
    witness = {"prime_subset": list(best_tau)}
    return DeltaResult(
        e_total - best, query.t, query.ell, query.convention, "fast", "ok", witness
    )


def delta(query: GmdQuery, jobs: int = 1) -> DeltaResult:
    """Dispatch on the query method; "both" cross-checks brute against fast."""
    if query.method == "brute":
        return delta_bruteforce(query, jobs=jobs)
    if query.method == "fast":
        return delta_fast(query)
    brute = delta_bruteforce(query, jobs=jobs)
    fast = delta_fast(replace(query, method="fast"))
    if brute.value != fast.value or brute.status != fast.status:
        raise RuntimeError(
            f"brute/fast disagreement at t={query.t}, l={query.ell}: "
            f"{brute.value}/{brute.status} vs {fast.value}/{fast.status}"
        )
    witness = {"brute": brute.witness, "fast": fast.witness}
    return DeltaResult(
        brute.value, query.t, query.ell, query.convention, "both", brute.status, witness
    )


@dataclass(frozen=True)
class StabilizationResult:
    value: int
    case: int  # 1..7 in the case analysis of the limit value
    detail: str


def _require_certified(profile: RingProfile):
    if profile.classification == "unknown":
        raise HypothesisError(
            "profile classification is unknown (no certified minimal primes); "
            "use brute-force stabilization over an explicit degree range instead"
        )


def stabilization_value(profile: RingProfile, ell: int) -> StabilizationResult:
    """Limit of the distance function in t for fixed l, by case analysis."""
    if ell < 1:
        raise ValueError("count l must be at least 1")
    cls = profile.classification
    if cls == "domain":
        return StabilizationResult(profile.multiplicity, 2, "domain: annihilators vanish")
    _require_certified(profile)
    e_total = profile.multiplicity
    if cls == "mixed_low_dim_ge2":
        return StabilizationResult(0, 1, "a low-dimensional prime of dimension >= 2 exists")
    if cls == "unmixed_dim_ge2":
        return StabilizationResult(
            profile.min_top_multiplicity(), 3, "unmixed of dimension >= 2"
        )
    if cls == "one_dimensional":
        mults = [p.mult for p in profile.primes]
        e_min = min(mults)
        if ell <= e_total - e_min:
            a = len(mults)
            best = None
            for mask in range(1, (1 << a) - 1):
                s = sum(mults[i] for i in range(a) if mask & (1 << i))
                if s >= ell and (best is None or s < best):
                    best = s
            assert best is not None
            return StabilizationResult(
                best, 4, "one-dimensional, minimal prime-subset multiplicity sum"
            )
        return StabilizationResult(e_total, 5, "one-dimensional, l too large for proper subsets")
    if cls == "mixed_low_dim1":
        lows = profile.low_indices()
        low_family = profile.intersect_family(lows)
        low_data = low_family.hilbert()
        e_low = low_data.multiplicity
        if ell <= e_low:
            return StabilizationResult(0, 6, "l fits inside the one-dimensional locus")
        return StabilizationResult(
            profile.min_top_multiplicity(), 7, "l exceeds the one-dimensional locus"
        )
    raise HypothesisError(f"no stabilization rule for classification {cls!r}")


@dataclass(frozen=True)
class RegularityResult:
    value: int | None
    exact: bool
    method: str
    scanned_to: int | None = None
    stable_value: int | None = None


def _first_degree_reaching(profile: RingProfile, family, ell: int) -> int | None:
    """Least t >= 1 with dim_K[J/I]_t >= l, or None when that never happens.

    Past the polynomial regime the dimension follows a polynomial of degree
    below dim(R): enough consecutive equal values certify constancy, and a
    non-constant one is unbounded, so a forward scan terminates.
    """
    regime = family.regime()
    for t in range(1, regime + 1):
        if family.quotient_dim(t) >= ell:
            return t
    window = profile.dim + 1
    values = [family.quotient_dim(regime + k) for k in range(window + 1)]
    for k, v in enumerate(values):
        if v >= ell:
            return regime + k
    if len(set(values)) == 1:
        return None  # constant forever, below l
    t = regime + window + 1
    cap = regime + window + 10 * ell + 10 * profile.multiplicity + 1000
    while t <= cap:
        if family.quotient_dim(t) >= ell:
            return t
        t += 1
    raise RuntimeError("degree scan exceeded its safety cap")


def regularity_index(profile: RingProfile, ell: int, scan_limit: int | None = None) -> RegularityResult:
    """Least degree where the distance function reaches its limit.

    Certified profiles use closed forms where the case analysis provides
    them and otherwise a certified iteration whose stopping degree is the
    largest degree at which any prime-subset family first reaches l
    dimensions.  Uncertified profiles cannot be given a sound stopping rule,
    so only a lower bound over a scanned range is reported.
    """
    if ell < 1:
        raise ValueError("count l must be at least 1")
    cls = profile.classification
    if cls == "domain":
        return RegularityResult(1, True, "constant", stable_value=profile.multiplicity)
    if cls == "unknown":
        if scan_limit is None:
            raise HypothesisError(
                "uncertified profile: exact regularity index needs certified primes; "
                "pass scan_limit for a lower bound"
            )
        table = [
            delta_bruteforce(GmdQuery(profile, t, ell, method="brute")).value
            for t in range(1, scan_limit + 1)
        ]
        last_change = 1
        for t in range(2, scan_limit + 1):
            if table[t - 1] != table[t - 2]:
                last_change = t
        return RegularityResult(last_change, False, "lower-bound-scan", scanned_to=scan_limit)

    if cls == "mixed_low_dim_ge2":
        family = profile.intersect_family(profile.top_indices())
        t = _first_degree_reaching(profile, family, ell)
        assert t is not None, "top-prime intersection has dimension >= 2"
        s = stabilization_value(profile, ell).value
        return RegularityResult(t, True, "closed-form-mixed", stable_value=s)

    if cls == "unmixed_dim_ge2":
        mults = [p.mult for p in profile.primes]
        e_min = min(mults)
        a = len(mults)
        best = None
        for i in range(a):
            if mults[i] != e_min:
                continue
            family = profile.intersect_family([j for j in range(a) if j != i])
            t = _first_degree_reaching(profile, family, ell)
            assert t is not None, "complementary intersection has dimension >= 2"
            if best is None or t < best:
                best = t
        s = stabilization_value(profile, ell).value
        return RegularityResult(best, True, "closed-form-unmixed", stable_value=s)

    # one_dimensional and mixed_low_dim1: iterate toward the limit the case
    # analysis provides, capped by the largest degree at which any
    # prime-subset family first holds l dimensions
    s = stabilization_value(profile, ell).value
    a = len(profile.primes)
    cap = 1
    for mask in range(1, 1 << a):
        indices = tuple(i for i in range(a) if mask & (1 << i))
        family = profile.intersect_family(indices)
        t = _first_degree_reaching(profile, family, ell)
        if t is not None:
            cap = max(cap, t)
    for t in range(1, cap + 1):
        if delta_fast(GmdQuery(profile, t, ell, method="fast")).value == s:
            return RegularityResult(t, True, "iteration", stable_value=s)
    raise RuntimeError(
        "the distance never met its limit within the reach certificate; "
        "the profile data is inconsistent"
    )


@dataclass(frozen=True)
class SRContext:
    """Face-ring facts used by the bound verifiers."""

    depth: int
    regularity: int
    proj_connected: bool
    shellable: str  # "shellable" | "not_shellable" | "inconclusive"


@dataclass(frozen=True)
class Verdict:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str


def verify_theorems(
    profile: RingProfile,
    t_max: int,
    ell_max: int,
    sr: SRContext | None = None,
    use_fast: bool | None = None,
) -> list[Verdict]:
    """Check the distance-function laws on a degree/count grid.

    Monotonicity in t needs a certified reduced profile; monotonicity in l
    is only asserted on unmixed rings.  Stabilization consistency compares
    the table against the limit value and least degree.  With face-ring
    context, the increment law needs depth >= 2, the dimension bound needs
    a connected facet graph, and the regularity bound needs shellability.
    """
    out: list[Verdict] = []
    if use_fast is None:
        use_fast = profile.reduced_certified
    method = "fast" if use_fast else "brute"

    def value(t, ell):
        q = GmdQuery(profile, t, ell, method=method)
        return (delta_fast(q) if use_fast else delta_bruteforce(q)).value

    table = {
        (t, ell): value(t, ell) for t in range(1, t_max + 1) for ell in range(1, ell_max + 1)
    }

    if profile.reduced_certified:
        bad = [
            (t, ell)
            for (t, ell), v in table.items()
            if t < t_max and v < table[(t + 1, ell)]
        ]
        out.append(
            Verdict(
                "t-monotonicity",
                "fail" if bad else "pass",
                f"counterexamples {bad}" if bad else f"non-increasing in t on t<={t_max}, l<={ell_max}",
            )
        )
    else:
        out.append(Verdict("t-monotonicity", "skipped", "needs a certified reduced profile"))

    if profile.classification in ("domain", "unmixed_dim_ge2", "one_dimensional"):
        bad = [
            (t, ell)
            for (t, ell), v in table.items()
            if ell < ell_max and v > table[(t, ell + 1)]
        ]
        out.append(
            Verdict(
                "l-monotonicity",
                "fail" if bad else "pass",
                f"counterexamples {bad}" if bad else f"non-decreasing in l on the grid",
            )
        )
    else:
        out.append(
            Verdict("l-monotonicity", "skipped", "asserted for unmixed rings only")
        )

    r_values: dict[int, int] = {}
    if profile.classification != "unknown":
        details = []
        ok = True
        for ell in range(1, ell_max + 1):
            s = stabilization_value(profile, ell).value
            r = regularity_index(profile, ell).value
            r_values[ell] = r
            for t in range(1, t_max + 1):
                v = table[(t, ell)]
                if t >= r and v != s:
                    ok = False
                    details.append(f"l={ell}: value {v} at t={t} but limit {s}")
                if t < r and v == s:
                    ok = False
                    details.append(f"l={ell}: limit reached at t={t} before index {r}")
        out.append(
            Verdict(
                "stabilization-consistency",
                "pass" if ok else "fail",
                "; ".join(details) if details else "table matches limits and least degrees",
            )
        )
    else:
        out.append(
            Verdict("stabilization-consistency", "skipped", "needs certified classification")
        )

    if sr is None:
        out.append(Verdict("r-increment", "skipped", "no face-ring context"))
        out.append(Verdict("dim-bound", "skipped", "no face-ring context"))
        out.append(Verdict("reg-bound", "skipped", "no face-ring context"))
        return out

    if not r_values:
        for name in ("r-increment", "dim-bound", "reg-bound"):
            out.append(Verdict(name, "skipped", "no regularity indices available"))
        return out

    if sr.depth >= 2:
        bad = [
            ell
            for ell in range(1, ell_max)
            if r_values[ell + 1] > r_values[ell] + 1
        ]
        out.append(
            Verdict(
                "r-increment",
                "fail" if bad else "pass",
                f"violations at l={bad}" if bad else "r(l+1) <= r(l)+1 across the grid",
            )
        )
    else:
        out.append(Verdict("r-increment", "skipped", "needs depth >= 2"))

    if sr.proj_connected:
        dim_r = profile.dim
        bad = [ell for ell, r in r_values.items() if r > dim_r + ell - 1]
        out.append(
            Verdict(
                "dim-bound",
                "fail" if bad else "pass",
                f"violations at l={bad}" if bad else f"r(l) <= dim+l-1 with dim={dim_r}",
            )
        )
    else:
        out.append(Verdict("dim-bound", "skipped", "facet graph is disconnected"))

    if sr.shellable == "shellable":
        bad = [ell for ell, r in r_values.items() if r > sr.regularity + ell - 1]
        out.append(
            Verdict(
                "reg-bound",
                "fail" if bad else "pass",
                f"violations at l={bad}" if bad else f"r(l) <= reg+l-1 with reg={sr.regularity}",
            )
        )
    elif sr.shellable == "inconclusive":
        out.append(Verdict("reg-bound", "skipped", "shellability search hit its budget"))
    else:
        out.append(Verdict("reg-bound", "skipped", "complex is not shellable"))
    return out
