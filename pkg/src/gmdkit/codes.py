"""Projective evaluation codes and generalized Hamming weights.

A finite set of projective points gives a vanishing ideal whose quotient
is one-dimensional with one multiplicity-one minimal prime per point, and
for each degree an evaluation code whose r-th generalized Hamming weight
equals the distance function of the ideal at that degree and count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property

from .gflinalg import FieldMatrix, FieldSpec, SubspaceIterator, kernel_basis, rank, rref, subspace_count
from .groebner import IdealPresentation
from .hilbert import hilbert_function
from .polyring import Polynomial, RingSpec, graded_piece_basis
from .schemes import RingProfile, build_profile_from_primes

ENUMERATE_LIMIT = 20000

_SHORT_NAMES = ("x", "y", "z", "w")


def standard_ring(field: FieldSpec, nvars: int) -> RingSpec:
    if nvars <= len(_SHORT_NAMES):
        return RingSpec(field, _SHORT_NAMES[:nvars])
    return RingSpec(field, tuple(f"x{i + 1}" for i in range(nvars)))


def _normalize_point(field: FieldSpec, coords) -> tuple[int, ...]:
    vec = tuple(c % field.p for c in coords)
    lead = next((j for j, c in enumerate(vec) if c), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    scale = field.inv(vec[lead])
    return tuple((c * scale) % field.p for c in vec)


def projective_points(field: FieldSpec, ambient: int) -> list[tuple[int, ...]]:
    """All points of the projective space, lexicographically sorted.

    Representatives have their first nonzero coordinate equal to 1.
    """
    if ambient < 2:
        raise ValueError("ambient dimension must be at least 2")
    out = []
    for lead in range(ambient):
        # pivot at position lead, free coordinates after it
        tail = ambient - lead - 1
        for combo in itertools.product(range(field.p), repeat=tail):
            out.append((0,) * lead + (1,) + combo)
    out.sort()
    return out


class ProjectivePointSet:
    """Distinct projective points, each scaled so its first nonzero entry is 1."""

    __slots__ = ("field", "ambient", "points", "_profile")

    def __init__(self, field: FieldSpec, ambient: int, points):
        if ambient < 2:
            raise ValueError("projective points need at least 2 coordinates")
        normalized = []
        seen = set()
        for coords in points:
            if len(coords) != ambient:
                raise ValueError(
                    f"point {tuple(coords)} has {len(coords)} coordinates, expected {ambient}"
                )
            vec = _normalize_point(field, coords)
            if vec in seen:
                raise ValueError(f"duplicate projective point {vec}")
            seen.add(vec)
            normalized.append(vec)
        if not normalized:
            raise ValueError("point set is empty")
        self.field = field
        self.ambient = ambient
        self.points = tuple(normalized)
        self._profile = None

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"ProjectivePointSet(p={self.field.p}, n={self.ambient}, N={len(self)})"

    def ring(self) -> RingSpec:
        return standard_ring(self.field, self.ambient)

    def point_prime(self, ring: RingSpec, index: int) -> IdealPresentation:
        """Linear forms vanishing at one point: the kernel of evaluation."""
        row = FieldMatrix(self.field, [list(self.points[index])])
        forms = []
        for coeffs in kernel_basis(row).to_lists():
            terms = {}
            for j, c in enumerate(coeffs):
                if c:
                    exp = [0] * self.ambient
                    exp[j] = 1
                    terms[tuple(exp)] = c
            forms.append(Polynomial(ring, terms))
        return IdealPresentation(ring, forms)

    def vanishing_profile(self) -> RingProfile:
        """Certified profile of S/I(X): one multiplicity-one prime per point.

        Degree-piece dimensions of prime-subset families are served by
        evaluation ranks, so the distance machinery on point sets needs no
        per-subset elimination chains.
        """
        if self._profile is not None:
            return self._profile
        ring = self.ring()
        primes = [self.point_prime(ring, i) for i in range(len(self))]
        profile = build_profile_from_primes(primes)
        profile.family_backend = PointFamilyBackend(self, profile)
        self._profile = profile
        return profile


class PointFamilyBackend:
    """Family degree data for vanishing ideals, via evaluation ranks.

    The degree-t piece of S/J for a subset of the points has dimension
    equal to the rank of the monomial-evaluation matrix at those points,
    and it equals the subset size from degree (size - 1) on.  Agreement
    with the Groebner route is covered by the property suite.
    """

    def __init__(self, points: ProjectivePointSet, profile: RingProfile):
        self._points = points
        self._profile = profile
        self._ring = points.ring()

    def piece_dim(self, indices: tuple[int, ...], t: int) -> int:
        full = hilbert_function(self._profile.ideal, t)
        if not indices:
            return full
        p = self._points.field.p
        rows = [
            [evaluate_monomial(mono, self._points.points[i], p) for i in indices]
            for mono in graded_piece_basis(self._ring, t)
        ]
        return full - rank(FieldMatrix(self._points.field, rows))

    def regime(self, indices: tuple[int, ...]) -> int:
        if not indices:
            return 1
        return max(1, len(indices) - 1)


def evaluate_monomial(exponents, point, p: int) -> int:
    value = 1
    for e, c in zip(exponents, point):
        if e:
            value = (value * pow(c, e, p)) % p
    return value


@dataclass(frozen=True)
class LinearCode:
    field: FieldSpec
    generator: FieldMatrix  # full row rank

    def __post_init__(self):
        if self.generator.rows == 0:
            raise ValueError("a code needs at least one generator row")
        if rank(self.generator) != self.generator.rows:
            raise ValueError("generator rows are linearly dependent")

    @property
    def length(self) -> int:
        return self.generator.cols

    @property
    def dimension(self) -> int:
        return self.generator.rows

    @cached_property
    def rref_generator(self) -> FieldMatrix:
        return rref(self.generator)[0]


def evaluation_code(points: ProjectivePointSet, t: int) -> LinearCode:
    """Code spanned by degree-t monomial evaluations at the fixed representatives."""
    if t < 1:
        raise ValueError("degree t must be at least 1")
    ring = points.ring()
    p = points.field.p
    rows = [
        [evaluate_monomial(mono, pt, p) for pt in points.points]
        for mono in graded_piece_basis(ring, t)
    ]
    reduced, rk, _ = rref(FieldMatrix(points.field, rows))
    if rk == 0:
        raise ValueError("all degree-t monomials vanish on the point set")
    basis_rows = reduced.to_lists()[:rk]
    return LinearCode(points.field, FieldMatrix(points.field, basis_rows))


def support_size(matrix: FieldMatrix) -> int:
    rows = matrix.to_lists()
    return sum(1 for j in range(matrix.cols) if any(row[j] for row in rows))


@dataclass(frozen=True)
class GhwResult:
    value: int
    r: int
    strategy: str
    witness: list[list[int]]  # RREF basis of a minimum-support subcode


def _enum_scan(generator: FieldMatrix, r: int, start: int, stop: int):
    field = generator.field
    k = generator.rows
    it = SubspaceIterator(k, r, field, start, stop)
    best = None
    best_index = None
    for index in range(start, stop):
        u = it.matrix_at(index)
        weight = support_size(u.matmul(generator))
        if best is None or weight < best:
            best = weight
            best_index = index
    return best, best_index


def _enum_scan_star(args):
    return _enum_scan(*args)


def _ghw_enumerate(code: LinearCode, r: int, jobs: int) -> GhwResult:
    g = code.generator
    chunks = SubspaceIterator(code.dimension, r, code.field).split(max(1, jobs))
    tasks = [(g, r, c.start, c.stop) for c in chunks if c.stop > c.start]
    if jobs <= 1 or len(tasks) <= 1:
        partials = [_enum_scan_star(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_enum_scan_star, tasks))
    best = None
    best_index = None
    for weight, index in partials:
        if weight is None:
            continue
        if best is None or weight < best or (weight == best and index < best_index):
            best = weight
            best_index = index
    u = SubspaceIterator(code.dimension, r, code.field).matrix_at(best_index)
    witness = rref(u.matmul(g))[0].to_lists()
    return GhwResult(best, r, "enumerate", witness)


def _ghw_shorten(code: LinearCode, r: int) -> GhwResult:
    """Largest column set Z with rank(G_Z) <= k-r gives weight N - |Z|.

    A subcode avoiding the columns in Z is spanned by left-kernel vectors of
    G restricted to Z; maximality of Z makes its support weight exactly N-|Z|.
    """
    g = code.generator
    n = code.length
    k = code.dimension
    for size in range(n, -1, -1):
        for zset in itertools.combinations(range(n), size):
            sub = g.column_submatrix(zset)
            if rank(sub) <= k - r:
                left = kernel_basis(sub.transpose())
                u = FieldMatrix(code.field, left.to_lists()[:r])
                witness = rref(u.matmul(g))[0].to_lists()
                return GhwResult(n - size, r, "shorten", witness)
    raise AssertionError("unreachable: the empty column set always qualifies")


def generalized_hamming_weight(
    code: LinearCode, r: int, strategy: str = "auto", jobs: int = 1
) -> GhwResult:
    """Minimum support size over r-dimensional subcodes.

    "enumerate" walks every subcode; "shorten" scans column subsets by
    descending size for low-rank restrictions.  "auto" enumerates when the
    subcode count is small and shortens otherwise.  Both are exact.
    """
    if not 1 <= r <= code.dimension:
        raise ValueError(f"r must lie in 1..{code.dimension}")
    if strategy not in ("auto", "enumerate", "shorten"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        count = subspace_count(code.dimension, r, code.field)
        strategy = "enumerate" if count <= ENUMERATE_LIMIT else "shorten"
    if strategy == "enumerate":
        return _ghw_enumerate(code, r, jobs)
    return _ghw_shorten(code, r)


@dataclass(frozen=True)
class BridgeReport:
    t: int
    ell: int
    delta_value: int
    ghw_value: int
    code_length: int
    code_dimension: int
    agree: bool


def bridge_check(
    points: ProjectivePointSet, t: int, ell: int, jobs: int = 1, ghw_strategy: str = "auto"
) -> BridgeReport:
    """Compare the ideal-theoretic distance with the code's Hamming weight.

    Both sides are computed by unrelated routes: the distance through the
    minimal primes of the vanishing ideal, the weight straight from the
    generator matrix.  They agree whenever the count does not exceed the
    code dimension.
    """
    from .gmd import GmdQuery, delta_fast

    profile = points.vanishing_profile()
    code = evaluation_code(points, t)
    if not 1 <= ell <= code.dimension:
        raise ValueError(f"count l must lie in 1..{code.dimension} for this degree")
    d = delta_fast(GmdQuery(profile, t, ell, method="fast"))
    w = generalized_hamming_weight(code, ell, strategy=ghw_strategy, jobs=jobs)
    return BridgeReport(
        t=t,
        ell=ell,
        delta_value=d.value,
        ghw_value=w.value,
        code_length=code.length,
        code_dimension=code.dimension,
        agree=d.value == w.value,
    )
