"""Independent oracles and frozen expected values.

Everything here recomputes quantities along routes that share no code with
the package internals: textbook row reduction on Python lists, Hilbert
functions by spanning monomial multiples, weights by enumerating full
subcode spans, shellings validated step by step against the definition.
"""

from __future__ import annotations

import itertools

# ---------------------------------------------------------------------------
# naive exact linear algebra on plain lists


def naive_rref(rows, p):
    """Row reduce a list-of-lists matrix over F_p; returns (rref, rank)."""
    mat = [[x % p for x in row] for row in rows]
    if not mat:
        return [], 0
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        inv = pow(mat[pivot_row][col], p - 2, p)
        mat[pivot_row] = [(x * inv) % p for x in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] % p:
                c = mat[r][col]
                mat[r] = [(a - c * b) % p for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return mat, pivot_row


def naive_rank(rows, p):
    return naive_rref(rows, p)[1]


# ---------------------------------------------------------------------------
# Hilbert function by spanning multiples (no Groebner bases anywhere)


def monomials_of_degree(n, t):
    if t < 0:
        return []
    out = []
    for bars in itertools.combinations(range(t + n - 1), n - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(t + n - 2 - prev)
        out.append(tuple(e))
    return out


def hilbert_function_by_spans(generators, n, p, t):
    """dim of degree-t piece of S/I from generator multiples.

    ``generators`` is a list of {exponent tuple: coefficient} maps of
    homogeneous polynomials.
    """
    cols = monomials_of_degree(n, t)
    col_index = {m: j for j, m in enumerate(cols)}
    rows = []
    for g in generators:
        if not g:
            continue
        d = sum(next(iter(g)))
        if d > t:
            continue
        for m in monomials_of_degree(n, t - d):
            row = [0] * len(cols)
            for e, c in g.items():
                prod = tuple(a + b for a, b in zip(m, e))
                row[col_index[prod]] = c % p
            rows.append(row)
    return len(cols) - naive_rank(rows, p)


def multiplicity_by_differences(generators, n, p, probe_from=8, width=4):
    """(dim, multiplicity) from finite differences of the Hilbert function.

    For t large the function is a polynomial of degree dim-1 with leading
    coefficient multiplicity/(dim-1)!; repeated differencing reads both off.
    """
    values = [
        hilbert_function_by_spans(generators, n, p, t)
        for t in range(probe_from, probe_from + width + n + 1)
    ]
    level = 0
    while len(set(values)) > 1:
        values = [b - a for a, b in zip(values, values[1:])]
        level += 1
        if not values:
            raise AssertionError("difference table exhausted; raise probe_from")
    constant = values[0]
    if constant == 0:
        raise AssertionError("Hilbert polynomial is zero at the probe; raise probe_from")
    return level + 1, constant


# ---------------------------------------------------------------------------
# generalized Hamming weights by full span enumeration


def all_codewords(generator, p):
    k = len(generator)
    n = len(generator[0])
    words = []
    for combo in itertools.product(range(p), repeat=k):
        word = [0] * n
        for c, row in zip(combo, generator):
            if c:
                for j, x in enumerate(row):
                    word[j] = (word[j] + c * x) % p
        words.append(tuple(word))
    return words


def ghw_by_span_enumeration(generator, p, r):
    """Minimum support over r-dimensional subcodes, from scratch.

    Scans r-subsets of nonzero codewords, keeps the independent ones, and
    takes the union of supports (the support of a span is the union of the
    supports of any basis).
    """
    nonzero = [w for w in all_codewords(generator, p) if any(w)]
    best = None
    for subset in itertools.combinations(nonzero, r):
        if naive_rank([list(w) for w in subset], p) != r:
            continue
        support = set()
        for w in subset:
            support.update(j for j, x in enumerate(w) if x)
        if best is None or len(support) < best:
            best = len(support)
    return best


# ---------------------------------------------------------------------------
# shelling order verification straight from the definition


def is_valid_shelling(facets, order):
    """Check that the given facet order is a shelling.

    Each facet after the first must meet the union of the earlier ones in a
    nonempty union of its codimension-one faces.
    """
    facets = [frozenset(f) for f in facets]
    if sorted(order) != list(range(len(facets))):
        return False
    for k in range(1, len(order)):
        fk = facets[order[k]]
        earlier = [facets[order[j]] for j in range(k)]
        if len(fk) == 1:
            continue
        covered = [
            fk - {v}
            for v in fk
            if any(fk - {v} <= g for g in earlier)
        ]
        if not covered:
            return False
        for g in earlier:
            meet = fk & g
            if not any(meet <= c for c in covered):
                return False
    return True


# ---------------------------------------------------------------------------
# frozen expected values, worked out by hand before implementation

# F_2[x,y,z] / (x^3 + y^2 z, x y + z^2) with three certified minimal primes
EXAMPLE1 = {
    "char": 2,
    "vars": ("x", "y", "z"),
    "gens": ("x^3+y^2*z", "x*y+z^2"),
    "primes": (
        ("x", "z"),
        ("y+z", "x+z"),
        ("x*y+z^2", "x^2+y^2+x*z+y*z+z^2"),
    ),
    "hf": (1, 3, 5, 6, 6),
    "dim": 1,
    "multiplicity": 6,
    "prime_mults": (1, 1, 4),
    "classification": "one_dimensional",
    # count: (limit value, case label)
    "stabilization": {1: (1, 4), 5: (5, 4), 6: (6, 5), 7: (6, 5)},
    # hand-derived distance cells {(t, l): value}
    "delta_cells": {(1, 1): 4, (1, 2): 5, (1, 3): 6, (2, 1): 2, (2, 2): 4},
}

# F_3[x,y,z] / (y^2 - y z, x^2 y - y z^2): a plane and two lines
EXAMPLE2 = {
    "char": 3,
    "vars": ("x", "y", "z"),
    "gens": ("y^2-y*z", "x^2*y-y*z^2"),
    "primes": (("y",), ("y-z", "x-z"), ("y-z", "x+z")),
    "dim": 2,
    "multiplicity": 1,
    "top_prime_dim": 2,
    "fixed_dim_line_mults": (0, 0),
    "classification": "mixed_low_dim1",
    "stabilization": {1: (0, 6), 2: (0, 6), 3: (1, 7)},
    "regularity": {1: 1, 2: 2},
}

# boundary of the triangle: three vertices, three edges
TRIANGLE_BOUNDARY = {
    "depth": 2,
    "regularity": 2,
    "multiplicity": 3,
    "dim_ring": 2,
    "regularity_index": {1: 2, 2: 3, 3: 4, 4: 5},  # r(l) = l + 1, every bound tight
}

# path on four vertices: primes (z,w), (x,w), (x,y); r(l) = l beats reg + l - 1
PATH_FOUR = {
    "depth": 2,
    "regularity": 1,
    "regularity_index": {1: 1, 2: 2, 3: 3, 4: 4},
}

# all of P^1(F_2), degree 1 evaluations
P1_F2 = {
    "points": ((1, 0), (0, 1), (1, 1)),
    "code": {"length": 3, "dimension": 2},
    "weights": {1: 2, 2: 3},
}

# F_2[x,y]/(xy): two lines through the origin
TWO_LINES_F2 = {
    "multiplicity": 2,
    "delta_cells": {(1, 1): 1, (2, 1): 1, (1, 2): 2, (2, 2): 2},
}
