"""Independent reference computations used by the tests.

Nothing here imports the library's combinatorics or its free-group oracle:
crossing is decided with real convex hulls, admissibility by reading the
circle from every starting point, permutations by tracing strands, and
braid equality is cross-checked (one direction only) in the Burau
representation.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from shapely.geometry import MultiPoint


def point(k: int, n: int) -> tuple[float, float]:
    a = 2 * math.pi * (k - 1) / n
    return (math.sin(a), math.cos(a))


def hull(labels, n):
    return MultiPoint([point(k, n) for k in labels]).convex_hull


def hulls_cross(b, c, n) -> bool:
    return hull(b, n).intersects(hull(c, n))


def admissible_by_reading(blocks, n) -> bool:
    union = sorted(set().union(*blocks))
    owner = {m: i for i, blk in enumerate(blocks) for m in blk}
    for start in range(len(union)):
        seq = [owner[m] for m in union[start:] + union[:start]]
        order = [b for k, b in enumerate(seq) if k == 0 or seq[k - 1] != b]
        if order == list(range(len(blocks))):
            return True
    return False


def nested_pairs(p, q) -> bool:
    (b, c), (d, e) = p, q
    bc, de = set(b) | set(c), set(d) | set(e)
    return bc <= set(d) or bc <= set(e) or de <= set(b) or de <= set(c)


def subsets(n, lo=1):
    for k in range(lo, n + 1):
        yield from itertools.combinations(range(1, n + 1), k)


def twist_pairs(n):
    """Unordered pairs of disjoint non-crossing nonempty sets, by geometry."""
    out = set()
    for b in subsets(n):
        for c in subsets(n):
            if set(b) & set(c) or hulls_cross(b, c, n):
                continue
            out.add(tuple(sorted((b, c))))
    return sorted(out)


def trace_strands(artin, n):
    """Where each puncture ends up: sigma_k swaps positions k and k+1."""
    at = list(range(1, n + 1))  # at[p-1] = puncture now at position p
    for x in artin:
        k = abs(x)
        at[k - 1], at[k] = at[k], at[k - 1]
    where = [0] * n
    for pos, p in enumerate(at, start=1):
        where[p - 1] = pos
    return tuple(where)


def cycles_of(mapping):
    n, seen, out = len(mapping), set(), []
    for s in range(1, n + 1):
        if s in seen or mapping[s - 1] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = mapping[x - 1]
        out.append(tuple(cyc))
    return out


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def burau(artin, n, t=Fraction(2)):
    """Unreduced Burau matrix of an Artin word at a rational value of t."""
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for x in artin:
        k = abs(x) - 1
        g = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        if x > 0:
            g[k][k], g[k][k + 1], g[k + 1][k], g[k + 1][k + 1] = 1 - t, t, Fraction(1), Fraction(0)
        else:
            g[k][k], g[k][k + 1], g[k + 1][k], g[k + 1][k + 1] = Fraction(0), Fraction(1), 1 / t, 1 - 1 / t
        m = _matmul(m, g)
    return m


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def sympy_invariants(rows, ncols):
    """(free rank, torsion) via sympy's Smith normal form."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    rows = [r for r in rows if any(r)]
    if not rows:
        return ncols, []
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    nonzero = [d for d in diag if d]
    return ncols - len(nonzero), [d for d in nonzero if d != 1]
