"""Smith normal form invariants of integer matrices (exact, Python ints)."""

from __future__ import annotations

from math import gcd
from typing import Sequence


def smith_invariants(rows: Sequence[Sequence[int]], ncols: int) -> tuple[int, list[int]]:
    """Return ``(rank, invariant_factors)`` with factors in divisibility order.

    Rows that are entirely zero (commutators, say) are dropped up front, which
    keeps the elimination small for presentations with many commuting relations.
    """
    a = [list(r) for r in rows if any(r)]
    for r in a:
        if len(r) != ncols:
            raise ValueError("ragged relation matrix")
    diag: list[int] = []
    while a:
        # pivot: smallest nonzero magnitude
        best = None
        for i, r in enumerate(a):
            for j, v in enumerate(r):
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[0], a[pi] = a[pi], a[0]
        for r in a:
            r[0], r[pj] = r[pj], r[0]
        while True:
            p = a[0][0]
            dirty = False
            for i in range(1, len(a)):
                if a[i][0]:
                    q = a[i][0] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[0])]
                    if a[i][0]:
                        dirty = True
            for j in range(1, ncols):
                if a[0][j]:
                    q = a[0][j] // p
                    if q:
                        for r in a:
                            r[j] -= q * r[0]
                    if a[0][j]:
                        dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(1, len(a)) for j in range(1, ncols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[0] = [x + y for x, y in zip(a[0], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column 0 into the corner
            cands = [(abs(a[i][0]), i, 0) for i in range(len(a)) if a[i][0]]
            cands += [(abs(a[0][j]), 0, j) for j in range(ncols) if a[0][j]]
            _, i, j = min(cands)
            a[0], a[i] = a[i], a[0]
            for r in a:
                r[0], r[j] = r[j], r[0]
        diag.append(abs(a[0][0]))
        a = [r[1:] for r in a[1:] if any(r[1:])]
        ncols -= 1
    # normalise to a divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            if g:
                diag[i], diag[j] = g, diag[i] * diag[j] // g
    return len(diag), diag
