"""First homology through integer Smith normal form.

This module is the independent cross-check of the classification: it never
calls the classifier, and the Seifert H1 comes from an explicit relation
matrix rather than from any closed form.  All arithmetic is exact over
Python's arbitrary-precision ints; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import seifert
from .manifolds import (
    ConnectedSum,
    Lens,
    Manifold,
    RP3,
    S2xS1,
    SeifertOverS2,
    Sphere,
    canonicalize,
)


@dataclass(frozen=True, slots=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    free_rank copies of Z plus cyclic factors Z/d1 + ... + Z/dk with
    2 <= d1 | d2 | ... | dk.  Factors of 1 are never stored.
    """
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} must be >= 2")
            if prev is not None and d % prev != 0:
                raise ValueError(
                    f"invariant factors must form a divisibility chain, "
                    f"got {prev} before {d}")
            prev = d

    def order(self) -> int:
        """Group order, with 0 standing for infinite (positive free rank)."""
        if self.free_rank:
            return 0
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Diagonal (d1, ..., dk) of the Smith normal form, k = min(rows, cols).

    Entries are nonnegative and satisfy d1 | d2 | ... | dk (trailing zeros
    for the rank deficit).  Only unimodular row and column operations are
    used, so the diagonal generates the same cokernel as the input.
    """
    a = [[int(v) for v in row] for row in matrix]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    for row in a:
        if len(row) != nc:
            raise ValueError("matrix rows must all have the same length")
    k = min(nr, nc)
    diag = [0] * k
    for t in range(k):
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = a[i][j]
                if v != 0 and (piv is None or abs(v) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        _clear_cross(a, t, nr, nc)
        while True:
            # The pivot must divide the trailing block for the chain
            # condition; folding an offending row back in shrinks the pivot.
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, nc):
                a[t][j] += a[offender][j]
            _clear_cross(a, t, nr, nc)
        diag[t] = abs(a[t][t])
    return tuple(diag)


def _clear_cross(a: list[list[int]], t: int, nr: int, nc: int) -> None:
    """Zero row t and column t outside the pivot by Euclidean steps."""
    while True:
        moved = False
        for i in range(t + 1, nr):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                for j in range(t, nc):
                    a[i][j] -= q * a[t][j]
                if a[i][t]:  # remainder beats the pivot; promote it
                    a[t], a[i] = a[i], a[t]
                    moved = True
        for j in range(t + 1, nc):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                for i in range(t, nr):
                    a[i][j] -= q * a[i][t]
                if a[t][j]:
                    for i in range(t, nr):
                        a[i][t], a[i][j] = a[i][j], a[i][t]
                    moved = True
        if not moved:
            return


def cokernel(matrix: Sequence[Sequence[int]],
             ncols: int | None = None) -> AbelianGroup:
    """Z^n modulo the row span of an m x n relation matrix."""
    rows = [list(r) for r in matrix]
    if ncols is None:
        if not rows:
            raise ValueError("cannot infer generator count from no rows")
        ncols = len(rows[0])
    if not rows:
        return AbelianGroup(ncols)
    diag = smith_normal_form(rows)
    nonzero = [d for d in diag if d]
    return AbelianGroup(ncols - len(nonzero),
                        tuple(d for d in nonzero if d >= 2))


def h1_seifert_presentation(fibers: Iterable[Sequence[int]]) -> AbelianGroup:
    """H1 of a Seifert fibration over the sphere from its relation matrix.

    For fibers (alpha_i, beta_i), i = 1..r, the presentation has generators
    x_1, ..., x_r, h and the (r+1) x (r+1) relation matrix with rows
    alpha_i * x_i + beta_i * h = 0 and sum_i x_i = 0.  The integer term is
    treated as the fiber (1, b).  For r = 0 the matrix is the 1 x 1 zero
    matrix and the group is Z.
    """
    data = seifert.check_fibers(fibers)
    r = len(data)
    rows = []
    for i, (alpha, beta) in enumerate(data):
        row = [0] * (r + 1)
        row[i] = alpha
        row[r] = beta
        rows.append(row)
    rows.append([1] * r + [0])
    return cokernel(rows)


def h1(m: Manifold) -> AbelianGroup:
    """First homology of a canonical manifold value.

    Atoms and lens spaces use their standard groups, Seifert values use the
    relation-matrix presentation, and connected sums renormalize the direct
    sum through the Smith normal form of the block-diagonal relation matrix.
    """
    m = canonicalize(m)
    if isinstance(m, Sphere):
        return AbelianGroup(0)
    if isinstance(m, S2xS1):
        return AbelianGroup(1)
    if isinstance(m, RP3):
        return AbelianGroup(0, (2,))
    if isinstance(m, Lens):
        return AbelianGroup(0, (m.p,))
    if isinstance(m, SeifertOverS2):
        return h1_seifert_presentation(m.fibers)
    if isinstance(m, ConnectedSum):
        parts = [h1(s) for s in m.summands]
        free = sum(g.free_rank for g in parts)
        factors = [d for g in parts for d in g.torsion]
        if not factors:
            return AbelianGroup(free)
        rows = [[factors[i] if j == i else 0 for j in range(len(factors))]
                for i in range(len(factors))]
        diag = smith_normal_form(rows)
        return AbelianGroup(free, tuple(d for d in diag if d >= 2))
    raise TypeError(f"not a manifold value: {m!r}")
