"""Reduced integral simplicial homology via Smith normal form.

Boundary matrices are dense lists of Python ints, so there is no coefficient
growth to worry about; integer (not field) arithmetic is required because the
torsion checks in this library hinge on Z/2 detection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import vertices_of
from .complexes import Complex

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    oi[j] += x * bk[j]
    return out


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def smith_normal_form(mat: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*mat*V = D, U and V unimodular, D diagonal and
    each diagonal entry dividing the next."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    d = [row[:] for row in mat]
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        drow, srow = d[dst], d[src]
        for j in range(n):
            drow[j] += q * srow[j]
        drow_u, srow_u = u[dst], u[src]
        for j in range(m):
            drow_u[j] += q * srow_u[j]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while True:
        # locate the smallest nonzero entry in the trailing block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x and (pivot is None or abs(x) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            restart = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    add_row(i, t, -q)
                    if d[i][t]:
                        swap_rows(t, i)  # strictly smaller remainder becomes pivot
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    add_col(j, t, -q)
                    if d[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            break
        # pivot must divide the rest of the block for the divisor chain
        culprit = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t]:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            add_row(t, culprit, 1)
            continue  # re-run elimination at the same t
        t += 1
    for i in range(min(m, n)):
        if d[i][i] < 0:
            for j in range(n):
                d[i][j] = -d[i][j]
            for j in range(m):
                u[i][j] = -u[i][j]
    return u, d, v


def snf_diagonal(mat: Matrix) -> list[int]:
    if not mat or not mat[0]:
        return []
    _, d, _ = smith_normal_form(mat)
    return [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i]]


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology: per dimension a free rank and the torsion
    divisors in elementary-divisor order (each > 1, each dividing the next)."""

    groups: tuple[tuple[int, tuple[int, ...]], ...]

    def rank(self, k: int) -> int:
        return self.groups[k][0] if 0 <= k < len(self.groups) else 0

    def torsion(self, k: int) -> tuple[int, ...]:
        return self.groups[k][1] if 0 <= k < len(self.groups) else ()

    def is_trivial(self) -> bool:
        return all(r == 0 and not t for r, t in self.groups)

    def __str__(self) -> str:
        parts = []
        for k, (rank, torsion) in enumerate(self.groups):
            summands = ["Z"] * rank + [f"Z/{t}" for t in torsion]
            parts.append(f"H~{k} = " + (" + ".join(summands) if summands else "0"))
        return "; ".join(parts)


def boundary_matrix(complex_: Complex, k: int) -> Matrix:
    """The k-th boundary map over the ordered bases of (k-1)- and k-faces.

    k = 0 gives the augmentation row mapping every vertex to 1.
    """
    cols = complex_.faces_of_dim(k)
    if k == 0:
        return [[1] * len(cols)]
    rows = complex_.faces_of_dim(k - 1)
    row_index = {m: i for i, m in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        verts = vertices_of(face)
        for i, vtx in enumerate(verts):
            sub = face ^ (1 << vtx)
            mat[row_index[sub]][j] = 1 if i % 2 == 0 else -1
    return mat


def homology(complex_: Complex) -> HomologyProfile:
    """Reduced integral homology of a complex."""
    d = complex_.dim
    boundaries = [boundary_matrix(complex_, k) for k in range(d + 1)]
    for k in range(d):
        product = matmul(boundaries[k], boundaries[k + 1])
        if not is_zero_matrix(product):
            raise AssertionError(f"boundary composition at dimension {k + 1} is nonzero")
    counts = [len(complex_.faces_of_dim(k)) for k in range(d + 1)]
    diags = [snf_diagonal(b) for b in boundaries]
    ranks = [len(dg) for dg in diags]  # rank of each boundary map
    ranks.append(0)  # there is no (d+1)-boundary
    diags.append([])
    groups = []
    for k in range(d + 1):
        free = counts[k] - ranks[k] - ranks[k + 1]
        torsion = tuple(x for x in diags[k + 1] if x > 1)
        groups.append((free, torsion))
    return HomologyProfile(tuple(groups))


def is_acyclic(complex_: Complex) -> bool:
    """True iff all reduced homology groups vanish."""
    return homology(complex_).is_trivial()
