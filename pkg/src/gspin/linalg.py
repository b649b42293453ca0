"""Small exact linear algebra helpers over Z and Q.

Matrices are tuples of row tuples; vectors are tuples.  Everything is
Fraction/int arithmetic, no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Vec = Tuple[int, ...]
Mat = Tuple[Tuple[int, ...], ...]


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                 for row in a)


def mat_vec(a: Mat, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(u, v))

def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(u, v))

def vec_scale(u: Sequence, c) -> tuple:
    return tuple(c * x for x in u)

def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def rational_inverse(m: Mat) -> Optional[Mat]:
    """Inverse over Q, or None if singular."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] +
           [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def det(m: Mat) -> Fraction:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    out = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        out *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return sign * out


def solve_affine(rows: List[List[Fraction]], rhs: List[Fraction]):
    """Solve A x = b over Q.

    Returns (particular, kernel_basis) or None if inconsistent.  The kernel
    basis vectors are scaled to primitive integer vectors.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[Fraction(x) for x in rows[i]] + [Fraction(rhs[i])] for i in range(m)]
    pivots: List[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = Fraction(1) / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    particular = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        particular[col] = aug[i][n]
    free = [c for c in range(n) if c not in pivots]
    kernel = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -aug[i][fc]
        kernel.append(_primitive(v))
    return tuple(particular), tuple(kernel)


def _primitive(v: List[Fraction]) -> Vec:
    from math import gcd
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def int_kernel_basis(rows: Sequence[Sequence[int]], n: int) -> Tuple[Vec, ...]:
    """Basis of {x in Z^n : rows . x = 0}, via column reduction.

    Column operations are mirrored on an identity matrix; columns of the
    mirror below zeroed-out working columns span the kernel lattice.
    """
    m = len(rows)
    work = [list(r) for r in rows]
    mirror = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_addmul(j, k, c):
        for i in range(m):
            work[i][j] += c * work[i][k]
        for i in range(n):
            mirror[i][j] += c * mirror[i][k]

    def col_swap(j, k):
        for i in range(m):
            work[i][j], work[i][k] = work[i][k], work[i][j]
        for i in range(n):
            mirror[i][j], mirror[i][k] = mirror[i][k], mirror[i][j]

    row = 0
    col = 0
    while row < m and col < n:
        # gcd-reduce the row segment [col:] into position col
        while True:
            nz = [j for j in range(col, n) if work[row][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(work[row][j]))
            if jmin != col:
                col_swap(col, jmin)
            done = True
            for j in range(col + 1, n):
                if work[row][j] != 0:
                    q = work[row][j] // work[row][col]
                    col_addmul(j, col, -q)
                    if work[row][j] != 0:
                        done = False
            if done:
                break
        if work[row][col] != 0:
            col += 1
        row += 1
    kernel_cols = []
    for j in range(n):
        if all(work[i][j] == 0 for i in range(m)):
            kernel_cols.append(tuple(mirror[i][j] for i in range(n)))
    return tuple(kernel_cols)
