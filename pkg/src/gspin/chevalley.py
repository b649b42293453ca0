"""Chevalley structure constants for the spin-family root systems.

The table holds the Lie-algebra constants N(a, b) for every pair of roots
with a + b again a root, built by the extraspecial-pair recursion and then
sign-rescaled to the normalization in which every diagram-adjacent simple
pair (a_i, a_j), i < j, has commutator constant +1 and, for the odd family,
the doubled constant of the short tail pair is -1.

From N the table derives the commutator-formula coefficients c(a, b; i, j)
and the reflection-conjugation signs d(a, b), and evaluates the sign
products attached to the reflection chain of the highest root.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Tuple

from .linalg import Vec, dot, solve_affine, vec_add, vec_scale, vec_sub  # noqa: F401
from .rootdata import (RootDatum, cartan_matrix, delta_coords, is_root,
                       positive_roots, root_closure, root_order_key)
from .weyl import beta_chain, chain_reflection_indices, is_positive

AMBIENT_FAMILIES = ("gspin_odd", "gspin_even", "wgspin_even")


def root_string(datum: RootDatum, a: Vec, b: Vec) -> Tuple[int, int]:
    """(down, up) extents of the a-string through b."""
    if _proportional(a, b):
        raise ValueError("root string needs linearly independent roots")
    down = 0
    cur = vec_sub(b, a)
    while is_root(datum, cur):
        down += 1
        cur = vec_sub(cur, a)
    up = 0
    cur = vec_add(b, a)
    while is_root(datum, cur):
        up += 1
        cur = vec_add(cur, a)
    return down, up


def _proportional(a: Vec, b: Vec) -> bool:
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


@lru_cache(maxsize=None)
def _norm_matrix(datum: RootDatum) -> Tuple[Tuple[Fraction, ...], ...]:
    """Gram matrix of the simple roots for a Weyl-invariant form.

    With d_j = (a_j, a_j)/2 the Cartan matrix gives (a_i, a_j) = d_j A[i][j];
    the half-lengths propagate along diagram edges by d_j/d_i = A[j][i]/A[i][j].
    """
    A = cartan_matrix(datum)
    r = len(A)
    d: List[Optional[Fraction]] = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if i != j and A[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(A[j][i], A[i][j])
                    stack.append(j)
    B = tuple(tuple(d[j] * A[i][j] for j in range(r)) for i in range(r))
    for i in range(r):
        for j in range(r):
            if B[i][j] != B[j][i]:
                raise RuntimeError("Cartan matrix does not symmetrize")
    return B


def _norm2(datum: RootDatum, root: Vec) -> Fraction:
    c = delta_coords(datum, root)
    B = _norm_matrix(datum)
    return sum(Fraction(ci) * cj * B[i][j]
               for i, ci in enumerate(c) for j, cj in enumerate(c) if ci and cj)


class StructureConstantTable:
    """All N(a, b) for one root datum, plus derived c- and d-constants."""

    def __init__(self, datum: RootDatum, n_table: Dict[Tuple[Vec, Vec], int]):
        self.datum = datum
        self._n = n_table

    def N(self, a: Vec, b: Vec) -> int:
        """Bracket constant: [e_a, e_b] = N(a, b) e_{a+b}; 0 if a+b is not a root."""
        return self._n.get((a, b), 0)

    def c(self, a: Vec, b: Vec, i: int, j: int) -> Fraction:
        """Coefficient of u_{ia+jb}(c x^i y^j) when u_a(x) conjugates u_b(y)."""
        if j == 1 and i >= 0:
            val = Fraction(1)
            cur = b
            for _ in range(i):
                val *= self.N(a, cur)
                cur = vec_add(cur, a)
            return val / factorial(i)
        if (i, j) == (1, 2):
            return Fraction(-self.N(a, b) * self.N(b, vec_add(a, b)), 2)
        raise ValueError(f"commutator coefficient ({i},{j}) not supported")

    def commutator_atoms(self, a: Vec, b: Vec, x, y):
        """Nontrivial factors u_{ia+jb}(c x^i y^j) in u_a(x) u_b(y) u_a(-x)."""
        out = []
        for i, j in ((1, 1), (2, 1), (1, 2)):
            r = vec_add(vec_scale(a, i), vec_scale(b, j))
            if is_root(self.datum, r):
                coeff = self.c(a, b, i, j)
                if coeff:
                    out.append((r, x ** i * y ** j * coeff))
        return out

    def d(self, a: Vec, b: Vec) -> int:
        """Sign in w_a u_b(x) w_a^{-1} = u_{s_a(b)}(d x)."""
        if _proportional(a, b):
            return -1
        down, up = root_string(self.datum, a, b)
        total = Fraction(0)
        for i in range(max(0, down - up), down + 1):
            total += ((-1) ** i
                      * self.c(vec_scale(a, -1), b, i, 1)
                      * self.c(a, vec_sub(b, vec_scale(a, i)), i + up - down, 1))
        if total not in (1, -1):
            raise RuntimeError(f"conjugation sign {total} for ({a}, {b}) is not +-1")
        return int(total)


def _special_pairs(datum: RootDatum) -> Dict[Vec, Tuple[Vec, Vec]]:
    """For each non-simple positive root, the pair (a, b) with minimal a."""
    pos = positive_roots(datum)
    pos_set = set(pos)
    out = {}
    for g in pos:
        if g in datum.simple_roots:
            continue
        best = None
        for a in pos:
            if root_order_key(datum, a) >= root_order_key(datum, g):
                break
            b = vec_sub(g, a)
            if b in pos_set:
                best = (a, b)
                break
        if best is None:
            raise RuntimeError(f"no positive decomposition of {g}")
        out[g] = best
    return out


def build_table(datum: RootDatum) -> StructureConstantTable:
    """Structure constants under the spin-chain normalization."""
    if datum.family not in AMBIENT_FAMILIES:
        raise ValueError(f"structure constants are built for the ambient "
                         f"families {AMBIENT_FAMILIES}, not {datum.family}")
    n_pos = _positive_pair_constants(datum)
    full = _extend_full(datum, n_pos)
    full = _normalize_signs(datum, full)
    return StructureConstantTable(datum, full)


def _positive_pair_constants(datum: RootDatum) -> Dict[Tuple[Vec, Vec], int]:
    pos = positive_roots(datum)
    pos_set = set(pos)
    special = _special_pairs(datum)
    norm2 = lambda r: _norm2(datum, r)
    table: Dict[Tuple[Vec, Vec], int] = {}

    def down_count(a: Vec, b: Vec) -> int:
        k = 0
        cur = vec_sub(b, a)
        while is_root(datum, cur):
            k += 1
            cur = vec_sub(cur, a)
        return k

    for g in pos:
        if g in datum.simple_roots:
            continue
        alpha, beta = special[g]
        table[(alpha, beta)] = down_count(alpha, beta) + 1
        table[(beta, alpha)] = -table[(alpha, beta)]
        # remaining decompositions follow from the Jacobi identity against
        # the special pair, with mixed-sign values rotated to known ones
        n_g_ma = Fraction(-norm2(beta), norm2(g)) * table[(alpha, beta)]
        for a in pos:
            b = vec_sub(g, a)
            if b not in pos_set or (a, b) in table:
                continue
            acc = Fraction(0)
            delta = vec_sub(b, alpha)
            if is_root(datum, delta):
                n_b_ma = Fraction(-norm2(delta), norm2(b)) * table[(alpha, delta)]
                acc += n_b_ma * table[(delta, a)]
            eps = vec_sub(a, alpha)
            if is_root(datum, eps):
                n_ma_a = Fraction(norm2(eps), norm2(a)) * table[(alpha, eps)]
                acc += n_ma_a * table[(eps, b)]
            val = -acc / n_g_ma
            if val.denominator != 1:
                raise RuntimeError(f"non-integral constant {val} for ({a},{b})")
            table[(a, b)] = int(val)
            table[(b, a)] = -int(val)
    return table


def _extend_full(datum: RootDatum,
                 n_pos: Dict[Tuple[Vec, Vec], int]) -> Dict[Tuple[Vec, Vec], int]:
    """Extend positive-pair constants to all root pairs."""
    norm2 = lambda r: _norm2(datum, r)
    full: Dict[Tuple[Vec, Vec], int] = dict(n_pos)

    def N(a: Vec, b: Vec) -> int:
        key = (a, b)
        if key in full:
            return full[key]
        g = vec_add(a, b)
        pa, pb = is_positive(datum, a), is_positive(datum, b)
        if not pa and not pb:
            val = -N(vec_scale(a, -1), vec_scale(b, -1))
        elif pa and not pb:
            if is_positive(datum, g):
                # rotate (a, b, -g) with zero sum onto the positive pair (-b, g)
                val = Fraction(norm2(g), norm2(a)) * (-N(vec_scale(b, -1), g))
            else:
                val = -N(vec_scale(a, -1), vec_scale(b, -1))
        else:  # not pa and pb
            val = -N(b, a)
        if isinstance(val, Fraction):
            if val.denominator != 1:
                raise RuntimeError(f"non-integral constant for ({a},{b})")
            val = int(val)
        full[key] = val
        return val

    for r in root_closure(datum):
        for s in root_closure(datum):
            if is_root(datum, vec_add(r, s)):
                N(r, s)
    return full


def _apply_sign_flips(datum: RootDatum, tbl: Dict[Tuple[Vec, Vec], int],
                      flips: set) -> Dict[Tuple[Vec, Vec], int]:
    def eps(r: Vec) -> int:
        rr = r if is_positive(datum, r) else vec_scale(r, -1)
        return -1 if rr in flips else 1

    return {(a, b): eps(a) * eps(b) * eps(vec_add(a, b)) * v
            for (a, b), v in tbl.items()}


def _normalize_signs(datum: RootDatum,
                     full: Dict[Tuple[Vec, Vec], int]) -> Dict[Tuple[Vec, Vec], int]:
    A = cartan_matrix(datum)
    rank = datum.rank
    flips = set()
    for i in range(rank):
        for j in range(i + 1, rank):
            if A[i][j] == 0:
                continue
            ai, aj = datum.simple_roots[i], datum.simple_roots[j]
            g = vec_add(ai, aj)
            if is_root(datum, g) and full[(ai, aj)] != 1:
                flips.add(g)
    if flips:
        full = _apply_sign_flips(datum, full, flips)
    if datum.family == "gspin_odd" and rank >= 2:
        an, anp = datum.simple_roots[-2], datum.simple_roots[-1]
        if StructureConstantTable(datum, full).c(an, anp, 1, 2) != -1:
            full = _apply_sign_flips(datum, full,
                                     {vec_add(an, vec_scale(anp, 2))})
    return full


# --- chain sign products ----------------------------------------------------

def chain_conjugation_signs(table: StructureConstantTable) -> Tuple[int, ...]:
    """d(a_{k}, beta_step) along the reflection chain of the highest root."""
    datum = table.datum
    seq = chain_reflection_indices(datum)
    chain = beta_chain(datum)
    return tuple(table.d(datum.simple_roots[i - 1], chain[step])
                 for step, i in enumerate(seq))


def w_gamma_sign(table: StructureConstantTable) -> int:
    """Torus sign relating the built representative of the longest-root
    reflection to w_gamma; equals (-1)^(n) for the odd family of ambient
    rank n+1 and (-1)^(n-1) for the even ones."""
    sign = 1
    for s in chain_conjugation_signs(table):
        sign *= s
    return sign


def Dd_check(table: StructureConstantTable) -> int:
    """Product of the forward and backward chain signs; contract: equals 1."""
    datum = table.datum
    seq = chain_reflection_indices(datum)
    chain = beta_chain(datum)
    D = 1
    for step, i in enumerate(seq):
        D *= table.d(vec_scale(datum.simple_roots[i - 1], -1), chain[step + 1])
    return D * w_gamma_sign(table)


# --- the Lie algebra carried by a table (used by the adjoint oracle) --------

class LieAlgebra:
    """Basis-indexed bracket for the split Lie algebra over the table.

    Basis order: positive roots, then negative roots, then the simple
    coroots h_1..h_r.  Vectors are dicts index -> Fraction.
    """

    def __init__(self, table: StructureConstantTable):
        self.table = table
        datum = table.datum
        pos = positive_roots(datum)
        self.roots = pos + tuple(vec_scale(r, -1) for r in pos)
        self.index = {r: i for i, r in enumerate(self.roots)}
        self.rank = datum.rank
        self.dim = len(self.roots) + self.rank
        self._coroot_h = {r: _coroot_in_simple_basis(datum, r) for r in self.roots}

    def h_index(self, i: int) -> int:
        return len(self.roots) + i

    def bracket_basis(self, i: int, j: int) -> Dict[int, Fraction]:
        nroots = len(self.roots)
        if i >= nroots and j >= nroots:
            return {}
        if i >= nroots:
            out = self.bracket_basis(j, i)
            return {k: -v for k, v in out.items()}
        if j >= nroots:
            # [e_r, h_k] = -<r, a_k^vee> e_r
            r = self.roots[i]
            k = j - nroots
            pair = dot(r, self.table.datum.simple_coroots[k])
            return {i: Fraction(-pair)} if pair else {}
        r, s = self.roots[i], self.roots[j]
        total = vec_add(r, s)
        if all(x == 0 for x in total):
            return {self.h_index(k): Fraction(c)
                    for k, c in enumerate(self._coroot_h[r]) if c}
        n = self.table.N(r, s)
        if n:
            return {self.index[total]: Fraction(n)}
        return {}

    def bracket(self, x: Dict[int, Fraction], y: Dict[int, Fraction]) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for i, xi in x.items():
            for j, yj in y.items():
                for k, c in self.bracket_basis(i, j).items():
                    s = out.get(k, Fraction(0)) + xi * yj * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out


def _coroot_in_simple_basis(datum: RootDatum, root: Vec) -> Vec:
    """Integer coordinates of the coroot of `root` in the simple coroots."""
    cv = root_closure(datum)[root][0]
    rows = [[Fraction(datum.simple_coroots[j][i]) for j in range(datum.rank)]
            for i in range(datum.dim_X)]
    sol = solve_affine(rows, [Fraction(x) for x in cv])
    if sol is None:
        raise RuntimeError(f"coroot of {root} outside the simple-coroot span")
    particular, kernel = sol
    assert not kernel, "simple coroots are linearly dependent"
    coords = tuple(int(x) for x in particular)
    if any(p != q for p, q in zip(coords, particular)):
        raise RuntimeError(f"coroot of {root} is not integral on simple coroots")
    return coords


def jacobi_violations(table: StructureConstantTable, limit: int = 0) -> Tuple[str, ...]:
    """Exhaustive Jacobi check over basis triples; empty when consistent."""
    lie = LieAlgebra(table)
    bad = []
    dim = lie.dim
    for i in range(dim):
        xi = {i: Fraction(1)}
        for j in range(i, dim):
            xj = {j: Fraction(1)}
            bij = lie.bracket(xi, xj)
            for k in range(j, dim):
                xk = {k: Fraction(1)}
                total: Dict[int, Fraction] = {}
                for term in (lie.bracket(bij, xk),
                             lie.bracket(lie.bracket(xj, xk), xi),
                             lie.bracket(lie.bracket(xk, xi), xj)):
                    for idx, c in term.items():
                        s = total.get(idx, Fraction(0)) + c
                        if s:
                            total[idx] = s
                        else:
                            total.pop(idx, None)
                if total:
                    bad.append(f"jacobi fails on basis triple ({i},{j},{k})")
                    if limit and len(bad) >= limit:
                        return tuple(bad)
    return tuple(bad)
