"""Integer root data for the general spin families and their duals.

Supported families (semisimple rank n, character lattice of rank dim_X):

    gspin_odd n     GSpin(2n+1), type B_n, dim_X = n+1, basis e_0..e_n
    gspin_even n    GSpin(2n),   type D_n, dim_X = n+1   (n >= 2)
    wgspin_even n   extension of GSpin(2n) with connected center,
                    dim_X = n+2, basis E_-1, E_0, E_1..E_n  (n >= 2)
    gsp n           GSp(2n),  type C_n, dim_X = n+1
    gso n           GSO(2n),  type D_n, dim_X = n+1  (n >= 2)
    gl n            GL(n),    type A_{n-1}, dim_X = n

Roots and coroots are integer coordinate vectors with respect to the listed
basis; the pairing between characters and cocharacters is the dot product.
All values are immutable and all functions are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Optional, Tuple

from .linalg import (Mat, Vec, det, dot, identity, int_kernel_basis, mat_vec,
                     solve_affine, vec_scale, vec_sub)

FAMILIES = ("gspin_odd", "gspin_even", "wgspin_even", "gsp", "gso", "gl")

EVEN_FAMILIES = ("gspin_even", "wgspin_even", "gso")

_CLOSURE_CAP = 5000


class LeviError(ValueError):
    """Requested parabolic is excluded for the family."""


@dataclass(frozen=True)
class RootDatum:
    family: str
    n: int
    basis_labels: Tuple[str, ...]
    simple_roots: Tuple[Vec, ...]
    simple_coroots: Tuple[Vec, ...]

    @property
    def dim_X(self) -> int:
        return len(self.basis_labels)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def pairing(self, x: Vec, c: Vec) -> int:
        return dot(x, c)

    def __repr__(self) -> str:
        return f"RootDatum({self.family}, n={self.n})"


def _unit(dim: int, i: int, c: int = 1) -> Vec:
    v = [0] * dim
    v[i] = c
    return tuple(v)


def build(family: str, n: int) -> RootDatum:
    """Construct the root datum of the given family and rank."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")
    if family in EVEN_FAMILIES and n < 2:
        raise ValueError(f"family {family} needs n >= 2, got {n}")

    if family in ("gspin_odd", "gspin_even", "gsp", "gso"):
        dim = n + 1
        labels = tuple(f"e{i}" for i in range(dim))
        # e_i lives at coordinate i, with e_0 the similitude direction
        e = lambda i, c=1: _unit(dim, i, c)
        roots = [vec_sub(e(i), e(i + 1)) for i in range(1, n)]
        coroots = [vec_sub(e(i), e(i + 1)) for i in range(1, n)]
        if family == "gspin_odd":
            roots.append(e(n))
            coroots.append(tuple(a - b for a, b in zip(e(n, 2), e(0))))
        elif family == "gspin_even":
            roots.append(tuple(a + b for a, b in zip(e(n - 1), e(n))))
            coroots.append(tuple(a + b - c for a, b, c in zip(e(n - 1), e(n), e(0))))
        elif family == "gsp":
            roots.append(tuple(a - b for a, b in zip(e(n, 2), e(0))))
            coroots.append(e(n))
        else:  # gso
            roots.append(tuple(a + b - c for a, b, c in zip(e(n - 1), e(n), e(0))))
            coroots.append(tuple(a + b for a, b in zip(e(n - 1), e(n))))
    elif family == "wgspin_even":
        dim = n + 2
        # coordinate order: E_-1, E_0, E_1, ..., E_n
        labels = ("E-1", "E0") + tuple(f"E{i}" for i in range(1, n + 1))
        E = lambda i: _unit(dim, i + 1)  # E(-1) -> slot 0, E(0) -> slot 1, ...
        roots = [vec_sub(E(i), E(i + 1)) for i in range(1, n)]
        coroots = [vec_sub(E(i), E(i + 1)) for i in range(1, n)]
        roots.append(tuple(a + b - c for a, b, c in zip(E(n - 1), E(n), E(-1))))
        coroots.append(tuple(a + b - c for a, b, c in zip(E(n - 1), E(n), E(0))))
    else:  # gl
        dim = n
        labels = tuple(f"eps{i}" for i in range(1, n + 1))
        roots = [vec_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n - 1)]
        coroots = [vec_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n - 1)]

    return RootDatum(family, n, labels, tuple(roots), tuple(coroots))


def expected_simple_count(family: str, n: int) -> int:
    return n - 1 if family == "gl" else n


# --- root system closure -------------------------------------------------

@lru_cache(maxsize=None)
def root_closure(datum: RootDatum) -> Dict[Vec, Tuple[Vec, Vec]]:
    """All roots, mapped to (coroot, coordinates in the simple basis).

    Simple-root coordinates are carried through the reflections, so no
    linear solving is needed.  Raises RuntimeError if the orbit does not
    close within a generous cap (malformed data).
    """
    rank = datum.rank
    out: Dict[Vec, Tuple[Vec, Vec]] = {}
    frontier = []
    for i, (a, av) in enumerate(zip(datum.simple_roots, datum.simple_coroots)):
        out[a] = (av, _unit(rank, i))
        frontier.append(a)
    while frontier:
        nxt = []
        for r in frontier:
            rv, rc = out[r]
            for i, (a, av) in enumerate(zip(datum.simple_roots, datum.simple_coroots)):
                k = dot(r, av)
                s = vec_sub(r, vec_scale(a, k))
                if s in out:
                    continue
                sv = vec_sub(rv, vec_scale(av, dot(a, rv)))
                sc = vec_sub(rc, _unit(rank, i, k))
                out[s] = (sv, sc)
                nxt.append(s)
                if len(out) > _CLOSURE_CAP:
                    raise RuntimeError("root closure did not terminate")
        frontier = nxt
    return out


def coroot(datum: RootDatum, root: Vec) -> Vec:
    return root_closure(datum)[root][0]


def delta_coords(datum: RootDatum, root: Vec) -> Vec:
    """Coordinates of a root in the simple-root basis."""
    return root_closure(datum)[root][1]


def root_height(datum: RootDatum, root: Vec) -> int:
    return sum(delta_coords(datum, root))


def root_order_key(datum: RootDatum, root: Vec):
    """The fixed total order: height, then simple-root coordinates."""
    c = delta_coords(datum, root)
    return (sum(c), tuple(-x for x in c))


@lru_cache(maxsize=None)
def positive_roots(datum: RootDatum) -> Tuple[Vec, ...]:
    pos = [r for r, (_, c) in root_closure(datum).items()
           if all(x >= 0 for x in c)]
    pos.sort(key=lambda r: root_order_key(datum, r))
    return tuple(pos)


def all_roots(datum: RootDatum) -> Tuple[Vec, ...]:
    pos = positive_roots(datum)
    return pos + tuple(vec_scale(r, -1) for r in pos)


def is_root(datum: RootDatum, v: Vec) -> bool:
    return v in root_closure(datum)


# --- validation -----------------------------------------------------------

def validate(datum: RootDatum) -> Tuple[str, ...]:
    """All axiom violations, empty when the datum is a valid root datum."""
    bad = []
    nr, nc = len(datum.simple_roots), len(datum.simple_coroots)
    if nr != nc:
        bad.append(f"{nr} simple roots but {nc} simple coroots")
        return tuple(bad)
    if datum.family in FAMILIES and nr != expected_simple_count(datum.family, datum.n):
        bad.append(f"family {datum.family} rank {datum.n} should have "
                   f"{expected_simple_count(datum.family, datum.n)} simple roots, has {nr}")
    dim = datum.dim_X
    for v, kind in [(datum.simple_roots, "root"), (datum.simple_coroots, "coroot")]:
        for x in v:
            if len(x) != dim:
                bad.append(f"simple {kind} {x} has wrong dimension")
                return tuple(bad)
    for i, (a, av) in enumerate(zip(datum.simple_roots, datum.simple_coroots)):
        p = dot(a, av)
        if p != 2:
            bad.append(f"pairing <a{i+1}, a{i+1}v> = {p} != 2")
    A = [[dot(a, bv) for bv in datum.simple_coroots] for a in datum.simple_roots]
    for i in range(nr):
        for j in range(nr):
            if i == j:
                continue
            if A[i][j] > 0:
                bad.append(f"Cartan entry A[{i+1}][{j+1}] = {A[i][j]} > 0")
            if (A[i][j] == 0) != (A[j][i] == 0):
                bad.append(f"Cartan zero asymmetry at ({i+1},{j+1})")
    rows = [list(a) for a in datum.simple_roots]
    if rows and len(int_kernel_basis(list(zip(*rows)), nr)) > 0:
        bad.append("simple roots are linearly dependent")
    if bad:
        return tuple(bad)
    try:
        closure = root_closure(datum)
    except RuntimeError as exc:
        return tuple(bad + [str(exc)])
    roots = set(closure)
    for i, (a, av) in enumerate(zip(datum.simple_roots, datum.simple_coroots)):
        for r in roots:
            img = vec_sub(r, vec_scale(a, dot(r, av)))
            if img not in roots:
                bad.append(f"s_{i+1} maps root {r} outside the root set")
                break
        for r, (rv, _) in closure.items():
            img_v = vec_sub(rv, vec_scale(av, dot(a, rv)))
            img = vec_sub(r, vec_scale(a, dot(r, av)))
            if img in closure and closure[img][0] != img_v:
                bad.append(f"s_{i+1} does not permute the coroots compatibly")
                break
    return tuple(bad)


# --- Cartan matrix and Dynkin classification ------------------------------

def cartan_matrix(datum: RootDatum) -> Mat:
    return tuple(tuple(dot(a, bv) for bv in datum.simple_coroots)
                 for a in datum.simple_roots)


def _components(A: Mat) -> Tuple[Tuple[int, ...], ...]:
    n = len(A)
    seen = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and i != j and A[i][j] != 0:
                    seen.add(j)
                    comp.append(j)
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def _classify_component(A: Mat, comp: Tuple[int, ...]) -> str:
    r = len(comp)
    if r == 1:
        return "A1"
    adj = {i: [j for j in comp if j != i and A[i][j] != 0] for i in comp}
    bonds = {}
    for i in comp:
        for j in adj[i]:
            if i < j:
                bonds[(i, j)] = A[i][j] * A[j][i]
    if len(bonds) != r - 1:
        return f"unrecognized({r})"  # has a cycle
    degs = sorted(len(adj[i]) for i in comp)
    if degs[-1] > 3:
        return f"unrecognized({r})"
    branch = [i for i in comp if len(adj[i]) == 3]
    if len(branch) > 1:
        return f"unrecognized({r})"
    if branch:
        if any(b != 1 for b in bonds.values()):
            return f"unrecognized({r})"
        # legs from the branch node; D_r has two legs of length 1
        b = branch[0]
        legs = []
        for start in adj[b]:
            length, prev, cur = 1, b, start
            while True:
                nxts = [j for j in adj[cur] if j != prev]
                if not nxts:
                    break
                prev, cur = cur, nxts[0]
                length += 1
            legs.append(length)
        legs.sort()
        if legs[0] == legs[1] == 1:
            return f"D{r}"
        return f"unrecognized({r})"
    # path; orient from the lower-indexed endpoint
    ends = [i for i in comp if len(adj[i]) == 1]
    path = [min(ends)]
    while len(path) < r:
        nxts = [j for j in adj[path[-1]] if len(path) < 2 or j != path[-2]]
        path.append(nxts[0])
    multis = [(k, bonds[tuple(sorted((path[k], path[k + 1])))]) for k in range(r - 1)]
    doubles = [(k, m) for k, m in multis if m != 1]
    if not doubles:
        return f"A{r}"
    if len(doubles) > 1 or doubles[0][1] != 2:
        return f"unrecognized({r})"
    k = doubles[0][0]
    if k == 0 and r > 2:
        path.reverse()
        k = r - 2
    if k != r - 2:
        return f"unrecognized({r})"
    i, j = path[-2], path[-1]
    # <a_i, a_j^vee> = -2 means the terminal root a_j is short
    return f"B{r}" if A[i][j] == -2 else f"C{r}"


def classify(datum: RootDatum) -> Tuple[Mat, str]:
    """Cartan matrix and a Dynkin type label from diagram matching."""
    A = cartan_matrix(datum)
    if not A:
        return A, "A0"
    labels = sorted(_classify_component(A, c) for c in _components(A))
    return A, "x".join(labels)


# --- duality ---------------------------------------------------------------

_DUAL_FAMILY = {"gspin_odd": "gsp", "gsp": "gspin_odd",
                "gspin_even": "gso", "gso": "gspin_even",
                "gl": "gl"}


def _dual_label(lbl: str) -> str:
    return lbl[:-1] if lbl.endswith("*") else lbl + "*"


def dual(datum: RootDatum) -> RootDatum:
    """Swap characters with cocharacters; involutive."""
    fam = datum.family
    if fam in _DUAL_FAMILY:
        dual_fam = _DUAL_FAMILY[fam]
    elif fam.endswith("^"):
        dual_fam = fam[:-1]
    else:
        dual_fam = fam + "^"
    return RootDatum(dual_fam, datum.n,
                     tuple(_dual_label(l) for l in datum.basis_labels),
                     datum.simple_coroots, datum.simple_roots)


# --- highest root ----------------------------------------------------------

def highest_root(datum: RootDatum) -> Vec:
    """The dominance-maximal positive root of an irreducible datum."""
    A = cartan_matrix(datum)
    if not A or len(_components(A)) != 1:
        raise ValueError("highest root needs an irreducible root system")
    pos = positive_roots(datum)
    top = pos[-1]
    top_c = delta_coords(datum, top)
    for r in pos:
        if any(x > y for x, y in zip(delta_coords(datum, r), top_c)):
            raise ValueError("no dominance-maximal root found")
    return top


# --- center ----------------------------------------------------------------

@dataclass(frozen=True)
class CenterDescription:
    """Connected center as a cocharacter sublattice, plus torsion parts.

    identity_component is a basis of {c in X^vee : <a, c> = 0 for a in Delta};
    each extra component is the element prod_k basis_k(-1) over the listed
    coordinate indices, one representative per nontrivial component of the
    center's group of components.
    """
    datum: RootDatum
    identity_component: Tuple[Vec, ...]
    extra_components: Tuple[Tuple[int, ...], ...]

    def describe(self) -> str:
        labels = self.datum.basis_labels
        lines = []
        for v in self.identity_component:
            term = " ".join(f"{c:+d}{labels[i]}*" for i, c in enumerate(v) if c)
            lines.append(f"one-parameter: {term}")
        for idxs in self.extra_components:
            term = " ".join(f"{labels[i]}*(-1)" for i in idxs)
            lines.append(f"torsion: {term}")
        return "\n".join(lines) if lines else "trivial"


def _gf2_reduce(vec: int, basis: list) -> int:
    for b in basis:
        vec = min(vec, vec ^ b)
    return vec


def _gf2_insert(basis: list, vec: int) -> None:
    vec = _gf2_reduce(vec, basis)
    if vec:
        basis.append(vec)
        basis.sort(reverse=True)


def center(datum: RootDatum) -> CenterDescription:
    """Center of the group: kernel of all simple roots on the torus."""
    dim = datum.dim_X
    rows = [list(a) for a in datum.simple_roots]
    kernel = int_kernel_basis(rows, dim)
    kernel = tuple(_sign_normalize(v) for v in kernel)
    # order-2 part: sign vectors killed by every simple root, modulo the
    # sign vectors already inside the identity component
    id_signs: list = []
    for v in kernel:
        _gf2_insert(id_signs, _bits(tuple(c % 2 for c in v)))
    classes = set()
    for signs in itertools.product((0, 1), repeat=dim):
        if any(sum(s * c for s, c in zip(signs, a)) % 2 for a in datum.simple_roots):
            continue
        rep = _gf2_reduce(_bits(signs), id_signs)
        if rep:
            classes.add(rep)
    reps = [tuple(i for i in range(dim) if (rep >> i) & 1)
            for rep in sorted(classes)]
    return CenterDescription(datum, kernel, tuple(sorted(reps)))


def _bits(signs: Tuple[int, ...]) -> int:
    out = 0
    for i, s in enumerate(signs):
        if s % 2:
            out |= 1 << i
    return out


def _sign_normalize(v: Vec) -> Vec:
    lead = next((x for x in v if x), 0)
    return vec_scale(v, -1) if lead < 0 else v


def center_violations(datum: RootDatum, desc: CenterDescription) -> Tuple[str, ...]:
    """Symbolic check that every described element is killed by all of Delta."""
    bad = []
    for v in desc.identity_component:
        for i, a in enumerate(datum.simple_roots):
            if dot(a, v) != 0:
                bad.append(f"<a{i+1}, {v}> = {dot(a, v)} != 0")
    for idxs in desc.extra_components:
        for i, a in enumerate(datum.simple_roots):
            s = sum(a[k] for k in idxs)
            if s % 2:
                bad.append(f"<a{i+1}, torsion {idxs}> = {s} is odd")
    return tuple(bad)


# --- Levi factorization ----------------------------------------------------

@dataclass(frozen=True)
class LeviFactorization:
    levi: RootDatum
    factors: Tuple[str, ...]
    nilradical: Tuple[Vec, ...]
    retained: Tuple[int, ...]


_TAIL_LABEL = {"gspin_odd": ("GSpin", lambda r: 2 * r + 1),
               "gsp": ("GSp", lambda r: 2 * r),
               "gspin_even": ("GSpin", lambda r: 2 * r),
               "wgspin_even": ("wGSpin", lambda r: 2 * r),
               "gso": ("GSO", lambda r: 2 * r)}


def levi_factorization(datum: RootDatum, removed: Iterable[int]) -> LeviFactorization:
    """Standard Levi from removing the listed simple roots (1-based).

    For the even families the parabolic obtained by removing a_{n-1} while
    keeping a_n is rejected: the GL_n factor is requested by removing a_n.
    """
    removed = frozenset(removed)
    rank = datum.rank
    for k in removed:
        if not 1 <= k <= rank:
            raise LeviError(f"no simple root a{k}; rank is {rank}")
    n = datum.n
    if datum.family in EVEN_FAMILIES and (n - 1) in removed and n not in removed:
        raise LeviError(
            f"removing a{n - 1} alone is the excluded corank case for "
            f"{datum.family}; remove a{n} to get the GL{n} Levi")

    retained = tuple(i for i in range(1, rank + 1) if i not in removed)
    levi = RootDatum(datum.family + ":levi", datum.n, datum.basis_labels,
                     tuple(datum.simple_roots[i - 1] for i in retained),
                     tuple(datum.simple_coroots[i - 1] for i in retained))

    # GL blocks are the gaps between removed positions along the chain;
    # whatever follows the last removal is the spin/symplectic tail
    fam = datum.family
    cut = sorted(removed)
    if fam in EVEN_FAMILIES and n in removed:
        # a removed fork node plays the role of the chain's last position
        cut = sorted((removed - {n - 1, n})
                     | ({n} if (n - 1) not in removed else {n - 1, n}))
    gl_sizes = [b - a for a, b in zip([0] + cut[:-1], cut)]
    factors = [f"GL{s}" for s in gl_sizes]
    if fam == "gl":
        trailing = (rank + 1) - (cut[-1] if cut else 0)
        if trailing or not factors:
            factors.append(f"GL{trailing}")
    else:
        tail_rank = n - (cut[-1] if cut else 0)
        name, size = _TAIL_LABEL[fam]
        factors.append(f"{name}{size(tail_rank)}")

    retained_set = set(i - 1 for i in retained)
    nil = tuple(r for r in positive_roots(datum)
                if any(c and i not in retained_set
                       for i, c in enumerate(delta_coords(datum, r))))
    return LeviFactorization(levi, tuple(factors), nil, retained)


# --- lattice isomorphism search ---------------------------------------------

def _cartan_bijections(A1: Mat, A2: Mat):
    n = len(A1)
    perm = [None] * n

    def extend(i):
        if i == n:
            yield tuple(perm)
            return
        used = set(perm[:i])
        for cand in range(n):
            if cand in used:
                continue
            ok = all(A1[i][j] == A2[cand][perm[j]] and A1[j][i] == A2[perm[j]][cand]
                     for j in range(i))
            if ok and A1[i][i] == A2[cand][cand]:
                perm[i] = cand
                yield from extend(i + 1)
                perm[i] = None

    yield from extend(0)


def datum_isomorphic(d1: RootDatum, d2: RootDatum) -> Optional[Mat]:
    """Integer lattice isomorphism X1 -> X2 matching roots and coroots.

    Returns the matrix, acting on coordinate columns, or None.  The search
    enumerates Cartan-compatible bijections of the simple roots and solves
    the resulting linear system for an invertible integer matrix.
    """
    if d1.dim_X != d2.dim_X or d1.rank != d2.rank:
        return None
    if (d1.simple_roots, d1.simple_coroots) == (d2.simple_roots, d2.simple_coroots):
        return identity(d1.dim_X)
    dim = d1.dim_X
    r = d1.rank
    A1, A2 = cartan_matrix(d1), cartan_matrix(d2)
    for sigma in _cartan_bijections(A1, A2):
        rows, rhs = [], []
        for i in range(r):
            a1 = d1.simple_roots[i]
            a2 = d2.simple_roots[sigma[i]]
            for out_row in range(dim):
                coeff = [Fraction(0)] * (dim * dim)
                for k in range(dim):
                    coeff[out_row * dim + k] = Fraction(a1[k])
                rows.append(coeff)
                rhs.append(Fraction(a2[out_row]))
            c1 = d1.simple_coroots[i]
            c2 = d2.simple_coroots[sigma[i]]
            for out_row in range(dim):
                coeff = [Fraction(0)] * (dim * dim)
                for k in range(dim):
                    coeff[k * dim + out_row] = Fraction(c2[k])
                rows.append(coeff)
                rhs.append(Fraction(c1[out_row]))
        sol = solve_affine(rows, rhs)
        if sol is None:
            continue
        particular, kernel = sol
        if len(kernel) > 4:
            continue
        span = 3 if len(kernel) <= 2 else 1
        for combo in itertools.product(range(-span, span + 1), repeat=len(kernel)):
            entries = list(particular)
            for c, kv in zip(combo, kernel):
                if c:
                    entries = [e + c * k for e, k in zip(entries, kv)]
            if any(e.denominator != 1 for e in entries):
                continue
            M = tuple(tuple(int(entries[i * dim + j]) for j in range(dim))
                      for i in range(dim))
            if abs(det(M)) == 1:
                return M
    return None


# --- rendering and JSON -----------------------------------------------------

def root_str(datum: RootDatum, root: Vec) -> str:
    """Render in the lattice basis, e.g. 'e1+e2' or '2e2-e0'."""
    bits = []
    for c, lbl in zip(root, datum.basis_labels):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if bits else "")
        mag = abs(c)
        bits.append(f"{sign}{'' if mag == 1 else mag}{lbl}")
    return "".join(bits) if bits else "0"


def delta_str(datum: RootDatum, root: Vec) -> str:
    """Render in simple-root coordinates, e.g. 'a1+2a2+2a3'."""
    bits = []
    for i, c in enumerate(delta_coords(datum, root), start=1):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if bits else "")
        mag = abs(c)
        bits.append(f"{sign}{'' if mag == 1 else mag}a{i}")
    return "".join(bits) if bits else "0"


def to_json_dict(datum: RootDatum) -> dict:
    return {"family": datum.family,
            "n": datum.n,
            "dim_X": datum.dim_X,
            "labels": list(datum.basis_labels),
            "simple_roots": [list(r) for r in datum.simple_roots],
            "simple_coroots": [list(r) for r in datum.simple_coroots]}
