"""Weyl group elements as words in simple reflections with exact actions.

An element carries its word and the integer action matrices on the
character lattice X and the cocharacter lattice X^vee (transpose-inverse
of each other).  Words are never reduced behind the caller's back; element
equality is decided on the action matrices.  Composition is right-to-left:
the rightmost factor of a word acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .linalg import Mat, Vec, identity, mat_mul, mat_vec, vec_scale, vec_sub
from .rootdata import (RootDatum, delta_coords, highest_root, is_root,
                       positive_roots, root_closure)


@dataclass(frozen=True)
class WeylElement:
    datum: RootDatum
    word: Tuple[int, ...]
    action_X: Mat
    action_Xdual: Mat

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.datum != other.datum:
            raise ValueError("Weyl elements from different root data")
        return WeylElement(self.datum, self.word + other.word,
                           mat_mul(self.action_X, other.action_X),
                           mat_mul(self.action_Xdual, other.action_Xdual))

    def inverse(self) -> "WeylElement":
        word = tuple(reversed(self.word))
        inv_X = tuple(zip(*self.action_Xdual))
        inv_Xd = tuple(zip(*self.action_X))
        return WeylElement(self.datum, word, inv_X, inv_Xd)

    def act_root(self, x: Vec) -> Vec:
        return mat_vec(self.action_X, x)

    def act_cochar(self, c: Vec) -> Vec:
        return mat_vec(self.action_Xdual, c)

    def is_identity(self) -> bool:
        return self.action_X == identity(self.datum.dim_X)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.datum == other.datum and self.action_X == other.action_X

    def __hash__(self) -> int:
        return hash((self.datum, self.action_X))

    def __str__(self) -> str:
        return " ".join(f"s{i}" for i in self.word) if self.word else "e"


def identity_element(datum: RootDatum) -> WeylElement:
    eye = identity(datum.dim_X)
    return WeylElement(datum, (), eye, eye)


def is_positive(datum: RootDatum, root: Vec) -> bool:
    return all(c >= 0 for c in delta_coords(datum, root))


def simple_reflection(datum: RootDatum, i: int) -> WeylElement:
    """s_i for the i-th simple root, 1-based."""
    if not 1 <= i <= datum.rank:
        raise ValueError(f"no simple root a{i}")
    a = datum.simple_roots[i - 1]
    av = datum.simple_coroots[i - 1]
    dim = datum.dim_X
    ax = tuple(tuple((1 if r == c else 0) - a[r] * av[c] for c in range(dim))
               for r in range(dim))
    axd = tuple(tuple((1 if r == c else 0) - av[r] * a[c] for c in range(dim))
                for r in range(dim))
    return WeylElement(datum, (i,), ax, axd)


def from_word(datum: RootDatum, word: Iterable[int]) -> WeylElement:
    out = identity_element(datum)
    for i in word:
        out = out * simple_reflection(datum, i)
    return out


def reflection(datum: RootDatum, root: Vec) -> WeylElement:
    """Reflection in an arbitrary root, as a word in simple reflections."""
    root = tuple(root)
    if not is_root(datum, root):
        raise ValueError(f"{root} is not a root of {datum}")
    if not is_positive(datum, root):
        root = vec_scale(root, -1)
    # walk the root down to a simple root, collecting the conjugating word
    conj: List[int] = []
    cur = root
    while cur not in datum.simple_roots:
        cv = root_closure(datum)[cur][0]
        for j, a in enumerate(datum.simple_roots, start=1):
            if a == cur:
                continue
            if datum.pairing(a, cv) > 0:
                cur = vec_sub(cur, vec_scale(a, datum.pairing(cur, datum.simple_coroots[j - 1])))
                conj.append(j)
                break
        else:
            raise ValueError(f"cannot reduce {root} to a simple root")
    i = datum.simple_roots.index(cur) + 1
    word = tuple(conj) + (i,) + tuple(conj[::-1])
    return from_word(datum, word)


def longest_element(datum: RootDatum, theta: Iterable[int] | None = None) -> WeylElement:
    """Longest element of the (parabolic) Weyl group, greedy descent.

    theta lists 1-based simple indices; None means the full group.
    """
    idx = tuple(theta) if theta is not None else tuple(range(1, datum.rank + 1))
    w = identity_element(datum)
    while True:
        for i in idx:
            if is_positive(datum, w.act_root(datum.simple_roots[i - 1])):
                w = w * simple_reflection(datum, i)
                break
        else:
            return w


def parabolic_longest(datum: RootDatum, theta: Iterable[int]) -> WeylElement:
    """The unique w with w(theta) inside Delta and w(alpha) < 0 off theta.

    Computed as w_l(G) * w_l(M_theta).
    """
    theta = tuple(theta)
    return longest_element(datum) * longest_element(datum, theta)


def length(w: WeylElement) -> int:
    return sum(1 for r in positive_roots(w.datum)
               if not is_positive(w.datum, w.act_root(r)))


def canonical_reduced_word(w: WeylElement) -> Tuple[int, ...]:
    """Deterministic reduced word: repeatedly strip the smallest descent."""
    rev: List[int] = []
    cur = w
    while not cur.is_identity():
        for i in range(1, w.datum.rank + 1):
            if not is_positive(w.datum, cur.act_root(w.datum.simple_roots[i - 1])):
                rev.append(i)
                cur = cur * simple_reflection(w.datum, i)
                break
        else:
            raise RuntimeError("element fixes all simple roots but is not 1")
    return tuple(reversed(rev))


def weyl_group(datum: RootDatum) -> Dict[Mat, Tuple[int, ...]]:
    """The whole Weyl group by closure, action matrix -> some word."""
    gens = [simple_reflection(datum, i) for i in range(1, datum.rank + 1)]
    e = identity_element(datum)
    seen: Dict[Mat, Tuple[int, ...]] = {e.action_X: ()}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                wg = w * g
                if wg.action_X not in seen:
                    seen[wg.action_X] = wg.word
                    nxt.append(wg)
        frontier = nxt
    return seen


# --- the specific reflection chain from the longest-root conjugation -------

def chain_reflection_indices(datum: RootDatum) -> Tuple[int, ...]:
    """Simple indices whose reflections carry a1 up to the highest root.

    Odd spin ambient of rank N: 2, 3, ..., N, N-1, ..., 2.
    Even ambient of rank N:     2, ..., N-2, N-1, N, N-2, ..., 2.
    """
    fam = datum.family
    N = datum.rank
    if fam == "gspin_odd":
        if N < 2:
            raise ValueError("odd ambient needs rank >= 2")
        return tuple(range(2, N + 1)) + tuple(range(N - 1, 1, -1))
    if fam in ("gspin_even", "wgspin_even"):
        if N < 3:
            raise ValueError("even ambient needs rank >= 3")
        return (tuple(range(2, N - 1)) + (N - 1, N)
                + tuple(range(N - 2, 1, -1)))
    raise ValueError(f"no reflection chain for family {fam}")


def beta_chain(datum: RootDatum) -> Tuple[Vec, ...]:
    """Successive images of a1 under the chain reflections.

    The last entry is the highest root; the chain visits all nilradical
    roots of the a1-parabolic except one (the reflection through the short
    tail root jumps over it).
    """
    seq = chain_reflection_indices(datum)
    cur = datum.simple_roots[0]
    chain = [cur]
    for i in seq:
        cur = simple_reflection(datum, i).act_root(cur)
        chain.append(cur)
    if chain[-1] != highest_root(datum):
        raise RuntimeError("reflection chain did not reach the highest root")
    return tuple(chain)
