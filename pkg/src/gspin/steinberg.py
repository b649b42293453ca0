"""Symbolic words in root-group elements, torus values, and reflection
representatives, with collection to Bruhat canonical form.

A word multiplies atoms left to right:

    u[root](expr)   root-group element, any root, exact rational-function value
    t[...]          torus element, one value per cocharacter basis vector
    w[i]            the fixed representative u_{a_i}(1) u_{-a_i}(-1) u_{a_i}(1)

Collection rewrites any word into the unique form  u . t . w . u''  where u
runs over positive roots in the fixed order, w is the canonical reduced word
of the Weyl part, and u'' runs over the positive roots made negative by w.
Two words are equal in the group iff their canonical forms agree, which the
adjoint representation double-checks numerically at rational points.

Indeterminates are treated as generically nonzero; rank-one rewrites divide
by them freely.  A division that would need the inverse of the identically
zero function raises DegenerateCellError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .chevalley import LieAlgebra, StructureConstantTable, w_gamma_sign
from .linalg import Vec, dot, vec_scale
from .ratfunc import ONE, RatFunc, ZERO
from .rootdata import (RootDatum, coroot, delta_coords, highest_root,
                       levi_factorization, positive_roots, root_order_key,
                       root_str)
from .weyl import (WeylElement, canonical_reduced_word, from_word,
                   identity_element, is_positive, simple_reflection)


class DegenerateCellError(ZeroDivisionError):
    """A rank-one rewrite needed the inverse of the zero function."""


class MeasureZeroError(ValueError):
    """The input lies on the excluded measure-zero locus."""


# --- atoms and words --------------------------------------------------------

@dataclass(frozen=False, eq=False)
class TorusMonomial:
    """Formal torus element prod_k basis_k(value_k); entries equal to 1 omitted."""
    values: Dict[int, RatFunc]

    def __post_init__(self):
        clean = {}
        for k, v in self.values.items():
            v = RatFunc.coerce(v)
            if v.is_zero():
                raise DegenerateCellError(f"torus entry {k} is zero")
            if not v.is_one():
                clean[k] = v
        self.values = clean

    def is_trivial(self) -> bool:
        return not self.values

    def __mul__(self, other: "TorusMonomial") -> "TorusMonomial":
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out.get(k, ONE) * v
        return TorusMonomial(out)

    def inverse(self) -> "TorusMonomial":
        return TorusMonomial({k: v.inverse() for k, v in self.values.items()})

    def character_value(self, chi: Vec) -> RatFunc:
        """chi(t) for a character chi given in lattice coordinates."""
        out = ONE
        for k, v in self.values.items():
            if chi[k]:
                out = out * v ** chi[k]
        return out

    def transport(self, action_Xdual) -> "TorusMonomial":
        """Image under a Weyl element acting on the cocharacter lattice."""
        out: Dict[int, RatFunc] = {}
        for k, v in self.values.items():
            col = [row[k] for row in action_Xdual]
            for j, e in enumerate(col):
                if e:
                    out[j] = out.get(j, ONE) * v ** e
        return TorusMonomial(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusMonomial):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self.values.get(k, ONE) == other.values.get(k, ONE)
                   for k in keys)


def cochar_monomial(vec: Vec, value: RatFunc) -> TorusMonomial:
    """The cocharacter with coordinate vector `vec` evaluated at `value`."""
    value = RatFunc.coerce(value)
    return TorusMonomial({k: value ** e for k, e in enumerate(vec) if e})


@dataclass(frozen=True)
class UnipotentAtom:
    root: Vec
    coeff: RatFunc


@dataclass(frozen=True)
class TorusAtom:
    monomial: TorusMonomial


@dataclass(frozen=True)
class WeylAtom:
    index: int


@dataclass(frozen=True)
class _PendingTorus:
    """Stands for a_i^vee(-1) in datum-free words (w_i^{-1} = w_i a_i^vee(-1));
    resolved to a torus atom during collection."""
    index: int


Atom = object


@dataclass(frozen=True)
class GroupWord:
    atoms: Tuple[Atom, ...]

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.atoms + other.atoms)

    def inverse(self) -> "GroupWord":
        out: List[Atom] = []
        for a in reversed(self.atoms):
            if isinstance(a, UnipotentAtom):
                out.append(UnipotentAtom(a.root, -a.coeff))
            elif isinstance(a, TorusAtom):
                out.append(TorusAtom(a.monomial.inverse()))
            elif isinstance(a, WeylAtom):
                out.append(WeylAtom(a.index))
                out.append(_PendingTorus(a.index))
            else:  # inverse of a pending a_i^vee(-1) is itself
                out.append(a)
        return GroupWord(tuple(out))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupWord):
            return NotImplemented
        if len(self.atoms) != len(other.atoms):
            return False
        for a, b in zip(self.atoms, other.atoms):
            if type(a) is not type(b):
                return False
            if isinstance(a, UnipotentAtom):
                if a.root != b.root or a.coeff != b.coeff:
                    return False
            elif isinstance(a, TorusAtom):
                if a.monomial != b.monomial:
                    return False
            elif a.index != b.index:
                return False
        return True

    def describe(self, datum: RootDatum) -> str:
        bits = []
        for a in self.atoms:
            if isinstance(a, UnipotentAtom):
                bits.append(f"u[{root_str(datum, a.root)}]({a.coeff})")
            elif isinstance(a, TorusAtom):
                entries = ",".join(f"{datum.basis_labels[k]}^:{v}"
                                   for k, v in sorted(a.monomial.values.items()))
                bits.append(f"t[{entries}]")
            elif isinstance(a, WeylAtom):
                bits.append(f"w[{a.index}]")
            else:
                bits.append(f"t[a{a.index}^:-1]")
        return " * ".join(bits) if bits else "1"


def u(root: Vec, coeff) -> GroupWord:
    return GroupWord((UnipotentAtom(tuple(root), RatFunc.coerce(coeff)),))


def torus(values: Dict[int, RatFunc] | TorusMonomial) -> GroupWord:
    tm = values if isinstance(values, TorusMonomial) else TorusMonomial(dict(values))
    return GroupWord((TorusAtom(tm),))


def w(i: int) -> GroupWord:
    return GroupWord((WeylAtom(i),))


def word(*parts: GroupWord) -> GroupWord:
    out = GroupWord(())
    for p in parts:
        out = out * p
    return out


# --- canonical form and the collection engine -------------------------------

class CanonicalForm:
    """u . t . w . u'' with both unipotent parts as ordered coefficient lists."""

    def __init__(self, table: StructureConstantTable):
        self.table = table
        self.datum = table.datum
        self.u: List[Tuple[Vec, RatFunc]] = []
        self.t = TorusMonomial({})
        self.w: WeylElement = identity_element(table.datum)
        self.u2: List[Tuple[Vec, RatFunc]] = []

    # ordered-product multiplication with commutator spawns
    def _u_mult(self, atoms: List[Tuple[Vec, RatFunc]], root: Vec, coeff: RatFunc,
                key) -> List[Tuple[Vec, RatFunc]]:
        if coeff.is_zero():
            return atoms
        if not atoms or key(atoms[-1][0]) <= key(root):
            if atoms and atoms[-1][0] == root:
                s = atoms[-1][1] + coeff
                return atoms[:-1] + ([(root, s)] if not s.is_zero() else [])
            return atoms + [(root, coeff)]
        head, (dr, dc) = atoms[:-1], atoms[-1]
        out = self._u_mult(head, root, coeff, key)
        for kr, kc in self.table.commutator_atoms(dr, root, dc, coeff):
            out = self._u_mult(out, kr, kc, key)
        return self._u_mult(out, dr, dc, key)

    def _key(self, root: Vec):
        return root_order_key(self.datum, root)

    def _resort(self, atoms: List[Tuple[Vec, RatFunc]], key) -> List[Tuple[Vec, RatFunc]]:
        out: List[Tuple[Vec, RatFunc]] = []
        for r, c in atoms:
            out = self._u_mult(out, r, c, key)
        return out

    def _w_negative(self, root: Vec) -> bool:
        return not is_positive(self.datum, self.w.act_root(root))

    def _conj_through_w(self, root: Vec, coeff: RatFunc) -> Tuple[Vec, RatFunc]:
        """w . u_root(coeff) . w^{-1} for the canonical representative."""
        cur = root
        sign = 1
        for i in reversed(self.w.word):
            sign *= self.table.d(self.datum.simple_roots[i - 1], cur)
            cur = simple_reflection(self.datum, i).act_root(cur)
        return cur, coeff * sign

    def _set_weyl(self, elem: WeylElement) -> None:
        self.w = from_word(self.datum, canonical_reduced_word(elem))

    # multiplication by primitive atoms
    def mult_unipotent(self, root: Vec, coeff: RatFunc) -> None:
        coeff = RatFunc.coerce(coeff)
        if coeff.is_zero():
            return
        if not is_positive(self.datum, root):
            self._mult_negative_unipotent(root, coeff)
            return
        merged = self._u_mult(self.u2, root, coeff, self._key)
        stay = [(r, c) for r, c in merged if self._w_negative(r)]
        if len(stay) == len(merged):
            self.u2 = merged
            return
        split_key = lambda r: (0 if not self._w_negative(r) else 1, self._key(r))
        arranged = self._resort(merged, split_key)
        cross = [(r, c) for r, c in arranged if not self._w_negative(r)]
        self.u2 = [(r, c) for r, c in arranged if self._w_negative(r)]
        for r, c in cross:
            img, c2 = self._conj_through_w(r, c)
            c3 = c2 * self.t.character_value(img)
            self.u = self._u_mult(self.u, img, c3, self._key)

    def _mult_negative_unipotent(self, root: Vec, coeff: RatFunc) -> None:
        pos = vec_scale(root, -1)
        if pos in self.datum.simple_roots:
            i = self.datum.simple_roots.index(pos) + 1
            if coeff.is_zero():
                return
            inv = coeff.inverse()
            av = self.datum.simple_coroots[i - 1]
            self.mult_unipotent(pos, inv)
            self.mult_torus(cochar_monomial(av, -inv))
            self.mult_weyl(i)
            self.mult_unipotent(pos, inv)
            return
        # walk the positive root down to a simple one and conjugate
        for i, a in enumerate(self.datum.simple_roots, start=1):
            if a != pos and self.datum.pairing(pos, self.datum.simple_coroots[i - 1]) > 0:
                lower = simple_reflection(self.datum, i).act_root(pos)
                sign = self.table.d(a, vec_scale(lower, -1))
                self.mult_weyl(i)
                self.mult_unipotent(vec_scale(lower, -1), coeff / sign)
                self.mult_weyl(i)
                self.mult_torus(cochar_monomial(self.datum.simple_coroots[i - 1],
                                                RatFunc.const(-1)))
                return
        raise RuntimeError(f"cannot reduce root {root} to a simple root")

    def mult_torus(self, tm: TorusMonomial) -> None:
        if tm.is_trivial():
            return
        self.u2 = [(r, c / tm.character_value(r)) for r, c in self.u2]
        self.t = self.t * tm.transport(self.w.action_Xdual)

    def mult_weyl(self, i: int) -> None:
        datum = self.datum
        ai = datum.simple_roots[i - 1]
        # bring the a_i coefficient, if any, to the right end of u''
        extract_key = lambda r: (1 if r == ai else 0, self._key(r))
        arranged = self._resort(self.u2, extract_key)
        ci: Optional[RatFunc] = None
        if arranged and arranged[-1][0] == ai:
            ci = arranged[-1][1]
            arranged = arranged[:-1]
        si = simple_reflection(datum, i)
        conj = [(si.act_root(r), c * self.table.d(ai, si.act_root(r)))
                for r, c in arranged]
        length_drop = not is_positive(datum, self.w.act_root(ai))
        v = self.w * si
        self._set_weyl(v)
        if length_drop:
            h0 = cochar_monomial(datum.simple_coroots[i - 1], RatFunc.const(-1))
            self.t = self.t * h0.transport(self.w.action_Xdual)
        else:
            if ci is not None:
                raise RuntimeError("canonical form held a w-positive root in u''")
        self.u2 = self._resort(conj, self._key)
        if ci is not None and not ci.is_zero():
            # remaining factor u_{-a_i}(-ci), expanded through the rank-one cell
            z = -ci
            inv = z.inverse()
            av = datum.simple_coroots[i - 1]
            self.mult_unipotent(ai, inv)
            self.mult_torus(cochar_monomial(av, -inv))
            self.mult_weyl(i)
            self.mult_unipotent(ai, inv)

    def mult_atom(self, atom: Atom) -> None:
        if isinstance(atom, UnipotentAtom):
            self.mult_unipotent(atom.root, atom.coeff)
        elif isinstance(atom, TorusAtom):
            self.mult_torus(atom.monomial)
        elif isinstance(atom, WeylAtom):
            self.mult_weyl(atom.index)
        elif isinstance(atom, _PendingTorus):
            av = self.datum.simple_coroots[atom.index - 1]
            self.mult_torus(cochar_monomial(av, RatFunc.const(-1)))
        else:
            raise TypeError(f"not a group-word atom: {atom!r}")

    def mult_word(self, word: GroupWord) -> None:
        for atom in word.atoms:
            self.mult_atom(atom)

    def coeff(self, root: Vec, tail: bool = False) -> RatFunc:
        for r, c in (self.u2 if tail else self.u):
            if r == root:
                return c
        return ZERO

    def to_word(self) -> GroupWord:
        atoms: List[Atom] = [UnipotentAtom(r, c) for r, c in self.u]
        if not self.t.is_trivial():
            atoms.append(TorusAtom(self.t))
        atoms.extend(WeylAtom(i) for i in self.w.word)
        atoms.extend(UnipotentAtom(r, c) for r, c in self.u2)
        return GroupWord(tuple(atoms))

    def equals(self, other: "CanonicalForm") -> bool:
        if self.w != other.w or self.t != other.t:
            return False
        for mine, theirs in ((self.u, other.u), (self.u2, other.u2)):
            if len(mine) != len(theirs):
                return False
            for (r1, c1), (r2, c2) in zip(mine, theirs):
                if r1 != r2 or c1 != c2:
                    return False
        return True


def normal_form(word: GroupWord, table: StructureConstantTable) -> CanonicalForm:
    form = CanonicalForm(table)
    try:
        form.mult_word(word)
    except ZeroDivisionError as exc:
        raise DegenerateCellError(f"degenerate cell while collecting: {exc}") from exc
    return form


def normalize(word: GroupWord, table: StructureConstantTable) -> GroupWord:
    """Bruhat canonical form of the word, as a word."""
    return normal_form(word, table).to_word()


# --- the adjoint-representation oracle ---------------------------------------

class AdjointEvalError(ValueError):
    pass


def adjoint_eval(word: GroupWord, table: StructureConstantTable,
                 assignment: Dict[str, Fraction]) -> Tuple[Tuple[Fraction, ...], ...]:
    """Exact matrix of the word in the adjoint representation.

    The assignment must give every indeterminate a rational value keeping
    all denominators (and rank-one cells) nonzero.
    """
    lie = LieAlgebra(table)
    dim = lie.dim

    def apply_unipotent(root: Vec, value: Fraction, vec: Dict[int, Fraction]):
        er = {lie.index[root]: Fraction(1)}
        out = dict(vec)
        term = vec
        k = 1
        while term:
            term = lie.bracket(er, term)
            if not term:
                break
            scale = value ** k / _factorial(k)
            for idx, c in term.items():
                s = out.get(idx, Fraction(0)) + scale * c
                if s:
                    out[idx] = s
                else:
                    out.pop(idx, None)
            k += 1
            if k > 2 * dim:
                raise RuntimeError("adjoint exponential did not terminate")
        return out

    def apply_atom(atom: Atom, vec: Dict[int, Fraction]):
        if isinstance(atom, UnipotentAtom):
            try:
                val = atom.coeff.eval(assignment)
            except ZeroDivisionError as exc:
                raise AdjointEvalError(
                    f"denominator vanishes on atom u[{atom.root}]") from exc
            if val == 0:
                return vec
            return apply_unipotent(atom.root, val, vec)
        if isinstance(atom, TorusAtom):
            out = {}
            for idx, c in vec.items():
                if idx < len(lie.roots):
                    chi = lie.roots[idx]
                    try:
                        factor = atom.monomial.character_value(chi).eval(assignment)
                    except ZeroDivisionError as exc:
                        raise AdjointEvalError(
                            "torus entry vanishes under assignment") from exc
                    if factor == 0:
                        raise AdjointEvalError("torus value degenerates to zero")
                    out[idx] = c * factor
                else:
                    out[idx] = c
            return out
        if isinstance(atom, WeylAtom):
            a = table.datum.simple_roots[atom.index - 1]
            vec = apply_unipotent(a, Fraction(1), vec)
            vec = apply_unipotent(vec_scale(a, -1), Fraction(-1), vec)
            return apply_unipotent(a, Fraction(1), vec)
        if isinstance(atom, _PendingTorus):
            av = table.datum.simple_coroots[atom.index - 1]
            return apply_atom(TorusAtom(cochar_monomial(av, RatFunc.const(-1))), vec)
        raise TypeError(f"not a group-word atom: {atom!r}")

    cols = []
    for j in range(dim):
        vec = {j: Fraction(1)}
        for atom in reversed(word.atoms):
            vec = apply_atom(atom, vec)
        cols.append(vec)
    return tuple(tuple(cols[j].get(i, Fraction(0)) for j in range(dim))
                 for i in range(dim))


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


# --- orbit reduction under the Levi's unipotent radical ----------------------

def nilradical_roots(datum: RootDatum) -> Tuple[Vec, ...]:
    return levi_factorization(datum, {1}).nilradical


def orbit_reduce(n_word: GroupWord, table: StructureConstantTable
                 ) -> Tuple[GroupWord, GroupWord]:
    """Conjugate a nilradical element to the two-coordinate representative.

    Input: a product of root-group atoms over the nilradical of the
    a1-parabolic whose a1-coordinate is not identically zero.  Returns
    (conjugator, reduced) with reduced = u_{a1}(a) u_{gamma}(x) and
    conjugator . input . conjugator^{-1} = reduced.
    """
    datum = table.datum
    rn = nilradical_roots(datum)
    rn_set = set(rn)
    for atom in n_word.atoms:
        if not isinstance(atom, UnipotentAtom) or atom.root not in rn_set:
            raise ValueError("orbit reduction expects nilradical root atoms only")
    a1 = datum.simple_roots[0]
    gamma = highest_root(datum)
    form = normal_form(n_word, table)
    a = form.coeff(a1)
    if a.is_zero():
        raise MeasureZeroError("a1-coordinate is identically zero")
    conjugator = GroupWord(())
    current = n_word
    for target in rn:
        if target in (a1, gamma):
            continue
        form = normal_form(current, table)
        cval = form.coeff(target)
        if cval.is_zero():
            continue
        beta = tuple(t - s for t, s in zip(target, a1))
        cc = table.N(beta, a1)
        if cc == 0:
            raise RuntimeError(f"no commutator route from {beta} to {target}")
        z = -cval / (cc * a)
        g = u(beta, z)
        current = normalize(g * current * u(beta, -z), table)
        conjugator = g * conjugator
    reduced = normal_form(current, table)
    support = [r for r, c in reduced.u]
    if not set(support) <= {a1, gamma}:
        raise RuntimeError("orbit reduction left extra coordinates")
    return conjugator, reduced.to_word()


def scaling_cochar_index(datum: RootDatum) -> int:
    """Basis slot of e_1^* (odd) or E_1^* (even) used for central scaling."""
    label = "E1" if datum.family == "wgspin_even" else "e1"
    return datum.basis_labels.index(label)


def central_scale(reduced: GroupWord, table: StructureConstantTable
                  ) -> Tuple[GroupWord, GroupWord]:
    """Scale u_{a1}(a) u_gamma(x) to a1-coordinate 1 by a central torus element.

    Returns (torus_word, scaled_word); conjugation by the torus element
    realizes the scaling.
    """
    datum = table.datum
    a1 = datum.simple_roots[0]
    gamma = highest_root(datum)
    form = normal_form(reduced, table)
    a = form.coeff(a1)
    if a.is_zero():
        raise MeasureZeroError("a1-coordinate is identically zero")
    x = form.coeff(gamma)
    k = scaling_cochar_index(datum)
    vec = tuple(1 if j == k else 0 for j in range(datum.dim_X))
    tm = cochar_monomial(vec, a.inverse())
    scaled = normalize(torus(tm) * reduced * torus(tm.inverse()), table)
    expect = normalize(u(a1, ONE) * u(gamma, x / a), table)
    if scaled != expect:
        raise RuntimeError("central scaling did not normalize the a1-coordinate")
    return torus(tm), scaled


# --- the specific elements of the similitude-parabolic computation -----------

def w0_indices(datum: RootDatum) -> Tuple[int, ...]:
    """Reflection word of the longest coset representative for the
    a1-parabolic: 1..N..1 (odd), 1..N-2, N-1, N, N-2..1 (even)."""
    N = datum.rank
    if datum.family == "gspin_odd":
        return tuple(range(1, N + 1)) + tuple(range(N - 1, 0, -1))
    if datum.family in ("gspin_even", "wgspin_even"):
        return (tuple(range(1, N - 1)) + (N - 1, N)
                + tuple(range(N - 2, 0, -1)))
    raise ValueError(f"no parabolic representative word for {datum.family}")


def w0_word(datum: RootDatum) -> GroupWord:
    return GroupWord(tuple(WeylAtom(i) for i in w0_indices(datum)))


def wprime_word(datum: RootDatum) -> GroupWord:
    """Product of inverse reflection representatives over the inner word."""
    inner = w0_indices(datum)[1:-1]
    return GroupWord(tuple(WeylAtom(i) for i in inner)).inverse()


def wprime_weyl(datum: RootDatum) -> WeylElement:
    return from_word(datum, w0_indices(datum)[1:-1]).inverse()


@dataclass(frozen=True)
class BruhatMNN:
    m: GroupWord
    nprime: GroupWord
    nbar: GroupWord


def bruhat_mnn(table: StructureConstantTable, x: RatFunc) -> BruhatMNN:
    """The P \\bar N decomposition of w0^{-1} u_{a1}(1) u_gamma(x).

    Verifies symbolically that m n' nbar matches, and that m also equals
    a1^vee(d/x) wprime; x must not be identically zero.
    """
    datum = table.datum
    x = RatFunc.coerce(x)
    if x.is_zero():
        raise MeasureZeroError("the gamma-coordinate x must be nonzero")
    a1 = datum.simple_roots[0]
    gamma = highest_root(datum)
    d = w_gamma_sign(table)
    gv = coroot(datum, gamma)
    m = wprime_word(datum) * torus(cochar_monomial(gv, RatFunc.const(d) / x))
    nprime = u(gamma, -x) * u(a1, RatFunc.const(-1))
    nbar = u(vec_scale(gamma, -1), x.inverse()) * u(vec_scale(a1, -1), ONE)
    lhs = normal_form(w0_word(datum).inverse() * u(a1, ONE) * u(gamma, x), table)
    rhs = normal_form(m * nprime * nbar, table)
    if not lhs.equals(rhs):
        raise RuntimeError("Bruhat decomposition mismatch")
    a1v = datum.simple_coroots[0]
    m_alt = torus(cochar_monomial(a1v, RatFunc.const(d) / x)) * wprime_word(datum)
    if not normal_form(m, table).equals(normal_form(m_alt, table)):
        raise RuntimeError("alternate form of the Levi part does not match")
    return BruhatMNN(m, nprime, nbar)


# --- stabilizer comparison and the central-torus pairing check --------------

def stabilizer_roots(table: StructureConstantTable
                     ) -> Tuple[Tuple[Vec, ...], Tuple[Vec, ...]]:
    """Levi-unipotent roots fixing n = u_{a1}(1) u_gamma(q), two ways.

    Left: roots whose one-parameter group commutes with n (symbolically).
    Right: roots kept positive by the Weyl part of the Levi component m.
    Both sets equal the positive roots spanned by Delta minus {a1, a2}.
    """
    datum = table.datum
    a1 = datum.simple_roots[0]
    gamma = highest_root(datum)
    q = RatFunc.var("q")
    xsym = RatFunc.var("x")
    n_word = u(a1, ONE) * u(gamma, q)
    n_form = normal_form(n_word, table)
    theta = levi_factorization(datum, {1}).levi
    wp = wprime_weyl(datum)
    left, right = [], []
    for beta in positive_roots(theta):
        conj = normal_form(u(beta, xsym) * n_word * u(beta, -xsym), table)
        if conj.equals(n_form):
            left.append(beta)
        if is_positive(datum, wp.act_root(beta)):
            right.append(beta)
    return tuple(left), tuple(right)


def omega_positive_roots(datum: RootDatum) -> Tuple[Vec, ...]:
    """Positive roots spanned by Delta minus {a1, a2}."""
    if datum.rank < 2:
        return ()
    return positive_roots(levi_factorization(datum, {1, 2}).levi)


@dataclass(frozen=True)
class EStarReport:
    ok: bool
    pairing_with_a1: int
    violations: Tuple[str, ...]


def e_star_check(datum: RootDatum, cochar_index: Optional[int] = None) -> EStarReport:
    """Pairings of the central-scaling cocharacter: 1 against a1, 0 on the Levi.

    Passing an explicit cocharacter slot checks that slot instead (useful to
    confirm the check is not vacuous).
    """
    if datum.family not in ("gspin_odd", "wgspin_even", "gspin_even"):
        raise ValueError("central-scaling check applies to the ambient families")
    k = scaling_cochar_index(datum) if cochar_index is None else cochar_index
    estar = tuple(1 if j == k else 0 for j in range(datum.dim_X))
    bad = []
    p1 = datum.pairing(datum.simple_roots[0], estar)
    if p1 != 1:
        bad.append(f"<a1, {datum.basis_labels[k]}*> = {p1} != 1")
    theta = levi_factorization(datum, {1}).levi
    for beta in positive_roots(theta):
        p = datum.pairing(beta, estar)
        if p != 0:
            bad.append(f"<{root_str(datum, beta)}, {datum.basis_labels[k]}*> = {p} != 0")
    return EStarReport(not bad, p1, tuple(bad))
