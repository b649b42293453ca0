"""Exact multivariate rational function arithmetic.

Values are quotients p/q of multivariate polynomials with Fraction
coefficients.  Equality is decided by cross multiplication, so it is exact
even when a common polynomial factor survives the (best effort) reduction.
Reduction removes rational content, common monomial factors, and exact
polynomial divisors, and scales the denominator to be monic in a fixed
graded-lex monomial order; zero- and one-tests are therefore decidable.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple

Monomial = Tuple[int, ...]


class _Poly:
    """Polynomial over Q in named variables, dict of exponent tuples."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Tuple[str, ...], terms: Dict[Monomial, Fraction]):
        self.vars = vars
        self.terms = terms

    @staticmethod
    def const(c) -> "_Poly":
        c = Fraction(c)
        return _Poly((), {(): c} if c else {})

    @staticmethod
    def var(name: str) -> "_Poly":
        return _Poly((name,), {(1,): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def as_const(self):
        """Fraction value if constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            (mono, c), = self.terms.items()
            if all(e == 0 for e in mono):
                return c
        return None

    def _prune(self) -> "_Poly":
        # drop unused variables so equal polynomials compare equal
        used = [i for i in range(len(self.vars))
                if any(m[i] for m in self.terms)]
        if len(used) == len(self.vars):
            return self
        vs = tuple(self.vars[i] for i in used)
        return _Poly(vs, {tuple(m[i] for i in used): c
                          for m, c in self.terms.items()})

    def _aligned(self, other: "_Poly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vs = tuple(sorted(set(self.vars) | set(other.vars)))

        def remap(p: "_Poly"):
            idx = [vs.index(v) for v in p.vars]
            out: Dict[Monomial, Fraction] = {}
            for m, c in p.terms.items():
                mm = [0] * len(vs)
                for i, e in zip(idx, m):
                    mm[i] = e
                out[tuple(mm)] = c
            return out

        return vs, remap(self), remap(other)

    def __add__(self, other: "_Poly") -> "_Poly":
        vs, a, b = self._aligned(other)
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _Poly(vs, out)._prune()

    def __neg__(self) -> "_Poly":
        return _Poly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "_Poly") -> "_Poly":
        return self + (-other)

    def __mul__(self, other: "_Poly") -> "_Poly":
        vs, a, b = self._aligned(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return _Poly(vs, out)._prune()

    def scale(self, c: Fraction) -> "_Poly":
        if not c:
            return _Poly((), {})
        return _Poly(self.vars, {m: k * c for m, k in self.terms.items()})

    def eq(self, other: "_Poly") -> bool:
        _, a, b = self._aligned(other)
        return a == b

    def lead(self) -> Tuple[Monomial, Fraction]:
        """Leading term under graded lex, assuming nonzero."""
        m = max(self.terms, key=lambda mo: (sum(mo), mo))
        return m, self.terms[m]

    def divide_exact(self, other: "_Poly"):
        """self / other if the division is exact, else None."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        vs, a, b = self._aligned(other)
        rem = _Poly(vs, dict(a))
        div = _Poly(vs, b)
        dm, dc = div.lead()
        quo: Dict[Monomial, Fraction] = {}
        while not rem.is_zero():
            rm, rc = rem.lead()
            qm = tuple(x - y for x, y in zip(rm, dm))
            if any(e < 0 for e in qm):
                return None
            qc = rc / dc
            quo[qm] = qc
            rem = rem - div * _Poly(vs, {qm: qc})
        return _Poly(vs, quo)._prune()

    def eval(self, assignment: Dict[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            val = c
            for v, e in zip(self.vars, m):
                if e:
                    base = Fraction(assignment[v])
                    val *= base ** e
            total += val
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=lambda mo: (-sum(mo), mo)):
            c = self.terms[m]
            factors = []
            for v, e in zip(self.vars, m):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append(f"{v}^{e}")
            if not factors:
                bits.append(str(c))
            elif c == 1:
                bits.append("*".join(factors))
            elif c == -1:
                bits.append("-" + "*".join(factors))
            else:
                bits.append(str(c) + "*" + "*".join(factors))
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out


def _monomial_content(p: _Poly) -> Monomial:
    mins = None
    for m in p.terms:
        mins = m if mins is None else tuple(map(min, mins, m))
    return mins if mins is not None else ()


class RatFunc:
    """Rational function num/den, reduced best effort, equality exact."""

    __slots__ = ("num", "den")
    __hash__ = None  # equality classes are not hash-stable

    def __init__(self, num: _Poly, den: _Poly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num: _Poly, den: _Poly):
        if num.is_zero():
            return _Poly.const(0), _Poly.const(1)
        # common monomial factor across num and den
        if num.vars and den.vars and set(num.vars) & set(den.vars):
            vs, a, b = num._aligned(den)
            pa = _Poly(vs, a)
            pb = _Poly(vs, b)
            common = tuple(map(min, _monomial_content(pa), _monomial_content(pb)))
            if any(common):
                shift = lambda t: {tuple(x - y for x, y in zip(m, common)): c
                                   for m, c in t.items()}
                num = _Poly(vs, shift(pa.terms))._prune()
                den = _Poly(vs, shift(pb.terms))._prune()
        # exact polynomial division in either direction
        q = num.divide_exact(den)
        if q is not None:
            num, den = q, _Poly.const(1)
        else:
            q = den.divide_exact(num)
            if q is not None:
                num, den = _Poly.const(1), q
        # monic denominator
        _, lc = den.lead()
        if lc != 1:
            num = num.scale(Fraction(1) / lc)
            den = den.scale(Fraction(1) / lc)
        return num, den

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc(_Poly.const(c), _Poly.const(1))

    @staticmethod
    def var(name: str) -> "RatFunc":
        return RatFunc(_Poly.var(name), _Poly.const(1))

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        raise TypeError(f"cannot interpret {x!r} as a rational function")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.eq(self.den)

    def as_const(self):
        """Fraction value if this is a constant, else None."""
        n, d = self.num.as_const(), self.den.as_const()
        if n is not None and d is not None:
            return n / d
        return None

    def __add__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def inverse(self) -> "RatFunc":
        return RatFunc.const(1) / self

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den).eq(other.num * self.den)

    def eval(self, assignment: Dict[str, Fraction]) -> Fraction:
        d = self.den.eval(assignment)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes under assignment")
        return self.num.eval(assignment) / d

    def variables(self) -> Tuple[str, ...]:
        return tuple(sorted(set(self.num.vars) | set(self.den.vars)))

    def __str__(self) -> str:
        if self.den.as_const() == 1:
            return str(self.num)
        ns, ds = str(self.num), str(self.den)
        if len(self.num.terms) > 1:
            ns = f"({ns})"
        if len(self.den.terms) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def symbols(names: str | Iterable[str]):
    """Make RatFunc variables from a space separated string or iterable."""
    if isinstance(names, str):
        names = names.split()
    out = tuple(RatFunc.var(n) for n in names)
    return out[0] if len(out) == 1 else out


ZERO = RatFunc.const(0)
ONE = RatFunc.const(1)


# --- tiny expression parser, used by the command line front end ---------

class ScalarSyntaxError(ValueError):
    pass


def parse_scalar(text: str) -> RatFunc:
    """Parse '3*x^2/(y - 1/2)' style expressions into a RatFunc."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(kind=None):
        nonlocal pos
        tok = peek()
        if tok is None or (kind is not None and tok[0] != kind):
            raise ScalarSyntaxError(f"unexpected end or token in {text!r}")
        pos += 1
        return tok

    def atom() -> RatFunc:
        tok = take()
        kind, val = tok
        if kind == "int":
            return RatFunc.const(int(val))
        if kind == "name":
            return RatFunc.var(val)
        if kind == "(":
            e = expr()
            take(")")
            return e
        if kind == "-":
            return -atom_pow()
        raise ScalarSyntaxError(f"unexpected token {val!r} in {text!r}")

    def atom_pow() -> RatFunc:
        base = atom()
        while peek() and peek()[0] == "^":
            take("^")
            sign = 1
            if peek() and peek()[0] == "-":
                take("-")
                sign = -1
            e = take("int")
            base = base ** (sign * int(e[1]))
        return base

    def term() -> RatFunc:
        out = atom_pow()
        while peek() and peek()[0] in ("*", "/"):
            op = take()[0]
            rhs = atom_pow()
            out = out * rhs if op == "*" else out / rhs
        return out

    def expr() -> RatFunc:
        neg = False
        if peek() and peek()[0] == "-":
            take("-")
            neg = True
        out = term()
        if neg:
            out = -out
        while peek() and peek()[0] in ("+", "-"):
            op = take()[0]
            rhs = term()
            out = out + rhs if op == "+" else out - rhs
        return out

    result = expr()
    if pos != len(tokens):
        raise ScalarSyntaxError(f"trailing input in {text!r}")
    return result


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ScalarSyntaxError(f"bad character {ch!r} in {text!r}")
    return tokens
