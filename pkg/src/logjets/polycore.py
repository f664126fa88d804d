"""Exact multivariate polynomials over Q and GF(p), and truncated polynomials.

Coefficients are :class:`fractions.Fraction` in characteristic 0 and
:class:`Mod` residues in characteristic p.  Polynomials are immutable and
store a sparse map from exponent tuples to nonzero coefficients; iteration
and printing follow the ring's monomial order, largest term first.

>>> R = PolyRing(["x", "y"])
>>> x, y = R.gens()
>>> str((x**2 - y**3) + y**3)
'x^2'
>>> R("(x+1)^2")
x^2 + 2*x + 1
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatchError, ParseError, PreconditionError

__all__ = [
    "Mod",
    "PolyRing",
    "Polynomial",
    "TruncatedPolynomial",
    "poly_substitute",
    "poly_formal_derivative",
    "parse_polynomial",
    "univariate_divmod",
    "univariate_gcd",
    "squarefree_part",
    "squarefree_decomposition",
    "root_multiplicity",
    "rational_roots",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Mod:
    """An element of the prime field GF(p), stored as a residue in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p: int):
        if isinstance(value, Mod):
            value = value.value
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            value = value.numerator * pow(value.denominator, -1, p)
        self.value = int(value) % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ContextMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, (int, Fraction)):
            return Mod(other, self.p).value
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return Mod(pow(self.value, -1, self.p), self.p) ** (-e)
        return Mod(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        o = self._other(other)
        return False if o is NotImplemented else self.value == o

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def _order_key(order: str, nvars: int):
    # keys are flat integer tuples so that they can be negated for heaps
    if order == "lex":
        return lambda e: e
    if order == "grevlex":
        return lambda e: (sum(e),) + tuple(-a for a in reversed(e))
    if order.startswith("elim:"):
        k = int(order[5:])
        if not 0 <= k <= nvars:
            raise ValueError(f"block size {k} out of range")

        def key(e):
            a, b = e[:k], e[k:]
            return ((sum(a),) + tuple(-v for v in reversed(a))
                    + (sum(b),) + tuple(-v for v in reversed(b)))
        return key
    raise ValueError(f"unknown monomial order {order!r} (use 'lex' or 'grevlex')")


class PolyRing:
    """A polynomial ring k[x_1, ..., x_s] with a fixed monomial order.

    ``order`` is ``"grevlex"`` (default) or ``"lex"``.  ``"elim:k"`` is a
    product order (grevlex on the first k variables, then grevlex on the
    rest) used internally for elimination.
    """

    _IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

    def __init__(self, variables: Iterable[str], order: str = "grevlex",
                 characteristic: int = 0):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for v in variables:
            if not isinstance(v, str) or not v:
                raise ValueError(f"bad variable name {v!r}")
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.variables = variables
        self.order = order
        self.characteristic = characteristic
        self.index = {v: i for i, v in enumerate(variables)}
        self.nvars = len(variables)
        self.key = _order_key(order, self.nvars)
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.variables == other.variables
                and self.order == other.order
                and self.characteristic == other.characteristic)

    def __hash__(self):
        return hash((self.variables, self.order, self.characteristic))

    def __repr__(self):
        field = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        return f"PolyRing({field}[{', '.join(self.variables)}], {self.order})"

    # scalars -------------------------------------------------------------
    def scalar(self, value):
        """Coerce an int, Fraction, Mod or ``"a/b"`` string into the field."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.characteristic == 0:
            if isinstance(value, Mod):
                raise ContextMismatchError("GF(p) scalar used in characteristic 0")
            return Fraction(value)
        if isinstance(value, Mod) and value.p != self.characteristic:
            raise ContextMismatchError(f"GF({value.p}) scalar used in GF({self.characteristic})")
        return Mod(value, self.characteristic)

    @property
    def field_one(self):
        return self.scalar(1)

    # elements ------------------------------------------------------------
    def _make(self, terms: dict) -> "Polynomial":
        return Polynomial._raw(self, terms)

    def zero(self) -> "Polynomial":
        return self._make({})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        c = self.scalar(value)
        return self._make({self._zero_exp: c} if c else {})

    def var(self, name: str) -> "Polynomial":
        try:
            i = self.index[name]
        except KeyError:
            raise ContextMismatchError(f"unknown variable {name!r} in {self!r}") from None
        e = [0] * self.nvars
        e[i] = 1
        return self._make({tuple(e): self.field_one})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def monomial(self, exponents: Mapping[str, int], coeff=1) -> "Polynomial":
        e = [0] * self.nvars
        for name, k in exponents.items():
            if k < 0:
                raise ValueError("negative exponent")
            e[self.index[name]] += k
        c = self.scalar(coeff)
        return self._make({tuple(e): c} if c else {})

    def from_dict(self, terms: Mapping[tuple, object]) -> "Polynomial":
        out = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != self.nvars or any(a < 0 for a in e):
                raise ValueError(f"bad exponent vector {e}")
            c = self.scalar(c)
            if c:
                out[e] = out.get(e, 0) + c
                if not out[e]:
                    del out[e]
        return self._make(out)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value.to_ring(self)
        if isinstance(value, str):
            return parse_polynomial(value, self)
        return self.constant(value)

    # derived rings ---------------------------------------------------------
    def extend(self, names: Sequence[str], *, front: bool = False,
               order: str | None = None) -> "PolyRing":
        names = tuple(names)
        variables = names + self.variables if front else self.variables + names
        return PolyRing(variables, order or self.order, self.characteristic)

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.variables, order, self.characteristic)

    def fresh_names(self, stem: str, count: int, avoid: Iterable[str] = ()) -> list[str]:
        """Return ``count`` names ``stem1, stem2, ...`` not used in this ring."""
        taken = set(self.variables) | set(avoid)
        out, i = [], 1
        while len(out) < count:
            name = f"{stem}{i}"
            if name not in taken:
                out.append(name)
            i += 1
        return out


class Polynomial:
    """Immutable sparse polynomial.  Create through a :class:`PolyRing`."""

    __slots__ = ("ring", "_terms", "__dict__")

    def __init__(self, ring: PolyRing, terms: Mapping | None = None):
        built = ring.from_dict(terms or {})
        self.ring = ring
        self._terms = built._terms

    @classmethod
    def _raw(cls, ring, terms):
        p = object.__new__(cls)
        p.ring = ring
        p._terms = terms
        return p

    # structure ---------------------------------------------------------------
    @cached_property
    def _sorted(self) -> list:
        return sorted(self._terms, key=self.ring.key, reverse=True)

    def items(self):
        """(exponent tuple, coefficient) pairs, largest monomial first."""
        return [(e, self._terms[e]) for e in self._sorted]

    def monomials(self) -> list[dict]:
        names = self.ring.variables
        return [{names[i]: k for i, k in enumerate(e) if k} for e in self._sorted]

    def coefficient(self, exponents: Mapping[str, int] | tuple):
        if not isinstance(exponents, tuple):
            e = [0] * self.ring.nvars
            for n, k in exponents.items():
                e[self.ring.index[n]] = k
            exponents = tuple(e)
        return self._terms.get(exponents, self.ring.scalar(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self.ring._zero_exp in self._terms)

    def constant_value(self):
        return self._terms.get(self.ring._zero_exp, self.ring.scalar(0))

    @property
    def leading_monomial(self) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self._sorted[0]

    @property
    def leading_coefficient(self):
        return self._terms[self.leading_monomial] if self._terms else self.ring.scalar(0)

    def leading_term(self) -> "Polynomial":
        lm = self.leading_monomial
        return self.ring._make({lm: self._terms[lm]})

    def total_degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def min_degree(self) -> int | None:
        """Smallest total degree of a term; None for the zero polynomial."""
        return min((sum(e) for e in self._terms), default=None)

    def degree(self, var: str | None = None) -> int:
        if var is None:
            return self.total_degree()
        i = self._index(var)
        return max((e[i] for e in self._terms), default=-1)

    def used_variables(self) -> tuple[str, ...]:
        used = set()
        for e in self._terms:
            used.update(i for i, k in enumerate(e) if k)
        return tuple(self.ring.variables[i] for i in sorted(used))

    def weighted_degrees(self, weights: Mapping[str, int]) -> set[int]:
        w = [weights.get(v, 0) for v in self.ring.variables]
        return {sum(a * b for a, b in zip(e, w)) for e in self._terms}

    def is_homogeneous(self, weights: Mapping[str, int] | None = None) -> bool:
        if weights is None:
            return len({sum(e) for e in self._terms}) <= 1
        return len(self.weighted_degrees(weights)) <= 1

    def homogeneous_part(self, degree: int, weights: Mapping[str, int] | None = None):
        if weights is None:
            keep = {e: c for e, c in self._terms.items() if sum(e) == degree}
        else:
            w = [weights.get(v, 0) for v in self.ring.variables]
            keep = {e: c for e, c in self._terms.items()
                    if sum(a * b for a, b in zip(e, w)) == degree}
        return self.ring._make(keep)

    def _index(self, var: str) -> int:
        try:
            return self.ring.index[var]
        except KeyError:
            raise ContextMismatchError(f"unknown variable {var!r} in {self.ring!r}") from None

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ContextMismatchError(
                    f"polynomials from different rings: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction, Mod)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return self.ring._make(terms)

    __radd__ = __add__

    def __neg__(self):
        return self.ring._make({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Mod)):
            c = self.ring.scalar(other)
            if not c:
                return self.ring.zero()
            return self.ring._make({e: a * c for e, a in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return self.ring._make({e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("only division by a nonzero constant is supported")
            other = other.constant_value()
        c = self.ring.scalar(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        inv = self.ring.scalar(1) / c
        return self * inv

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction, Mod)):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self / self.leading_coefficient

    def scale_to_integers(self) -> "Polynomial":
        """Characteristic 0 only: clear denominators and content, positive leading coefficient."""
        from math import gcd, lcm
        if self.ring.characteristic or not self._terms:
            return self
        den = 1
        for c in self._terms.values():
            den = lcm(den, c.denominator)
        nums = [int(c * den) for c in self._terms.values()]
        g = 0
        for n in nums:
            g = gcd(g, n)
        scale = Fraction(den, g)
        if self.leading_coefficient < 0:
            scale = -scale
        return self * scale

    # calculus and substitution ---------------------------------------------
    def derivative(self, var: str) -> "Polynomial":
        i = self._index(var)
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                d = c * k
                if d:
                    e2 = e[:i] + (k - 1,) + e[i + 1:]
                    out[e2] = d
        return self.ring._make(out)

    def compose(self, images: Mapping[str, "Polynomial"], ring: PolyRing | None = None):
        """Ring homomorphism: replace each variable by a polynomial of ``ring``.

        Variables without an explicit image map to the same-named variable of
        the target ring.
        """
        ring = ring or self.ring
        if ring.characteristic != self.ring.characteristic:
            raise ContextMismatchError("characteristic mismatch in compose")
        imgs = []
        for v in self.ring.variables:
            if v in images:
                img = images[v]
                if not isinstance(img, Polynomial):
                    img = ring.constant(img)
                elif img.ring != ring:
                    raise ContextMismatchError(f"image of {v} not in target ring")
                imgs.append(img)
            else:
                imgs.append(None)
        powers: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                img = imgs[i]
                if img is None:
                    img = ring.var(self.ring.variables[i])
                    imgs[i] = img
                powers[key] = img ** k
            return powers[key]

        result = ring.zero()
        for e, c in self._terms.items():
            term = ring.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Re-express in ``ring``, matching variables by name."""
        if ring == self.ring:
            return self
        if ring.characteristic != self.ring.characteristic:
            raise ContextMismatchError("characteristic mismatch")
        idx = []
        for i in range(self.ring.nvars):
            name = self.ring.variables[i]
            idx.append(ring.index.get(name))
        out = {}
        for e, c in self._terms.items():
            e2 = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    j = idx[i]
                    if j is None:
                        raise ContextMismatchError(
                            f"variable {self.ring.variables[i]!r} missing from {ring!r}")
                    e2[j] = k
            out[tuple(e2)] = c
        return ring._make(out)

    def evaluate(self, point: Mapping[str, object]):
        """Evaluate at scalar values for every used variable; returns a scalar."""
        total = self.ring.scalar(0)
        vals = []
        for v in self.ring.variables:
            vals.append(self.ring.scalar(point[v]) if v in point else None)
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    if vals[i] is None:
                        raise PreconditionError(f"no value for {self.ring.variables[i]!r}")
                    term = term * vals[i] ** k
            total = total + term
        return total

    def shift(self, point: Mapping[str, object]) -> "Polynomial":
        """Return f(x + p): translate coordinates so that p becomes the origin."""
        images = {v: self.ring.var(v) + self.ring.scalar(point[v])
                  for v in self.ring.variables if v in point}
        return self.compose(images)

    def substitute(self, images: Mapping[str, "TruncatedPolynomial"]) -> "TruncatedPolynomial":
        return poly_substitute(self, images)

    # printing ------------------------------------------------------------------
    def _mono_str(self, e) -> str:
        parts = []
        for name, k in zip(self.ring.variables, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        char = self.ring.characteristic
        out = []
        for e, c in self.items():
            if char:
                neg, mag = False, c
            else:
                neg, mag = c < 0, abs(c)
            mono = self._mono_str(e)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return str(self)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str, line: int):
    pos, toks = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = "num" if m.group(1) else "id" if m.group(2) else "op"
        val = m.group(m.lastindex)
        toks.append((kind, val, m.start(m.lastindex) + 1))
        pos = m.end()
    toks.append(("end", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing, line: int, column_offset: int):
        self.ring = ring
        self.line = line
        self.off = column_offset
        self.toks = _tokenize(text, line)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        raise ParseError(msg, self.line, tok[2] + self.off)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term() * sign
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self):
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.take()
                p = p * self.factor()
            elif val == "/":
                tok = self.take()
                q = self.factor()
                if not q.is_constant() or q.is_zero():
                    self.error("division only by nonzero constants", tok)
                p = p / q.constant_value()
            elif kind in ("num", "id") or val == "(":
                p = p * self.factor()
            else:
                return p

    def factor(self):
        base = self.atom()
        if self.peek()[1] in ("^", "**"):
            self.take()
            kind, val, _ = self.peek()
            if kind != "num":
                self.error("exponent must be a nonnegative integer")
            self.take()
            base = base ** int(val)
        return base

    def atom(self):
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            return self.ring.constant(int(val))
        if kind == "id":
            if val not in self.ring.index:
                self.error(f"unknown variable {val!r}")
            self.take()
            return self.ring.var(val)
        if val == "(":
            self.take()
            p = self.expr()
            if self.peek()[1] != ")":
                self.error("expected ')'")
            self.take()
            return p
        if kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {val!r}")


def parse_polynomial(text: str, ring: PolyRing, *, line: int = 1,
                     column_offset: int = 0) -> Polynomial:
    """Parse ``text`` as a polynomial of ``ring``.

    Syntax: identifiers for variables, integer literals, ``+ - * / ^``
    (``**`` also accepted), parentheses.  ``*`` may be omitted between
    adjacent factors; ``/`` only divides by constants, so ``3/2*x`` is a
    rational coefficient.
    """
    return _Parser(text, ring, line, column_offset).parse()


# ---------------------------------------------------------------------------
# truncated polynomials R[t]/t^(n+1)

class TruncatedPolynomial:
    """c_0 + c_1 t + ... + c_n t^n with coefficients in a :class:`PolyRing`."""

    __slots__ = ("order", "coeffs", "ring")

    def __init__(self, coeffs: Sequence, order: int | None = None,
                 ring: PolyRing | None = None):
        coeffs = list(coeffs)
        if ring is None:
            for c in coeffs:
                if isinstance(c, Polynomial):
                    ring = c.ring
                    break
            else:
                raise ValueError("cannot infer coefficient ring")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[:order + 1] + [0] * (order + 1 - len(coeffs))
        norm = []
        for c in coeffs:
            if isinstance(c, Polynomial):
                if c.ring != ring:
                    raise ContextMismatchError("coefficients from different rings")
                norm.append(c)
            else:
                norm.append(ring.constant(c))
        self.order = order
        self.coeffs = tuple(norm)
        self.ring = ring

    @classmethod
    def constant(cls, value, order: int, ring: PolyRing):
        return cls([value], order, ring)

    @classmethod
    def t(cls, order: int, ring: PolyRing):
        return cls([0, 1], order, ring)

    def _check(self, other):
        if not isinstance(other, TruncatedPolynomial):
            return TruncatedPolynomial([other], self.order, self.ring)
        if other.order != self.order:
            raise ContextMismatchError(f"truncation orders differ: {self.order} vs {other.order}")
        if other.ring != self.ring:
            raise ContextMismatchError("truncated polynomials over different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return TruncatedPolynomial([a + b for a, b in zip(self.coeffs, other.coeffs)],
                                   self.order, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPolynomial([-a for a in self.coeffs], self.order, self.ring)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Mod)):
            return TruncatedPolynomial([a * other for a in self.coeffs], self.order, self.ring)
        other = self._check(other)
        n = self.order
        out = [self.ring.zero()] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedPolynomial(out, n, self.ring)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = TruncatedPolynomial.constant(1, self.order, self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return (self.order == other.order and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def coefficient(self, i: int) -> Polynomial:
        return self.coeffs[i]

    def truncate(self, order: int) -> "TruncatedPolynomial":
        if order > self.order:
            raise ValueError("cannot raise truncation order")
        return TruncatedPolynomial(self.coeffs[:order + 1], order, self.ring)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            s = str(c)
            if i == 0:
                parts.append(s)
            else:
                factor = "t" if i == 1 else f"t^{i}"
                parts.append(f"{factor}" if s == "1" else f"({s})*{factor}")
        return (" + ".join(parts) or "0") + f"  mod t^{self.order + 1}"

    __repr__ = __str__


def poly_substitute(f: Polynomial,
                    images: Mapping[str, TruncatedPolynomial]) -> TruncatedPolynomial:
    """Evaluate ``f`` at truncated polynomials, discarding powers of t above n."""
    used = f.used_variables()
    missing = [v for v in used if v not in images]
    if missing:
        raise PreconditionError(f"no image for variable(s) {', '.join(missing)}")
    imgs = [images[v] for v in used]
    if not imgs:
        if not images:
            raise PreconditionError("cannot infer truncation order without images")
        ref = next(iter(images.values()))
        return TruncatedPolynomial.constant(f.constant_value(), ref.order, ref.ring)
    order, ring = imgs[0].order, imgs[0].ring
    for img in imgs[1:]:
        if img.order != order:
            raise ContextMismatchError("images have different truncation orders")
        if img.ring != ring:
            raise ContextMismatchError("images have different coefficient rings")
    pos = [f.ring.index[v] for v in used]
    cache: dict = {}

    def power(j, k):
        if (j, k) not in cache:
            if k == 1:
                cache[(j, k)] = imgs[j]
            else:
                half = power(j, k // 2)
                sq = half * half
                cache[(j, k)] = sq * imgs[j] if k % 2 else sq
        return cache[(j, k)]

    total = TruncatedPolynomial.constant(0, order, ring)
    for e, c in f._terms.items():
        term = None
        for j, i in enumerate(pos):
            k = e[i]
            if k:
                term = power(j, k) if term is None else term * power(j, k)
        if term is None:
            term = TruncatedPolynomial.constant(1, order, ring)
        total = total + term * c
    return total


def poly_formal_derivative(f: Polynomial, var: str) -> Polynomial:
    return f.derivative(var)


# ---------------------------------------------------------------------------
# univariate helpers (the polynomial may live in a multivariate ring but must
# involve at most one variable)

def _univariate_var(*polys: Polynomial) -> str | None:
    used = set()
    for p in polys:
        used.update(p.used_variables())
    if len(used) > 1:
        raise PreconditionError(f"expected a univariate polynomial, got variables {sorted(used)}")
    return used.pop() if used else None


def _dense(p: Polynomial, var: str | None) -> list:
    if var is None:
        return [p.constant_value()] if p else []
    i = p.ring.index[var]
    out = [p.ring.scalar(0)] * (p.degree(var) + 1)
    for e, c in p._terms.items():
        out[e[i]] = c
    return out


def _sparse(coeffs: list, ring: PolyRing, var: str | None) -> Polynomial:
    if var is None:
        return ring.constant(coeffs[0]) if coeffs else ring.zero()
    x = ring.var(var)
    i = ring.index[var]
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * ring.nvars
            e[i] = k
            terms[tuple(e)] = c
    return ring._make(terms)


def univariate_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    if a.ring != b.ring:
        raise ContextMismatchError("divmod across rings")
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    var = _univariate_var(a, b)
    r = _dense(a, var)
    d = _dense(b, var)
    q = [a.ring.scalar(0)] * max(len(r) - len(d) + 1, 0)
    inv = a.ring.scalar(1) / d[-1]
    while len(r) >= len(d) and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(d):
            break
        shift = len(r) - len(d)
        c = r[-1] * inv
        q[shift] = c
        for k, dc in enumerate(d):
            r[shift + k] = r[shift + k] - c * dc
        r.pop()
    while r and not r[-1]:
        r.pop()
    return _sparse(q, a.ring, var), _sparse(r, a.ring, var)


def univariate_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, univariate_divmod(a, b)[1]
    return a.monic()


def squarefree_part(f: Polynomial) -> Polynomial:
    """f / gcd(f, f'), monic.  Characteristic 0."""
    if f.is_zero():
        raise PreconditionError("zero polynomial has no squarefree part")
    var = _univariate_var(f)
    if var is None:
        return f.ring.one()
    g = univariate_gcd(f, f.derivative(var))
    return univariate_divmod(f, g)[0].monic()


def squarefree_decomposition(f: Polynomial) -> list[Polynomial]:
    """Yun's algorithm: monic [a_1, a_2, ...] with f = c * prod a_i^i, a_i squarefree coprime.

    ``a_i`` collects the roots of multiplicity exactly i.  Characteristic 0.
    """
    if f.ring.characteristic:
        raise PreconditionError("squarefree decomposition implemented for characteristic 0 only")
    var = _univariate_var(f)
    if var is None:
        return []
    fp = f.derivative(var)
    a0 = univariate_gcd(f, fp)
    b = univariate_divmod(f, a0)[0]
    c = univariate_divmod(fp, a0)[0]
    d = c - b.derivative(var)
    out = []
    while True:
        a = univariate_gcd(b, d)
        out.append(a)
        b = univariate_divmod(b, a)[0]
        if b.is_constant():
            break
        c = univariate_divmod(d, a)[0]
        d = c - b.derivative(var)
    while out and out[-1].is_constant():
        out.pop()
    return out


def root_multiplicity(f: Polynomial, point) -> int:
    """Largest n with (z - point)^n dividing f.  Raises on f = 0."""
    if f.is_zero():
        raise PreconditionError("multiplicity of the zero polynomial is infinite")
    var = _univariate_var(f)
    if var is None:
        return 0
    lin = f.ring.var(var) - f.ring.scalar(point)
    n = 0
    while True:
        q, r = univariate_divmod(f, lin)
        if not r.is_zero():
            return n
        f, n = q, n + 1


def rational_roots(f: Polynomial) -> list[Fraction]:
    """Distinct rational roots of a univariate polynomial over Q, ascending."""
    from sympy import divisors

    if f.ring.characteristic:
        raise PreconditionError("rational roots requested in positive characteristic")
    if f.is_zero():
        raise PreconditionError("every number is a root of the zero polynomial")
    var = _univariate_var(f)
    if var is None:
        return []
    g = squarefree_part(f).scale_to_integers()
    coeffs = [int(c) for c in _dense(g, var)]
    roots = set()
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    coeffs = coeffs[k:]
    lead, const = abs(coeffs[-1]), abs(coeffs[0])
    if len(coeffs) > 1:
        for p in divisors(const):
            for q in divisors(lead):
                for s in (1, -1):
                    r = Fraction(s * p, q)
                    if r not in roots and _eval_dense(coeffs, r) == 0:
                        roots.add(r)
    return sorted(roots)


def _eval_dense(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
