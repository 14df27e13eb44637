"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` is a mapping from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients, tied to a :class:`VarTable` that
names each exponent slot.  Polynomials are immutable and always canonical,
so structural equality is mathematical equality.

Monomial orders are not part of a polynomial; every order-dependent
operation takes a :class:`MonomialOrder` argument.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .errors import (
    ExponentOverflow,
    MissingAssignment,
    NegativeExponent,
    PolySyntaxError,
    UnknownVariable,
    VarTableMismatch,
    ZeroPolynomial,
)

__all__ = [
    "UNKNOWN",
    "PARAMETER",
    "MAX_EXPONENT",
    "VarTable",
    "MonomialOrder",
    "LEX",
    "GREVLEX",
    "Polynomial",
    "parse_poly",
    "poly_arith",
    "poly_substitute",
    "poly_eval",
    "reduce_modulo",
    "s_polynomial",
]

UNKNOWN = "unknown"
PARAMETER = "parameter"
MAX_EXPONENT = 2**16

Monomial = Tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class VarTable:
    """Ordered, immutable table of variable names.

    Each variable is tagged ``UNKNOWN`` (operator matrix entries) or
    ``PARAMETER`` (algebra parameters, claim parameters, auxiliaries).
    Two tables are interchangeable iff their names and tags agree.
    """

    __slots__ = ("names", "kinds", "_index", "_hash")

    def __init__(self, names: Iterable[str], kinds: Optional[Iterable[str]] = None):
        names = tuple(names)
        kinds = tuple(kinds) if kinds is not None else (PARAMETER,) * len(names)
        if len(kinds) != len(names):
            raise ValueError("names and kinds differ in length")
        index = {}
        for i, (name, kind) in enumerate(zip(names, kinds)):
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if kind not in (UNKNOWN, PARAMETER):
                raise ValueError(f"invalid variable kind {kind!r}")
            if name in index:
                raise ValueError(f"duplicate variable name {name!r}")
            index[name] = i
        self.names = names
        self.kinds = kinds
        self._index = index
        self._hash = hash((names, kinds))

    @classmethod
    def of(cls, unknowns: Sequence[str] = (), parameters: Sequence[str] = ()) -> "VarTable":
        return cls(
            list(unknowns) + list(parameters),
            [UNKNOWN] * len(unknowns) + [PARAMETER] * len(parameters),
        )

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(name) from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, VarTable):
            return NotImplemented
        return self._hash == other._hash and self.names == other.names and self.kinds == other.kinds

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"VarTable({list(self.names)!r})"

    @property
    def unknowns(self) -> Tuple[str, ...]:
        return tuple(n for n, k in zip(self.names, self.kinds) if k == UNKNOWN)

    @property
    def parameters(self) -> Tuple[str, ...]:
        return tuple(n for n, k in zip(self.names, self.kinds) if k == PARAMETER)

    def extend(self, names: Iterable[str], kind: str = PARAMETER) -> "VarTable":
        names = list(names)
        return VarTable(self.names + tuple(names), self.kinds + (kind,) * len(names))

    def fresh_name(self, stem: str = "_t") -> str:
        """Return a variable name not present in the table."""
        name, k = stem, 0
        while name in self._index:
            k += 1
            name = f"{stem}{k}"
        return name

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        exps = [0] * len(self.names)
        exps[i] = 1
        return Polynomial._make(self, {tuple(exps): Fraction(1)})

    def const(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial._make(self, {})
        return Polynomial._make(self, {(0,) * len(self.names): c})

    def zero(self) -> "Polynomial":
        return Polynomial._make(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)


@dataclass(frozen=True)
class MonomialOrder:
    """LEX or GREVLEX with an optional variable priority permutation.

    ``priority`` lists variable indices from highest to lowest; ``None``
    means table order (first variable is largest).
    """

    kind: str = "grevlex"
    priority: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.priority is not None:
            object.__setattr__(self, "priority", tuple(self.priority))

    @classmethod
    def by_names(cls, kind: str, table: VarTable, names: Sequence[str]) -> "MonomialOrder":
        """Order whose priority starts with ``names``; remaining variables follow in table order."""
        first = [table.index(n) for n in names]
        rest = [i for i in range(len(table)) if i not in set(first)]
        return cls(kind, tuple(first + rest))

    def key(self, m: Monomial):
        p = self.priority
        if p is not None:
            m = tuple(m[i] for i in p)
        if self.kind == "lex":
            return m
        return (sum(m), tuple(-e for e in reversed(m)))

    def __repr__(self) -> str:
        if self.priority is None:
            return self.kind.upper()
        return f"{self.kind.upper()}{list(self.priority)}"


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _check_exponents(m: Monomial) -> Monomial:
    if m and max(m) > MAX_EXPONENT:
        raise ExponentOverflow(f"exponent exceeds {MAX_EXPONENT}")
    return m


def _coerce_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("table", "terms", "_hash", "_lead")

    def __init__(self, table: VarTable, terms: Optional[Mapping[Monomial, object]] = None):
        clean: Dict[Monomial, Fraction] = {}
        n = len(table)
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != n:
                raise VarTableMismatch(f"monomial {m} does not fit a table of {n} variables")
            if any(e < 0 for e in m):
                raise NegativeExponent(f"negative exponent in {m}")
            _check_exponents(m)
            c = _coerce_fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        self.table = table
        self.terms = clean
        self._hash = None
        self._lead = None

    @classmethod
    def _make(cls, table: VarTable, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.table = table
        p.terms = terms
        p._hash = None
        p._lead = None
        return p

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial; raises ``ValueError`` otherwise."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.table), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree(self, var: str) -> int:
        i = self.table.index(var)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def variables(self) -> Tuple[str, ...]:
        """Names of variables that actually occur, in table order."""
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(self.table.names[i] for i in sorted(used))

    def is_homogeneous(self, variables: Optional[Sequence[str]] = None) -> bool:
        idx = range(len(self.table)) if variables is None else [self.table.index(v) for v in variables]
        degs = {sum(m[i] for i in idx) for m in self.terms}
        return len(degs) <= 1

    # -- order-dependent queries --------------------------------------

    def _leading(self, order: MonomialOrder) -> Tuple[Monomial, Fraction]:
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        cached = self._lead
        if cached is not None and cached[0] == order:
            return cached[1]
        m = max(self.terms, key=order.key)
        lead = (m, self.terms[m])
        self._lead = (order, lead)
        return lead

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self._leading(order)[0]

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self._leading(order)[1]

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return Polynomial._make(self.table, {m: c / lc for m, c in self.terms.items()})

    def primitive(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, c.numerator * (den // c.denominator))
        scale = Fraction(den, num)
        if self.leading_coefficient(order) < 0:
            scale = -scale
        if scale == 1:
            return self
        return Polynomial._make(self.table, {m: c * scale for m, c in self.terms.items()})

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.table != self.table:
                raise VarTableMismatch(f"{self.table!r} vs {other.table!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.table.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m)
            if v is None:
                terms[m] = c
            else:
                v += c
                if v:
                    terms[m] = v
                else:
                    del terms[m]
        return Polynomial._make(self.table, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = terms.get(m)
                if v is None:
                    terms[m] = c1 * c2
                else:
                    v += c1 * c2
                    if v:
                        terms[m] = v
                    else:
                        del terms[m]
        for m in terms:
            _check_exponents(m)
            break
        return Polynomial._make(self.table, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = _coerce_fraction(c)
        if not c:
            return self.table.zero()
        return Polynomial._make(self.table, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: Fraction) -> "Polynomial":
        return Polynomial._make(self.table, {_mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise NegativeExponent("negative power of a polynomial")
        if k > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent exceeds {MAX_EXPONENT}")
        result = self.table.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.table == other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    # -- structure -----------------------------------------------------

    def coefficients_in(self, var: str) -> Dict[int, "Polynomial"]:
        """Split as ``sum(coeff_k * var**k)``; coefficients do not involve ``var``."""
        i = self.table.index(var)
        parts: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            k = m[i]
            mm = m[:i] + (0,) + m[i + 1 :]
            parts.setdefault(k, {})[mm] = c
        return {k: Polynomial._make(self.table, t) for k, t in parts.items()}

    def to_table(self, table: VarTable) -> "Polynomial":
        """Re-express over another table, matching variables by name."""
        if table == self.table:
            return self
        pos = [table.index(n) for n in self.table.names]
        n = len(table)
        terms = {}
        for m, c in self.terms.items():
            mm = [0] * n
            for i, e in enumerate(m):
                if e:
                    mm[pos[i]] = e
            terms[tuple(mm)] = c
        return Polynomial._make(table, terms)

    def drop_to(self, table: VarTable) -> "Polynomial":
        """Move into a table that lacks some unused variables."""
        used = self.variables()
        for name in used:
            table.index(name)
        pos = {self.table.index(n): table.index(n) for n in table.names if n in self.table}
        n = len(table)
        terms = {}
        for m, c in self.terms.items():
            mm = [0] * n
            for i, e in enumerate(m):
                if e:
                    mm[pos[i]] = e
            terms[tuple(mm)] = c
        return Polynomial._make(table, terms)

    def substitute(self, assignment: Mapping[str, object], target: Optional[VarTable] = None) -> "Polynomial":
        return poly_substitute(self, assignment, target)

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        return poly_eval(self, point)

    def homogenized_substitute(self, var: str, num: "Polynomial", den: "Polynomial", k: Optional[int] = None) -> "Polynomial":
        """``den**k * self(var -> num/den)`` with ``k >= deg_var(self)``; stays polynomial."""
        parts = self.coefficients_in(var)
        if k is None:
            k = max(parts) if parts else 0
        result = self.table.zero()
        num_pows = [self.table.one()]
        den_pows = [self.table.one()]
        for _ in range(k):
            num_pows.append(num_pows[-1] * num)
            den_pows.append(den_pows[-1] * den)
        for e, coeff in parts.items():
            result = result + coeff * num_pows[e] * den_pows[k - e]
        return result

    # -- printing ------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for idx, (m, c) in enumerate(self.sorted_terms(GREVLEX)):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.table.names, m) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


# -- parsing -----------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, table: VarTable):
        self.table = table
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        tok = self.take()
        if tok[0] != "op" or tok[1] != ch:
            raise PolySyntaxError(f"expected {ch!r}", tok[2])

    def parse(self) -> Polynomial:
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return result

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                result = result + rhs if tok[1] == "+" else result - rhs
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.base()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] == "op" and tok[1] == "-":
                raise NegativeExponent(f"negative exponent at position {tok[2]}")
            if tok[0] != "num":
                raise PolySyntaxError("expected a natural-number exponent", tok[2])
            k = int(tok[1])
            if k > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {k} exceeds {MAX_EXPONENT}")
            return base ** k
        return base

    def base(self) -> Polynomial:
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            num = int(value)
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den_tok = self.take()
                if den_tok[0] != "num":
                    raise PolySyntaxError("expected a denominator", den_tok[2])
                den = int(den_tok[1])
                if den == 0:
                    raise PolySyntaxError("zero denominator", den_tok[2])
                return self.table.const(Fraction(num, den))
            return self.table.const(num)
        if kind == "name":
            return self.table.var(value)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            raise PolySyntaxError("unexpected end of input", pos)
        raise PolySyntaxError(f"unexpected {value!r}", pos)


def parse_poly(text: str, table: VarTable) -> Polynomial:
    """Parse polynomial text such as ``"alpha*a22 + 1/2"``.

    Grammar: sums and differences of products of factors; a factor is an
    integer, a rational ``p/q``, a variable or a parenthesised expression,
    optionally raised to a natural power with ``^``.  Multiplication must
    be written with ``*``.  A leading sign is accepted.
    """
    return _Parser(text, table).parse()


# -- functional API ------------------------------------------------------


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if p.table != q.table:
        raise VarTableMismatch(f"{p.table!r} vs {q.table!r}")
    op = op.upper()
    if op == "ADD":
        return p + q
    if op == "SUB":
        return p - q
    if op == "MUL":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def poly_substitute(
    p: Polynomial, assignment: Mapping[str, object], target: Optional[VarTable] = None
) -> Polynomial:
    """Simultaneously replace variables by polynomials (or numbers).

    Without ``target`` the images must live in ``p``'s table.  With a
    ``target`` table the result is expressed there: images must live in
    ``target`` and unassigned variables are carried over by name.
    """
    out_table = target if target is not None else p.table
    images = []
    for i, name in enumerate(p.table.names):
        if name in assignment:
            img = assignment[name]
            if isinstance(img, Polynomial):
                if img.table != out_table:
                    raise VarTableMismatch(f"image of {name!r} is over {img.table!r}")
            else:
                img = out_table.const(_coerce_fraction(img))
            images.append(img)
        else:
            images.append(None)
    for name in assignment:
        p.table.index(name)
    if target is None and all(img is None for img in images):
        return p

    pos = [None if img is not None else out_table.index(name)
           for name, img in zip(p.table.names, images)]
    n_out = len(out_table)
    power_cache: Dict[Tuple[int, int], Polynomial] = {}

    def power(i, e):
        key = (i, e)
        if key not in power_cache:
            power_cache[key] = images[i] ** e
        return power_cache[key]

    result_terms: Dict[Monomial, Fraction] = {}
    result = out_table.zero()
    for m, c in p.terms.items():
        kept = [0] * n_out
        factor = None
        for i, e in enumerate(m):
            if not e:
                continue
            if images[i] is None:
                kept[pos[i]] = e
            else:
                f = power(i, e)
                factor = f if factor is None else factor * f
        if factor is None:
            k = tuple(kept)
            v = result_terms.get(k, 0) + c
            if v:
                result_terms[k] = v
            else:
                result_terms.pop(k, None)
        else:
            result = result + factor.mul_term(tuple(kept), c)
    return result + Polynomial._make(out_table, result_terms)


def poly_eval(p: Polynomial, point: Mapping[str, object]) -> Fraction:
    """Exact value of ``p`` at a point given as ``{name: number}``."""
    values = []
    for i, name in enumerate(p.table.names):
        values.append(point.get(name))
    total = Fraction(0)
    for m, c in p.terms.items():
        v = c
        for i, e in enumerate(m):
            if e:
                x = values[i]
                if x is None:
                    raise MissingAssignment(p.table.names[i])
                v *= _coerce_fraction(x) ** e
        total += v
    return total


def reduce_modulo(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Fully reduced remainder of ``p`` on multivariate division by ``basis``."""
    divisors = []
    for g in basis:
        if g.table != p.table:
            raise VarTableMismatch(f"{g.table!r} vs {p.table!r}")
        if g.terms:
            lm, lc = g._leading(order)
            divisors.append((lm, lc, g.terms))
    key = order.key
    work = dict(p.terms)
    rem: Dict[Monomial, Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, lc, gterms in divisors:
            if _mono_divides(lm, m):
                q = _mono_div(m, lm)
                f = c / lc
                for gm, gc in gterms.items():
                    mm = _mono_mul(gm, q)
                    v = work.get(mm, 0) - f * gc
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[m] = c
            del work[m]
    return Polynomial._make(p.table, rem)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    if f.table != g.table:
        raise VarTableMismatch(f"{f.table!r} vs {g.table!r}")
    if not f.terms or not g.terms:
        raise ZeroPolynomial("S-polynomial of a zero polynomial")
    fm, fc = f._leading(order)
    gm, gc = g._leading(order)
    lcm = _mono_lcm(fm, gm)
    return f.mul_term(_mono_div(lcm, fm), 1 / fc) - g.mul_term(_mono_div(lcm, gm), 1 / gc)
