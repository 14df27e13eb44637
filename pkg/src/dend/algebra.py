"""Dendriform algebras given by structure constants, and their axioms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Mapping, Sequence, Tuple

from .errors import DimensionMismatch
from .poly import Polynomial, VarTable

PREC = "prec"
SUCC = "succ"

Vector = Tuple[Polynomial, ...]


@dataclass(frozen=True)
class DendriformAlgebra:
    """Two bilinear products on a basis ``e_1 .. e_n``.

    ``prec[i][j]`` is the coordinate vector of ``e_{i+1} ≺ e_{j+1}``;
    indices are stored 0-based but every public label is 1-based.
    Coefficients are polynomials in the algebra's parameters (``table``).
    """

    id: str
    dim: int
    prec: Tuple[Tuple[Vector, ...], ...]
    succ: Tuple[Tuple[Vector, ...], ...]
    table: VarTable

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch("dimension must be positive")
        for name in (PREC, SUCC):
            tab = getattr(self, name)
            if len(tab) != n or any(len(row) != n for row in tab):
                raise DimensionMismatch(f"{self.id}: {name} table is not {n}x{n}")
            for row in tab:
                for vec in row:
                    if len(vec) != n:
                        raise DimensionMismatch(f"{self.id}: {name} vector has length {len(vec)}")
                    for c in vec:
                        if c.table != self.table:
                            raise DimensionMismatch(f"{self.id}: coefficient over a foreign table")

    @classmethod
    def from_products(cls, id: str, dim: int, prec: Mapping, succ: Mapping,
                      table: VarTable = VarTable(())) -> "DendriformAlgebra":
        """Build from sparse 1-based products ``{(i, j): [c_1, ..., c_n]}``.

        Coefficients may be numbers, polynomial strings or polynomials.
        """
        def build(products):
            zero = table.zero()
            tab = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
            for (i, j), coeffs in products.items():
                if not (1 <= i <= dim and 1 <= j <= dim) or len(coeffs) != dim:
                    raise DimensionMismatch(f"{id}: bad product entry ({i}, {j})")
                tab[i - 1][j - 1] = [_coerce(c, table) for c in coeffs]
            return tuple(tuple(tuple(v) for v in row) for row in tab)

        return cls(id, dim, build(prec), build(succ), table)

    def constants(self, product: str):
        if product == PREC:
            return self.prec
        if product == SUCC:
            return self.succ
        raise ValueError(f"unknown product {product!r}")

    def basis_vector(self, i: int, table: VarTable = None) -> Vector:
        """``e_i`` (1-based) as a coordinate vector."""
        table = table or self.table
        return tuple(table.one() if k == i - 1 else table.zero() for k in range(self.dim))

    def lifted(self, table: VarTable) -> "DendriformAlgebra":
        """The same algebra with coefficients moved into a larger table."""
        if table == self.table:
            return self

        def lift(tab):
            return tuple(tuple(tuple(c.to_table(table) for c in vec) for vec in row) for row in tab)

        return DendriformAlgebra(self.id, self.dim, lift(self.prec), lift(self.succ), table)

    def is_zero(self) -> bool:
        return not any(c for tab in (self.prec, self.succ) for row in tab for vec in row for c in vec)


def _coerce(c, table: VarTable) -> Polynomial:
    if isinstance(c, Polynomial):
        return c.to_table(table)
    if isinstance(c, str):
        return table.parse(c)
    return table.const(c)


def bilinear_apply(alg: DendriformAlgebra, product: str, x: Sequence[Polynomial],
                   y: Sequence[Polynomial]) -> Vector:
    """``x ∘ y`` for the chosen product, by bilinear extension."""
    n = alg.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"vectors of length {len(x)}, {len(y)} in dimension {n}")
    consts = alg.constants(product)
    table = x[0].table if n else alg.table
    out = [table.zero()] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            vec = consts[i][j]
            if not any(vec):
                continue
            xy = x[i] * y[j]
            for k in range(n):
                if vec[k]:
                    c = vec[k] if vec[k].table == table else vec[k].to_table(table)
                    out[k] = out[k] + xy * c
    return tuple(out)


def vec_add(x: Sequence[Polynomial], y: Sequence[Polynomial]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Sequence[Polynomial], y: Sequence[Polynomial]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x: Sequence[Polynomial]) -> Vector:
    return tuple(a * c for a in x)


@dataclass(frozen=True)
class AxiomViolation:
    identity: str  # EQ1, EQ2, EQ3 or ASSOC
    triple: Tuple[int, int, int]
    coordinate: int
    residual: Polynomial

    def __str__(self):
        i, j, k = self.triple
        return f"{self.identity} at (e{i}, e{j}, e{k}), coordinate e{self.coordinate}: {self.residual}"


def _violations(tag, triple, lhs, rhs) -> List[AxiomViolation]:
    out = []
    for k, r in enumerate(vec_sub(lhs, rhs), start=1):
        if r:
            out.append(AxiomViolation(tag, triple, k, r))
    return out


def check_axioms(alg: DendriformAlgebra) -> List[AxiomViolation]:
    """All nonzero residuals of the three dendriform identities on basis triples.

    EQ1: (u≺v)≺w = u≺(v≺w) + u≺(v≻w)
    EQ2: (u≻v)≺w = u≻(v≺w)
    EQ3: u≻(v≻w) = (u≺v)≻w + (u≻v)≻w
    """
    n = alg.dim
    e = [alg.basis_vector(i) for i in range(1, n + 1)]

    def pr(x, y):
        return bilinear_apply(alg, PREC, x, y)

    def su(x, y):
        return bilinear_apply(alg, SUCC, x, y)

    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                u, v, w = e[i], e[j], e[k]
                t = (i + 1, j + 1, k + 1)
                out += _violations("EQ1", t, pr(pr(u, v), w), vec_add(pr(u, pr(v, w)), pr(u, su(v, w))))
                out += _violations("EQ2", t, pr(su(u, v), w), su(u, pr(v, w)))
                out += _violations("EQ3", t, su(u, su(v, w)), vec_add(su(pr(u, v), w), su(su(u, v), w)))
    return out


def sum_associativity_check(alg: DendriformAlgebra) -> List[AxiomViolation]:
    """Violations of associativity for ``u * v = u ≺ v + u ≻ v``."""
    n = alg.dim
    e = [alg.basis_vector(i) for i in range(1, n + 1)]

    def star(x, y):
        return vec_add(bilinear_apply(alg, PREC, x, y), bilinear_apply(alg, SUCC, x, y))

    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                u, v, w = e[i], e[j], e[k]
                out += _violations("ASSOC", (i + 1, j + 1, k + 1), star(star(u, v), w), star(u, star(v, w)))
    return out
