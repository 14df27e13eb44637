"""Operator matrices and the polynomial systems that define each operator kind.

Each operator kind is described by a list of identities, one per product
(two per product for averaging operators).  An identity is stored as the
terms of its left side and its right side; every term is a rational
coefficient times an expression tree built from ``u``, ``v``, the operator
``P`` and the two products.  :func:`build_system` evaluates these trees on
all pairs of basis vectors with ``P`` replaced by a symbolic matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .algebra import PREC, SUCC, DendriformAlgebra, bilinear_apply
from .errors import DimensionMismatch
from .poly import GREVLEX, PARAMETER, UNKNOWN, Polynomial, VarTable

ROW = "row"
COLUMN = "col"
CONVENTIONS = (ROW, COLUMN)

STANDARD = "standard"
PAPER = "paper"
RB_TAILS = (STANDARD, PAPER)

ROTA_BAXTER = "rota_baxter"
REYNOLDS = "reynolds"
NIJENHUIS = "nijenhuis"
AVERAGING = "averaging"
KIND_NAMES = (ROTA_BAXTER, REYNOLDS, NIJENHUIS, AVERAGING)

_SYMBOL = {PREC: "≺", SUCC: "≻"}


@dataclass(frozen=True)
class OperatorKind:
    name: str
    weight: Optional[Fraction] = None

    def __post_init__(self):
        if self.name not in KIND_NAMES:
            raise ValueError(f"unknown operator kind {self.name!r}")
        if self.name == ROTA_BAXTER:
            object.__setattr__(self, "weight", Fraction(self.weight or 0))
        elif self.weight is not None:
            raise ValueError(f"{self.name} operators have no weight")

    @property
    def uses_tail(self) -> bool:
        """Whether the RB tail convention changes the system."""
        return self.name == ROTA_BAXTER and self.weight != 0

    def __str__(self):
        if self.name == ROTA_BAXTER:
            return f"rota_baxter(weight={self.weight})"
        return self.name


def rota_baxter(weight=0) -> OperatorKind:
    return OperatorKind(ROTA_BAXTER, Fraction(weight))


REYNOLDS_KIND = OperatorKind(REYNOLDS)
NIJENHUIS_KIND = OperatorKind(NIJENHUIS)
AVERAGING_KIND = OperatorKind(AVERAGING)


def parse_kind(name: str, weight=None) -> OperatorKind:
    if name == ROTA_BAXTER:
        return rota_baxter(Fraction(weight) if weight is not None else 0)
    return OperatorKind(name)


# -- identity recipes ---------------------------------------------------------

U = ("u",)
V = ("v",)


def P(e):
    return ("P", e)


def prod(op, a, b):
    return (op, a, b)


@dataclass(frozen=True)
class IdentityDescriptor:
    """``sum(lhs) = sum(rhs)``; each side is a tuple of (coefficient, expression)."""

    tag: str
    product: str
    lhs: Tuple[Tuple[Fraction, tuple], ...]
    rhs: Tuple[Tuple[Fraction, tuple], ...]

    def residual_terms(self):
        return tuple(self.lhs) + tuple((-c, e) for c, e in self.rhs)

    def render(self) -> str:
        return f"{_render_side(self.lhs)} = {_render_side(self.rhs)}"


def render_expr(e) -> str:
    head = e[0]
    if head in ("u", "v"):
        return head
    if head == "P":
        return f"P({render_expr(e[1])})"
    return f"{render_expr(e[1])} {_SYMBOL[head]} {render_expr(e[2])}"


def _render_side(terms) -> str:
    out = []
    for idx, (c, e) in enumerate(terms):
        body = render_expr(e)
        mag = abs(c)
        if mag != 1:
            body = f"{mag}·{body}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out) if out else "0"


def kind_identities(kind: OperatorKind, rb_tail: str = STANDARD) -> List[IdentityDescriptor]:
    """Defining identities of ``kind`` as symbolic recipes."""
    if rb_tail not in RB_TAILS:
        raise ValueError(f"unknown RB tail {rb_tail!r}")
    one = Fraction(1)
    out = []
    for op in (PREC, SUCC):
        lhs = ((one, prod(op, P(U), P(V))),)
        if kind.name == ROTA_BAXTER:
            rhs = [(one, P(prod(op, P(U), V))), (one, P(prod(op, U, P(V))))]
            if kind.weight:
                tail_op = PREC if rb_tail == PAPER else op
                rhs.append((kind.weight, P(prod(tail_op, U, V))))
            out.append(IdentityDescriptor(op, op, lhs, tuple(rhs)))
        elif kind.name == REYNOLDS:
            rhs = ((one, P(prod(op, U, P(V)))), (one, P(prod(op, P(U), V))),
                   (-one, P(prod(op, P(U), P(V)))))
            out.append(IdentityDescriptor(op, op, lhs, rhs))
        elif kind.name == NIJENHUIS:
            rhs = ((one, P(prod(op, P(U), V))), (one, P(prod(op, U, P(V)))),
                   (-one, P(P(prod(op, U, V)))))
            out.append(IdentityDescriptor(op, op, lhs, rhs))
        else:
            out.append(IdentityDescriptor(f"{op}.1", op, lhs, ((one, P(prod(op, U, P(V)))),)))
            out.append(IdentityDescriptor(f"{op}.2", op, lhs, ((one, P(prod(op, P(U), V))),)))
    return out


# -- matrices -------------------------------------------------------------------


def unknown_name(i: int, j: int, n: int) -> str:
    """Name of matrix entry (i, j), 1-based: ``a12`` or ``a_10_3`` when n > 9."""
    return f"a{i}{j}" if n <= 9 else f"a_{i}_{j}"


def unknown_names(n: int) -> List[str]:
    return [unknown_name(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1)]


def system_table(alg: DendriformAlgebra) -> VarTable:
    names = unknown_names(alg.dim)
    params = list(alg.table.names)
    return VarTable(names + params, [UNKNOWN] * len(names) + [PARAMETER] * len(params))


def symbolic_matrix(table: VarTable, n: int):
    return tuple(tuple(table.var(unknown_name(i, j, n)) for j in range(1, n + 1)) for i in range(1, n + 1))


def transpose(m):
    n = len(m)
    return tuple(tuple(m[j][i] for j in range(n)) for i in range(n))


def apply_matrix(m, convention: str, x: Sequence[Polynomial]):
    """Image of ``x`` under the operator with matrix ``m``.

    ROW:    P(e_i) = sum_j m[i][j] e_j
    COLUMN: P(e_i) = sum_j m[j][i] e_j
    """
    n = len(m)
    if len(x) != n or any(len(row) != n for row in m):
        raise DimensionMismatch("matrix and vector shapes disagree")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    total = [x[0].table.zero()] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            entry = m[i][j] if convention == ROW else m[j][i]
            if entry:
                total[j] = total[j] + x[i] * entry
    return tuple(total)


# -- systems ----------------------------------------------------------------------


class Label(NamedTuple):
    identity: str
    pair: Tuple[int, int]
    coordinate: int

    def __str__(self):
        return f"{self.identity}(e{self.pair[0]},e{self.pair[1]})[e{self.coordinate}]"


@dataclass(frozen=True)
class OperatorSystem:
    algebra_id: str
    kind: OperatorKind
    convention: str
    rb_tail: str
    table: VarTable
    equations: Tuple[Tuple[Label, Polynomial], ...]

    @property
    def polynomials(self) -> List[Polynomial]:
        return [p for _, p in self.equations]

    @property
    def unknowns(self) -> Tuple[str, ...]:
        return self.table.unknowns

    @property
    def parameters(self) -> Tuple[str, ...]:
        return self.table.parameters

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra_id,
            "kind": self.kind.name,
            "weight": None if self.kind.weight is None else str(self.kind.weight),
            "convention": self.convention,
            "rb_tail": self.rb_tail,
            "equations": [{"label": str(lab), "poly": str(p)} for lab, p in self.equations],
        }


def evaluate_expr(e, u, v, alg: DendriformAlgebra, m, convention: str):
    head = e[0]
    if head == "u":
        return u
    if head == "v":
        return v
    if head == "P":
        return apply_matrix(m, convention, evaluate_expr(e[1], u, v, alg, m, convention))
    a = evaluate_expr(e[1], u, v, alg, m, convention)
    b = evaluate_expr(e[2], u, v, alg, m, convention)
    return bilinear_apply(alg, head, a, b)


def identity_residuals(desc: IdentityDescriptor, u, v, alg: DendriformAlgebra, m, convention: str):
    n = alg.dim
    table = u[0].table
    total = [table.zero()] * n
    for c, e in desc.residual_terms():
        vec = evaluate_expr(e, u, v, alg, m, convention)
        total = [t + x.scale(c) for t, x in zip(total, vec)]
    return total


def build_system(alg: DendriformAlgebra, kind: OperatorKind, convention: str = ROW,
                 rb_tail: str = STANDARD, matrix=None) -> OperatorSystem:
    """Polynomial system whose zeros are the operators of ``kind`` on ``alg``.

    One polynomial per identity, ordered basis pair and coordinate, each
    the left side minus the right side made primitive with a positive
    leading coefficient.  ``matrix`` overrides the symbolic matrix (entries
    must live over :func:`system_table`).
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    table = system_table(alg)
    lifted = alg.lifted(table)
    n = alg.dim
    m = matrix if matrix is not None else symbolic_matrix(table, n)
    if len(m) != n or any(len(row) != n for row in m):
        raise DimensionMismatch(f"{alg.id}: operator matrix must be {n}x{n}")
    descriptors = kind_identities(kind, rb_tail)
    basis = [lifted.basis_vector(i, table) for i in range(1, n + 1)]
    equations = []
    for desc in descriptors:
        for i in range(n):
            for j in range(n):
                res = identity_residuals(desc, basis[i], basis[j], lifted, m, convention)
                for k, r in enumerate(res, start=1):
                    equations.append((Label(desc.tag, (i + 1, j + 1), k), r.primitive(GREVLEX)))
    return OperatorSystem(alg.id, kind, convention, rb_tail, table, tuple(equations))
