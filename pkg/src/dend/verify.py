"""Auditing catalog claims against the generated operator systems.

Two independent routes are kept side by side:

* the symbolic route (:func:`verify_claim`) substitutes a claim matrix
  into the generated polynomial system and classifies the residual ideal;
* the numeric route (:func:`numeric_residuals`) evaluates the operator
  identities directly on exact rational matrices, with no polynomials.

:func:`cross_check` compares them on seeded sample points.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import DendriformAlgebra
from .catalog import FamilyClaim
from .errors import AlgebraMismatch, RejectionExhausted
from .groebner import (
    SolutionComponent,
    component_sample,
    groebner,
    solve_components,
)
from .operators import (
    AVERAGING,
    COLUMN,
    NIJENHUIS,
    PAPER,
    REYNOLDS,
    ROTA_BAXTER,
    ROW,
    STANDARD,
    Label,
    OperatorKind,
    OperatorSystem,
    build_system,
    rota_baxter,
    unknown_name,
)
from .poly import GREVLEX, Polynomial, VarTable

try:  # fast exact rationals for the numeric route
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction

log = logging.getLogger(__name__)

CONFIRMED = "CONFIRMED"
CONDITIONAL = "CONDITIONAL"
REFUTED = "REFUTED"


@dataclass(frozen=True)
class Verdict:
    status: str
    conditions: Tuple[Polynomial, ...] = ()
    residuals: Tuple[Tuple[Label, Polynomial], ...] = ()
    witness: Optional[str] = None

    def to_json(self) -> dict:
        out = {"verdict": self.status}
        if self.status == CONDITIONAL:
            out["conditions"] = [str(c) for c in self.conditions]
        if self.residuals:
            out["residuals"] = [{"label": str(lab), "poly": str(p)} for lab, p in self.residuals]
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def __str__(self):
        if self.status == CONDITIONAL:
            return f"CONDITIONAL <{', '.join(str(c) for c in self.conditions)}>"
        if self.status == REFUTED:
            return f"REFUTED ({self.witness})"
        return self.status


@lru_cache(maxsize=512)
def cached_system(alg: DendriformAlgebra, kind: OperatorKind, convention: str, rb_tail: str) -> OperatorSystem:
    return build_system(alg, kind, convention, rb_tail)


def claim_assignment(claim: FamilyClaim) -> Dict[str, Polynomial]:
    n = claim.dim
    return {unknown_name(i + 1, j + 1, n): claim.matrix[i][j] for i in range(n) for j in range(n)}


def claim_residuals(claim: FamilyClaim, alg: DendriformAlgebra, kind: OperatorKind,
                    convention: str, rb_tail: str) -> List[Tuple[Label, Polynomial]]:
    system = cached_system(alg, kind, convention, rb_tail)
    assign = claim_assignment(claim)
    out = []
    for label, p in system.equations:
        r = p.substitute(assign, claim.table)
        if r:
            out.append((label, r.primitive(GREVLEX)))
    return out


def classify(residuals: Sequence[Tuple[Label, Polynomial]]) -> Verdict:
    residuals = tuple(residuals)
    if not residuals:
        return Verdict(CONFIRMED)
    for label, r in residuals:
        if r.is_constant():
            return Verdict(REFUTED, residuals=residuals, witness=f"{label} = {r}")
    gb = groebner([r for _, r in residuals], GREVLEX)
    if gb.is_unit():
        return Verdict(REFUTED, residuals=residuals, witness="residuals have no common zero")
    return Verdict(CONDITIONAL, conditions=gb.basis, residuals=residuals)


def verify_claim(claim: FamilyClaim, alg: DendriformAlgebra, convention: str = ROW,
                 rb_tail: str = STANDARD, kind: Optional[OperatorKind] = None) -> Verdict:
    """Substitute the claim matrix into the system of its kind and classify.

    CONFIRMED: every residual vanishes identically.  REFUTED: the residuals
    have no common zero (some residual is a nonzero constant, or they
    generate the unit ideal).  CONDITIONAL otherwise, with the reduced
    basis of the residual ideal as conditions on the claim parameters.
    """
    if claim.algebra != alg.id:
        raise AlgebraMismatch(f"claim {claim.id} is about {claim.algebra}, not {alg.id}")
    kind = kind or claim.kind
    return classify(claim_residuals(claim, alg, kind, convention, rb_tail))


def weight_shift_check(claim: FamilyClaim, alg: DendriformAlgebra, target_weight,
                       convention: str = ROW, rb_tail: str = STANDARD) -> Verdict:
    """Re-verify a Rota-Baxter family against another weight."""
    return verify_claim(claim, alg, convention, rb_tail, kind=rota_baxter(Fraction(target_weight)))


# -- numeric route ------------------------------------------------------------


def numeric_constants(alg: DendriformAlgebra, point: Dict[str, Fraction]):
    """Structure constants of ``alg`` evaluated at a parameter point."""
    n = alg.dim

    def ev(tab):
        return [[[c.evaluate(point) for c in tab[i][j]] for j in range(n)] for i in range(n)]

    return ev(alg.prec), ev(alg.succ)


def numeric_residuals(prec, succ, matrix, kind: OperatorKind, convention: str = ROW,
                      rb_tail: str = STANDARD) -> List[Fraction]:
    """Residuals of the operator identities for a numeric matrix.

    ``prec``/``succ`` are ``n x n`` lists of coordinate lists and ``matrix``
    is an ``n x n`` list of rationals.  The identities are written out here
    directly rather than taken from :mod:`dend.operators`.
    """
    n = len(matrix)
    zero = _rational(0)
    cv = lambda x: _rational(x.numerator, x.denominator)  # noqa: E731
    tables = {
        "prec": [[[cv(c) for c in vec] for vec in row] for row in prec],
        "succ": [[[cv(c) for c in vec] for vec in row] for row in succ],
    }
    matrix = [[cv(x) for x in row] for row in matrix]
    weight = cv(kind.weight) if kind.weight is not None else None

    def mul(op, x, y):
        c = tables[op]
        out = [zero] * n
        for i in range(n):
            if x[i]:
                for j in range(n):
                    if y[j]:
                        xy = x[i] * y[j]
                        for k in range(n):
                            if c[i][j][k]:
                                out[k] += xy * c[i][j][k]
        return out

    def P(x):
        out = [zero] * n
        for i in range(n):
            if x[i]:
                for j in range(n):
                    entry = matrix[i][j] if convention == ROW else matrix[j][i]
                    if entry:
                        out[j] += x[i] * entry
        return out

    def add(*vs):
        return [sum(t, zero) for t in zip(*vs)]

    def sc(c, x):
        return [c * a for a in x]

    out: List[Fraction] = []
    basis = [[_rational(int(k == i)) for k in range(n)] for i in range(n)]
    for op in ("prec", "succ"):
        for u in basis:
            for v in basis:
                Pu, Pv = P(u), P(v)
                lhs = mul(op, Pu, Pv)
                if kind.name == ROTA_BAXTER:
                    tail = mul("prec" if rb_tail == PAPER else op, u, v)
                    rhs = P(add(mul(op, Pu, v), mul(op, u, Pv), sc(weight, tail)))
                    out += [a - b for a, b in zip(lhs, rhs)]
                elif kind.name == REYNOLDS:
                    rhs = P(add(mul(op, u, Pv), mul(op, Pu, v), sc(-1, mul(op, Pu, Pv))))
                    out += [a - b for a, b in zip(lhs, rhs)]
                elif kind.name == NIJENHUIS:
                    rhs = P(add(mul(op, Pu, v), mul(op, u, Pv), sc(-1, P(mul(op, u, v)))))
                    out += [a - b for a, b in zip(lhs, rhs)]
                elif kind.name == AVERAGING:
                    first = P(mul(op, u, Pv))
                    second = P(mul(op, Pu, v))
                    out += [a - b for a, b in zip(lhs, first)]
                    out += [a - b for a, b in zip(lhs, second)]
                else:
                    raise ValueError(kind)
    return [Fraction(int(x.numerator), int(x.denominator)) for x in out]


def _draw(rng: random.Random, small: bool) -> Fraction:
    if small:
        return Fraction(rng.randint(-2, 2))
    return Fraction(rng.randint(-20, 20), rng.randint(1, 7))


def parameter_points(claim: FamilyClaim, seed: int, count: int) -> List[Dict[str, Fraction]]:
    """Seeded points over the claim table; every other point uses small integers."""
    rng = random.Random(seed)
    return [{v: _draw(rng, k % 2 == 0) for v in claim.table.names} for k in range(count)]


@dataclass
class CrossCheck:
    points: int = 0
    skipped: int = 0
    disagreements: List[str] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.disagreements


def cross_check(claim: FamilyClaim, alg: DendriformAlgebra, verdict: Verdict, convention: str = ROW,
                rb_tail: str = STANDARD, kind: Optional[OperatorKind] = None,
                seed: int = 42, count: int = 200) -> CrossCheck:
    """Compare a symbolic verdict with direct evaluation at seeded points.

    CONFIRMED: all numeric residuals vanish.  CONDITIONAL: the residuals
    vanish exactly where the condition generators do.  REFUTED: some
    residual is nonzero at every point satisfying the restrictions.
    """
    kind = kind or claim.kind
    result = CrossCheck()
    for point in parameter_points(claim, seed, count):
        prec, succ = numeric_constants(alg, point)
        m = [[e.evaluate(point) for e in row] for row in claim.matrix]
        res_zero = not any(numeric_residuals(prec, succ, m, kind, convention, rb_tail))
        if verdict.status == CONFIRMED:
            ok = res_zero
        elif verdict.status == CONDITIONAL:
            ok = res_zero == (not any(c.evaluate(point) for c in verdict.conditions))
        else:
            if not all(r.evaluate(point) for r in claim.restrictions):
                result.skipped += 1
                continue
            ok = not res_zero
        result.points += 1
        if not ok:
            shown = ", ".join(f"{k}={v}" for k, v in point.items())
            result.disagreements.append(f"{verdict.status} disagrees at {shown}")
    return result


# -- completeness -----------------------------------------------------------------


def _solve_linear(rows: List[List[Fraction]], rhs: List[Fraction]):
    """Particular solution and nullspace basis of ``rows @ x = rhs``, or ``None``."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(aug)) if aug[k][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for k in range(len(aug)):
            if k != r and aug[k][c]:
                f = aug[k][c]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] and not any(row[:-1]) for row in aug):
        return None
    particular = [Fraction(0)] * ncols
    for k, c in enumerate(pivots):
        particular[c] = aug[k][-1]
    nullspace = []
    for f in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for k, c in enumerate(pivots):
            vec[c] = -aug[k][f]
        nullspace.append(vec)
    return particular, nullspace


def claim_covers(claim: FamilyClaim, point: Dict[str, Fraction]) -> bool:
    """Whether some choice of claim parameters reproduces the point's matrix.

    Algebra parameters are fixed by the point.  Restrictions must be
    satisfiable on the solution set of parameter values.
    """
    n = claim.dim
    fixed = {v: point[v] for v in claim.table.names if v not in claim.params}
    entries = [claim.matrix[i][j].substitute(fixed) if fixed else claim.matrix[i][j]
               for i in range(n) for j in range(n)]
    restrictions = [r.substitute(fixed) if fixed else r for r in claim.restrictions]
    target = [point[unknown_name(i + 1, j + 1, n)] for i in range(n) for j in range(n)]
    if not claim.is_affine():
        log.warning("claim %s is not affine in its parameters; using grid membership", claim.id)
        return _grid_covers(claim, entries, restrictions, target)
    params = list(claim.params)
    idx = [claim.table.index(p) for p in params]
    rows, rhs = [], []
    for e, value in zip(entries, target):
        row = []
        for i in idx:
            unit = [0] * len(claim.table)
            unit[i] = 1
            row.append(e.terms.get(tuple(unit), Fraction(0)))
        rows.append(row)
        rhs.append(value - e.constant_term())
    solved = _solve_linear(rows, rhs)
    if solved is None:
        return False
    particular, nullspace = solved
    if not restrictions:
        return True
    if not nullspace:
        values = dict(zip(params, particular))
        return all(r.evaluate(values) for r in restrictions)
    # restrictions on the affine solution set: nonzero polynomials in the free directions
    free_table = VarTable([f"_s{k}" for k in range(len(nullspace))])
    assign = {}
    for k, p in enumerate(params):
        expr = free_table.const(particular[k])
        for s, vec in enumerate(nullspace):
            if vec[k]:
                expr = expr + free_table.var(f"_s{s}").scale(vec[k])
        assign[p] = expr
    for v in claim.table.names:
        if v not in assign:
            assign[v] = free_table.const(fixed.get(v, 0))
    return all(r.substitute(assign, free_table) for r in restrictions)


def _grid_covers(claim, entries, restrictions, target) -> bool:
    params = list(claim.params)
    grid = [Fraction(k) for k in range(-3, 4)]
    for values in cartesian(grid, repeat=len(params)):
        pt = dict(zip(params, values))
        if all(e.evaluate(pt) == t for e, t in zip(entries, target)) and all(r.evaluate(pt) for r in restrictions):
            return True
    return False


@dataclass
class CompletenessSummary:
    algebra: str
    kind: OperatorKind
    convention: str
    rb_tail: str
    components: List[SolutionComponent]
    sampled: int
    missed_points: List[Dict[str, Fraction]]
    unsampled: List[int]
    claim_generic: Dict[str, bool]

    @property
    def status(self) -> str:
        if self.missed_points:
            return "INCOMPLETE"
        if self.unsampled:
            return "UNDETERMINED"
        return "COMPLETE"

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "kind": self.kind.name,
            "weight": None if self.kind.weight is None else str(self.kind.weight),
            "convention": self.convention,
            "rb_tail": self.rb_tail,
            "status": self.status,
            "components": [c.describe() for c in self.components],
            "sampled_points": self.sampled,
            "unsampled_components": list(self.unsampled),
            "missed_points": [{k: str(v) for k, v in p.items()} for p in self.missed_points],
            "claim_generic_point_ok": dict(self.claim_generic),
        }


def completeness_check(alg: DendriformAlgebra, kind: OperatorKind, claims: Sequence[FamilyClaim],
                       convention: str = ROW, rb_tail: str = STANDARD, seed: int = 42,
                       samples: int = 50) -> CompletenessSummary:
    """Sample the solved variety and look for operators no claim covers."""
    system = cached_system(alg, kind, convention, rb_tail)
    components = solve_components(system.polynomials, system.unknowns, system.parameters)
    names = list(system.table.names)
    missed = []
    unsampled = []
    sampled = 0
    for ci, comp in enumerate(components):
        try:
            points = component_sample(comp, seed + 7919 * ci, samples, names)
        except RejectionExhausted:
            unsampled.append(ci)
            continue
        for pt in points:
            sampled += 1
            if not any(claim_covers(c, pt) for c in claims):
                missed.append(pt)
    generic = {}
    for c in claims:
        pt = parameter_points(c, seed, 2)[1]
        prec, succ = numeric_constants(alg, pt)
        m = [[e.evaluate(pt) for e in row] for row in c.matrix]
        generic[c.id] = not any(numeric_residuals(prec, succ, m, kind, convention, rb_tail))
    return CompletenessSummary(alg.id, kind, convention, rb_tail, components, sampled,
                               missed, unsampled, generic)
