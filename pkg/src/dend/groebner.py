"""Gröbner bases, ideal/radical membership and a case-splitting solver."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import RejectionExhausted, ResourceLimit, VarTableMismatch
from .poly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    VarTable,
    _mono_div,
    _mono_divides,
    _mono_lcm,
    reduce_modulo,
    s_polynomial,
)

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "buchberger",
    "groebner",
    "ideal_member",
    "radical_member",
    "saturate",
    "SolutionComponent",
    "solve_components",
    "component_sample",
    "component_contains",
]

DEFAULT_MAX_PAIRS = 100_000
DEFAULT_MAX_DEPTH = 24


@dataclass(frozen=True)
class Ideal:
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        gens = tuple(g for g in self.generators if g)
        tables = {g.table for g in gens}
        if len(tables) > 1:
            raise VarTableMismatch("ideal generators live over different tables")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class GroebnerBasis:
    basis: Tuple[Polynomial, ...]
    order: MonomialOrder

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def reduce(self, p: Polynomial) -> Polynomial:
        if not self.basis:
            return p
        return reduce_modulo(p, self.basis, self.order)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def groebner(polys: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
             max_pairs: int = DEFAULT_MAX_PAIRS) -> GroebnerBasis:
    return buchberger(Ideal(tuple(polys), order), max_pairs=max_pairs)


def buchberger(ideal: Ideal, max_pairs: int = DEFAULT_MAX_PAIRS) -> GroebnerBasis:
    """Reduced, monic Gröbner basis of ``ideal`` under ``ideal.order``.

    Pairs are processed lowest lcm degree first, and pairs with coprime
    leading monomials are skipped.  The result is sorted by descending
    leading monomial, so it is unique for a fixed order.
    """
    order = ideal.order
    key = order.key
    gens = [g.monic(order) for g in ideal.generators]
    if not gens:
        return GroebnerBasis((), order)
    for g in gens:
        if g.is_constant():
            return GroebnerBasis((g.table.one(),), order)

    basis: List[Polynomial] = []
    leads: List[Tuple[int, ...]] = []
    pairs: set = set()

    def add(h: Polynomial):
        idx = len(basis)
        basis.append(h)
        leads.append(h.leading_monomial(order))
        for j in range(idx):
            pairs.add((j, idx))

    for g in gens:
        h = reduce_modulo(g, basis, order) if basis else g
        if h:
            if h.is_constant():
                return GroebnerBasis((h.table.one(),), order)
            add(h.monic(order))

    processed = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(_mono_lcm(leads[ij[0]], leads[ij[1]])),
                                            key(_mono_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        processed += 1
        if processed > max_pairs:
            raise ResourceLimit(f"Buchberger pair queue exceeded {max_pairs} pairs")
        a, b = leads[i], leads[j]
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        h = reduce_modulo(s_polynomial(basis[i], basis[j], order), basis, order)
        if h:
            if h.is_constant():
                return GroebnerBasis((h.table.one(),), order)
            add(h.monic(order))

    # minimal basis, then inter-reduce
    keep = []
    for i, g in enumerate(basis):
        lm = leads[i]
        redundant = False
        for j, other in enumerate(leads):
            if j == i or not _mono_divides(other, lm):
                continue
            if other != lm or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(g)
    reduced = []
    for i, g in enumerate(keep):
        rest = keep[:i] + keep[i + 1:]
        r = reduce_modulo(g, rest, order) if rest else g
        reduced.append(r.monic(order))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return GroebnerBasis(tuple(reduced), order)


def ideal_member(p: Polynomial, gb: GroebnerBasis) -> bool:
    for g in gb.basis:
        if g.table != p.table:
            raise VarTableMismatch(f"{g.table!r} vs {p.table!r}")
    return not gb.reduce(p)


def radical_member(p: Polynomial, ideal: Ideal, max_pairs: int = DEFAULT_MAX_PAIRS) -> bool:
    """Whether ``p`` vanishes on the complex zero set of ``ideal``.

    Rabinowitsch: adjoin a fresh ``t`` and test ``1 in I + <1 - t*p>``.
    """
    if not p:
        return True
    if not ideal.generators:
        return False
    for g in ideal.generators:
        if g.table != p.table:
            raise VarTableMismatch(f"{g.table!r} vs {p.table!r}")
    table = p.table
    ext = table.extend([table.fresh_name()])
    t = ext.var(ext.names[-1])
    gens = [g.to_table(ext) for g in ideal.generators]
    gens.append(1 - t * p.to_table(ext))
    return groebner(gens, GREVLEX, max_pairs).is_unit()


def saturate(polys: Sequence[Polynomial], by: Optional[Polynomial], order: MonomialOrder,
             max_pairs: int = DEFAULT_MAX_PAIRS) -> GroebnerBasis:
    """Reduced basis of ``<polys> : by^oo`` in the given lex-type order.

    ``order`` must be a LEX order over the polynomials' table; the
    auxiliary variable is placed above every other variable.
    """
    polys = [p for p in polys if p]
    if by is None or by.is_constant():
        if by is not None and not by:
            return GroebnerBasis((by.table.one(),), order)
        if not polys:
            return GroebnerBasis((), order)
        return groebner(polys, order, max_pairs)
    table = by.table
    ext = table.extend([table.fresh_name()])
    n = len(table)
    t = ext.var(ext.names[-1])
    base = order.priority if order.priority is not None else tuple(range(n))
    ext_order = MonomialOrder("lex", (n,) + tuple(base))
    gens = [p.to_table(ext) for p in polys]
    gens.append(1 - t * by.to_table(ext))
    gb = groebner(gens, ext_order, max_pairs)
    if gb.is_unit():
        return GroebnerBasis((table.one(),), order)
    kept = tuple(g.drop_to(table) for g in gb.basis if all(m[n] == 0 for m in g.terms))
    return GroebnerBasis(kept, order)


# -- case-split solving ----------------------------------------------------


@dataclass
class SolutionComponent:
    """One branch of a case-split decomposition.

    ``substitutions`` give each eliminated variable as a polynomial in the
    free variables; when a division could not be avoided the variable also
    appears in ``denominators`` and its value is the quotient.
    """

    table: VarTable
    substitutions: Dict[str, Polynomial]
    residuals: List[Polynomial]
    inequations: List[Polynomial]
    free: List[str]
    denominators: Dict[str, Polynomial] = field(default_factory=dict)

    def value_at(self, var: str, free_point: Dict[str, Fraction]) -> Fraction:
        num = self.substitutions[var].evaluate(free_point)
        den = self.denominators.get(var)
        if den is None:
            return num
        d = den.evaluate(free_point)
        if not d:
            raise ZeroDivisionError(var)
        return num / d

    def is_polynomial(self) -> bool:
        return not self.denominators

    def equations(self) -> List[Polynomial]:
        """Defining equations: ``den*x - num`` for each substitution plus residuals."""
        eqs = []
        for var, num in self.substitutions.items():
            x = self.table.var(var)
            den = self.denominators.get(var)
            eqs.append(x * den - num if den is not None else x - num)
        return eqs + list(self.residuals)

    def describe(self) -> str:
        parts = []
        for var in self.table.names:
            if var in self.substitutions:
                num = self.substitutions[var]
                den = self.denominators.get(var)
                parts.append(f"{var} = {num}" if den is None else f"{var} = ({num})/({den})")
        if self.free:
            parts.append("free: " + ", ".join(self.free))
        for r in self.residuals:
            parts.append(f"{r} = 0")
        for q in self.inequations:
            parts.append(f"{q} != 0")
        return "; ".join(parts) if parts else "(everything free)"

    def to_json(self) -> dict:
        return {
            "substitutions": {v: str(p) for v, p in self.substitutions.items()},
            "denominators": {v: str(p) for v, p in self.denominators.items()},
            "residuals": [str(r) for r in self.residuals],
            "inequations": [str(q) for q in self.inequations],
            "free": list(self.free),
        }


@dataclass
class _Node:
    eqs: List[Polynomial]
    ineqs: List[Polynomial]
    steps: List[Tuple[str, Polynomial, Polynomial]]
    nonzero: frozenset
    depth: int


def _product(polys: Sequence[Polynomial], table: VarTable) -> Polynomial:
    h = table.one()
    for q in polys:
        h = h * q
    return h


def _clean_inequations(ineqs: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    out = []
    for q in ineqs:
        if q.is_constant():
            continue
        q = q.primitive(order)
        if q not in out:
            out.append(q)
    return out


def _linear_candidate(basis: Sequence[Polynomial], variables: Sequence[str]):
    best = None
    for g in basis:
        for vi, var in enumerate(variables):
            parts = g.coefficients_in(var)
            if max(parts) != 1:
                continue
            c = parts[1]
            r = parts.get(0, g.table.zero())
            rank = (c.total_degree(), len(g.terms), vi)
            if best is None or rank < best[0]:
                best = (rank, var, g, c, r)
    return best


def solve_components(
    system: Sequence[Polynomial],
    unknowns: Sequence[str],
    parameters: Sequence[str] = (),
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_components: int = 10_000,
) -> List[SolutionComponent]:
    """Exhaustive case-split decomposition of the zero set of ``system``.

    Every node computes the lex basis of its equations saturated by its
    inequations (unknowns above parameters).  A basis element linear in a
    variable is used to eliminate it, splitting on whether the coefficient
    vanishes; otherwise the first remaining variable is split into zero and
    nonzero.  Inconsistent nodes are dropped.  Leaves left unsolved at the
    depth bound keep their basis as residual equations.
    """
    system = list(system)
    if not system:
        raise ValueError("empty system: pass at least one polynomial (possibly 0)")
    table = system[0].table
    for p in system:
        if p.table != table:
            raise VarTableMismatch("system polynomials live over different tables")
    variables = list(unknowns) + list(parameters)
    for v in variables:
        table.index(v)
    order = MonomialOrder("lex", tuple(table.index(v) for v in variables)
                          + tuple(i for i in range(len(table)) if table.names[i] not in variables))

    leaves: List[_Node] = []
    stack = [_Node([p for p in system if p], [], [], frozenset(), 0)]
    while stack:
        node = stack.pop()
        ineqs = _clean_inequations(node.ineqs, order)
        h = _product(ineqs, table) if ineqs else None
        gb = saturate(node.eqs, h, order, max_pairs)
        if gb.is_unit():
            continue
        basis = list(gb.basis)
        node = _Node(basis, ineqs, node.steps, node.nonzero, node.depth)
        if not basis:
            leaves.append(node)
            continue
        if node.depth >= max_depth:
            leaves.append(node)
            continue
        remaining = [v for v in variables if any(g.degree(v) > 0 for g in basis)]
        cand = _linear_candidate(basis, remaining)
        if cand is not None:
            _, var, g, c, r = cand
            num = -r
            others = [p for p in basis if p is not g]
            if c.is_constant():
                num = num.scale(1 / c.constant_value())
                den = table.one()
                new_eqs = [p.substitute({var: num}) for p in others]
                new_ineqs = [q.substitute({var: num}) for q in ineqs]
                stack.append(_Node(new_eqs, new_ineqs, node.steps + [(var, num, den)],
                                   node.nonzero, node.depth))
            else:
                # c = 0 branch pushed first so the generic branch is explored first
                stack.append(_Node(basis + [c], ineqs, node.steps, node.nonzero, node.depth + 1))
                new_eqs = [p.homogenized_substitute(var, num, c) for p in others]
                new_ineqs = [q.homogenized_substitute(var, num, c) for q in ineqs] + [c]
                stack.append(_Node(new_eqs, new_ineqs, node.steps + [(var, num, c)],
                                   node.nonzero, node.depth + 1))
            continue
        split = [v for v in remaining if v not in node.nonzero]
        if not split:
            leaves.append(node)
            continue
        var = split[0]
        x = table.var(var)
        stack.append(_Node(basis, ineqs + [x], node.steps, node.nonzero | {var}, node.depth + 1))
        zero = table.zero()
        stack.append(_Node([p.substitute({var: zero}) for p in basis],
                           [q.substitute({var: zero}) for q in ineqs],
                           node.steps + [(var, zero, table.one())], node.nonzero, node.depth + 1))
        if len(leaves) > max_components:
            raise ResourceLimit(f"more than {max_components} components")

    components = [_assemble(leaf, variables, table, order) for leaf in leaves]
    return _simplify_components(components, system, order)


def exact_quotient(num: Polynomial, den: Polynomial) -> Optional[Polynomial]:
    """``num / den`` when the division is exact, else ``None``."""
    if not num:
        return num
    order = GREVLEX
    lm, lc = den._leading(order)
    work = dict(num.terms)
    quotient = {}
    key = order.key
    while work:
        m = max(work, key=key)
        if not _mono_divides(lm, m):
            return None
        q = _mono_div(m, lm)
        f = work[m] / lc
        quotient[q] = f
        for gm, gc in den.terms.items():
            mm = tuple(a + b for a, b in zip(gm, q))
            v = work.get(mm, 0) - f * gc
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return Polynomial(num.table, quotient)


def _assemble(node: _Node, variables, table: VarTable, order: MonomialOrder) -> SolutionComponent:
    # back-substitute steps (latest first) into earlier ones
    resolved: Dict[str, Tuple[Polynomial, Polynomial]] = {}
    for var, num, den in reversed(node.steps):
        for later, (lnum, lden) in resolved.items():
            if num.degree(later) <= 0 and den.degree(later) <= 0:
                continue
            if lden.is_constant():
                s = lnum.scale(1 / lden.constant_value())
                num = num.substitute({later: s})
                den = den.substitute({later: s})
            else:
                k = max(num.degree(later), den.degree(later))
                num = num.homogenized_substitute(later, lnum, lden, k)
                den = den.homogenized_substitute(later, lnum, lden, k)
        if not den.is_constant():
            q = exact_quotient(num, den)
            if q is not None:
                num, den = q, table.one()
        if den.is_constant():
            num = num.scale(1 / den.constant_value())
            den = table.one()
        resolved[var] = (num, den)
    substitutions = {}
    denominators = {}
    for var in variables:
        if var in resolved:
            num, den = resolved[var]
            substitutions[var] = num
            if not den.is_constant():
                denominators[var] = den
    free = [v for v in variables if v not in substitutions]
    residuals = [g.primitive(order) for g in node.eqs]
    inequations = _clean_inequations(list(node.ineqs) + list(denominators.values()), order)
    return SolutionComponent(table, substitutions, residuals, inequations, free, denominators)


def _vanishes_on(component: SolutionComponent, polys: Sequence[Polynomial]) -> bool:
    """Symbolic test that ``polys`` vanish at every point of ``component``."""
    gb = None
    if component.residuals:
        h = _product(component.inequations, component.table) if component.inequations else None
        gb = saturate(component.residuals, h, MonomialOrder("lex"))
        if gb.is_unit():
            return True
    for p in polys:
        q = p
        for var, num in component.substitutions.items():
            den = component.denominators.get(var)
            if den is None:
                q = q.substitute({var: num})
            else:
                q = q.homogenized_substitute(var, num, den)
        if gb is not None and gb.basis:
            q = gb.reduce(q)
        if q:
            return False
    return True


def _simplify_components(components: List[SolutionComponent], system, order) -> List[SolutionComponent]:
    # A polynomial parametrization that satisfies the system identically
    # needs no inequations: its closure is already inside the variety.
    for comp in components:
        if comp.is_polynomial() and not comp.residuals and comp.inequations:
            if _vanishes_on(SolutionComponent(comp.table, comp.substitutions, [], [], comp.free), system):
                comp.inequations = []
    kept: List[SolutionComponent] = []
    for i, comp in enumerate(components):
        absorbed = False
        for j, other in enumerate(components):
            if i == j or other.inequations or other.residuals or not other.is_polynomial():
                continue
            if not _vanishes_on(comp, other.equations()):
                continue
            # equal components: keep the earliest
            if (not comp.inequations and not comp.residuals and comp.is_polynomial()
                    and _vanishes_on(other, comp.equations()) and j > i):
                continue
            absorbed = True
            break
        if not absorbed:
            kept.append(comp)
    return kept


def component_contains(component: SolutionComponent, point: Dict[str, Fraction]) -> bool:
    """Whether a total point lies in the component."""
    for var, num in component.substitutions.items():
        den = component.denominators.get(var)
        d = den.evaluate(point) if den is not None else Fraction(1)
        if d * Fraction(point[var]) != num.evaluate(point):
            return False
    if any(r.evaluate(point) for r in component.residuals):
        return False
    return all(q.evaluate(point) for q in component.inequations)


def _random_rational(rng: random.Random, small: bool) -> Fraction:
    if small:
        return Fraction(rng.randint(-3, 3))
    num = 0
    while num == 0:
        num = rng.randint(-12, 12)
    return Fraction(num, rng.randint(1, 6))


def component_sample(component: SolutionComponent, seed: int, count: int,
                     variables: Optional[Sequence[str]] = None) -> List[Dict[str, Fraction]]:
    """Deterministic exact points of ``component``.

    Free variables get pseudo-random nonzero rationals (small integers when
    residual equations must be hit); draws violating an inequation or a
    residual are rejected.  Points assign every variable of ``variables``
    (default: the component's unknowns and parameters).
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    names = list(variables) if variables is not None else component.free + list(component.substitutions)
    rng = random.Random(seed)
    small = bool(component.residuals)
    points = []
    rejected = 0
    limit = 100 * count
    while len(points) < count:
        free_point = {v: _random_rational(rng, small) for v in component.free}
        ok = True
        point = dict(free_point)
        try:
            for var in component.substitutions:
                point[var] = component.value_at(var, free_point)
        except ZeroDivisionError:
            ok = False
        if ok:
            ok = (all(not r.evaluate(point) for r in component.residuals)
                  and all(q.evaluate(point) for q in component.inequations))
        if not ok:
            rejected += 1
            if rejected >= limit:
                raise RejectionExhausted(f"{rejected} draws rejected for {component.describe()}")
            continue
        ordered = {v: point[v] for v in component.table.names if v in point and v in names}
        points.append(ordered)
    return points
