"""Catalog of algebras and operator-family claims (JSON documents)."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import DendriformAlgebra
from .errors import DimensionMismatch, DuplicateId, MissingAlgebra, SchemaError
from .operators import KIND_NAMES, ROTA_BAXTER, OperatorKind, parse_kind, transpose
from .poly import PARAMETER, Polynomial, VarTable

MANIFEST = tuple(f"Dend2_{k}" for k in range(1, 13))


@dataclass(frozen=True)
class FamilyClaim:
    """A parametric operator matrix transcribed from a classification table.

    ``table`` holds the claim parameters followed by the algebra's own
    parameters; matrix entries and restrictions are polynomials over it.
    """

    id: str
    algebra: str
    kind: OperatorKind
    params: Tuple[str, ...]
    matrix: Tuple[Tuple[Polynomial, ...], ...]
    restrictions: Tuple[Polynomial, ...]
    source: str
    table: VarTable

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def is_affine(self) -> bool:
        """Whether every matrix entry has degree at most 1 in the claim parameters."""
        idx = [self.table.index(p) for p in self.params]
        return all(sum(m[i] for i in idx) <= 1 for row in self.matrix for e in row for m in e.terms)

    def transposed(self) -> "FamilyClaim":
        return FamilyClaim(self.id + "^T", self.algebra, self.kind, self.params,
                           transpose(self.matrix), self.restrictions, self.source, self.table)

    def with_kind(self, kind: OperatorKind) -> "FamilyClaim":
        return FamilyClaim(self.id, self.algebra, kind, self.params, self.matrix,
                           self.restrictions, self.source, self.table)

    def renamed(self, mapping: Dict[str, str]) -> "FamilyClaim":
        """Copy with claim parameters renamed (algebra parameters untouched)."""
        new_params = tuple(mapping.get(p, p) for p in self.params)
        alg_params = self.table.names[len(self.params):]
        table = VarTable(new_params + tuple(alg_params), (PARAMETER,) * len(self.table))
        assign = {old: table.var(mapping.get(old, old)) for old in self.table.names}

        def move(p):
            return p.substitute(assign, table)

        return FamilyClaim(self.id, self.algebra, self.kind, new_params,
                           tuple(tuple(move(e) for e in row) for row in self.matrix),
                           tuple(move(r) for r in self.restrictions), self.source, table)

    def matrix_strings(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self.matrix]


@dataclass(frozen=True)
class Catalog:
    algebras: Tuple[DendriformAlgebra, ...]
    claims: Tuple[FamilyClaim, ...]
    sha256: str

    def __iter__(self):
        # unpacks as (algebras, claims)
        return iter((list(self.algebras), list(self.claims)))

    def algebra(self, id: str) -> DendriformAlgebra:
        for a in self.algebras:
            if a.id == id:
                return a
        raise KeyError(id)

    def claims_for(self, algebra_id: str, kind: Optional[OperatorKind] = None) -> List[FamilyClaim]:
        return [c for c in self.claims
                if c.algebra == algebra_id and (kind is None or c.kind == kind)]

    def missing(self, manifest: Sequence[str] = MANIFEST) -> List[str]:
        have = {a.id for a in self.algebras}
        return [i for i in manifest if i not in have]

    def check_manifest(self, manifest: Sequence[str] = MANIFEST) -> None:
        missing = self.missing(manifest)
        if missing:
            raise MissingAlgebra(missing)


def _require(obj, key, typ, path):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if key not in obj:
        raise SchemaError(f"{path}.{key}", "missing")
    value = obj[key]
    if not isinstance(value, typ) or (typ is int and isinstance(value, bool)):
        raise SchemaError(f"{path}.{key}", f"expected {getattr(typ, '__name__', typ)}")
    return value


def _string_list(value, path) -> List[str]:
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise SchemaError(path, "expected a list of strings")
    return value


def _load_algebra(obj, path) -> DendriformAlgebra:
    id = _require(obj, "id", str, path)
    dim = _require(obj, "dim", int, path)
    if dim < 1:
        raise SchemaError(f"{path}.dim", "must be positive")
    params = _string_list(obj.get("params", []), f"{path}.params")
    table = VarTable(params)
    tables = {}
    for name in ("prec", "succ"):
        entries = _require(obj, name, list, path)
        products = {}
        for k, entry in enumerate(entries):
            epath = f"{path}.{name}[{k}]"
            i = _require(entry, "i", int, epath)
            j = _require(entry, "j", int, epath)
            coeffs = _string_list(_require(entry, "coeffs", list, epath), f"{epath}.coeffs")
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise DimensionMismatch(f"{epath}: index out of range for dim {dim}")
            if len(coeffs) != dim:
                raise DimensionMismatch(f"{epath}: {len(coeffs)} coefficients for dim {dim}")
            if (i, j) in products:
                raise DuplicateId(f"{epath}: product ({i}, {j}) given twice")
            products[(i, j)] = [table.parse(c) for c in coeffs]
        tables[name] = products
    return DendriformAlgebra.from_products(id, dim, tables["prec"], tables["succ"], table)


def _load_claim(obj, path, algebras: Dict[str, DendriformAlgebra]) -> FamilyClaim:
    id = _require(obj, "id", str, path)
    alg_id = _require(obj, "algebra", str, path)
    if alg_id not in algebras:
        raise SchemaError(f"{path}.algebra", f"unknown algebra {alg_id!r}")
    alg = algebras[alg_id]
    kind_name = _require(obj, "kind", str, path)
    if kind_name not in KIND_NAMES:
        raise SchemaError(f"{path}.kind", f"unknown kind {kind_name!r}")
    weight = obj.get("weight")
    if kind_name == ROTA_BAXTER:
        if not isinstance(weight, str):
            raise SchemaError(f"{path}.weight", "rota_baxter claims need a rational weight string")
        try:
            weight = Fraction(weight)
        except ValueError:
            raise SchemaError(f"{path}.weight", f"not a rational: {weight!r}") from None
    elif weight is not None:
        raise SchemaError(f"{path}.weight", f"{kind_name} claims take no weight")
    kind = parse_kind(kind_name, weight)
    params = _string_list(_require(obj, "params", list, path), f"{path}.params")
    clash = set(params) & set(alg.table.names)
    if clash:
        raise SchemaError(f"{path}.params", f"clashes with algebra parameters {sorted(clash)}")
    try:
        table = VarTable(list(params) + list(alg.table.names))
    except ValueError as exc:
        raise SchemaError(f"{path}.params", str(exc)) from None
    rows = _require(obj, "matrix", list, path)
    if len(rows) != alg.dim or any(not isinstance(r, list) or len(r) != alg.dim for r in rows):
        raise DimensionMismatch(f"{path}.matrix: expected {alg.dim}x{alg.dim}")
    matrix = tuple(tuple(table.parse(_entry(e, f"{path}.matrix")) for e in r) for r in rows)
    restrictions = tuple(table.parse(s) for s in
                         _string_list(obj.get("restrictions", []), f"{path}.restrictions"))
    for k, r in enumerate(restrictions):
        if not r:
            raise SchemaError(f"{path}.restrictions[{k}]", "restriction is the zero polynomial")
    source = obj.get("source", "")
    if not isinstance(source, str):
        raise SchemaError(f"{path}.source", "expected a string")
    return FamilyClaim(id, alg_id, kind, tuple(params), matrix, restrictions, source, table)


def _entry(e, path):
    if not isinstance(e, str):
        raise SchemaError(path, "matrix entries must be polynomial strings")
    return e


def load_catalog(document: bytes) -> Catalog:
    """Parse a catalog document (UTF-8 JSON) into algebras and claims."""
    try:
        doc = json.loads(document.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError("$", f"not valid UTF-8 JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    algebras: Dict[str, DendriformAlgebra] = {}
    for k, obj in enumerate(_require(doc, "algebras", list, "$")):
        alg = _load_algebra(obj, f"$.algebras[{k}]")
        if alg.id in algebras:
            raise DuplicateId(f"algebra {alg.id!r} defined twice")
        algebras[alg.id] = alg
    claims: List[FamilyClaim] = []
    seen = set()
    for k, obj in enumerate(_require(doc, "claims", list, "$")):
        claim = _load_claim(obj, f"$.claims[{k}]", algebras)
        if claim.id in seen:
            raise DuplicateId(f"claim {claim.id!r} defined twice")
        seen.add(claim.id)
        claims.append(claim)
    return Catalog(tuple(algebras.values()), tuple(claims), hashlib.sha256(document).hexdigest())


def default_catalog_bytes() -> bytes:
    return resources.files("dend").joinpath("data/catalog.json").read_bytes()


def default_catalog() -> Catalog:
    return load_catalog(default_catalog_bytes())
