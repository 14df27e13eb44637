"""Exact symbolic tools for operators on two-dimensional dendriform algebras.

The layers build on one another:

``dend.poly``       sparse polynomials over the rationals and their parser
``dend.groebner``   Buchberger bases, membership tests, case-split solving
``dend.algebra``    dendriform algebras by structure constants
``dend.operators``  polynomial systems for Rota-Baxter, Reynolds, Nijenhuis
                    and averaging operators
``dend.catalog``    the shipped classification data
``dend.verify``     claim verdicts, numeric cross checks, completeness
``dend.report``     sweeps and report emission
"""

__version__ = "0.1.0"

from .algebra import DendriformAlgebra, check_axioms, sum_associativity_check
from .catalog import MANIFEST, Catalog, FamilyClaim, default_catalog, load_catalog
from .errors import DendError, InputError, ResourceLimit
from .groebner import (
    GroebnerBasis,
    Ideal,
    SolutionComponent,
    buchberger,
    component_sample,
    groebner,
    ideal_member,
    radical_member,
    solve_components,
)
from .operators import (
    AVERAGING_KIND,
    COLUMN,
    NIJENHUIS_KIND,
    PAPER,
    REYNOLDS_KIND,
    ROW,
    STANDARD,
    OperatorKind,
    build_system,
    rota_baxter,
)
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, VarTable, parse_poly
from .report import VerificationReport, emit_report, run_sweep
from .verify import Verdict, completeness_check, cross_check, verify_claim, weight_shift_check

__all__ = [
    "AVERAGING_KIND", "COLUMN", "Catalog", "DendError", "DendriformAlgebra", "FamilyClaim",
    "GREVLEX", "GroebnerBasis", "Ideal", "InputError", "LEX", "MANIFEST", "MonomialOrder",
    "NIJENHUIS_KIND", "OperatorKind", "PAPER", "Polynomial", "REYNOLDS_KIND", "ROW",
    "ResourceLimit", "STANDARD", "SolutionComponent", "VarTable", "Verdict",
    "VerificationReport", "buchberger", "build_system", "check_axioms", "completeness_check",
    "component_sample", "cross_check", "default_catalog", "emit_report", "groebner",
    "ideal_member", "load_catalog", "parse_poly", "radical_member", "rota_baxter", "run_sweep",
    "solve_components", "sum_associativity_check", "verify_claim", "weight_shift_check",
]
