"""Narrow-sense BCH codes over GF(q) and bounds on their dual codes.

The top-level namespace re-exports the working API:

- field and polynomial arithmetic (:mod:`dualbch.gf`),
- q-cyclotomic coset tables and closed-form largest leaders
  (:mod:`dualbch.cyclotomic`),
- BCH code specs, defining sets, and generator matrices
  (:mod:`dualbch.bch`),
- dual-distance lower bounds and dually-BCH tests
  (:mod:`dualbch.dualtools`),
- minimum-distance certification (:mod:`dualbch.mindist`),
- grid-based property sweeps (:mod:`dualbch.propchecks`).
"""

from .bch import (
    BchSpec,
    CodeParams,
    DefiningSet,
    DivisorOfQMinus1,
    PowerForm,
    bch_bound_from_set,
    bch_spec,
    code_params,
    defining_set,
    dual_code_params,
    dual_defining_set,
    generator_matrix,
)
from .cyclotomic import (
    CosetTable,
    coset_leader,
    coset_table,
    largest_leaders,
    largest_leaders_closed_form,
    multiplicative_order,
)
from .dualtools import (
    BoundReport,
    PriorBound,
    bound_report,
    dual_lower_bound,
    dually_bch_closed,
    dually_bch_direct,
    i_delta_closed_divisor_form,
    i_delta_closed_power_form,
    i_delta_direct,
    prior_bounds,
)
from .gf import (
    FieldCtx,
    FieldElem,
    Poly,
    ScalarField,
    elem_pow,
    field_new,
    minimal_polynomial,
    poly_eval_in_ext,
    prime_power,
    scalar_field,
)
from .mindist import (
    BudgetExceeded,
    DistanceCertificate,
    certify,
    exhaustive_min_weight,
    in_row_space,
    low_weight_search,
)
from .propchecks import (
    MANIFEST_SCHEMA,
    PropResult,
    check_leader_floor_divisor_form,
    check_leader_floor_power_form,
    check_tperp_leader_membership,
    load_grid_manifest,
    run_grid,
)

__version__ = "0.1.0"

__all__ = [
    "BchSpec",
    "BoundReport",
    "BudgetExceeded",
    "CodeParams",
    "CosetTable",
    "DefiningSet",
    "DistanceCertificate",
    "DivisorOfQMinus1",
    "FieldCtx",
    "FieldElem",
    "MANIFEST_SCHEMA",
    "Poly",
    "PowerForm",
    "PriorBound",
    "PropResult",
    "ScalarField",
    "__version__",
    "bch_bound_from_set",
    "bch_spec",
    "bound_report",
    "certify",
    "check_leader_floor_divisor_form",
    "check_leader_floor_power_form",
    "check_tperp_leader_membership",
    "code_params",
    "coset_leader",
    "coset_table",
    "defining_set",
    "dual_code_params",
    "dual_defining_set",
    "dual_lower_bound",
    "dually_bch_closed",
    "dually_bch_direct",
    "elem_pow",
    "exhaustive_min_weight",
    "field_new",
    "generator_matrix",
    "i_delta_closed_divisor_form",
    "i_delta_closed_power_form",
    "i_delta_direct",
    "in_row_space",
    "largest_leaders",
    "largest_leaders_closed_form",
    "load_grid_manifest",
    "low_weight_search",
    "minimal_polynomial",
    "multiplicative_order",
    "poly_eval_in_ext",
    "prime_power",
    "prior_bounds",
    "run_grid",
    "scalar_field",
]
