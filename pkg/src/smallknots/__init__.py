"""Exact verification of hyperbolic small knots in lens spaces and T/O/I spherical manifolds."""
from .rational import (
    ALL,
    EMPTY,
    INF,
    MobiusMap,
    ParamInterval,
    Slope,
    Unique,
    frac_normalize,
    interval_contains,
    mobius_eval,
    mobius_solve,
)
from .cfrac import (
    ContinuedFraction,
    SimpleCF,
    TwoBridgeLink,
    cf_equivalent,
    cf_evaluate,
    cf_reverse,
    cf_simple,
    is_hyperbolic_two_bridge,
    lk_fraction,
    schubert_equivalent,
    seifert_family_exclusion,
    two_bridge_normalize,
)
from .slope_table import (
    SlopeFamily,
    exclusion_check,
    family_contains,
    pair_in_table,
    partners,
    table_families,
)
from .certify import (
    SmallKnotCertificate,
    admissible_k,
    certify_lens,
    certify_spherical,
    lens_space,
    spherical_toi,
    verify_certificate,
)
from .sweep import sweep_verify

__version__ = "0.1.0"
