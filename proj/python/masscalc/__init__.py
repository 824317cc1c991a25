"""Exact center-of-mass calculus over pluggable fields.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._masscalc import (  # noqa: F401
    DegenerateConfigurationError,
    DegenerateFormError,
    DimensionMismatchError,
    DivisionByZeroError,
    Field,
    FieldElement,
    FieldMismatchError,
    FreeVector,
    MassElement,
    MasscalcError,
    NoCenterOfMassError,
    NoCriticalPointError,
    NonPrimeModulusError,
    ParseError,
    Point,
    SchemaError,
    Space,
    Triangle,
    UnsupportedCharacteristicError,
    WeightedSet,
    classical_center_of_mass,
    critical_point,
    euler_demo,
    free_vector,
    is_null_set,
    kodaira,
    kodaira_pairing,
    medians_demo,
    moment_about,
    orthocenter_demo,
    pairs_equivalent,
    psi_drop,
    psi_lift,
    reduce,
    run_document,
    sets_equivalent,
    shift,
    total_mass,
)

__all__ = [name for name in dir() if not name.startswith("_")]
