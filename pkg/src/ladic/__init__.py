"""Exact arithmetic on the l-adic compactification of the reals (the l-adic solenoid)."""

from .digits import DigitExpansion, expand, format_digits, from_digits, parse_digits, truncate_to_element
from .element import (
    ShiftedForm,
    SolenoidElement,
    add,
    embed_padic,
    embed_real,
    format_element,
    from_pair,
    in_padic_line,
    in_real_line,
    neg,
    parse_element,
    standard_form,
    standard_form_at,
    tau,
    torsion_order,
    zero,
)
from .errors import DomainError, LadicError, ParseError
from .measure import Cylinder, cylinder_contains, haar_measure, parse_cylinder, refine
from .metric import abs_value, approximate_padic, approximate_real, dist, epsilon_net
from .rational import INFINITY, PrimeContext, abs_ell, ell_fractional_part, parse_rational, val_ell
from .solenoid import CoherentSequence, circle_form, coords, from_coords
from .structure import (
    IRRATIONAL,
    ClosureClass,
    ClosureKind,
    SubgroupDescriptor,
    character_eval,
    character_kernel,
    classify_closure,
    division_points,
    scalar_mul,
    subgroup_contains,
    torsion_subgroup,
)

__version__ = "0.1.0"

__all__ = [
    "ClosureClass",
    "ClosureKind",
    "CoherentSequence",
    "Cylinder",
    "DigitExpansion",
    "DomainError",
    "INFINITY",
    "IRRATIONAL",
    "LadicError",
    "ParseError",
    "PrimeContext",
    "ShiftedForm",
    "SolenoidElement",
    "SubgroupDescriptor",
    "abs_ell",
    "abs_value",
    "add",
    "approximate_padic",
    "approximate_real",
    "character_eval",
    "character_kernel",
    "circle_form",
    "classify_closure",
    "coords",
    "cylinder_contains",
    "dist",
    "division_points",
    "ell_fractional_part",
    "embed_padic",
    "embed_real",
    "epsilon_net",
    "expand",
    "format_digits",
    "format_element",
    "from_coords",
    "from_digits",
    "from_pair",
    "haar_measure",
    "in_padic_line",
    "in_real_line",
    "neg",
    "parse_cylinder",
    "parse_digits",
    "parse_element",
    "parse_rational",
    "refine",
    "scalar_mul",
    "standard_form",
    "standard_form_at",
    "subgroup_contains",
    "tau",
    "torsion_order",
    "torsion_subgroup",
    "truncate_to_element",
    "val_ell",
    "zero",
]
