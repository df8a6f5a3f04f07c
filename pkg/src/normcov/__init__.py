"""Normal coverings of symmetric and alternating groups.

Compute and verify basic sets (systems of subgroup classes whose conjugates
cover the whole group), evaluate the closed-form bounds on their minimal
size, and find the exact minimum over built-in catalogs of maximal subgroup
classes for degrees up to 12.
"""

from .bounds import (
    BoundReport,
    PhiHalfBound,
    bounds_report,
    general_upper,
    phi_half_bound,
    power_of_two_band,
    sym_alt_gap_table,
    totient_lower,
)
from .coverings import (
    BasicSet,
    CoverReport,
    GammaResult,
    all_minimum_covers,
    construct_delta,
    exact_gamma,
    mandatory_components,
    verify_basic_set,
)
from .cycle_types import (
    ClassId,
    CycleType,
    GroupId,
    GroupKind,
    Parity,
    SplitTag,
    class_universe,
    is_split,
    parity,
    partitions,
    t_prime_set,
    t_set,
    u_set,
)
from .numtheory import (
    Interval,
    TotientReport,
    a_of_n,
    euler_phi,
    moebius,
    nu,
    p0_of_n,
    phi_interval,
    totient_report,
)
from .permgroup import (
    GeneratedGroup,
    Perm,
    alt_class_coverage,
    closure,
    compose,
    conjugate,
    cycle_type_of,
    inverse,
    perm_parity,
    split_class_of,
    type_spectrum,
)
from .subgroups import (
    Catalog,
    CatalogError,
    FullAlternating,
    Imprimitive,
    IntersectAlt,
    Intransitive,
    NamedGroup,
    class_coverage,
    contains_type,
    load_catalog,
    named_group,
)

__version__ = "0.1.0"
