"""Exact computations with finite-dimensional commutative algebras: minimal,
pointwise minimal and co-pointwise minimal extensions, and the lattice of
intermediate subalgebras."""

from __future__ import annotations

from .algebra import (
    Algebra,
    Ideal,
    Subalgebra,
    Subspace,
    adjoin,
    extension_from_json,
    extension_to_json,
    field_algebra,
    generated_subalgebra,
    monogenic_extension,
    product_algebra,
    split_algebra,
    truncated_poly_algebra,
)
from .canon import (
    canonical_chain,
    is_infra_integral,
    is_seminormal,
    is_subintegral,
    is_t_closed,
    minimal_oracle,
    minimal_type,
    seminormalization,
    t_closure,
)
from .fields import GF, RF, FieldScalar
from .lattice import enumerate_interval
from .pointwise import (
    co_pw_by_characterization,
    co_pw_by_definition,
    pointwise_verdicts,
    pw_minimal_by_characterization,
    pw_minimal_by_definition,
    pw_pair_by_characterization,
    pw_pair_by_definition,
)
from .report import analyze

__version__ = "0.1.0"
