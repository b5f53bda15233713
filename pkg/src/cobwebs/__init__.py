"""Exact cumulative connection constants, F-nomials and cobweb-poset incidence matrices."""
from .chains import (
    Layer,
    count_chains_from_vertex,
    count_max_chains,
    count_max_chains_closed,
    enumerate_max_chains,
    verify_partition_theorem,
)
from .cobweb import (
    CobwebPoset,
    GridPoint,
    coords_of,
    label_of,
    mobius_from_zeta,
    mobius_krot,
    zeta_blocks,
    zeta_definitional,
    zeta_dziemianczuk,
    zeta_krot_grid,
    zeta_delta_fib,
    zeta_delta_general,
)
from .connection import (
    ConnectionTable,
    RootSequence,
    basis_from_connection,
    bell,
    bell_identity_check,
    ccc,
    ccc_step,
    connection_oracle,
    lah_table,
    persistent_poly,
    solve_root_sequence,
    stirling1_unsigned,
    stirling2,
)
from .fnomial import (
    FNomialTable,
    ccc_rowsum,
    f_derivative,
    f_factorial,
    f_falling,
    f_shift_power,
    fnomial,
    fnomial_recurrence,
    fnomial_table,
    is_admissible,
)
from .kernels import BACKEND
from .polynomial import Polynomial
from .render import render_la_scala
from .seq import FSequence, cumulative_sum, f_term, make_sequence

__version__ = "0.1.0"
