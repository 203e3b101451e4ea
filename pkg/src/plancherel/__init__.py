"""Exact Plancherel and Jack-Plancherel averages of regular functions on Young diagrams."""

from .kerov import KerovCoords, PoleError, growth_kernel, h_series, hh_eval, kerov_coords, phi_eval
from .measures import (
    MeasureTable,
    average,
    growth_marginal,
    jack_plancherel_direct,
    plancherel,
    sample_trajectory,
)
from .observables import Observable, del_operator, parse_observable
from .partitions import Partition, dim_skew, dim_standard, enumerate_partitions, transpose
from .polycheck import check_identity_6E, check_polynomiality, finite_difference_check, verify_closed_forms
from .symfunc import JackTable, SymFunc, build_jack_table, inner_product_jack

__version__ = "0.1.0"
