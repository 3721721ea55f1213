"""Exact raising-operator Schubert calculus and Racah-sum verification."""

from schubert.cring import CPolynomial, h_values, monomial_from_seq
from schubert.giambelli import (
    giambelli_det,
    pfaffian,
    schur_alternant,
    schur_pfaffian,
    theta,
)
from schubert.lockers import closed_form, divisor_parity, simulate
from schubert.partitions import (
    KStrictPartition,
    Partition,
    PivotSet,
    cell_of,
    enumerate_grassmannian_permutations,
    is_k_strict,
    partition_to_subset,
    subset_to_partition,
)
from schubert.racah import (
    conjecture_scan,
    harmonic,
    hodge_inequality_check,
    pfaff_saalschutz_lhs,
    pfaff_saalschutz_rhs,
    racah_exact,
    racah_real,
    real_grid_scan,
)
from schubert.raising import OperatorProduct, RaisingFactor, apply_rij, expand, pair_entry

__version__ = "0.1.0"
