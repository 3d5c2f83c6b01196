"""Carter partitions, cores, abacus, generating series and the crystal B(Lambda_0).

Partitions are passed and returned as lists of positive, weakly decreasing
integers. Invalid input raises ValueError.
"""

from ._carter import (
    abacus,
    beta_numbers,
    build_crystal,
    carter_series,
    condition_dagger,
    condition_ddagger,
    core_series,
    count_cores,
    count_fixed_core_by_weight,
    decompose,
    e_tilde,
    ell_core,
    enumerate_carter_by_first_part,
    enumerate_cores,
    enumerate_fixed_core_by_weight,
    f_tilde,
    fixed_core_weight_series,
    hook_length,
    is_core,
    is_core_via_abacus,
    is_ell_partition,
    is_ell_partition_oracle,
    is_ell_regular,
    reconstruct,
    removable_rim_hooks,
    residue,
    run_cli,
    runner_removal_bijection,
    satisfies_star,
    series_expand_rational,
    signature,
    verify_theorems,
)

__all__ = [name for name in dir() if not name.startswith("_")]
