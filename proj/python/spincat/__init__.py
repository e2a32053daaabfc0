"""Superpositions of spin coherent states: coherence and squeezing numerics.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from spincat._core import (  # noqa: F401
    DegenerateSuperpositionError,
    MomentSet,
    NoCrossingError,
    SpinSpace,
    SpinState,
    SscsParams,
    __version__,
    cartesian_moments,
    complete_triad,
    expectation_jx,
    expectation_jy,
    expectation_jz,
    factorial_moment,
    find_critical_eta,
    g2,
    g2_number_state,
    generating_function,
    global_phase_fidelity,
    gtilde,
    inner,
    j1_even_xi,
    jminus_expect,
    jminus2_expect,
    mean_spin_direction,
    n_moments,
    number_state,
    odd_scs_peak_xi_y2,
    one_axis_twist,
    run_verification,
    scs,
    scs_overlap_minus,
    sscs,
    sscs_cross_overlap,
    xi_param,
    xi_squared_oracle,
    xi_xyz_closedform,
)
