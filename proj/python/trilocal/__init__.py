"""Weyl group combinatorics, local models and companion points for Res GL_n."""

from ._trilocal import (
    AMatrixGuard,
    Error,
    GenericityViolation,
    IdentityFailure,
    __version__,
    all_elements,
    breuil_mezard_decomposition,
    bruhat_leq,
    companion_set,
    d,
    fiber_cycle,
    fixed_space_dim,
    is_distinct_simple_product,
    is_smooth_everywhere,
    kl_polynomial,
    length,
    probe,
    relative_position,
    replay,
    run_cli,
    schubert_tangent_dim,
    singularity_verdict,
    tangent_bound,
    upper_interval,
    verma_multiplicity,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
