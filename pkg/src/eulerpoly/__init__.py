"""Exact computation and certification of binomial Eulerian polynomials for
s-inversion sequences, their refinements, and related permutation and
subdivision polynomials."""
from eulerpoly.errors import ConsistencyError, DomainError
from eulerpoly.polycore import (
    IntPoly,
    er_apply,
    gamma_expand,
    is_palindromic,
    r_sections,
    symmetric_decompose,
)
from eulerpoly.realroot import (
    InterlacingVerdict,
    Reason,
    interlaces,
    interlaces_by_roots,
    is_interlacing_sequence,
    is_real_rooted,
    isolate_real_roots,
    sturm_count,
)
from eulerpoly.invseq import brute_binomial_eulerian, brute_refined, stats
from eulerpoly.recurrence import (
    Marker,
    ThresholdSpec,
    binomial_eulerian,
    refined_levels,
    refined_polys,
    threshold_transform,
)
from eulerpoly.perms import (
    alpha_recurrence,
    binomial_eulerian_classic,
    derangement_poly,
    eulerian_poly,
    theta,
)
from eulerpoly.colored import a_tilde_parts, psi, psi_inv
from eulerpoly.subdivision import h_delta_esd, h_sections, iterate_lem_f, lem_f_transform

__version__ = "0.1.0"
