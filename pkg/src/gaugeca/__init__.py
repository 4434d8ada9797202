"""Non-abelian gauge-invariant cellular automata and their verification engine."""

from .ca import Cell, FullState, MatterConfig, parse_matter, step_R, step_R_inverse
from .errors import GaugeCAError, InvalidArgumentError, ResourceLimitError, ScenarioError
from .gauge import (
    GaugeField,
    GaugeTransform,
    gauge_field,
    gauge_matter,
    gauge_state,
    parse_field,
    parse_transform,
    step_RA,
    step_RA_inverse,
    step_T,
    step_T_inverse,
    z_map,
)
from .invariance import (
    CheckReport,
    Domain,
    Orbit,
    check_characterization,
    check_equivalent,
    check_gauge_invariance,
    check_inhomogeneous,
    check_simulates,
    count_orbits,
    fig5_demo,
    orbit_field,
    orbit_joint,
    orbit_matter,
    same_orbit,
)
from .kernels import BACKEND
from .permutation import Perm, compose, enumerate_perms, identity, inverse, parse_perm, random_perm
from .theories import Theory, get_theory

__version__ = "0.1.0"
