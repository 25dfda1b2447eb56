"""Python interface to the landaulab velocity-grid Landau solver."""

try:
    from . import _landaulab as _core  # installed layout
except ImportError:  # build tree: extension sits next to the package on sys.path
    import _landaulab as _core

_NAMES = [
    "VelocityGrid",
    "SpeciesSet",
    "MixtureState",
    "SphereField",
    "make_grid",
    "make_species_set",
    "make_state",
    "maxwellian",
    "moments",
    "entropy",
    "fisher",
    "entropy_dissipation",
    "fisher_dissipation",
    "fisher_dissipation_xi",
    "dissipation_breakdown",
    "diagnostics",
    "collision_pair",
    "rhs",
    "step",
    "run",
    "suggest_dt",
    "admissible_threshold",
    "check_admissibility",
    "circle_field",
    "sphere_field",
    "sphere_ratio",
    "check_inequality",
    "parse_config",
    "load_config",
    "set_parallel_reduction",
]

globals().update({name: getattr(_core, name) for name in _NAMES})
__all__ = _NAMES
