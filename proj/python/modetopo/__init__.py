"""Mode complexes, belief points and the threshold transition engine."""

from ._core import (
    FormatError,
    ModelError,
    active_set,
    add_shadow,
    belief_from_mass,
    carrier,
    census,
    closure,
    cmd_graph,
    cmd_nerve,
    cmd_run,
    cmd_validate,
    face_intersection,
    graph,
    is_valid,
    maximal_faces,
    nerve,
    replay,
    step,
    triage_phi,
    triage_regions,
    validate_belief,
)

__version__ = "0.1.0"
