"""Braids on a convexly punctured disc.

Generators are indexed by sets of punctures (rotations, swings, twists),
words over them expand to Artin generators, and equality is decided by the
Artin action on a free group.  Six presentations of the (pure) braid group
are built as explicit data and can be verified relator by relator.
"""

from .convex import (
    ConvexDisc,
    PunctureSet,
    admissible,
    admissible_partitions,
    compatible,
    crossing,
    nested,
    non_crossing,
)
from .derivations import (
    RelationInstance,
    RewriteScript,
    Step,
    apply_step,
    central_witness,
    check_script,
    swing_as_twists,
)
from .expand import expand_full, twist_to_swings
from .oracle import action_of, equal, is_pure, permutation_of
from .presentations import (
    Presentation,
    abelianize,
    build,
    verify_presentation,
)
from .words import Band, Rotation, Swing, Twist, Word, parse, rotation

__all__ = [
    "ConvexDisc", "PunctureSet", "admissible", "admissible_partitions", "compatible",
    "crossing", "nested", "non_crossing", "RelationInstance", "RewriteScript", "Step",
    "apply_step", "central_witness", "check_script", "swing_as_twists", "expand_full",
    "twist_to_swings", "action_of", "equal", "is_pure", "permutation_of", "Presentation",
    "abelianize", "build", "verify_presentation", "Band", "Rotation", "Swing", "Twist",
    "Word", "parse", "rotation",
]
