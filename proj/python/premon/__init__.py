"""Twined Hopf algebras over finite groups: C[G], D(G) and their coherence checks."""

from ._premon import (
    Group,
    InternalConsistency,
    InvalidArgument,
    Model,
    NumericDegeneracy,
    Signature,
    Twined,
    UnsupportedGroup,
    ValidationError,
    character_table,
    dihedral,
    group_algebra,
    group_from_table,
    quantum_double,
    run_cli,
)

__all__ = [
    "Group",
    "InternalConsistency",
    "InvalidArgument",
    "Model",
    "NumericDegeneracy",
    "Signature",
    "Twined",
    "UnsupportedGroup",
    "ValidationError",
    "character_table",
    "dihedral",
    "group_algebra",
    "group_from_table",
    "quantum_double",
    "run_cli",
]
