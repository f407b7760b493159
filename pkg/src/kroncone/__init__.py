"""Faces of the Kronecker cone built from order matrices of additive type,
with an exact Kronecker-coefficient oracle to certify and probe them."""

from .characters import ClassType, InternalConsistencyError, character
from .kronecker import kronecker, murnaghan_probe, stability_probe
from .ordermatrix import (
    AdditiveMatrix,
    OrderMatrix,
    enumerate_order_matrices,
    marginals_and_pi,
    order_matrix_from_witness,
)
from .pairs import ConfigKind, PairDescriptor, detect_configs, build_pair
from .faces import FaceDescriptor, dedup_faces, face_equations
from .partitions import partitions_of
from .roots import dominance_check, wellcovering_root_identity

__version__ = "0.1.0"

__all__ = [
    "AdditiveMatrix",
    "ClassType",
    "ConfigKind",
    "FaceDescriptor",
    "InternalConsistencyError",
    "OrderMatrix",
    "PairDescriptor",
    "build_pair",
    "character",
    "dedup_faces",
    "detect_configs",
    "dominance_check",
    "enumerate_order_matrices",
    "face_equations",
    "kronecker",
    "marginals_and_pi",
    "murnaghan_probe",
    "order_matrix_from_witness",
    "partitions_of",
    "stability_probe",
    "wellcovering_root_identity",
]
