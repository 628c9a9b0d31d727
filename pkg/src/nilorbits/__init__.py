"""Nilpotent orbits of non-compact real classical simple Lie algebras.

Orbits are labelled by (signed) Young diagrams; the package enumerates
them, evaluates closed-form dimensions of H^1 and H^2, and checks the
combinatorics against exact sl2-triple and Gram matrix realizations.
"""
from .cohomology import CohomologyResult, Status, cohomology, h1, h2
from .exactlin import KERNEL_BACKEND, ExactMatrix, Quaternion, ScalarField, congruence_signature, nullspace_dim_real, rank
from .orbit_enum import OrbitClass, RealForm, SO, SOStar, SU, SlH, SlR, SpPQ, SpR, enumerate_orbits, parse_orbit
from .partition import Partition, classify, enumerate_partitions, predicates
from .signed_diagram import SignMatrix, SignedDiagram, enumerate_set, in_S_prime, parse_diagram
from .structure import centralizer_structure, maximal_compact_structure

__version__ = "0.1.0"
