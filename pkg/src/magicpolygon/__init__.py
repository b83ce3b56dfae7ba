"""Magic polygons: construction, verification, enumeration and proof checks."""

from .construct import construct, extend_midpoint, extend_vertex, f_initial, range_partition_check
from .core import (
    CENTER,
    DomainError,
    Labeling,
    Line,
    LineKind,
    NodeId,
    NodeKind,
    NonexistenceError,
    VerificationReport,
    center_value,
    lines,
    magic_sum,
    midpoint,
    verify,
    vertex,
)
from .proofcheck import build_system, check_odd_contradiction, rref
from .search import EnumerationResult, Mode, SearchConfig, enumerate_magic, verify_nonexistence
from .symmetry import SymmetryElement, apply, canonical_form, orbit

__version__ = "0.1.0"
