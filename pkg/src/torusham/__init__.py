"""Hamiltonicity of pushed and rectangle-deleted products of two directed cycles."""
from .arith import DomainError, Moduli, crt, gcd, lcm
from .characterize import (
    Condition,
    Verdict,
    is_deleted_rect_hamiltonian,
    is_pushed_product_hamiltonian,
    pushed_equals_deleted,
)
from .construct import (
    CycleCover,
    HamCycle,
    KnotClass,
    NoCycleCover,
    NotHamiltonian,
    SizeLimitError,
    build_cycle_cover,
    build_deleted_ham_cycle,
    build_pushed_ham_cycles,
    is_single_cycle,
    knot_class,
)
from .grid import Rectangle, TorusDigraph, Vertex
from .oracle import EnumerationResult, OracleLimitError, enumerate_cycle_covers, enumerate_ham_cycles

__version__ = "0.1.0"
