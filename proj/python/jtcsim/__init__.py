"""Excitation-sector solver for coupled qudit/resonator systems.

Thin python layer over the C++ core: build a `System`, enumerate its
conserved-excitation sectors, assemble and diagonalize the sector blocks, and
evolve states; closed-form Jaynes-Cummings and Tavis-Cummings results are
exposed for cross-checks.
"""

from ._core import (
    System,
    __version__,
    assemble_sector,
    assemble_truncated_full,
    block_diagonality_check,
    enumerate_sector,
    evolve,
    excitation_number,
    jacobi_eigh,
    jc_ground,
    jc_strip,
    make_qubit,
    make_transmon_qutrit,
    rwa_second_order,
    sector_dimensions,
    spectrum,
    tc_one_excitation,
)

__all__ = [
    "System",
    "__version__",
    "assemble_sector",
    "assemble_truncated_full",
    "block_diagonality_check",
    "enumerate_sector",
    "evolve",
    "excitation_number",
    "jacobi_eigh",
    "jc_ground",
    "jc_strip",
    "make_qubit",
    "make_transmon_qutrit",
    "rwa_second_order",
    "sector_dimensions",
    "spectrum",
    "tc_one_excitation",
]
