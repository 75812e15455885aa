#pragma once

#include <cstddef>
#include <vector>

#include "jtc/matrix.hpp"
#include "jtc/model.hpp"
#include "jtc/sectors.hpp"

namespace jtc {

/// Dense Hamiltonian block of one excitation sector, rows/columns in the
/// sector's canonical state order. Exactly symmetric by construction.
struct SectorMatrix {
    Sector sector;
    Matrix entries;
};

/// Hamiltonian over the full product basis with every photon occupation
/// capped at `photon_cutoff`. With rwa=true this is permutation-similar to
/// the direct sum of sector blocks; with rwa=false the counter-rotating
/// terms couple sectors N and N+-2. Validation oracle, not a solver path.
struct TruncatedFullMatrix {
    std::vector<BasisState> basis;             // grouped by ascending N, canonical within
    std::vector<ExcitationNumber> excitation;  // per basis state
    Matrix entries;
    bool rwa = true;
    int photon_cutoff = 0;
};

/// H_aa = sum_k w_{m_k,k} + sum_p w_p (n_p + 1/2); H_ab nonzero only when the
/// states differ by one photon in one resonator and one opposite level step
/// in one qudit, with value g_rung * sqrt(max(n_p^a, n_p^b)).
SectorMatrix assemble_sector(const Sector& sector, const SystemSpec& spec);

/// Builds the truncated-Fock matrix by applying the Hamiltonian column by
/// column (raising/lowering operators on each ket), an independent route
/// from the pairwise rule of assemble_sector. Requires photon_cutoff >= 1;
/// refuses bases larger than max_dimension.
TruncatedFullMatrix assemble_truncated_full(const SystemSpec& spec, int photon_cutoff, bool rwa,
                                            std::size_t max_dimension = 4096);

/// Largest |H_ab| over pairs with different excitation numbers. Exactly zero
/// for an RWA matrix; strictly positive with counter-rotating terms and any
/// nonzero coupling.
double block_diagonality_check(const TruncatedFullMatrix& m);

/// True when every state of the sector respects the photon cutoff, i.e. the
/// sector block is reproduced without truncation edge effects.
bool sector_fits_cutoff(const Sector& sector, int photon_cutoff);

}  // namespace jtc
