#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jtc/matrix.hpp"
#include "jtc/model.hpp"
#include "jtc/sectors.hpp"

namespace jtc {

/// Eigenvalues ascending; eigenvectors are the matching orthonormal columns.
/// Sign convention: in every column the first component of largest magnitude
/// is positive. Coefficient c_{N,nu,l} = eigenvectors(l, nu).
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(double off_norm, int sweeps)
        : std::runtime_error("jacobi_eigh: no convergence after " + std::to_string(sweeps) +
                             " sweeps, off-diagonal norm " + std::to_string(off_norm)),
          off_norm(off_norm),
          sweeps(sweeps) {}
    double off_norm;
    int sweeps;
};

/// Cyclic-by-rows Jacobi diagonalization of a real symmetric matrix.
/// Stops when the off-diagonal Frobenius norm drops below tol * ||A||_F.
/// Deterministic: fixed sweep order, fixed sign convention, so identical
/// input gives bit-identical output. Rejects inputs whose asymmetry exceeds
/// 1e-13 relative to the largest entry.
EigenDecomposition jacobi_eigh(const Matrix& a, double tol = 1e-12, int max_sweeps = 50);

struct SectorSpectrum {
    Sector sector;
    EigenDecomposition eigen;
};

/// One decomposition per sector, N = N_min ... N_max. Sectors are processed
/// independently; eigensolver errors propagate.
std::vector<SectorSpectrum> spectrum(const SystemSpec& spec, ExcitationNumber n_max);

}  // namespace jtc
