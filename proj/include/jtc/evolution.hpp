#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "jtc/matrix.hpp"
#include "jtc/model.hpp"
#include "jtc/sectors.hpp"

namespace jtc {

/// Normalized superposition state, grouped by excitation sector. Amplitudes
/// are aligned with the sector's canonical basis order. The excitation
/// number is conserved by the dynamics, so blocks never mix.
struct StateVector {
    struct Block {
        Sector sector;
        std::vector<Complex> amplitudes;
    };

    std::shared_ptr<const SystemSpec> spec;
    std::vector<Block> blocks;  // ascending N

    double norm() const;

    /// Builds and normalizes a state from (basis state, amplitude) terms.
    /// Rejects invalid states and zero norm.
    static StateVector from_terms(std::shared_ptr<const SystemSpec> spec,
                                  const std::vector<std::pair<BasisState, Complex>>& terms);
};

/// Spectral-decomposition propagator for one time step: per-sector unitary
/// blocks U_N(dt) with entries sum_nu exp(-i E_nu dt) c_{nu l} c_{nu l'}.
struct Propagator {
    struct Block {
        Sector sector;
        CMatrix u;
    };

    std::shared_ptr<const SystemSpec> spec;
    double dt = 0.0;
    ExcitationNumber n_max;
    std::vector<Block> blocks;  // ascending N, from N_min to n_max
};

/// Diagonalizes every sector up to n_max and assembles the U_N blocks.
/// Phases use argument reduction of E*dt modulo 2 pi, so long times do not
/// lose precision. dt = 0 yields exact identity blocks.
Propagator build_propagator(const SystemSpec& spec, ExcitationNumber n_max, double dt);

/// Applies the propagator `steps` times; returns the trajectory including
/// the initial state (steps + 1 entries). States supported on sectors
/// outside the propagator are rejected.
std::vector<StateVector> evolve(const StateVector& state, const Propagator& prop, int steps);

struct Observable {
    enum class Kind { Energy, PhotonNumber, LevelPopulation, Excitation };

    Kind kind = Kind::Energy;
    std::size_t resonator = 0;  // PhotonNumber
    std::size_t qudit = 0;      // LevelPopulation
    int level = 0;              // LevelPopulation

    static Observable energy() { return {Kind::Energy, 0, 0, 0}; }
    static Observable photon_number(std::size_t p) { return {Kind::PhotonNumber, p, 0, 0}; }
    static Observable level_population(std::size_t k, int m) {
        return {Kind::LevelPopulation, 0, k, m};
    }
    static Observable excitation() { return {Kind::Excitation, 0, 0, 0}; }
};

/// <psi|O|psi>. Energy assembles the sector blocks on demand; the other
/// observables are diagonal in the product basis.
double expectation(const StateVector& state, const Observable& obs);

}  // namespace jtc
