#pragma once

#include <cstddef>
#include <vector>

namespace jtc {

/// One qudit: D >= 2 level energies in the common frequency unit (hbar = 1).
/// The spin quantum number M = (D-1)/2 is always derived, never stored.
struct QuditSpec {
    std::vector<double> level_frequencies;

    int dimension() const { return static_cast<int>(level_frequencies.size()); }
    int twice_spin() const { return dimension() - 1; }  // 2M = D - 1
    double spin() const { return 0.5 * twice_spin(); }
};

struct ResonatorSpec {
    double frequency = 0.0;  // > 0
};

struct TransmonParams {
    double charging_energy = 0.0;   // E_C
    double josephson_energy = 0.0;  // E_J
};

/// Coupling of one (resonator, qudit) pair. A `uniform` coupling expands to
/// the dipole ladder g_{l,l+1} = g * sqrt(l+1); `explicit` lists the D-1 rung
/// values directly. Couplings are real and one value per rung, which makes
/// the assembled Hamiltonians symmetric by construction.
struct Coupling {
    enum class Kind { Uniform, Explicit };

    Kind kind = Kind::Uniform;
    double uniform_g = 0.0;
    std::vector<double> rungs;  // populated by validate() for both kinds

    static Coupling uniform(double g) {
        Coupling c;
        c.kind = Kind::Uniform;
        c.uniform_g = g;
        return c;
    }
    static Coupling explicit_rungs(std::vector<double> values) {
        Coupling c;
        c.kind = Kind::Explicit;
        c.rungs = std::move(values);
        return c;
    }
};

/// Full device description: K qudits, P resonators, P x K coupling tensor.
struct SystemSpec {
    std::vector<QuditSpec> qudits;
    std::vector<ResonatorSpec> resonators;
    std::vector<std::vector<Coupling>> couplings;  // [p][k]

    std::size_t qudit_count() const { return qudits.size(); }
    std::size_t resonator_count() const { return resonators.size(); }

    /// Rung coupling g_{l,l+1} between resonator p and qudit k.
    /// Requires a validated spec (rung lists expanded).
    double rung(std::size_t p, std::size_t k, int l) const {
        return couplings[p][k].rungs[static_cast<std::size_t>(l)];
    }
};

/// Two-level qudit with the symmetric convention: levels [-w/2, +w/2], so the
/// ground state carries energy -w/2 and the excited one +w/2.
QuditSpec make_qubit(double qubit_freq);

/// Transmon in the three-level (qutrit) approximation. Level energies are
/// [w0, 3 w0, 5 w0 - E_C] with w0 = (sqrt(8 E_J E_C) - E_C) / 2; the
/// anharmonicity is -E_C. Requires the transmon regime E_J > E_C.
QuditSpec make_transmon_qutrit(const TransmonParams& params);

/// Checks every invariant (shapes, finiteness, positivity, transmon regime is
/// checked at construction) and returns the spec with all couplings expanded
/// to explicit rung lists. Errors name the offending qudit/resonator index.
SystemSpec validate(SystemSpec spec);

}  // namespace jtc
