#include "jtc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jtc {

QuditSpec make_qubit(double qubit_freq) {
    return QuditSpec{{-0.5 * qubit_freq, 0.5 * qubit_freq}};
}

QuditSpec make_transmon_qutrit(const TransmonParams& params) {
    const double ec = params.charging_energy;
    const double ej = params.josephson_energy;
    if (!(ec > 0.0) || !std::isfinite(ec))
        throw std::invalid_argument("transmon: E_C must be positive and finite");
    if (!(ej > 0.0) || !std::isfinite(ej))
        throw std::invalid_argument("transmon: E_J must be positive and finite");
    if (!(ej / ec > 1.0))
        throw std::invalid_argument("transmon: outside the transmon regime, E_J/E_C = " +
                                    std::to_string(ej / ec) + " <= 1");
    const double w0 = 0.5 * (std::sqrt(8.0 * ej * ec) - ec);
    return QuditSpec{{w0, 3.0 * w0, 5.0 * w0 - ec}};
}

SystemSpec validate(SystemSpec spec) {
    if (spec.qudits.empty()) throw std::invalid_argument("system: needs at least one qudit");
    if (spec.resonators.empty()) throw std::invalid_argument("system: needs at least one resonator");

    for (std::size_t k = 0; k < spec.qudits.size(); ++k) {
        const auto& q = spec.qudits[k];
        if (q.dimension() < 2)
            throw std::invalid_argument("qudit " + std::to_string(k) + ": dimension must be >= 2");
        for (double w : q.level_frequencies)
            if (!std::isfinite(w))
                throw std::invalid_argument("qudit " + std::to_string(k) +
                                            ": non-finite level frequency");
    }
    for (std::size_t p = 0; p < spec.resonators.size(); ++p) {
        const double w = spec.resonators[p].frequency;
        if (!std::isfinite(w) || !(w > 0.0))
            throw std::invalid_argument("resonator " + std::to_string(p) +
                                        ": frequency must be positive, got " + std::to_string(w));
    }

    if (spec.couplings.size() != spec.resonator_count())
        throw std::invalid_argument("couplings: expected " + std::to_string(spec.resonator_count()) +
                                    " rows (one per resonator), got " +
                                    std::to_string(spec.couplings.size()));
    for (std::size_t p = 0; p < spec.couplings.size(); ++p) {
        auto& row = spec.couplings[p];
        if (row.size() != spec.qudit_count())
            throw std::invalid_argument("couplings row " + std::to_string(p) + ": expected " +
                                        std::to_string(spec.qudit_count()) + " entries, got " +
                                        std::to_string(row.size()));
        for (std::size_t k = 0; k < row.size(); ++k) {
            auto& c = row[k];
            const int n_rungs = spec.qudits[k].dimension() - 1;
            if (c.kind == Coupling::Kind::Uniform) {
                if (!std::isfinite(c.uniform_g))
                    throw std::invalid_argument("coupling (" + std::to_string(p) + "," +
                                                std::to_string(k) + "): non-finite value");
                c.rungs.resize(static_cast<std::size_t>(n_rungs));
                for (int l = 0; l < n_rungs; ++l)
                    c.rungs[static_cast<std::size_t>(l)] = c.uniform_g * std::sqrt(l + 1.0);
            } else {
                if (static_cast<int>(c.rungs.size()) != n_rungs)
                    throw std::invalid_argument(
                        "coupling (" + std::to_string(p) + "," + std::to_string(k) + "): expected " +
                        std::to_string(n_rungs) + " rung values, got " +
                        std::to_string(c.rungs.size()));
                for (double g : c.rungs)
                    if (!std::isfinite(g))
                        throw std::invalid_argument("coupling (" + std::to_string(p) + "," +
                                                    std::to_string(k) + "): non-finite rung");
            }
        }
    }
    return spec;
}

}  // namespace jtc
