#include "jtc/sectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jtc {

std::string ExcitationNumber::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

ExcitationNumber parse_excitation(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("excitation number: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const int num = std::stoi(text.substr(0, slash));
        const int den = std::stoi(text.substr(slash + 1));
        if (den == 1) return ExcitationNumber::from_int(num);
        if (den == 2) return ExcitationNumber::from_twice(num);
        throw std::invalid_argument("excitation number: denominator must be 1 or 2 in '" + text + "'");
    }
    if (text.find('.') != std::string::npos) {
        const double v = std::stod(text);
        const double t = 2.0 * v;
        const double r = std::round(t);
        if (std::abs(t - r) > 1e-9)
            throw std::invalid_argument("excitation number: '" + text +
                                        "' is not an integer or half-integer");
        return ExcitationNumber::from_twice(static_cast<int>(r));
    }
    return ExcitationNumber::from_int(std::stoi(text));
}

int BasisState::total_photons() const {
    return std::accumulate(photons.begin(), photons.end(), 0);
}

std::string BasisState::label() const {
    std::string s = "|";
    for (std::size_t p = 0; p < photons.size(); ++p) {
        if (p) s += ',';
        s += std::to_string(photons[p]);
    }
    s += ';';
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(levels[k]);
    }
    s += '>';
    return s;
}

BasisState parse_basis_state(const std::string& text, const SystemSpec& spec) {
    std::string t = text;
    if (!t.empty() && t.front() == '|') t.erase(t.begin());
    if (!t.empty() && t.back() == '>') t.pop_back();
    const auto semi = t.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("basis state '" + text + "': expected '|n,..;m,..>'");

    auto parse_list = [&](const std::string& part) {
        std::vector<int> out;
        std::size_t pos = 0;
        while (pos <= part.size()) {
            const auto comma = part.find(',', pos);
            const std::string tok =
                part.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) throw std::invalid_argument("basis state '" + text + "': empty field");
            out.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    };

    BasisState s{parse_list(t.substr(0, semi)), parse_list(t.substr(semi + 1))};
    if (s.photons.size() != spec.resonator_count() || s.levels.size() != spec.qudit_count())
        throw std::invalid_argument("basis state '" + text + "': shape does not match the device (" +
                                    std::to_string(spec.resonator_count()) + " resonators, " +
                                    std::to_string(spec.qudit_count()) + " qudits)");
    for (std::size_t p = 0; p < s.photons.size(); ++p)
        if (s.photons[p] < 0)
            throw std::invalid_argument("basis state '" + text + "': negative photon number");
    for (std::size_t k = 0; k < s.levels.size(); ++k)
        if (s.levels[k] < 0 || s.levels[k] >= spec.qudits[k].dimension())
            throw std::invalid_argument("basis state '" + text + "': level out of range for qudit " +
                                        std::to_string(k));
    return s;
}

bool canonical_less(const BasisState& a, const BasisState& b) {
    const int ta = a.total_photons();
    const int tb = b.total_photons();
    if (ta != tb) return ta > tb;
    if (a.photons != b.photons) return a.photons > b.photons;
    return a.levels > b.levels;
}

std::ptrdiff_t Sector::index_of(const BasisState& state) const {
    const auto it = std::find(states.begin(), states.end(), state);
    if (it == states.end()) return -1;
    return it - states.begin();
}

ExcitationNumber min_excitation(const SystemSpec& spec) {
    int twice = 0;
    for (const auto& q : spec.qudits) twice -= q.twice_spin();
    return ExcitationNumber::from_twice(twice);
}

ExcitationNumber excitation_number(const BasisState& s, const SystemSpec& spec) {
    if (s.photons.size() != spec.resonator_count() || s.levels.size() != spec.qudit_count())
        throw std::invalid_argument("excitation_number: state shape does not match the spec");
    int twice = 0;
    for (std::size_t p = 0; p < s.photons.size(); ++p) {
        if (s.photons[p] < 0) throw std::invalid_argument("excitation_number: negative photon count");
        twice += 2 * s.photons[p];
    }
    for (std::size_t k = 0; k < s.levels.size(); ++k) {
        if (s.levels[k] < 0 || s.levels[k] >= spec.qudits[k].dimension())
            throw std::invalid_argument("excitation_number: level out of range for qudit " +
                                        std::to_string(k));
        twice += 2 * s.levels[k] - spec.qudits[k].twice_spin();
    }
    return ExcitationNumber::from_twice(twice);
}

namespace {

// Appends every photon tuple distributing `budget` quanta over resonators
// p..P-1 on top of the partially filled state.
void fill_photons(const SystemSpec& spec, int budget, std::size_t p, BasisState& state,
                  std::vector<BasisState>& out) {
    if (p + 1 == spec.resonator_count()) {
        state.photons[p] = budget;
        out.push_back(state);
        return;
    }
    for (int n = budget; n >= 0; --n) {
        state.photons[p] = n;
        fill_photons(spec, budget - n, p + 1, state, out);
    }
}

// Enumerates qudit level tuples with total excitation <= budget, then hands
// the photon remainder to fill_photons.
void fill_levels(const SystemSpec& spec, int budget, std::size_t k, BasisState& state,
                 std::vector<BasisState>& out) {
    if (k == spec.qudit_count()) {
        fill_photons(spec, budget, 0, state, out);
        return;
    }
    const int top = std::min(spec.qudits[k].dimension() - 1, budget);
    for (int m = 0; m <= top; ++m) {
        state.levels[k] = m;
        fill_levels(spec, budget - m, k + 1, state, out);
    }
}

}  // namespace

Sector enumerate_sector(ExcitationNumber n, const SystemSpec& spec) {
    const ExcitationNumber n_min = min_excitation(spec);
    if (n < n_min)
        throw std::out_of_range("sector N=" + n.str() + " is empty: below the minimum N_min=" +
                                n_min.str());
    if ((n.twice - n_min.twice) % 2 != 0)
        throw std::invalid_argument("sector N=" + n.str() + " is empty: this device has sectors at " +
                                    n_min.str() + " + integers");

    const int budget = (n.twice - n_min.twice) / 2;  // total photons + level excitations
    Sector sector{n, {}};
    BasisState scratch{std::vector<int>(spec.resonator_count(), 0),
                       std::vector<int>(spec.qudit_count(), 0)};
    fill_levels(spec, budget, 0, scratch, sector.states);
    std::sort(sector.states.begin(), sector.states.end(), canonical_less);
    return sector;
}

std::vector<std::pair<ExcitationNumber, std::size_t>> sector_dimensions(ExcitationNumber n_max,
                                                                        const SystemSpec& spec) {
    const ExcitationNumber n_min = min_excitation(spec);
    if (n_max < n_min)
        throw std::out_of_range("sector_dimensions: N_max=" + n_max.str() + " below N_min=" +
                                n_min.str());
    std::vector<std::pair<ExcitationNumber, std::size_t>> dims;
    for (ExcitationNumber n = n_min; n <= n_max; n = n.next())
        dims.emplace_back(n, enumerate_sector(n, spec).dimension());
    return dims;
}

}  // namespace jtc
