#include "jtc/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jtc {

namespace {

double diagonal_energy(const BasisState& s, const SystemSpec& spec) {
    double e = 0.0;
    for (std::size_t k = 0; k < spec.qudit_count(); ++k)
        e += spec.qudits[k].level_frequencies[static_cast<std::size_t>(s.levels[k])];
    for (std::size_t p = 0; p < spec.resonator_count(); ++p)
        e += spec.resonators[p].frequency * (s.photons[p] + 0.5);
    return e;
}

}  // namespace

SectorMatrix assemble_sector(const Sector& sector, const SystemSpec& spec) {
    const std::size_t dim = sector.dimension();
    for (const auto& s : sector.states)
        if (s.photons.size() != spec.resonator_count() || s.levels.size() != spec.qudit_count())
            throw std::invalid_argument("assemble_sector: sector states do not match the spec");

    Matrix h(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
        h(a, a) = diagonal_energy(sector.states[a], spec);

    // Off-diagonal selection rule: exactly one resonator changes by one photon
    // and exactly one qudit steps one level the opposite way.
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a + 1; b < dim; ++b) {
            const BasisState& sa = sector.states[a];
            const BasisState& sb = sector.states[b];

            int photon_diffs = 0, level_diffs = 0;
            std::size_t p = 0, k = 0;
            int dn = 0, dm = 0;
            for (std::size_t i = 0; i < sa.photons.size(); ++i) {
                if (sa.photons[i] != sb.photons[i]) {
                    ++photon_diffs;
                    p = i;
                    dn = sa.photons[i] - sb.photons[i];
                }
            }
            for (std::size_t i = 0; i < sa.levels.size(); ++i) {
                if (sa.levels[i] != sb.levels[i]) {
                    ++level_diffs;
                    k = i;
                    dm = sa.levels[i] - sb.levels[i];
                }
            }
            if (photon_diffs != 1 || level_diffs != 1) continue;
            if (std::abs(dn) != 1 || dm != -dn) continue;

            const int rung = std::min(sa.levels[k], sb.levels[k]);
            const int n_hi = std::max(sa.photons[p], sb.photons[p]);
            const double value = spec.rung(p, k, rung) * std::sqrt(static_cast<double>(n_hi));
            h(a, b) = value;
            h(b, a) = value;
        }
    }
    return SectorMatrix{sector, std::move(h)};
}

bool sector_fits_cutoff(const Sector& sector, int photon_cutoff) {
    for (const auto& s : sector.states)
        for (int n : s.photons)
            if (n > photon_cutoff) return false;
    return true;
}

TruncatedFullMatrix assemble_truncated_full(const SystemSpec& spec, int photon_cutoff, bool rwa,
                                            std::size_t max_dimension) {
    if (photon_cutoff < 1) throw std::invalid_argument("assemble_truncated_full: cutoff must be >= 1");

    const std::size_t base = static_cast<std::size_t>(photon_cutoff) + 1;
    std::size_t dim = 1;
    for (std::size_t p = 0; p < spec.resonator_count(); ++p) dim *= base;
    for (const auto& q : spec.qudits) dim *= static_cast<std::size_t>(q.dimension());
    if (dim > max_dimension)
        throw std::invalid_argument("assemble_truncated_full: basis dimension " + std::to_string(dim) +
                                    " exceeds the limit " + std::to_string(max_dimension));

    // Mixed-radix code over (photons, levels) gives O(1) state lookup.
    const std::size_t n_res = spec.resonator_count();
    const std::size_t n_qud = spec.qudit_count();
    std::vector<std::size_t> stride(n_res + n_qud);
    {
        std::size_t s = 1;
        for (std::size_t i = n_res + n_qud; i-- > 0;) {
            stride[i] = s;
            s *= (i < n_res) ? base : static_cast<std::size_t>(spec.qudits[i - n_res].dimension());
        }
    }
    auto encode = [&](const BasisState& st) {
        std::size_t code = 0;
        for (std::size_t p = 0; p < n_res; ++p)
            code += static_cast<std::size_t>(st.photons[p]) * stride[p];
        for (std::size_t k = 0; k < n_qud; ++k)
            code += static_cast<std::size_t>(st.levels[k]) * stride[n_res + k];
        return code;
    };

    std::vector<BasisState> all(dim);
    for (std::size_t code = 0; code < dim; ++code) {
        BasisState st{std::vector<int>(n_res), std::vector<int>(n_qud)};
        std::size_t rest = code;
        for (std::size_t p = 0; p < n_res; ++p) {
            st.photons[p] = static_cast<int>(rest / stride[p]);
            rest %= stride[p];
        }
        for (std::size_t k = 0; k < n_qud; ++k) {
            st.levels[k] = static_cast<int>(rest / stride[n_res + k]);
            rest %= stride[n_res + k];
        }
        all[code] = std::move(st);
    }

    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const auto nx = excitation_number(all[x], spec);
        const auto ny = excitation_number(all[y], spec);
        if (nx != ny) return nx < ny;
        return canonical_less(all[x], all[y]);
    });

    TruncatedFullMatrix full;
    full.rwa = rwa;
    full.photon_cutoff = photon_cutoff;
    full.basis.reserve(dim);
    full.excitation.reserve(dim);
    std::vector<std::size_t> row_of(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        row_of[order[r]] = r;
        full.basis.push_back(all[order[r]]);
        full.excitation.push_back(excitation_number(all[order[r]], spec));
    }

    Matrix h(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const BasisState& st = full.basis[col];
        h(col, col) += diagonal_energy(st, spec);

        for (std::size_t p = 0; p < n_res; ++p) {
            for (std::size_t k = 0; k < n_qud; ++k) {
                const int m = st.levels[k];
                const int n = st.photons[p];
                const int d = spec.qudits[k].dimension();

                // a_p^dag S_+ : photon up, level down.
                if (m >= 1 && n + 1 <= photon_cutoff) {
                    BasisState t = st;
                    ++t.photons[p];
                    --t.levels[k];
                    h(row_of[encode(t)], col) += std::sqrt(n + 1.0) * spec.rung(p, k, m - 1);
                }
                // a_p S_- : photon down, level up.
                if (n >= 1 && m + 1 <= d - 1) {
                    BasisState t = st;
                    --t.photons[p];
                    ++t.levels[k];
                    h(row_of[encode(t)], col) += std::sqrt(static_cast<double>(n)) * spec.rung(p, k, m);
                }
                if (!rwa) {
                    // Counter-rotating pair -(a_p^dag S_- + a_p S_+), changes N by +-2.
                    if (m + 1 <= d - 1 && n + 1 <= photon_cutoff) {
                        BasisState t = st;
                        ++t.photons[p];
                        ++t.levels[k];
                        h(row_of[encode(t)], col) -= std::sqrt(n + 1.0) * spec.rung(p, k, m);
                    }
                    if (n >= 1 && m >= 1) {
                        BasisState t = st;
                        --t.photons[p];
                        --t.levels[k];
                        h(row_of[encode(t)], col) -=
                            std::sqrt(static_cast<double>(n)) * spec.rung(p, k, m - 1);
                    }
                }
            }
        }
    }
    full.entries = std::move(h);
    return full;
}

double block_diagonality_check(const TruncatedFullMatrix& m) {
    double worst = 0.0;
    const std::size_t dim = m.basis.size();
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b)
            if (m.excitation[a] != m.excitation[b])
                worst = std::max(worst, std::abs(m.entries(a, b)));
    return worst;
}

}  // namespace jtc
