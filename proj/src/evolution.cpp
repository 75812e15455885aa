#include "jtc/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "jtc/assembly.hpp"
#include "jtc/eigen.hpp"

namespace jtc {

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& b : blocks)
        for (const auto& a : b.amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

StateVector StateVector::from_terms(std::shared_ptr<const SystemSpec> spec,
                                    const std::vector<std::pair<BasisState, Complex>>& terms) {
    if (!spec) throw std::invalid_argument("StateVector: null spec");
    if (terms.empty()) throw std::invalid_argument("StateVector: no terms");

    std::map<int, StateVector::Block> by_sector;  // keyed by 2N
    for (const auto& [state, amp] : terms) {
        const ExcitationNumber n = excitation_number(state, *spec);  // validates the shape
        auto it = by_sector.find(n.twice);
        if (it == by_sector.end()) {
            Sector sector = enumerate_sector(n, *spec);
            StateVector::Block block{std::move(sector), {}};
            block.amplitudes.assign(block.sector.dimension(), Complex{});
            it = by_sector.emplace(n.twice, std::move(block)).first;
        }
        const std::ptrdiff_t idx = it->second.sector.index_of(state);
        if (idx < 0) throw std::invalid_argument("StateVector: state " + state.label() +
                                                 " missing from its sector");
        it->second.amplitudes[static_cast<std::size_t>(idx)] += amp;
    }

    StateVector psi;
    psi.spec = std::move(spec);
    for (auto& [twice, block] : by_sector) psi.blocks.push_back(std::move(block));

    const double n = psi.norm();
    if (n < 1e-14) throw std::invalid_argument("StateVector: zero norm");
    for (auto& b : psi.blocks)
        for (auto& a : b.amplitudes) a /= n;
    return psi;
}

Propagator build_propagator(const SystemSpec& spec, ExcitationNumber n_max, double dt) {
    Propagator prop;
    prop.spec = std::make_shared<const SystemSpec>(spec);
    prop.dt = dt;
    prop.n_max = n_max;

    for (const auto& s : spectrum(spec, n_max)) {
        const std::size_t dim = s.sector.dimension();
        CMatrix u(dim, dim);
        if (dt == 0.0) {
            u = CMatrix::identity(dim);
        } else {
            for (std::size_t nu = 0; nu < dim; ++nu) {
                const double phase = std::remainder(s.eigen.eigenvalues[nu] * dt,
                                                    2.0 * std::numbers::pi);
                const Complex factor{std::cos(phase), -std::sin(phase)};
                for (std::size_t l = 0; l < dim; ++l) {
                    const double cl = s.eigen.eigenvectors(l, nu);
                    if (cl == 0.0) continue;
                    for (std::size_t lp = 0; lp < dim; ++lp)
                        u(l, lp) += factor * cl * s.eigen.eigenvectors(lp, nu);
                }
            }
        }
        prop.blocks.push_back(Propagator::Block{s.sector, std::move(u)});
    }
    return prop;
}

namespace {

const Propagator::Block& block_for(const Propagator& prop, const ExcitationNumber& n) {
    for (const auto& b : prop.blocks)
        if (b.sector.n == n) return b;
    throw std::invalid_argument("evolve: state occupies sector N=" + n.str() +
                                " outside the propagator truncation N_max=" + prop.n_max.str());
}

}  // namespace

std::vector<StateVector> evolve(const StateVector& state, const Propagator& prop, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    for (const auto& b : state.blocks) block_for(prop, b.sector.n);

    std::vector<StateVector> trajectory;
    trajectory.reserve(static_cast<std::size_t>(steps) + 1);
    trajectory.push_back(state);

    for (int step = 0; step < steps; ++step) {
        const StateVector& prev = trajectory.back();
        StateVector next;
        next.spec = prev.spec;
        next.blocks.reserve(prev.blocks.size());
        for (const auto& b : prev.blocks) {
            const auto& u = block_for(prop, b.sector.n).u;
            const std::size_t dim = b.amplitudes.size();
            StateVector::Block nb{b.sector, std::vector<Complex>(dim)};
            for (std::size_t i = 0; i < dim; ++i) {
                Complex acc{};
                for (std::size_t j = 0; j < dim; ++j) acc += u(i, j) * b.amplitudes[j];
                nb.amplitudes[i] = acc;
            }
            next.blocks.push_back(std::move(nb));
        }
        trajectory.push_back(std::move(next));
    }
    return trajectory;
}

double expectation(const StateVector& state, const Observable& obs) {
    const SystemSpec& spec = *state.spec;
    switch (obs.kind) {
        case Observable::Kind::Energy: {
            double e = 0.0;
            for (const auto& b : state.blocks) {
                const Matrix h = assemble_sector(b.sector, spec).entries;
                const std::size_t dim = b.amplitudes.size();
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        e += (std::conj(b.amplitudes[i]) * h(i, j) * b.amplitudes[j]).real();
            }
            return e;
        }
        case Observable::Kind::PhotonNumber: {
            if (obs.resonator >= spec.resonator_count())
                throw std::invalid_argument("expectation: resonator index out of range");
            double v = 0.0;
            for (const auto& b : state.blocks)
                for (std::size_t l = 0; l < b.amplitudes.size(); ++l)
                    v += std::norm(b.amplitudes[l]) * b.sector.states[l].photons[obs.resonator];
            return v;
        }
        case Observable::Kind::LevelPopulation: {
            if (obs.qudit >= spec.qudit_count())
                throw std::invalid_argument("expectation: qudit index out of range");
            if (obs.level < 0 || obs.level >= spec.qudits[obs.qudit].dimension())
                throw std::invalid_argument("expectation: level index out of range");
            double v = 0.0;
            for (const auto& b : state.blocks)
                for (std::size_t l = 0; l < b.amplitudes.size(); ++l)
                    if (b.sector.states[l].levels[obs.qudit] == obs.level)
                        v += std::norm(b.amplitudes[l]);
            return v;
        }
        case Observable::Kind::Excitation: {
            double v = 0.0;
            for (const auto& b : state.blocks) {
                double w = 0.0;
                for (const auto& a : b.amplitudes) w += std::norm(a);
                v += w * b.sector.n.value();
            }
            return v;
        }
    }
    throw std::logic_error("expectation: unknown observable");
}

}  // namespace jtc
