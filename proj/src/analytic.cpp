#include "jtc/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jtc {

double jc_ground(const JCParams& p) { return -0.5 * p.detuning(); }

DressedStateJC jc_strip(const JCParams& p, int n) {
    if (n < 1) throw std::invalid_argument("jc_strip: n must be >= 1");
    const double delta = p.detuning();
    const double gsn = p.coupling * std::sqrt(static_cast<double>(n));
    const double rabi = std::hypot(gsn, 0.5 * delta);  // sqrt(g^2 n + Delta^2/4)

    DressedStateJC d;
    d.n = n;
    d.e_plus = n * p.resonator_freq + rabi;
    d.e_minus = n * p.resonator_freq - rabi;
    d.theta = 0.5 * std::atan2(2.0 * gsn, -delta);
    d.alpha_plus = std::cos(d.theta);
    d.beta_plus = std::sin(d.theta);
    d.alpha_minus = -d.beta_plus;
    d.beta_minus = d.alpha_plus;
    return d;
}

namespace {

constexpr double kPoleGuard = 1e-12;

// One second-order term (weight * g^2 * c^2) / (e - e_ref); flags a pole when
// the denominator vanishes against the energy scale.
bool add_term(double weight_g2, double c2, double e, double e_ref, double& acc) {
    const double den = e - e_ref;
    if (std::abs(den) <= kPoleGuard * (1.0 + std::abs(e) + std::abs(e_ref))) return false;
    acc += weight_g2 * c2 / den;
    return true;
}

}  // namespace

std::vector<RwaCorrection> rwa_second_order(const JCParams& p, int n_max) {
    if (n_max < 0) throw std::invalid_argument("rwa_second_order: n_max must be >= 0");
    const double g2 = p.coupling * p.coupling;
    const double e0 = jc_ground(p);

    // Strip data up to n_max + 2 (the corrections reach two strips up).
    std::vector<DressedStateJC> strips;
    strips.reserve(static_cast<std::size_t>(n_max) + 2);
    for (int n = 1; n <= n_max + 2; ++n) strips.push_back(jc_strip(p, n));
    const auto& strip = [&](int n) -> const DressedStateJC& {
        return strips[static_cast<std::size_t>(n - 1)];
    };

    std::vector<RwaCorrection> out;
    auto finish = [&](int n, int branch, double e_rwa, double acc, bool ok) {
        RwaCorrection c;
        c.n = n;
        c.branch = branch;
        c.e_rwa = e_rwa;
        if (ok) {
            c.delta2 = acc;
            c.e_corrected = e_rwa + acc;
        } else {
            c.pole = true;
            c.delta2 = std::numeric_limits<double>::quiet_NaN();
            c.e_corrected = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(c);
    };

    {
        const auto& s2 = strip(2);
        double acc = 0.0;
        bool ok = add_term(g2, s2.beta_plus * s2.beta_plus, e0, s2.e_plus, acc);
        ok = add_term(g2, s2.beta_minus * s2.beta_minus, e0, s2.e_minus, acc) && ok;
        finish(0, 0, e0, acc, ok);
    }

    for (int n = 1; n <= n_max; ++n) {
        const auto& sn = strip(n);
        for (int branch : {+1, -1}) {
            const double e = branch > 0 ? sn.e_plus : sn.e_minus;
            const double alpha = branch > 0 ? sn.alpha_plus : sn.alpha_minus;
            const double beta = branch > 0 ? sn.beta_plus : sn.beta_minus;
            double acc = 0.0;
            bool ok = true;

            const auto& up = strip(n + 2);
            const double wu = (n + 1) * g2;
            ok = add_term(wu, alpha * alpha * up.beta_plus * up.beta_plus, e, up.e_plus, acc) && ok;
            ok = add_term(wu, alpha * alpha * up.beta_minus * up.beta_minus, e, up.e_minus, acc) && ok;

            if (n == 1) {
                // No downward coupling: a photon-less excited state is
                // annihilated by the counter-rotating lowering term.
            } else if (n == 2) {
                ok = add_term(g2, beta * beta, e, e0, acc) && ok;
            } else {
                const auto& dn = strip(n - 2);
                const double wd = (n - 1) * g2;
                ok = add_term(wd, alpha * alpha * dn.beta_plus * dn.beta_plus, e, dn.e_plus, acc) && ok;
                ok = add_term(wd, alpha * alpha * dn.beta_minus * dn.beta_minus, e, dn.e_minus, acc) &&
                     ok;
            }
            finish(n, branch, e, acc, ok);
        }
    }
    return out;
}

TCSolution tc_one_excitation(double omega, const std::vector<double>& couplings) {
    const int k = static_cast<int>(couplings.size());
    if (k < 1) throw std::invalid_argument("tc_one_excitation: needs at least one qubit");

    TCSolution sol;
    sol.k = k;
    sol.omega = omega;
    sol.couplings = couplings;
    sol.big_omega = 0.5 * (3.0 - k) * omega;

    double sum_sq = 0.0;
    for (double g : couplings) sum_sq += g * g;
    sol.mean_coupling = std::sqrt(sum_sq / k);

    const std::size_t dim = static_cast<std::size_t>(k) + 1;
    if (sum_sq == 0.0) {
        // Fully decoupled: (K+1)-fold degeneracy, identity basis.
        sol.degenerate = true;
        sol.e_plus = sol.e_minus = sol.big_omega;
        sol.bright_plus.assign(dim, 0.0);
        sol.bright_minus.assign(dim, 0.0);
        sol.bright_plus[0] = 1.0;
        sol.bright_minus[0] = 1.0;
        for (int i = 1; i <= k; ++i) {
            std::vector<double> e(dim, 0.0);
            e[static_cast<std::size_t>(i)] = 1.0;
            sol.dark_basis.push_back(std::move(e));
        }
        return sol;
    }

    const double split = std::sqrt(static_cast<double>(k)) * sol.mean_coupling;
    sol.e_plus = sol.big_omega + split;
    sol.e_minus = sol.big_omega - split;

    const double qnorm = std::sqrt(2.0 * k) * sol.mean_coupling;  // sqrt(2 sum g^2)
    sol.bright_plus.assign(dim, 0.0);
    sol.bright_minus.assign(dim, 0.0);
    sol.bright_plus[0] = 0.5 * std::sqrt(2.0);
    sol.bright_minus[0] = -0.5 * std::sqrt(2.0);
    for (int i = 0; i < k; ++i) {
        const double c = couplings[static_cast<std::size_t>(i)] / qnorm;
        sol.bright_plus[static_cast<std::size_t>(i) + 1] = c;
        sol.bright_minus[static_cast<std::size_t>(i) + 1] = c;
    }

    // Dark space: orthonormal basis of { d : sum_k d_k g_k = 0 }, zero photon
    // amplitude. Gram-Schmidt over the unit vectors projected off the
    // coupling direction, in index order, keeps the construction
    // deterministic; for K = 2 it reduces to (g2, -g1)/|g|.
    std::vector<std::vector<double>> dark;
    for (int seed = 0; seed < k && static_cast<int>(dark.size()) < k - 1; ++seed) {
        std::vector<double> v(static_cast<std::size_t>(k), 0.0);
        v[static_cast<std::size_t>(seed)] = 1.0;
        const double proj = couplings[static_cast<std::size_t>(seed)] / sum_sq;
        for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] -= proj * couplings[static_cast<std::size_t>(i)];
        for (const auto& u : dark) {
            double dot = 0.0;
            for (int i = 0; i < k; ++i) dot += v[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i) + 1];
            for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] -= dot * u[static_cast<std::size_t>(i) + 1];
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-10) continue;  // seed linearly dependent on earlier picks

        std::vector<double> d(dim, 0.0);
        for (int i = 0; i < k; ++i) d[static_cast<std::size_t>(i) + 1] = v[static_cast<std::size_t>(i)] / norm;
        std::size_t arg = 0;
        double best = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            if (std::abs(d[i]) > best) {
                best = std::abs(d[i]);
                arg = i;
            }
        if (d[arg] < 0.0)
            for (auto& x : d) x = -x;
        dark.push_back(std::move(d));
    }
    sol.dark_basis = std::move(dark);
    return sol;
}

}  // namespace jtc
