#include "jtc/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "jtc/analytic.hpp"
#include "jtc/assembly.hpp"
#include "jtc/device_json.hpp"
#include "jtc/eigen.hpp"
#include "jtc/evolution.hpp"
#include "jtc/model.hpp"
#include "jtc/sectors.hpp"
#include "jtc/version.hpp"

namespace jtc::cli {

namespace {

using nlohmann::json;

// 17 significant digits round-trip doubles exactly; CSV uses this everywhere.
std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex16(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Output sink: --out writes a file, otherwise the injected stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& os() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::vector<double> grid_values(double from, double to, int steps) {
    if (steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
    if (!(to > from)) throw std::invalid_argument("grid must be strictly increasing (from < to)");
    std::vector<double> v(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        v[static_cast<std::size_t>(i)] = from + i * (to - from) / (steps - 1);
    return v;
}

// Runs f(i) for i in [0, n); grid points are independent, so they are farmed
// out to async workers and collected in index order.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    const unsigned hw = std::thread::hardware_concurrency();
    if (n < 16 || hw < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(hw, n);
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers) f(i);
        }));
    }
    for (auto& fut : futures) fut.get();
}

struct SweepTarget {
    enum class Kind { QuditShift, TransmonEJ, CouplingScale, ResonatorFreq };
    Kind kind = Kind::QuditShift;
    std::size_t p = 0;
    std::size_t k = 0;
};

std::size_t parse_index(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '[')
        throw std::invalid_argument("sweep target: expected '[' in '" + text + "'");
    const auto close = text.find(']', pos);
    if (close == std::string::npos)
        throw std::invalid_argument("sweep target: missing ']' in '" + text + "'");
    const int idx = std::stoi(text.substr(pos + 1, close - pos - 1));
    if (idx < 0) throw std::invalid_argument("sweep target: negative index in '" + text + "'");
    pos = close + 1;
    return static_cast<std::size_t>(idx);
}

SweepTarget parse_target(const std::string& text) {
    SweepTarget t;
    if (text.rfind("qudit[", 0) == 0) {
        std::size_t pos = 5;
        t.k = parse_index(text, pos);
        const std::string rest = text.substr(pos);
        if (rest == ".uniform_shift") {
            t.kind = SweepTarget::Kind::QuditShift;
        } else if (rest == ".transmon.EJ") {
            t.kind = SweepTarget::Kind::TransmonEJ;
        } else {
            throw std::invalid_argument("sweep target: unknown qudit field '" + rest + "'");
        }
        return t;
    }
    if (text.rfind("coupling[", 0) == 0) {
        std::size_t pos = 8;
        t.p = parse_index(text, pos);
        t.k = parse_index(text, pos);
        if (text.substr(pos) != ".scale")
            throw std::invalid_argument("sweep target: expected '.scale' in '" + text + "'");
        t.kind = SweepTarget::Kind::CouplingScale;
        return t;
    }
    if (text.rfind("resonator[", 0) == 0) {
        std::size_t pos = 9;
        t.p = parse_index(text, pos);
        if (text.substr(pos) != ".freq")
            throw std::invalid_argument("sweep target: expected '.freq' in '" + text + "'");
        t.kind = SweepTarget::Kind::ResonatorFreq;
        return t;
    }
    throw std::invalid_argument(
        "sweep target '" + text +
        "': expected qudit[k].uniform_shift, qudit[k].transmon.EJ, coupling[p][k].scale or "
        "resonator[p].freq");
}

json apply_target(json device, const SweepTarget& t, double value) {
    switch (t.kind) {
        case SweepTarget::Kind::QuditShift: {
            auto& quds = device.at("qudits");
            if (t.k >= quds.size()) throw std::invalid_argument("sweep target: qudit index out of range");
            auto& q = quds[t.k];
            if (q.contains("qubit")) {
                q["qubit"]["freq"] = q["qubit"]["freq"].get<double>() + value;
            } else {
                std::vector<double> levels;
                if (q.contains("levels")) {
                    levels = q["levels"].get<std::vector<double>>();
                } else if (q.contains("transmon")) {
                    const auto& tr = q["transmon"];
                    levels = make_transmon_qutrit(
                                 TransmonParams{tr.at("EC").get<double>(), tr.at("EJ").get<double>()})
                                 .level_frequencies;
                } else {
                    throw std::invalid_argument("sweep target: malformed qudit entry");
                }
                // Shift every transition by `value`: level m moves by m * value.
                for (std::size_t m = 0; m < levels.size(); ++m) levels[m] += static_cast<double>(m) * value;
                q = json{{"levels", levels}};
            }
            return device;
        }
        case SweepTarget::Kind::TransmonEJ: {
            auto& quds = device.at("qudits");
            if (t.k >= quds.size()) throw std::invalid_argument("sweep target: qudit index out of range");
            auto& q = quds[t.k];
            if (!q.contains("transmon"))
                throw std::invalid_argument("sweep target: qudit " + std::to_string(t.k) +
                                            " is not a transmon");
            q["transmon"]["EJ"] = value;
            return device;
        }
        case SweepTarget::Kind::CouplingScale: {
            auto& rows = device.at("couplings");
            if (t.p >= rows.size()) throw std::invalid_argument("sweep target: resonator index out of range");
            auto& row = rows[t.p];
            if (t.k >= row.size()) throw std::invalid_argument("sweep target: qudit index out of range");
            auto& c = row[t.k];
            if (c.contains("uniform")) {
                c["uniform"] = c["uniform"].get<double>() * value;
            } else if (c.contains("explicit")) {
                auto rungs = c["explicit"].get<std::vector<double>>();
                for (auto& g : rungs) g *= value;
                c["explicit"] = rungs;
            } else {
                throw std::invalid_argument("sweep target: malformed coupling entry");
            }
            return device;
        }
        case SweepTarget::Kind::ResonatorFreq: {
            auto& res = device.at("resonators");
            if (t.p >= res.size()) throw std::invalid_argument("sweep target: resonator index out of range");
            res[t.p]["freq"] = value;
            return device;
        }
    }
    throw std::logic_error("sweep target: unknown kind");
}

Complex parse_amplitude(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("state: empty amplitude");
    std::string s = token;
    if (s.back() != 'i' && s.back() != 'I') return Complex{std::stod(s), 0.0};
    s.pop_back();  // strip the i

    // Find the sign separating real and imaginary parts (not a leading sign,
    // not an exponent sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return std::stod(part);
    };
    if (split == std::string::npos) return Complex{0.0, imag_of(s)};
    return Complex{std::stod(s.substr(0, split)), imag_of(s.substr(split))};
}

std::vector<std::pair<BasisState, Complex>> parse_state(const std::string& text,
                                                        const SystemSpec& spec) {
    std::vector<std::pair<BasisState, Complex>> terms;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        const std::string term =
            text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        const auto at = term.find('@');
        if (at == std::string::npos)
            throw std::invalid_argument("state term '" + term + "': expected 'amplitude @ |n;m>'");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(' ');
            const auto b = s.find_last_not_of(' ');
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string amp = trim(term.substr(0, at));
        const std::string label = trim(term.substr(at + 1));
        terms.emplace_back(parse_basis_state(label, spec), parse_amplitude(amp));
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    if (terms.empty()) throw std::invalid_argument("state: no terms parsed");
    return terms;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
};

void write_header(std::ostream& os, const std::string& command, std::uint64_t config_hash) {
    os << "# jtc " << command << " version=" << kVersion << " config=" << hex16(config_hash) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_spectrum(Context& ctx, const std::string& config_path, const std::string& nmax_text,
                 const std::string& out_path, const std::string& dump_prefix) {
    const std::string config_text = read_file(config_path);
    const SystemSpec spec = system_from_json_text(config_text);
    const ExcitationNumber n_max = parse_excitation(nmax_text);

    const auto spectra = spectrum(spec, n_max);

    if (!dump_prefix.empty()) {
        // Raw sector blocks for debugging, one CSV per sector.
        for (std::size_t si = 0; si < spectra.size(); ++si) {
            const auto block = assemble_sector(spectra[si].sector, spec);
            std::ofstream f(dump_prefix + ".N" + std::to_string(si) + ".csv", std::ios::binary);
            if (!f) throw std::invalid_argument("cannot write block dump '" + dump_prefix + "'");
            f << "# jtc sector-block version=" << kVersion << " N=" << spectra[si].sector.n.str()
              << " dim=" << block.entries.rows() << "\n";
            for (std::size_t i = 0; i < block.entries.rows(); ++i) {
                for (std::size_t j = 0; j < block.entries.cols(); ++j)
                    f << (j ? "," : "") << fmt17(block.entries(i, j));
                f << "\n";
            }
        }
    }

    Sink sink(out_path, ctx.out);
    write_header(sink.os(), "spectrum", fnv1a64(config_text + "|nmax=" + nmax_text));
    sink.os() << "# columns: N,nu,energy,components\n";
    for (const auto& s : spectra) {
        const std::size_t dim = s.sector.dimension();
        for (std::size_t nu = 0; nu < dim; ++nu) {
            sink.os() << s.sector.n.str() << ',' << (nu + 1) << ','
                      << fmt17(s.eigen.eigenvalues[nu]) << ",\"";
            for (std::size_t l = 0; l < dim; ++l) {
                const double c = s.eigen.eigenvectors(l, nu);
                if (l) sink.os() << ';';
                sink.os() << s.sector.states[l].label() << '=' << fmt17(c * c);
            }
            sink.os() << "\"\n";
        }
    }
    return 0;
}

int cmd_sweep(Context& ctx, const std::string& config_path, const std::string& target_text,
              double from, double to, int steps, const std::string& nmax_text,
              const std::string& out_path) {
    const std::string config_text = read_file(config_path);
    const json base = json::parse(config_text);
    const SweepTarget target = parse_target(target_text);
    const ExcitationNumber n_max = parse_excitation(nmax_text);
    const auto values = grid_values(from, to, steps);

    // Sector layout comes from the base device; the swept parameter never
    // changes the basis, only the entries.
    const SystemSpec base_spec = system_from_json(base);
    const auto dims = sector_dimensions(n_max, base_spec);

    std::vector<std::vector<double>> energies(values.size());
    std::vector<double> derived_freq(values.size(), 0.0);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    parallel_for(values.size(), [&](std::size_t i) {
        try {
            const json dev = apply_target(base, target, values[i]);
            if (target.kind == SweepTarget::Kind::TransmonEJ) {
                const auto& tr = dev.at("qudits")[target.k].at("transmon");
                const QuditSpec q = make_transmon_qutrit(
                    TransmonParams{tr.at("EC").get<double>(), tr.at("EJ").get<double>()});
                derived_freq[i] = q.level_frequencies[1] - q.level_frequencies[0];
            }
            const SystemSpec spec = system_from_json(dev);
            std::vector<double> row;
            for (const auto& s : spectrum(spec, n_max))
                row.insert(row.end(), s.eigen.eigenvalues.begin(), s.eigen.eigenvalues.end());
            energies[i] = std::move(row);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    Sink sink(out_path, ctx.out);
    write_header(sink.os(), "sweep",
                 fnv1a64(config_text + "|target=" + target_text + "|from=" + fmt17(from) +
                         "|to=" + fmt17(to) + "|steps=" + std::to_string(steps) +
                         "|nmax=" + nmax_text));
    sink.os() << "# target=" << target_text << " from=" << fmt17(from) << " to=" << fmt17(to)
              << " steps=" << steps << "\n# sectors:";
    for (const auto& [n, dim] : dims) sink.os() << " N=" << n.str() << "(dim " << dim << ")";
    sink.os() << "\n# columns: value";
    if (target.kind == SweepTarget::Kind::TransmonEJ) sink.os() << ",omega01";
    for (const auto& [n, dim] : dims)
        for (std::size_t nu = 1; nu <= dim; ++nu) sink.os() << ",E[N=" << n.str() << "][" << nu << "]";
    sink.os() << "\n";

    for (std::size_t i = 0; i < values.size(); ++i) {
        sink.os() << fmt17(values[i]);
        if (target.kind == SweepTarget::Kind::TransmonEJ) sink.os() << ',' << fmt17(derived_freq[i]);
        for (double e : energies[i]) sink.os() << ',' << fmt17(e);
        sink.os() << "\n";
    }

    // Gap report: smallest adjacent level spacing per sector over the grid.
    double overall_gap = std::numeric_limits<double>::infinity();
    double overall_at = values.front();
    std::string overall_sector = "none";
    std::size_t offset = 0;
    for (const auto& [n, dim] : dims) {
        if (dim >= 2) {
            double best_gap = std::numeric_limits<double>::infinity();
            double best_at = values.front();
            for (std::size_t i = 0; i < values.size(); ++i) {
                for (std::size_t nu = 0; nu + 1 < dim; ++nu) {
                    const double gap =
                        energies[i][offset + nu + 1] - energies[i][offset + nu];
                    if (gap < best_gap) {
                        best_gap = gap;
                        best_at = values[i];
                    }
                }
            }
            sink.os() << "# min_gap N=" << n.str() << " gap=" << fmt17(best_gap)
                      << " at=" << fmt17(best_at) << "\n";
            if (best_gap < overall_gap) {
                overall_gap = best_gap;
                overall_at = best_at;
                overall_sector = n.str();
            }
        }
        offset += dim;
    }
    sink.os() << "# min_gap overall N=" << overall_sector << " gap=" << fmt17(overall_gap)
              << " at=" << fmt17(overall_at) << "\n";
    return 0;
}

int cmd_rwa_check(Context& ctx, const std::string& config_path, double from, double to, int steps,
                  const std::string& out_path) {
    const std::string config_text = read_file(config_path);
    const SystemSpec spec = system_from_json_text(config_text);
    if (spec.qudit_count() != 1 || spec.resonator_count() != 1 || spec.qudits[0].dimension() != 2)
        throw std::invalid_argument(
            "rwa-check: device must be a single qubit coupled to a single resonator");

    const double qubit_freq =
        spec.qudits[0].level_frequencies[1] - spec.qudits[0].level_frequencies[0];
    const double res_freq = spec.resonators[0].frequency;
    const auto values = grid_values(from, to, steps);

    Sink sink(out_path, ctx.out);
    write_header(sink.os(), "rwa-check",
                 fnv1a64(config_text + "|from=" + fmt17(from) + "|to=" + fmt17(to) +
                         "|steps=" + std::to_string(steps)));
    sink.os() << "# qubit=" << fmt17(qubit_freq) << " resonator=" << fmt17(res_freq) << "\n";
    sink.os() << "# columns: g,level,E_rwa,dE2,rel_percent\n";

    bool any_pole = false;
    for (double g : values) {
        const auto table = rwa_second_order(JCParams{qubit_freq, res_freq, g}, 3);
        for (const auto& row : table) {
            std::string level = std::to_string(row.n);
            if (row.branch > 0) level += '+';
            if (row.branch < 0) level += '-';
            sink.os() << fmt17(g) << ',' << level << ',' << fmt17(row.e_rwa) << ','
                      << fmt17(row.delta2) << ','
                      << fmt17(100.0 * std::abs(row.delta2 / row.e_rwa)) << "\n";
            any_pole = any_pole || row.pole;
        }
    }
    if (any_pole) {
        ctx.err << "jtc: rwa-check hit a perturbation-theory pole (degenerate strips); "
                   "affected rows are nan\n";
        return 2;
    }
    return 0;
}

int cmd_tc(Context& ctx, double omega, const std::string& couplings_text,
           const std::string& out_path) {
    std::vector<double> couplings;
    std::size_t pos = 0;
    while (pos <= couplings_text.size()) {
        const auto comma = couplings_text.find(',', pos);
        const std::string tok = couplings_text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) couplings.push_back(std::stod(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (couplings.empty()) throw std::invalid_argument("tc: no couplings given");

    const TCSolution sol = tc_one_excitation(omega, couplings);

    // Numeric cross-check: assemble the one-excitation sector of K resonant
    // qubits and compare.
    SystemSpec spec;
    for (std::size_t k = 0; k < couplings.size(); ++k) spec.qudits.push_back(make_qubit(omega));
    spec.resonators.push_back(ResonatorSpec{omega});
    spec.couplings.push_back({});
    for (double g : couplings) spec.couplings[0].push_back(Coupling::explicit_rungs({g}));
    spec = validate(std::move(spec));

    const Sector sector = enumerate_sector(min_excitation(spec).next(), spec);
    const Matrix h = assemble_sector(sector, spec).entries;
    const auto eig = jacobi_eigh(h);

    auto residual = [&](const std::vector<double>& v, double e) {
        double worst = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            double acc = -e * v[i];
            for (std::size_t j = 0; j < v.size(); ++j) acc += h(i, j) * v[j];
            worst = std::max(worst, std::abs(acc));
        }
        return worst;
    };
    double max_residual = std::max(residual(sol.bright_plus, sol.e_plus),
                                   residual(sol.bright_minus, sol.e_minus));
    for (const auto& d : sol.dark_basis)
        max_residual = std::max(max_residual, residual(d, sol.big_omega));

    Sink sink(out_path, ctx.out);
    write_header(sink.os(), "tc",
                 fnv1a64("omega=" + fmt17(omega) + "|couplings=" + couplings_text));
    sink.os() << "K = " << sol.k << "\n";
    sink.os() << "omega = " << fmt6(omega) << "\n";
    sink.os() << "Omega_K = " << fmt6(sol.big_omega) << "\n";
    sink.os() << "mean coupling = " << fmt6(sol.mean_coupling) << "\n";
    sink.os() << "dark-space dimension = " << sol.dark_basis.size() << "\n";
    sink.os() << "E_dark = " << fmt6(sol.big_omega) << " (multiplicity " << (sol.k - 1) << ")\n";
    sink.os() << "E_plus = " << fmt6(sol.e_plus) << "\n";
    sink.os() << "E_minus = " << fmt6(sol.e_minus) << "\n";
    sink.os() << "numeric eigenvalues =";
    for (double e : eig.eigenvalues) sink.os() << ' ' << fmt6(e);
    sink.os() << "\n";
    sink.os() << "max residual = " << fmt6(max_residual) << "\n";
    return 0;
}

int cmd_evolve(Context& ctx, const std::string& config_path, const std::string& state_text,
               double t0, double t1, double dt, const std::string& nmax_text, bool amplitudes,
               const std::string& out_path) {
    const std::string config_text = read_file(config_path);
    const auto spec = std::make_shared<const SystemSpec>(system_from_json_text(config_text));

    if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
    if (!(t1 > t0)) throw std::invalid_argument("evolve: need t1 > t0");
    const int steps = static_cast<int>(std::llround((t1 - t0) / dt));
    if (steps < 1) throw std::invalid_argument("evolve: grid shorter than one step");

    const StateVector psi0 = StateVector::from_terms(spec, parse_state(state_text, *spec));

    ExcitationNumber n_max = psi0.blocks.back().sector.n;
    if (!nmax_text.empty()) {
        const ExcitationNumber requested = parse_excitation(nmax_text);
        if (requested < n_max)
            throw std::invalid_argument("evolve: --nmax below the state's support N=" + n_max.str());
        n_max = requested;
    }

    const Propagator prop = build_propagator(*spec, n_max, dt);
    const auto trajectory = evolve(psi0, prop, steps);

    Sink sink(out_path, ctx.out);
    write_header(sink.os(), "evolve",
                 fnv1a64(config_text + "|state=" + state_text + "|t0=" + fmt17(t0) +
                         "|t1=" + fmt17(t1) + "|dt=" + fmt17(dt)));
    sink.os() << "# state: " << state_text << " (normalized)\n";
    sink.os() << "# columns: t,norm,energy,excitation";
    for (std::size_t p = 0; p < spec->resonator_count(); ++p) sink.os() << ",photon" << p;
    for (std::size_t k = 0; k < spec->qudit_count(); ++k)
        for (int m = 0; m < spec->qudits[k].dimension(); ++m)
            sink.os() << ",pop" << k << '_' << m;
    if (amplitudes)
        for (const auto& b : psi0.blocks)
            for (const auto& s : b.sector.states)
                sink.os() << ",re_" << s.label() << ",im_" << s.label();
    sink.os() << "\n";

    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        const StateVector& psi = trajectory[i];
        sink.os() << fmt17(t0 + static_cast<double>(i) * dt);
        sink.os() << ',' << fmt17(psi.norm());
        sink.os() << ',' << fmt17(expectation(psi, Observable::energy()));
        sink.os() << ',' << fmt17(expectation(psi, Observable::excitation()));
        for (std::size_t p = 0; p < spec->resonator_count(); ++p)
            sink.os() << ',' << fmt17(expectation(psi, Observable::photon_number(p)));
        for (std::size_t k = 0; k < spec->qudit_count(); ++k)
            for (int m = 0; m < spec->qudits[k].dimension(); ++m)
                sink.os() << ',' << fmt17(expectation(psi, Observable::level_population(k, m)));
        if (amplitudes)
            for (const auto& b : psi.blocks)
                for (const auto& a : b.amplitudes)
                    sink.os() << ',' << fmt17(a.real()) << ',' << fmt17(a.imag());
        sink.os() << "\n";
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};

    CLI::App app{"jtc: excitation-sector solver for coupled qudit/resonator systems"};
    app.require_subcommand(1);

    std::string config_path, out_path, nmax_text, target_text, state_text, couplings_text;
    std::string dump_prefix;
    double from = 0.0, to = 0.0, t0 = 0.0, t1 = 0.0, dt = 0.0, omega = 0.0;
    int steps = 0;
    bool amplitudes = false;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues and weights per sector");
    spectrum_cmd->add_option("--config", config_path, "device JSON")->required();
    spectrum_cmd->add_option("--nmax", nmax_text, "largest excitation number")->required();
    spectrum_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
    spectrum_cmd->add_option("--dump-blocks", dump_prefix,
                             "also write raw sector matrices to <prefix>.N<i>.csv");

    auto* sweep_cmd = app.add_subcommand("sweep", "Spectra along a parameter grid");
    sweep_cmd->add_option("--config", config_path, "device JSON")->required();
    sweep_cmd->add_option("--target", target_text, "swept parameter")->required();
    sweep_cmd->add_option("--from", from, "grid start")->required();
    sweep_cmd->add_option("--to", to, "grid end")->required();
    sweep_cmd->add_option("--steps", steps, "grid points (>= 2)")->required();
    sweep_cmd->add_option("--nmax", nmax_text, "largest excitation number")->required();
    sweep_cmd->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* rwa_cmd = app.add_subcommand("rwa-check", "Second-order corrections over a coupling grid");
    rwa_cmd->add_option("--config", config_path, "device JSON (single qubit, single resonator)")
        ->required();
    rwa_cmd->add_option("--from", from, "coupling grid start")->required();
    rwa_cmd->add_option("--to", to, "coupling grid end")->required();
    rwa_cmd->add_option("--steps", steps, "grid points (>= 2)")->required();
    rwa_cmd->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* tc_cmd = app.add_subcommand("tc", "Resonant collective coupling report");
    tc_cmd->add_option("--omega", omega, "shared qubit/resonator frequency")->required();
    tc_cmd->add_option("--couplings", couplings_text, "comma-separated couplings g1,..,gK")
        ->required();
    tc_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* evolve_cmd = app.add_subcommand("evolve", "Time evolution of a superposition state");
    evolve_cmd->add_option("--config", config_path, "device JSON")->required();
    evolve_cmd->add_option("--state", state_text, "initial state, e.g. \"1.0 @ |0;1,0>\"")
        ->required();
    evolve_cmd->add_option("--t0", t0, "start time")->required();
    evolve_cmd->add_option("--t1", t1, "end time")->required();
    evolve_cmd->add_option("--dt", dt, "time step")->required();
    evolve_cmd->add_option("--nmax", nmax_text, "truncation override (>= state support)");
    evolve_cmd->add_flag("--amplitudes", amplitudes, "include re/im amplitude columns");
    evolve_cmd->add_option("--out", out_path, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "jtc: " << e.what() << "\n";
        return 1;
    }

    try {
        if (spectrum_cmd->parsed())
            return cmd_spectrum(ctx, config_path, nmax_text, out_path, dump_prefix);
        if (sweep_cmd->parsed())
            return cmd_sweep(ctx, config_path, target_text, from, to, steps, nmax_text, out_path);
        if (rwa_cmd->parsed()) return cmd_rwa_check(ctx, config_path, from, to, steps, out_path);
        if (tc_cmd->parsed()) return cmd_tc(ctx, omega, couplings_text, out_path);
        if (evolve_cmd->parsed())
            return cmd_evolve(ctx, config_path, state_text, t0, t1, dt, nmax_text, amplitudes,
                              out_path);
    } catch (const NonConvergenceError& e) {
        err << "jtc: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "jtc: config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "jtc: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        err << "jtc: " << e.what() << "\n";
        return 1;
    }
    err << "jtc: no command\n";
    return 1;
}

}  // namespace jtc::cli
