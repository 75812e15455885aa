#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <pybind11/numpy.h>

#include <cmath>
#include <memory>
#include <stdexcept>

#include "jtc/analytic.hpp"
#include "jtc/assembly.hpp"
#include "jtc/device_json.hpp"
#include "jtc/eigen.hpp"
#include "jtc/evolution.hpp"
#include "jtc/model.hpp"
#include "jtc/sectors.hpp"
#include "jtc/version.hpp"

namespace py = pybind11;
using namespace jtc;

namespace {

ExcitationNumber to_excitation(double n) {
    const double t = 2.0 * n;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-9)
        throw std::invalid_argument("excitation number must be an integer or half-integer");
    return ExcitationNumber::from_twice(static_cast<int>(r));
}

py::array_t<double> matrix_to_array(const Matrix& m) {
    py::array_t<double> out({m.rows(), m.cols()});
    auto buf = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) buf(i, j) = m(i, j);
    return out;
}

Matrix array_to_matrix(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
    Matrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    auto buf = a.unchecked<2>();
    for (py::ssize_t i = 0; i < a.shape(0); ++i)
        for (py::ssize_t j = 0; j < a.shape(1); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = buf(i, j);
    return m;
}

// Accepts either a number (uniform coupling) or a list of rungs.
Coupling coupling_from_object(const py::object& obj) {
    if (py::isinstance<py::float_>(obj) || py::isinstance<py::int_>(obj))
        return Coupling::uniform(obj.cast<double>());
    return Coupling::explicit_rungs(obj.cast<std::vector<double>>());
}

std::shared_ptr<const SystemSpec> make_system(const std::vector<std::vector<double>>& qudit_levels,
                                              const std::vector<double>& resonator_freqs,
                                              const py::list& couplings) {
    SystemSpec spec;
    for (const auto& levels : qudit_levels) spec.qudits.push_back(QuditSpec{levels});
    for (double f : resonator_freqs) spec.resonators.push_back(ResonatorSpec{f});
    for (const auto& row : couplings) {
        std::vector<Coupling> out_row;
        for (const auto& entry : row.cast<py::list>())
            out_row.push_back(coupling_from_object(py::reinterpret_borrow<py::object>(entry)));
        spec.couplings.push_back(std::move(out_row));
    }
    return std::make_shared<const SystemSpec>(validate(std::move(spec)));
}

py::tuple state_to_tuple(const BasisState& s) {
    return py::make_tuple(py::tuple(py::cast(s.photons)), py::tuple(py::cast(s.levels)));
}

BasisState state_from_pair(const py::object& obj) {
    auto pair = obj.cast<std::pair<std::vector<int>, std::vector<int>>>();
    return BasisState{std::move(pair.first), std::move(pair.second)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Excitation-sector solver for coupled qudit/resonator systems";
    m.attr("__version__") = kVersion;

    py::class_<SystemSpec, std::shared_ptr<SystemSpec>>(m, "System")
        .def(py::init([](const std::vector<std::vector<double>>& qudits,
                         const std::vector<double>& resonators, const py::list& couplings) {
                 return std::const_pointer_cast<SystemSpec>(
                     make_system(qudits, resonators, couplings));
             }),
             py::arg("qudits"), py::arg("resonators"), py::arg("couplings"),
             "qudits: level lists; couplings[p][k]: uniform g or explicit rung list")
        .def_static("from_json",
                    [](const std::string& text) {
                        return std::make_shared<SystemSpec>(system_from_json_text(text));
                    })
        .def_property_readonly("num_qudits", &SystemSpec::qudit_count)
        .def_property_readonly("num_resonators", &SystemSpec::resonator_count)
        .def("qudit_levels",
             [](const SystemSpec& s, std::size_t k) { return s.qudits.at(k).level_frequencies; })
        .def("resonator_freq",
             [](const SystemSpec& s, std::size_t p) { return s.resonators.at(p).frequency; })
        .def("rungs",
             [](const SystemSpec& s, std::size_t p, std::size_t k) {
                 return s.couplings.at(p).at(k).rungs;
             })
        .def_property_readonly("min_excitation",
                               [](const SystemSpec& s) { return min_excitation(s).value(); });

    m.def("make_qubit", [](double f) { return make_qubit(f).level_frequencies; }, py::arg("freq"));
    m.def(
        "make_transmon_qutrit",
        [](double ec, double ej) {
            return make_transmon_qutrit(TransmonParams{ec, ej}).level_frequencies;
        },
        py::arg("EC"), py::arg("EJ"));

    m.def(
        "excitation_number",
        [](const SystemSpec& s, const std::vector<int>& photons, const std::vector<int>& levels) {
            return excitation_number(BasisState{photons, levels}, s).value();
        },
        py::arg("system"), py::arg("photons"), py::arg("levels"));

    m.def(
        "enumerate_sector",
        [](const SystemSpec& s, double n) {
            const Sector sector = enumerate_sector(to_excitation(n), s);
            py::list out;
            for (const auto& st : sector.states) out.append(state_to_tuple(st));
            return out;
        },
        py::arg("system"), py::arg("n"));

    m.def(
        "sector_dimensions",
        [](const SystemSpec& s, double n_max) {
            py::list out;
            for (const auto& [n, dim] : sector_dimensions(to_excitation(n_max), s))
                out.append(py::make_tuple(n.value(), dim));
            return out;
        },
        py::arg("system"), py::arg("n_max"));

    m.def(
        "assemble_sector",
        [](const SystemSpec& s, double n) {
            return matrix_to_array(
                assemble_sector(enumerate_sector(to_excitation(n), s), s).entries);
        },
        py::arg("system"), py::arg("n"));

    m.def(
        "assemble_truncated_full",
        [](const SystemSpec& s, int cutoff, bool rwa, std::size_t max_dimension) {
            const auto full = assemble_truncated_full(s, cutoff, rwa, max_dimension);
            py::list basis;
            py::list ns;
            for (std::size_t i = 0; i < full.basis.size(); ++i) {
                basis.append(state_to_tuple(full.basis[i]));
                ns.append(full.excitation[i].value());
            }
            return py::make_tuple(matrix_to_array(full.entries), ns, basis);
        },
        py::arg("system"), py::arg("photon_cutoff"), py::arg("rwa") = true,
        py::arg("max_dimension") = 4096,
        "Returns (matrix, excitation numbers, basis states)");

    m.def(
        "block_diagonality_check",
        [](const SystemSpec& s, int cutoff, bool rwa) {
            return block_diagonality_check(assemble_truncated_full(s, cutoff, rwa));
        },
        py::arg("system"), py::arg("photon_cutoff"), py::arg("rwa") = true);

    m.def(
        "jacobi_eigh",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, double tol,
           int max_sweeps) {
            const auto eig = jacobi_eigh(array_to_matrix(a), tol, max_sweeps);
            return py::make_tuple(py::cast(eig.eigenvalues), matrix_to_array(eig.eigenvectors));
        },
        py::arg("matrix"), py::arg("tol") = 1e-12, py::arg("max_sweeps") = 50,
        "Returns (eigenvalues ascending, eigenvector columns)");

    m.def(
        "spectrum",
        [](const SystemSpec& s, double n_max) {
            py::list out;
            for (const auto& sec : spectrum(s, to_excitation(n_max))) {
                py::dict d;
                d["N"] = sec.sector.n.value();
                py::list states;
                for (const auto& st : sec.sector.states) states.append(state_to_tuple(st));
                d["states"] = states;
                d["energies"] = py::cast(sec.eigen.eigenvalues);
                d["vectors"] = matrix_to_array(sec.eigen.eigenvectors);
                out.append(d);
            }
            return out;
        },
        py::arg("system"), py::arg("n_max"));

    m.def(
        "jc_ground",
        [](double wq, double wr, double g) { return jc_ground(JCParams{wq, wr, g}); },
        py::arg("qubit_freq"), py::arg("resonator_freq"), py::arg("coupling"));

    m.def(
        "jc_strip",
        [](double wq, double wr, double g, int n) {
            const auto d = jc_strip(JCParams{wq, wr, g}, n);
            py::dict out;
            out["n"] = d.n;
            out["e_plus"] = d.e_plus;
            out["e_minus"] = d.e_minus;
            out["alpha_plus"] = d.alpha_plus;
            out["beta_plus"] = d.beta_plus;
            out["alpha_minus"] = d.alpha_minus;
            out["beta_minus"] = d.beta_minus;
            out["theta"] = d.theta;
            return out;
        },
        py::arg("qubit_freq"), py::arg("resonator_freq"), py::arg("coupling"), py::arg("n"));

    m.def(
        "rwa_second_order",
        [](double wq, double wr, double g, int n_max) {
            py::list out;
            for (const auto& c : rwa_second_order(JCParams{wq, wr, g}, n_max)) {
                py::dict d;
                d["n"] = c.n;
                d["branch"] = c.branch;
                d["e_rwa"] = c.e_rwa;
                d["delta2"] = c.delta2;
                d["e_corrected"] = c.e_corrected;
                d["pole"] = c.pole;
                out.append(d);
            }
            return out;
        },
        py::arg("qubit_freq"), py::arg("resonator_freq"), py::arg("coupling"), py::arg("n_max") = 3);

    m.def(
        "tc_one_excitation",
        [](double omega, const std::vector<double>& couplings) {
            const auto sol = tc_one_excitation(omega, couplings);
            py::dict d;
            d["K"] = sol.k;
            d["big_omega"] = sol.big_omega;
            d["mean_coupling"] = sol.mean_coupling;
            d["e_plus"] = sol.e_plus;
            d["e_minus"] = sol.e_minus;
            d["degenerate"] = sol.degenerate;
            d["bright_plus"] = py::cast(sol.bright_plus);
            d["bright_minus"] = py::cast(sol.bright_minus);
            d["dark_basis"] = py::cast(sol.dark_basis);
            return d;
        },
        py::arg("omega"), py::arg("couplings"));

    m.def(
        "evolve",
        [](const std::shared_ptr<const SystemSpec>& system, const py::list& terms, double dt,
           int steps) {
            std::vector<std::pair<BasisState, Complex>> parsed;
            for (const auto& t : terms) {
                auto pair = t.cast<py::tuple>();
                parsed.emplace_back(state_from_pair(pair[0]), pair[1].cast<Complex>());
            }
            const StateVector psi0 = StateVector::from_terms(system, parsed);
            const ExcitationNumber n_max = psi0.blocks.back().sector.n;
            const Propagator prop = build_propagator(*system, n_max, dt);
            const auto trajectory = evolve(psi0, prop, steps);

            const std::size_t rows = trajectory.size();
            const std::size_t n_res = system->resonator_count();
            std::vector<double> t(rows), norm(rows), energy(rows), excitation(rows);
            std::vector<std::vector<double>> photon(n_res, std::vector<double>(rows));
            for (std::size_t i = 0; i < rows; ++i) {
                const auto& psi = trajectory[i];
                t[i] = static_cast<double>(i) * dt;
                norm[i] = psi.norm();
                energy[i] = expectation(psi, Observable::energy());
                excitation[i] = expectation(psi, Observable::excitation());
                for (std::size_t p = 0; p < n_res; ++p)
                    photon[p][i] = expectation(psi, Observable::photon_number(p));
            }
            py::dict out;
            out["t"] = py::cast(t);
            out["norm"] = py::cast(norm);
            out["energy"] = py::cast(energy);
            out["excitation"] = py::cast(excitation);
            out["photon"] = py::cast(photon);
            return out;
        },
        py::arg("system"), py::arg("terms"), py::arg("dt"), py::arg("steps"),
        "terms: [((photons, levels), amplitude), ...]; returns observable time series");
}
