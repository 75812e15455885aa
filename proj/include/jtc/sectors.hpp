#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jtc/model.hpp"

namespace jtc {

/// Exact eigenvalue of the excitation-number operator. Sector membership must
/// be exact, so the value is stored as 2N (an integer; N itself may be a
/// half-integer when the summed qudit spins are half-integral).
struct ExcitationNumber {
    int twice = 0;

    static ExcitationNumber from_twice(int t) { return {t}; }
    static ExcitationNumber from_int(int n) { return {2 * n}; }

    double value() const { return 0.5 * twice; }
    bool integral() const { return twice % 2 == 0; }
    ExcitationNumber next() const { return {twice + 2}; }  // N + 1

    /// "2", "-1/2", ...
    std::string str() const;

    friend auto operator<=>(const ExcitationNumber&, const ExcitationNumber&) = default;
};

/// Parses "2", "-3", "1/2", "-1/2", "2.5", "-0.5".
ExcitationNumber parse_excitation(const std::string& text);

/// Product state |n_1,...,n_P ; m_1,...,m_K>: photon occupations followed by
/// qudit levels.
struct BasisState {
    std::vector<int> photons;
    std::vector<int> levels;

    int total_photons() const;
    std::string label() const;  // "|n1,..,nP;m1,..,mK>"

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// Parses a label of the form "|0;1,0>" against the spec's shape.
BasisState parse_basis_state(const std::string& text, const SystemSpec& spec);

/// Canonical basis order: descending total photon number, then descending
/// lexicographic photon tuple, then descending lexicographic level tuple.
/// This reproduces the layout |n+1,00>, |n,10>, |n,01>, |n-1,11> used for the
/// printed strip matrices.
bool canonical_less(const BasisState& a, const BasisState& b);

/// All product states sharing one excitation number, canonically ordered.
struct Sector {
    ExcitationNumber n;
    std::vector<BasisState> states;

    std::size_t dimension() const { return states.size(); }
    /// Index of `state` in canonical order, or -1 when absent.
    std::ptrdiff_t index_of(const BasisState& state) const;
};

/// Smallest excitation number of the spec: all photons and levels at zero,
/// N_min = -sum_k M_k.
ExcitationNumber min_excitation(const SystemSpec& spec);

/// N = sum_p n_p + sum_k m_k - sum_k M_k, exact.
ExcitationNumber excitation_number(const BasisState& s, const SystemSpec& spec);

/// Enumerates the sector of excitation number `n`. The photon part is built
/// by composition of the remaining budget over P resonators and the qudit
/// part by bounded digit enumeration; nothing is generated and filtered.
Sector enumerate_sector(ExcitationNumber n, const SystemSpec& spec);

/// Dimensions L(N) for N = N_min, N_min+1, ..., N_max.
std::vector<std::pair<ExcitationNumber, std::size_t>> sector_dimensions(
    ExcitationNumber n_max, const SystemSpec& spec);

}  // namespace jtc
