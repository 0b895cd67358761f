#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "otto/linalg.hpp"

// Three trapped ions (1 and 2 form the working substance, 3 is the ancilla)
// sharing one vibrational mode truncated to {|0>, |1>}. Units: hbar = k_B = 1.
//
// Product basis index: 8*b1 + 4*b2 + 2*b3 + j, with b_l = 0 for |+> and 1 for
// |->, and j the phonon number. sigma_z|+> = +|+>.
namespace otto::model {

enum class Measure { E1, E3 };

std::string_view to_string(Measure m);
Measure parse_measure(std::string_view s);  // "e1" / "e3", case-insensitive

struct ModelParams {
    double b_high = 10.0;  // field during heating
    double b_low = 6.0;    // field during the measurement stroke
    double j1 = 10.0;      // ion1-ion2 flip-flop coupling
    double j2 = 10.0;      // ion2-ion3 flip-flop coupling
    double k = 0.1;        // spin-phonon coupling, same for all three ions
    double omega = 1.0;    // phonon frequency
    double t_hot = 3.5;    // k_B T_H
    Measure measure = Measure::E1;

    // Throws InvalidParams. b_low > b_high is allowed (see fields_inverted()).
    void validate() const;
    bool fields_inverted() const noexcept { return b_low > b_high; }
};

inline constexpr std::size_t kFullDim = 16;
inline constexpr std::size_t kSystemDim = 4;
// Factor dimensions of the full space: ion1, ion2, ion3, phonon.
inline constexpr std::array<std::size_t, 4> kFullFactors{2, 2, 2, 2};
// Factor dimensions of the two-ion system: ion1, ion2.
inline constexpr std::array<std::size_t, 2> kSystemFactors{2, 2};

constexpr std::size_t basis_index(int b1, int b2, int b3, int j) {
    return static_cast<std::size_t>(8 * b1 + 4 * b2 + 2 * b3 + j);
}

// Single-site operators in the {|+>, |->} / {|0>, |1>} ordering.
namespace ops {
linalg::Matrix sigma_z();
linalg::Matrix sigma_x();
linalg::Matrix sigma_plus();   // |+><-|
linalg::Matrix sigma_minus();  // |-><+|
linalg::Matrix phonon_a();     // |0><1|
linalg::Matrix phonon_adag();  // |1><0|
linalg::Matrix id2();
}  // namespace ops

// Full 16x16 Hamiltonian with the common field b on all three ions. Throws
// InvalidParams when p is invalid; p.b_high / p.b_low are not read.
linalg::SymMatrix build_full_hamiltonian(double b, const ModelParams& p);

// Two-ion Hamiltonian b(sz x 1 + 1 x sz) + j1(s+ x s- + s- x s+), basis (b1, b2).
linalg::SymMatrix build_system_hamiltonian(double b, double j1);

struct SystemEigensystem {
    std::array<double, 4> energies;                // E1..E4
    std::array<std::array<double, 4>, 4> states;   // states[i] is |E_{i+1}> in (b1, b2) order
};

// Fixed labelled eigenbasis, never re-sorted:
//   E1 = -2b  |-->
//   E2 = +2b  |++>
//   E3 = -j1  (|-+> - |+->)/sqrt2
//   E4 = +j1  (|-+> + |+->)/sqrt2
SystemEigensystem system_eigensystem(double b, double j1);

// Field at which E1 and E3 cross.
constexpr double critical_field(double j1) { return j1 / 2.0; }

}  // namespace otto::model
